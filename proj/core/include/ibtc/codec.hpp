#pragma once

// Block and image encode/decode for BTC, AMBTC and the four ladder levels.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ibtc/bitplane.hpp"
#include "ibtc/block_math.hpp"
#include "ibtc/raster.hpp"

namespace ibtc {

enum class Mode : std::uint8_t {
    Btc = 0,
    Ambtc = 1,
    L1 = 2,
    L2 = 3,
    L3 = 4,
    L4 = 5,
};

inline constexpr std::array<Mode, 6> kAllModes{Mode::Btc, Mode::Ambtc, Mode::L1,
                                               Mode::L2,  Mode::L3,    Mode::L4};

/// Layout of one block payload for a mode.
struct ModeLayout {
    int moment_bits;  // per stored moment
    int code_bits;    // per retained code
    int code_count;   // retained codes per block

    constexpr int payload_bits() const { return 2 * moment_bits + code_bits * code_count; }
};

constexpr ModeLayout layout(Mode mode) {
    switch (mode) {
        case Mode::Btc:
        case Mode::Ambtc: return {8, 1, 16};
        case Mode::L1: return {8, 2, 16};
        case Mode::L2: return {8, 2, 12};
        case Mode::L3: return {8, 2, 8};
        case Mode::L4: return {6, 2, 8};
    }
    return {0, 0, 0};
}

/// Payload bits per 4x4 block: 32, 32, 48, 40, 32, 28.
constexpr int payload_bits(Mode mode) { return layout(mode).payload_bits(); }

constexpr bool is_ladder_mode(Mode mode) { return mode >= Mode::L1; }

/// Lowercase CLI name ("btc", "ambtc", "l1" .. "l4").
std::string_view mode_name(Mode mode);
std::optional<Mode> parse_mode(std::string_view name);

/// Mask whose retained positions are stored for a ladder mode.
DropMask mode_mask(Mode mode);

/// One coded block. Moment order is (q1, q2) for BTC, (hMean, lMean) for
/// AMBTC and (Q1, Q4) for the ladder modes; L4 moments are 6-bit.
struct EncodedBlock {
    Mode mode = Mode::L1;
    std::array<std::uint8_t, 2> moments{};
    std::array<std::uint8_t, kBlockPixels> codes{};
    std::uint8_t code_count = 0;

    std::span<const std::uint8_t> retained_codes() const { return {codes.data(), code_count}; }

    friend bool operator==(const EncodedBlock& a, const EncodedBlock& b) {
        return a.mode == b.mode && a.moments == b.moments && a.code_count == b.code_count &&
               std::equal(a.codes.begin(), a.codes.begin() + a.code_count, b.codes.begin());
    }
};

/// Coded image. width/height are the original, unpadded dimensions.
struct CompressedImage {
    Mode mode = Mode::L1;
    std::size_t width = 0;
    std::size_t height = 0;
    std::vector<EncodedBlock> blocks;

    std::size_t blocks_x() const { return (width + 3) / 4; }
    std::size_t blocks_y() const { return (height + 3) / 4; }
    std::size_t expected_blocks() const { return blocks_x() * blocks_y(); }
    std::size_t payload_bits() const {
        return blocks.size() * static_cast<std::size_t>(ibtc::payload_bits(mode));
    }

    friend bool operator==(const CompressedImage&, const CompressedImage&) = default;
};

/// Half-up rounding to [0,255]. Reconstructed values are multiples of 1/6,
/// the 1e-9 slack only absorbs representation error of those values.
std::uint8_t round_intensity(double value);

/// floor(value / 4), 0..63.
constexpr std::uint8_t quantize_moment(std::uint8_t value) { return value >> 2; }

/// value * 4, 0..252.
constexpr std::uint8_t dequantize_moment(std::uint8_t value) {
    return static_cast<std::uint8_t>(value << 2);
}

EncodedBlock encode_block(const Block& block, Mode mode);

/// Throws DecodeError (tagged with block_index) on a malformed payload.
Block decode_block(const EncodedBlock& enc, std::size_t block_index = 0);

/// Real-valued reconstruction before final rounding.
Field reconstruct_field(const EncodedBlock& enc, std::size_t block_index = 0);

/// Block at block coordinates (bx, by) of an image padded by edge replication.
Block extract_block(const Raster& image, std::size_t bx, std::size_t by);

/// Pads to a multiple of 4 by edge replication and encodes every block in
/// row-major block order. Throws InvalidArgument on an empty image.
CompressedImage encode_image(const Raster& image, Mode mode);

/// Throws StructureError when the block list does not match the dimensions.
Raster decode_image(const CompressedImage& ci);

}  // namespace ibtc
