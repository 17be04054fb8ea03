#pragma once

// IBTC v1 container.
//
//   offset 0  "IBTC"
//   offset 4  version (high nibble, 1) | mode (low nibble):
//             btc=0 ambtc=1 l1=2 l2=3 l3=4 l4=5
//   offset 5  width,  u16 big-endian, unpadded
//   offset 7  height, u16 big-endian, unpadded
//   offset 9  block payloads, row-major block order, one continuous
//             MSB-first bitstream: two moments, then the retained codes in
//             ascending position order. Last byte zero padded.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ibtc/codec.hpp"

namespace ibtc {

inline constexpr std::array<std::uint8_t, 4> kMagic{'I', 'B', 'T', 'C'};
inline constexpr std::uint8_t kFormatVersion = 1;
inline constexpr std::size_t kHeaderBytes = 9;
inline constexpr std::size_t kMaxDimension = 0xFFFF;

struct ContainerHeader {
    Mode mode = Mode::L1;
    std::uint16_t width = 0;
    std::uint16_t height = 0;
};

struct DeserializeDiagnostics {
    bool nonzero_padding = false;
};

/// Exact file size for a mode and unpadded dimensions.
std::size_t container_size(Mode mode, std::size_t width, std::size_t height);

/// Throws InvalidArgument when dimensions do not fit the u16 header fields.
std::vector<std::uint8_t> serialize(const CompressedImage& ci);

ContainerHeader parse_header(std::span<const std::uint8_t> bytes);

/// Throws FormatError for a bad header and LengthError when the payload is
/// not exactly the expected length. Nonzero padding bits are accepted and
/// reported through `diag`.
CompressedImage deserialize(std::span<const std::uint8_t> bytes,
                            DeserializeDiagnostics* diag = nullptr);

}  // namespace ibtc
