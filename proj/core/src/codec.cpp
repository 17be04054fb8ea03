#include "ibtc/codec.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ibtc/errors.hpp"

namespace ibtc {

namespace {

constexpr double kRoundingSlack = 1e-9;

QuantizerLadder ladder_from_stored(Mode mode, std::array<std::uint8_t, 2> moments) {
    std::uint8_t low = moments[0];
    std::uint8_t high = moments[1];
    if (mode == Mode::L4) {
        low = dequantize_moment(low);
        high = dequantize_moment(high);
    }
    return quantizer_ladder(low, high);
}

void validate(const EncodedBlock& enc, std::size_t block_index) {
    const ModeLayout lay = layout(enc.mode);
    if (enc.code_count != lay.code_count) {
        throw DecodeError("block " + std::to_string(block_index) + ": mode " +
                              std::string(mode_name(enc.mode)) + " expects " +
                              std::to_string(lay.code_count) + " codes, got " +
                              std::to_string(enc.code_count),
                          block_index);
    }
    const int code_limit = 1 << lay.code_bits;
    for (auto c : enc.retained_codes()) {
        if (c >= code_limit) {
            throw DecodeError("block " + std::to_string(block_index) + ": code " +
                                  std::to_string(c) + " out of range",
                              block_index);
        }
    }
    const int moment_limit = 1 << lay.moment_bits;
    for (auto m : enc.moments) {
        if (m >= moment_limit) {
            throw DecodeError("block " + std::to_string(block_index) + ": moment " +
                                  std::to_string(m) + " exceeds " +
                                  std::to_string(lay.moment_bits) + " bits",
                              block_index);
        }
    }
    if (is_ladder_mode(enc.mode) && enc.moments[0] > enc.moments[1]) {
        throw DecodeError("block " + std::to_string(block_index) + ": Q1 above Q4", block_index);
    }
}

}  // namespace

std::string_view mode_name(Mode mode) {
    switch (mode) {
        case Mode::Btc: return "btc";
        case Mode::Ambtc: return "ambtc";
        case Mode::L1: return "l1";
        case Mode::L2: return "l2";
        case Mode::L3: return "l3";
        case Mode::L4: return "l4";
    }
    return "?";
}

std::optional<Mode> parse_mode(std::string_view name) {
    for (Mode m : kAllModes) {
        if (mode_name(m) == name) return m;
    }
    return std::nullopt;
}

DropMask mode_mask(Mode mode) {
    switch (mode) {
        case Mode::L2: return level2_mask();
        case Mode::L3:
        case Mode::L4: return level3_mask();
        default: return full_mask();
    }
}

std::uint8_t round_intensity(double value) {
    const double r = std::floor(value + 0.5 + kRoundingSlack);
    return static_cast<std::uint8_t>(std::clamp(r, 0.0, 255.0));
}

EncodedBlock encode_block(const Block& block, Mode mode) {
    EncodedBlock enc;
    enc.mode = mode;

    switch (mode) {
        case Mode::Btc: {
            const BtcQuantizers q = btc_quantizers(block);
            enc.moments = {round_intensity(q.high), round_intensity(q.low)};
            enc.codes = binary_bitplane(block, block_mean(block));
            enc.code_count = kBlockPixels;
            return enc;
        }
        case Mode::Ambtc: {
            const AmbtcMoments m = ambtc_moments(block);
            enc.moments = {round_intensity(m.high_mean), round_intensity(m.low_mean)};
            enc.codes = binary_bitplane(block, block_mean(block));
            enc.code_count = kBlockPixels;
            return enc;
        }
        default: break;
    }

    const AmbtcMoments m = ambtc_moments(block);
    enc.moments = {round_intensity(m.low_mean), round_intensity(m.high_mean)};
    if (mode == Mode::L4) {
        enc.moments = {quantize_moment(enc.moments[0]), quantize_moment(enc.moments[1])};
    }
    // Codes are assigned against the ladder the decoder will rebuild.
    const QuantizerLadder ladder = ladder_from_stored(mode, enc.moments);
    const CodePlane plane = encode_codeplane(block, ladder);
    enc.code_count = static_cast<std::uint8_t>(drop(plane, mode_mask(mode), enc.codes));
    return enc;
}

Field reconstruct_field(const EncodedBlock& enc, std::size_t block_index) {
    validate(enc, block_index);

    Field out{};
    if (!is_ladder_mode(enc.mode)) {
        for (std::size_t i = 0; i < out.size(); ++i) {
            out[i] = enc.codes[i] ? enc.moments[0] : enc.moments[1];
        }
        return out;
    }

    const QuantizerLadder ladder = ladder_from_stored(enc.mode, enc.moments);
    const DropMask mask = mode_mask(enc.mode);
    PartialField partial{};
    for (std::size_t k = 0; k < mask.retained.size(); ++k) {
        partial[slot(mask.retained[k])] = ladder[enc.codes[k]];
    }
    switch (enc.mode) {
        case Mode::L2: return interpolate_level2(partial);
        case Mode::L3:
        case Mode::L4: return interpolate_level3(partial);
        default: break;
    }
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = *partial[i];
    return out;
}

Block decode_block(const EncodedBlock& enc, std::size_t block_index) {
    const Field field = reconstruct_field(enc, block_index);
    Block block;
    for (std::size_t i = 0; i < field.size(); ++i) block.pixels[i] = round_intensity(field[i]);
    return block;
}

Block extract_block(const Raster& image, std::size_t bx, std::size_t by) {
    Block block;
    for (int r = 0; r < kBlockSide; ++r) {
        const std::size_t y = std::min(by * kBlockSide + r, image.height - 1);
        for (int c = 0; c < kBlockSide; ++c) {
            const std::size_t x = std::min(bx * kBlockSide + c, image.width - 1);
            block.pixels[static_cast<std::size_t>(r * kBlockSide + c)] = image.at(x, y);
        }
    }
    return block;
}

CompressedImage encode_image(const Raster& image, Mode mode) {
    if (image.empty()) throw InvalidArgument("encode_image: empty image");
    if (image.pixels.size() != image.width * image.height) {
        throw InvalidArgument("encode_image: pixel buffer does not match dimensions");
    }

    CompressedImage ci;
    ci.mode = mode;
    ci.width = image.width;
    ci.height = image.height;
    ci.blocks.reserve(ci.expected_blocks());
    for (std::size_t by = 0; by < ci.blocks_y(); ++by) {
        for (std::size_t bx = 0; bx < ci.blocks_x(); ++bx) {
            ci.blocks.push_back(encode_block(extract_block(image, bx, by), mode));
        }
    }
    return ci;
}

Raster decode_image(const CompressedImage& ci) {
    if (ci.width == 0 || ci.height == 0) throw StructureError("decode_image: empty dimensions");
    if (ci.blocks.size() != ci.expected_blocks()) {
        throw StructureError("decode_image: " + std::to_string(ci.width) + "x" +
                             std::to_string(ci.height) + " needs " +
                             std::to_string(ci.expected_blocks()) + " blocks, got " +
                             std::to_string(ci.blocks.size()));
    }

    Raster out(ci.width, ci.height);
    const std::size_t bw = ci.blocks_x();
    for (std::size_t i = 0; i < ci.blocks.size(); ++i) {
        const EncodedBlock& enc = ci.blocks[i];
        if (enc.mode != ci.mode) {
            throw DecodeError("block " + std::to_string(i) + ": mode differs from image mode", i);
        }
        const Block block = decode_block(enc, i);
        const std::size_t x0 = (i % bw) * kBlockSide;
        const std::size_t y0 = (i / bw) * kBlockSide;
        for (int r = 0; r < kBlockSide; ++r) {
            const std::size_t y = y0 + r;
            if (y >= ci.height) break;
            for (int c = 0; c < kBlockSide; ++c) {
                const std::size_t x = x0 + c;
                if (x >= ci.width) break;
                out.at(x, y) = block.pixels[static_cast<std::size_t>(r * kBlockSide + c)];
            }
        }
    }
    return out;
}

}  // namespace ibtc
