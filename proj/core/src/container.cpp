#include "ibtc/container.hpp"

#include <algorithm>
#include <string>

#include "ibtc/bitstream.hpp"
#include "ibtc/errors.hpp"

namespace ibtc {

namespace {

std::size_t padded_block_count(std::size_t width, std::size_t height) {
    return ((width + 3) / 4) * ((height + 3) / 4);
}

std::uint16_t read_u16(std::span<const std::uint8_t> bytes, std::size_t at) {
    return static_cast<std::uint16_t>((bytes[at] << 8) | bytes[at + 1]);
}

}  // namespace

std::size_t container_size(Mode mode, std::size_t width, std::size_t height) {
    const std::size_t bits =
        padded_block_count(width, height) * static_cast<std::size_t>(payload_bits(mode));
    return kHeaderBytes + (bits + 7) / 8;
}

std::vector<std::uint8_t> serialize(const CompressedImage& ci) {
    if (ci.width == 0 || ci.height == 0 || ci.width > kMaxDimension ||
        ci.height > kMaxDimension) {
        throw InvalidArgument("serialize: dimensions " + std::to_string(ci.width) + "x" +
                              std::to_string(ci.height) + " do not fit the header");
    }
    if (ci.blocks.size() != ci.expected_blocks()) {
        throw StructureError("serialize: block count does not match dimensions");
    }

    std::vector<std::uint8_t> out;
    out.reserve(container_size(ci.mode, ci.width, ci.height));
    out.insert(out.end(), kMagic.begin(), kMagic.end());
    out.push_back(static_cast<std::uint8_t>((kFormatVersion << 4) |
                                            static_cast<std::uint8_t>(ci.mode)));
    out.push_back(static_cast<std::uint8_t>(ci.width >> 8));
    out.push_back(static_cast<std::uint8_t>(ci.width & 0xFF));
    out.push_back(static_cast<std::uint8_t>(ci.height >> 8));
    out.push_back(static_cast<std::uint8_t>(ci.height & 0xFF));

    const ModeLayout lay = layout(ci.mode);
    BitWriter writer(out);
    for (std::size_t i = 0; i < ci.blocks.size(); ++i) {
        const EncodedBlock& b = ci.blocks[i];
        if (b.mode != ci.mode || b.code_count != lay.code_count) {
            throw DecodeError("serialize: block " + std::to_string(i) +
                                  " does not match the image mode layout",
                              i);
        }
        writer.write(b.moments[0], lay.moment_bits);
        writer.write(b.moments[1], lay.moment_bits);
        for (auto c : b.retained_codes()) writer.write(c, lay.code_bits);
    }
    return out;
}

ContainerHeader parse_header(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < kMagic.size() || !std::equal(kMagic.begin(), kMagic.end(), bytes.begin())) {
        throw FormatError("not an IBTC file: bad magic");
    }
    if (bytes.size() < kHeaderBytes) {
        throw FormatError("truncated IBTC header: " + std::to_string(bytes.size()) + " of " +
                          std::to_string(kHeaderBytes) + " bytes");
    }
    const std::uint8_t version = bytes[4] >> 4;
    const std::uint8_t mode = bytes[4] & 0x0F;
    if (version != kFormatVersion) {
        throw FormatError("unsupported IBTC version " + std::to_string(version));
    }
    if (mode > static_cast<std::uint8_t>(Mode::L4)) {
        throw FormatError("invalid mode byte " + std::to_string(mode));
    }
    ContainerHeader h;
    h.mode = static_cast<Mode>(mode);
    h.width = read_u16(bytes, 5);
    h.height = read_u16(bytes, 7);
    if (h.width == 0 || h.height == 0) {
        throw FormatError("zero image dimension in header");
    }
    return h;
}

CompressedImage deserialize(std::span<const std::uint8_t> bytes, DeserializeDiagnostics* diag) {
    const ContainerHeader h = parse_header(bytes);
    const ModeLayout lay = layout(h.mode);

    CompressedImage ci;
    ci.mode = h.mode;
    ci.width = h.width;
    ci.height = h.height;

    const std::size_t blocks = ci.expected_blocks();
    const std::size_t expected_bits = blocks * static_cast<std::size_t>(lay.payload_bits());
    const std::size_t expected_bytes = (expected_bits + 7) / 8;
    const std::span<const std::uint8_t> payload = bytes.subspan(kHeaderBytes);
    if (payload.size() != expected_bytes) {
        const std::string kind = payload.size() < expected_bytes ? "truncated" : "oversized";
        throw LengthError(kind + " IBTC payload: expected " + std::to_string(expected_bits) +
                              " bits (" + std::to_string(expected_bytes) + " bytes), got " +
                              std::to_string(payload.size() * 8) + " bits",
                          expected_bits, payload.size() * 8);
    }

    BitReader reader(payload);
    ci.blocks.resize(blocks);
    for (auto& b : ci.blocks) {
        b.mode = h.mode;
        b.moments[0] = static_cast<std::uint8_t>(reader.read(lay.moment_bits));
        b.moments[1] = static_cast<std::uint8_t>(reader.read(lay.moment_bits));
        b.code_count = static_cast<std::uint8_t>(lay.code_count);
        for (int k = 0; k < lay.code_count; ++k) {
            b.codes[static_cast<std::size_t>(k)] =
                static_cast<std::uint8_t>(reader.read(lay.code_bits));
        }
    }

    const int pad = static_cast<int>(reader.remaining());
    if (diag) diag->nonzero_padding = pad > 0 && reader.read(pad) != 0;
    return ci;
}

}  // namespace ibtc
