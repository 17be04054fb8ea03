#include "ibtc/pnm_io.hpp"

#include <cctype>
#include <fstream>
#include <iterator>
#include <string>

#include "ibtc/errors.hpp"

namespace ibtc {

namespace {

class PnmScanner {
public:
    explicit PnmScanner(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    std::size_t offset() const { return pos_; }
    bool at_end() const { return pos_ >= bytes_.size(); }

    void skip_space_and_comments() {
        while (!at_end()) {
            const auto c = bytes_[pos_];
            if (c == '#') {
                while (!at_end() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
            } else if (std::isspace(c)) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    unsigned long number(const char* what) {
        skip_space_and_comments();
        const std::size_t start = pos_;
        unsigned long v = 0;
        while (!at_end() && std::isdigit(bytes_[pos_])) {
            v = v * 10 + (bytes_[pos_] - '0');
            if (v > 0xFFFFFFFFul) throw ParseError(std::string(what) + " too large", start);
            ++pos_;
        }
        if (pos_ == start) throw ParseError(std::string("expected ") + what, start);
        return v;
    }

    /// Exactly one whitespace byte separates the header from P5 raster data.
    void single_whitespace() {
        if (at_end() || !std::isspace(bytes_[pos_])) {
            throw ParseError("expected whitespace after maxval", pos_);
        }
        ++pos_;
    }

    std::span<const std::uint8_t> rest() const { return bytes_.subspan(pos_); }

private:
    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 0;
};

}  // namespace

Raster read_pgm(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '5' && bytes[1] != '2')) {
        throw ParseError("not a PGM file: expected P5 or P2", 0);
    }
    const bool binary = bytes[1] == '5';

    PnmScanner scan(bytes.subspan(2));
    const auto base = [&] { return scan.offset() + 2; };

    const auto width = scan.number("width");
    const auto height = scan.number("height");
    scan.skip_space_and_comments();
    const std::size_t maxval_at = base();
    const auto maxval = scan.number("maxval");
    if (width == 0 || height == 0) throw ParseError("zero image dimension", maxval_at);
    if (maxval == 0 || maxval > 255) {
        throw ParseError("unsupported maxval " + std::to_string(maxval), maxval_at);
    }

    Raster r(width, height);
    const std::size_t count = r.pixels.size();
    if (binary) {
        scan.single_whitespace();
        const auto data = scan.rest();
        if (data.size() < count) {
            throw ParseError("pixel data truncated: expected " + std::to_string(count) +
                                 " bytes, found " + std::to_string(data.size()),
                             base() + data.size());
        }
        for (std::size_t i = 0; i < count; ++i) {
            if (data[i] > maxval) throw ParseError("sample exceeds maxval", base() + i);
            r.pixels[i] = data[i];
        }
        return r;
    }

    for (std::size_t i = 0; i < count; ++i) {
        scan.skip_space_and_comments();
        if (scan.at_end()) {
            throw ParseError("pixel data truncated: expected " + std::to_string(count) +
                                 " samples, found " + std::to_string(i),
                             base());
        }
        const std::size_t at = base();
        const auto v = scan.number("sample");
        if (v > maxval) throw ParseError("sample exceeds maxval", at);
        r.pixels[i] = static_cast<std::uint8_t>(v);
    }
    return r;
}

std::vector<std::uint8_t> write_pgm(const Raster& raster) {
    const std::string header =
        "P5\n" + std::to_string(raster.width) + " " + std::to_string(raster.height) + "\n255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.insert(out.end(), raster.pixels.begin(), raster.pixels.end());
    return out;
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + path.string());
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error("write failed: " + path.string());
}

Raster load_pgm(const std::filesystem::path& path) { return read_pgm(read_file(path)); }

void save_pgm(const std::filesystem::path& path, const Raster& raster) {
    write_file(path, write_pgm(raster));
}

}  // namespace ibtc
