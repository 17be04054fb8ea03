#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace ibtc {

/// Row-major 8-bit grayscale image.
struct Raster {
    std::size_t width = 0;
    std::size_t height = 0;
    std::vector<std::uint8_t> pixels;

    Raster() = default;
    Raster(std::size_t w, std::size_t h, std::uint8_t fill = 0)
        : width(w), height(h), pixels(w * h, fill) {}

    std::uint8_t& at(std::size_t x, std::size_t y) { return pixels[y * width + x]; }
    std::uint8_t at(std::size_t x, std::size_t y) const { return pixels[y * width + x]; }

    bool empty() const { return width == 0 || height == 0; }

    friend bool operator==(const Raster&, const Raster&) = default;
};

}  // namespace ibtc
