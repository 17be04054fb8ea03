#pragma once

#include <cstdint>
#include <random>

#include "ibtc/block_math.hpp"
#include "ibtc/raster.hpp"
#include "reference/reference_codec.hpp"

namespace ibtc::testing {

inline Block random_block(std::mt19937& rng, int lo = 0, int hi = 255) {
    std::uniform_int_distribution<int> d(lo, hi);
    Block b;
    for (auto& p : b.pixels) p = static_cast<std::uint8_t>(d(rng));
    return b;
}

inline Block block_of(std::initializer_list<int> values) {
    Block b;
    std::size_t i = 0;
    for (int v : values) b.pixels[i++] = static_cast<std::uint8_t>(v);
    return b;
}

inline Block ramp_block() {
    Block b;
    for (int i = 0; i < 16; ++i) b.pixels[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
    return b;
}

inline Block two_level_block() {
    return block_of({10, 10, 10, 10, 10, 10, 10, 10, 20, 20, 20, 20, 20, 20, 20, 20});
}

inline ref::Pixels to_ref(const Block& b) {
    ref::Pixels x{};
    for (std::size_t i = 0; i < 16; ++i) x[i] = b.pixels[i];
    return x;
}

inline Raster random_raster(std::mt19937& rng, std::size_t w, std::size_t h) {
    Raster r(w, h);
    for (auto& p : r.pixels) p = static_cast<std::uint8_t>(rng());
    return r;
}

/// Smooth synthetic image: gradients plus mild texture, so interpolation
/// behaves like it does on photographs.
inline Raster smooth_raster(std::mt19937& rng, std::size_t w, std::size_t h) {
    Raster r(w, h);
    std::normal_distribution<double> noise(0.0, 3.0);
    for (std::size_t y = 0; y < h; ++y) {
        for (std::size_t x = 0; x < w; ++x) {
            double v = 128.0 + 60.0 * std::sin(0.05 * static_cast<double>(x)) +
                       50.0 * std::cos(0.07 * static_cast<double>(y)) + noise(rng);
            v = v < 0 ? 0 : (v > 255 ? 255 : v);
            r.at(x, y) = static_cast<std::uint8_t>(v);
        }
    }
    return r;
}

}  // namespace ibtc::testing
