#pragma once

// Per-block statistics for BTC, AMBTC and the four-level ladder coder.
//
// Positions inside a block are 1-based and row-major (1..16) wherever the
// public API talks about a "position"; storage is a plain 0-based array.

#include <array>
#include <cstddef>
#include <cstdint>

namespace ibtc {

inline constexpr int kBlockSide = 4;
inline constexpr int kBlockPixels = kBlockSide * kBlockSide;

/// 0-based storage slot of a 1-based row-major block position.
constexpr std::size_t slot(int position) { return static_cast<std::size_t>(position - 1); }

/// A 4x4 tile of 8-bit intensities, row-major.
struct Block {
    std::array<std::uint8_t, kBlockPixels> pixels{};

    static Block filled(std::uint8_t value) {
        Block b;
        b.pixels.fill(value);
        return b;
    }

    /// Pixel at 1-based position.
    std::uint8_t at(int position) const { return pixels[slot(position)]; }

    friend bool operator==(const Block&, const Block&) = default;
};

/// Reconstruction levels of classic BTC. `high` is used for pixels >= mean.
struct BtcQuantizers {
    double high = 0.0;  // q1
    double low = 0.0;   // q2
    int high_count = 0; // p
};

/// Group means of AMBTC.
struct AmbtcMoments {
    double high_mean = 0.0;
    double low_mean = 0.0;
    int high_count = 0;  // pixels >= block mean
    int low_count = 0;   // pixels <  block mean
};

/// Four evenly spaced reconstruction levels between the low and high mean.
struct QuantizerLadder {
    std::array<double, 4> levels{};
    double step = 0.0;

    double operator[](std::size_t code) const { return levels[code]; }
};

double block_mean(const Block& block);

/// Population standard deviation over all 16 pixels.
double block_stddev(const Block& block);

/// Moment-preserving two-level quantizers. A constant block yields
/// high == low == mean with high_count == 16.
BtcQuantizers btc_quantizers(const Block& block);

/// Pixels >= mean form the high group, pixels < mean the low group. When the
/// low group is empty (constant block) both means equal the block mean.
AmbtcMoments ambtc_moments(const Block& block);

/// Ladder with levels[0] = low, levels[3] = high and step (high - low) / 3.
QuantizerLadder quantizer_ladder(double low, double high);

inline QuantizerLadder quantizer_ladder(const AmbtcMoments& moments) {
    return quantizer_ladder(moments.low_mean, moments.high_mean);
}

}  // namespace ibtc
