#pragma once

// Bitplane construction, 2-bit code assignment, drop masks and the
// interpolation of dropped positions.

#include <array>
#include <cstdint>
#include <optional>
#include <span>

#include "ibtc/block_math.hpp"

namespace ibtc {

/// One bit per pixel; bit set where the pixel is >= the block mean.
using BinaryBitplane = std::array<std::uint8_t, kBlockPixels>;

/// One 2-bit code (0..3) per pixel, indexing the quantizer ladder.
using CodePlane = std::array<std::uint8_t, kBlockPixels>;

/// Reconstructed intensities with some positions still unknown.
using PartialField = std::array<std::optional<double>, kBlockPixels>;
using Field = std::array<double, kBlockPixels>;

/// A fixed split of the 16 positions into dropped and retained sets.
/// Both lists hold 1-based positions in ascending order.
struct DropMask {
    std::span<const int> dropped;
    std::span<const int> retained;

    bool is_dropped(int position) const;
};

/// Horizontal-midpoint mask: positions 2, 6, 10 and 14.
DropMask level2_mask();

/// Eight-position mask whose holes are filled from retained neighbours.
DropMask level3_mask();

/// The mask with nothing dropped.
DropMask full_mask();

BinaryBitplane binary_bitplane(const Block& block, double mean);

/// Index of the nearest ladder level; equidistant levels resolve to the
/// smaller code.
std::uint8_t assign_code(double pixel, const QuantizerLadder& ladder);

CodePlane encode_codeplane(const Block& block, const QuantizerLadder& ladder);

/// Codes at the retained positions, ascending. Returns the number written
/// (mask.retained.size()).
std::size_t drop(const CodePlane& plane, const DropMask& mask, std::span<std::uint8_t> out);

/// Fills positions 2, 6, 10, 14 with the mean of their left and right
/// neighbours. Throws InvalidArgument if a referenced neighbour is unset.
Field interpolate_level2(const PartialField& values);

/// Fills the eight Level-3 holes, each from a horizontal and a vertical
/// retained neighbour.
Field interpolate_level3(const PartialField& values);

/// Interpolation rule for one dropped position: the mean of two positions.
struct InterpolationRule {
    int target;
    int from_a;
    int from_b;
};

std::span<const InterpolationRule> level2_rules();
std::span<const InterpolationRule> level3_rules();

}  // namespace ibtc
