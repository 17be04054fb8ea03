#include "ibtc/bitplane.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ibtc/errors.hpp"

namespace ibtc {

namespace {

constexpr std::array<int, 4> kLevel2Dropped{2, 6, 10, 14};
constexpr std::array<int, 12> kLevel2Retained{1, 3, 4, 5, 7, 8, 9, 11, 12, 13, 15, 16};

constexpr std::array<int, 8> kLevel3Dropped{1, 4, 6, 7, 10, 11, 13, 16};
constexpr std::array<int, 8> kLevel3Retained{2, 3, 5, 8, 9, 12, 14, 15};

constexpr std::array<int, 0> kNothing{};
constexpr std::array<int, 16> kEverything{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16};

constexpr std::array<InterpolationRule, 4> kLevel2Rules{{
    {2, 1, 3},
    {6, 5, 7},
    {10, 9, 11},
    {14, 13, 15},
}};

// Each hole averages one horizontal and one vertical neighbour.
constexpr std::array<InterpolationRule, 8> kLevel3Rules{{
    {1, 2, 5},
    {11, 12, 15},
    {4, 3, 8},
    {10, 9, 14},
    {6, 5, 2},
    {16, 15, 12},
    {7, 8, 3},
    {13, 14, 9},
}};

// Ladder values built from integer moments are multiples of 1/3, so two
// genuinely different distances differ by far more than this.
constexpr double kTieTolerance = 1e-9;

Field apply_rules(const PartialField& values, std::span<const InterpolationRule> rules) {
    Field out{};
    for (int pos = 1; pos <= kBlockPixels; ++pos) {
        if (values[slot(pos)]) out[slot(pos)] = *values[slot(pos)];
    }
    for (const auto& rule : rules) {
        const auto& a = values[slot(rule.from_a)];
        const auto& b = values[slot(rule.from_b)];
        if (!a || !b) {
            throw InvalidArgument("interpolation of position " + std::to_string(rule.target) +
                                  " references an unset neighbour");
        }
        out[slot(rule.target)] = (*a + *b) / 2.0;
    }
    return out;
}

}  // namespace

bool DropMask::is_dropped(int position) const {
    return std::find(dropped.begin(), dropped.end(), position) != dropped.end();
}

DropMask level2_mask() { return {kLevel2Dropped, kLevel2Retained}; }
DropMask level3_mask() { return {kLevel3Dropped, kLevel3Retained}; }
DropMask full_mask() { return {kNothing, kEverything}; }

std::span<const InterpolationRule> level2_rules() { return kLevel2Rules; }
std::span<const InterpolationRule> level3_rules() { return kLevel3Rules; }

BinaryBitplane binary_bitplane(const Block& block, double mean) {
    BinaryBitplane bits{};
    for (std::size_t i = 0; i < bits.size(); ++i) {
        bits[i] = block.pixels[i] >= mean ? 1 : 0;
    }
    return bits;
}

std::uint8_t assign_code(double pixel, const QuantizerLadder& ladder) {
    std::uint8_t best = 0;
    double best_distance = std::abs(pixel - ladder[0]);
    for (std::uint8_t code = 1; code < 4; ++code) {
        const double d = std::abs(pixel - ladder[code]);
        if (d < best_distance - kTieTolerance) {
            best = code;
            best_distance = d;
        }
    }
    return best;
}

CodePlane encode_codeplane(const Block& block, const QuantizerLadder& ladder) {
    CodePlane plane{};
    for (std::size_t i = 0; i < plane.size(); ++i) {
        plane[i] = assign_code(block.pixels[i], ladder);
    }
    return plane;
}

std::size_t drop(const CodePlane& plane, const DropMask& mask, std::span<std::uint8_t> out) {
    if (out.size() < mask.retained.size()) {
        throw InvalidArgument("drop: output span too small");
    }
    std::size_t n = 0;
    for (int pos : mask.retained) out[n++] = plane[slot(pos)];
    return n;
}

Field interpolate_level2(const PartialField& values) { return apply_rules(values, kLevel2Rules); }

Field interpolate_level3(const PartialField& values) { return apply_rules(values, kLevel3Rules); }

}  // namespace ibtc
