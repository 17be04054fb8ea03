#include "ibtc/block_math.hpp"

#include <cmath>

namespace ibtc {

namespace {

int pixel_sum(const Block& block) {
    int sum = 0;
    for (auto p : block.pixels) sum += p;
    return sum;
}

}  // namespace

double block_mean(const Block& block) {
    return static_cast<double>(pixel_sum(block)) / kBlockPixels;
}

double block_stddev(const Block& block) {
    // Deviations from a mean with at most four fractional bits square and
    // sum exactly in double, so the result only depends on sqrt.
    const double mean = block_mean(block);
    double acc = 0.0;
    for (auto p : block.pixels) {
        const double d = p - mean;
        acc += d * d;
    }
    return std::sqrt(acc / kBlockPixels);
}

BtcQuantizers btc_quantizers(const Block& block) {
    const double mean = block_mean(block);
    const double sigma = block_stddev(block);

    int p = 0;
    for (auto px : block.pixels) {
        if (px >= mean) ++p;
    }

    BtcQuantizers q;
    q.high_count = p;
    if (p == 0 || p == kBlockPixels) {
        q.high = q.low = mean;
        return q;
    }
    const double m = kBlockPixels;
    q.high = mean + sigma * std::sqrt((m - p) / p);
    q.low = mean - sigma * std::sqrt(p / (m - p));
    return q;
}

AmbtcMoments ambtc_moments(const Block& block) {
    const double mean = block_mean(block);

    int high_sum = 0, low_sum = 0;
    AmbtcMoments m;
    for (auto px : block.pixels) {
        if (px >= mean) {
            high_sum += px;
            ++m.high_count;
        } else {
            low_sum += px;
            ++m.low_count;
        }
    }

    if (m.low_count == 0) {
        m.high_mean = m.low_mean = mean;
        return m;
    }
    m.high_mean = static_cast<double>(high_sum) / m.high_count;
    m.low_mean = static_cast<double>(low_sum) / m.low_count;
    return m;
}

QuantizerLadder quantizer_ladder(double low, double high) {
    QuantizerLadder ladder;
    ladder.step = (high - low) / 3.0;
    ladder.levels[0] = low;
    ladder.levels[1] = low + ladder.step;
    ladder.levels[2] = ladder.levels[1] + ladder.step;
    ladder.levels[3] = high;
    return ladder;
}

}  // namespace ibtc
