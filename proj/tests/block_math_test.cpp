#include "ibtc/block_math.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "test_util.hpp"

namespace ibtc {
namespace {

using testing::block_of;
using testing::ramp_block;
using testing::two_level_block;

TEST(BlockMean, Examples) {
    EXPECT_EQ(block_mean(Block::filled(100)), 100.0);
    EXPECT_EQ(block_mean(ramp_block()), 7.5);
    EXPECT_EQ(block_mean(two_level_block()), 15.0);
}

TEST(BlockStddev, Examples) {
    EXPECT_EQ(block_stddev(Block::filled(42)), 0.0);
    EXPECT_EQ(block_stddev(two_level_block()), 5.0);

    // Direct summation: deviations from 7.5 are +-0.5 .. +-7.5.
    double acc = 0.0;
    for (int i = 0; i < 16; ++i) acc += (i - 7.5) * (i - 7.5);
    EXPECT_DOUBLE_EQ(block_stddev(ramp_block()), std::sqrt(acc / 16.0));
    EXPECT_DOUBLE_EQ(block_stddev(ramp_block()), std::sqrt(21.25));
}

TEST(BtcQuantizers, ConstantBlockIsDegenerate) {
    const auto q = btc_quantizers(Block::filled(50));
    EXPECT_EQ(q.high, 50.0);
    EXPECT_EQ(q.low, 50.0);
    EXPECT_EQ(q.high_count, 16);
}

TEST(BtcQuantizers, TwoLevelBalancedBlockRecoversLevels) {
    const auto q = btc_quantizers(two_level_block());
    EXPECT_DOUBLE_EQ(q.high, 20.0);
    EXPECT_DOUBLE_EQ(q.low, 10.0);
    EXPECT_EQ(q.high_count, 8);
}

TEST(BtcQuantizers, PreservesMeanAndVariance) {
    std::mt19937 rng(1);
    for (int iter = 0; iter < 2000; ++iter) {
        const Block b = testing::random_block(rng);
        const auto q = btc_quantizers(b);
        if (q.high_count == 0 || q.high_count == 16) continue;
        const int p = q.high_count;
        const double m = (p * q.high + (16 - p) * q.low) / 16.0;
        const double var =
            (p * (q.high - m) * (q.high - m) + (16 - p) * (q.low - m) * (q.low - m)) / 16.0;
        EXPECT_NEAR(m, block_mean(b), 1e-9);
        EXPECT_NEAR(std::sqrt(var), block_stddev(b), 1e-9);
        EXPECT_LE(q.low, block_mean(b));
        EXPECT_GE(q.high, block_mean(b));
    }
}

TEST(AmbtcMoments, Examples) {
    auto m = ambtc_moments(two_level_block());
    EXPECT_EQ(m.high_mean, 20.0);
    EXPECT_EQ(m.low_mean, 10.0);
    EXPECT_EQ(m.high_count, 8);
    EXPECT_EQ(m.low_count, 8);

    m = ambtc_moments(Block::filled(77));
    EXPECT_EQ(m.high_mean, 77.0);
    EXPECT_EQ(m.low_mean, 77.0);
    EXPECT_EQ(m.high_count, 16);
    EXPECT_EQ(m.low_count, 0);

    m = ambtc_moments(ramp_block());
    EXPECT_EQ(m.high_mean, 11.5);
    EXPECT_EQ(m.low_mean, 3.5);
}

TEST(AmbtcMoments, PixelEqualToMeanJoinsHighGroup) {
    // mean is exactly 4; the two 4s go high.
    const Block b = block_of({0, 0, 0, 0, 4, 4, 8, 8, 0, 0, 0, 8, 8, 8, 8, 8});
    ASSERT_EQ(block_mean(b), 4.0);
    const auto m = ambtc_moments(b);
    EXPECT_EQ(m.high_count, 9);
    EXPECT_EQ(m.low_count, 7);
    EXPECT_DOUBLE_EQ(m.high_mean, 64.0 / 9.0);
    EXPECT_EQ(m.low_mean, 0.0);
}

TEST(AmbtcMoments, MeanPreservationAndOrdering) {
    std::mt19937 rng(2);
    for (int iter = 0; iter < 5000; ++iter) {
        const Block b = testing::random_block(rng, 0, iter % 2 ? 255 : 6);
        const auto m = ambtc_moments(b);
        ASSERT_EQ(m.high_count + m.low_count, 16);
        const double mean = block_mean(b);
        EXPECT_LE(m.low_mean, mean);
        EXPECT_GE(m.high_mean, mean);
        if (m.low_count > 0) {
            // p*hMean + q*lMean = 16*mean; the group sums are integers.
            EXPECT_EQ(std::llround(m.high_count * m.high_mean + m.low_count * m.low_mean),
                      std::llround(16 * mean));
        } else {
            EXPECT_EQ(m.high_mean, m.low_mean);
        }
    }
}

TEST(QuantizerLadder, Examples) {
    auto l = quantizer_ladder(10.0, 20.0);
    EXPECT_DOUBLE_EQ(l.step, 10.0 / 3.0);
    EXPECT_DOUBLE_EQ(l[0], 10.0);
    EXPECT_DOUBLE_EQ(l[1], 10.0 + 10.0 / 3.0);
    EXPECT_DOUBLE_EQ(l[2], 20.0 - 10.0 / 3.0);
    EXPECT_DOUBLE_EQ(l[3], 20.0);

    l = quantizer_ladder(77.0, 77.0);
    EXPECT_EQ(l.step, 0.0);
    for (int k = 0; k < 4; ++k) EXPECT_EQ(l[static_cast<std::size_t>(k)], 77.0);

    l = quantizer_ladder(0.0, 255.0);
    EXPECT_EQ(l[0], 0.0);
    EXPECT_EQ(l[1], 85.0);
    EXPECT_EQ(l[2], 170.0);
    EXPECT_EQ(l[3], 255.0);
}

TEST(QuantizerLadder, MonotoneAndEvenlySpaced) {
    std::mt19937 rng(3);
    for (int iter = 0; iter < 5000; ++iter) {
        const auto m = ambtc_moments(testing::random_block(rng));
        const auto l = quantizer_ladder(m);
        EXPECT_EQ(l[0], m.low_mean);
        EXPECT_EQ(l[3], m.high_mean);
        for (std::size_t k = 1; k < 4; ++k) {
            EXPECT_NEAR(l[k] - l[k - 1], l.step, 1e-9);
            if (m.high_mean > m.low_mean) {
                EXPECT_LT(l[k - 1], l[k]);
            } else {
                EXPECT_LE(l[k - 1], l[k]);
            }
        }
    }
}

TEST(BlockMath, MatchesNaiveLoops) {
    std::mt19937 rng(4);
    for (int iter = 0; iter < 10000; ++iter) {
        const Block b = testing::random_block(rng);
        const auto x = testing::to_ref(b);
        ASSERT_EQ(block_mean(b), ref::mean(x));
        ASSERT_EQ(block_stddev(b), ref::stddev(x));
        const auto m = ambtc_moments(b);
        ASSERT_EQ(m.high_mean, ref::high_mean(x));
        ASSERT_EQ(m.low_mean, ref::low_mean(x));
        const auto l = quantizer_ladder(m);
        const auto rl = ref::ladder(ref::low_mean(x), ref::high_mean(x));
        for (std::size_t k = 0; k < 4; ++k) ASSERT_EQ(l[k], rl[k]);
    }
}

}  // namespace
}  // namespace ibtc
