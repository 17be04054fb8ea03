#pragma once

// Brute-force reference coder used only by tests. Shares no code with the
// library: plain loops over a 4x4 int grid, and exact integer arithmetic
// (thirds and sixths of an intensity) for everything the ladder modes store
// and reconstruct.

#include <array>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <vector>

namespace ref {

using Pixels = std::array<int, 16>;

enum Mode { Btc = 0, Ambtc = 1, L1 = 2, L2 = 3, L3 = 4, L4 = 5 };

inline double mean(const Pixels& x) {
    int s = 0;
    for (int i = 0; i < 16; i++) s += x[i];
    return s / 16.0;
}

inline double stddev(const Pixels& x) {
    double m = mean(x);
    double s = 0;
    for (int i = 0; i < 16; i++) s += (x[i] - m) * (x[i] - m);
    return std::sqrt(s / 16.0);
}

struct Groups {
    int high_sum = 0, high_n = 0, low_sum = 0, low_n = 0;
};

// 16*x >= sum  <=>  x >= mean, without any division.
inline Groups groups(const Pixels& x) {
    int s = 0;
    for (int i = 0; i < 16; i++) s += x[i];
    Groups g;
    for (int i = 0; i < 16; i++) {
        if (16 * x[i] >= s) {
            g.high_sum += x[i];
            g.high_n++;
        } else {
            g.low_sum += x[i];
            g.low_n++;
        }
    }
    return g;
}

inline double high_mean(const Pixels& x) {
    Groups g = groups(x);
    if (g.low_n == 0) return mean(x);
    return double(g.high_sum) / g.high_n;
}

inline double low_mean(const Pixels& x) {
    Groups g = groups(x);
    if (g.low_n == 0) return mean(x);
    return double(g.low_sum) / g.low_n;
}

// round-half-up(a / b) for a >= 0, b > 0.
inline int div_round(int a, int b) { return (2 * a + b) / (2 * b); }

inline int clamp255(long v) { return v < 0 ? 0 : (v > 255 ? 255 : int(v)); }

// Stored 8-bit moments (low, high) of the ladder modes, before L4 scaling.
inline std::array<int, 2> stored_low_high(const Pixels& x) {
    Groups g = groups(x);
    if (g.low_n == 0) {
        int s = g.high_sum;
        return {div_round(s, 16), div_round(s, 16)};
    }
    return {div_round(g.low_sum, g.low_n), div_round(g.high_sum, g.high_n)};
}

// Ladder level k (0..3) in thirds of an intensity.
inline long level3(int low, int high, int k) { return 3L * low + long(k) * (high - low); }

// Nearest level by exact comparison in thirds; ties keep the smaller code.
inline int nearest_code(int pixel, int low, int high) {
    int best = 0;
    long best_d = std::labs(3L * pixel - level3(low, high, 0));
    for (int k = 1; k < 4; k++) {
        long d = std::labs(3L * pixel - level3(low, high, k));
        if (d < best_d) {
            best = k;
            best_d = d;
        }
    }
    return best;
}

// Real-domain ladder in the same step order as the defining formulas.
inline std::array<double, 4> ladder(double low, double high) {
    double sv = (high - low) / 3;
    double q2 = low + sv;
    double q3 = q2 + sv;
    return {low, q2, q3, high};
}

inline int nearest_code_real(double pixel, const std::array<double, 4>& q) {
    int best = 0;
    for (int k = 1; k < 4; k++) {
        // genuinely closer by more than rounding noise
        if (std::fabs(pixel - q[k]) < std::fabs(pixel - q[best]) - 1e-9) best = k;
    }
    return best;
}

// 1-based position lists.
inline std::vector<int> dropped_positions(int mode) {
    if (mode == L2) return {2, 6, 10, 14};
    if (mode == L3 || mode == L4) return {1, 4, 6, 7, 10, 11, 13, 16};
    return {};
}

inline bool is_dropped(int mode, int pos) {
    for (int d : dropped_positions(mode))
        if (d == pos) return true;
    return false;
}

// Hole fillers written out one by one: target -> (a, b), 1-based.
inline void neighbours(int mode, int pos, int& a, int& b) {
    if (mode == L2) {
        a = pos - 1;
        b = pos + 1;
        return;
    }
    switch (pos) {
        case 1: a = 2; b = 5; break;
        case 11: a = 12; b = 15; break;
        case 4: a = 3; b = 8; break;
        case 10: a = 9; b = 14; break;
        case 6: a = 5; b = 2; break;
        case 16: a = 15; b = 12; break;
        case 7: a = 8; b = 3; break;
        case 13: a = 14; b = 9; break;
        default: a = b = -1;
    }
}

struct Encoded {
    int m0 = 0, m1 = 0;
    std::vector<int> codes;
};

inline Encoded encode(const Pixels& x, int mode) {
    Encoded e;
    if (mode == Btc || mode == Ambtc) {
        if (mode == Btc) {
            double m = mean(x), s = stddev(x);
            int p = 0;
            for (int i = 0; i < 16; i++)
                if (x[i] >= m) p++;
            double hi = m, lo = m;
            if (p > 0 && p < 16) {
                hi = m + s * std::sqrt(double(16 - p) / p);
                lo = m - s * std::sqrt(double(p) / (16 - p));
            }
            e.m0 = clamp255(long(std::floor(hi + 0.5)));
            e.m1 = clamp255(long(std::floor(lo + 0.5)));
        } else {
            auto lh = stored_low_high(x);
            e.m0 = lh[1];
            e.m1 = lh[0];
        }
        int s = 0;
        for (int i = 0; i < 16; i++) s += x[i];
        for (int i = 0; i < 16; i++) e.codes.push_back(16 * x[i] >= s ? 1 : 0);
        return e;
    }

    auto lh = stored_low_high(x);
    int low = lh[0], high = lh[1];
    if (mode == L4) {
        e.m0 = low / 4;
        e.m1 = high / 4;
        low = e.m0 * 4;
        high = e.m1 * 4;
    } else {
        e.m0 = low;
        e.m1 = high;
    }
    for (int pos = 1; pos <= 16; pos++) {
        if (!is_dropped(mode, pos)) e.codes.push_back(nearest_code(x[pos - 1], low, high));
    }
    return e;
}

inline Pixels decode(const Encoded& e, int mode) {
    Pixels out{};
    if (mode == Btc || mode == Ambtc) {
        for (int i = 0; i < 16; i++) out[i] = e.codes[i] ? e.m0 : e.m1;
        return out;
    }
    int low = e.m0, high = e.m1;
    if (mode == L4) {
        low *= 4;
        high *= 4;
    }
    // Everything in sixths of an intensity.
    std::array<long, 16> sixths{};
    int k = 0;
    for (int pos = 1; pos <= 16; pos++) {
        if (!is_dropped(mode, pos)) sixths[pos - 1] = 2 * level3(low, high, e.codes[k++]);
    }
    for (int pos : dropped_positions(mode)) {
        int a, b;
        neighbours(mode, pos, a, b);
        sixths[pos - 1] = (sixths[a - 1] + sixths[b - 1]) / 2;
    }
    for (int i = 0; i < 16; i++) out[i] = clamp255((sixths[i] + 3) / 6);
    return out;
}

inline int payload_bits(int mode) {
    switch (mode) {
        case Btc:
        case Ambtc: return 8 + 8 + 16;
        case L1: return 8 + 8 + 16 * 2;
        case L2: return 8 + 8 + 12 * 2;
        case L3: return 8 + 8 + 8 * 2;
        case L4: return 6 + 6 + 8 * 2;
    }
    return 0;
}

}  // namespace ref
