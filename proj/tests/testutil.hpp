#ifndef MACFORGE_TESTUTIL_HPP
#define MACFORGE_TESTUTIL_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "macforge/zset.hpp"

namespace mftest {

using macforge::Mult;
using macforge::ZSet;

using Rng = std::mt19937_64;

inline std::int64_t pick(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline Mult random_mult(Rng& rng, bool allow_sat = true) {
    std::int64_t v = pick(rng, 0, allow_sat ? macforge::mult_cap() : macforge::mult_cap() - 1);
    return Mult::exact(v);  // v == cap saturates
}

/// Random canonical ZSet with core inside [lo, hi].
inline ZSet random_zset(Rng& rng, std::int64_t lo, std::int64_t hi, bool allow_tails = true,
                        bool plain = false) {
    auto rm = [&](bool tail) {
        if (plain) return Mult::exact(pick(rng, 0, 1));
        if (tail) return random_mult(rng);
        return random_mult(rng);
    };
    Mult neg = allow_tails ? rm(true) : Mult::zero();
    Mult pos = allow_tails ? rm(true) : Mult::zero();
    std::int64_t a = pick(rng, lo, hi), b = pick(rng, lo, hi);
    if (a > b) std::swap(a, b);
    std::vector<Mult> core;
    for (std::int64_t n = a; n <= b; ++n) core.push_back(rm(false));
    return ZSet::make(neg, a, std::move(core), pos);
}

/// Independent capped convolution oracle: saturating sum over i in [-T, T] of
/// a(i)*b(n-i). Exact for |n| <= 2w when both cores lie in [-w, w] and
/// T >= 3w + cap + margin (pure tail-tail interactions either vanish or reach
/// the cap within the truncation).
inline Mult oracle_conv_at(const ZSet& a, const ZSet& b, std::int64_t n, std::int64_t T) {
    std::int64_t acc = 0;
    const std::int64_t cap = macforge::mult_cap();
    for (std::int64_t i = -T; i <= T; ++i) {
        Mult ai = a.mult_at(i), bj = b.mult_at(n - i);
        if (ai.is_zero() || bj.is_zero()) continue;
        std::int64_t va = ai.is_saturated() ? cap : ai.count();
        std::int64_t vb = bj.is_saturated() ? cap : bj.count();
        acc += va * vb;
        if (acc >= cap) return Mult::saturated();
    }
    return Mult::exact(acc);
}

}  // namespace mftest

#endif
