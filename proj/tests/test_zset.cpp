#include "macforge/zset.hpp"

#include "doctest.h"
#include "testutil.hpp"

using namespace macforge;
using mftest::Rng;

TEST_CASE("mult saturating arithmetic") {
    CHECK(mult_cap() == 4);
    CHECK(Mult::exact(2) + Mult::exact(1) == Mult::exact(3));
    CHECK((Mult::exact(2) + Mult::exact(2)).is_saturated());
    CHECK(Mult::exact(0) * Mult::saturated() == Mult::zero());
    CHECK((Mult::exact(2) * Mult::exact(3)).is_saturated());
    CHECK(Mult::compare(Mult::saturated(), Mult::exact(3)) == Mult::Cmp::gt);
    CHECK(Mult::compare(Mult::saturated(), Mult::saturated()) == Mult::Cmp::unknown);
    CHECK_THROWS_AS(set_mult_cap(1), Error);
}

TEST_CASE("canonicalize tightens boundaries") {
    // core [0,1,1] with posTail 1 collapses into the tail
    ZSet z = ZSet::make(Mult::zero(), 5, {Mult::zero(), Mult::one(), Mult::one()}, Mult::one());
    CHECK(z == ZSet::up_ray(6));
    CHECK(z.mult_at(5).is_zero());
    CHECK(z.mult_at(6).is_one());

    // all-zero input is the empty set
    ZSet e = ZSet::make(Mult::zero(), -3, {Mult::zero(), Mult::zero()}, Mult::zero());
    CHECK(e == ZSet::empty());
    CHECK(e.is_empty());

    // N written with a slack lower boundary tightens to 0
    std::vector<Mult> wide(8, Mult::zero());
    for (int i = 5; i < 8; ++i) wide[i] = Mult::one();
    ZSet n = ZSet::make(Mult::zero(), -5, std::move(wide), Mult::one());
    CHECK(n == ZSet::up_ray(0));
    CHECK(n.core_lo() == 0);

    // canonicalize is idempotent: rebuilding from fields is identity
    Rng rng(7);
    for (int t = 0; t < 200; ++t) {
        ZSet r = mftest::random_zset(rng, -6, 6);
        std::vector<Mult> c(r.core().begin(), r.core().end());
        CHECK(ZSet::make(r.neg_tail(), r.core_lo(), c, r.pos_tail()) == r);
    }
}

TEST_CASE("mult_at basics") {
    CHECK(ZSet::up_ray(0).mult_at(-1).is_zero());
    CHECK(ZSet::up_ray(0).mult_at(0).is_one());

    // {0,1} (+) {1,2} = {1,2,2,3}
    ZSet s = minkowski(ZSet::finite({0, 1}), ZSet::finite({1, 2}));
    CHECK(s.mult_at(1) == Mult::exact(1));
    CHECK(s.mult_at(2) == Mult::exact(2));
    CHECK(s.mult_at(3) == Mult::exact(1));
    CHECK(s.mult_at(0).is_zero());
    CHECK(s.mult_at(4).is_zero());

    // N (+) N at 2 has multiplicity 3 when the cap allows it
    CapGuard g(8);
    ZSet nn = minkowski(ZSet::up_ray(0), ZSet::up_ray(0));
    CHECK(nn.mult_at(2) == Mult::exact(3));
    CHECK(nn.mult_at(0) == Mult::exact(1));
    CHECK(nn.mult_at(-1).is_zero());
}

TEST_CASE("disjoint union") {
    ZSet n2 = disjoint_union(ZSet::up_ray(0), ZSet::up_ray(0));
    CHECK(n2.mult_at(3) == Mult::exact(2));
    CHECK(n2.mult_at(-1).is_zero());

    Rng rng(1);
    ZSet s = mftest::random_zset(rng, -4, 4);
    CHECK(disjoint_union(ZSet::empty(), s) == s);

    ZSet quad = ZSet::point(0);
    for (int i = 0; i < 3; ++i) quad = disjoint_union(quad, ZSet::point(0));
    CHECK(quad.mult_at(0).is_saturated());
}

TEST_CASE("minkowski closed forms") {
    Rng rng(3);
    ZSet s = mftest::random_zset(rng, -5, 5);
    CHECK(minkowski(s, ZSet::point(0)) == s);

    // N (+) {0,1}: mult 1 at 0, mult 2 from 1 on
    ZSet r = minkowski(ZSet::up_ray(0), ZSet::finite({0, 1}));
    CHECK(r.mult_at(-1).is_zero());
    CHECK(r.mult_at(0) == Mult::exact(1));
    CHECK(r.mult_at(1) == Mult::exact(2));
    CHECK(r.pos_tail() == Mult::exact(2));

    // opposite infinite tails saturate everywhere
    ZSet zz = minkowski(ZSet::all(), ZSet::all());
    CHECK(zz == ZSet::constant(Mult::saturated()));
}

TEST_CASE("minkowski agrees with the windowed convolution oracle") {
    Rng rng(42);
    const std::int64_t w = 8, T = 3 * w + mult_cap() + 5;
    for (int t = 0; t < 300; ++t) {
        ZSet a = mftest::random_zset(rng, -w, w);
        ZSet b = mftest::random_zset(rng, -w, w);
        ZSet p = minkowski(a, b);
        for (std::int64_t n = -2 * w; n <= 2 * w; ++n) {
            CAPTURE(t);
            CAPTURE(n);
            REQUIRE(p.mult_at(n) == mftest::oracle_conv_at(a, b, n, T));
        }
    }
}

TEST_CASE("semiring laws on random values") {
    Rng rng(99);
    for (int t = 0; t < 150; ++t) {
        ZSet a = mftest::random_zset(rng, -5, 5);
        ZSet b = mftest::random_zset(rng, -5, 5);
        ZSet c = mftest::random_zset(rng, -5, 5);
        CHECK(disjoint_union(a, b) == disjoint_union(b, a));
        CHECK(minkowski(a, b) == minkowski(b, a));
        CHECK(disjoint_union(disjoint_union(a, b), c) == disjoint_union(a, disjoint_union(b, c)));
        CHECK(minkowski(minkowski(a, b), c) == minkowski(a, minkowski(b, c)));
        CHECK(minkowski(a, disjoint_union(b, c)) ==
              disjoint_union(minkowski(a, b), minkowski(a, c)));
        CHECK(disjoint_union(a, ZSet::empty()) == a);
        CHECK(minkowski(a, ZSet::point(0)) == a);
    }
}

TEST_CASE("subtract") {
    // (N (+) {0}) minus (N (+) {1}) is {0}
    ZSet lhs = minkowski(ZSet::up_ray(0), ZSet::point(0));
    ZSet rhs = minkowski(ZSet::up_ray(0), ZSet::point(1));
    CHECK(subtract(lhs, rhs) == ZSet::point(0));

    Rng rng5(5);
    ZSet s = mftest::random_zset(rng5, -4, 4);
    CHECK(subtract(s, ZSet::empty()) == s);

    ZSet sat = minkowski(ZSet::all(), ZSet::all());
    CHECK_THROWS_AS(subtract(sat, sat), CapAmbiguous);
    // saturated minuend with zero subtrahend stays saturated
    CHECK(subtract(sat, ZSet::empty()) == sat);
    // exact minuend below a saturated subtrahend is zero
    CHECK(subtract(ZSet::all(), sat) == ZSet::empty());
}

TEST_CASE("dominates") {
    CHECK(dominates(ZSet::all(), ZSet::up_ray(0)) == Tri::yes);
    CHECK(dominates(ZSet::up_ray(0), ZSet::all()) == Tri::no);
    ZSet nn = minkowski(ZSet::up_ray(0), ZSet::up_ray(0));
    CHECK(dominates(nn, nn) == Tri::yes);  // reflexive even at cap
    ZSet nn1 = minkowski(nn, ZSet::point(1));
    CHECK(dominates(nn, nn1) == Tri::unknown_at_cap);
}

TEST_CASE("shift") {
    CHECK(ZSet::point(0).shifted(1) == ZSet::point(1));
    CHECK(ZSet::up_ray(0).shifted(-3) == ZSet::up_ray(-3));
    Rng rng11(11);
    ZSet s = mftest::random_zset(rng11, -5, 5);
    CHECK(s.shifted(4).shifted(-4) == s);
    for (std::int64_t n = -8; n <= 8; ++n) CHECK(s.shifted(3).mult_at(n) == s.mult_at(n - 3));
}

TEST_CASE("support and complement helpers") {
    ZSet z = set_union(ZSet::finite({-2, 3}), ZSet::up_ray(5));
    CHECK(z.min_support() == -2);
    CHECK(!z.max_support().has_value());
    CHECK(z.support_in(-3, 6) == std::vector<std::int64_t>{-2, 3, 5, 6});
    CHECK(z.complement_plain().mult_at(-2).is_zero());
    CHECK(z.complement_plain().mult_at(4).is_one());
    CHECK(covers_all_integers(ZSet::all()));
    CHECK(!covers_all_integers(z));
    CHECK(supports_intersect(z, ZSet::point(3)));
    CHECK(!supports_intersect(z, ZSet::point(4)));
    CHECK(covered_exactly_once(ZSet::all(), ZSet::up_ray(2)));
    CHECK(!covered_exactly_once(disjoint_union(ZSet::all(), ZSet::point(2)), ZSet::up_ray(2)));
    CHECK(z.negated().max_support() == 2);
}
