#ifndef MACFORGE_ZSET_HPP
#define MACFORGE_ZSET_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "macforge/mult.hpp"

namespace macforge {

/// Raised by subtract() when a point has an undecidable difference because
/// the minuend is saturated where the subtrahend is nonzero.
struct CapAmbiguous : Error {
    std::int64_t point;
    explicit CapAmbiguous(std::int64_t n)
        : Error("difference undecidable at cap near n=" + std::to_string(n)),
          point(n) {}
};

/// A weighted subset of Z whose multiplicity function is eventually constant
/// on both sides: a value for every n below the core, a finite core window,
/// and a value for every n above it. The class is closed under the capped
/// algebra (pointwise saturating union, Minkowski product, shift), which is
/// what makes infinite products representable at all.
///
/// Canonical form: the core never starts with the left tail value or ends
/// with the right tail value; a constant function has an empty core anchored
/// at 0. Equality of canonical fields is semantic equality.
class ZSet {
public:
    ZSet() : neg_(Mult::zero()), pos_(Mult::zero()), lo_(0) {}  // empty set

    /// Canonicalizing constructor: `core[idx]` is the multiplicity of
    /// `lo + idx`; `neg` holds for all n < lo, `pos` for all n >= lo+size.
    static ZSet make(Mult neg, std::int64_t lo, std::vector<Mult> core, Mult pos);

    static ZSet empty() { return ZSet(); }
    static ZSet point(std::int64_t n) { return finite({n}); }
    static ZSet finite(const std::vector<std::int64_t>& pts);  // repeats add
    static ZSet interval(std::int64_t lo, std::int64_t hi);    // mult 1
    static ZSet up_ray(std::int64_t from);    // {n : n >= from}
    static ZSet down_ray(std::int64_t upto);  // {n : n <= upto}
    static ZSet all() { return constant(Mult::one()); }
    static ZSet constant(Mult m);

    Mult mult_at(std::int64_t n) const;
    Mult neg_tail() const { return neg_; }
    Mult pos_tail() const { return pos_; }
    std::int64_t core_lo() const { return lo_; }
    std::int64_t core_hi() const { return lo_ + static_cast<std::int64_t>(core_.size()) - 1; }
    std::span<const Mult> core() const { return core_; }

    bool is_empty() const { return neg_.is_zero() && pos_.is_zero() && core_.empty(); }
    bool is_plain() const;   // all multiplicities 0 or 1
    bool is_finite() const { return neg_.is_zero() && pos_.is_zero(); }
    bool bounded_below() const { return neg_.is_zero(); }
    bool bounded_above() const { return pos_.is_zero(); }

    std::optional<std::int64_t> min_support() const;  // nullopt: empty or unbounded
    std::optional<std::int64_t> max_support() const;
    Mult total_mass() const;  // requires finite support

    ZSet shifted(std::int64_t k) const;
    ZSet negated() const;  // mirror n -> -n
    /// Multiplicities of the complement; requires a plain set.
    ZSet complement_plain() const;
    /// Support points within [lo, hi].
    std::vector<std::int64_t> support_in(std::int64_t lo, std::int64_t hi) const;

    friend bool operator==(const ZSet& a, const ZSet& b);
    friend bool operator!=(const ZSet& a, const ZSet& b) { return !(a == b); }

    std::string str() const;  // debugging aid

private:
    Mult neg_, pos_;
    std::int64_t lo_;
    std::vector<Mult> core_;
};

/// Pointwise saturating sum of multiplicities (the coefficient-level "+").
ZSet disjoint_union(const ZSet& a, const ZSet& b);
/// Exact capped Minkowski product: mult(n) = sum over i+j=n of a(i)*b(j).
ZSet minkowski(const ZSet& a, const ZSet& b);
/// Pointwise truncated difference max(b - a, 0); throws CapAmbiguous when
/// some point's difference is not determined under the cap.
ZSet subtract(const ZSet& b, const ZSet& a);
/// Certain pointwise b >= a; unknown_at_cap when saturation hides the answer
/// (identical representations short-circuit to yes).
Tri dominates(const ZSet& b, const ZSet& a);

/// Plain-set union / intersection (pointwise max / min).
ZSet set_union(const ZSet& a, const ZSet& b);
ZSet set_intersect(const ZSet& a, const ZSet& b);
bool supports_intersect(const ZSet& a, const ZSet& b);
/// True iff every integer has multiplicity >= 1.
bool covers_all_integers(const ZSet& z);
/// True iff every support point of piece has multiplicity exactly 1 in z.
bool covered_exactly_once(const ZSet& z, const ZSet& piece);

}  // namespace macforge

#endif
