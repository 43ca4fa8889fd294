#include "macforge/zset.hpp"

#include <algorithm>
#include <sstream>

namespace macforge {

namespace {

// Clamp helper for windowed pointwise operations.
struct Window {
    std::int64_t lo, hi;  // inclusive; lo > hi means empty
};

Window combined_window(const ZSet& a, const ZSet& b) {
    // One slot of slack on each side keeps boundary transitions inside the
    // window even when one operand's core is empty.
    std::int64_t lo = std::min(a.core_lo(), b.core_lo()) - 1;
    std::int64_t hi = std::max(a.core_hi(), b.core_hi()) + 1;
    return {lo, hi};
}

}  // namespace

ZSet ZSet::make(Mult neg, std::int64_t lo, std::vector<Mult> core, Mult pos) {
    // Tighten: drop leading entries equal to the left tail, trailing entries
    // equal to the right tail.
    std::size_t b = 0, e = core.size();
    while (b < e && core[b] == neg) ++b;
    while (e > b && core[e - 1] == pos) --e;
    ZSet z;
    z.neg_ = neg;
    z.pos_ = pos;
    if (b == e) {
        if (neg == pos) {
            z.lo_ = 0;  // constant function, boundary position meaningless
        } else {
            z.lo_ = lo + static_cast<std::int64_t>(b);
        }
        return z;
    }
    z.lo_ = lo + static_cast<std::int64_t>(b);
    z.core_.assign(core.begin() + b, core.begin() + e);
    return z;
}

ZSet ZSet::finite(const std::vector<std::int64_t>& pts) {
    if (pts.empty()) return empty();
    auto [mn, mx] = std::minmax_element(pts.begin(), pts.end());
    std::vector<Mult> core(static_cast<std::size_t>(*mx - *mn + 1), Mult::zero());
    for (std::int64_t p : pts) core[p - *mn] = core[p - *mn] + Mult::one();
    return make(Mult::zero(), *mn, std::move(core), Mult::zero());
}

ZSet ZSet::interval(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) return empty();
    std::vector<Mult> core(static_cast<std::size_t>(hi - lo + 1), Mult::one());
    return make(Mult::zero(), lo, std::move(core), Mult::zero());
}

ZSet ZSet::up_ray(std::int64_t from) {
    return make(Mult::zero(), from, {Mult::one()}, Mult::one());
}

ZSet ZSet::down_ray(std::int64_t upto) {
    return make(Mult::one(), upto, {Mult::one()}, Mult::zero());
}

ZSet ZSet::constant(Mult m) { return make(m, 0, {}, m); }

Mult ZSet::mult_at(std::int64_t n) const {
    if (n < lo_) return neg_;
    std::int64_t idx = n - lo_;
    if (idx >= static_cast<std::int64_t>(core_.size())) return pos_;
    return core_[static_cast<std::size_t>(idx)];
}

bool ZSet::is_plain() const {
    auto ok = [](Mult m) { return !m.is_saturated() && m.count() <= 1; };
    if (!ok(neg_) || !ok(pos_)) return false;
    return std::all_of(core_.begin(), core_.end(), ok);
}

std::optional<std::int64_t> ZSet::min_support() const {
    if (neg_.positive() || is_empty()) return std::nullopt;
    for (std::size_t i = 0; i < core_.size(); ++i)
        if (core_[i].positive()) return lo_ + static_cast<std::int64_t>(i);
    // core exhausted: support starts where the positive tail begins
    if (pos_.positive()) return lo_ + static_cast<std::int64_t>(core_.size());
    return std::nullopt;
}

std::optional<std::int64_t> ZSet::max_support() const {
    if (pos_.positive() || is_empty()) return std::nullopt;
    for (std::size_t i = core_.size(); i-- > 0;)
        if (core_[i].positive()) return lo_ + static_cast<std::int64_t>(i);
    if (neg_.positive()) return lo_ - 1;
    return std::nullopt;
}

Mult ZSet::total_mass() const {
    if (!is_finite()) throw Error("total_mass on infinite set");
    Mult s = Mult::zero();
    for (Mult m : core_) s = s + m;
    return s;
}

ZSet ZSet::shifted(std::int64_t k) const {
    ZSet z = *this;
    z.lo_ += k;
    return z;
}

ZSet ZSet::negated() const {
    std::vector<Mult> core(core_.rbegin(), core_.rend());
    return make(pos_, -core_hi(), std::move(core), neg_);
}

ZSet ZSet::complement_plain() const {
    if (!is_plain()) throw Error("complement of a non-plain set");
    auto flip = [](Mult m) { return m.positive() ? Mult::zero() : Mult::one(); };
    std::vector<Mult> core(core_.size());
    std::transform(core_.begin(), core_.end(), core.begin(), flip);
    return make(flip(neg_), lo_, std::move(core), flip(pos_));
}

std::vector<std::int64_t> ZSet::support_in(std::int64_t lo, std::int64_t hi) const {
    std::vector<std::int64_t> out;
    for (std::int64_t n = lo; n <= hi; ++n)
        if (mult_at(n).positive()) out.push_back(n);
    return out;
}

bool operator==(const ZSet& a, const ZSet& b) {
    return a.neg_ == b.neg_ && a.pos_ == b.pos_ && a.lo_ == b.lo_ && a.core_ == b.core_;
}

std::string ZSet::str() const {
    std::ostringstream os;
    os << "[.." << neg_.str() << " |" << lo_ << ":";
    for (Mult m : core_) os << " " << m.str();
    os << " | " << pos_.str() << "..]";
    return os.str();
}

namespace {

template <typename F>
ZSet pointwise(const ZSet& a, const ZSet& b, F f) {
    Window w = combined_window(a, b);
    std::vector<Mult> core;
    core.reserve(static_cast<std::size_t>(w.hi - w.lo + 1));
    for (std::int64_t n = w.lo; n <= w.hi; ++n) core.push_back(f(a.mult_at(n), b.mult_at(n), n));
    return ZSet::make(f(a.neg_tail(), b.neg_tail(), w.lo - 1), w.lo, std::move(core),
                      f(a.pos_tail(), b.pos_tail(), w.hi + 1));
}

}  // namespace

ZSet disjoint_union(const ZSet& a, const ZSet& b) {
    return pointwise(a, b, [](Mult x, Mult y, std::int64_t) { return x + y; });
}

ZSet set_union(const ZSet& a, const ZSet& b) {
    return pointwise(a, b, [](Mult x, Mult y, std::int64_t) {
        return Mult::compare(x, y) == Mult::Cmp::lt ? y : x;
    });
}

ZSet set_intersect(const ZSet& a, const ZSet& b) {
    return pointwise(a, b, [](Mult x, Mult y, std::int64_t) {
        return Mult::compare(x, y) == Mult::Cmp::lt ? x : y;
    });
}

ZSet subtract(const ZSet& b, const ZSet& a) {
    return pointwise(b, a, [](Mult x, Mult y, std::int64_t n) {
        if (x.is_saturated()) {
            if (y.is_zero()) return Mult::saturated();
            throw CapAmbiguous(n);  // >=K minus nonzero: exact value unknowable
        }
        if (y.is_saturated()) return Mult::zero();  // x < K <= y
        return Mult::exact(std::max<std::int64_t>(x.count() - y.count(), 0));
    });
}

Tri dominates(const ZSet& b, const ZSet& a) {
    if (a == b) return Tri::yes;  // reflexive even at cap
    bool unknown = false;
    Window w = combined_window(a, b);
    auto probe = [&](Mult x, Mult y) -> bool {  // returns false on certain violation
        switch (Mult::compare(x, y)) {
            case Mult::Cmp::lt: return false;
            case Mult::Cmp::unknown: unknown = true; return true;
            default: return true;
        }
    };
    if (!probe(b.neg_tail(), a.neg_tail())) return Tri::no;
    if (!probe(b.pos_tail(), a.pos_tail())) return Tri::no;
    for (std::int64_t n = w.lo; n <= w.hi; ++n)
        if (!probe(b.mult_at(n), a.mult_at(n))) return Tri::no;
    return unknown ? Tri::unknown_at_cap : Tri::yes;
}

bool supports_intersect(const ZSet& a, const ZSet& b) {
    if (a.neg_tail().positive() && b.neg_tail().positive()) return true;
    if (a.pos_tail().positive() && b.pos_tail().positive()) return true;
    Window w = combined_window(a, b);
    for (std::int64_t n = w.lo; n <= w.hi; ++n)
        if (a.mult_at(n).positive() && b.mult_at(n).positive()) return true;
    return false;
}

bool covers_all_integers(const ZSet& z) {
    if (!z.neg_tail().positive() || !z.pos_tail().positive()) return false;
    for (Mult m : z.core())
        if (!m.positive()) return false;
    return true;
}

bool covered_exactly_once(const ZSet& z, const ZSet& piece) {
    if (piece.neg_tail().positive() && !z.neg_tail().is_one()) return false;
    if (piece.pos_tail().positive() && !z.pos_tail().is_one()) return false;
    Window w = combined_window(z, piece);
    for (std::int64_t n = w.lo; n <= w.hi; ++n)
        if (piece.mult_at(n).positive() && !z.mult_at(n).is_one()) return false;
    return true;
}

// --- Minkowski product -----------------------------------------------------
//
// Decompose each operand into (finite core) | (scaled up ray) | (scaled down
// ray), multiply the pieces pairwise with closed forms, and fold the results
// with disjoint_union. A nonzero lower tail meeting a nonzero upper tail
// yields infinitely many contributions at every integer, i.e. the saturated
// constant.

namespace {

ZSet core_part(const ZSet& z) {
    std::vector<Mult> c(z.core().begin(), z.core().end());
    return ZSet::make(Mult::zero(), z.core_lo(), std::move(c), Mult::zero());
}

// prefix[i] = saturating sum of core multiplicities up to index i
std::vector<Mult> prefix_sums(const ZSet& fin) {
    std::vector<Mult> p;
    p.reserve(fin.core().size());
    Mult acc = Mult::zero();
    for (Mult m : fin.core()) {
        acc = acc + m;
        p.push_back(acc);
    }
    return p;
}

ZSet fin_times_fin(const ZSet& a, const ZSet& b) {
    if (a.is_empty() || b.is_empty()) return ZSet::empty();
    std::int64_t lo = a.core_lo() + b.core_lo();
    std::int64_t hi = a.core_hi() + b.core_hi();
    std::vector<Mult> core(static_cast<std::size_t>(hi - lo + 1), Mult::zero());
    for (std::int64_t i = a.core_lo(); i <= a.core_hi(); ++i) {
        Mult ai = a.mult_at(i);
        if (ai.is_zero()) continue;
        for (std::int64_t j = b.core_lo(); j <= b.core_hi(); ++j) {
            Mult bj = b.mult_at(j);
            if (bj.is_zero()) continue;
            core[i + j - lo] = core[i + j - lo] + ai * bj;
        }
    }
    return ZSet::make(Mult::zero(), lo, std::move(core), Mult::zero());
}

// fin (+) c*[s, inf): value at n is c * (mass of fin up to n-s)
ZSet fin_times_upray(const ZSet& fin, std::int64_t s, Mult c) {
    if (fin.is_empty()) return ZSet::empty();
    auto pre = prefix_sums(fin);
    std::int64_t lo = fin.core_lo() + s;
    std::vector<Mult> core(pre.size());
    for (std::size_t i = 0; i < pre.size(); ++i) core[i] = c * pre[i];
    return ZSet::make(Mult::zero(), lo, std::move(core), c * pre.back());
}

ZSet fin_times_downray(const ZSet& fin, std::int64_t s, Mult c) {
    return fin_times_upray(fin.negated(), -s, c).negated();
}

// c*[s, inf) (+) d*[t, inf): value at n is c*d*max(n-s-t+1, 0)
ZSet up_times_up(std::int64_t s, Mult c, std::int64_t t, Mult d) {
    Mult cd = c * d;
    std::int64_t lo = s + t;
    std::vector<Mult> core;
    for (std::int64_t k = 1; k <= mult_cap(); ++k) core.push_back(cd * Mult::exact(k));
    return ZSet::make(Mult::zero(), lo, std::move(core),
                      cd.positive() ? Mult::saturated() : Mult::zero());
}

}  // namespace

ZSet minkowski(const ZSet& a, const ZSet& b) {
    if (a.is_empty() || b.is_empty()) return ZSet::empty();
    bool a_below = a.neg_tail().positive(), a_above = a.pos_tail().positive();
    bool b_below = b.neg_tail().positive(), b_above = b.pos_tail().positive();
    if ((a_below && b_above) || (a_above && b_below))
        return ZSet::constant(Mult::saturated());

    struct Ray {
        std::int64_t start;
        Mult scale;
        bool up;
    };
    auto pieces = [](const ZSet& z) {
        std::vector<Ray> rays;
        if (z.pos_tail().positive()) rays.push_back({z.core_hi() + 1, z.pos_tail(), true});
        if (z.neg_tail().positive()) rays.push_back({z.core_lo() - 1, z.neg_tail(), false});
        return rays;
    };

    ZSet afin = core_part(a), bfin = core_part(b);
    ZSet acc = fin_times_fin(afin, bfin);
    for (const Ray& r : pieces(b))
        acc = disjoint_union(acc, r.up ? fin_times_upray(afin, r.start, r.scale)
                                       : fin_times_downray(afin, r.start, r.scale));
    for (const Ray& r : pieces(a))
        acc = disjoint_union(acc, r.up ? fin_times_upray(bfin, r.start, r.scale)
                                       : fin_times_downray(bfin, r.start, r.scale));
    for (const Ray& ra : pieces(a))
        for (const Ray& rb : pieces(b)) {
            // mixed directions were excluded above
            ZSet p = ra.up ? up_times_up(ra.start, ra.scale, rb.start, rb.scale)
                           : up_times_up(-ra.start, ra.scale, -rb.start, rb.scale).negated();
            acc = disjoint_union(acc, p);
        }
    return acc;
}

}  // namespace macforge
