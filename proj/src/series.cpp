#include "macforge/series.hpp"

#include <cassert>

namespace macforge {

XiSeries::XiSeries(std::int64_t m) : m_(m) {
    if (m < 1) throw Error("series period must be >= 1");
    coeffs_.resize(static_cast<std::size_t>(m));
}

const ZSet& XiSeries::coeff(std::int64_t i) const {
    if (i < 0 || i >= m_) throw Error("coefficient index out of range");
    return coeffs_[static_cast<std::size_t>(i)];
}

void XiSeries::set_coeff(std::int64_t i, ZSet z) {
    if (i < 0 || i >= m_) throw Error("coefficient index out of range");
    coeffs_[static_cast<std::size_t>(i)] = std::move(z);
}

void XiSeries::add_coeff(std::int64_t i, const ZSet& z) {
    set_coeff(i, disjoint_union(coeff(i), z));
}

XiSeries XiSeries::one(std::int64_t m) {
    XiSeries s(m);
    s.set_coeff(0, ZSet::point(0));
    return s;
}

bool operator==(const XiSeries& a, const XiSeries& b) {
    return a.m_ == b.m_ && a.coeffs_ == b.coeffs_;
}

XiSeries from_strip(const StripSet& s) {
    XiSeries out(s.period());
    for (std::int64_t i = 0; i < s.period(); ++i) out.set_coeff(i, s.col(i));
    return out;
}

XiSeries mul(const XiSeries& a, const XiSeries& b) {
    if (a.period() != b.period()) throw Error("period mismatch");
    const std::int64_t m = a.period();
    XiSeries out(m);
    for (std::int64_t i = 0; i < m; ++i) {
        if (a.coeff(i).is_empty()) continue;
        for (std::int64_t j = 0; j < m; ++j) {
            if (b.coeff(j).is_empty()) continue;
            std::int64_t e = i + j;
            assert(e < 2 * m);  // at most one application of x^m = q^1
            std::int64_t carry = e >= m ? 1 : 0;
            out.add_coeff(e - carry * m, minkowski(a.coeff(i), b.coeff(j)).shifted(carry));
        }
    }
    return out;
}

XiSeries add(const XiSeries& a, const XiSeries& b) {
    if (a.period() != b.period()) throw Error("period mismatch");
    XiSeries out(a.period());
    for (std::int64_t i = 0; i < a.period(); ++i)
        out.set_coeff(i, disjoint_union(a.coeff(i), b.coeff(i)));
    return out;
}

std::set<std::int64_t> range(const XiSeries& s) {
    std::set<std::int64_t> r;
    for (std::int64_t i = 0; i < s.period(); ++i)
        if (!s.coeff(i).is_empty()) r.insert(i);
    return r;
}

Tri dominates_series(const XiSeries& a, const XiSeries& b) {
    if (a.period() != b.period()) throw Error("period mismatch");
    bool unknown = false;
    for (std::int64_t i = 0; i < a.period(); ++i) {
        switch (dominates(a.coeff(i), b.coeff(i))) {
            case Tri::no: return Tri::no;
            case Tri::unknown_at_cap: unknown = true; break;
            case Tri::yes: break;
        }
    }
    return unknown ? Tri::unknown_at_cap : Tri::yes;
}

}  // namespace macforge
