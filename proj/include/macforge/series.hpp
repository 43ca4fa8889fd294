#ifndef MACFORGE_SERIES_HPP
#define MACFORGE_SERIES_HPP

#include <set>

#include "macforge/strip.hpp"

namespace macforge {

/// An element of the quotient ring of coefficient power series by the
/// relation x^m = q^{1}: m ZSet coefficients, exponents structurally reduced
/// into [0, m-1]. Multiplying two terms whose exponents wrap applies the
/// relation by Minkowski-shifting the coefficient by one.
class XiSeries {
public:
    explicit XiSeries(std::int64_t m);

    std::int64_t period() const { return m_; }
    const ZSet& coeff(std::int64_t i) const;
    void set_coeff(std::int64_t i, ZSet z);
    void add_coeff(std::int64_t i, const ZSet& z);  // saturating

    static XiSeries zero(std::int64_t m) { return XiSeries(m); }
    static XiSeries one(std::int64_t m);  // q^{0} x^0

    friend bool operator==(const XiSeries& a, const XiSeries& b);
    friend bool operator!=(const XiSeries& a, const XiSeries& b) { return !(a == b); }

private:
    std::int64_t m_;
    std::vector<ZSet> coeffs_;
};

XiSeries from_strip(const StripSet& s);
XiSeries mul(const XiSeries& a, const XiSeries& b);
XiSeries add(const XiSeries& a, const XiSeries& b);
/// Residues whose coefficient is nonzero.
std::set<std::int64_t> range(const XiSeries& s);
/// Coefficientwise domination, three-valued as for ZSets.
Tri dominates_series(const XiSeries& a, const XiSeries& b);

}  // namespace macforge

#endif
