#ifndef MACFORGE_STRIP_HPP
#define MACFORGE_STRIP_HPP

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "macforge/zset.hpp"

namespace macforge {

/// A periodic strip of width m identified with Z via n = x + m*y: residue
/// class i is the i-th column, and a column's height profile is a ZSet.
class StripSet {
public:
    explicit StripSet(std::int64_t m);

    std::int64_t period() const { return m_; }
    const ZSet& col(std::int64_t i) const;
    void set_col(std::int64_t i, ZSet z);
    /// Saturating add of a column shape at residue i.
    void add_col(std::int64_t i, const ZSet& z);
    /// Plain-set union of a column shape at residue i.
    void union_col(std::int64_t i, const ZSet& z);
    void add_integer(std::int64_t n, Mult m = Mult::one());

    Mult mult_at(std::int64_t n) const;
    static std::pair<std::int64_t, std::int64_t> split(std::int64_t n, std::int64_t m);
    std::int64_t residue_of(std::int64_t n) const { return split(n, m_).first; }

    bool is_empty() const;
    bool is_plain() const;
    /// The whole strip shifted by an integer: residues rotate, heights carry.
    StripSet shifted(std::int64_t delta) const;
    std::vector<std::int64_t> support_in(std::int64_t lo, std::int64_t hi) const;

    friend bool operator==(const StripSet& a, const StripSet& b);
    friend bool operator!=(const StripSet& a, const StripSet& b) { return !(a == b); }

private:
    std::int64_t m_;
    std::vector<ZSet> cols_;
};

StripSet disjoint_union(const StripSet& a, const StripSet& b);
StripSet set_union(const StripSet& a, const StripSet& b);

/// A set of lattice points given column-by-column: x coordinate -> height
/// profile. Columns may be finite, bounded below, bounded above, or full;
/// workflows that need point sets validate plainness at the point of use.
struct Pattern {
    std::map<std::int64_t, ZSet> cols;

    std::set<std::int64_t> x_support() const;
    Pattern shifted_x(std::int64_t dx) const;
    Pattern negated() const;  // (x, y) -> (-x, -y)
    bool operator==(const Pattern& o) const { return cols == o.cols; }
};

struct ProjectResult {
    StripSet strip;
    bool collision;  // two distinct columns contributed to the same point
};

/// Project a pattern onto the width-m strip: the column at x lands on residue
/// x mod m with a height carry of floor(x/m). Multiplicities accumulate.
ProjectResult project(const Pattern& p, std::int64_t m);
/// The canonical preimage with x-support inside [0, m-1].
Pattern lift(const StripSet& s);

std::set<std::int64_t> x_support(const Pattern& p);

struct RangeStats {
    std::int64_t inner;  // clamped at 0 for single-block supports
    std::int64_t outer;
};
/// Block-gap statistics of a finite support: outer = max - min, inner = first
/// element of the last block minus last element of the first block.
RangeStats inner_outer_range(const std::set<std::int64_t>& xs);

struct LWitness {
    std::int64_t ell;
    std::set<std::int64_t> shifts;  // xs + shifts == [0, ell-1] exactly
};
/// Smallest interval length expressible as a union of horizontal translates
/// of xs with no spill, found by complete search. Always terminates: the
/// length outer+inner works for multi-block supports and outer+1 for a single
/// block.
LWitness min_consecutive_length(const std::set<std::int64_t>& xs);

/// Nonempty columns with their residues, in residue order.
std::vector<std::pair<ZSet, std::int64_t>> shape_list(const StripSet& s);

}  // namespace macforge

#endif
