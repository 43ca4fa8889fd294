#include "macforge/strip.hpp"

#include <algorithm>

namespace macforge {

StripSet::StripSet(std::int64_t m) : m_(m) {
    if (m < 1) throw Error("strip period must be >= 1");
    cols_.resize(static_cast<std::size_t>(m));
}

const ZSet& StripSet::col(std::int64_t i) const {
    if (i < 0 || i >= m_) throw Error("column index out of range");
    return cols_[static_cast<std::size_t>(i)];
}

void StripSet::set_col(std::int64_t i, ZSet z) {
    if (i < 0 || i >= m_) throw Error("column index out of range");
    cols_[static_cast<std::size_t>(i)] = std::move(z);
}

void StripSet::add_col(std::int64_t i, const ZSet& z) {
    set_col(i, disjoint_union(col(i), z));
}

void StripSet::union_col(std::int64_t i, const ZSet& z) { set_col(i, set_union(col(i), z)); }

void StripSet::add_integer(std::int64_t n, Mult m) {
    auto [r, h] = split(n, m_);
    add_col(r, ZSet::make(Mult::zero(), h, {m}, Mult::zero()));
}

std::pair<std::int64_t, std::int64_t> StripSet::split(std::int64_t n, std::int64_t m) {
    std::int64_t r = n % m;
    if (r < 0) r += m;
    return {r, (n - r) / m};
}

Mult StripSet::mult_at(std::int64_t n) const {
    auto [r, h] = split(n, m_);
    return cols_[static_cast<std::size_t>(r)].mult_at(h);
}

bool StripSet::is_empty() const {
    return std::all_of(cols_.begin(), cols_.end(), [](const ZSet& z) { return z.is_empty(); });
}

bool StripSet::is_plain() const {
    return std::all_of(cols_.begin(), cols_.end(), [](const ZSet& z) { return z.is_plain(); });
}

StripSet StripSet::shifted(std::int64_t delta) const {
    StripSet out(m_);
    for (std::int64_t r = 0; r < m_; ++r) {
        auto [nr, carry] = split(r + delta, m_);
        out.set_col(nr, cols_[static_cast<std::size_t>(r)].shifted(carry));
    }
    return out;
}

std::vector<std::int64_t> StripSet::support_in(std::int64_t lo, std::int64_t hi) const {
    std::vector<std::int64_t> out;
    for (std::int64_t n = lo; n <= hi; ++n)
        if (mult_at(n).positive()) out.push_back(n);
    return out;
}

bool operator==(const StripSet& a, const StripSet& b) {
    return a.m_ == b.m_ && a.cols_ == b.cols_;
}

StripSet disjoint_union(const StripSet& a, const StripSet& b) {
    if (a.period() != b.period()) throw Error("period mismatch");
    StripSet out(a.period());
    for (std::int64_t r = 0; r < a.period(); ++r)
        out.set_col(r, disjoint_union(a.col(r), b.col(r)));
    return out;
}

StripSet set_union(const StripSet& a, const StripSet& b) {
    if (a.period() != b.period()) throw Error("period mismatch");
    StripSet out(a.period());
    for (std::int64_t r = 0; r < a.period(); ++r) out.set_col(r, set_union(a.col(r), b.col(r)));
    return out;
}

std::set<std::int64_t> Pattern::x_support() const {
    std::set<std::int64_t> xs;
    for (const auto& [x, z] : cols)
        if (!z.is_empty()) xs.insert(x);
    return xs;
}

Pattern Pattern::shifted_x(std::int64_t dx) const {
    Pattern out;
    for (const auto& [x, z] : cols) out.cols.emplace(x + dx, z);
    return out;
}

Pattern Pattern::negated() const {
    Pattern out;
    for (const auto& [x, z] : cols) out.cols.emplace(-x, z.negated());
    return out;
}

ProjectResult project(const Pattern& p, std::int64_t m) {
    if (m < 1) throw Error("projection period must be >= 1");
    StripSet acc(m);
    bool collision = false;
    for (const auto& [x, z] : p.cols) {
        if (z.is_empty()) continue;
        auto [r, carry] = StripSet::split(x, m);
        ZSet shifted = z.shifted(carry);
        if (supports_intersect(acc.col(r), shifted)) collision = true;
        acc.add_col(r, shifted);
    }
    return {acc, collision};
}

Pattern lift(const StripSet& s) {
    Pattern p;
    for (std::int64_t r = 0; r < s.period(); ++r)
        if (!s.col(r).is_empty()) p.cols.emplace(r, s.col(r));
    return p;
}

std::set<std::int64_t> x_support(const Pattern& p) { return p.x_support(); }

namespace {

std::vector<std::pair<std::int64_t, std::int64_t>> blocks_of(const std::set<std::int64_t>& xs) {
    std::vector<std::pair<std::int64_t, std::int64_t>> blocks;
    for (std::int64_t x : xs) {
        if (!blocks.empty() && blocks.back().second == x - 1)
            blocks.back().second = x;
        else
            blocks.emplace_back(x, x);
    }
    return blocks;
}

}  // namespace

RangeStats inner_outer_range(const std::set<std::int64_t>& xs) {
    if (xs.empty()) throw Error("inner_outer_range of empty support");
    auto blocks = blocks_of(xs);
    std::int64_t outer = *xs.rbegin() - *xs.begin();
    std::int64_t inner = blocks.back().first - blocks.front().second;
    return {std::max<std::int64_t>(inner, 0), outer};
}

namespace {

// Exact-cover search: can translates of xs (no spill) cover [0, ell-1]?
// Leftmost-uncovered-first over per-point candidate shifts; overlaps allowed.
struct EllSearch {
    std::vector<std::int64_t> xs;
    std::int64_t ell;

    bool solve(std::uint64_t covered, std::set<std::int64_t>& picked) {
        std::uint64_t full = ell >= 64 ? ~0ull : (1ull << ell) - 1;
        if ((covered & full) == full) return true;
        std::int64_t u = 0;
        while (covered & (1ull << u)) ++u;
        for (std::int64_t x : xs) {
            std::int64_t q = u - x;
            if (q + xs.front() < 0 || q + xs.back() > ell - 1) continue;  // spill
            std::uint64_t mask = 0;
            for (std::int64_t y : xs) mask |= 1ull << (q + y);
            picked.insert(q);
            if (solve(covered | mask, picked)) return true;
            picked.erase(q);
        }
        return false;
    }
};

}  // namespace

LWitness min_consecutive_length(const std::set<std::int64_t>& xs) {
    if (xs.empty()) throw Error("min_consecutive_length of empty support");
    auto [inner, outer] = inner_outer_range(xs);
    std::int64_t base = *xs.begin();
    std::vector<std::int64_t> norm;
    for (std::int64_t x : xs) norm.push_back(x - base);

    std::int64_t limit = outer + inner + 1;
    if (limit > 62) throw Error("support too wide for the interval search");
    for (std::int64_t ell = 1; ell <= limit; ++ell) {
        EllSearch search{norm, ell};
        std::set<std::int64_t> picked;
        if (search.solve(0, picked)) {
            std::set<std::int64_t> shifts;
            for (std::int64_t q : picked) shifts.insert(q - base);
            return {ell, shifts};
        }
    }
    throw Error("min_consecutive_length: search bound exhausted");  // unreachable
}

std::vector<std::pair<ZSet, std::int64_t>> shape_list(const StripSet& s) {
    std::vector<std::pair<ZSet, std::int64_t>> out;
    for (std::int64_t r = 0; r < s.period(); ++r)
        if (!s.col(r).is_empty()) out.emplace_back(s.col(r), r);
    return out;
}

}  // namespace macforge
