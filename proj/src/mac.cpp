#include "macforge/mac.hpp"

#include <algorithm>
#include <unordered_set>

#include "macforge/witness.hpp"

namespace macforge {

namespace {

// A height witnessing that z is not all of Z.
std::int64_t find_uncovered(const ZSet& z) {
    if (!z.neg_tail().positive()) return z.core_lo() - 1;
    for (std::int64_t n = z.core_lo(); n <= z.core_hi(); ++n)
        if (!z.mult_at(n).positive()) return n;
    return z.core_hi() + 1;  // pos tail must be the problem
}

std::int64_t first_difference(const ZSet& a, const ZSet& b) {
    if (a.neg_tail() != b.neg_tail()) return std::min(a.core_lo(), b.core_lo()) - 1;
    std::int64_t lo = std::min(a.core_lo(), b.core_lo());
    std::int64_t hi = std::max(a.core_hi(), b.core_hi());
    for (std::int64_t n = lo; n <= hi; ++n)
        if (a.mult_at(n) != b.mult_at(n)) return n;
    return hi + 1;
}

}  // namespace

bool is_complement(const StripSet& c, const StripSet& w) {
    if (c.period() != w.period()) throw Error("period mismatch");
    XiSeries prod = mul(from_strip(c), from_strip(w));
    for (std::int64_t i = 0; i < c.period(); ++i)
        if (!covers_all_integers(prod.coeff(i))) return false;
    return true;
}

VerifyReport check_certificate(const MacCertificate& cert) {
    VerifyReport rep;
    auto structural = [&](std::int64_t residue, std::int64_t point, std::string what) {
        rep.failures.push_back({FailureKind::structure, residue, point, std::move(what)});
    };

    if (cert.c.period() != cert.m || cert.w.period() != cert.m) {
        structural(0, 0, "certificate period disagrees with its strip sets");
        return rep;
    }
    if (!cert.c.is_plain()) structural(0, 0, "C is not a plain set");
    if (!cert.w.is_plain()) structural(0, 0, "W is not a plain set");

    // The pieces, placed at their residues, must partition C exactly.
    StripSet assembled(cert.m);
    for (std::size_t pi = 0; pi < cert.parts.size(); ++pi) {
        const Part& p = cert.parts[pi];
        if (p.piece_residue < 0 || p.piece_residue >= cert.m || p.target_residue < 0 ||
            p.target_residue >= cert.m) {
            structural(p.piece_residue, 0, "part residue out of range");
            continue;
        }
        std::int64_t diff = p.piece_residue + p.w - p.target_residue;
        if (((diff % cert.m) + cert.m) % cert.m != 0)
            structural(p.piece_residue, p.w, "part translate lands outside its target column");
        if (!cert.w.mult_at(p.w).positive())
            structural(p.target_residue, p.w, "part translate is not an element of W");
        assembled.add_col(p.piece_residue, p.piece);
    }
    for (std::int64_t r = 0; r < cert.m; ++r) {
        if (assembled.col(r) != cert.c.col(r)) {
            structural(r, first_difference(assembled.col(r), cert.c.col(r)),
                       "parts do not partition C in this column");
        }
    }

    XiSeries prod = mul(from_strip(cert.c), from_strip(cert.w));
    rep.covered = true;
    for (std::int64_t i = 0; i < cert.m; ++i) {
        if (!covers_all_integers(prod.coeff(i))) {
            rep.covered = false;
            rep.failures.push_back(
                {FailureKind::coverage, i, find_uncovered(prod.coeff(i)), "point not covered"});
        }
    }

    bool structure_ok =
        std::none_of(rep.failures.begin(), rep.failures.end(),
                     [](const Failure& f) { return f.kind == FailureKind::structure; });
    rep.minimal = structure_ok;
    if (structure_ok) {
        for (const Part& p : cert.parts) {
            std::int64_t shift = (p.piece_residue + p.w - p.target_residue) / cert.m;
            ZSet translated = p.piece.shifted(shift);
            const ZSet& coeff = prod.coeff(p.target_residue);
            if (!covered_exactly_once(coeff, translated)) {
                rep.minimal = false;
                std::int64_t bad = 0;
                if (translated.neg_tail().positive() && !coeff.neg_tail().is_one()) {
                    bad = std::min(coeff.core_lo(), translated.core_lo()) - 1;
                } else if (translated.pos_tail().positive() && !coeff.pos_tail().is_one()) {
                    bad = std::max(coeff.core_hi(), translated.core_hi()) + 1;
                } else {
                    for (std::int64_t n = std::min(coeff.core_lo(), translated.core_lo());
                         n <= std::max(coeff.core_hi(), translated.core_hi()); ++n)
                        if (translated.mult_at(n).positive() && !coeff.mult_at(n).is_one()) {
                            bad = n;
                            break;
                        }
                }
                rep.failures.push_back({FailureKind::minimality, p.target_residue, bad,
                                        "translate point not covered exactly once"});
            }
        }
    }
    return rep;
}

VerifyReport window_oracle(const StripSet& c, const StripSet& w, std::int64_t lo,
                           std::int64_t hi) {
    if (lo >= hi) throw Error("window_oracle requires lo < hi");
    if (c.period() != w.period()) throw Error("period mismatch");
    VerifyReport rep;
    rep.window_bounded = true;

    const std::int64_t margin = hi - lo;
    auto cs = c.support_in(lo - margin, hi + margin);
    auto ws = w.support_in(lo - margin, hi + margin);
    std::unordered_set<std::int64_t> wset(ws.begin(), ws.end());

    auto count = [&](std::int64_t n) {
        std::int64_t k = 0;
        for (std::int64_t ci : cs)
            if (wset.count(n - ci)) ++k;
        return k;
    };

    rep.covered = true;
    for (std::int64_t n = lo; n <= hi; ++n) {
        if (count(n) == 0) {
            rep.covered = false;
            auto [r, h] = StripSet::split(n, c.period());
            rep.failures.push_back({FailureKind::coverage, r, h, "uncovered in window"});
            if (rep.failures.size() > 16) break;
        }
    }

    std::vector<std::int64_t> counts(static_cast<std::size_t>(2 * margin + (hi - lo) + 1));
    for (std::int64_t n = lo - margin; n <= hi + margin; ++n)
        counts[static_cast<std::size_t>(n - lo + margin)] = count(n);

    rep.minimal = true;
    for (std::int64_t ci : cs) {
        if (ci < lo || ci > hi) continue;
        bool has_dependent = false;
        for (std::int64_t d = lo - margin; d <= hi + margin && !has_dependent; ++d) {
            std::int64_t without = counts[static_cast<std::size_t>(d - lo + margin)] -
                                   (wset.count(d - ci) ? 1 : 0);
            if (without == 0) has_dependent = true;
        }
        if (!has_dependent) {
            rep.minimal = false;
            auto [r, h] = StripSet::split(ci, c.period());
            rep.failures.push_back(
                {FailureKind::minimality, r, h, "no dependent point inside the window"});
        }
    }
    return rep;
}

M2Result m2_criterion(const StripSet& c, std::int64_t search_bound) {
    if (c.period() != 2) throw Error("m2_criterion expects period 2");
    if (!c.is_plain()) throw Error("m2_criterion expects a plain set");
    const ZSet& k = c.col(0);
    const ZSet& f = c.col(1);
    if (!k.pos_tail().is_one()) throw Error("even column must contain an upward ray");
    if (f.is_empty() || !f.is_finite()) throw Error("odd column must be finite and nonempty");

    M2Result out;
    ZSet target = k.complement_plain();
    if (target.is_empty()) {
        out.note = "even column already covers its class; a nonempty F admits no witness";
        return out;
    }
    // Heights: (1+2a) + (1+2b) = 2(a+b+1), so cover target by F-heights + 1.
    auto wbar = cover_by_translates(minkowski(f, ZSet::point(1)), target, search_bound);
    if (!wbar) {
        out.note = "no witness within the search budget (bounded negative, not a proof)";
        return out;
    }
    out.witness_found = true;
    // Report a finite sample of W when it is infinite.
    std::int64_t wlo = wbar->bounded_below() ? wbar->min_support().value_or(0)
                                             : wbar->core_lo() - 4;
    std::int64_t whi = wbar->bounded_above() ? wbar->max_support().value_or(0)
                                             : wbar->core_hi() + 4;
    for (std::int64_t h : wbar->support_in(wlo, whi)) out.witness.push_back(1 + 2 * h);
    out.note = wbar->is_finite() ? "witness is the full finite W"
                                 : "witness sampled from an infinite W (ray continues)";
    return out;
}

}  // namespace macforge
