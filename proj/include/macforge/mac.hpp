#ifndef MACFORGE_MAC_HPP
#define MACFORGE_MAC_HPP

#include <string>
#include <vector>

#include "macforge/series.hpp"

namespace macforge {

/// One part of a minimality certificate: a sub-shape of one column of C,
/// together with a translation w in W that lands the part in targetResidue's
/// column where each of its points ends up covered exactly once.
struct Part {
    ZSet piece;                  // heights, a subset of C's column
    std::int64_t piece_residue;  // which column of C the piece lives in
    std::int64_t w;              // an element of W, as an integer
    std::int64_t target_residue;
};

/// A complement together with finite evidence that every element of C is
/// needed: the pieces partition C, and each piece has a translate covered
/// exactly once in the product.
struct MacCertificate {
    std::int64_t m;
    StripSet c;
    StripSet w;
    std::vector<Part> parts;
};

enum class FailureKind { structure, coverage, minimality };

struct Failure {
    FailureKind kind;
    std::int64_t residue;
    std::int64_t point;  // height within the residue's column
    std::string detail;
};

struct VerifyReport {
    bool covered = false;
    bool minimal = false;
    bool window_bounded = false;  // evidence only, not proof
    std::vector<Failure> failures;
    bool ok() const { return covered && minimal; }
};

/// C + W covers every integer: each product coefficient has multiplicity
/// >= 1 everywhere.
bool is_complement(const StripSet& c, const StripSet& w);

/// Full certificate check: structural partition validity, coverage, and
/// exactly-once coverage of every part's translate.
VerifyReport check_certificate(const MacCertificate& cert);

/// Brute-force check on a window of integers, with both sets truncated one
/// window-span beyond it. Coverage of [lo, hi]; for each c in C inside the
/// window, search for a point covered only through c. Necessary evidence,
/// not proof; the report says so.
VerifyReport window_oracle(const StripSet& c, const StripSet& w, std::int64_t lo,
                           std::int64_t hi);

struct M2Result {
    bool witness_found = false;
    std::vector<std::int64_t> witness;  // elements of W, odd integers
    std::string note;
};

/// Width-2 criterion: C = 2N u B u F arises as a MAC iff the complement of
/// the even part equals F + W for some W. Searches for such a W; a negative
/// answer is bounded by the search budget and labelled as such.
M2Result m2_criterion(const StripSet& c, std::int64_t search_bound);

}  // namespace macforge

#endif
