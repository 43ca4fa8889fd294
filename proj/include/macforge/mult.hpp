#ifndef MACFORGE_MULT_HPP
#define MACFORGE_MULT_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace macforge {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Saturating-cap configuration. The cap K is set once per context (process
/// or test scope) before values are computed, never mutated mid-computation.
/// K >= 2 always: verification logic must distinguish multiplicity 1 from >=2.
int mult_cap() noexcept;
void set_mult_cap(int k);

/// RAII scope for tests that need a non-default cap.
class CapGuard {
public:
    explicit CapGuard(int k);
    ~CapGuard();
    CapGuard(const CapGuard&) = delete;
    CapGuard& operator=(const CapGuard&) = delete;

private:
    int prev_;
};

/// A multiplicity that is exact below the cap K and saturates at ">=K".
/// Addition and multiplication saturate; comparison against a saturated
/// value on both sides is not decidable and is reported as such.
class Mult {
public:
    constexpr Mult() noexcept : c_(0) {}

    static Mult exact(std::int64_t count);  // clamps into [0,K-1] or saturates
    static Mult saturated() noexcept;
    static Mult zero() noexcept { return Mult(); }
    static Mult one() { return exact(1); }

    bool is_saturated() const noexcept { return c_ < 0; }
    bool is_zero() const noexcept { return c_ == 0; }
    /// Nonzero under cap semantics (saturated counts as nonzero).
    bool positive() const noexcept { return c_ != 0; }
    /// Exactly one, not saturated.
    bool is_one() const noexcept { return c_ == 1; }
    /// Exact count; only meaningful when !is_saturated().
    std::int64_t count() const;

    friend Mult operator+(Mult a, Mult b);
    friend Mult operator*(Mult a, Mult b);
    friend bool operator==(Mult a, Mult b) noexcept { return a.c_ == b.c_; }
    friend bool operator!=(Mult a, Mult b) noexcept { return a.c_ != b.c_; }

    /// Truth-level comparison under cap semantics.
    enum class Cmp { lt, eq, gt, unknown };
    static Cmp compare(Mult a, Mult b) noexcept;

    std::string str() const;

private:
    explicit constexpr Mult(std::int32_t raw) noexcept : c_(raw) {}
    std::int32_t c_;  // [0, K-1] exact, -1 saturated
};

/// Three-valued verdict used wherever saturation can hide the exact answer.
enum class Tri { no, yes, unknown_at_cap };

}  // namespace macforge

#endif
