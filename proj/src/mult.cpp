#include "macforge/mult.hpp"

namespace macforge {

namespace {
int g_cap = 4;
}

int mult_cap() noexcept { return g_cap; }

void set_mult_cap(int k) {
    if (k < 2) throw Error("mult cap must be >= 2, got " + std::to_string(k));
    g_cap = k;
}

CapGuard::CapGuard(int k) : prev_(g_cap) { set_mult_cap(k); }
CapGuard::~CapGuard() { g_cap = prev_; }

Mult Mult::exact(std::int64_t count) {
    if (count < 0) throw Error("negative multiplicity");
    if (count >= g_cap) return saturated();
    return Mult(static_cast<std::int32_t>(count));
}

Mult Mult::saturated() noexcept { return Mult(-1); }

std::int64_t Mult::count() const {
    if (is_saturated()) throw Error("count() on saturated multiplicity");
    return c_;
}

Mult operator+(Mult a, Mult b) {
    if (a.is_saturated() || b.is_saturated()) return Mult::saturated();
    return Mult::exact(static_cast<std::int64_t>(a.c_) + b.c_);
}

Mult operator*(Mult a, Mult b) {
    if (a.is_zero() || b.is_zero()) return Mult::zero();
    if (a.is_saturated() || b.is_saturated()) return Mult::saturated();
    return Mult::exact(static_cast<std::int64_t>(a.c_) * b.c_);
}

Mult::Cmp Mult::compare(Mult a, Mult b) noexcept {
    if (a.is_saturated() && b.is_saturated()) return Cmp::unknown;
    if (a.is_saturated()) return Cmp::gt;  // >=K vs exact <K
    if (b.is_saturated()) return Cmp::lt;
    if (a.c_ < b.c_) return Cmp::lt;
    if (a.c_ > b.c_) return Cmp::gt;
    return Cmp::eq;
}

std::string Mult::str() const {
    if (is_saturated()) return ">=" + std::to_string(g_cap);
    return std::to_string(c_);
}

}  // namespace macforge
