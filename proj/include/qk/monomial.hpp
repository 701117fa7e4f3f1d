#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "qk/errors.hpp"
#include "qk/kernels.hpp"

namespace qk {

// Hard bound on ring variables so variable subsets fit in a 16-bit mask;
// every q-Max / height algorithm iterates over such subsets.
inline constexpr int kMaxVars = kern::kLanes;
// Per-variable exponent cap; exceeding it is a hard error, never wraparound.
inline constexpr uint16_t kMaxExponent = kern::kExpCap;

// A power product in up to 16 variables. Exponents live in a fixed 16-lane
// vector (unused lanes zero) so the kernels can treat them uniformly; the
// total degree is cached.
class Monomial {
public:
    Monomial() : exp_{}, degree_(0), nvars_(0) {}

    static Monomial one(int nvars) {
        Monomial m;
        m.nvars_ = check_nvars(nvars);
        return m;
    }

    static Monomial var(int nvars, int index, uint16_t exponent = 1) {
        Monomial m = one(nvars);
        m.set_exponent(index, exponent);
        return m;
    }

    static Monomial from_exponents(std::span<const uint16_t> exps) {
        Monomial m = one(static_cast<int>(exps.size()));
        for (size_t i = 0; i < exps.size(); ++i) m.set_exponent(static_cast<int>(i), exps[i]);
        return m;
    }

    int nvars() const { return nvars_; }
    uint32_t total_degree() const { return degree_; }
    bool is_one() const { return degree_ == 0; }

    uint16_t exponent(int i) const {
        if (i < 0 || i >= nvars_) throw StructuralError("variable index out of range");
        return exp_[static_cast<size_t>(i)];
    }

    void set_exponent(int i, uint16_t e) {
        if (i < 0 || i >= nvars_) throw StructuralError("variable index out of range");
        if (e > kMaxExponent)
            throw StructuralError("exponent " + std::to_string(e) + " exceeds cap " +
                                  std::to_string(kMaxExponent));
        degree_ += e;
        degree_ -= exp_[static_cast<size_t>(i)];
        exp_[static_cast<size_t>(i)] = e;
    }

    const uint16_t* data() const { return exp_.data(); }

    // bit i set iff variable i occurs
    uint32_t support() const { return kern::active().support(exp_.data()); }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.nvars_ == b.nvars_ && kern::active().equal(a.exp_.data(), b.exp_.data());
    }

    // Reinterpret in a ring with more variables (new lanes zero).
    Monomial widened(int new_nvars) const {
        if (new_nvars < nvars_) throw StructuralError("widened: fewer variables");
        Monomial m = *this;
        m.nvars_ = check_nvars(new_nvars);
        return m;
    }

    // Project onto the variables NOT in drop_mask, preserving relative order.
    // Pre: no dropped variable occurs.
    Monomial projected(uint32_t drop_mask) const;

    // Copy with the exponents of every variable in mask set to zero.
    Monomial with_vars_erased(uint32_t mask) const {
        Monomial m = *this;
        for (int i = 0; i < nvars_; ++i)
            if (mask & (1u << i)) m.set_exponent(i, 0);
        return m;
    }

private:
    static int check_nvars(int n) {
        if (n < 0 || n > kMaxVars)
            throw StructuralError("variable count " + std::to_string(n) + " outside [0, " +
                                  std::to_string(kMaxVars) + "]");
        return n;
    }

    friend class MonomialOps;

    alignas(32) std::array<uint16_t, kern::kLanes> exp_;
    uint32_t degree_;
    int nvars_;
};

// Kernel-backed binary operations; arity mismatches are structural errors.
Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b);
// b / a; pre: a divides b
Monomial mono_quotient(const Monomial& b, const Monomial& a);
std::optional<Monomial> mono_try_quotient(const Monomial& b, const Monomial& a);
Monomial mono_lcm(const Monomial& a, const Monomial& b);
Monomial mono_gcd(const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);

} // namespace qk
