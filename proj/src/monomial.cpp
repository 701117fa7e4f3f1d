#include "qk/monomial.hpp"

namespace qk {

namespace {
void check_arity(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars())
        throw StructuralError("monomial arity mismatch: " + std::to_string(a.nvars()) + " vs " +
                              std::to_string(b.nvars()));
}
} // namespace

class MonomialOps {
public:
    static Monomial binary(const Monomial& a, const Monomial& b,
                           void (*op)(const uint16_t*, const uint16_t*, uint16_t*)) {
        Monomial r = Monomial::one(a.nvars());
        op(a.exp_.data(), b.exp_.data(), r.exp_.data());
        r.degree_ = kern::active().total_degree(r.exp_.data());
        return r;
    }

    static Monomial mul(const Monomial& a, const Monomial& b) {
        Monomial r = Monomial::one(a.nvars());
        if (!kern::active().add_checked(a.exp_.data(), b.exp_.data(), r.exp_.data()))
            throw StructuralError("monomial product exceeds exponent cap");
        r.degree_ = a.degree_ + b.degree_;
        return r;
    }

    static Monomial quotient(const Monomial& b, const Monomial& a) {
        Monomial r = Monomial::one(a.nvars());
        kern::active().sub(b.exp_.data(), a.exp_.data(), r.exp_.data());
        r.degree_ = b.degree_ - a.degree_;
        return r;
    }
};

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    check_arity(a, b);
    return MonomialOps::mul(a, b);
}

bool mono_divides(const Monomial& a, const Monomial& b) {
    check_arity(a, b);
    return kern::active().divides(a.data(), b.data());
}

Monomial mono_quotient(const Monomial& b, const Monomial& a) {
    check_arity(a, b);
    if (!kern::active().divides(a.data(), b.data()))
        throw StructuralError("monomial quotient of non-divisible pair");
    return MonomialOps::quotient(b, a);
}

std::optional<Monomial> mono_try_quotient(const Monomial& b, const Monomial& a) {
    check_arity(a, b);
    if (!kern::active().divides(a.data(), b.data())) return std::nullopt;
    return MonomialOps::quotient(b, a);
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    check_arity(a, b);
    return MonomialOps::binary(a, b, kern::active().max);
}

Monomial mono_gcd(const Monomial& a, const Monomial& b) {
    check_arity(a, b);
    return MonomialOps::binary(a, b, kern::active().min);
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
    check_arity(a, b);
    return kern::active().disjoint(a.data(), b.data());
}

Monomial Monomial::projected(uint32_t drop_mask) const {
    if (support() & drop_mask)
        throw StructuralError("projection drops an occurring variable");
    int kept = 0;
    for (int i = 0; i < nvars_; ++i)
        if (!(drop_mask & (1u << i))) ++kept;
    Monomial m = Monomial::one(kept);
    int j = 0;
    for (int i = 0; i < nvars_; ++i) {
        if (drop_mask & (1u << i)) continue;
        m.set_exponent(j++, exp_[static_cast<size_t>(i)]);
    }
    return m;
}

} // namespace qk
