#include "qk/fp.hpp"

namespace qk {

bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (uint64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

Fp Fp::inverse() const {
    if (val_ == 0)
        throw StructuralError("division by zero in GF(" + std::to_string(mod_) + ")");
    // extended Euclid on (val, mod)
    int64_t t = 0, new_t = 1;
    int64_t r = mod_, new_r = val_;
    while (new_r != 0) {
        int64_t q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    if (t < 0) t += mod_;
    return Fp(static_cast<uint32_t>(t), mod_);
}

} // namespace qk
