#pragma once

#include <cstdint>
#include <string>

#include "qk/errors.hpp"

namespace qk {

// Deterministic primality test for 32-bit moduli (trial division).
bool is_prime_u32(uint32_t n);

// An element of the prime field GF(p), 2 <= p < 2^31.
// The value is always fully reduced; products widen to 64 bits, so
// arithmetic is exact for every admissible modulus.
class Fp {
public:
    Fp() : val_(0), mod_(2) {}
    Fp(uint32_t value, uint32_t p) : val_(value % p), mod_(p) {}

    static Fp from_int(int64_t v, uint32_t p) {
        int64_t r = v % static_cast<int64_t>(p);
        if (r < 0) r += p;
        return Fp(static_cast<uint32_t>(r), p);
    }

    uint32_t value() const { return val_; }
    uint32_t modulus() const { return mod_; }
    bool is_zero() const { return val_ == 0; }
    bool is_one() const { return val_ == 1; }

    friend Fp operator+(Fp a, Fp b) {
        a.check(b);
        uint64_t s = uint64_t(a.val_) + b.val_;
        if (s >= a.mod_) s -= a.mod_;
        return Fp(static_cast<uint32_t>(s), a.mod_, raw_tag{});
    }
    friend Fp operator-(Fp a, Fp b) {
        a.check(b);
        uint32_t s = a.val_ >= b.val_ ? a.val_ - b.val_ : a.val_ + a.mod_ - b.val_;
        return Fp(s, a.mod_, raw_tag{});
    }
    friend Fp operator*(Fp a, Fp b) {
        a.check(b);
        uint64_t p = uint64_t(a.val_) * b.val_ % a.mod_;
        return Fp(static_cast<uint32_t>(p), a.mod_, raw_tag{});
    }
    Fp operator-() const {
        return Fp(val_ == 0 ? 0 : mod_ - val_, mod_, raw_tag{});
    }
    Fp inverse() const;
    friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }

    friend bool operator==(const Fp& a, const Fp& b) {
        return a.val_ == b.val_ && a.mod_ == b.mod_;
    }

private:
    struct raw_tag {};
    Fp(uint32_t v, uint32_t p, raw_tag) : val_(v), mod_(p) {}
    void check(const Fp& other) const {
        if (mod_ != other.mod_)
            throw StructuralError("field mismatch: GF(" + std::to_string(mod_) +
                                  ") vs GF(" + std::to_string(other.mod_) + ")");
    }

    uint32_t val_;
    uint32_t mod_;
};

} // namespace qk
