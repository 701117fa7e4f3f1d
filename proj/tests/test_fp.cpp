#include "doctest.h"

#include "qk/fp.hpp"
#include "qk/rng.hpp"

using namespace qk;

TEST_CASE("primality testing") {
    CHECK(is_prime_u32(2));
    CHECK(is_prime_u32(3));
    CHECK(is_prime_u32(101));
    CHECK(is_prime_u32(2147483647)); // 2^31 - 1
    CHECK_FALSE(is_prime_u32(0));
    CHECK_FALSE(is_prime_u32(1));
    CHECK_FALSE(is_prime_u32(4));
    CHECK_FALSE(is_prime_u32(32767)); // 7 * 31 * 151
}

TEST_CASE("field axioms on random samples") {
    for (uint32_t p : {2u, 5u, 101u, 2147483647u}) {
        SplitMix64 rng(p);
        for (int i = 0; i < 500; ++i) {
            Fp a(static_cast<uint32_t>(rng.below(p)), p);
            Fp b(static_cast<uint32_t>(rng.below(p)), p);
            Fp c(static_cast<uint32_t>(rng.below(p)), p);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a - a == Fp(0, p));
            CHECK(a + (-a) == Fp(0, p));
            if (!b.is_zero()) {
                CHECK(b * b.inverse() == Fp(1, p));
                CHECK(a / b * b == a);
            }
        }
    }
}

TEST_CASE("values stay reduced, negatives wrap") {
    CHECK(Fp::from_int(-1, 5).value() == 4);
    CHECK(Fp::from_int(12, 5).value() == 2);
    CHECK(Fp::from_int(-10, 5).value() == 0);
    // widening keeps the largest modulus exact
    uint32_t p = 2147483647;
    Fp big(p - 1, p);
    CHECK((big * big).value() == 1); // (-1)^2
}

TEST_CASE("mixing fields is a structural error") {
    CHECK_THROWS_AS(Fp(1, 2) + Fp(1, 3), StructuralError);
    CHECK_THROWS_AS(Fp(0, 5).inverse(), StructuralError);
}
