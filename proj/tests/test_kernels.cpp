#include "doctest.h"

#include "qk/kernels.hpp"
#include "qk/rng.hpp"

#include <array>
#include <string>

using namespace qk;

namespace {

using Vec = std::array<uint16_t, kern::kLanes>;

Vec random_vec(SplitMix64& rng, uint16_t cap) {
    Vec v{};
    for (auto& x : v) x = static_cast<uint16_t>(rng.below(cap + 1));
    return v;
}

// every implementation must agree with the scalar reference bit-for-bit
void check_pair_against_scalar(const kern::Kernels& k, const Vec& a, const Vec& b) {
    const kern::Kernels& ref = kern::scalar();
    INFO("kernel ", k.name);

    Vec out_k{}, out_r{};
    bool ok_k = k.add_checked(a.data(), b.data(), out_k.data());
    bool ok_r = ref.add_checked(a.data(), b.data(), out_r.data());
    CHECK(ok_k == ok_r);
    CHECK(out_k == out_r);

    k.sub(out_k.data(), a.data(), out_k.data());
    ref.sub(out_r.data(), a.data(), out_r.data());
    CHECK(out_k == out_r);

    CHECK(k.divides(a.data(), b.data()) == ref.divides(a.data(), b.data()));
    CHECK(k.divides(b.data(), a.data()) == ref.divides(b.data(), a.data()));

    k.max(a.data(), b.data(), out_k.data());
    ref.max(a.data(), b.data(), out_r.data());
    CHECK(out_k == out_r);

    k.min(a.data(), b.data(), out_k.data());
    ref.min(a.data(), b.data(), out_r.data());
    CHECK(out_k == out_r);

    CHECK(k.equal(a.data(), b.data()) == ref.equal(a.data(), b.data()));
    CHECK(k.disjoint(a.data(), b.data()) == ref.disjoint(a.data(), b.data()));
    CHECK(k.total_degree(a.data()) == ref.total_degree(a.data()));
    CHECK(k.support(a.data()) == ref.support(a.data()));
    CHECK(k.cmp_lex(a.data(), b.data()) == ref.cmp_lex(a.data(), b.data()));

    uint32_t da = ref.total_degree(a.data());
    uint32_t db = ref.total_degree(b.data());
    CHECK(k.cmp_grevlex(a.data(), b.data(), da, db) == ref.cmp_grevlex(a.data(), b.data(), da, db));
}

} // namespace

TEST_CASE("kernel variants agree with the scalar reference") {
    for (const kern::Kernels* k : kern::available()) {
        SplitMix64 rng(0x6b65726eull + fnv1a(k->name));

        // random in-cap vectors
        for (int i = 0; i < 4000; ++i) {
            Vec a = random_vec(rng, 40);
            Vec b = random_vec(rng, 40);
            check_pair_against_scalar(*k, a, b);
        }
        // boundary exponents: overflow detection at the cap
        for (int i = 0; i < 500; ++i) {
            Vec a = random_vec(rng, kern::kExpCap);
            Vec b = random_vec(rng, kern::kExpCap);
            check_pair_against_scalar(*k, a, b);
        }
        // identical, zero, and single-lane vectors
        Vec z{};
        check_pair_against_scalar(*k, z, z);
        for (int lane = 0; lane < kern::kLanes; ++lane) {
            Vec a{};
            a[static_cast<size_t>(lane)] = kern::kExpCap;
            check_pair_against_scalar(*k, a, a);
            check_pair_against_scalar(*k, a, z);
        }
    }
}

TEST_CASE("add_checked flags any lane above the cap") {
    for (const kern::Kernels* k : kern::available()) {
        INFO("kernel ", k->name);
        Vec a{}, b{}, out{};
        a[3] = kern::kExpCap;
        b[3] = 0;
        CHECK(k->add_checked(a.data(), b.data(), out.data()));
        b[3] = 1;
        CHECK_FALSE(k->add_checked(a.data(), b.data(), out.data()));
    }
}

TEST_CASE("runtime dispatch picks an available kernel table") {
    const kern::Kernels& act = kern::active();
    bool found = false;
    for (const kern::Kernels* k : kern::available()) found = found || k == &act;
    CHECK(found);
#if defined(QK_HAVE_AVX2_TU)
    if (kern::cpu_has_avx2()) CHECK(std::string(act.name) == "avx2");
#endif
}
