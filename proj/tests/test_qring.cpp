#include "doctest.h"

#include "helpers.hpp"

using namespace qk;
using namespace qktest;

namespace {

// GF(2)[x, y1..yn]/(x^2, x*y1, ..., x*yn)
QuotientRing remark_family(int n) {
    std::vector<std::string> vars{"x"};
    for (int i = 1; i <= n; ++i) vars.push_back("y" + std::to_string(i));
    PolyRing r = ring_gf(2, vars);
    std::vector<std::string> gens{"x^2"};
    for (int i = 1; i <= n; ++i) gens.push_back("x*y" + std::to_string(i));
    return QuotientRing(r, Ps(r, gens));
}

QuotientRing cross_ring() {
    PolyRing r = ring_gf(2, {"x", "y"});
    return QuotientRing(r, Ps(r, {"x*y"}));
}

// GF(2) presented with no variables
QuotientRing field_ring() {
    PolyRing r = ring_gf(2, {});
    return QuotientRing(r, {});
}

} // namespace

TEST_CASE("quotient ring construction") {
    PolyRing r = ring_gf(2, {"x", "y"});
    CHECK_THROWS_AS(QuotientRing(r, Ps(r, {"x", "x+1"})), StructuralError); // unit ideal
    QuotientRing R(r, Ps(r, {"x+y", "y"}));
    CHECK(R.is_monomial()); // basis is {x, y}
    CHECK(cross_ring().is_monomial());
    CHECK(field_ring().is_monomial());
    CHECK(QuotientRing(r, Ps(r, {"x*y + x"})).is_monomial() == false);
    CHECK(cross_ring().describe() == "GF(2)[x,y]/(x*y)");
}

TEST_CASE("annihilators") {
    SUBCASE("ann(x) in the n=1 remark ring is the maximal associated prime") {
        QuotientRing R = remark_family(1);
        RIdeal ann = annihilator(R, RIdeal(R, Ps(R.ring(), {"x"})));
        CHECK(rideal_equal(ann, RIdeal(R, Ps(R.ring(), {"x", "y1"}))));
        auto gens = ann.coset_generators();
        REQUIRE(gens.size() == 2);
        CHECK(to_string(gens[0], R.ring()) == "x");
        CHECK(to_string(gens[1], R.ring()) == "y1");
    }
    SUBCASE("ann of the unit ideal is zero") {
        QuotientRing R = cross_ring();
        CHECK(annihilator(R, RIdeal::unit_ideal(R)).is_zero());
    }
    SUBCASE("ann(x) = (y) in the cross") {
        QuotientRing R = cross_ring();
        RIdeal ann = annihilator(R, RIdeal(R, Ps(R.ring(), {"x"})));
        CHECK(rideal_equal(ann, RIdeal(R, Ps(R.ring(), {"y"}))));
    }
    SUBCASE("ann of the zero ideal is the whole ring") {
        QuotientRing R = cross_ring();
        CHECK(annihilator(R, RIdeal::zero_ideal(R)).is_unit());
    }
    SUBCASE("monomial fast path agrees with the colon route") {
        SplitMix64 rng(0xa22);
        for (int trial = 0; trial < 25; ++trial) {
            std::vector<Monomial> gens;
            for (int i = 0; i < 1 + static_cast<int>(rng.below(3)); ++i) {
                Monomial m = random_monomial(rng, 3, 3);
                if (!m.is_one()) gens.push_back(m);
            }
            if (gens.empty()) continue;
            PolyRing r = ring_gf(2, {"x", "y", "z"});
            PolyIdeal ip = to_poly_ideal(MonomialIdeal::from_generators(3, gens), r);
            QuotientRing R(r, std::vector<Polynomial>(ip.gens().begin(), ip.gens().end()));
            Monomial am = random_monomial(rng, 3, 2);
            RIdeal A(R, {Polynomial::from_monomial(r, am)});
            RIdeal fast = annihilator(R, A);
            PolyIdeal slow = colon_ideal(R.defining_ideal(), A.preimage());
            CHECK(ideal_equal(fast.preimage(), slow));
        }
    }
}

TEST_CASE("dense and semiregular") {
    QuotientRing cross = cross_ring();
    CHECK(is_dense(cross, RIdeal(cross, Ps(cross.ring(), {"x+y"}))));
    CHECK(is_dense(cross, RIdeal::unit_ideal(cross)));
    CHECK(is_semiregular(cross, RIdeal(cross, Ps(cross.ring(), {"x+y"}))));
    // the maximal ideal (x, y-1) avoids both associated primes
    CHECK(is_semiregular(cross, RIdeal(cross, Ps(cross.ring(), {"x", "y-1"}))));

    QuotientRing rem1 = remark_family(1);
    CHECK_FALSE(is_semiregular(rem1, RIdeal(rem1, Ps(rem1.ring(), {"x", "y1"}))));
    CHECK_FALSE(is_dense(rem1, RIdeal(rem1, Ps(rem1.ring(), {"x", "y1"}))));

    // dense iff annihilator vanishes, on random monomial ideals
    SplitMix64 rng(0xdede);
    for (int trial = 0; trial < 30; ++trial) {
        QuotientRing R = (trial % 2) ? remark_family(2) : cross_ring();
        Monomial m = random_monomial(rng, R.ring().nvars(), 3);
        RIdeal A(R, {Polynomial::from_monomial(R.ring(), m)});
        CHECK(is_dense(R, A) == annihilator(R, A).is_zero());
    }
}

TEST_CASE("associated primes and q-Max through the quotient layer") {
    SUBCASE("remark ring") {
        QuotientRing R = remark_family(2);
        auto ass = associated_primes(R);
        REQUIRE(ass.size() == 2);
        CHECK(ass[0].mono().mask == 0b001); // (x)
        CHECK(ass[1].mono().mask == 0b111); // (x, y1, y2)
        auto qm = q_max(R);
        REQUIRE(qm.size() == 1);
        CHECK(qm[0].mono().mask == 0b111);
    }
    SUBCASE("cross: two incomparable associated primes") {
        auto qm = q_max(cross_ring());
        REQUIRE(qm.size() == 2);
        CHECK(qm[0].mono().mask == 0b01);
        CHECK(qm[1].mono().mask == 0b10);
    }
    SUBCASE("field: the zero prime") {
        auto ass = associated_primes(field_ring());
        REQUIRE(ass.size() == 1);
        CHECK(ass[0].mono().mask == 0);
        CHECK(q_max(field_ring()).size() == 1);
    }
    SUBCASE("non-monomial without decomposition: capability error") {
        PolyRing r = ring_gf(2, {"x", "y"});
        QuotientRing R(r, Ps(r, {"x*y + x"}));
        CHECK_THROWS_AS(associated_primes(R), CapabilityError);
    }
}

TEST_CASE("heights") {
    for (int n = 1; n <= 4; ++n) {
        QuotientRing R = remark_family(n);
        uint32_t m_mask = (1u << (n + 1)) - 1;
        CHECK(height(R, PrimeRep::monomial({m_mask, n + 1})) == n);
        CHECK(height(R, PrimeRep::monomial({0b1, n + 1})) == 0);
    }
    QuotientRing cross = cross_ring();
    CHECK(height(cross, PrimeRep::monomial({0b01, 2})) == 0);

    PolyRing line = ring_gf(2, {"x"});
    QuotientRing kx(line, {});
    CHECK(height(kx, PrimeRep::monomial({0, 1})) == 0);
    CHECK(height(kx, PrimeRep::monomial({1, 1})) == 1);

    // a prime not containing I is a structural error
    CHECK_THROWS_AS(height(cross, PrimeRep::monomial({0, 2})), StructuralError);
}

TEST_CASE("q-dimension against the chain oracle") {
    for (int n = 1; n <= 4; ++n) {
        QuotientRing R = remark_family(n);
        CHECK(q_dim(R) == n);
        CHECK(q_dim_chain_oracle(R) == n);
        CHECK(krull_dim(R.defining_ideal()).dim == n);
    }
    CHECK(q_dim(cross_ring()) == 0);
    CHECK(q_dim_chain_oracle(cross_ring()) == 0);
    CHECK(krull_dim(cross_ring().defining_ideal()).dim == 1);
    CHECK(q_dim(field_ring()) == 0);
    CHECK(q_dim_chain_oracle(field_ring()) == 0);

    SUBCASE("random monomial rings agree with the oracle") {
        SplitMix64 rng(0x9d1);
        for (int trial = 0; trial < 60; ++trial) {
            int nv = 1 + static_cast<int>(rng.below(4));
            std::vector<std::string> vars;
            for (int i = 0; i < nv; ++i) vars.push_back("v" + std::to_string(i));
            PolyRing r = ring_gf(2, vars);
            std::vector<Monomial> gens;
            for (int i = 0; i < 1 + static_cast<int>(rng.below(4)); ++i) {
                Monomial m = random_monomial(rng, nv, 4);
                if (!m.is_one()) gens.push_back(m);
            }
            std::vector<Polynomial> pgens;
            for (const Monomial& m : gens) pgens.push_back(Polynomial::from_monomial(r, m));
            QuotientRing R(r, std::move(pgens));
            int qd = q_dim(R);
            CHECK(qd == q_dim_chain_oracle(R));
            CHECK(qd <= krull_dim(R.defining_ideal()).dim);
        }
    }
}

TEST_CASE("nilradical, reducedness, and the nil quotient") {
    QuotientRing rem1 = remark_family(1);
    RIdeal nil = nilradical(rem1);
    CHECK(rideal_equal(nil, RIdeal(rem1, Ps(rem1.ring(), {"x"}))));
    CHECK_FALSE(is_reduced(rem1));

    QuotientRing cross = cross_ring();
    CHECK(nilradical(cross).is_zero());
    CHECK(is_reduced(cross));
    CHECK(nilradical(field_ring()).is_zero());

    QuotientRing q = quotient_by_nil(rem1);
    CHECK(ideal_equal(q.defining_ideal(), ideal(q.ring(), {"x"})));
    CHECK(is_reduced(q));
    CHECK(q_dim(q) == 0);

    // reduced ring: quotient is the same presentation
    QuotientRing qq = quotient_by_nil(cross);
    CHECK(ideal_equal(qq.defining_ideal(), cross.defining_ideal()));

    // one-variable flattening
    PolyRing r1 = ring_gf(2, {"x"});
    QuotientRing dual(r1, Ps(r1, {"x^2"}));
    CHECK(ideal_equal(quotient_by_nil(dual).defining_ideal(), ideal(r1, {"x"})));

    // nilpotency of elements is exact for non-monomial rings too
    PolyRing r2 = ring_gf(2, {"x", "y"});
    QuotientRing nm(r2, Ps(r2, {"x^2 + x*y"}));
    CHECK(is_nilpotent(nm, P(r2, "x^2 + x*y")));
    CHECK_FALSE(is_nilpotent(nm, P(r2, "x")));
    CHECK_THROWS_AS(is_reduced(nm), CapabilityError);
    CHECK_THROWS_AS(nilradical(nm), CapabilityError);
    CHECK_THROWS_AS(quotient_by_nil(nm), CapabilityError);
}

TEST_CASE("tau_q-von Neumann regularity") {
    CHECK(is_tau_q_vnr(cross_ring()));
    CHECK_FALSE(is_tau_q_vnr(remark_family(1)));
    CHECK(is_tau_q_vnr(quotient_by_nil(remark_family(3))));
    PolyRing r1 = ring_gf(2, {"x"});
    CHECK_FALSE(is_tau_q_vnr(QuotientRing(r1, Ps(r1, {"x^2"})))); // not reduced
    CHECK(is_tau_q_vnr(field_ring()));
}

TEST_CASE("q-closure membership") {
    QuotientRing cross = cross_ring();
    const PolyRing& r = cross.ring();
    RIdeal x2(cross, Ps(r, {"x^2"}));
    CHECK(q_closure_member(cross, x2, P(r, "x")));
    CHECK_FALSE(q_closure_member(cross, RIdeal(cross, Ps(r, {"x"})), P(r, "y")));
    CHECK(q_closure_member(cross, RIdeal(cross, Ps(r, {"x"})), P(r, "x"))); // r in A
    CHECK(q_closure_member(cross, x2, Polynomial()));                       // r = 0
}

TEST_CASE("q-closure as an ideal") {
    QuotientRing cross = cross_ring();
    const PolyRing& r = cross.ring();

    SUBCASE("(x^2) closes to (x)") {
        RIdeal cl = q_closure(cross, RIdeal(cross, Ps(r, {"x^2"})));
        CHECK(rideal_equal(cl, RIdeal(cross, Ps(r, {"x"}))));
        // confirmed element-wise on all monomials of degree <= 4
        for (const Monomial& m : all_monomials_up_to(2, 4)) {
            Polynomial pm = Polynomial::from_monomial(r, m);
            CHECK(q_closure_member(cross, RIdeal(cross, Ps(r, {"x^2"})), pm) ==
                  rideal_member(pm, cl));
        }
    }
    SUBCASE("closure of the unit ideal") {
        CHECK(q_closure(cross, RIdeal::unit_ideal(cross)).is_unit());
    }
    SUBCASE("a q-ideal is its own closure") {
        QuotientRing rem1 = remark_family(1);
        RIdeal a(rem1, Ps(rem1.ring(), {"x"}));
        CHECK(rideal_equal(q_closure(rem1, a), a));
        CHECK(is_q_ideal(rem1, a));
    }
    SUBCASE("closure laws on random monomial ideals") {
        SplitMix64 rng(0xc105);
        for (int trial = 0; trial < 40; ++trial) {
            QuotientRing R = (trial % 3 == 0)   ? cross_ring()
                             : (trial % 3 == 1) ? remark_family(2)
                                                : remark_family(1);
            int nv = R.ring().nvars();
            std::vector<Polynomial> gens;
            for (int i = 0; i < 1 + static_cast<int>(rng.below(2)); ++i) {
                Monomial m = random_monomial(rng, nv, 3);
                gens.push_back(Polynomial::from_monomial(R.ring(), m));
            }
            RIdeal A(R, gens);
            RIdeal cl = q_closure(R, A);
            // contains, idempotent
            CHECK(ideal_contains(cl.preimage(), A.preimage()));
            CHECK(rideal_equal(q_closure(R, cl), cl));
            // monotone: A subseteq A + (extra) implies closures nest
            std::vector<Polynomial> bigger = gens;
            bigger.push_back(
                Polynomial::from_monomial(R.ring(), random_monomial(rng, nv, 3)));
            RIdeal B(R, bigger);
            CHECK(ideal_contains(q_closure(R, B).preimage(), cl.preimage()));
            // membership agreement on monomials of degree <= 4
            for (const Monomial& m : all_monomials_up_to(nv, 4)) {
                Polynomial pm = Polynomial::from_monomial(R.ring(), m);
                CHECK(q_closure_member(R, A, pm) == rideal_member(pm, cl));
            }
        }
    }
}

TEST_CASE("q-ideal predicate") {
    QuotientRing rem1 = remark_family(1);
    CHECK(is_q_ideal(rem1, RIdeal(rem1, Ps(rem1.ring(), {"x", "y1"}))));
    CHECK(is_q_ideal(rem1, PrimeRep::monomial({0b11, 2})));

    QuotientRing cross = cross_ring();
    // (x, y-1) is semiregular, hence not a q-ideal
    CHECK_FALSE(is_q_ideal(cross, PrimeRep::supplied(
                               PolyIdeal(cross.ring(), Ps(cross.ring(), {"x", "y-1", "x*y"})))));

    // the zero ideal of a domain is always a q-ideal
    PolyRing r1 = ring_gf(2, {"x"});
    QuotientRing kx(r1, {});
    CHECK(is_q_ideal(kx, PrimeRep::monomial({0, 1})));
    CHECK(is_q_ideal(kx, RIdeal::zero_ideal(kx)));
}

TEST_CASE("supplied decompositions for non-monomial rings") {
    // R = GF(2)[x,y]/(x^2 + x*y) with x^2 + xy = x(x+y) = (x) cap (x+y)
    PolyRing r = ring_gf(2, {"x", "y"});
    SuppliedDecomposition dec;
    dec.components.push_back({ideal(r, {"x"}), ideal(r, {"x"})});
    dec.components.push_back({ideal(r, {"x+y"}), ideal(r, {"x+y"})});
    QuotientRing R(r, Ps(r, {"x^2 + x*y"}), dec);

    auto ass = associated_primes(R);
    REQUIRE(ass.size() == 2);
    CHECK(ass[0].tainted());

    QAnalysis a = analyze(R);
    CHECK(a.dim == 1);
    CHECK(a.q_dim == 0);
    CHECK(a.reduced);
    CHECK(a.tau_q_vnr);
    CHECK(a.tainted);
    CHECK(a.min_count == 2);

    // a bogus decomposition is rejected
    SuppliedDecomposition bad;
    bad.components.push_back({ideal(r, {"x"}), ideal(r, {"x"})});
    CHECK_THROWS_AS(QuotientRing(r, Ps(r, {"x^2 + x*y"}), bad), StructuralError);

    SuppliedDecomposition bad2; // radical claim too big
    bad2.components.push_back({ideal(r, {"x"}), ideal(r, {"x", "y"})});
    bad2.components.push_back({ideal(r, {"x+y"}), ideal(r, {"x+y"})});
    CHECK_THROWS_AS(QuotientRing(r, Ps(r, {"x^2 + x*y"}), bad2), StructuralError);
}

TEST_CASE("full analysis on the named rings") {
    QAnalysis a = analyze(remark_family(2));
    CHECK(a.dim == 2);
    CHECK(a.q_dim == 2);
    CHECK_FALSE(a.reduced);
    CHECK_FALSE(a.tau_q_vnr);
    CHECK_FALSE(a.tainted);
    CHECK(a.min_count == 1);
    REQUIRE(a.ass.size() == 2);
    CHECK(a.heights[0] == 0);
    CHECK(a.heights[1] == 2);

    QAnalysis c = analyze(cross_ring());
    CHECK(c.dim == 1);
    CHECK(c.q_dim == 0);
    CHECK(c.reduced);
    CHECK(c.tau_q_vnr);
    CHECK(c.min_count == 2);

    QAnalysis f = analyze(field_ring());
    CHECK(f.dim == 0);
    CHECK(f.q_dim == 0);
    CHECK(f.reduced);
    CHECK(f.tau_q_vnr);
    CHECK(f.min_count == 1);
}
