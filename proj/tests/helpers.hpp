#pragma once

#include <string>
#include <vector>

#include "qk/monomial_ideal.hpp"
#include "qk/parse.hpp"
#include "qk/qring.hpp"
#include "qk/rng.hpp"

namespace qktest {

using namespace qk;

inline PolyRing ring_gf(uint32_t p, std::vector<std::string> vars) {
    return PolyRing(p, std::move(vars));
}

inline Polynomial P(const PolyRing& r, const std::string& text) {
    return parse_polynomial(text, r, MonomialOrder::grevlex(r.nvars()));
}

inline std::vector<Polynomial> Ps(const PolyRing& r, const std::vector<std::string>& texts) {
    std::vector<Polynomial> out;
    for (const auto& t : texts) out.push_back(P(r, t));
    return out;
}

inline PolyIdeal ideal(const PolyRing& r, const std::vector<std::string>& gens) {
    return PolyIdeal(r, Ps(r, gens));
}

inline Monomial M(const std::vector<uint16_t>& exps) {
    return Monomial::from_exponents(std::span<const uint16_t>(exps.data(), exps.size()));
}

inline MonomialIdeal MI(int nvars, const std::vector<std::vector<uint16_t>>& gens) {
    std::vector<Monomial> ms;
    for (const auto& g : gens) ms.push_back(M(g));
    return MonomialIdeal::from_generators(nvars, std::move(ms));
}

inline Monomial random_monomial(SplitMix64& rng, int nvars, uint32_t max_deg) {
    Monomial m = Monomial::one(nvars);
    if (nvars == 0) return m;
    uint32_t d = static_cast<uint32_t>(rng.below(max_deg + 1));
    for (uint32_t i = 0; i < d; ++i) {
        int v = static_cast<int>(rng.below(static_cast<uint64_t>(nvars)));
        m.set_exponent(v, static_cast<uint16_t>(m.exponent(v) + 1));
    }
    return m;
}

inline Polynomial random_poly(SplitMix64& rng, const PolyRing& r, uint32_t max_deg,
                              uint32_t max_terms) {
    MonomialOrder ord = MonomialOrder::grevlex(r.nvars());
    std::vector<Term> terms;
    uint64_t n = rng.below(max_terms + 1);
    for (uint64_t i = 0; i < n; ++i) {
        Fp c = r.element(static_cast<int64_t>(rng.below(r.modulus)));
        terms.push_back({random_monomial(rng, r.nvars(), max_deg), c});
    }
    return Polynomial::from_terms(std::move(terms), ord);
}

// ---------------------------------------------------------------------------
// independent oracles (test-only; no dependence on the paths they check)

// all monomials of total degree <= max_deg in nvars variables
inline std::vector<Monomial> all_monomials_up_to(int nvars, uint32_t max_deg) {
    std::vector<Monomial> out{Monomial::one(nvars)};
    for (uint32_t d = 1; d <= max_deg; ++d) {
        std::vector<Monomial> next;
        for (const Monomial& m : out) {
            if (m.total_degree() != d - 1) continue;
            for (int v = 0; v < nvars; ++v) {
                Monomial x = m;
                x.set_exponent(v, static_cast<uint16_t>(x.exponent(v) + 1));
                bool dup = false;
                for (const Monomial& o : next) dup = dup || o == x;
                if (!dup) next.push_back(x);
            }
        }
        out.insert(out.end(), next.begin(), next.end());
    }
    return out;
}

// brute-force monomial-ideal intersection: collect every monomial of bounded
// degree lying in both, minimalize
inline MonomialIdeal brute_intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    uint32_t bound = a.max_generator_degree() + b.max_generator_degree();
    std::vector<Monomial> gens;
    for (const Monomial& m : all_monomials_up_to(a.nvars(), bound))
        if (a.contains(m) && b.contains(m)) gens.push_back(m);
    return MonomialIdeal::from_generators(a.nvars(), std::move(gens));
}

// brute-force Ass oracle: p in Ass(k[X]/I) iff p = (I : m) for some monomial
// m with deg m <= max generator degree (witness-degree bound documented as
// an oracle limitation)
inline std::vector<MonomialPrime> brute_ass(const MonomialIdeal& I) {
    int n = I.nvars();
    std::vector<MonomialPrime> out;
    if (I.is_zero()) return {MonomialPrime{0, n}};
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<Monomial> pg;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) pg.push_back(Monomial::var(n, v));
        MonomialIdeal p = MonomialIdeal::from_generators(n, std::move(pg));
        bool found = false;
        for (const Monomial& m : all_monomials_up_to(n, I.max_generator_degree())) {
            if (mi_colon(I, m) == p) { found = true; break; }
        }
        if (found) out.push_back(MonomialPrime{mask, n});
    }
    std::sort(out.begin(), out.end(), prime_less);
    return out;
}

// combinatorial dimension of k[X]/I for monomial I
inline int brute_dim(const MonomialIdeal& I) {
    if (I.is_unit()) return -1;
    int best_cover = I.nvars();
    for (const MonomialPrime& p : min_primes_monomial(I)) best_cover = std::min(best_cover, p.size());
    return I.nvars() - best_cover;
}

} // namespace qktest
