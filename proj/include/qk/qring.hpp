#pragma once

#include <memory>
#include <optional>
#include <variant>

#include "qk/monomial_ideal.hpp"

namespace qk {

class QuotientRing;

// User-supplied primary decomposition of a defining ideal: primary
// components plus their radicals. The library verifies what it can
// (I = intersection of components, each component inside its radical,
// each claimed radical generator nilpotent on the component) and trusts
// primality; everything downstream is marked tainted.
struct SuppliedComponent {
    PolyIdeal primary;
    PolyIdeal prime; // asserted radical of `primary`
};
struct SuppliedDecomposition {
    std::vector<SuppliedComponent> components;
};

// A finitely presented algebra R = k[X]/I over a prime field. I is always
// proper, so R is a nonzero Noetherian ring: finitely generated ideals
// inside the zero divisors have nonzero annihilators, and semiregular
// ideals coincide with dense ones. Immutable after construction.
class QuotientRing {
public:
    QuotientRing(PolyRing ring, std::vector<Polynomial> defining_gens);
    QuotientRing(PolyRing ring, std::vector<Polynomial> defining_gens,
                 SuppliedDecomposition dec);

    const PolyRing& ring() const { return defining_.ring(); }
    const PolyIdeal& defining_ideal() const { return defining_; }
    MonomialOrder order() const { return defining_.default_order(); }

    bool is_monomial() const { return monomial_form_.has_value(); }
    const MonomialIdeal& monomial_ideal() const;

    bool has_decomposition() const { return supplied_ != nullptr; }
    const SuppliedDecomposition& decomposition() const;

    // I = 0 or I a monomial prime; a hint only, never consulted for logic.
    bool is_domain_hint() const;

    // cached combinatorics (monomial rings only)
    const std::vector<MonomialPrime>& monomial_ass() const;
    const std::vector<MonomialPrime>& monomial_min() const;

    std::string describe() const;

    friend bool operator==(const QuotientRing& a, const QuotientRing& b) {
        return a.ring() == b.ring() && ideal_equal(a.defining_, b.defining_);
    }

private:
    void init();

    PolyIdeal defining_;
    std::optional<MonomialIdeal> monomial_form_;
    std::shared_ptr<const SuppliedDecomposition> supplied_;

    struct Caches;
    std::shared_ptr<Caches> caches_;
};

// An ideal of R, stored as its full preimage A >= I in k[X]. Coset
// generators are normal forms against I's basis.
class RIdeal {
public:
    RIdeal(QuotientRing ring, std::vector<Polynomial> coset_gens);
    static RIdeal from_preimage(QuotientRing ring, PolyIdeal preimage);
    static RIdeal zero_ideal(QuotientRing ring);
    static RIdeal unit_ideal(QuotientRing ring);

    const QuotientRing& ring() const { return ring_; }
    const PolyIdeal& preimage() const { return preimage_; }

    // NF'd against I, zero cosets dropped, deterministic order.
    std::vector<Polynomial> coset_generators() const;

    bool is_zero() const;
    bool is_unit() const;
    std::optional<MonomialIdeal> monomial_preimage() const;

private:
    RIdeal(QuotientRing ring, PolyIdeal preimage, int);

    QuotientRing ring_;
    PolyIdeal preimage_;
};

bool rideal_equal(const RIdeal& a, const RIdeal& b);
RIdeal rideal_sum(const RIdeal& a, const RIdeal& b);
// (A/I)(B/I) = (A.cosets * B.cosets + I)/I
RIdeal rideal_product(const RIdeal& a, const RIdeal& b);
bool rideal_member(const Polynomial& f, const RIdeal& a);

// A prime of R: either a monomial prime (certified by construction) or a
// user-supplied ideal whose primality is asserted, tainting results.
class PrimeRep {
public:
    static PrimeRep monomial(MonomialPrime p) { return PrimeRep(p); }
    static PrimeRep supplied(PolyIdeal preimage) { return PrimeRep(std::move(preimage)); }

    bool is_monomial() const { return std::holds_alternative<MonomialPrime>(rep_); }
    bool tainted() const { return !is_monomial(); }
    const MonomialPrime& mono() const { return std::get<MonomialPrime>(rep_); }
    const PolyIdeal& poly() const { return std::get<PolyIdeal>(rep_); }

    PolyIdeal as_poly_ideal(const PolyRing& ring) const;
    RIdeal as_rideal(const QuotientRing& R) const;
    std::string key(const PolyRing& ring) const; // stable display / JSON key

private:
    explicit PrimeRep(MonomialPrime p) : rep_(p) {}
    explicit PrimeRep(PolyIdeal p) : rep_(std::move(p)) {}
    std::variant<MonomialPrime, PolyIdeal> rep_;
};

bool prime_rep_equal(const PrimeRep& a, const PrimeRep& b, const PolyRing& ring);
// q subseteq p
bool prime_rep_contains(const PrimeRep& p, const PrimeRep& q, const PolyRing& ring);

// --------------------------------------------------------------------------
// operations

// (0 :_R A), intersecting ambient colon ideals over the generators of A.
RIdeal annihilator(const QuotientRing& R, const RIdeal& A);

// dense: (0 : A) = 0; equivalently A avoids every associated prime.
bool is_dense(const QuotientRing& R, const RIdeal& A);
// For the Noetherian rings in scope, semiregular == dense: a finitely
// generated dense subideal forces ann(A) = 0, and conversely A itself is
// one. Recorded in every analysis report.
bool is_semiregular(const QuotientRing& R, const RIdeal& A);

// Monomial path: radicals of the irredundant irreducible components.
// Supplied path: the asserted radicals, tainted. Otherwise a capability
// error naming the missing input.
std::vector<PrimeRep> associated_primes(const QuotientRing& R);

// Maximal q-ideals = inclusion-maximal associated primes (property A +
// prime avoidance); never empty.
std::vector<PrimeRep> q_max(const QuotientRing& R);

// ht_R(p/I) through minimal primes and the affine-domain dimension formula:
// max over minimal primes q <= p of dim k[X]/q - dim k[X]/p.
int height(const QuotientRing& R, const PrimeRep& p);

// sup of heights over the maximal q-ideals; equals the sup over all
// associated primes.
int q_dim(const QuotientRing& R);

// Independent brute force: enumerate the poset of monomial primes over I,
// mark non-semiregular ones by inclusion in an associated prime, and take
// the longest descending chain from each maximal one to a minimal prime.
int q_dim_chain_oracle(const QuotientRing& R);

// f nilpotent in R, i.e. f in rad(I); exact for every ring in scope.
bool is_nilpotent(const QuotientRing& R, const Polynomial& f);
bool is_reduced(const QuotientRing& R);
// Generator list of Nil(R); monomial or supplied path only.
RIdeal nilradical(const QuotientRing& R);
// k[X]/rad(I); monomial path only.
QuotientRing quotient_by_nil(const QuotientRing& R);

// reduced with q-dim 0
bool is_tau_q_vnr(const QuotientRing& R);

// r in A_q cap R iff (A : r) is semiregular; exact for all rings in scope.
bool q_closure_member(const QuotientRing& R, const RIdeal& A, const Polynomial& r);

// A_q cap R as an ideal: intersection over the maximal q-ideals of the
// contraction of A localized there. Monomial path, or a supplied primary
// decomposition of A's preimage.
RIdeal q_closure(const QuotientRing& R, const RIdeal& A);
RIdeal q_closure(const QuotientRing& R, const RIdeal& A, const SuppliedDecomposition& dec_of_A);

bool is_q_ideal(const QuotientRing& R, const RIdeal& A);
// prime shortcut: a prime is a q-ideal iff it is non-semiregular
bool is_q_ideal(const QuotientRing& R, const PrimeRep& p);

// R[t] modeled as k[X, t]/(I extended); the fresh variable is the first
// unused name in the reserved sequence t, t1, t2, ... The associated primes
// of the extension are recomputed and checked against the extensions of
// Ass(R), not assumed.
QuotientRing extend_poly(const QuotientRing& R);

// A polynomial over R in the fresh extension variable, as a coefficient
// list indexed by degree; coefficients are ambient polynomials.
struct ExtPoly {
    std::vector<Polynomial> coeffs;

    // degree in the extension variable over R (coefficients that are 0 mod
    // I do not count); -1 for the zero polynomial
    int degree(const QuotientRing& R) const;
};

inline constexpr int kExtDegreeCap = 8;

// ideal generated by the coefficients
RIdeal content(const QuotientRing& R, const ExtPoly& f);
ExtPoly ext_mul(const QuotientRing& R, const ExtPoly& g, const ExtPoly& f);

// Smallest k with c(g)^{k+1} c(f) = c(g)^k c(gf); Dedekind-Mertens
// guarantees k <= deg(f), so exhausting that range is an invariant
// violation.
int dm_check(const QuotientRing& R, const ExtPoly& g, const ExtPoly& f);

enum class LemmaStatus { passed, failed, skipped };
struct LemmaResult {
    LemmaStatus status;
    std::string reason;
};

// Checks c(gf)_q cap R = c(f)_q cap R by mutual generator membership via
// q_closure_member. Requires c(g) semiregular (g a non-zero-divisor of
// R[t]); otherwise skipped with reason.
LemmaResult content_q_lemma_check(const QuotientRing& R, const ExtPoly& g, const ExtPoly& f);

// --------------------------------------------------------------------------
// full report

struct QAnalysis {
    std::vector<PrimeRep> ass;
    std::vector<PrimeRep> min_primes;
    std::vector<PrimeRep> q_max;
    std::vector<int> heights; // parallel to ass
    int dim = 0;
    int q_dim = 0;
    bool reduced = false;
    bool tau_q_vnr = false;
    bool tainted = false;
    int min_count = 0;
};

QAnalysis analyze(const QuotientRing& R);

} // namespace qk
