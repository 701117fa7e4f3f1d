#pragma once

#include <span>
#include <string>
#include <vector>

#include "qk/fp.hpp"
#include "qk/monomial.hpp"
#include "qk/order.hpp"
#include "qk/ring.hpp"

namespace qk {

struct Term {
    Monomial mono;
    Fp coeff;
};

// Exact multivariate polynomial: term sequence strictly descending in the
// order it was normalized under, no zero coefficients, no duplicates.
// The zero polynomial is the empty sequence.
class Polynomial {
public:
    Polynomial() = default; // zero

    static Polynomial constant(const PolyRing& ring, Fp c);
    static Polynomial from_monomial(const PolyRing& ring, const Monomial& m);
    // Sorts, merges duplicate monomials, and drops zero coefficients.
    static Polynomial from_terms(std::vector<Term> terms, const MonomialOrder& ord);

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    std::span<const Term> terms() const { return terms_; }
    const Term& leading_term() const; // zero polynomial -> StructuralError
    bool is_monomial_times_unit() const { return terms_.size() == 1; }
    bool is_constant() const;
    uint32_t total_degree() const; // max over terms; 0 for the zero polynomial

    // Re-sort under another order.
    Polynomial normalized(const MonomialOrder& ord) const;
    bool sorted_under(const MonomialOrder& ord) const;

    // Order-insensitive structural equality (same term multiset).
    friend bool operator==(const Polynomial& a, const Polynomial& b);

private:
    // Pre: terms already satisfy the class invariants for some order.
    static Polynomial raw(std::vector<Term> terms);
    friend Polynomial poly_neg(const Polynomial&);
    friend Polynomial poly_scale(const Polynomial&, Fp);

    std::vector<Term> terms_;
};

Polynomial poly_add(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord);
Polynomial poly_sub(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord);
Polynomial poly_neg(const Polynomial& f);
Polynomial poly_mul(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord);
Polynomial poly_scale(const Polynomial& f, Fp c);
Polynomial poly_mul_term(const Polynomial& f, const Term& t, const MonomialOrder& ord);
// Leading coefficient scaled to 1.
Polynomial poly_monic(const Polynomial& f);

std::string to_string(const Monomial& m, const PolyRing& ring);
std::string to_string(const Polynomial& f, const PolyRing& ring);

} // namespace qk
