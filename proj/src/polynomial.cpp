#include "qk/polynomial.hpp"

#include <algorithm>

namespace qk {

namespace {
// arbitrary but fixed tie-free comparison, used for order-insensitive equality
int plain_cmp(const Monomial& a, const Monomial& b) {
    return kern::active().cmp_lex(a.data(), b.data());
}
} // namespace

Polynomial Polynomial::raw(std::vector<Term> terms) {
    Polynomial f;
    f.terms_ = std::move(terms);
    return f;
}

Polynomial Polynomial::constant(const PolyRing& ring, Fp c) {
    Polynomial f;
    if (!c.is_zero()) f.terms_.push_back({Monomial::one(ring.nvars()), c});
    return f;
}

Polynomial Polynomial::from_monomial(const PolyRing& ring, const Monomial& m) {
    Polynomial f;
    f.terms_.push_back({m, ring.element(1)});
    return f;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms, const MonomialOrder& ord) {
    std::sort(terms.begin(), terms.end(),
              [&](const Term& a, const Term& b) { return ord.greater(a.mono, b.mono); });
    Polynomial f;
    for (auto& t : terms) {
        if (t.coeff.is_zero()) continue;
        if (!f.terms_.empty() && f.terms_.back().mono == t.mono) {
            f.terms_.back().coeff = f.terms_.back().coeff + t.coeff;
            if (f.terms_.back().coeff.is_zero()) f.terms_.pop_back();
        } else {
            f.terms_.push_back(std::move(t));
        }
    }
    return f;
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw StructuralError("leading term of the zero polynomial");
    return terms_.front();
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

uint32_t Polynomial::total_degree() const {
    uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
    return d;
}

Polynomial Polynomial::normalized(const MonomialOrder& ord) const {
    return from_terms(terms_, ord);
}

bool Polynomial::sorted_under(const MonomialOrder& ord) const {
    for (size_t i = 1; i < terms_.size(); ++i)
        if (ord.compare(terms_[i - 1].mono, terms_[i].mono) <= 0) return false;
    return true;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto key_sorted = [](const Polynomial& f) {
        std::vector<Term> v(f.terms_.begin(), f.terms_.end());
        std::sort(v.begin(), v.end(),
                  [](const Term& s, const Term& t) { return plain_cmp(s.mono, t.mono) > 0; });
        return v;
    };
    auto va = key_sorted(a);
    auto vb = key_sorted(b);
    for (size_t i = 0; i < va.size(); ++i)
        if (!(va[i].mono == vb[i].mono) || !(va[i].coeff == vb[i].coeff)) return false;
    return true;
}

Polynomial poly_add(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
    std::vector<Term> terms(f.terms().begin(), f.terms().end());
    terms.insert(terms.end(), g.terms().begin(), g.terms().end());
    return Polynomial::from_terms(std::move(terms), ord);
}

Polynomial poly_sub(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
    std::vector<Term> terms(f.terms().begin(), f.terms().end());
    for (const auto& t : g.terms()) terms.push_back({t.mono, -t.coeff});
    return Polynomial::from_terms(std::move(terms), ord);
}

Polynomial poly_neg(const Polynomial& f) {
    std::vector<Term> terms(f.terms_.begin(), f.terms_.end());
    for (auto& t : terms) t.coeff = -t.coeff;
    return Polynomial::raw(std::move(terms)); // negation preserves term order
}

Polynomial poly_mul(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
    std::vector<Term> terms;
    terms.reserve(f.term_count() * g.term_count());
    for (const auto& a : f.terms())
        for (const auto& b : g.terms())
            terms.push_back({mono_mul(a.mono, b.mono), a.coeff * b.coeff});
    return Polynomial::from_terms(std::move(terms), ord);
}

Polynomial poly_scale(const Polynomial& f, Fp c) {
    if (c.is_zero()) return Polynomial();
    std::vector<Term> terms(f.terms_.begin(), f.terms_.end());
    for (auto& t : terms) t.coeff = t.coeff * c;
    return Polynomial::raw(std::move(terms)); // nonzero scaling preserves term order
}

Polynomial poly_mul_term(const Polynomial& f, const Term& t, const MonomialOrder& ord) {
    std::vector<Term> terms;
    terms.reserve(f.term_count());
    for (const auto& a : f.terms()) terms.push_back({mono_mul(a.mono, t.mono), a.coeff * t.coeff});
    return Polynomial::from_terms(std::move(terms), ord);
}

Polynomial poly_monic(const Polynomial& f) {
    if (f.is_zero()) return f;
    return poly_scale(f, f.leading_term().coeff.inverse());
}

std::string to_string(const Monomial& m, const PolyRing& ring) {
    if (m.is_one()) return "1";
    std::string s;
    for (int i = 0; i < m.nvars(); ++i) {
        uint16_t e = m.exponent(i);
        if (e == 0) continue;
        if (!s.empty()) s += "*";
        s += ring.var_name(i);
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

std::string to_string(const Polynomial& f, const PolyRing& ring) {
    if (f.is_zero()) return "0";
    std::string s;
    for (const auto& t : f.terms()) {
        if (!s.empty()) s += " + ";
        bool unit_coeff = t.coeff.is_one();
        if (!unit_coeff) s += std::to_string(t.coeff.value());
        if (t.mono.is_one()) {
            if (unit_coeff) s += "1";
        } else {
            if (!unit_coeff) s += "*";
            s += to_string(t.mono, ring);
        }
    }
    return s;
}

} // namespace qk
