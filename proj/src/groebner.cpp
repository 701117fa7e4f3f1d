#include "qk/groebner.hpp"

#include <algorithm>
#include <set>

namespace qk {

PolyIdeal::PolyIdeal(PolyRing ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    MonomialOrder ord = MonomialOrder::grevlex(ring_.nvars());
    for (auto& g : gens) {
        Polynomial n = g.normalized(ord);
        if (!n.is_zero()) gens_.push_back(std::move(n));
    }
}

std::shared_ptr<const std::vector<Polynomial>> PolyIdeal::basis(const MonomialOrder& ord) const {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    for (const auto& [o, b] : cache_->entries)
        if (o == ord) return b;
    auto b = std::make_shared<const std::vector<Polynomial>>(buchberger(gens_, ring_, ord));
    cache_->entries.emplace_back(ord, b);
    return b;
}

std::shared_ptr<const std::vector<Polynomial>> PolyIdeal::basis() const {
    return basis(default_order());
}

// ---------------------------------------------------------------------------
// division and normal forms

DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors,
                      const MonomialOrder& ord) {
    DivisionResult res;
    res.quotients.assign(divisors.size(), Polynomial());
    Polynomial work = f;
    std::vector<Term> rem;
    while (!work.is_zero()) {
        const Term& lt = work.leading_term();
        bool reduced = false;
        for (size_t k = 0; k < divisors.size(); ++k) {
            const Polynomial& d = divisors[k];
            if (d.is_zero()) continue;
            auto q = mono_try_quotient(lt.mono, d.leading_term().mono);
            if (!q) continue;
            Term qt{*q, lt.coeff / d.leading_term().coeff};
            res.quotients[k] = poly_add(res.quotients[k],
                                        Polynomial::from_terms({qt}, ord), ord);
            work = poly_sub(work, poly_mul_term(d, qt, ord), ord);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.push_back(lt);
            std::vector<Term> rest(work.terms().begin() + 1, work.terms().end());
            work = Polynomial::from_terms(std::move(rest), ord);
        }
    }
    res.remainder = Polynomial::from_terms(std::move(rem), ord);
    return res;
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis,
                       const MonomialOrder& ord) {
    Polynomial work = f;
    std::vector<Term> rem;
    while (!work.is_zero()) {
        const Term& lt = work.leading_term();
        bool reduced = false;
        for (const Polynomial& d : basis) {
            auto q = mono_try_quotient(lt.mono, d.leading_term().mono);
            if (!q) continue;
            Term qt{*q, lt.coeff / d.leading_term().coeff};
            work = poly_sub(work, poly_mul_term(d, qt, ord), ord);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.push_back(lt);
            std::vector<Term> rest(work.terms().begin() + 1, work.terms().end());
            work = Polynomial::from_terms(std::move(rest), ord);
        }
    }
    return Polynomial::from_terms(std::move(rem), ord);
}

Polynomial normal_form(const Polynomial& f, const PolyIdeal& I, const MonomialOrder& ord) {
    return normal_form(f.normalized(ord), *I.basis(ord), ord);
}

Polynomial normal_form(const Polynomial& f, const PolyIdeal& I) {
    return normal_form(f, I, I.default_order());
}

// ---------------------------------------------------------------------------
// Buchberger

namespace {

struct SPair {
    int i, j;
    Monomial lcm;
};

// selection order: lcm degree, then lcm under ord, then indices
struct SPairLess {
    const MonomialOrder* ord;
    bool operator()(const SPair& a, const SPair& b) const {
        if (a.lcm.total_degree() != b.lcm.total_degree())
            return a.lcm.total_degree() < b.lcm.total_degree();
        int c = ord->compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const Monomial& lcm,
                        const MonomialOrder& ord) {
    const Term& lf = f.leading_term();
    const Term& lg = g.leading_term();
    Term tf{mono_quotient(lcm, lf.mono), lf.coeff.inverse()};
    Term tg{mono_quotient(lcm, lg.mono), lg.coeff.inverse()};
    return poly_sub(poly_mul_term(f, tf, ord), poly_mul_term(g, tg, ord), ord);
}

} // namespace

std::vector<Polynomial> buchberger(std::span<const Polynomial> gens, const PolyRing& ring,
                                   const MonomialOrder& ord) {
    std::vector<Polynomial> basis;

    auto add_pairs = [&](std::set<SPair, SPairLess>& pairs, int n) {
        for (int i = 0; i < n; ++i) {
            pairs.insert(
                {i, n, mono_lcm(basis[static_cast<size_t>(i)].leading_term().mono,
                                basis[static_cast<size_t>(n)].leading_term().mono)});
        }
    };

    std::set<SPair, SPairLess> pairs{SPairLess{&ord}};
    std::set<std::pair<int, int>> treated;

    // seed: normalize inputs against the growing basis so duplicates and
    // reducible generators never spawn pairs
    for (const Polynomial& g : gens) {
        Polynomial r = normal_form(g.normalized(ord), basis, ord);
        if (r.is_zero()) continue;
        basis.push_back(poly_monic(r));
        add_pairs(pairs, static_cast<int>(basis.size()) - 1);
    }

    while (!pairs.empty()) {
        SPair p = *pairs.begin();
        pairs.erase(pairs.begin());
        treated.insert({p.i, p.j});

        const Polynomial& f = basis[static_cast<size_t>(p.i)];
        const Polynomial& g = basis[static_cast<size_t>(p.j)];

        // product criterion
        if (mono_coprime(f.leading_term().mono, g.leading_term().mono)) continue;

        // chain criterion: some basis element k divides the lcm and both
        // side pairs were already treated
        bool chained = false;
        for (int k = 0; k < static_cast<int>(basis.size()) && !chained; ++k) {
            if (k == p.i || k == p.j) continue;
            if (!mono_divides(basis[static_cast<size_t>(k)].leading_term().mono, p.lcm)) continue;
            auto key = [](int a, int b) { return std::pair<int, int>(std::min(a, b), std::max(a, b)); };
            if (treated.count(key(p.i, k)) && treated.count(key(p.j, k))) chained = true;
        }
        if (chained) continue;

        Polynomial s = normal_form(s_polynomial(f, g, p.lcm, ord), basis, ord);
        if (s.is_zero()) continue;
        basis.push_back(poly_monic(s));
        add_pairs(pairs, static_cast<int>(basis.size()) - 1);
    }

    // minimalize: drop elements whose leading term another one divides
    std::vector<Polynomial> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial& li = basis[i].leading_term().mono;
            const Monomial& lj = basis[j].leading_term().mono;
            if (mono_divides(lj, li) && !(li == lj && j > i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // tail-reduce to the unique reduced basis
    for (bool changed = true; changed;) {
        changed = false;
        for (size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Polynomial> others;
            for (size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            Polynomial r = normal_form(minimal[i], others, ord);
            if (!(r == minimal[i])) {
                minimal[i] = poly_monic(r);
                changed = true;
            }
        }
    }

    std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.greater(a.leading_term().mono, b.leading_term().mono);
    });

    // canonical unit ideal
    for (const auto& b : minimal) {
        if (b.is_constant() && !b.is_zero())
            return {Polynomial::constant(ring, ring.element(1))};
    }
    return minimal;
}

// ---------------------------------------------------------------------------
// derived ideal operations

bool ideal_member(const Polynomial& f, const PolyIdeal& I) {
    return normal_form(f, I).is_zero();
}

bool ideal_contains(const PolyIdeal& I, const PolyIdeal& J) {
    if (!(I.ring() == J.ring())) throw StructuralError("ideal_contains: different ambient rings");
    for (const Polynomial& g : J.gens())
        if (!ideal_member(g, I)) return false;
    return true;
}

bool ideal_equal(const PolyIdeal& I, const PolyIdeal& J) {
    if (!(I.ring() == J.ring())) throw StructuralError("ideal_equal: different ambient rings");
    auto a = I.basis();
    auto b = J.basis();
    if (a->size() != b->size()) return false;
    for (size_t i = 0; i < a->size(); ++i)
        if (!((*a)[i] == (*b)[i])) return false;
    return true;
}

bool is_unit_ideal(const PolyIdeal& I) {
    auto b = I.basis();
    return b->size() == 1 && (*b)[0].is_constant();
}

bool is_zero_ideal(const PolyIdeal& I) { return I.basis()->empty(); }

PolyIdeal eliminate(const PolyIdeal& I, uint32_t drop_mask) {
    if (drop_mask == 0) return I;
    MonomialOrder ord = MonomialOrder::elimination(I.ring().nvars(), drop_mask);
    auto gb = I.basis(ord);
    PolyRing small = I.ring().without_vars(drop_mask);
    MonomialOrder small_ord = MonomialOrder::grevlex(small.nvars());
    std::vector<Polynomial> kept;
    for (const Polynomial& g : *gb) {
        bool clean = true;
        for (const auto& t : g.terms())
            if (t.mono.support() & drop_mask) { clean = false; break; }
        if (!clean) continue;
        std::vector<Term> terms;
        for (const auto& t : g.terms()) terms.push_back({t.mono.projected(drop_mask), t.coeff});
        kept.push_back(Polynomial::from_terms(std::move(terms), small_ord));
    }
    return PolyIdeal(small, std::move(kept));
}

PolyIdeal intersect(const PolyIdeal& I, const PolyIdeal& J) {
    if (!(I.ring() == J.ring())) throw StructuralError("intersect: different ambient rings");
    if (is_unit_ideal(I)) return J;
    if (is_unit_ideal(J)) return I;

    PolyRing big = I.ring().appended(I.ring().fresh_var_name());
    int tn = big.nvars() - 1;
    MonomialOrder big_ord = MonomialOrder::grevlex(big.nvars());
    Polynomial t = Polynomial::from_monomial(big, Monomial::var(big.nvars(), tn));
    Polynomial one_minus_t =
        poly_sub(Polynomial::constant(big, big.element(1)), t, big_ord);

    auto widen = [&](const Polynomial& f) {
        std::vector<Term> terms;
        for (const auto& tm : f.terms()) terms.push_back({tm.mono.widened(big.nvars()), tm.coeff});
        return Polynomial::from_terms(std::move(terms), big_ord);
    };

    std::vector<Polynomial> gens;
    for (const Polynomial& f : I.gens()) gens.push_back(poly_mul(t, widen(f), big_ord));
    for (const Polynomial& g : J.gens()) gens.push_back(poly_mul(one_minus_t, widen(g), big_ord));

    return eliminate(PolyIdeal(big, std::move(gens)), 1u << tn);
}

PolyIdeal colon(const PolyIdeal& I, const Polynomial& f) {
    if (f.is_zero()) throw StructuralError("colon by the zero polynomial");
    if (f.is_constant()) return I;
    MonomialOrder ord = I.default_order();
    Polynomial fn = f.normalized(ord);
    PolyIdeal meet = intersect(I, PolyIdeal(I.ring(), {fn}));
    std::vector<Polynomial> quots;
    std::vector<Polynomial> divisor{fn};
    for (const Polynomial& g : meet.gens()) {
        DivisionResult d = divide(g, divisor, ord);
        if (!d.remainder.is_zero())
            throw InvariantViolation("colon: intersection generator not divisible by f");
        quots.push_back(d.quotients[0]);
    }
    return PolyIdeal(I.ring(), std::move(quots));
}

PolyIdeal colon_ideal(const PolyIdeal& I, const PolyIdeal& J) {
    if (!(I.ring() == J.ring())) throw StructuralError("colon_ideal: different ambient rings");
    bool first = true;
    PolyIdeal acc(I.ring(), {Polynomial::constant(I.ring(), I.ring().element(1))});
    for (const Polynomial& g : J.gens()) {
        if (g.is_zero()) continue;
        PolyIdeal c = colon(I, g);
        acc = first ? c : intersect(acc, c);
        first = false;
    }
    return acc; // (I : (0)) is the unit ideal
}

PolyIdeal saturation_by_extra_var(const PolyIdeal& I, const Polynomial& f) {
    if (f.is_zero()) throw StructuralError("saturation by the zero polynomial");
    PolyRing big = I.ring().appended(I.ring().fresh_var_name());
    int tn = big.nvars() - 1;
    MonomialOrder big_ord = MonomialOrder::grevlex(big.nvars());
    Polynomial t = Polynomial::from_monomial(big, Monomial::var(big.nvars(), tn));

    auto widen = [&](const Polynomial& g) {
        std::vector<Term> terms;
        for (const auto& tm : g.terms()) terms.push_back({tm.mono.widened(big.nvars()), tm.coeff});
        return Polynomial::from_terms(std::move(terms), big_ord);
    };

    std::vector<Polynomial> gens;
    for (const Polynomial& g : I.gens()) gens.push_back(widen(g));
    gens.push_back(poly_sub(Polynomial::constant(big, big.element(1)),
                            poly_mul(t, widen(f), big_ord), big_ord));
    return eliminate(PolyIdeal(big, std::move(gens)), 1u << tn);
}

PolyIdeal saturation(const PolyIdeal& I, const Polynomial& f) {
    if (f.is_zero()) throw StructuralError("saturation by the zero polynomial");
    PolyIdeal cur = I;
    for (int k = 0; k < 1024; ++k) {
        PolyIdeal next = colon(cur, f);
        if (ideal_equal(cur, next)) {
#ifndef NDEBUG
            if (!ideal_equal(cur, saturation_by_extra_var(I, f)))
                throw InvariantViolation("saturation: the two routes disagree");
#endif
            return cur;
        }
        cur = next;
    }
    throw InvariantViolation("saturation: colon chain failed to stabilize");
}

DimensionCertificate krull_dim(const PolyIdeal& I) {
    auto gb = I.basis();
    if (gb->size() == 1 && (*gb)[0].is_constant()) return {-1, 0};

    int n = I.ring().nvars();
    std::vector<uint32_t> supports;
    for (const Polynomial& g : *gb) supports.push_back(g.leading_term().mono.support());

    // prefer larger independent sets, then the lexicographically earliest
    // variable sequence (the lowest index where the sets differ belongs to
    // the preferred one)
    auto better = [](uint32_t a, uint32_t b) {
        int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        if (pa != pb) return pa > pb;
        uint32_t x = a ^ b;
        return x != 0 && (a & (x & -x)) != 0;
    };

    // the empty set is independent for every proper ideal
    uint32_t best = 0;
    for (uint32_t s = 1; s < (1u << n); ++s) {
        bool independent = true;
        for (uint32_t sup : supports) {
            if ((sup & ~s) == 0) { independent = false; break; }
        }
        if (independent && better(s, best)) best = s;
    }
    return {__builtin_popcount(best), best};
}

} // namespace qk
