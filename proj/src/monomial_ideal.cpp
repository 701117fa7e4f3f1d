#include "qk/monomial_ideal.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace qk {

namespace {

// degree first, then lex-descending, so (x^2, x*y) and (x, y) read naturally
bool mono_canon_less(const Monomial& a, const Monomial& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    return kern::active().cmp_lex(a.data(), b.data()) > 0;
}

std::string encode(const MonomialIdeal& I) {
    std::string s;
    for (const Monomial& g : I.gens()) {
        for (int i = 0; i < I.nvars(); ++i) {
            s += std::to_string(g.exponent(i));
            s += ',';
        }
        s += ';';
    }
    return s;
}

} // namespace

bool varset_less(uint32_t a, uint32_t b) {
    uint32_t x = a ^ b;
    return x != 0 && (a & (x & -x)) != 0;
}

bool prime_less(const MonomialPrime& a, const MonomialPrime& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return varset_less(a.mask, b.mask);
}

MonomialIdeal MonomialIdeal::unit(int nvars) {
    return MonomialIdeal(nvars, {Monomial::one(nvars)});
}

MonomialIdeal MonomialIdeal::from_generators(int nvars, std::vector<Monomial> gens) {
    for (const Monomial& g : gens) {
        if (g.nvars() != nvars) throw StructuralError("monomial ideal: arity mismatch");
        if (g.is_one()) return unit(nvars);
    }
    std::vector<Monomial> minimal;
    for (size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < gens.size() && !redundant; ++j) {
            if (i == j) continue;
            if (gens[j] == gens[i]) {
                redundant = j < i; // keep one copy
            } else if (mono_divides(gens[j], gens[i])) {
                redundant = true;
            }
        }
        if (!redundant) minimal.push_back(gens[i]);
    }
    std::sort(minimal.begin(), minimal.end(), mono_canon_less);
    return MonomialIdeal(nvars, std::move(minimal));
}

bool MonomialIdeal::contains(const Monomial& m) const {
    for (const Monomial& g : gens_)
        if (mono_divides(g, m)) return true;
    return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
    for (const Monomial& g : other.gens_)
        if (!contains(g)) return false;
    return true;
}

uint32_t MonomialIdeal::max_generator_degree() const {
    uint32_t d = 0;
    for (const Monomial& g : gens_) d = std::max(d, g.total_degree());
    return d;
}

MonomialIdeal mi_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    std::vector<Monomial> gens(a.gens().begin(), a.gens().end());
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    return MonomialIdeal::from_generators(a.nvars(), std::move(gens));
}

MonomialIdeal mi_intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.is_unit()) return b;
    if (b.is_unit()) return a;
    std::vector<Monomial> gens;
    for (const Monomial& g : a.gens())
        for (const Monomial& h : b.gens()) gens.push_back(mono_lcm(g, h));
    return MonomialIdeal::from_generators(a.nvars(), std::move(gens));
}

MonomialIdeal mi_colon(const MonomialIdeal& I, const Monomial& m) {
    std::vector<Monomial> gens;
    for (const Monomial& g : I.gens()) gens.push_back(mono_quotient(g, mono_gcd(g, m)));
    return MonomialIdeal::from_generators(I.nvars(), std::move(gens));
}

// ---------------------------------------------------------------------------
// irreducible decomposition

namespace {

using Memo = std::map<std::string, std::vector<MonomialIdeal>>;

std::vector<MonomialIdeal> decompose(const MonomialIdeal& I, Memo& memo) {
    std::string key = encode(I);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    // find a generator with at least two variables in its support
    int split_idx = -1;
    for (size_t i = 0; i < I.gens().size(); ++i) {
        if (__builtin_popcount(I.gens()[i].support()) >= 2) {
            split_idx = static_cast<int>(i);
            break;
        }
    }

    std::vector<MonomialIdeal> result;
    if (split_idx < 0) {
        result.push_back(I); // all generators are pure powers: irreducible
    } else {
        const Monomial& m = I.gens()[static_cast<size_t>(split_idx)];
        int v = __builtin_ctz(m.support());
        Monomial u = Monomial::var(I.nvars(), v, m.exponent(v));
        Monomial w = mono_quotient(m, u); // coprime to u by construction

        for (const Monomial& piece : {u, w}) {
            std::vector<Monomial> gens;
            for (size_t i = 0; i < I.gens().size(); ++i)
                if (static_cast<int>(i) != split_idx) gens.push_back(I.gens()[i]);
            gens.push_back(piece);
            auto sub = decompose(MonomialIdeal::from_generators(I.nvars(), std::move(gens)), memo);
            result.insert(result.end(), sub.begin(), sub.end());
        }
    }
    memo.emplace(std::move(key), result);
    return result;
}

} // namespace

IrreducibleDecomposition irreducible_decomposition(const MonomialIdeal& I) {
    if (I.is_unit()) return {true, {}};
    if (I.is_zero()) return {false, {I}};

    Memo memo;
    std::vector<MonomialIdeal> comps = decompose(I, memo);

    // dedupe; canonical order: by radical prime, then exponent encoding
    auto radical_mask = [](const MonomialIdeal& c) {
        uint32_t m = 0;
        for (const Monomial& g : c.gens()) m |= g.support();
        return m;
    };
    std::sort(comps.begin(), comps.end(), [&](const MonomialIdeal& a, const MonomialIdeal& b) {
        MonomialPrime pa{radical_mask(a), a.nvars()};
        MonomialPrime pb{radical_mask(b), b.nvars()};
        if (!(pa == pb)) return prime_less(pa, pb);
        return encode(a) < encode(b);
    });
    comps.erase(std::unique(comps.begin(), comps.end()), comps.end());

    // irredundant: drop any component containing the intersection of the rest
    for (bool changed = true; changed && comps.size() > 1;) {
        changed = false;
        for (size_t i = 0; i < comps.size(); ++i) {
            MonomialIdeal rest = MonomialIdeal::unit(I.nvars());
            for (size_t j = 0; j < comps.size(); ++j)
                if (j != i) rest = mi_intersect(rest, comps[j]);
            if (comps[i].contains(rest)) {
                comps.erase(comps.begin() + static_cast<long>(i));
                changed = true;
                break;
            }
        }
    }
    return {false, std::move(comps)};
}

std::vector<MonomialPrime> ass_monomial(const MonomialIdeal& I) {
    if (I.is_unit()) throw StructuralError("associated primes of the unit ideal");
    IrreducibleDecomposition dec = irreducible_decomposition(I);
    std::vector<MonomialPrime> primes;
    for (const MonomialIdeal& c : dec.components) {
        uint32_t mask = 0;
        for (const Monomial& g : c.gens()) mask |= g.support();
        MonomialPrime p{mask, I.nvars()};
        if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
    }
    std::sort(primes.begin(), primes.end(), prime_less);
    return primes;
}

std::vector<MonomialPrime> min_primes_monomial(const MonomialIdeal& I) {
    if (I.is_unit()) throw StructuralError("minimal primes of the unit ideal");
    if (I.is_zero()) return {MonomialPrime{0, I.nvars()}};

    std::vector<uint32_t> supports;
    for (const Monomial& g : I.gens()) supports.push_back(g.support());

    std::vector<uint32_t> transversals;
    // DFS over generators: branch on each variable of the first uncovered
    // support (<= 16 variables, bitset masks)
    auto rec = [&](auto&& self, uint32_t mask, size_t idx) -> void {
        if (idx == supports.size()) {
            transversals.push_back(mask);
            return;
        }
        if (supports[idx] & mask) {
            self(self, mask, idx + 1);
            return;
        }
        uint32_t s = supports[idx];
        while (s) {
            uint32_t bit = s & -s;
            self(self, mask | bit, idx + 1);
            s ^= bit;
        }
    };
    rec(rec, 0, 0);

    std::vector<MonomialPrime> minimal;
    for (uint32_t t : transversals) {
        bool is_min = std::none_of(transversals.begin(), transversals.end(), [&](uint32_t o) {
            return o != t && (o & ~t) == 0;
        });
        MonomialPrime p{t, I.nvars()};
        if (is_min && std::find(minimal.begin(), minimal.end(), p) == minimal.end())
            minimal.push_back(p);
    }
    std::sort(minimal.begin(), minimal.end(), prime_less);
    return minimal;
}

MonomialIdeal radical_monomial(const MonomialIdeal& I) {
    std::vector<Monomial> gens;
    for (const Monomial& g : I.gens()) {
        Monomial s = Monomial::one(I.nvars());
        uint32_t sup = g.support();
        for (int i = 0; i < I.nvars(); ++i)
            if (sup & (1u << i)) s.set_exponent(i, 1);
        gens.push_back(s);
    }
    return MonomialIdeal::from_generators(I.nvars(), std::move(gens));
}

MonomialIdeal saturate_by_vars(const MonomialIdeal& I, uint32_t var_mask) {
    std::vector<Monomial> gens;
    for (const Monomial& g : I.gens()) gens.push_back(g.with_vars_erased(var_mask));
    return MonomialIdeal::from_generators(I.nvars(), std::move(gens));
}

// ---------------------------------------------------------------------------
// bridges

PolyIdeal to_poly_ideal(const MonomialIdeal& I, const PolyRing& ring) {
    if (ring.nvars() != I.nvars()) throw StructuralError("to_poly_ideal: arity mismatch");
    std::vector<Polynomial> gens;
    for (const Monomial& g : I.gens()) gens.push_back(Polynomial::from_monomial(ring, g));
    return PolyIdeal(ring, std::move(gens));
}

PolyIdeal to_poly_ideal(const MonomialPrime& p, const PolyRing& ring) {
    if (ring.nvars() != p.nvars) throw StructuralError("to_poly_ideal: arity mismatch");
    std::vector<Polynomial> gens;
    for (int i = 0; i < p.nvars; ++i)
        if (p.mask & (1u << i))
            gens.push_back(Polynomial::from_monomial(ring, Monomial::var(p.nvars, i)));
    return PolyIdeal(ring, std::move(gens));
}

std::optional<MonomialIdeal> monomial_form(const PolyIdeal& I) {
    auto gb = I.basis();
    std::vector<Monomial> gens;
    for (const Polynomial& g : *gb) {
        if (g.term_count() != 1) return std::nullopt;
        gens.push_back(g.leading_term().mono);
    }
    return MonomialIdeal::from_generators(I.ring().nvars(), std::move(gens));
}

} // namespace qk
