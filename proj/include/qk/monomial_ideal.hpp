#pragma once

#include <optional>
#include <vector>

#include "qk/groebner.hpp"
#include "qk/monomial.hpp"

namespace qk {

// A monomial ideal held as its unique minimal generating set (an antichain
// under divisibility), canonically sorted. The zero ideal has no
// generators; the unit ideal is represented as {1}.
class MonomialIdeal {
public:
    static MonomialIdeal zero(int nvars) { return MonomialIdeal(nvars, {}); }
    static MonomialIdeal unit(int nvars);
    static MonomialIdeal from_generators(int nvars, std::vector<Monomial> gens);

    int nvars() const { return nvars_; }
    std::span<const Monomial> gens() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }
    bool is_proper() const { return !is_unit(); }

    bool contains(const Monomial& m) const;
    bool contains(const MonomialIdeal& other) const; // other subseteq this
    uint32_t max_generator_degree() const;

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
        return a.nvars_ == b.nvars_ && a.gens_ == b.gens_;
    }

private:
    MonomialIdeal(int nvars, std::vector<Monomial> gens)
        : nvars_(nvars), gens_(std::move(gens)) {}

    int nvars_;
    std::vector<Monomial> gens_; // minimal, canonically sorted
};

// The prime (x_i : i in mask); ht = |mask| in k[X], dim k[X]/p = n - |mask|.
struct MonomialPrime {
    uint32_t mask = 0;
    int nvars = 0;

    int size() const { return __builtin_popcount(mask); }
    bool contains(const MonomialPrime& other) const {
        return (other.mask & ~mask) == 0;
    }
    friend bool operator==(const MonomialPrime& a, const MonomialPrime& b) {
        return a.mask == b.mask && a.nvars == b.nvars;
    }
};

// Ascending-index lexicographic comparison of variable subsets; the set
// owning the lowest differing index comes first.
bool varset_less(uint32_t a, uint32_t b);
// Canonical order on primes: size, then varset_less.
bool prime_less(const MonomialPrime& a, const MonomialPrime& b);

MonomialIdeal mi_sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal mi_intersect(const MonomialIdeal& a, const MonomialIdeal& b);
// (I : m)
MonomialIdeal mi_colon(const MonomialIdeal& I, const Monomial& m);

struct IrreducibleDecomposition {
    bool unit = false; // unit ideal: empty decomposition
    std::vector<MonomialIdeal> components;
};

// Irredundant decomposition into ideals generated by pure variable powers,
// by recursive splitting of a generator into coprime factors.
IrreducibleDecomposition irreducible_decomposition(const MonomialIdeal& I);

// Ass(k[X]/I): radicals of the irredundant irreducible components.
// The zero ideal yields the zero prime (empty mask).
std::vector<MonomialPrime> ass_monomial(const MonomialIdeal& I);

// Inclusion-minimal monomial primes containing I: minimal transversals of
// the generator supports.
std::vector<MonomialPrime> min_primes_monomial(const MonomialIdeal& I);

MonomialIdeal radical_monomial(const MonomialIdeal& I);

// Exponents of the variables in var_mask set to zero, re-minimalized;
// equals (I : (prod of those variables)^inf).
MonomialIdeal saturate_by_vars(const MonomialIdeal& I, uint32_t var_mask);

// bridges to the Groebner layer
PolyIdeal to_poly_ideal(const MonomialIdeal& I, const PolyRing& ring);
PolyIdeal to_poly_ideal(const MonomialPrime& p, const PolyRing& ring);
// Detects monomiality from the reduced basis (all elements single terms).
std::optional<MonomialIdeal> monomial_form(const PolyIdeal& I);

} // namespace qk
