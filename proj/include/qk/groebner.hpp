#pragma once

#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "qk/polynomial.hpp"

namespace qk {

// Krull dimension of k[X]/I with a maximal independent variable set as
// witness. dim == -1 encodes the unit ideal.
struct DimensionCertificate {
    int dim = -1;
    uint32_t witness_mask = 0;
};

// An ideal of the ambient ring k[X], with a write-once cache of reduced
// Groebner bases keyed by order. Copies share the cache.
class PolyIdeal {
public:
    PolyIdeal(PolyRing ring, std::vector<Polynomial> gens);

    const PolyRing& ring() const { return ring_; }
    std::span<const Polynomial> gens() const { return gens_; }
    MonomialOrder default_order() const { return MonomialOrder::grevlex(ring_.nvars()); }

    // Reduced Groebner basis (monic, pairwise non-divisible leading terms,
    // tails reduced, canonically sorted). Deterministic for fixed input and
    // order; computed on first demand and immutable afterwards.
    std::shared_ptr<const std::vector<Polynomial>> basis(const MonomialOrder& ord) const;
    std::shared_ptr<const std::vector<Polynomial>> basis() const;

private:
    PolyRing ring_;
    std::vector<Polynomial> gens_;

    struct Cache {
        std::mutex mutex;
        std::vector<std::pair<MonomialOrder, std::shared_ptr<const std::vector<Polynomial>>>>
            entries;
    };
    std::shared_ptr<Cache> cache_;
};

// Buchberger with normal pair selection (minimal lcm degree first) and the
// coprimality + chain criteria; returns the reduced basis.
std::vector<Polynomial> buchberger(std::span<const Polynomial> gens, const PolyRing& ring,
                                   const MonomialOrder& ord);

struct DivisionResult {
    std::vector<Polynomial> quotients; // one per divisor
    Polynomial remainder;
};
DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors,
                      const MonomialOrder& ord);

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis,
                       const MonomialOrder& ord);
Polynomial normal_form(const Polynomial& f, const PolyIdeal& I, const MonomialOrder& ord);
Polynomial normal_form(const Polynomial& f, const PolyIdeal& I);

bool ideal_member(const Polynomial& f, const PolyIdeal& I);
// J subseteq I
bool ideal_contains(const PolyIdeal& I, const PolyIdeal& J);
bool ideal_equal(const PolyIdeal& I, const PolyIdeal& J);
bool is_unit_ideal(const PolyIdeal& I);
bool is_zero_ideal(const PolyIdeal& I);

// I cap k[remaining variables], returned in the smaller ring.
PolyIdeal eliminate(const PolyIdeal& I, uint32_t drop_mask);

PolyIdeal intersect(const PolyIdeal& I, const PolyIdeal& J);

// (I : f) = { g : g*f in I }; f must be nonzero.
PolyIdeal colon(const PolyIdeal& I, const Polynomial& f);
// (I : J) = intersection of (I : g) over generators g of J; (I : (0)) = (1).
PolyIdeal colon_ideal(const PolyIdeal& I, const PolyIdeal& J);

// (I : f^inf) by iterated colon until stabilization; in debug builds the
// result is cross-checked against the extra-variable route.
PolyIdeal saturation(const PolyIdeal& I, const Polynomial& f);
// (I + (1 - t*f)) cap k[X] via elimination of the fresh variable t.
PolyIdeal saturation_by_extra_var(const PolyIdeal& I, const Polynomial& f);

// Independent-set method on the leading-term ideal: dim k[X]/I is the size
// of the largest S with LT(I) cap k[S] = 0. Ties broken lexicographically
// on variable index.
DimensionCertificate krull_dim(const PolyIdeal& I);

} // namespace qk
