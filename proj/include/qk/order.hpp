#pragma once

#include <array>
#include <cstdint>

#include "qk/monomial.hpp"

namespace qk {

// A global monomial order: total, multiplicative, with 1 minimal.
// kind block(k) compares the first k positions (after the variable
// permutation) as a grevlex block, then the rest; it is the elimination
// order used by eliminate / intersect / saturation.
struct MonomialOrder {
    enum class Kind : uint8_t { lex, grevlex, block };

    Kind kind = Kind::grevlex;
    uint8_t nvars = 0;
    uint8_t elim_block = 0;                 // leading block size, kind == block only
    std::array<uint8_t, kMaxVars> perm{};   // position -> variable index
    bool identity = true;                   // perm is the identity (fast path)

    static MonomialOrder grevlex(int nvars);
    static MonomialOrder lex(int nvars);
    // Variables in drop_mask come first (ascending index), then the rest:
    // any monomial involving a dropped variable sorts above every monomial
    // that avoids them all.
    static MonomialOrder elimination(int nvars, uint32_t drop_mask);

    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    bool operator==(const MonomialOrder& o) const;
};

} // namespace qk
