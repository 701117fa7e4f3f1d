#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qk/errors.hpp"
#include "qk/fp.hpp"
#include "qk/monomial.hpp"

namespace qk {

// Descriptor of an ambient polynomial ring GF(p)[x1..xn].
struct PolyRing {
    PolyRing(uint32_t modulus, std::vector<std::string> var_names);

    uint32_t modulus;
    std::vector<std::string> vars;

    int nvars() const { return static_cast<int>(vars.size()); }
    int var_index(const std::string& name) const; // -1 if absent
    const std::string& var_name(int i) const { return vars[static_cast<size_t>(i)]; }

    Fp element(int64_t v) const { return Fp::from_int(v, modulus); }

    bool operator==(const PolyRing& o) const { return modulus == o.modulus && vars == o.vars; }

    // First unused name from the reserved sequence t, t1, t2, ...
    std::string fresh_var_name() const;
    // Appends a variable; the name must not collide with an existing one.
    PolyRing appended(const std::string& name) const;
    PolyRing without_vars(uint32_t drop_mask) const;
};

bool is_identifier(const std::string& s);

} // namespace qk
