#include "qk/ring.hpp"

#include <algorithm>

namespace qk {

bool is_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

PolyRing::PolyRing(uint32_t m, std::vector<std::string> var_names)
    : modulus(m), vars(std::move(var_names)) {
    if (!is_prime_u32(modulus) || modulus >= (1u << 31))
        throw StructuralError(std::to_string(modulus) + " is not an admissible prime modulus");
    if (nvars() > kMaxVars)
        throw StructuralError("too many variables (max " + std::to_string(kMaxVars) + ")");
    for (const auto& v : vars) {
        if (!is_identifier(v)) throw StructuralError("invalid variable name '" + v + "'");
        if (std::count(vars.begin(), vars.end(), v) != 1)
            throw StructuralError("duplicate variable name '" + v + "'");
    }
}

int PolyRing::var_index(const std::string& name) const {
    for (int i = 0; i < nvars(); ++i)
        if (vars[static_cast<size_t>(i)] == name) return i;
    return -1;
}

std::string PolyRing::fresh_var_name() const {
    if (var_index("t") < 0) return "t";
    for (int k = 1;; ++k) {
        std::string c = "t" + std::to_string(k);
        if (var_index(c) < 0) return c;
    }
}

PolyRing PolyRing::appended(const std::string& name) const {
    if (var_index(name) >= 0)
        throw StructuralError("fresh variable '" + name + "' collides with a ring variable");
    std::vector<std::string> v = vars;
    v.push_back(name);
    return PolyRing(modulus, std::move(v));
}

PolyRing PolyRing::without_vars(uint32_t drop_mask) const {
    std::vector<std::string> v;
    for (int i = 0; i < nvars(); ++i)
        if (!(drop_mask & (1u << i))) v.push_back(vars[static_cast<size_t>(i)]);
    return PolyRing(modulus, std::move(v));
}

} // namespace qk
