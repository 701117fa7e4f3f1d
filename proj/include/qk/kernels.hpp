#pragma once

#include <cstdint>
#include <vector>

namespace qk::kern {

// Monomial exponent vectors are fixed 16-lane arrays of uint16_t (one lane
// per ring variable, unused lanes zero). Every kernel treats all 16 lanes;
// zero padding is neutral for each operation, so callers never mask.
inline constexpr int kLanes = 16;

// Per-variable exponent cap. Sums of two in-cap exponents stay below 2^16,
// so lane overflow is detectable exactly.
inline constexpr uint16_t kExpCap = 32767;

// One table of function pointers per implementation (scalar reference,
// AVX2, ...). All implementations must agree bit-for-bit; the equivalence
// test suite enforces this against the scalar reference.
struct Kernels {
    const char* name;

    // out = a + b componentwise; returns false iff some lane exceeds kExpCap.
    bool (*add_checked)(const uint16_t* a, const uint16_t* b, uint16_t* out);
    // out = a - b componentwise (caller guarantees b divides a).
    void (*sub)(const uint16_t* a, const uint16_t* b, uint16_t* out);
    // true iff a[i] <= b[i] for all lanes (a divides b).
    bool (*divides)(const uint16_t* a, const uint16_t* b);
    // out = max(a, b) componentwise (monomial lcm).
    void (*max)(const uint16_t* a, const uint16_t* b, uint16_t* out);
    // out = min(a, b) componentwise (monomial gcd).
    void (*min)(const uint16_t* a, const uint16_t* b, uint16_t* out);
    bool (*equal)(const uint16_t* a, const uint16_t* b);
    // true iff min(a, b) == 0 in every lane (disjoint supports).
    bool (*disjoint)(const uint16_t* a, const uint16_t* b);
    uint32_t (*total_degree)(const uint16_t* a);
    // bit i set iff a[i] != 0
    uint32_t (*support)(const uint16_t* a);
    // -1 / 0 / +1; first differing lane decides, larger exponent wins.
    int (*cmp_lex)(const uint16_t* a, const uint16_t* b);
    // -1 / 0 / +1 given cached total degrees; degree first, then the last
    // differing lane decides with the *smaller* exponent winning.
    int (*cmp_grevlex)(const uint16_t* a, const uint16_t* b, uint32_t deg_a, uint32_t deg_b);
};

const Kernels& scalar();

// All tables usable on this machine, scalar first.
const std::vector<const Kernels*>& available();

// The table selected at startup (best available); tests may override.
const Kernels& active();
void set_active(const Kernels& k);

bool cpu_has_avx2();
#if defined(__x86_64__) || defined(_M_X64)
const Kernels& avx2();
#endif

} // namespace qk::kern
