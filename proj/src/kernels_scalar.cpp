#include "qk/kernels.hpp"

// Reference implementation. Every other kernel table is tested against
// this one lane-for-lane.

namespace qk::kern {
namespace {

bool s_add_checked(const uint16_t* a, const uint16_t* b, uint16_t* out) {
    bool ok = true;
    for (int i = 0; i < kLanes; ++i) {
        uint32_t s = uint32_t(a[i]) + b[i];
        ok &= s <= kExpCap;
        out[i] = static_cast<uint16_t>(s);
    }
    return ok;
}

void s_sub(const uint16_t* a, const uint16_t* b, uint16_t* out) {
    for (int i = 0; i < kLanes; ++i) out[i] = static_cast<uint16_t>(a[i] - b[i]);
}

bool s_divides(const uint16_t* a, const uint16_t* b) {
    for (int i = 0; i < kLanes; ++i)
        if (a[i] > b[i]) return false;
    return true;
}

void s_max(const uint16_t* a, const uint16_t* b, uint16_t* out) {
    for (int i = 0; i < kLanes; ++i) out[i] = a[i] > b[i] ? a[i] : b[i];
}

void s_min(const uint16_t* a, const uint16_t* b, uint16_t* out) {
    for (int i = 0; i < kLanes; ++i) out[i] = a[i] < b[i] ? a[i] : b[i];
}

bool s_equal(const uint16_t* a, const uint16_t* b) {
    for (int i = 0; i < kLanes; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

bool s_disjoint(const uint16_t* a, const uint16_t* b) {
    for (int i = 0; i < kLanes; ++i)
        if (a[i] != 0 && b[i] != 0) return false;
    return true;
}

uint32_t s_total_degree(const uint16_t* a) {
    uint32_t d = 0;
    for (int i = 0; i < kLanes; ++i) d += a[i];
    return d;
}

uint32_t s_support(const uint16_t* a) {
    uint32_t m = 0;
    for (int i = 0; i < kLanes; ++i)
        if (a[i] != 0) m |= 1u << i;
    return m;
}

int s_cmp_lex(const uint16_t* a, const uint16_t* b) {
    for (int i = 0; i < kLanes; ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    }
    return 0;
}

int s_cmp_grevlex(const uint16_t* a, const uint16_t* b, uint32_t deg_a, uint32_t deg_b) {
    if (deg_a != deg_b) return deg_a > deg_b ? 1 : -1;
    for (int i = kLanes - 1; i >= 0; --i) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

} // namespace

const Kernels& scalar() {
    static const Kernels k = {
        "scalar",     s_add_checked, s_sub,     s_divides,      s_max,     s_min,
        s_equal,      s_disjoint,    s_total_degree, s_support, s_cmp_lex, s_cmp_grevlex,
    };
    return k;
}

} // namespace qk::kern
