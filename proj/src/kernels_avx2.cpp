// AVX2 variant of the monomial kernels. One 256-bit register holds a whole
// exponent vector (16 x u16). This TU is the only one compiled with -mavx2;
// nothing here runs unless cpu_has_avx2() said yes.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "qk/kernels.hpp"

namespace qk::kern {
namespace {

inline __m256i load(const uint16_t* p) {
    return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

inline void store(uint16_t* p, __m256i v) {
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

// In-cap inputs never exceed 2*kExpCap = 65534, so the 16-bit add is exact
// and "lane > kExpCap" is exactly "bit 15 set".
bool v_add_checked(const uint16_t* a, const uint16_t* b, uint16_t* out) {
    __m256i r = _mm256_add_epi16(load(a), load(b));
    store(out, r);
    uint32_t msb = static_cast<uint32_t>(_mm256_movemask_epi8(r));
    return (msb & 0xAAAAAAAAu) == 0;
}

void v_sub(const uint16_t* a, const uint16_t* b, uint16_t* out) {
    store(out, _mm256_sub_epi16(load(a), load(b)));
}

bool v_divides(const uint16_t* a, const uint16_t* b) {
    __m256i va = load(a);
    __m256i le = _mm256_cmpeq_epi16(_mm256_min_epu16(va, load(b)), va);
    return _mm256_movemask_epi8(le) == -1;
}

void v_max(const uint16_t* a, const uint16_t* b, uint16_t* out) {
    store(out, _mm256_max_epu16(load(a), load(b)));
}

void v_min(const uint16_t* a, const uint16_t* b, uint16_t* out) {
    store(out, _mm256_min_epu16(load(a), load(b)));
}

bool v_equal(const uint16_t* a, const uint16_t* b) {
    return _mm256_movemask_epi8(_mm256_cmpeq_epi16(load(a), load(b))) == -1;
}

bool v_disjoint(const uint16_t* a, const uint16_t* b) {
    __m256i m = _mm256_min_epu16(load(a), load(b));
    return _mm256_movemask_epi8(_mm256_cmpeq_epi16(m, _mm256_setzero_si256())) == -1;
}

uint32_t v_total_degree(const uint16_t* a) {
    // lanes are <= kExpCap, so the signed 16-bit multiply-add is exact
    __m256i s = _mm256_madd_epi16(load(a), _mm256_set1_epi16(1));
    __m128i lo = _mm256_castsi256_si128(s);
    __m128i hi = _mm256_extracti128_si256(s, 1);
    __m128i t = _mm_add_epi32(lo, hi);
    t = _mm_add_epi32(t, _mm_shuffle_epi32(t, _MM_SHUFFLE(1, 0, 3, 2)));
    t = _mm_add_epi32(t, _mm_shuffle_epi32(t, _MM_SHUFFLE(2, 3, 0, 1)));
    return static_cast<uint32_t>(_mm_cvtsi128_si32(t));
}

uint32_t v_support(const uint16_t* a) {
    __m256i z = _mm256_cmpeq_epi16(load(a), _mm256_setzero_si256());
    uint32_t zero2 = static_cast<uint32_t>(_mm256_movemask_epi8(z)); // 2 bits per lane
    uint32_t m = 0;
    for (int i = 0; i < kLanes; ++i)
        if (((zero2 >> (2 * i)) & 1u) == 0) m |= 1u << i;
    return m;
}

inline uint32_t neq_bits(const uint16_t* a, const uint16_t* b) {
    __m256i eq = _mm256_cmpeq_epi16(load(a), load(b));
    return ~static_cast<uint32_t>(_mm256_movemask_epi8(eq));
}

int v_cmp_lex(const uint16_t* a, const uint16_t* b) {
    uint32_t neq = neq_bits(a, b);
    if (neq == 0) return 0;
    int lane = __builtin_ctz(neq) / 2;
    return a[lane] > b[lane] ? 1 : -1;
}

int v_cmp_grevlex(const uint16_t* a, const uint16_t* b, uint32_t deg_a, uint32_t deg_b) {
    if (deg_a != deg_b) return deg_a > deg_b ? 1 : -1;
    uint32_t neq = neq_bits(a, b);
    if (neq == 0) return 0;
    int lane = (31 - __builtin_clz(neq)) / 2;
    return a[lane] < b[lane] ? 1 : -1;
}

} // namespace

const Kernels& avx2() {
    static const Kernels k = {
        "avx2",  v_add_checked, v_sub,          v_divides, v_max,     v_min,
        v_equal, v_disjoint,    v_total_degree, v_support, v_cmp_lex, v_cmp_grevlex,
    };
    return k;
}

} // namespace qk::kern

#endif // x86_64
