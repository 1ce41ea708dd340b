// Compiled with -mavx2; only reached through the runtime dispatcher.
#include "digitcurve/kernels.hpp"

#include <immintrin.h>

namespace digitcurve::kernels::avx2 {

namespace {

// Four lanes of 0/1 in the low bit of each 64-bit lane -> four output bytes.
inline void store_bits(__m256i lanes, std::uint8_t* out) {
    const int mask = _mm256_movemask_pd(_mm256_castsi256_pd(_mm256_slli_epi64(lanes, 63)));
    out[0] = static_cast<std::uint8_t>(mask & 1);
    out[1] = static_cast<std::uint8_t>((mask >> 1) & 1);
    out[2] = static_cast<std::uint8_t>((mask >> 2) & 1);
    out[3] = static_cast<std::uint8_t>((mask >> 3) & 1);
}

inline __m256i nonzero(__m256i v) {
    const __m256i zero = _mm256_setzero_si256();
    const __m256i one = _mm256_set1_epi64x(1);
    return _mm256_andnot_si256(_mm256_cmpeq_epi64(v, zero), one);
}

inline __m256i occurrences(__m256i x, int n) {
    __m256i occ = _mm256_andnot_si256(x, _mm256_set1_epi64x(-1));
    for (int j = 1; j <= n; ++j) occ = _mm256_and_si256(occ, _mm256_srl_epi64(x, _mm_cvtsi32_si128(j)));
    return occ;
}

inline __m256i parity64(__m256i x) {
    x = _mm256_xor_si256(x, _mm256_srli_epi64(x, 32));
    x = _mm256_xor_si256(x, _mm256_srli_epi64(x, 16));
    x = _mm256_xor_si256(x, _mm256_srli_epi64(x, 8));
    x = _mm256_xor_si256(x, _mm256_srli_epi64(x, 4));
    x = _mm256_xor_si256(x, _mm256_srli_epi64(x, 2));
    x = _mm256_xor_si256(x, _mm256_srli_epi64(x, 1));
    return _mm256_and_si256(x, _mm256_set1_epi64x(1));
}

}  // namespace

void body_turns(std::int64_t first, std::uint8_t* out, std::size_t count) {
    const __m256i one = _mm256_set1_epi64x(1);
    const __m256i step = _mm256_set1_epi64x(4);
    __m256i k = _mm256_setr_epi64x(first, first + 1, first + 2, first + 3);
    std::size_t i = 0;
    for (; i + 4 <= count; i += 4) {
        const __m256i low = _mm256_and_si256(k, _mm256_sub_epi64(_mm256_setzero_si256(), k));
        const __m256i odd = _mm256_and_si256(k, one);
        const __m256i b1 = nonzero(_mm256_and_si256(k, _mm256_slli_epi64(low, 1)));
        const __m256i b2 = nonzero(_mm256_and_si256(k, _mm256_slli_epi64(low, 2)));
        __m256i p = _mm256_xor_si256(odd, _mm256_and_si256(b1, b2));
        p = _mm256_xor_si256(p, _mm256_andnot_si256(odd, b1));
        store_bits(p, out + i);
        k = _mm256_add_epi64(k, step);
    }
    scalar::body_turns(first + static_cast<std::int64_t>(i), out + i, count - i);
}

void pattern_turns(int n, std::int64_t first, std::uint8_t* out, std::size_t count) {
    const __m256i one = _mm256_set1_epi64x(1);
    const __m256i step = _mm256_set1_epi64x(4);
    __m256i k = _mm256_setr_epi64x(first, first + 1, first + 2, first + 3);
    std::size_t i = 0;
    for (; i + 4 <= count; i += 4) {
        const __m256i prev = _mm256_sub_epi64(k, one);
        const __m256i diff = _mm256_xor_si256(occurrences(k, n), occurrences(prev, n));
        const __m256i p = _mm256_and_si256(_mm256_xor_si256(k, parity64(diff)), one);
        store_bits(p, out + i);
        k = _mm256_add_epi64(k, step);
    }
    scalar::pattern_turns(n, first + static_cast<std::int64_t>(i), out + i, count - i);
}

}  // namespace digitcurve::kernels::avx2
