#include "digitcurve/kernels.hpp"

#if defined(__aarch64__) || defined(__ARM_NEON)

#include <arm_neon.h>

namespace digitcurve::kernels::neon {

namespace {

inline uint64x2_t nonzero(uint64x2_t v) {
    // vtstq sets all ones where v & v != 0.
    return vandq_u64(vtstq_u64(v, v), vdupq_n_u64(1));
}

inline uint64x2_t occurrences(uint64x2_t x, int n) {
    uint64x2_t occ = veorq_u64(x, vdupq_n_u64(~0ull));
    for (int j = 1; j <= n; ++j) occ = vandq_u64(occ, vshlq_u64(x, vdupq_n_s64(-j)));
    return occ;
}

inline uint64x2_t parity64(uint64x2_t x) {
    // Byte popcounts summed pairwise; parity is the low bit of the total.
    const uint8x16_t bytes = vcntq_u8(vreinterpretq_u8_u64(x));
    const uint64x2_t total = vpaddlq_u32(vpaddlq_u16(vpaddlq_u8(bytes)));
    return vandq_u64(total, vdupq_n_u64(1));
}

inline void store_bits(uint64x2_t lanes, std::uint8_t* out) {
    out[0] = static_cast<std::uint8_t>(vgetq_lane_u64(lanes, 0));
    out[1] = static_cast<std::uint8_t>(vgetq_lane_u64(lanes, 1));
}

}  // namespace

void body_turns(std::int64_t first, std::uint8_t* out, std::size_t count) {
    const uint64x2_t one = vdupq_n_u64(1);
    const uint64x2_t zero = vdupq_n_u64(0);
    const auto f = static_cast<std::uint64_t>(first);
    uint64x2_t k = vcombine_u64(vcreate_u64(f), vcreate_u64(f + 1));
    std::size_t i = 0;
    for (; i + 2 <= count; i += 2) {
        const uint64x2_t low = vandq_u64(k, vsubq_u64(zero, k));
        const uint64x2_t odd = vandq_u64(k, one);
        const uint64x2_t b1 = nonzero(vandq_u64(k, vshlq_n_u64(low, 1)));
        const uint64x2_t b2 = nonzero(vandq_u64(k, vshlq_n_u64(low, 2)));
        uint64x2_t p = veorq_u64(odd, vandq_u64(b1, b2));
        p = veorq_u64(p, vbicq_u64(b1, odd));
        store_bits(p, out + i);
        k = vaddq_u64(k, vdupq_n_u64(2));
    }
    scalar::body_turns(first + static_cast<std::int64_t>(i), out + i, count - i);
}

void pattern_turns(int n, std::int64_t first, std::uint8_t* out, std::size_t count) {
    const uint64x2_t one = vdupq_n_u64(1);
    const auto f = static_cast<std::uint64_t>(first);
    uint64x2_t k = vcombine_u64(vcreate_u64(f), vcreate_u64(f + 1));
    std::size_t i = 0;
    for (; i + 2 <= count; i += 2) {
        const uint64x2_t diff = veorq_u64(occurrences(k, n), occurrences(vsubq_u64(k, one), n));
        const uint64x2_t p = vandq_u64(veorq_u64(k, parity64(diff)), one);
        store_bits(p, out + i);
        k = vaddq_u64(k, vdupq_n_u64(2));
    }
    scalar::pattern_turns(n, first + static_cast<std::int64_t>(i), out + i, count - i);
}

}  // namespace digitcurve::kernels::neon

#endif
