#pragma once

// Batch turn kernels for the digit rules.
//
// Each kernel fills out[i] with 1 when the turn at index first + i is Left and
// 0 when it is Right. Every ISA variant computes the same bytes; the scalar
// variants are the reference and the SIMD ones are checked against them.

#include <cstdint>
#include <span>
#include <string_view>

namespace digitcurve::kernels {

enum class Isa { Scalar, Avx2, Neon };

std::string_view isa_name(Isa isa);
bool isa_available(Isa isa);

/// Widest ISA supported by the running CPU (cached after the first call).
Isa best_isa();

/// Largest |k| accepted by the batch kernels (exclusive).
inline constexpr std::int64_t kMaxIndex = std::int64_t{1} << 61;

/// Turn at k of the "110" rule, P(k) + Q(k) + R(k) odd => Left.
/// The range [first, first + out.size()) must avoid 0 and stay within kMaxIndex.
void body_turns(std::int64_t first, std::span<std::uint8_t> out, Isa isa);
inline void body_turns(std::int64_t first, std::span<std::uint8_t> out) {
    body_turns(first, out, best_isa());
}

/// Turn at k >= 1 of the pattern rule for 1^n 0:
/// k + alpha_n(k) - alpha_n(k - 1) odd => Left.
void pattern_turns(int n, std::int64_t first, std::span<std::uint8_t> out, Isa isa);
inline void pattern_turns(int n, std::int64_t first, std::span<std::uint8_t> out) {
    pattern_turns(n, first, out, best_isa());
}

namespace scalar {
void body_turns(std::int64_t first, std::uint8_t* out, std::size_t count);
void pattern_turns(int n, std::int64_t first, std::uint8_t* out, std::size_t count);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
void body_turns(std::int64_t first, std::uint8_t* out, std::size_t count);
void pattern_turns(int n, std::int64_t first, std::uint8_t* out, std::size_t count);
}  // namespace avx2
#endif

#if defined(__aarch64__) || defined(__ARM_NEON)
namespace neon {
void body_turns(std::int64_t first, std::uint8_t* out, std::size_t count);
void pattern_turns(int n, std::int64_t first, std::uint8_t* out, std::size_t count);
}  // namespace neon
#endif

}  // namespace digitcurve::kernels
