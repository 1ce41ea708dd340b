#include <stdexcept>

#include "digitcurve/kernels.hpp"

namespace digitcurve::kernels {

std::string_view isa_name(Isa isa) {
    switch (isa) {
        case Isa::Scalar: return "scalar";
        case Isa::Avx2: return "avx2";
        case Isa::Neon: return "neon";
    }
    return "unknown";
}

bool isa_available(Isa isa) {
    switch (isa) {
        case Isa::Scalar:
            return true;
        case Isa::Avx2:
#if (defined(__x86_64__) || defined(_M_X64)) && (defined(__GNUC__) || defined(__clang__))
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
        case Isa::Neon:
#if defined(__aarch64__) || defined(__ARM_NEON)
            return true;
#else
            return false;
#endif
    }
    return false;
}

Isa best_isa() {
    static const Isa chosen = [] {
        if (isa_available(Isa::Avx2)) return Isa::Avx2;
        if (isa_available(Isa::Neon)) return Isa::Neon;
        return Isa::Scalar;
    }();
    return chosen;
}

namespace {

void check_range(std::int64_t first, std::size_t count) {
    const auto last = first + static_cast<std::int64_t>(count);
    if (first <= -kMaxIndex || last > kMaxIndex)
        throw std::out_of_range("turn kernels: index range exceeds 2^61");
}

}  // namespace

void body_turns(std::int64_t first, std::span<std::uint8_t> out, Isa isa) {
    if (out.empty()) return;
    check_range(first, out.size());
    const auto last = first + static_cast<std::int64_t>(out.size());
    if (first <= 0 && last > 0) throw std::domain_error("body_turns: range contains k = 0");
    if (!isa_available(isa)) throw std::invalid_argument("body_turns: ISA not available");
    switch (isa) {
#if defined(__x86_64__) || defined(_M_X64)
        case Isa::Avx2: return avx2::body_turns(first, out.data(), out.size());
#endif
#if defined(__aarch64__) || defined(__ARM_NEON)
        case Isa::Neon: return neon::body_turns(first, out.data(), out.size());
#endif
        default: return scalar::body_turns(first, out.data(), out.size());
    }
}

void pattern_turns(int n, std::int64_t first, std::span<std::uint8_t> out, Isa isa) {
    if (out.empty()) return;
    if (n < 1 || n > 62) throw std::invalid_argument("pattern_turns: n must be in [1, 62]");
    if (first < 1) throw std::domain_error("pattern_turns: indices start at 1");
    check_range(first, out.size());
    if (!isa_available(isa)) throw std::invalid_argument("pattern_turns: ISA not available");
    switch (isa) {
#if defined(__x86_64__) || defined(_M_X64)
        case Isa::Avx2: return avx2::pattern_turns(n, first, out.data(), out.size());
#endif
#if defined(__aarch64__) || defined(__ARM_NEON)
        case Isa::Neon: return neon::pattern_turns(n, first, out.data(), out.size());
#endif
        default: return scalar::pattern_turns(n, first, out.data(), out.size());
    }
}

}  // namespace digitcurve::kernels
