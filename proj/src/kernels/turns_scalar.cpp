#include "digitcurve/kernels.hpp"

#include <bit>

namespace digitcurve::kernels::scalar {

void body_turns(std::int64_t first, std::uint8_t* out, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) {
        const auto k = static_cast<std::uint64_t>(first + static_cast<std::int64_t>(i));
        const std::uint64_t low = k & (0 - k);
        const std::uint64_t odd = k & 1u;
        const std::uint64_t b1 = (k & (low << 1)) != 0;
        const std::uint64_t b2 = (k & (low << 2)) != 0;
        out[i] = static_cast<std::uint8_t>(odd ^ (b1 & b2) ^ ((odd ^ 1u) & b1));
    }
}

void pattern_turns(int n, std::int64_t first, std::uint8_t* out, std::size_t count) {
    auto occurrences = [n](std::uint64_t x) {
        std::uint64_t occ = ~x;
        for (int j = 1; j <= n; ++j) occ &= x >> j;
        return occ;
    };
    for (std::size_t i = 0; i < count; ++i) {
        const auto k = static_cast<std::uint64_t>(first + static_cast<std::int64_t>(i));
        const auto diff = std::popcount(occurrences(k) ^ occurrences(k - 1));
        out[i] = static_cast<std::uint8_t>((k ^ static_cast<std::uint64_t>(diff)) & 1u);
    }
}

}  // namespace digitcurve::kernels::scalar
