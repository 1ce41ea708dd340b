#include "digitcurve/digit_curve.hpp"

#include <array>
#include <bit>
#include <stdexcept>

#include "digitcurve/kernels.hpp"

namespace digitcurve {

namespace {

int signed_turn(Turn t) { return t == Turn::Left ? 1 : -1; }

// Turn at a value whose lowest 1 is at depth `val`, with bits val+1, val+2 = b1, b2.
int turn_from_bits(int val, int b1, int b2) {
    const int parity = (val == 0 ? 1 : 0) ^ (b1 & b2) ^ ((val >= 1 ? 1 : 0) & b1);
    return parity ? 1 : -1;
}

// interior[M][c0][c1]: sum mod 4 of the turns at x + 1 .. x + 2^M - 1 for any
// x divisible by 2^M whose bits M and M+1 are c0 and c1. Only those two bits
// of x reach the turns inside the block.
using InteriorTable = std::array<std::array<std::array<int, 2>, 2>, 64>;

const InteriorTable& interior_sums() {
    static const InteriorTable table = [] {
        InteriorTable t{};
        for (int m = 0; m + 1 < 64; ++m)
            for (int c0 = 0; c0 < 2; ++c0)
                for (int c1 = 0; c1 < 2; ++c1)
                    t[m + 1][c0][c1] = ((t[m][0][c0] + turn_from_bits(m, c0, c1) + t[m][1][c0]) % 4 + 4) % 4;
        return t;
    }();
    return table;
}

bool fits_kernel(std::int64_t lo, std::int64_t hi) {
    return lo > -kernels::kMaxIndex && hi < kernels::kMaxIndex;
}

}  // namespace

DigitCurve DigitCurve::c_curve() { return integer_curve(Heading::North, Heading::East); }

DigitCurve DigitCurve::integer_curve(Heading g, Heading h) {
    const int q = quarter_turns_between(h, g);
    if (q != 1 && q != 3) throw std::invalid_argument("integer_curve: g and h must be perpendicular");
    return DigitCurve{BitSeq::from_int(0), g, q == 1 ? Turn::Left : Turn::Right, {}};
}

DigitCurve DigitCurve::from_sequence(BitSeq a, LatticeVec x, Heading g) {
    if (!a.admissible()) throw std::invalid_argument("from_sequence: both digits must occur infinitely often");
    return DigitCurve{std::move(a), g, Turn::Left, x};
}

Turn DigitCurve::turn_at(std::int64_t k) const {
    const BitSeq x = offset(base, k);
    return x.is_zero() ? zero_turn : turn_parity(x);
}

std::vector<std::uint8_t> DigitCurve::turn_bits(std::int64_t first_k, std::size_t count) const {
    std::vector<std::uint8_t> out(count);
    if (count == 0) return out;
    const auto last_k = first_k + static_cast<std::int64_t>(count);
    if (const auto b = base.to_int(); b && fits_kernel(*b + first_k, *b + last_k)) {
        // Integer base: value b + k, with the silent k where b + k = 0.
        const std::int64_t lo = *b + first_k;
        const std::int64_t hi = *b + last_k;
        const std::uint8_t zero_bit = zero_turn == Turn::Left ? 1 : 0;
        if (lo > 0 || hi <= 0) {
            kernels::body_turns(lo, out);
        } else {
            const auto neg = static_cast<std::size_t>(-lo);
            kernels::body_turns(lo, std::span(out).first(neg));
            out[neg] = zero_bit;
            kernels::body_turns(1, std::span(out).subspan(neg + 1));
        }
        return out;
    }
    BitSeq x = offset(base, first_k);
    for (std::size_t i = 0; i < count; ++i) {
        const Turn t = x.is_zero() ? zero_turn : turn_parity(x);
        out[i] = t == Turn::Left ? 1 : 0;
        x = increment(x);
    }
    return out;
}

int DigitCurve::turn_sum(std::int64_t p, std::int64_t q) const {
    if (q < p) throw std::invalid_argument("turn_sum: empty range must have q >= p");
    const auto& table = interior_sums();
    BitSeq x = offset(base, p);
    auto remaining = static_cast<std::uint64_t>(q - p);
    int acc = 0;
    while (remaining > 0) {
        // Largest aligned block starting at x that fits in what is left.
        const auto val = x.valuation();
        int m = 63 - std::countl_zero(remaining);
        if (val && static_cast<int>(*val) < m) m = static_cast<int>(*val);
        const Turn head = x.is_zero() ? zero_turn : turn_parity(x);
        acc += signed_turn(head) + table[m][x.bit(m)][x.bit(m + 1)];
        x = offset(x, std::int64_t{1} << m);
        remaining -= std::uint64_t{1} << m;
    }
    return (acc % 4 + 4) % 4;
}

Heading DigitCurve::heading_at(std::int64_t k) const {
    if (k >= 1) return rotate(first, turn_sum(1, k));
    return rotate(first, -turn_sum(k, 1));
}

Curve DigitCurve::segments(std::int64_t first_k, std::int64_t last_k) const {
    if (last_k < first_k) throw std::invalid_argument("segments: last_k < first_k");
    const auto count = static_cast<std::size_t>(last_k - first_k);
    Curve c = build_from_turn_bits({}, heading_at(first_k), turn_bits(first_k, count));
    // Place the start of X_first_k relative to the start of X_1 (= origin).
    LatticeVec start = origin;
    if (first_k <= 1) {
        const auto gap = static_cast<std::size_t>(1 - first_k);
        if (gap <= c.steps.size()) {
            for (std::size_t i = 0; i < gap; ++i) start -= step(c.steps[i]);
        } else {
            const Curve bridge = segments(first_k, 0);
            for (Heading h : bridge.steps) start -= step(h);
        }
    } else {
        const Curve bridge = build_from_turn_bits({}, first, turn_bits(1, static_cast<std::size_t>(first_k - 1)));
        for (std::size_t i = 0; i + 1 < bridge.steps.size(); ++i) start += step(bridge.steps[i]);
    }
    c.start = start;
    return c;
}

}  // namespace digitcurve
