#pragma once

#include <cstdint>
#include <vector>

#include "digitcurve/bitseq.hpp"
#include "digitcurve/geometry.hpp"
#include "digitcurve/lattice.hpp"

namespace digitcurve {

/// Bi-infinite curve (X_k)_{k in Z} driven by the "110" digit rule.
///
/// X_1 = [origin, origin + first] and the turn from X_k to X_{k+1} is Right
/// iff P + Q + R of base + k is even. Where base + k is the all-zeros sequence
/// the rule is silent and `zero_turn` is used; with base = 0 this is the fixed
/// X_0 -> X_1 transition of the integer-indexed curves.
struct DigitCurve {
    BitSeq base;
    Heading first = Heading::East;
    Turn zero_turn = Turn::Left;
    LatticeVec origin;

    /// The distinguished curve through the origin: X_0 = [-e, 0], X_1 = [0, f].
    static DigitCurve c_curve();
    /// Integer-indexed curve with X_0 = [-h, 0] and X_1 = [0, g]; g and h must be
    /// perpendicular unit headings.
    static DigitCurve integer_curve(Heading g, Heading h);
    /// Curve of an admissible sequence a with X_1 = [x, x + g].
    static DigitCurve from_sequence(BitSeq a, LatticeVec x, Heading g);

    Turn turn_at(std::int64_t k) const;

    /// Turns from X_k to X_{k+1} for k in [first_k, first_k + count), 1 = Left.
    std::vector<std::uint8_t> turn_bits(std::int64_t first_k, std::size_t count) const;

    /// Sum of turns (Left = +1, Right = -1) for k in [p, q), reduced mod 4.
    int turn_sum(std::int64_t p, std::int64_t q) const;

    /// Heading of X_k.
    Heading heading_at(std::int64_t k) const;

    /// Segments X_first_k .. X_last_k as a curve placed at their true position.
    Curve segments(std::int64_t first_k, std::int64_t last_k) const;
};

}  // namespace digitcurve
