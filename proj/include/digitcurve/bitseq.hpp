#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "digitcurve/lattice.hpp"

namespace digitcurve {

/// Left-infinite, eventually periodic binary sequence (a_i)_{i <= 0}.
///
/// The value is `...pppp h`: the tail period p repeats leftward forever and the
/// head h holds the rightmost bits, most significant first, so a_0 is the last
/// character of h. Both are stored as strings of '0'/'1'. Every instance is
/// kept canonical: p is primitive and h is as short as possible, which makes
/// structural equality the same as sequence equality.
///
/// Integers embed as two's complement: tail "0" for k >= 0, tail "1" for k < 0.
class BitSeq {
public:
    BitSeq() : period_("0") {}
    BitSeq(std::string_view tail_period, std::string_view head);

    static BitSeq from_int(std::int64_t k);

    const std::string& tail_period() const { return period_; }
    const std::string& head() const { return head_; }

    /// a_{-depth}; depth 0 is the least significant bit.
    int bit(std::size_t depth) const;

    /// Depth of the lowest 1 bit; nullopt for the all-zeros sequence.
    std::optional<std::size_t> valuation() const;

    bool is_zero() const { return head_.empty() && period_ == "0"; }
    bool is_all_ones() const { return head_.empty() && period_ == "1"; }
    bool is_integer() const { return period_ == "0" || period_ == "1"; }

    /// Both symbols occur infinitely often (the tail period is mixed).
    bool admissible() const;

    /// Value as a machine integer when it is an integer that fits.
    std::optional<std::int64_t> to_int() const;

    std::string to_string() const;

    friend bool operator==(const BitSeq&, const BitSeq&) = default;

private:
    void canonicalize();

    std::string period_;
    std::string head_;
};

BitSeq increment(const BitSeq& a);
BitSeq decrement(const BitSeq& a);

/// a + k, exact for every |k| < 2^63.
BitSeq offset(const BitSeq& a, std::int64_t k);

/// P(a) = a_0.
int p_bit(const BitSeq& a);

struct QRPair {
    int q = 0;
    int r = 0;
    friend bool operator==(QRPair, QRPair) = default;
};

/// Numbers of "110" windows destroyed (q) and created (r) by the increment
/// from b = a - 1 to a.
QRPair qr(const BitSeq& a);

/// Right iff P(a) + Q(a) + R(a) is even.
Turn turn_parity(const BitSeq& a);

/// Turn of the integer digit rule at k != 0, by the closed form on the 2-adic
/// valuation of k and the two bits above it. Throws std::domain_error for k = 0.
Turn turn_parity_int(std::int64_t k);

/// Occurrences of 1^n 0 in the binary expansion of k >= 0.
int alpha(int n, std::int64_t k);

}  // namespace digitcurve
