#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "digitcurve/lattice.hpp"

namespace digitcurve {

/// The six generators of the free monoid: u, ū, v, v̄, w, w̄.
enum class Letter : std::uint8_t { U = 0, UBar, V, VBar, W, WBar };

inline constexpr std::array<Letter, 6> kAllLetters = {Letter::U, Letter::UBar, Letter::V,
                                                      Letter::VBar, Letter::W, Letter::WBar};

constexpr Letter bar(Letter x) { return static_cast<Letter>(static_cast<int>(x) ^ 1); }
constexpr bool is_barred(Letter x) { return (static_cast<int>(x) & 1) != 0; }

/// Image of a letter under phi: u->uv, ū->ūv̄, v->uw, v̄->ūw̄, w->ūw, w̄->uw̄.
constexpr std::array<Letter, 2> phi(Letter x) {
    switch (x) {
        case Letter::U: return {Letter::U, Letter::V};
        case Letter::UBar: return {Letter::UBar, Letter::VBar};
        case Letter::V: return {Letter::U, Letter::W};
        case Letter::VBar: return {Letter::UBar, Letter::WBar};
        case Letter::W: return {Letter::UBar, Letter::W};
        case Letter::WBar: return {Letter::U, Letter::WBar};
    }
    return {};
}

/// Unit step of a letter: u -> e, v and w -> f, barred letters negated.
constexpr Heading heading_of(Letter x) {
    switch (x) {
        case Letter::U: return Heading::East;
        case Letter::UBar: return Heading::West;
        case Letter::V:
        case Letter::W: return Heading::North;
        case Letter::VBar:
        case Letter::WBar: return Heading::South;
    }
    return Heading::East;
}

using Word = std::vector<Letter>;

/// ASCII spelling: lower case for u, v, w and upper case for their bars.
std::string to_string(std::span<const Letter> w);
Word parse_word(std::string_view s);

Word apply_phi(std::span<const Letter> w);
Word bar(std::span<const Letter> w);
LatticeVec psi(std::span<const Letter> w);

/// Streams the 2^n letters of phi^n(seed) in order with O(n) state.
class PhiStream {
public:
    PhiStream(Letter seed, int n);

    bool done() const { return remaining_ == 0; }
    std::uint64_t size() const { return std::uint64_t{1} << depth_; }
    Letter next();

private:
    int depth_;
    std::uint64_t index_ = 0;
    std::uint64_t remaining_;
    std::vector<Letter> path_;  // path_[d] = ancestor at depth d of the current letter
};

/// Largest exponent for which phi^n is materialized into a Word.
inline constexpr int kMaxMaterializedPower = 24;

/// phi^n(seed) as a Word. Throws std::length_error when n exceeds `cap`.
Word phi_power(Letter seed, int n, int cap = kMaxMaterializedPower);
inline Word phi_power_u(int n, int cap = kMaxMaterializedPower) { return phi_power(Letter::U, n, cap); }

struct LevelVectors {
    int m = 0;
    LatticeVec u, v, w;
};

/// u_0 = e, v_0 = w_0 = f; u' = u + v, v' = u + w, w' = w - u.
LevelVectors level_vectors(int m);

/// Checks phi^{n+1}(u) = phi^{n-1}(u) phi^{n-2}(u) phi^{n-2}(w) phi^{n-1}(u) bar(phi^{n-2}(u)) phi^{n-2}(w)
/// letter by letter on streams. Requires n >= 3.
bool check_identity(int n);

struct LetterPair {
    Letter first;
    Letter last;
    friend bool operator==(LetterPair, LetterPair) = default;
};

/// First and last letters of phi^n(u), bar(phi^n(u)), phi^n(v) and phi^n(w).
struct BoundaryLetters {
    LetterPair phi_u, bar_phi_u, phi_v, phi_w;
    /// Begin with u, ū, u, ū and end with w, w̄, w, w respectively.
    bool matches_expected() const;
};

BoundaryLetters boundary_letters(int n);

}  // namespace digitcurve
