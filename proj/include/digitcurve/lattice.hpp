#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>

namespace digitcurve {

/// Integer point / vector of Z^2 in the basis e = (1,0), f = (0,1).
struct LatticeVec {
    std::int64_t x = 0;
    std::int64_t y = 0;

    constexpr LatticeVec() = default;
    constexpr LatticeVec(std::int64_t x_, std::int64_t y_) : x(x_), y(y_) {}

    constexpr LatticeVec& operator+=(LatticeVec o) { x += o.x; y += o.y; return *this; }
    constexpr LatticeVec& operator-=(LatticeVec o) { x -= o.x; y -= o.y; return *this; }

    friend constexpr LatticeVec operator+(LatticeVec a, LatticeVec b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr LatticeVec operator-(LatticeVec a, LatticeVec b) { return {a.x - b.x, a.y - b.y}; }
    friend constexpr LatticeVec operator-(LatticeVec a) { return {-a.x, -a.y}; }
    friend constexpr LatticeVec operator*(std::int64_t s, LatticeVec a) { return {s * a.x, s * a.y}; }

    friend constexpr bool operator==(LatticeVec, LatticeVec) = default;
    friend constexpr auto operator<=>(LatticeVec, LatticeVec) = default;
};

inline constexpr LatticeVec kE{1, 0};
inline constexpr LatticeVec kF{0, 1};

constexpr std::int64_t cross(LatticeVec a, LatticeVec b) { return a.x * b.y - a.y * b.x; }
constexpr std::int64_t dot(LatticeVec a, LatticeVec b) { return a.x * b.x + a.y * b.y; }

inline std::ostream& operator<<(std::ostream& os, LatticeVec v) {
    return os << '(' << v.x << ',' << v.y << ')';
}

enum class Turn : std::uint8_t { Right = 0, Left = 1 };

inline char to_char(Turn t) { return t == Turn::Left ? 'L' : 'R'; }

/// Unit headings in anticlockwise order; a Left turn adds one step.
enum class Heading : std::uint8_t { East = 0, North = 1, West = 2, South = 3 };

constexpr Heading rotate(Heading h, int quarter_turns) {
    return static_cast<Heading>(((static_cast<int>(h) + quarter_turns) % 4 + 4) % 4);
}

constexpr Heading turned(Heading h, Turn t) { return rotate(h, t == Turn::Left ? 1 : -1); }

constexpr Heading opposite(Heading h) { return rotate(h, 2); }

constexpr LatticeVec step(Heading h) {
    switch (h) {
        case Heading::East: return {1, 0};
        case Heading::North: return {0, 1};
        case Heading::West: return {-1, 0};
        case Heading::South: return {0, -1};
    }
    return {};
}

/// Quarter turns taking `from` to `to`, in [0, 4).
constexpr int quarter_turns_between(Heading from, Heading to) {
    return ((static_cast<int>(to) - static_cast<int>(from)) % 4 + 4) % 4;
}

inline char to_char(Heading h) {
    constexpr char names[] = {'E', 'N', 'W', 'S'};
    return names[static_cast<int>(h)];
}

/// Rotation by quarter_turns * 90 degrees anticlockwise.
constexpr LatticeVec rotate(LatticeVec v, int quarter_turns) {
    switch (((quarter_turns % 4) + 4) % 4) {
        case 1: return {-v.y, v.x};
        case 2: return {-v.x, -v.y};
        case 3: return {v.y, -v.x};
        default: return v;
    }
}

struct LatticeVecHash {
    std::size_t operator()(LatticeVec v) const noexcept {
        std::uint64_t h = static_cast<std::uint64_t>(v.x) * 0x9E3779B97F4A7C15ull;
        h ^= static_cast<std::uint64_t>(v.y) + 0x7F4A7C159E3779B9ull + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

}  // namespace digitcurve
