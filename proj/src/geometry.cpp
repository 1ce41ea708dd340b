#include "digitcurve/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace digitcurve {

std::vector<LatticeVec> Curve::vertices() const {
    std::vector<LatticeVec> out;
    out.reserve(steps.size() + 1);
    LatticeVec p = start;
    out.push_back(p);
    for (Heading h : steps) {
        p += step(h);
        out.push_back(p);
    }
    return out;
}

LatticeVec Curve::end() const {
    LatticeVec p = start;
    for (Heading h : steps) p += step(h);
    return p;
}

std::optional<Turn> Curve::turn_after(std::size_t i) const {
    switch (quarter_turns_between(steps.at(i), steps.at(i + 1))) {
        case 1: return Turn::Left;
        case 3: return Turn::Right;
        default: return std::nullopt;
    }
}

std::vector<Turn> Curve::turns() const {
    std::vector<Turn> out;
    if (steps.size() < 2) return out;
    out.reserve(steps.size() - 1);
    for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
        const auto t = turn_after(i);
        if (!t) throw std::logic_error("Curve::turns: straight or reversing step at " + std::to_string(i));
        out.push_back(*t);
    }
    return out;
}

Curve realize_word(std::span<const Letter> letters, LatticeVec start) {
    Curve c{start, {}};
    c.steps.reserve(letters.size());
    for (Letter x : letters) c.steps.push_back(heading_of(x));
    return c;
}

Curve realize_phi(int n, LatticeVec start) {
    PhiStream s(Letter::U, n);
    Curve c{start, {}};
    c.steps.reserve(s.size());
    while (!s.done()) c.steps.push_back(heading_of(s.next()));
    return c;
}

Curve build_from_turns(LatticeVec start, Heading h0, std::span<const Turn> turns) {
    Curve c{start, {}};
    c.steps.reserve(turns.size() + 1);
    Heading h = h0;
    c.steps.push_back(h);
    for (Turn t : turns) {
        h = turned(h, t);
        c.steps.push_back(h);
    }
    return c;
}

Curve build_from_turn_bits(LatticeVec start, Heading h0, std::span<const std::uint8_t> left) {
    Curve c{start, {}};
    c.steps.reserve(left.size() + 1);
    int h = static_cast<int>(h0);
    c.steps.push_back(h0);
    for (std::uint8_t b : left) {
        h = (h + (b ? 1 : 3)) & 3;
        c.steps.push_back(static_cast<Heading>(h));
    }
    return c;
}

Curve translate(const Curve& c, LatticeVec t) { return Curve{c.start + t, c.steps}; }

Curve swap_ef(const Curve& c) {
    Curve out{{c.start.y, c.start.x}, c.steps};
    for (auto& h : out.steps) {
        switch (h) {
            case Heading::East: h = Heading::North; break;
            case Heading::North: h = Heading::East; break;
            case Heading::West: h = Heading::South; break;
            case Heading::South: h = Heading::West; break;
        }
    }
    return out;
}

Polyline to_polyline(const Curve& c) { return Polyline{c.vertices()}; }

Polyline coarsen(const Curve& c, int m) {
    if (m < 0 || m > 40) throw std::invalid_argument("coarsen: level out of range");
    const std::size_t block = std::size_t{1} << m;
    if (c.size() == 0 || c.size() % block != 0)
        throw std::invalid_argument("coarsen: segment count is not a positive multiple of 2^m");
    Polyline p;
    p.vertices.reserve(c.size() / block + 1);
    LatticeVec pos = c.start;
    p.vertices.push_back(pos);
    for (std::size_t i = 0; i < c.size(); ++i) {
        pos += step(c.steps[i]);
        if ((i + 1) % block == 0) p.vertices.push_back(pos);
    }
    return p;
}

std::string describe(const Failure& f) {
    auto idx = [](std::size_t i) { return i == kUnknownIndex ? std::string("?") : std::to_string(i); };
    auto pt = [](LatticeVec v) { return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")"; };
    if (f.kind == FailureKind::DuplicateEdge)
        return "duplicate edge " + pt(f.vertex) + "-" + pt(f.other) + " at segments " + idx(f.first_index) +
               " and " + idx(f.second_index);
    return "crossing at " + pt(f.vertex) + " between segments " + idx(f.first_index) + " and " +
           idx(f.second_index);
}

WindowPattern point_reflected(const WindowPattern& w) {
    WindowPattern out{w.radius, {}};
    out.edges.reserve(w.edges.size());
    for (const auto& e : w.edges) {
        if (e.dir == 0)
            out.edges.push_back({-e.x - 1, -e.y, 0});
        else
            out.edges.push_back({-e.x, -e.y - 1, 1});
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

CurveIndex::CurveIndex(const Curve& c) {
    vertices_.reserve(c.size() + 1);
    edges_.reserve(c.size());
    LatticeVec p = c.start;
    vertices_.insert(p);
    for (Heading h : c.steps) {
        const LatticeVec q = p + step(h);
        switch (h) {
            case Heading::East: edges_.insert(key(p, 0)); break;
            case Heading::North: edges_.insert(key(p, 1)); break;
            case Heading::West: edges_.insert(key(q, 0)); break;
            case Heading::South: edges_.insert(key(q, 1)); break;
        }
        vertices_.insert(q);
        p = q;
    }
}

std::uint64_t CurveIndex::key(LatticeVec from, std::uint8_t dir) {
    const auto x = static_cast<std::uint64_t>(static_cast<std::uint32_t>(from.x + (1 << 30))) & 0x7FFFFFFFull;
    const auto y = static_cast<std::uint64_t>(static_cast<std::uint32_t>(from.y + (1 << 30))) & 0x7FFFFFFFull;
    return (x << 33) | (y << 2) | dir;
}

bool CurveIndex::has_edge(LatticeVec from, std::uint8_t dir) const { return edges_.contains(key(from, dir)); }

WindowPattern window(const CurveIndex& index, LatticeVec z, double radius) {
    if (!(radius > 0)) throw std::invalid_argument("window: radius must be positive");
    if (!index.has_vertex(z)) throw std::invalid_argument("window: centre is not a vertex of the curve");
    const auto r = static_cast<std::int64_t>(std::floor(radius));
    const double r2 = radius * radius;
    auto inside = [&](std::int64_t dx, std::int64_t dy) {
        return static_cast<double>(dx * dx + dy * dy) <= r2;
    };
    WindowPattern w{radius, {}};
    for (std::int64_t dx = -r; dx <= r; ++dx) {
        for (std::int64_t dy = -r; dy <= r; ++dy) {
            if (!inside(dx, dy)) continue;
            const LatticeVec p = z + LatticeVec{dx, dy};
            if (inside(dx + 1, dy) && index.has_edge(p, 0))
                w.edges.push_back({static_cast<std::int32_t>(dx), static_cast<std::int32_t>(dy), 0});
            if (inside(dx, dy + 1) && index.has_edge(p, 1))
                w.edges.push_back({static_cast<std::int32_t>(dx), static_cast<std::int32_t>(dy), 1});
        }
    }
    // Loop order already yields (x, y, dir) ascending.
    return w;
}

WindowPattern window(const Curve& c, LatticeVec z, double radius) {
    return window(CurveIndex(c), z, radius);
}

}  // namespace digitcurve
