#include "digitcurve/planar.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_map>

namespace digitcurve {

int orientation(LatticeVec a, LatticeVec b, LatticeVec c) {
    const auto v = cross(b - a, c - a);
    return (v > 0) - (v < 0);
}

bool on_segment(const Segment& s, LatticeVec p) {
    if (orientation(s.a, s.b, p) != 0) return false;
    return std::min(s.a.x, s.b.x) <= p.x && p.x <= std::max(s.a.x, s.b.x) &&
           std::min(s.a.y, s.b.y) <= p.y && p.y <= std::max(s.a.y, s.b.y);
}

bool improper_contact(const Segment& s, const Segment& t) {
    const int o1 = orientation(s.a, s.b, t.a);
    const int o2 = orientation(s.a, s.b, t.b);
    const int o3 = orientation(t.a, t.b, s.a);
    const int o4 = orientation(t.a, t.b, s.b);
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    auto touches = [](const Segment& seg, LatticeVec p) {
        return p != seg.a && p != seg.b && on_segment(seg, p);
    };
    if (touches(s, t.a) || touches(s, t.b) || touches(t, s.a) || touches(t, s.b)) return true;
    // Identical segments count as overlap too.
    return normalized(s) == normalized(t);
}

std::optional<std::pair<Segment, Segment>> find_improper_contact(std::span<const Segment> segs) {
    if (segs.empty()) return std::nullopt;
    std::int64_t cell = 1;
    for (const auto& s : segs) cell = std::max({cell, std::abs(s.b.x - s.a.x), std::abs(s.b.y - s.a.y)});
    auto floordiv = [](std::int64_t a, std::int64_t b) { return a >= 0 ? a / b : -((-a + b - 1) / b); };
    std::unordered_map<LatticeVec, std::vector<std::size_t>, LatticeVecHash> grid;
    for (std::size_t i = 0; i < segs.size(); ++i) {
        const auto& s = segs[i];
        const auto x0 = floordiv(std::min(s.a.x, s.b.x), cell), x1 = floordiv(std::max(s.a.x, s.b.x), cell);
        const auto y0 = floordiv(std::min(s.a.y, s.b.y), cell), y1 = floordiv(std::max(s.a.y, s.b.y), cell);
        for (auto gx = x0; gx <= x1; ++gx)
            for (auto gy = y0; gy <= y1; ++gy) grid[{gx, gy}].push_back(i);
    }
    for (const auto& [key, ids] : grid) {
        for (std::size_t i = 0; i < ids.size(); ++i)
            for (std::size_t j = i + 1; j < ids.size(); ++j)
                if (improper_contact(segs[ids[i]], segs[ids[j]])) return std::pair{segs[ids[i]], segs[ids[j]]};
    }
    return std::nullopt;
}

namespace {

// Anticlockwise angular order starting from the positive x axis.
bool angle_less(LatticeVec p, LatticeVec q) {
    auto half = [](LatticeVec v) { return v.y < 0 || (v.y == 0 && v.x < 0) ? 1 : 0; };
    const int hp = half(p), hq = half(q);
    if (hp != hq) return hp < hq;
    return cross(p, q) > 0;
}

}  // namespace

std::vector<std::vector<LatticeVec>> bounded_faces(std::span<const Segment> segs) {
    std::unordered_map<LatticeVec, std::size_t, LatticeVecHash> id;
    std::vector<LatticeVec> pts;
    auto vid = [&](LatticeVec p) {
        auto [it, fresh] = id.try_emplace(p, pts.size());
        if (fresh) pts.push_back(p);
        return it->second;
    };
    std::vector<std::vector<std::size_t>> nb;
    for (const auto& s : segs) {
        const auto a = vid(s.a), b = vid(s.b);
        if (nb.size() < pts.size()) nb.resize(pts.size());
        nb[a].push_back(b);
        nb[b].push_back(a);
    }
    nb.resize(pts.size());
    for (std::size_t v = 0; v < pts.size(); ++v) {
        std::sort(nb[v].begin(), nb[v].end(),
                  [&](std::size_t p, std::size_t q) { return angle_less(pts[p] - pts[v], pts[q] - pts[v]); });
    }
    auto pos_of = [&](std::size_t at, std::size_t from) {
        return static_cast<std::size_t>(std::find(nb[at].begin(), nb[at].end(), from) - nb[at].begin());
    };
    std::vector<std::vector<bool>> used(pts.size());
    for (std::size_t v = 0; v < pts.size(); ++v) used[v].assign(nb[v].size(), false);

    std::vector<std::vector<LatticeVec>> faces;
    for (std::size_t v = 0; v < pts.size(); ++v) {
        for (std::size_t i = 0; i < nb[v].size(); ++i) {
            if (used[v][i]) continue;
            std::vector<LatticeVec> face;
            std::size_t a = v, ai = i;
            while (!used[a][ai]) {
                used[a][ai] = true;
                face.push_back(pts[a]);
                const std::size_t b = nb[a][ai];
                const std::size_t back = pos_of(b, a);
                const std::size_t deg = nb[b].size();
                a = b;
                ai = (back + deg - 1) % deg;
            }
            if (twice_area(face) > 0) faces.push_back(std::move(face));
        }
    }
    return faces;
}

std::int64_t twice_area(std::span<const LatticeVec> poly) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) s += cross(poly[i], poly[(i + 1) % poly.size()]);
    return s;
}

}  // namespace digitcurve
