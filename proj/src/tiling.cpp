#include "digitcurve/tiling.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <sstream>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

namespace digitcurve {

namespace {

using Rational = boost::multiprecision::cpp_rational;

std::string pt(LatticeVec v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

std::int64_t sup_norm(LatticeVec v) { return std::max(std::abs(v.x), std::abs(v.y)); }

std::int64_t floordiv(std::int64_t a, std::int64_t b) {
    if (b < 0) { a = -a; b = -b; }
    return a >= 0 ? a / b : -((-a + b - 1) / b);
}

std::int64_t ceildiv(std::int64_t a, std::int64_t b) { return -floordiv(-a, b); }

// Strictly inside a convex anticlockwise polygon; all coordinates doubled by the caller if needed.
bool strictly_inside(const std::array<LatticeVec, 4>& c, LatticeVec p) {
    for (int k = 0; k < 4; ++k)
        if (orientation(c[k], c[(k + 1) % 4], p) <= 0) return false;
    return true;
}

bool inside_closed(const std::array<LatticeVec, 4>& c, LatticeVec p) {
    for (int k = 0; k < 4; ++k)
        if (orientation(c[k], c[(k + 1) % 4], p) < 0) return false;
    return true;
}

std::array<LatticeVec, 4> doubled(std::array<LatticeVec, 4> c) {
    for (auto& p : c) p = 2 * p;
    return c;
}

// Tiles of `t` that have [s, e] as a side.
std::vector<Tile> tiles_with_side(const Tiling& t, const LevelVectors& lv, LatticeVec s, LatticeVec e) {
    std::vector<Tile> out;
    for (TileKind k : {TileKind::UV, TileKind::UW, TileKind::VW}) {
        const auto off = corners(Tile{{0, 0}, k}, lv);
        for (int i = 0; i < 4; ++i) {
            const LatticeVec a = off[i], b = off[(i + 1) % 4];
            for (int flip = 0; flip < 2; ++flip) {
                const LatticeVec p = flip ? e : s, q = flip ? s : e;
                if (q - p != b - a) continue;
                const Tile cand{p - a, k};
                if (t.contains(cand) && std::find(out.begin(), out.end(), cand) == out.end()) out.push_back(cand);
            }
        }
    }
    return out;
}

struct RPoint {
    Rational x, y;
};

Rational rcross(const RPoint& a, const RPoint& b) { return a.x * b.y - a.y * b.x; }

// Twice the area of convex polygon `subject` clipped to the convex anticlockwise `clip`.
Rational overlap2(const std::array<LatticeVec, 4>& subject, const std::array<LatticeVec, 4>& clip) {
    std::vector<RPoint> poly;
    for (auto p : subject) poly.push_back({p.x, p.y});
    for (int k = 0; k < 4 && !poly.empty(); ++k) {
        const LatticeVec a = clip[k], b = clip[(k + 1) % 4];
        const RPoint ra{a.x, a.y};
        const RPoint dir{b.x - a.x, b.y - a.y};
        auto side = [&](const RPoint& p) { return rcross(dir, RPoint{p.x - ra.x, p.y - ra.y}); };
        std::vector<RPoint> next;
        for (std::size_t i = 0; i < poly.size(); ++i) {
            const RPoint& p = poly[i];
            const RPoint& q = poly[(i + 1) % poly.size()];
            const Rational sp = side(p), sq = side(q);
            if (sp >= 0) next.push_back(p);
            if ((sp > 0 && sq < 0) || (sp < 0 && sq > 0)) {
                const Rational t = sp / (sp - sq);
                next.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
            }
        }
        poly = std::move(next);
    }
    Rational s = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) s += rcross(poly[i], poly[(i + 1) % poly.size()]);
    return s;
}

Box tile_box(const std::array<LatticeVec, 4>& c) { return bounding_box(std::span<const LatticeVec>(c)); }

bool boxes_meet(const Box& a, const Box& b) {
    return a.x0 <= b.x1 && b.x0 <= a.x1 && a.y0 <= b.y1 && b.y0 <= a.y1;
}

// Closed segment meets the open box.
bool meets_open_box(const Segment& s, const Box& b) {
    if (std::max(s.a.x, s.b.x) <= b.x0 || std::min(s.a.x, s.b.x) >= b.x1) return false;
    if (std::max(s.a.y, s.b.y) <= b.y0 || std::min(s.a.y, s.b.y) >= b.y1) return false;
    const LatticeVec d = s.b - s.a;
    const LatticeVec n{-d.y, d.x};
    const auto v = dot(n, s.a);
    std::int64_t lo = dot(n, {b.x0, b.y0}), hi = lo;
    for (LatticeVec c : {LatticeVec{b.x1, b.y0}, LatticeVec{b.x0, b.y1}, LatticeVec{b.x1, b.y1}}) {
        lo = std::min(lo, dot(n, c));
        hi = std::max(hi, dot(n, c));
    }
    return lo < v && v < hi;
}

std::optional<Tile> classify_face(const std::vector<LatticeVec>& face, const LevelVectors& lv) {
    std::vector<LatticeVec> c;
    const std::size_t n = face.size();
    for (std::size_t i = 0; i < n; ++i) {
        const LatticeVec p = face[(i + n - 1) % n], q = face[i], r = face[(i + 1) % n];
        if (cross(q - p, r - q) != 0) c.push_back(q);
    }
    if (c.size() != 4) return std::nullopt;
    auto has = [&](LatticeVec p) { return std::find(c.begin(), c.end(), p) != c.end(); };
    for (TileKind k : {TileKind::UV, TileKind::UW, TileKind::VW}) {
        const auto [y, z] = generators(k, lv);
        for (LatticeVec p : c)
            if (has(p + y) && has(p + z) && has(p + y + z)) return Tile{p, k};
    }
    return std::nullopt;
}

struct TaggedSegment {
    Segment seg;
    std::size_t tile;
    friend auto operator<=>(const TaggedSegment&, const TaggedSegment&) = default;
};

std::vector<TaggedSegment> tagged_insertions(const Tiling& coarse) {
    const int m = coarse.level - 1;
    const auto lv = level_vectors(m);
    const LatticeVec u = lv.u, v = lv.v, w = lv.w;
    const LatticeVec v1 = level_vectors(m + 1).v;
    std::vector<TaggedSegment> segs;
    segs.reserve(coarse.tiles.size() * 6);
    for (std::size_t i = 0; i < coarse.tiles.size(); ++i) {
        const Tile& t = coarse.tiles[i];
        auto add = [&](LatticeVec a, LatticeVec b) { segs.push_back({normalized({a, b}), i}); };
        const LatticeVec x = t.anchor;
        switch (t.kind) {
            case TileKind::UV: {
                add(x, x + u);
                add(x + u, x + u + v);
                add(x + u, x + u + w);
                const LatticeVec y = x + v1;
                add(y, y + v);
                add(y + v, y + v + u);
                add(y + v, y + v - w);
                break;
            }
            case TileKind::UW:
                add(x, x + w);
                add(x + w, x + w - u);
                add(x + w, x + w + v);
                add(x, x + v);
                add(x + v, x + v + u);
                add(x + v, x + v + w);
                break;
            case TileKind::VW:
                add(x, x + w);
                add(x + w, x + w - u);
                add(x + w, x + w + u);
                add(x + w, x + w + w);
                break;
        }
    }
    std::sort(segs.begin(), segs.end());
    return segs;
}

void audit_subdivision(const Tiling& coarse, const Tiling& fine, const std::vector<std::vector<LatticeVec>>& kept,
                       const std::vector<TaggedSegment>& tagged, SubdivisionAudit& audit) {
    const int m = fine.level;
    const LevelVectors lv = level_vectors(m), lc = level_vectors(m + 1);
    std::ostringstream detail;

    // Coverage: the union of kept faces has no boundary inside the trusted box.
    const Box inner = fine.window.shrunk(margin(m));
    std::map<std::pair<LatticeVec, LatticeVec>, int> directed;
    for (const auto& f : kept)
        for (std::size_t i = 0; i < f.size(); ++i) directed[{f[i], f[(i + 1) % f.size()]}] += 1;
    audit.coverage_ok = !inner.empty();
    for (const auto& [e, cnt] : directed) {
        if (cnt != 1) {
            audit.coverage_ok = false;
            detail << "edge " << pt(e.first) << "-" << pt(e.second) << " used twice; ";
            break;
        }
        if (directed.contains({e.second, e.first})) continue;
        if (meets_open_box({e.first, e.second}, inner)) {
            audit.coverage_ok = false;
            detail << "hole boundary at " << pt(e.first) << "-" << pt(e.second) << "; ";
            break;
        }
    }
    if (audit.coverage_ok) {
        const LatticeVec centre2{inner.x0 + inner.x1, inner.y0 + inner.y1};
        const bool covered = std::any_of(fine.tiles.begin(), fine.tiles.end(), [&](const Tile& t) {
            return inside_closed(doubled(corners(t, lv)), centre2);
        });
        if (!covered) {
            audit.coverage_ok = false;
            detail << "trusted box lies outside the kept tiles; ";
        }
    }

    // Exact overlaps between fine and coarse tiles.
    const std::int64_t cell = std::max<std::int64_t>(1, margin(m + 1));
    std::unordered_map<LatticeVec, std::vector<std::size_t>, LatticeVecHash> grid;
    std::vector<std::array<LatticeVec, 4>> coarse_corners;
    coarse_corners.reserve(coarse.tiles.size());
    for (std::size_t i = 0; i < coarse.tiles.size(); ++i) {
        coarse_corners.push_back(corners(coarse.tiles[i], lc));
        const Box b = tile_box(coarse_corners.back());
        for (auto gx = floordiv(b.x0, cell); gx <= floordiv(b.x1, cell); ++gx)
            for (auto gy = floordiv(b.y0, cell); gy <= floordiv(b.y1, cell); ++gy) grid[{gx, gy}].push_back(i);
    }
    std::vector<Rational> coarse_sum(coarse.tiles.size());
    audit.provenance_ok = true;
    audit.area_ok = true;
    for (const Tile& f : fine.tiles) {
        const auto fc = corners(f, lv);
        const Box fb = tile_box(fc);
        const Rational farea = tile_area(f.kind, lv) * 2;
        std::vector<std::size_t> cands;
        for (auto gx = floordiv(fb.x0, cell); gx <= floordiv(fb.x1, cell); ++gx)
            for (auto gy = floordiv(fb.y0, cell); gy <= floordiv(fb.y1, cell); ++gy)
                if (auto it = grid.find({gx, gy}); it != grid.end())
                    for (auto id : it->second)
                        if (boxes_meet(fb, tile_box(coarse_corners[id]))) cands.push_back(id);
        std::sort(cands.begin(), cands.end());
        cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

        Rational total = 0;
        const auto whole = std::find_if(cands.begin(), cands.end(), [&](std::size_t id) {
            return std::all_of(fc.begin(), fc.end(), [&](LatticeVec p) { return inside_closed(coarse_corners[id], p); });
        });
        if (whole != cands.end()) {
            total = farea;
            coarse_sum[*whole] += farea;
        } else {
            for (auto id : cands) {
                const Rational a = overlap2(fc, coarse_corners[id]);
                if (a > 0) {
                    total += a;
                    coarse_sum[id] += a;
                }
            }
        }
        if (total != farea) {
            if (audit.area_ok) detail << "tile at " << pt(f.anchor) << " not covered by coarse tiles; ";
            audit.area_ok = false;
        }
    }
    // Provenance: the sides of each fine tile are inserted by at most two coarse tiles.
    for (const auto& f : kept) {
        std::vector<std::vector<std::size_t>> sources;
        for (std::size_t i = 0; i < f.size(); ++i) {
            const Segment e = normalized({f[i], f[(i + 1) % f.size()]});
            std::vector<std::size_t> src;
            for (auto it = std::lower_bound(tagged.begin(), tagged.end(), TaggedSegment{e, 0});
                 it != tagged.end() && it->seg == e; ++it)
                src.push_back(it->tile);
            sources.push_back(std::move(src));
        }
        std::vector<std::size_t> pool;
        for (const auto& s : sources) pool.insert(pool.end(), s.begin(), s.end());
        std::sort(pool.begin(), pool.end());
        pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
        auto covered_by = [&](std::size_t p, std::size_t q) {
            return std::all_of(sources.begin(), sources.end(), [&](const auto& s) {
                return std::find(s.begin(), s.end(), p) != s.end() || std::find(s.begin(), s.end(), q) != s.end();
            });
        };
        bool found = false;
        for (std::size_t i = 0; i < pool.size() && !found; ++i)
            for (std::size_t j = i; j < pool.size() && !found; ++j) found = covered_by(pool[i], pool[j]);
        if (!found) {
            if (audit.provenance_ok) detail << "tile with corner " << pt(f[0]) << " needs more than two coarse tiles; ";
            audit.provenance_ok = false;
        }
    }
    // Coarse tiles whose neighbourhood is fully trusted must be exactly refined.
    const Box safe = fine.window.shrunk(margin(m));
    for (std::size_t i = 0; i < coarse.tiles.size(); ++i) {
        const Box b = tile_box(coarse_corners[i]).grown(margin(m));
        if (!(safe.contains({b.x0, b.y0}) && safe.contains({b.x1, b.y1}))) continue;
        ++audit.coarse_checked;
        if (coarse_sum[i] != tile_area(coarse.tiles[i].kind, lc) * 2) {
            if (audit.area_ok) detail << "coarse tile at " << pt(coarse.tiles[i].anchor) << " area mismatch; ";
            audit.area_ok = false;
        }
    }
    if (audit.coarse_checked == 0) {
        audit.area_ok = false;
        detail << "no coarse tile inside the trusted box; ";
    }
    audit.detail = detail.str();
}

}  // namespace

std::string_view kind_name(TileKind k) {
    switch (k) {
        case TileKind::UV: return "UV";
        case TileKind::UW: return "UW";
        case TileKind::VW: return "VW";
    }
    return "?";
}

std::pair<LatticeVec, LatticeVec> generators(TileKind k, const LevelVectors& lv) {
    switch (k) {
        case TileKind::UV: return {lv.u, lv.v};
        case TileKind::UW: return {lv.u, lv.w};
        case TileKind::VW: return {lv.v, lv.w};
    }
    return {};
}

std::array<LatticeVec, 4> corners(const Tile& t, const LevelVectors& lv) {
    auto [y, z] = generators(t.kind, lv);
    if (cross(y, z) < 0) std::swap(y, z);
    const LatticeVec x = t.anchor;
    return {x, x + y, x + y + z, x + z};
}

std::int64_t tile_area(TileKind k, const LevelVectors& lv) {
    const auto [y, z] = generators(k, lv);
    return std::abs(cross(y, z));
}

Box bounding_box(std::span<const LatticeVec> pts) {
    if (pts.empty()) return {0, 0, -1, -1};
    Box b{pts[0].x, pts[0].y, pts[0].x, pts[0].y};
    for (auto p : pts) {
        b.x0 = std::min(b.x0, p.x);
        b.y0 = std::min(b.y0, p.y);
        b.x1 = std::max(b.x1, p.x);
        b.y1 = std::max(b.y1, p.y);
    }
    return b;
}

std::int64_t margin(int m) {
    const auto lv = level_vectors(m);
    return sup_norm(lv.u) + sup_norm(lv.v) + sup_norm(lv.w);
}

bool Tiling::contains(const Tile& t) const { return std::binary_search(tiles.begin(), tiles.end(), t); }

Tiling base_tiling(int n, Box window) {
    if (n < 2) throw std::invalid_argument("base_tiling: level must be at least 2");
    if (window.empty()) throw std::invalid_argument("base_tiling: empty window");
    const auto lv = level_vectors(n);
    const std::int64_t det = cross(lv.u, lv.w);
    std::int64_t i0 = 0, i1 = 0, j0 = 0, j1 = 0;
    bool first = true;
    for (LatticeVec p : {LatticeVec{window.x0, window.y0}, LatticeVec{window.x1, window.y0},
                         LatticeVec{window.x0, window.y1}, LatticeVec{window.x1, window.y1}}) {
        // p = i u + j w
        const auto ci = cross(p, lv.w), cj = cross(lv.u, p);
        const auto lo_i = floordiv(ci, det), hi_i = ceildiv(ci, det);
        const auto lo_j = floordiv(cj, det), hi_j = ceildiv(cj, det);
        if (first) { i0 = lo_i; i1 = hi_i; j0 = lo_j; j1 = hi_j; first = false; }
        i0 = std::min(i0, lo_i); i1 = std::max(i1, hi_i);
        j0 = std::min(j0, lo_j); j1 = std::max(j1, hi_j);
    }
    Tiling t{n, window, {}};
    for (auto i = i0 - 1; i <= i1 + 1; ++i) {
        for (auto j = j0 - 1; j <= j1 + 1; ++j) {
            const Tile tile{i * lv.u + j * lv.w, TileKind::UW};
            const auto c = corners(tile, lv);
            if (std::all_of(c.begin(), c.end(), [&](LatticeVec p) { return window.contains(p); })) t.tiles.push_back(tile);
        }
    }
    std::sort(t.tiles.begin(), t.tiles.end());
    return t;
}

std::vector<Segment> inserted_segments(const Tiling& coarse) {
    std::vector<Segment> segs;
    for (const auto& t : tagged_insertions(coarse))
        if (segs.empty() || segs.back() != t.seg) segs.push_back(t.seg);
    return segs;
}

Tiling subdivide(const Tiling& coarse, SubdivisionAudit* audit) {
    const int m = coarse.level - 1;
    if (m < 2) throw std::invalid_argument("subdivide: target level must be at least 2");
    const auto lv = level_vectors(m);
    const auto tagged = tagged_insertions(coarse);
    std::vector<Segment> segs;
    for (const auto& t : tagged)
        if (segs.empty() || segs.back() != t.seg) segs.push_back(t.seg);
    if (auto bad = find_improper_contact(segs)) {
        throw TilingError("inserted segments " + pt(bad->first.a) + "-" + pt(bad->first.b) + " and " +
                              pt(bad->second.a) + "-" + pt(bad->second.b) + " overlap or cross",
                          {bad->first.a, bad->first.b, bad->second.a, bad->second.b});
    }
    Tiling fine{m, coarse.window.shrunk(2 * margin(m + 1)), {}};
    if (fine.window.empty()) throw std::invalid_argument("subdivide: window too small for another level");
    const auto faces = bounded_faces(segs);
    std::vector<std::vector<LatticeVec>> kept;
    for (const auto& f : faces) {
        if (!std::all_of(f.begin(), f.end(), [&](LatticeVec p) { return fine.window.contains(p); })) continue;
        const auto tile = classify_face(f, lv);
        if (!tile) {
            std::string msg = "level " + std::to_string(m) + " face is not a tile:";
            for (auto p : f) msg += " " + pt(p);
            throw TilingError(msg, f);
        }
        fine.tiles.push_back(*tile);
        kept.push_back(f);
    }
    std::sort(fine.tiles.begin(), fine.tiles.end());
    if (std::adjacent_find(fine.tiles.begin(), fine.tiles.end()) != fine.tiles.end())
        throw TilingError("duplicate tile at level " + std::to_string(m), {});
    if (audit) {
        *audit = SubdivisionAudit{};
        audit->faces = faces.size();
        audit->tiles = fine.tiles.size();
        audit_subdivision(coarse, fine, kept, tagged, *audit);
    }
    return fine;
}

bool verify_property1(const Tiling& t) {
    const LatticeVec v = level_vectors(t.level).v;
    for (const Tile& tile : t.tiles) {
        if (tile.kind == TileKind::UW) continue;
        if (t.contains(Tile{tile.anchor + v, tile.kind})) return false;
    }
    return true;
}

CheckReport verify_property2(const Tiling& t, const Polyline& coarse) {
    const auto lv = level_vectors(t.level);
    CheckReport rep;
    for (std::size_t i = 0; i < coarse.segments(); ++i) {
        const LatticeVec s = coarse.vertices[i], e = coarse.vertices[i + 1], d = e - s;
        ++rep.checked;
        bool found = false;
        if (d == lv.u) found = t.contains({s - lv.w, TileKind::UW});
        else if (d == -lv.u) found = t.contains({e, TileKind::UW});
        else if (d == lv.v) found = t.contains({s - lv.w, TileKind::VW});
        else if (d == -lv.v) found = t.contains({e, TileKind::VW});
        else if (d == lv.w) found = t.contains({s - lv.u, TileKind::UW}) || t.contains({s - lv.v, TileKind::VW});
        else if (d == -lv.w) found = t.contains({e, TileKind::UW}) || t.contains({e, TileKind::VW});
        else {
            rep.failures.push_back("segment " + std::to_string(i) + " displacement " + pt(d) + " is not a level-" +
                                   std::to_string(t.level) + " generator");
            continue;
        }
        if (!found)
            rep.failures.push_back("segment " + std::to_string(i) + " " + pt(s) + "->" + pt(e) +
                                   " has no tile in the required position");
    }
    return rep;
}

CheckReport refinement_check(const Polyline& coarse, const Polyline& fine, const Tiling& t) {
    CheckReport rep;
    const int m = t.level - 1;
    const auto lv = level_vectors(m), lc = level_vectors(m + 1);
    if (fine.segments() != 2 * coarse.segments()) {
        rep.failures.push_back("fine curve does not have twice as many segments");
        return rep;
    }
    const std::array<std::pair<LatticeVec, std::pair<LatticeVec, LatticeVec>>, 6> table = {{
        {lc.u, {lv.u, lv.v}},
        {-lc.u, {-lv.u, -lv.v}},
        {lc.v, {lv.u, lv.w}},
        {-lc.v, {-lv.u, -lv.w}},
        {lc.w, {-lv.u, lv.w}},
        {-lc.w, {lv.u, -lv.w}},
    }};
    for (std::size_t i = 0; i < coarse.segments(); ++i) {
        ++rep.checked;
        const LatticeVec s = coarse.vertices[i], e = coarse.vertices[i + 1], d = e - s;
        const std::string name = "segment " + std::to_string(i) + " " + pt(s) + "->" + pt(e);
        if (fine.vertices[2 * i] != s || fine.vertices[2 * i + 2] != e) {
            rep.failures.push_back(name + ": fine curve does not pass through its endpoints");
            continue;
        }
        const auto row = std::find_if(table.begin(), table.end(), [&](const auto& r) { return r.first == d; });
        if (row == table.end()) {
            rep.failures.push_back(name + ": displacement outside the six classes");
            continue;
        }
        if (fine.displacement(2 * i) != row->second.first || fine.displacement(2 * i + 1) != row->second.second) {
            rep.failures.push_back(name + ": replacement pair does not follow the table");
            continue;
        }
        const LatticeVec mid = fine.vertices[2 * i + 1];
        const auto cands = tiles_with_side(t, lc, s, e);
        const bool inside = std::any_of(cands.begin(), cands.end(),
                                        [&](const Tile& c) { return strictly_inside(corners(c, lc), mid); });
        if (!inside) rep.failures.push_back(name + ": no tile with this side contains the pair");
    }
    return rep;
}

CheckReport unit_refinement_check(const Polyline& coarse2, const Curve& unit, const Tiling& t) {
    CheckReport rep;
    if (t.level != 2) {
        rep.failures.push_back("unit refinement needs the level-2 tiling");
        return rep;
    }
    const auto lv = level_vectors(2);
    const auto verts = unit.vertices();
    if (unit.size() != 4 * coarse2.segments()) {
        rep.failures.push_back("unit curve does not have four segments per coarse segment");
        return rep;
    }
    for (std::size_t i = 0; i < coarse2.segments(); ++i) {
        ++rep.checked;
        const LatticeVec s = coarse2.vertices[i], e = coarse2.vertices[i + 1];
        const std::string name = "segment " + std::to_string(i) + " " + pt(s) + "->" + pt(e);
        if (verts[4 * i] != s || verts[4 * i + 4] != e) {
            rep.failures.push_back(name + ": unit curve does not pass through its endpoints");
            continue;
        }
        const auto cands = tiles_with_side(t, lv, s, e);
        const bool fits = std::any_of(cands.begin(), cands.end(), [&](const Tile& c) {
            const auto cc = corners(c, lv);
            for (int j = 1; j < 4; ++j) {
                const LatticeVec p = verts[4 * i + j];
                if (!inside_closed(cc, p) || std::find(cc.begin(), cc.end(), p) != cc.end()) return false;
            }
            return true;
        });
        if (!fits) rep.failures.push_back(name + ": unit segments leave every tile with this side");
    }
    return rep;
}

bool LevelResult::ok() const {
    return error.empty() && audit.ok() && property1 && property2.ok() && refinement.ok() && self_avoiding;
}

bool PipelineResult::ok() const {
    if (levels.empty() || levels.back().m != m_min) return false;
    for (const auto& l : levels)
        if (!l.ok()) return false;
    return m_min != 2 || unit_refinement.ok();
}

PipelineResult run_tiling_pipeline(int n, int m_min, Tiling* finest) {
    if (m_min < 2 || n < m_min) throw std::invalid_argument("run_tiling_pipeline: need 2 <= m_min <= n");
    PipelineResult res;
    res.n = n;
    res.m_min = m_min;
    res.anchoring = "lattice i*u_n + j*w_n through 0, tile (u_n, w_n) at 0";

    const Curve cn = realize_phi(n);
    const auto verts = cn.vertices();
    Box win = bounding_box(verts).grown(2 * margin(m_min) + 2 * margin(std::min(m_min + 1, n)) + 1);
    for (int k = m_min + 1; k <= n; ++k) win = win.grown(2 * margin(k));

    Tiling current = base_tiling(n, win);
    Tiling previous;
    for (int m = n; m >= m_min; --m) {
        LevelResult lr;
        lr.m = m;
        if (m == n) {
            lr.audit.tiles = current.tiles.size();
            lr.audit.coverage_ok = lr.audit.area_ok = lr.audit.provenance_ok = true;
            lr.audit.detail = "lattice tiling";
        } else {
            try {
                previous = std::move(current);
                current = subdivide(previous, &lr.audit);
            } catch (const TilingError& e) {
                lr.error = e.what();
                res.levels.push_back(std::move(lr));
                return res;
            }
        }
        lr.tiles = current.tiles.size();
        const Polyline coarse = coarsen(cn, m);
        lr.property1 = verify_property1(current);
        lr.property2 = verify_property2(current, coarse);
        lr.self_avoiding = check_self_avoiding(coarse).ok;
        if (m < n) lr.refinement = refinement_check(coarsen(cn, m + 1), coarse, previous);
        if (m == 2) res.unit_refinement = unit_refinement_check(coarse, cn, current);
        res.levels.push_back(std::move(lr));
    }
    if (finest) *finest = std::move(current);
    return res;
}

}  // namespace digitcurve
