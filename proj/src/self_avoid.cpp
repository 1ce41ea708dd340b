#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "digitcurve/geometry.hpp"

namespace digitcurve {

namespace {

constexpr std::uint64_t kEmpty = ~0ull;
constexpr std::int64_t kBias = std::int64_t{1} << 30;

std::uint64_t pack(LatticeVec v) {
    if (v.x <= -kBias || v.x >= kBias || v.y <= -kBias || v.y >= kBias)
        throw std::out_of_range("SelfAvoidWalker: coordinate beyond 2^30");
    return (static_cast<std::uint64_t>(v.x + kBias) << 31) | static_cast<std::uint64_t>(v.y + kBias);
}

LatticeVec unpack(std::uint64_t k) {
    return {static_cast<std::int64_t>(k >> 31) - kBias, static_cast<std::int64_t>(k & 0x7FFFFFFFull) - kBias};
}

std::size_t hash_slot(std::uint64_t key, std::size_t mask) {
    return static_cast<std::size_t>((key * 0x9E3779B97F4A7C15ull) >> 20) & mask;
}

constexpr std::uint8_t bit_of(Heading h) { return static_cast<std::uint8_t>(1u << static_cast<int>(h)); }

bool is_straight_pair(std::uint8_t mask) { return mask == 0b0101 || mask == 0b1010; }

}  // namespace

SelfAvoidWalker::SelfAvoidWalker(LatticeVec start, std::size_t expected_steps) : start_(start), pos_(start) {
    std::size_t cap = 1024;
    while (cap < 2 * (expected_steps + 1)) cap <<= 1;
    keys_.assign(cap, kEmpty);
    masks_.assign(cap, 0);
}

std::size_t SelfAvoidWalker::slot_of(LatticeVec v) {
    if (2 * (used_ + 1) > keys_.size()) grow();
    const std::uint64_t key = pack(v);
    const std::size_t mask = keys_.size() - 1;
    std::size_t s = hash_slot(key, mask);
    while (keys_[s] != kEmpty && keys_[s] != key) s = (s + 1) & mask;
    if (keys_[s] == kEmpty) {
        keys_[s] = key;
        ++used_;
    }
    return s;
}

void SelfAvoidWalker::grow() {
    std::vector<std::uint64_t> old_keys(keys_.size() * 2, kEmpty);
    std::vector<std::uint8_t> old_masks(masks_.size() * 2, 0);
    old_keys.swap(keys_);
    old_masks.swap(masks_);
    const std::size_t mask = keys_.size() - 1;
    for (std::size_t i = 0; i < old_keys.size(); ++i) {
        if (old_keys[i] == kEmpty) continue;
        std::size_t s = hash_slot(old_keys[i], mask);
        while (keys_[s] != kEmpty) s = (s + 1) & mask;
        keys_[s] = old_keys[i];
        masks_[s] = old_masks[i];
    }
}

bool SelfAvoidWalker::push(Heading h) {
    if (failure_) return false;
    const std::size_t p = slot_of(pos_);
    const LatticeVec q_pos = pos_ + step(h);
    if (masks_[p] & bit_of(h)) {
        failure_ = Failure{FailureKind::DuplicateEdge, kUnknownIndex, steps_, pos_, q_pos};
        return false;
    }
    if (heading_ && std::popcount(arrival_mask_) == 2) {
        // Second full pass through this vertex: its edges are the complement of
        // the first pass, so the passes interleave iff either goes straight.
        if (is_straight_pair(arrival_mask_) || h == *heading_) {
            failure_ = Failure{FailureKind::Crossing, kUnknownIndex, steps_ - 1, pos_, pos_};
            return false;
        }
    }
    masks_[p] |= bit_of(h);
    const std::size_t q = slot_of(q_pos);
    arrival_mask_ = masks_[q];
    masks_[q] |= bit_of(opposite(h));
    pos_ = q_pos;
    heading_ = h;
    ++steps_;
    return true;
}

std::vector<SelfAvoidWalker::VertexEntry> SelfAvoidWalker::vertex_entries() const {
    std::vector<VertexEntry> out;
    out.reserve(used_);
    for (std::size_t i = 0; i < keys_.size(); ++i)
        if (keys_[i] != kEmpty) out.push_back({unpack(keys_[i]), masks_[i]});
    return out;
}

SelfAvoidWalker SelfAvoidWalker::restore(LatticeVec start, LatticeVec pos, std::optional<Heading> heading,
                                         std::uint64_t steps, std::uint8_t mask_before_arrival,
                                         std::span<const VertexEntry> entries) {
    SelfAvoidWalker w(start, entries.size());
    w.pos_ = pos;
    w.heading_ = heading;
    w.steps_ = steps;
    w.arrival_mask_ = mask_before_arrival;
    for (const auto& e : entries) w.masks_[w.slot_of(e.vertex)] = e.mask;
    return w;
}

void locate_first_index(std::span<const Heading> steps, LatticeVec start, Failure& f) {
    LatticeVec p = start;
    const std::size_t limit = std::min(f.second_index, steps.size());
    for (std::size_t i = 0; i < limit; ++i) {
        const LatticeVec q = p + step(steps[i]);
        if (f.kind == FailureKind::DuplicateEdge) {
            if ((p == f.vertex && q == f.other) || (p == f.other && q == f.vertex)) {
                f.first_index = i;
                return;
            }
        } else if (q == f.vertex && i + 1 < steps.size()) {
            // Incoming segment of the first pass through the vertex.
            f.first_index = i;
            return;
        }
        p = q;
    }
}

Verdict check_self_avoiding(const Curve& c) {
    SelfAvoidWalker w(c.start, c.size());
    for (Heading h : c.steps)
        if (!w.push(h)) break;
    if (w.ok()) return {};
    Failure f = *w.failure();
    locate_first_index(c.steps, c.start, f);
    return {false, f};
}

// ---------------------------------------------------------------------------
// General polylines

namespace {

int sign(std::int64_t v) { return (v > 0) - (v < 0); }

int orient(LatticeVec a, LatticeVec b, LatticeVec c) { return sign(cross(b - a, c - a)); }

bool same_ray(LatticeVec a, LatticeVec b) { return cross(a, b) == 0 && dot(a, b) > 0; }

// Pass {a1, a2} and pass {b1, b2} (directions out of a shared vertex, all on
// distinct rays) interleave iff exactly one of b1, b2 lies strictly inside the
// anticlockwise arc from a1 to a2.
bool interleave(LatticeVec a1, LatticeVec a2, LatticeVec b1, LatticeVec b2) {
    auto in_arc = [&](LatticeVec d) {
        const auto span = cross(a1, a2);
        if (span > 0) return cross(a1, d) > 0 && cross(d, a2) > 0;
        if (span < 0) return !(cross(a2, d) >= 0 && cross(d, a1) >= 0);
        return cross(a1, d) > 0;
    };
    return in_arc(b1) != in_arc(b2);
}

struct Candidate {
    Failure failure;
    bool operator<(const Candidate& o) const {
        if (failure.second_index != o.failure.second_index) return failure.second_index < o.failure.second_index;
        return failure.first_index < o.failure.first_index;
    }
};

}  // namespace

Verdict check_self_avoiding(const Polyline& poly) {
    const auto& v = poly.vertices;
    const std::size_t n = poly.segments();
    if (n == 0) return {};
    std::optional<Candidate> best;
    auto report = [&](FailureKind kind, std::size_t i, std::size_t j, LatticeVec at, LatticeVec other) {
        Candidate c{Failure{kind, std::min(i, j), std::max(i, j), at, other}};
        if (!best || c < *best) best = c;
    };

    for (std::size_t i = 0; i < n; ++i)
        if (v[i] == v[i + 1]) report(FailureKind::DuplicateEdge, i, i, v[i], v[i]);

    // Passes through shared vertices.
    std::unordered_map<LatticeVec, std::vector<std::size_t>, LatticeVecHash> visits;
    for (std::size_t j = 0; j <= n; ++j) visits[v[j]].push_back(j);
    auto dirs_at = [&](std::size_t j) {
        std::vector<LatticeVec> d;
        if (j > 0) d.push_back(v[j - 1] - v[j]);
        if (j < n) d.push_back(v[j + 1] - v[j]);
        return d;
    };
    // Segment index used to label a pass through vertex j.
    auto seg_of = [&](std::size_t j) { return j > 0 ? j - 1 : 0; };
    for (std::size_t j = 1; j < n; ++j) {
        const auto d = dirs_at(j);
        if (same_ray(d[0], d[1])) report(FailureKind::DuplicateEdge, j - 1, j, v[j], v[j] + d[0]);
    }
    for (const auto& [pt, js] : visits) {
        for (std::size_t a = 0; a < js.size(); ++a) {
            for (std::size_t b = a + 1; b < js.size(); ++b) {
                const auto da = dirs_at(js[a]);
                const auto db = dirs_at(js[b]);
                bool dup = false;
                for (auto x : da)
                    for (auto y : db)
                        if (same_ray(x, y)) {
                            dup = true;
                            report(FailureKind::DuplicateEdge, seg_of(js[a]), seg_of(js[b]), pt, pt + x);
                        }
                if (!dup && da.size() == 2 && db.size() == 2 && interleave(da[0], da[1], db[0], db[1]))
                    report(FailureKind::Crossing, seg_of(js[a]), seg_of(js[b]), pt, pt);
            }
        }
    }

    // Contacts away from shared vertices, through a uniform grid.
    std::int64_t cell = 1;
    for (std::size_t i = 0; i < n; ++i) {
        const auto d = poly.displacement(i);
        cell = std::max({cell, std::abs(d.x), std::abs(d.y)});
    }
    auto cell_of = [cell](std::int64_t c) { return c >= 0 ? c / cell : -((-c + cell - 1) / cell); };
    std::map<std::pair<std::int64_t, std::int64_t>, std::vector<std::size_t>> grid;
    for (std::size_t i = 0; i < n; ++i) {
        const auto lo_x = cell_of(std::min(v[i].x, v[i + 1].x)), hi_x = cell_of(std::max(v[i].x, v[i + 1].x));
        const auto lo_y = cell_of(std::min(v[i].y, v[i + 1].y)), hi_y = cell_of(std::max(v[i].y, v[i + 1].y));
        for (auto cx = lo_x; cx <= hi_x; ++cx)
            for (auto cy = lo_y; cy <= hi_y; ++cy) grid[{cx, cy}].push_back(i);
    }

    // Vertex p of the polyline touches the open segment s: crossing iff its
    // incident directions lie strictly on both sides of the segment line.
    auto touch = [&](std::size_t vertex_index, std::size_t seg) {
        const LatticeVec dir = poly.displacement(seg);
        const auto d = dirs_at(vertex_index);
        int side[2] = {0, 0};
        for (std::size_t k = 0; k < d.size(); ++k) side[k] = sign(cross(dir, d[k]));
        for (std::size_t k = 0; k < d.size(); ++k)
            if (side[k] == 0) {
                report(FailureKind::DuplicateEdge, seg, seg_of(vertex_index), v[vertex_index], v[vertex_index] + d[k]);
                return;
            }
        if (d.size() == 2 && side[0] != side[1])
            report(FailureKind::Crossing, seg, seg_of(vertex_index), v[vertex_index], v[vertex_index]);
    };
    auto strictly_inside = [&](LatticeVec p, std::size_t seg) {
        const LatticeVec a = v[seg], b = v[seg + 1];
        if (orient(a, b, p) != 0) return false;
        return dot(p - a, b - a) > 0 && dot(p - b, a - b) > 0;
    };

    for (const auto& [key, segs] : grid) {
        for (std::size_t x = 0; x < segs.size(); ++x) {
            for (std::size_t y = x + 1; y < segs.size(); ++y) {
                const std::size_t i = segs[x], j = segs[y];
                const LatticeVec a = v[i], b = v[i + 1], c = v[j], d = v[j + 1];
                const int o1 = orient(a, b, c), o2 = orient(a, b, d);
                const int o3 = orient(c, d, a), o4 = orient(c, d, b);
                if (o1 * o2 < 0 && o3 * o4 < 0) {
                    report(FailureKind::Crossing, i, j, a, a);
                    continue;
                }
                if (o1 == 0 && o2 == 0) {
                    // Collinear: overlap of positive length is a reused stretch.
                    const LatticeVec dir = b - a;
                    const auto t0 = dot(a - a, dir), t1 = dot(b - a, dir);
                    const auto s0 = dot(c - a, dir), s1 = dot(d - a, dir);
                    const auto lo = std::max(std::min(t0, t1), std::min(s0, s1));
                    const auto hi = std::min(std::max(t0, t1), std::max(s0, s1));
                    if (hi > lo) report(FailureKind::DuplicateEdge, i, j, lo == t0 ? a : c, hi == t1 ? b : d);
                    continue;
                }
                if (strictly_inside(c, i)) touch(j, i);
                if (strictly_inside(d, i)) touch(j + 1, i);
                if (strictly_inside(a, j)) touch(i, j);
                if (strictly_inside(b, j)) touch(i + 1, j);
            }
        }
    }
    if (!best) return {};
    return {false, best->failure};
}

}  // namespace digitcurve
