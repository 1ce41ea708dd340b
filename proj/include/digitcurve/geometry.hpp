#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "digitcurve/lattice.hpp"
#include "digitcurve/morphism.hpp"

namespace digitcurve {

/// Unit-step lattice curve: start vertex plus one heading per segment.
///
/// Segment i joins vertex i to vertex i + 1 (both 0-based). The turn between
/// segments i and i + 1 is derived; a curve may also hold straight steps,
/// which have no Turn.
struct Curve {
    LatticeVec start;
    std::vector<Heading> steps;

    std::size_t size() const { return steps.size(); }
    std::vector<LatticeVec> vertices() const;
    LatticeVec end() const;
    std::optional<Turn> turn_after(std::size_t i) const;
    /// Turns between consecutive segments; throws if any step goes straight or back.
    std::vector<Turn> turns() const;
};

Curve realize_word(std::span<const Letter> letters, LatticeVec start = {});
/// C_n streamed straight from phi^n(u).
Curve realize_phi(int n, LatticeVec start = {});
Curve build_from_turns(LatticeVec start, Heading h0, std::span<const Turn> turns);
/// Turns given as kernel bytes (1 = Left).
Curve build_from_turn_bits(LatticeVec start, Heading h0, std::span<const std::uint8_t> left);

Curve translate(const Curve& c, LatticeVec t);
/// Mirror image exchanging the roles of e and f.
Curve swap_ef(const Curve& c);

/// Polyline with arbitrary integer vertices (coarse curves).
struct Polyline {
    std::vector<LatticeVec> vertices;
    std::size_t segments() const { return vertices.empty() ? 0 : vertices.size() - 1; }
    LatticeVec displacement(std::size_t i) const { return vertices[i + 1] - vertices[i]; }
};

Polyline to_polyline(const Curve& c);

/// Replaces each run of 2^m consecutive segments with its chord.
/// The segment count must be a multiple of 2^m.
Polyline coarsen(const Curve& c, int m);

enum class FailureKind { DuplicateEdge, Crossing };

inline constexpr std::size_t kUnknownIndex = std::numeric_limits<std::size_t>::max();

struct Failure {
    FailureKind kind = FailureKind::Crossing;
    std::size_t first_index = kUnknownIndex;   // earlier segment involved
    std::size_t second_index = kUnknownIndex;  // later segment involved
    LatticeVec vertex;                         // shared vertex, or start of the shared edge
    LatticeVec other;                          // end of the shared edge (DuplicateEdge)
};

struct Verdict {
    bool ok = true;
    std::optional<Failure> failure;
};

std::string describe(const Failure& f);

/// Streaming self-avoidance check for unit-step curves.
///
/// Keeps one 4-bit mask of used incident edges per visited vertex. A vertex
/// visited by two passes is legal iff both passes turn there; any straight
/// pass through a shared vertex is a crossing. The failure it reports carries
/// the later segment index only; `locate_first_index` fills in the earlier one.
class SelfAvoidWalker {
public:
    explicit SelfAvoidWalker(LatticeVec start = {}, std::size_t expected_steps = 0);

    /// Appends one segment; returns false once a violation has been seen.
    bool push(Heading h);

    bool ok() const { return !failure_; }
    const std::optional<Failure>& failure() const { return failure_; }
    std::uint64_t steps() const { return steps_; }
    LatticeVec position() const { return pos_; }
    std::optional<Heading> heading() const { return heading_; }

    struct VertexEntry {
        LatticeVec vertex;
        std::uint8_t mask;
    };
    /// Visited vertices in table order (deterministic for a given history).
    std::vector<VertexEntry> vertex_entries() const;

    /// Rebuilds a walker from saved state.
    static SelfAvoidWalker restore(LatticeVec start, LatticeVec pos, std::optional<Heading> heading,
                                   std::uint64_t steps, std::uint8_t mask_before_arrival,
                                   std::span<const VertexEntry> entries);
    std::uint8_t mask_before_arrival() const { return arrival_mask_; }
    LatticeVec start() const { return start_; }

private:
    std::size_t slot_of(LatticeVec v);
    void grow();

    LatticeVec start_;
    LatticeVec pos_;
    std::optional<Heading> heading_;
    std::uint64_t steps_ = 0;
    std::uint8_t arrival_mask_ = 0;
    std::optional<Failure> failure_;
    std::vector<std::uint64_t> keys_;
    std::vector<std::uint8_t> masks_;
    std::size_t used_ = 0;
};

/// Fills failure.first_index by scanning the curve prefix.
void locate_first_index(std::span<const Heading> steps, LatticeVec start, Failure& f);

Verdict check_self_avoiding(const Curve& c);

/// Self-avoidance for polylines with arbitrary integer segments, using exact
/// orientation predicates. Touching without crossing is allowed.
Verdict check_self_avoiding(const Polyline& p);

/// Unit edge normalized to point East (dir 0) or North (dir 1).
struct WindowEdge {
    std::int32_t x = 0;
    std::int32_t y = 0;
    std::uint8_t dir = 0;
    friend bool operator==(const WindowEdge&, const WindowEdge&) = default;
    friend auto operator<=>(const WindowEdge&, const WindowEdge&) = default;
};

/// Edges of a curve within distance `radius` of a centre, translated so the
/// centre is the origin and sorted. An edge belongs to the window iff both
/// endpoints do.
struct WindowPattern {
    double radius = 0;
    std::vector<WindowEdge> edges;
    friend bool operator==(const WindowPattern&, const WindowPattern&) = default;
    friend bool operator<(const WindowPattern& a, const WindowPattern& b) {
        if (a.radius != b.radius) return a.radius < b.radius;
        return a.edges < b.edges;
    }
};

/// Image under the point reflection about the centre.
WindowPattern point_reflected(const WindowPattern& w);

/// Spatial index of a curve's unit edges and vertices.
class CurveIndex {
public:
    explicit CurveIndex(const Curve& c);
    bool has_vertex(LatticeVec v) const { return vertices_.contains(v); }
    bool has_edge(LatticeVec from, std::uint8_t dir) const;

private:
    static std::uint64_t key(LatticeVec from, std::uint8_t dir);
    std::unordered_set<LatticeVec, LatticeVecHash> vertices_;
    std::unordered_set<std::uint64_t> edges_;
};

/// Throws std::invalid_argument if z is not a vertex of the curve.
WindowPattern window(const CurveIndex& index, LatticeVec z, double radius);
WindowPattern window(const Curve& c, LatticeVec z, double radius);

}  // namespace digitcurve
