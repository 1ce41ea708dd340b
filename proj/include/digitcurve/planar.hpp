#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "digitcurve/lattice.hpp"

namespace digitcurve {

struct Segment {
    LatticeVec a, b;
    friend bool operator==(const Segment&, const Segment&) = default;
    friend auto operator<=>(const Segment&, const Segment&) = default;
};

/// Same segment with endpoints in ascending order.
inline Segment normalized(Segment s) { return s.b < s.a ? Segment{s.b, s.a} : s; }

/// Sign of cross(b - a, c - a).
int orientation(LatticeVec a, LatticeVec b, LatticeVec c);

/// True iff p lies on the closed segment s.
bool on_segment(const Segment& s, LatticeVec p);

/// True iff the closed segments meet anywhere other than at a shared endpoint.
bool improper_contact(const Segment& s, const Segment& t);

/// First pair of segments with improper contact, if any. Segments must be
/// distinct after normalization.
std::optional<std::pair<Segment, Segment>> find_improper_contact(std::span<const Segment> segs);

/// Bounded faces of a planar straight-line graph, each as its boundary walk
/// (anticlockwise, collinear vertices kept). The graph must be planar.
std::vector<std::vector<LatticeVec>> bounded_faces(std::span<const Segment> segs);

/// Twice the signed area of a closed polygon.
std::int64_t twice_area(std::span<const LatticeVec> poly);

}  // namespace digitcurve
