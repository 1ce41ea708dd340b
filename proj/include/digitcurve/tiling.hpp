#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "digitcurve/geometry.hpp"
#include "digitcurve/lattice.hpp"
#include "digitcurve/morphism.hpp"
#include "digitcurve/planar.hpp"

namespace digitcurve {

enum class TileKind : std::uint8_t { UV = 0, UW, VW };

std::string_view kind_name(TileKind k);

/// Parallelogram with corners x, x+y, x+z, x+y+z where (y, z) is the
/// generator pair of `kind` at the tiling's level.
struct Tile {
    LatticeVec anchor;
    TileKind kind = TileKind::UW;
    friend bool operator==(const Tile&, const Tile&) = default;
    friend auto operator<=>(const Tile&, const Tile&) = default;
};

std::pair<LatticeVec, LatticeVec> generators(TileKind k, const LevelVectors& lv);

/// Corners in anticlockwise order starting at the anchor.
std::array<LatticeVec, 4> corners(const Tile& t, const LevelVectors& lv);

std::int64_t tile_area(TileKind k, const LevelVectors& lv);

/// Closed axis-aligned box.
struct Box {
    std::int64_t x0 = 0, y0 = 0, x1 = 0, y1 = 0;
    bool contains(LatticeVec p) const { return x0 <= p.x && p.x <= x1 && y0 <= p.y && p.y <= y1; }
    bool empty() const { return x1 < x0 || y1 < y0; }
    Box shrunk(std::int64_t d) const { return {x0 + d, y0 + d, x1 - d, y1 - d}; }
    Box grown(std::int64_t d) const { return shrunk(-d); }
};

Box bounding_box(std::span<const LatticeVec> pts);

/// Sum of the sup norms of u_m, v_m and w_m; bounds the extent of any tile
/// or inserted segment at level m.
std::int64_t margin(int m);

/// Tiles of one level. Every tile lies inside `window`, and every tile meeting
/// `window.shrunk(margin(level))` is present.
struct Tiling {
    int level = 0;
    Box window;
    std::vector<Tile> tiles;  // sorted

    bool contains(const Tile& t) const;
};

class TilingError : public std::runtime_error {
public:
    TilingError(const std::string& what, std::vector<LatticeVec> where)
        : std::runtime_error(what), where_(std::move(where)) {}
    const std::vector<LatticeVec>& where() const { return where_; }

private:
    std::vector<LatticeVec> where_;
};

/// Lattice tiling by translates of the (u_n, w_n) parallelogram anchored at
/// i*u_n + j*w_n, restricted to tiles inside `window`.
Tiling base_tiling(int n, Box window);

/// Level-m segments inserted by each level-(m+1) tile, deduplicated and sorted.
std::vector<Segment> inserted_segments(const Tiling& coarse);

struct SubdivisionAudit {
    std::size_t faces = 0;         // bounded faces of the level-m graph
    std::size_t tiles = 0;         // faces kept inside the new window
    std::size_t coarse_checked = 0;
    bool coverage_ok = false;      // no hole inside the trusted box
    bool area_ok = false;          // overlaps add up on both levels
    bool provenance_ok = false;    // sides of each fine tile come from at most 2 coarse tiles
    std::string detail;
    bool ok() const { return coverage_ok && area_ok && provenance_ok; }
};

/// Level-m tiling from a level-(m+1) tiling. Throws TilingError if the
/// inserted segments are not a planar graph or a face inside the new window
/// is not a level-m parallelogram.
Tiling subdivide(const Tiling& coarse, SubdivisionAudit* audit = nullptr);

/// No stacked pair (UV at x and x+v_m) or (VW at x and x+v_m).
bool verify_property1(const Tiling& t);

struct CheckReport {
    std::size_t checked = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

/// Each segment of the coarse curve sits in the position the segment class
/// demands on a tile of `t`.
CheckReport verify_property2(const Tiling& t, const Polyline& coarse);

/// `fine` replaces each segment S of `coarse` (level m+1) by a pair following
/// the u/v/w table, and the pair runs through the interior of a tile of `t`
/// that has S as a side.
CheckReport refinement_check(const Polyline& coarse, const Polyline& fine, const Tiling& t);

/// Unit version: each segment of C_{2,n} expands to 4 unit segments that stay
/// in the closed level-2 tile having it as a side, with no intermediate vertex
/// at a tile corner. At level 2 the unit path may run along the tile boundary,
/// so interior containment is not required.
CheckReport unit_refinement_check(const Polyline& coarse2, const Curve& unit, const Tiling& t);

struct LevelResult {
    int m = 0;
    std::size_t tiles = 0;
    SubdivisionAudit audit;
    bool property1 = false;
    CheckReport property2;
    CheckReport refinement;  // against level m+1, empty at the base level
    bool self_avoiding = false;
    std::string error;  // TilingError text, if any
    bool ok() const;
};

struct PipelineResult {
    int n = 0;
    int m_min = 2;
    std::string anchoring;
    std::vector<LevelResult> levels;  // n, n-1, ..., m_min
    CheckReport unit_refinement;
    bool ok() const;
};

/// Runs base tiling, subdivision down to m_min and every check against C_n.
/// The level-m_min tiling is stored in `finest` when given and all levels were built.
PipelineResult run_tiling_pipeline(int n, int m_min = 2, Tiling* finest = nullptr);

}  // namespace digitcurve
