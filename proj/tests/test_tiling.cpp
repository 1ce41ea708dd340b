#include <doctest.h>

#include <algorithm>

#include "digitcurve/planar.hpp"
#include "digitcurve/tiling.hpp"

using namespace digitcurve;

TEST_CASE("planar helpers") {
    CHECK(improper_contact({{0, 0}, {2, 2}}, {{0, 2}, {2, 0}}));
    CHECK(improper_contact({{0, 0}, {4, 0}}, {{2, 0}, {2, 3}}));
    CHECK(improper_contact({{0, 0}, {4, 0}}, {{4, 0}, {0, 0}}));
    CHECK_FALSE(improper_contact({{0, 0}, {4, 0}}, {{4, 0}, {4, 3}}));
    CHECK_FALSE(improper_contact({{0, 0}, {4, 0}}, {{0, 1}, {4, 1}}));

    // 2x2 grid of unit squares
    std::vector<Segment> grid;
    for (int i = 0; i <= 2; ++i)
        for (int j = 0; j < 2; ++j) {
            grid.push_back({{i, j}, {i, j + 1}});
            grid.push_back({{j, i}, {j + 1, i}});
        }
    CHECK_FALSE(find_improper_contact(grid).has_value());
    const auto faces = bounded_faces(grid);
    CHECK(faces.size() == 4);
    for (const auto& f : faces) CHECK(twice_area(f) == 2);
    grid.push_back({{0, 0}, {2, 2}});
    CHECK(find_improper_contact(grid).has_value());
}

TEST_CASE("base tiling") {
    const auto t = base_tiling(2, Box{-6, -6, 6, 6});
    const Tile origin{{0, 0}, TileKind::UW};
    REQUIRE(t.contains(origin));
    const auto lv = level_vectors(2);
    auto c = corners(origin, lv);
    std::sort(c.begin(), c.end());
    std::array<LatticeVec, 4> want = {LatticeVec{0, 0}, LatticeVec{2, 2}, LatticeVec{-2, 0}, LatticeVec{0, 2}};
    std::sort(want.begin(), want.end());
    CHECK(c == want);
    // [0, u_n] is a side of that tile
    for (int n = 2; n <= 8; ++n) {
        const auto l = level_vectors(n);
        const auto b = base_tiling(n, Box{-200, -200, 200, 200});
        REQUIRE(b.contains(Tile{{0, 0}, TileKind::UW}));
        const auto cs = corners(Tile{{0, 0}, TileKind::UW}, l);
        REQUIRE(std::find(cs.begin(), cs.end(), l.u) != cs.end());
        for (const auto& tile : b.tiles)
            for (auto p : corners(tile, l)) REQUIRE(b.window.contains(p));
    }
    // roughly area / tile area tiles
    const auto big = base_tiling(4, Box{-400, -400, 400, 400});
    const double expect = 800.0 * 800.0 / static_cast<double>(tile_area(TileKind::UW, level_vectors(4)));
    CHECK(static_cast<double>(big.tiles.size()) > 0.8 * expect);
    CHECK(static_cast<double>(big.tiles.size()) <= expect);
}

TEST_CASE("property 1 detects a stacked pair") {
    const auto lv = level_vectors(3);
    Tiling t{3, Box{-100, -100, 100, 100}, {Tile{{0, 0}, TileKind::UV}, Tile{lv.v, TileKind::UV}}};
    std::sort(t.tiles.begin(), t.tiles.end());
    CHECK_FALSE(verify_property1(t));
    Tiling u{3, t.window, {Tile{{0, 0}, TileKind::VW}, Tile{lv.v, TileKind::VW}}};
    std::sort(u.tiles.begin(), u.tiles.end());
    CHECK_FALSE(verify_property1(u));
    Tiling ok{3, t.window, {Tile{{0, 0}, TileKind::UV}, Tile{lv.u, TileKind::UV}}};
    std::sort(ok.tiles.begin(), ok.tiles.end());
    CHECK(verify_property1(ok));
}

TEST_CASE("property 2 flags a missing tile") {
    const Polyline coarse = coarsen(realize_phi(4), 2);
    Tiling empty{2, Box{-100, -100, 100, 100}, {}};
    const auto r = verify_property2(empty, coarse);
    CHECK(r.checked == 4);
    CHECK(r.failures.size() == 4);
}

TEST_CASE("pipeline for small n") {
    for (int n = 2; n <= 7; ++n) {
        for (int m = 2; m <= n; ++m) {
            Tiling finest;
            const auto res = run_tiling_pipeline(n, m, &finest);
            INFO("n=" << n << " m=" << m);
            REQUIRE(res.ok());
            REQUIRE(res.levels.size() == static_cast<std::size_t>(n - m + 1));
            REQUIRE(finest.level == m);
            const auto& last = res.levels.back();
            REQUIRE(last.property2.checked == (std::size_t{1} << (n - m)));
            for (const auto& lv : res.levels) {
                REQUIRE(lv.property1);
                REQUIRE(lv.self_avoiding);
                if (lv.m < n) {
                    REQUIRE(lv.audit.coverage_ok);
                    REQUIRE(lv.audit.area_ok);
                    REQUIRE(lv.audit.provenance_ok);
                    REQUIRE(lv.audit.coarse_checked > 0);
                    REQUIRE(lv.refinement.checked == (std::size_t{1} << (n - lv.m - 1)));
                }
            }
            if (m == 2) REQUIRE(res.unit_refinement.checked == (std::size_t{1} << (n - 2)));
            // every tile of the finest level is a lattice parallelogram of that level
            const auto l = level_vectors(m);
            for (const auto& t : finest.tiles) REQUIRE(tile_area(t.kind, l) > 0);
        }
    }
}

TEST_CASE("pipeline at (2, 9)") {
    const auto res = run_tiling_pipeline(9, 2);
    REQUIRE(res.ok());
    CHECK(res.levels.back().property2.checked == 128);
}

TEST_CASE("refinement check rejects a shifted fine curve") {
    const auto c = realize_phi(5);
    Polyline fine = coarsen(c, 3);
    const Polyline coarse = coarsen(c, 4);
    Tiling t4;
    REQUIRE(run_tiling_pipeline(5, 4, &t4).ok());
    CHECK(refinement_check(coarse, fine, t4).ok());
    for (auto& v : fine.vertices) v += LatticeVec{1, 0};
    CHECK_FALSE(refinement_check(coarse, fine, t4).ok());
}
