#include <cmath>
#include <random>

#include "doctest.h"
#include "fractop/attractor.hpp"
#include "fractop/errors.hpp"
#include "fractop/systems.hpp"

using namespace fractop;

TEST_SUITE_BEGIN("attractor");

TEST_CASE("chaos game stays on the attractor") {
    const Ifs dy = systems::dyadic();
    const auto pts = chaos_game(dy, 20000, 42);
    REQUIRE(pts.size() == 20000);
    for (const Vec2& p : pts) {
        CHECK(p.x >= -1e-9);
        CHECK(p.x <= 1.0 + 1e-9);
        CHECK(std::fabs(p.y) < 1e-9);
    }

    // Middle-third gap of the Cantor set is never visited.
    const auto cpts = chaos_game(systems::cantor(), 20000, 7);
    for (const Vec2& p : cpts) {
        const bool in_gap = p.x > 1.0 / 3.0 + 1e-9 && p.x < 2.0 / 3.0 - 1e-9;
        CHECK(!in_gap);
    }

    CHECK(chaos_game(dy, 0, 1).empty());
    CHECK(chaos_game(dy, 100, 5) == chaos_game(dy, 100, 5));  // deterministic per seed
}

TEST_CASE("strip attractor raster: full interval vs cantor gaps") {
    const Raster full = attractor_strip_raster(systems::overlap3(), 256);
    CHECK(full.count() == 256);

    const Raster cant = attractor_strip_raster(systems::cantor(), 243);
    // Middle third must be empty, ends occupied.
    CHECK(cant.get(0, 0));
    CHECK(cant.get(242, 0));
    for (int i = 82; i < 161; ++i) CHECK(!cant.get(i, 0));
}

TEST_CASE("cylinder_raster on strips") {
    const Ifs dy = systems::dyadic();
    const Raster base = attractor_strip_raster(dy, 1024);

    const Raster same = cylinder_raster(dy, Word({}, 2), base);
    CHECK(same.occ == base.occ);

    const Raster left = cylinder_raster(dy, Word::parse("1", 2), base);
    CHECK(left.count() == 512);  // [0, 1/2]
    CHECK(left.get(0, 0));
    CHECK(!left.get(600, 0));

    const Raster w22 = cylinder_raster(dy, Word::parse("22", 2), base);
    // [3/4, 1]
    CHECK(w22.count() == 256);
    CHECK(w22.get(1023, 0));
    CHECK(!w22.get(700, 0));

    CHECK_THROWS_AS(cylinder_raster(dy, Word({1, 3}, 3), base), BadSymbol);
}

TEST_CASE("hausdorff distance basics") {
    const Viewport vp = Viewport::strip(0.0, 1.0, 1024);
    Raster a(vp), b(vp);
    for (int i = 0; i < 1024; ++i) a.set(i, 0);
    for (int i = 0; i < 512; ++i) b.set(i, 0);

    Raster c = a;
    CHECK(hausdorff_distance(a, c) == 0.0);

    Raster p(vp), q(vp);
    p.set(100, 0);
    q.set(107, 0);
    CHECK(hausdorff_distance(p, q) == doctest::Approx(7.0 * vp.cw()).epsilon(1e-12));

    // [0,1] vs [0,1/2]: analytic Hausdorff 0.5, exact within one cell.
    CHECK(hausdorff_distance(a, b) == doctest::Approx(0.5).epsilon(2.0 / 1024.0));

    Raster other(Viewport::strip(0.0, 2.0, 1024));
    CHECK_THROWS_AS(hausdorff_distance(a, other), ViewportMismatch);
}

TEST_CASE("distance field matches brute force on random small rasters") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> coord(0, 31), n_pts(1, 20);
    for (int iter = 0; iter < 20; ++iter) {
        Viewport vp;
        vp.lo = {0, 0};
        vp.hi = {1.0, 2.0};  // anisotropic cells
        vp.nx = 32;
        vp.ny = 32;
        Raster r(vp);
        const int n = n_pts(rng);
        for (int i = 0; i < n; ++i) r.set(coord(rng), coord(rng));
        const auto field = distance_field_sq(r);
        for (int iy = 0; iy < 32; ++iy)
            for (int ix = 0; ix < 32; ++ix) {
                double best = 1e300;
                for (int jy = 0; jy < 32; ++jy)
                    for (int jx = 0; jx < 32; ++jx)
                        if (r.get(jx, jy)) {
                            const double dx = (ix - jx) * vp.cw();
                            const double dy = (iy - jy) * vp.ch();
                            best = std::min(best, dx * dx + dy * dy);
                        }
                CHECK(field[static_cast<size_t>(iy) * 32 + ix] == doctest::Approx(best).epsilon(1e-9));
            }
    }
}

TEST_CASE("invariance: raster(A) vs union of depth-1 cylinders") {
    const Ifs leaf = systems::leaf();
    const auto pts = chaos_game(leaf, 1200000, 2024);
    const Viewport vp = auto_viewport(pts, 256);
    const Raster base = rasterize(pts, vp);
    Raster cyl_union = cylinder_raster(leaf, Word::parse("1", 2), base) |
                       cylinder_raster(leaf, Word::parse("2", 2), base);

    // Symmetric difference must be confined to a 2-cell boundary band:
    // eroding either side of the difference twice leaves nothing.
    const Raster diff1 = base.minus(cyl_union);
    CHECK(diff1.count() == 0);  // cylinders cover A (they are dilated)
    const Raster diff2 = cyl_union.minus(base.dilated(2));
    CHECK(diff2.count() == 0);
}

TEST_CASE("two seeds agree within a few cells") {
    const Ifs leaf = systems::leaf();
    const auto p1 = chaos_game(leaf, 1000000, 1);
    const auto p2 = chaos_game(leaf, 1000000, 2);
    const Viewport vp = auto_viewport(p1, 256);
    const double cell = vp.cw();
    CHECK(hausdorff_distance(rasterize(p1, vp), rasterize(p2, vp)) <= 3 * cell);
}

TEST_SUITE_END();
