#pragma once

#include <cstdint>
#include <vector>

#include "fractop/ifs.hpp"
#include "fractop/raster.hpp"

namespace fractop {

// Random-iteration approximation of the attractor. Starts at the fixed point
// of map 1 (a point of A), so every emitted point lies on A up to rounding;
// burn_in extra steps are taken before recording. Deterministic per seed.
std::vector<Vec2> chaos_game(const Ifs& ifs, long long n_points, uint64_t seed, int burn_in = 50);

// Deterministic bounding viewport for a point cloud (5% margin).
Viewport auto_viewport(const std::vector<Vec2>& points, int res);

Raster rasterize(const std::vector<Vec2>& points, const Viewport& vp);

// Reference raster of A on the given viewport.
Raster attractor_raster(const Ifs& ifs, const Viewport& vp, long long n_points = 2'000'000,
                        uint64_t seed = 20240001, int burn_in = 50);

// Strip raster of a 1d attractor hull [lo, hi] at the given resolution.
Raster attractor_strip_raster(const Ifs& ifs, int res);

// Raster of f_w(A) from a raster of A. In two dimensions: transformed occupied
// cell centers, conservatively dilated by one cell. On strips: exact cells
// touching the affine images of the occupied runs, no extra dilation.
Raster cylinder_raster(const Ifs& ifs, const Word& w, const Raster& base);

void write_csv_points(const std::vector<Vec2>& points, const std::string& path);

}  // namespace fractop
