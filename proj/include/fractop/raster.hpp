#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fractop/geometry.hpp"

namespace fractop {

// Axis-aligned sampling grid. Cells are half-open boxes [x_i, x_{i+1}) x [y_j, y_{j+1}).
// A strip viewport (ny == 1) models one-dimensional systems on the x axis.
struct Viewport {
    Vec2 lo{0, 0};
    Vec2 hi{1, 1};
    int nx = 1024;
    int ny = 1024;

    static Viewport square(const BBox& box, int res);
    // 1d strip over [a, b] with square cells (height = one cell).
    static Viewport strip(double a, double b, int res);

    double cw() const { return (hi.x - lo.x) / nx; }
    double ch() const { return (hi.y - lo.y) / ny; }
    bool is_strip() const { return ny == 1; }
    long long cells() const { return static_cast<long long>(nx) * ny; }

    bool contains(Vec2 p) const { return p.x >= lo.x && p.x < hi.x && p.y >= lo.y && p.y < hi.y; }
    // Cell index of p, or -1 when outside.
    long long cell_of(Vec2 p) const;
    Vec2 center(int ix, int iy) const {
        return {lo.x + (ix + 0.5) * cw(), lo.y + (iy + 0.5) * ch()};
    }
    Vec2 center(long long idx) const { return center(static_cast<int>(idx % nx), static_cast<int>(idx / nx)); }

    // Range of x-cells intersecting the interval with the given endpoint openness;
    // {1, 0} when empty. Endpoints within 1e-6 of a cell edge snap onto it.
    std::pair<int, int> x_cell_range(double a, double b, bool a_open, bool b_open) const;

    bool operator==(const Viewport&) const = default;
};

struct Raster {
    Viewport vp;
    std::vector<uint8_t> occ;

    Raster() = default;
    explicit Raster(const Viewport& v) : vp(v), occ(static_cast<size_t>(v.cells()), 0) {}

    bool get(int ix, int iy) const {
        if (ix < 0 || iy < 0 || ix >= vp.nx || iy >= vp.ny) return false;
        return occ[static_cast<size_t>(iy) * vp.nx + ix] != 0;
    }
    void set(int ix, int iy) {
        if (ix < 0 || iy < 0 || ix >= vp.nx || iy >= vp.ny) return;
        occ[static_cast<size_t>(iy) * vp.nx + ix] = 1;
    }
    bool get_at(Vec2 p) const {
        const long long i = vp.cell_of(p);
        return i >= 0 && occ[static_cast<size_t>(i)] != 0;
    }

    long long count() const;
    bool empty() const { return count() == 0; }
    BBox occupied_bbox() const;

    // Maximal runs [first, last] of occupied x-cells per row.
    struct Run {
        int row;
        int first;
        int last;
    };
    std::vector<Run> runs() const;

    Raster dilated(int cells = 1) const;
    Raster eroded(int cells = 1) const;

    Raster operator|(const Raster& o) const;  // union; throws ViewportMismatch
    Raster operator&(const Raster& o) const;
    Raster minus(const Raster& o) const;
    long long sym_diff_count(const Raster& o) const;
};

// Exact squared Euclidean distance (scene units) from every cell center to the
// nearest occupied cell center.
std::vector<double> distance_field_sq(const Raster& r);

// Symmetric Hausdorff distance between occupied cell centers, exact at raster
// resolution. Returns 0 for two empty rasters and +inf when exactly one is empty.
double hausdorff_distance(const Raster& a, const Raster& b);

}  // namespace fractop
