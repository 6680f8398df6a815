#include "fractop/raster.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fractop/errors.hpp"

namespace fractop {

Viewport Viewport::square(const BBox& box, int res) {
    if (res < 16) throw Error("viewport resolution must be >= 16");
    Viewport v;
    v.lo = box.lo;
    v.hi = box.hi;
    v.nx = v.ny = res;
    if (!(v.hi.x > v.lo.x) || !(v.hi.y > v.lo.y)) throw Error("viewport box is degenerate");
    return v;
}

Viewport Viewport::strip(double a, double b, int res) {
    if (res < 16) throw Error("viewport resolution must be >= 16");
    if (!(b > a)) throw Error("strip interval is degenerate");
    Viewport v;
    const double cell = (b - a) / res;
    v.lo = {a, -cell / 2};
    v.hi = {b, cell / 2};
    v.nx = res;
    v.ny = 1;
    return v;
}

long long Viewport::cell_of(Vec2 p) const {
    const double ux = (p.x - lo.x) / cw();
    const double uy = (p.y - lo.y) / ch();
    const int ix = static_cast<int>(std::floor(ux));
    const int iy = static_cast<int>(std::floor(uy));
    if (ix < 0 || iy < 0 || ix >= nx || iy >= ny) return -1;
    return static_cast<long long>(iy) * nx + ix;
}

namespace {
// Snaps near-integer grid coordinates so analytically equal endpoints land on
// the same cell no matter which floating route produced them.
double snap_index(double u) {
    const double r = std::round(u);
    return std::fabs(u - r) <= 1e-6 ? r : u;
}
}  // namespace

std::pair<int, int> Viewport::x_cell_range(double a, double b, bool a_open, bool b_open) const {
    if (b < a) return {1, 0};
    const double ua = snap_index((a - lo.x) / cw());
    const double ub = snap_index((b - lo.x) / cw());
    int first = static_cast<int>(std::floor(ua));
    int last;
    if (ub == std::floor(ub)) {
        last = static_cast<int>(ub) - (b_open ? 1 : 0);
    } else {
        last = static_cast<int>(std::floor(ub));
    }
    if (a_open && b_open && ua == ub) return {1, 0};
    first = std::max(first, 0);
    last = std::min(last, nx - 1);
    if (first > last) return {1, 0};
    return {first, last};
}

long long Raster::count() const {
    long long n = 0;
    for (uint8_t v : occ) n += v;
    return n;
}

BBox Raster::occupied_bbox() const {
    BBox box{{std::numeric_limits<double>::max(), std::numeric_limits<double>::max()},
             {-std::numeric_limits<double>::max(), -std::numeric_limits<double>::max()}};
    for (int iy = 0; iy < vp.ny; ++iy)
        for (int ix = 0; ix < vp.nx; ++ix)
            if (get(ix, iy)) box.expand(vp.center(ix, iy));
    return box;
}

std::vector<Raster::Run> Raster::runs() const {
    std::vector<Run> out;
    for (int iy = 0; iy < vp.ny; ++iy) {
        int start = -1;
        for (int ix = 0; ix <= vp.nx; ++ix) {
            const bool on = ix < vp.nx && get(ix, iy);
            if (on && start < 0) start = ix;
            if (!on && start >= 0) {
                out.push_back({iy, start, ix - 1});
                start = -1;
            }
        }
    }
    return out;
}

Raster Raster::dilated(int cells) const {
    Raster out = *this;
    for (int pass = 0; pass < cells; ++pass) {
        Raster tmp(vp);
        for (int iy = 0; iy < vp.ny; ++iy)
            for (int ix = 0; ix < vp.nx; ++ix)
                if (out.get(ix, iy) || out.get(ix - 1, iy) || out.get(ix + 1, iy))
                    tmp.set(ix, iy);
        Raster tmp2(vp);
        for (int iy = 0; iy < vp.ny; ++iy)
            for (int ix = 0; ix < vp.nx; ++ix)
                if (tmp.get(ix, iy) || tmp.get(ix, iy - 1) || tmp.get(ix, iy + 1))
                    tmp2.set(ix, iy);
        out = std::move(tmp2);
    }
    return out;
}

Raster Raster::eroded(int cells) const {
    Raster out = *this;
    for (int pass = 0; pass < cells; ++pass) {
        Raster tmp(vp);
        for (int iy = 0; iy < vp.ny; ++iy)
            for (int ix = 0; ix < vp.nx; ++ix) {
                const bool keep = out.get(ix, iy) &&
                                  (ix == 0 || out.get(ix - 1, iy)) && (ix == vp.nx - 1 || out.get(ix + 1, iy)) &&
                                  (iy == 0 || out.get(ix, iy - 1)) && (iy == vp.ny - 1 || out.get(ix, iy + 1));
                if (keep) tmp.set(ix, iy);
            }
        out = std::move(tmp);
    }
    return out;
}

static void check_same_viewport(const Raster& a, const Raster& b) {
    if (!(a.vp == b.vp)) throw ViewportMismatch();
}

Raster Raster::operator|(const Raster& o) const {
    check_same_viewport(*this, o);
    Raster out = *this;
    for (size_t i = 0; i < occ.size(); ++i) out.occ[i] |= o.occ[i];
    return out;
}

Raster Raster::operator&(const Raster& o) const {
    check_same_viewport(*this, o);
    Raster out(vp);
    for (size_t i = 0; i < occ.size(); ++i) out.occ[i] = occ[i] & o.occ[i];
    return out;
}

Raster Raster::minus(const Raster& o) const {
    check_same_viewport(*this, o);
    Raster out(vp);
    for (size_t i = 0; i < occ.size(); ++i) out.occ[i] = occ[i] & static_cast<uint8_t>(~o.occ[i]);
    return out;
}

long long Raster::sym_diff_count(const Raster& o) const {
    check_same_viewport(*this, o);
    long long n = 0;
    for (size_t i = 0; i < occ.size(); ++i) n += occ[i] != o.occ[i];
    return n;
}

namespace {

constexpr double kInf = 1e100;

// Felzenszwalb-Huttenlocher lower envelope of parabolas on samples x_i = i*step.
// f uses the large-but-finite kInf for "no site"; the z sentinels are true
// infinities so envelope comparisons can never pop past the first parabola.
void dt_1d(const std::vector<double>& f, std::vector<double>& d, int n, double step,
           std::vector<int>& v, std::vector<double>& z) {
    const double inf = std::numeric_limits<double>::infinity();
    int k = 0;
    v[0] = 0;
    z[0] = -inf;
    z[1] = inf;
    for (int q = 1; q < n; ++q) {
        const double xq = q * step;
        double s;
        while (true) {
            const double xv = v[k] * step;
            s = ((f[static_cast<size_t>(q)] + xq * xq) - (f[static_cast<size_t>(v[k])] + xv * xv)) / (2 * xq - 2 * xv);
            if (s <= z[k]) {
                --k;
            } else {
                break;
            }
        }
        ++k;
        v[k] = q;
        z[k] = s;
        z[k + 1] = inf;
    }
    k = 0;
    for (int q = 0; q < n; ++q) {
        const double xq = q * step;
        while (z[k + 1] < xq) ++k;
        const double dx = xq - v[k] * step;
        d[static_cast<size_t>(q)] = dx * dx + f[static_cast<size_t>(v[k])];
    }
}

}  // namespace

std::vector<double> distance_field_sq(const Raster& r) {
    const int nx = r.vp.nx, ny = r.vp.ny;
    std::vector<double> grid(static_cast<size_t>(nx) * ny, kInf);
    for (int iy = 0; iy < ny; ++iy)
        for (int ix = 0; ix < nx; ++ix)
            if (r.get(ix, iy)) grid[static_cast<size_t>(iy) * nx + ix] = 0.0;

    const int nmax = std::max(nx, ny);
    std::vector<double> f(static_cast<size_t>(nmax)), d(static_cast<size_t>(nmax));
    std::vector<int> v(static_cast<size_t>(nmax));
    std::vector<double> z(static_cast<size_t>(nmax) + 1);

    // Rows (x direction), then columns (y direction).
    for (int iy = 0; iy < ny; ++iy) {
        for (int ix = 0; ix < nx; ++ix) f[static_cast<size_t>(ix)] = grid[static_cast<size_t>(iy) * nx + ix];
        dt_1d(f, d, nx, r.vp.cw(), v, z);
        for (int ix = 0; ix < nx; ++ix) grid[static_cast<size_t>(iy) * nx + ix] = d[static_cast<size_t>(ix)];
    }
    if (ny > 1) {
        for (int ix = 0; ix < nx; ++ix) {
            for (int iy = 0; iy < ny; ++iy) f[static_cast<size_t>(iy)] = grid[static_cast<size_t>(iy) * nx + ix];
            dt_1d(f, d, ny, r.vp.ch(), v, z);
            for (int iy = 0; iy < ny; ++iy) grid[static_cast<size_t>(iy) * nx + ix] = d[static_cast<size_t>(iy)];
        }
    }
    return grid;
}

double hausdorff_distance(const Raster& a, const Raster& b) {
    check_same_viewport(a, b);
    const bool ea = a.empty(), eb = b.empty();
    if (ea && eb) return 0.0;
    if (ea || eb) return std::numeric_limits<double>::infinity();

    double worst = 0.0;
    {
        const std::vector<double> db = distance_field_sq(b);
        for (int iy = 0; iy < a.vp.ny; ++iy)
            for (int ix = 0; ix < a.vp.nx; ++ix)
                if (a.get(ix, iy)) worst = std::max(worst, db[static_cast<size_t>(iy) * a.vp.nx + ix]);
    }
    {
        const std::vector<double> da = distance_field_sq(a);
        for (int iy = 0; iy < b.vp.ny; ++iy)
            for (int ix = 0; ix < b.vp.nx; ++ix)
                if (b.get(ix, iy)) worst = std::max(worst, da[static_cast<size_t>(iy) * b.vp.nx + ix]);
    }
    return std::sqrt(worst);
}

}  // namespace fractop
