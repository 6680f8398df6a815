#include "fractop/attractor.hpp"

#include <cstdio>
#include <random>

#include "fractop/errors.hpp"

namespace fractop {

std::vector<Vec2> chaos_game(const Ifs& ifs, long long n_points, uint64_t seed, int burn_in) {
    std::vector<Vec2> pts;
    if (n_points <= 0) return pts;
    pts.reserve(static_cast<size_t>(n_points));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(1, ifs.size());
    Vec2 x = fixed_point(ifs.map(1));
    for (int i = 0; i < burn_in; ++i) x = ifs.map(pick(rng))(x);
    for (long long i = 0; i < n_points; ++i) {
        x = ifs.map(pick(rng))(x);
        pts.push_back(x);
    }
    return pts;
}

Viewport auto_viewport(const std::vector<Vec2>& points, int res) {
    if (points.empty()) throw Error("cannot build a viewport from an empty cloud");
    BBox box{points[0], points[0]};
    for (const Vec2& p : points) box.expand(p);
    const double margin = 0.05 * std::max({box.size().x, box.size().y, 1e-9});
    box = box.inflated(margin);
    // Keep cells square by inflating the short side.
    const Vec2 sz = box.size();
    if (sz.x > sz.y) {
        const double pad = (sz.x - sz.y) / 2;
        box.lo.y -= pad;
        box.hi.y += pad;
    } else {
        const double pad = (sz.y - sz.x) / 2;
        box.lo.x -= pad;
        box.hi.x += pad;
    }
    return Viewport::square(box, res);
}

Raster rasterize(const std::vector<Vec2>& points, const Viewport& vp) {
    Raster r(vp);
    for (const Vec2& p : points) {
        const long long i = vp.cell_of(p);
        if (i >= 0) r.occ[static_cast<size_t>(i)] = 1;
    }
    return r;
}

Raster attractor_raster(const Ifs& ifs, const Viewport& vp, long long n_points, uint64_t seed, int burn_in) {
    return rasterize(chaos_game(ifs, n_points, seed, burn_in), vp);
}

Raster attractor_strip_raster(const Ifs& ifs, int res) {
    const auto [lo, hi] = ifs.interval_hull_1d();
    const Viewport vp = Viewport::strip(lo, hi, res);
    // Iterate the Hutchinson operator on the full strip; cells not touching A
    // (Cantor gaps) empty out within ~log_r(cell) passes.
    Raster cur(vp);
    for (int i = 0; i < vp.nx; ++i) cur.set(i, 0);
    for (int pass = 0; pass < 14; ++pass) {
        Raster next(vp);
        for (const Raster::Run& run : cur.runs()) {
            const double a = vp.lo.x + run.first * vp.cw();
            const double b = vp.lo.x + (run.last + 1) * vp.cw();
            for (int j = 1; j <= ifs.size(); ++j) {
                const Affine1d f = as_1d(ifs.map(j));
                double ia = f(a), ib = f(b);
                bool ao = false, bo = true;
                if (f.alpha < 0) {
                    std::swap(ia, ib);
                    std::swap(ao, bo);
                }
                const auto [c0, c1] = vp.x_cell_range(ia, ib, ao, bo);
                for (int c = c0; c <= c1; ++c) next.set(c, 0);
            }
        }
        if (next.occ == cur.occ) break;
        cur = std::move(next);
    }
    return cur;
}

Raster cylinder_raster(const Ifs& ifs, const Word& w, const Raster& base) {
    for (int i = 0; i < w.size(); ++i) {
        if (w.at(i) < 1 || w.at(i) > ifs.size()) throw BadSymbol("cylinder word symbol " + std::to_string(w.at(i)));
    }
    if (w.empty()) return base;
    const AffineMap m = compose_word(ifs, w, false);
    Raster out(base.vp);
    if (base.vp.is_strip()) {
        const Affine1d f = as_1d(m);
        for (const Raster::Run& run : base.runs()) {
            const double a = base.vp.lo.x + run.first * base.vp.cw();
            const double b = base.vp.lo.x + (run.last + 1) * base.vp.cw();
            double ia = f(a), ib = f(b);
            bool ao = false, bo = true;
            if (f.alpha < 0) {
                std::swap(ia, ib);
                std::swap(ao, bo);
            }
            const auto [c0, c1] = base.vp.x_cell_range(ia, ib, ao, bo);
            for (int c = c0; c <= c1; ++c) out.set(c, 0);
        }
        return out;
    }
    for (int iy = 0; iy < base.vp.ny; ++iy)
        for (int ix = 0; ix < base.vp.nx; ++ix)
            if (base.get(ix, iy)) {
                const long long target = base.vp.cell_of(m(base.vp.center(ix, iy)));
                if (target >= 0) out.occ[static_cast<size_t>(target)] = 1;
            }
    return out.dilated(1);
}

void write_csv_points(const std::vector<Vec2>& points, const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "w");
    if (!f) throw IoError("cannot open " + path);
    for (const Vec2& p : points) std::fprintf(f, "%.12g,%.12g\n", p.x, p.y);
    std::fclose(f);
}

}  // namespace fractop
