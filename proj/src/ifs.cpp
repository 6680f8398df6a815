#include "fractop/ifs.hpp"

#include <cmath>

#include "fractop/errors.hpp"

namespace fractop {

Ifs::Ifs(std::vector<AffineMap> maps, std::string name) : maps_(std::move(maps)), name_(std::move(name)) {
    if (maps_.size() < 2) throw Error("an ifs needs at least two maps");
    for (const auto& m : maps_) {
        if (m.max_scale() >= 1.0) throw Error("ifs map is not contractive");
        if (std::fabs(m.linear.det()) <= 0.0) throw Error("ifs map is singular");
    }
    // At least two maps must have distinct fixed points.
    bool distinct = false;
    const Vec2 p0 = fixed_point(maps_[0]);
    for (size_t j = 1; j < maps_.size() && !distinct; ++j) {
        if (dist(fixed_point(maps_[j]), p0) > 1e-12) distinct = true;
    }
    if (!distinct) throw Error("all maps share one fixed point");
}

const AffineMap& Ifs::map(int symbol) const {
    if (symbol < 1 || symbol > size()) throw BadSymbol("map index " + std::to_string(symbol));
    return maps_[static_cast<size_t>(symbol - 1)];
}

RatioInfo Ifs::ratios() const {
    RatioInfo info;
    std::vector<double> s(maps_.size());
    for (size_t j = 0; j < maps_.size(); ++j) {
        s[j] = maps_[j].is_similitude() ? maps_[j].similitude_ratio() : maps_[j].max_scale();
        info.r_max = std::max(info.r_max, s[j]);
    }
    bool uniform = true;
    for (double sj : s) uniform = uniform && std::fabs(sj - info.r_max) <= 1e-9;
    if (uniform) info.uniform = info.r_max;
    info.exponents.resize(maps_.size());
    for (size_t j = 0; j < maps_.size(); ++j) {
        info.exponents[j] = std::log(s[j]) / std::log(info.r_max);
        info.a_max = std::max(info.a_max, info.exponents[j]);
    }
    return info;
}

bool Ifs::is_1d(double tol) const {
    for (const auto& m : maps_) {
        const bool diag = std::fabs(m.linear.b) <= tol && std::fabs(m.linear.c) <= tol &&
                          std::fabs(m.linear.a - m.linear.d) <= tol && std::fabs(m.offset.y) <= tol;
        if (!diag) return false;
    }
    return true;
}

Affine1d Ifs::map_1d(int symbol) const { return as_1d(map(symbol)); }

std::pair<double, double> Ifs::interval_hull_1d() const {
    if (!is_1d()) throw NotOneDimensional();
    double lo = fixed_point(maps_[0]).x;
    double hi = lo;
    for (const auto& m : maps_) {
        const double f = fixed_point(m).x;
        lo = std::min(lo, f);
        hi = std::max(hi, f);
    }
    for (int iter = 0; iter < 200; ++iter) {
        double nlo = lo, nhi = hi;
        for (const auto& m : maps_) {
            const Affine1d f = as_1d(m);
            const double e1 = f(lo), e2 = f(hi);
            nlo = std::min({nlo, e1, e2});
            nhi = std::max({nhi, e1, e2});
        }
        if (nlo == lo && nhi == hi) break;
        lo = nlo;
        hi = nhi;
    }
    return {lo, hi};
}

AffineMap compose_word(const Ifs& ifs, const Word& w, bool inverse_maps) {
    AffineMap acc{};  // identity
    for (int i = 0; i < w.size(); ++i) {
        const AffineMap& f = ifs.map(w.at(i));
        acc = compose(acc, inverse_maps ? inverse(f) : f);
    }
    return acc;
}

Affine1d compose_word_1d(const Ifs& ifs, const Word& w, bool inverse_maps) {
    Affine1d acc{};
    for (int i = 0; i < w.size(); ++i) {
        Affine1d f = as_1d(ifs.map(w.at(i)));
        if (inverse_maps) f = Affine1d{1.0 / f.alpha, -f.beta / f.alpha};
        // acc o f
        acc = Affine1d{acc.alpha * f.alpha, acc.alpha * f.beta + acc.beta};
    }
    return acc;
}

}  // namespace fractop
