#include "fractop/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "fractop/errors.hpp"

namespace fractop {

double Mat2::max_scale() const {
    // Singular values of [[a,b],[c,d]]: eigenvalues of M^T M.
    const double t = a * a + b * b + c * c + d * d;
    const double dd = det();
    const double disc = std::max(0.0, t * t / 4.0 - dd * dd);
    return std::sqrt(t / 2.0 + std::sqrt(disc));
}

double Mat2::min_scale() const {
    const double t = a * a + b * b + c * c + d * d;
    const double dd = det();
    const double disc = std::max(0.0, t * t / 4.0 - dd * dd);
    return std::sqrt(std::max(0.0, t / 2.0 - std::sqrt(disc)));
}

void BBox::expand(Vec2 p) {
    lo.x = std::min(lo.x, p.x);
    lo.y = std::min(lo.y, p.y);
    hi.x = std::max(hi.x, p.x);
    hi.y = std::max(hi.y, p.y);
}

void BBox::expand(const BBox& o) {
    expand(o.lo);
    expand(o.hi);
}

bool AffineMap::is_similitude(double tol) const {
    // linear^T linear = s^2 I: equal column norms, orthogonal columns.
    const double c1 = linear.a * linear.a + linear.c * linear.c;
    const double c2 = linear.b * linear.b + linear.d * linear.d;
    const double cross = linear.a * linear.b + linear.c * linear.d;
    const double s2 = std::max(c1, c2);
    if (s2 <= 0.0) return false;
    return std::fabs(c1 - c2) <= tol * std::max(1.0, s2) && std::fabs(cross) <= tol * std::max(1.0, s2);
}

BBox AffineMap::image_of(const BBox& box) const {
    const Vec2 corners[4] = {box.lo, {box.hi.x, box.lo.y}, {box.lo.x, box.hi.y}, box.hi};
    BBox out{(*this)(corners[0]), (*this)(corners[0])};
    for (int i = 1; i < 4; ++i) out.expand((*this)(corners[i]));
    return out;
}

AffineMap affine_from_rows(double a, double b, double e, double c, double d, double g) {
    return AffineMap{Mat2{a, b, c, d}, Vec2{e, g}};
}

AffineMap affine_1d(double alpha, double beta) {
    return AffineMap{Mat2::scale(alpha), Vec2{beta, 0.0}};
}

AffineMap compose(const AffineMap& f, const AffineMap& g) {
    return AffineMap{f.linear * g.linear, f.linear * g.offset + f.offset};
}

AffineMap inverse(const AffineMap& m) {
    const double det = m.linear.det();
    if (std::fabs(det) < 1e-15) throw SingularMap();
    const Mat2 inv{m.linear.d / det, -m.linear.b / det, -m.linear.c / det, m.linear.a / det};
    const Vec2 t = inv * m.offset;
    return AffineMap{inv, Vec2{-t.x, -t.y}};
}

Vec2 fixed_point(const AffineMap& m) {
    // (I - linear) p = offset
    const Mat2 im{1.0 - m.linear.a, -m.linear.b, -m.linear.c, 1.0 - m.linear.d};
    const double det = im.det();
    if (std::fabs(det) < 1e-12) throw NoUniqueFixedPoint();
    const Mat2 inv{im.d / det, -im.b / det, -im.c / det, im.a / det};
    return inv * m.offset;
}

Affine1d as_1d(const AffineMap& m, double tol) {
    const bool diag = std::fabs(m.linear.b) <= tol && std::fabs(m.linear.c) <= tol &&
                      std::fabs(m.linear.a - m.linear.d) <= tol && std::fabs(m.offset.y) <= tol;
    if (!diag) throw NotOneDimensional();
    return Affine1d{m.linear.a, m.offset.x};
}

std::ostream& operator<<(std::ostream& os, const Vec2& v) {
    return os << "(" << v.x << ", " << v.y << ")";
}

}  // namespace fractop
