#pragma once

#include <cmath>
#include <iosfwd>

namespace fractop {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    bool operator==(const Vec2&) const = default;

    double norm() const { return std::hypot(x, y); }
};

inline double dist(Vec2 a, Vec2 b) { return (a - b).norm(); }

// Row-major 2x2 matrix [[a,b],[c,d]].
struct Mat2 {
    double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

    static Mat2 identity() { return {}; }
    static Mat2 scale(double s) { return {s, 0.0, 0.0, s}; }
    static Mat2 rotation(double theta) {
        const double ct = std::cos(theta), st = std::sin(theta);
        return {ct, -st, st, ct};
    }

    double det() const { return a * d - b * c; }
    Vec2 operator*(Vec2 v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    bool operator==(const Mat2&) const = default;

    // Largest/smallest singular value.
    double max_scale() const;
    double min_scale() const;
};

struct BBox {
    Vec2 lo{0, 0};
    Vec2 hi{0, 0};

    bool contains(Vec2 p) const { return p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y; }
    Vec2 size() const { return hi - lo; }
    Vec2 center() const { return {(lo.x + hi.x) / 2, (lo.y + hi.y) / 2}; }
    double diameter() const { return size().norm(); }
    void expand(Vec2 p);
    void expand(const BBox& o);
    BBox inflated(double margin) const { return {{lo.x - margin, lo.y - margin}, {hi.x + margin, hi.y + margin}}; }
};

// Affine map x -> linear*x + offset.
struct AffineMap {
    Mat2 linear;
    Vec2 offset;

    Vec2 operator()(Vec2 p) const { return linear * p + offset; }
    bool operator==(const AffineMap&) const = default;

    double max_scale() const { return linear.max_scale(); }
    bool is_similitude(double tol = 1e-9) const;
    // Contraction/expansion ratio assuming the map is a similitude.
    double similitude_ratio() const { return std::sqrt(std::fabs(linear.det())); }

    BBox image_of(const BBox& box) const;
};

// 2x3 bracket layout: f(x,y) = (a x + b y + e, c x + d y + g).
AffineMap affine_from_rows(double a, double b, double e, double c, double d, double g);

// One-dimensional map x -> alpha x + beta embedded on the x axis; y scales by alpha
// so the embedded map stays a similitude with the same fixed point.
AffineMap affine_1d(double alpha, double beta);

// this o other (apply `other` first).
AffineMap compose(const AffineMap& first_applied_last, const AffineMap& applied_first);

AffineMap inverse(const AffineMap& m);   // throws SingularMap
Vec2 fixed_point(const AffineMap& m);    // throws NoUniqueFixedPoint

// Extracts (alpha, beta) when the map is a 1d embedding, else throws NotOneDimensional.
struct Affine1d {
    double alpha = 1.0;
    double beta = 0.0;
    double operator()(double x) const { return alpha * x + beta; }
};
Affine1d as_1d(const AffineMap& m, double tol = 1e-12);

std::ostream& operator<<(std::ostream& os, const Vec2& v);

}  // namespace fractop
