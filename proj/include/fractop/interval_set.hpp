#pragma once

#include <string>
#include <vector>

namespace fractop {

// Endpoint comparisons snap within this tolerance, so analytically equal
// endpoints reached along different floating routes are treated as equal.
inline constexpr double kEndpointWeld = 1e-9;

// -1 / 0 / +1 with welded equality.
int weld_cmp(double a, double b);

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    bool lo_open = false;
    bool hi_open = false;

    static Interval closed(double a, double b) { return {a, b, false, false}; }
    static Interval point(double a) { return {a, a, false, false}; }

    bool is_point() const { return weld_cmp(lo, hi) == 0; }
    double length() const { return hi > lo ? hi - lo : 0.0; }
    bool valid() const;
    std::string str() const;
};

// Finite union of disjoint intervals with exact open/closed bookkeeping,
// kept sorted and maximally merged.
class IntervalSet {
  public:
    IntervalSet() = default;
    explicit IntervalSet(Interval iv);
    static IntervalSet closed(double a, double b) { return IntervalSet(Interval::closed(a, b)); }

    bool empty() const { return parts_.empty(); }
    const std::vector<Interval>& parts() const { return parts_; }
    double length() const;
    double min() const { return parts_.front().lo; }
    double max() const { return parts_.back().hi; }

    void add(Interval iv);
    void add(const IntervalSet& o);

    IntervalSet subtract(const IntervalSet& o) const;
    IntervalSet intersect(const IntervalSet& o) const;

    // Pieces with positive length (beyond the weld), and the leftover points.
    IntervalSet positive_parts() const;
    std::vector<double> isolated_points() const;

    IntervalSet affine_image(double alpha, double beta) const;

    bool contains_point(double x) const;
    // True when (this \ o) has no piece longer than tol.
    bool subset_of(const IntervalSet& o, double tol = kEndpointWeld) const;
    bool same_set(const IntervalSet& o, double tol = kEndpointWeld) const;

    std::string str() const;

  private:
    void insert_merged(Interval iv);

    std::vector<Interval> parts_;
};

}  // namespace fractop
