#include "fractop/interval_set.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace fractop {

int weld_cmp(double a, double b) {
    if (a < b - kEndpointWeld) return -1;
    if (a > b + kEndpointWeld) return 1;
    return 0;
}

bool Interval::valid() const {
    if (lo < hi) return true;
    return lo == hi && !lo_open && !hi_open;
}

std::string Interval::str() const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%c%.9g, %.9g%c", lo_open ? '(' : '[', lo, hi, hi_open ? ')' : ']');
    return buf;
}

IntervalSet::IntervalSet(Interval iv) {
    if (iv.valid()) parts_.push_back(iv);
}

double IntervalSet::length() const {
    double s = 0.0;
    for (const Interval& p : parts_) s += p.length();
    return s;
}

namespace {

// Whether intervals a, b overlap or touch at a point contained in both/either
// closed side (so their union is one interval).
bool mergeable(const Interval& a, const Interval& b) {
    // assume a.lo <= b.lo
    const int c = weld_cmp(a.hi, b.lo);
    if (c > 0) return true;
    if (c < 0) return false;
    return !(a.hi_open && b.lo_open);
}

Interval merge(const Interval& a, const Interval& b) {
    Interval out;
    const int clo = weld_cmp(a.lo, b.lo);
    if (clo < 0) {
        out.lo = a.lo;
        out.lo_open = a.lo_open;
    } else if (clo > 0) {
        out.lo = b.lo;
        out.lo_open = b.lo_open;
    } else {
        out.lo = std::min(a.lo, b.lo);
        out.lo_open = a.lo_open && b.lo_open;
    }
    const int chi = weld_cmp(a.hi, b.hi);
    if (chi > 0) {
        out.hi = a.hi;
        out.hi_open = a.hi_open;
    } else if (chi < 0) {
        out.hi = b.hi;
        out.hi_open = b.hi_open;
    } else {
        out.hi = std::max(a.hi, b.hi);
        out.hi_open = a.hi_open && b.hi_open;
    }
    return out;
}

}  // namespace

void IntervalSet::insert_merged(Interval iv) {
    if (!iv.valid()) return;
    std::vector<Interval> out;
    out.reserve(parts_.size() + 1);
    size_t i = 0;
    while (i < parts_.size() && (weld_cmp(parts_[i].hi, iv.lo) < 0 ||
                                 (weld_cmp(parts_[i].hi, iv.lo) == 0 && parts_[i].hi_open && iv.lo_open))) {
        out.push_back(parts_[i]);
        ++i;
    }
    while (i < parts_.size()) {
        const Interval& p = parts_[i];
        const bool p_first = weld_cmp(p.lo, iv.lo) < 0 || (weld_cmp(p.lo, iv.lo) == 0);
        const Interval& a = p_first ? p : iv;
        const Interval& b = p_first ? iv : p;
        if (mergeable(a, b)) {
            iv = merge(a, b);
            ++i;
        } else {
            break;
        }
    }
    out.push_back(iv);
    while (i < parts_.size()) {
        out.push_back(parts_[i]);
        ++i;
    }
    std::sort(out.begin(), out.end(), [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
    parts_ = std::move(out);
}

void IntervalSet::add(Interval iv) { insert_merged(iv); }

void IntervalSet::add(const IntervalSet& o) {
    for (const Interval& p : o.parts_) insert_merged(p);
}

namespace {

// p minus q, appended to out (0, 1 or 2 pieces).
void subtract_one(const Interval& p, const Interval& q, std::vector<Interval>& out) {
    // No overlap?
    const int c1 = weld_cmp(q.hi, p.lo);
    if (c1 < 0 || (c1 == 0 && (q.hi_open || p.lo_open))) {
        out.push_back(p);
        return;
    }
    const int c2 = weld_cmp(q.lo, p.hi);
    if (c2 > 0 || (c2 == 0 && (q.lo_open || p.hi_open))) {
        out.push_back(p);
        return;
    }
    // Left piece of p below q.lo.
    const int clo = weld_cmp(p.lo, q.lo);
    if (clo < 0) {
        Interval left{p.lo, q.lo, p.lo_open, !q.lo_open};
        if (left.lo < left.hi || (weld_cmp(left.lo, left.hi) == 0 && !p.lo_open && q.lo_open)) {
            if (weld_cmp(left.lo, left.hi) == 0) {
                out.push_back(Interval::point(left.lo));
            } else if (left.valid()) {
                out.push_back(left);
            }
        }
    } else if (clo == 0 && !p.lo_open && q.lo_open) {
        out.push_back(Interval::point(p.lo));
    }
    // Right piece of p above q.hi.
    const int chi = weld_cmp(p.hi, q.hi);
    if (chi > 0) {
        Interval right{q.hi, p.hi, !q.hi_open, p.hi_open};
        if (weld_cmp(right.lo, right.hi) == 0) {
            if (!right.lo_open && !right.hi_open) out.push_back(Interval::point(right.hi));
        } else if (right.valid()) {
            out.push_back(right);
        }
    } else if (chi == 0 && !p.hi_open && q.hi_open) {
        out.push_back(Interval::point(p.hi));
    }
}

}  // namespace

IntervalSet IntervalSet::subtract(const IntervalSet& o) const {
    std::vector<Interval> cur(parts_);
    for (const Interval& q : o.parts_) {
        std::vector<Interval> next;
        next.reserve(cur.size() + 1);
        for (const Interval& p : cur) subtract_one(p, q, next);
        cur = std::move(next);
    }
    IntervalSet out;
    for (const Interval& p : cur) out.insert_merged(p);
    return out;
}

IntervalSet IntervalSet::intersect(const IntervalSet& o) const {
    IntervalSet out;
    for (const Interval& p : parts_) {
        for (const Interval& q : o.parts_) {
            Interval r;
            const int clo = weld_cmp(p.lo, q.lo);
            if (clo > 0) {
                r.lo = p.lo;
                r.lo_open = p.lo_open;
            } else if (clo < 0) {
                r.lo = q.lo;
                r.lo_open = q.lo_open;
            } else {
                r.lo = std::max(p.lo, q.lo);
                r.lo_open = p.lo_open || q.lo_open;
            }
            const int chi = weld_cmp(p.hi, q.hi);
            if (chi < 0) {
                r.hi = p.hi;
                r.hi_open = p.hi_open;
            } else if (chi > 0) {
                r.hi = q.hi;
                r.hi_open = q.hi_open;
            } else {
                r.hi = std::min(p.hi, q.hi);
                r.hi_open = p.hi_open || q.hi_open;
            }
            const int c = weld_cmp(r.lo, r.hi);
            if (c < 0 && r.lo < r.hi) {
                out.insert_merged(r);
            } else if (c == 0 && !r.lo_open && !r.hi_open) {
                out.insert_merged(Interval::point(r.lo));
            }
        }
    }
    return out;
}

IntervalSet IntervalSet::positive_parts() const {
    IntervalSet out;
    for (const Interval& p : parts_)
        if (weld_cmp(p.lo, p.hi) < 0) out.parts_.push_back(p);
    return out;
}

std::vector<double> IntervalSet::isolated_points() const {
    std::vector<double> pts;
    for (const Interval& p : parts_)
        if (weld_cmp(p.lo, p.hi) == 0) pts.push_back((p.lo + p.hi) / 2);
    return pts;
}

IntervalSet IntervalSet::affine_image(double alpha, double beta) const {
    IntervalSet out;
    for (const Interval& p : parts_) {
        Interval img;
        const double e1 = alpha * p.lo + beta;
        const double e2 = alpha * p.hi + beta;
        if (alpha >= 0) {
            img = {e1, e2, p.lo_open, p.hi_open};
        } else {
            img = {e2, e1, p.hi_open, p.lo_open};
        }
        out.insert_merged(img);
    }
    return out;
}

bool IntervalSet::contains_point(double x) const {
    for (const Interval& p : parts_) {
        const int clo = weld_cmp(x, p.lo);
        const int chi = weld_cmp(x, p.hi);
        if (clo > 0 && chi < 0) return true;
        if (clo == 0 && !p.lo_open) return true;
        if (chi == 0 && !p.hi_open) return true;
    }
    return false;
}

bool IntervalSet::subset_of(const IntervalSet& o, double tol) const {
    const IntervalSet rest = subtract(o);
    for (const Interval& p : rest.parts_)
        if (p.length() > tol) return false;
    return true;
}

bool IntervalSet::same_set(const IntervalSet& o, double tol) const {
    return subset_of(o, tol) && o.subset_of(*this, tol);
}

std::string IntervalSet::str() const {
    if (parts_.empty()) return "{}";
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += " u ";
        out += parts_[i].str();
    }
    return out;
}

}  // namespace fractop
