#pragma once

#include <cmath>
#include <limits>

namespace clairaut {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

inline double norm(const Point2& p) { return std::hypot(p.x, p.y); }
inline double norm(const Point3& p) { return std::hypot(p.x, p.y, p.z); }
inline double norm2(const Point3& p) { return p.x * p.x + p.y * p.y + p.z * p.z; }
inline double dot(const Point3& a, const Point3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Point3 scale(double s, const Point3& p) { return {s * p.x, s * p.y, s * p.z}; }

// Closed interval [lo, hi].
struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    double width() const { return hi - lo; }
    bool contains(double v) const { return v >= lo && v <= hi; }
};

// Axis-aligned rectangle, used for (x,y) and (a,b) domains.
struct Rect {
    Interval x;
    Interval y;
    bool contains(double px, double py) const { return x.contains(px) && y.contains(py); }
};

inline Rect whole_plane() {
    constexpr double inf = std::numeric_limits<double>::infinity();
    return {{-inf, inf}, {-inf, inf}};
}

// Evenly spaced inclusive grid: lo, ..., hi with `count` points (count >= 2),
// or the single point lo when count == 1.
struct GridSpec {
    double lo = 0.0;
    double hi = 0.0;
    int count = 0;
    double at(int i) const {
        return count < 2 ? lo : lo + (hi - lo) * (static_cast<double>(i) / (count - 1));
    }
};

} // namespace clairaut
