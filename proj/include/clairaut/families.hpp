#pragma once

#include <functional>
#include <memory>
#include <variant>
#include <vector>

#include "clairaut/errors.hpp"
#include "clairaut/geometry.hpp"
#include "clairaut/numerics.hpp"

namespace clairaut {

using RealFn2 = std::function<double(double, double)>;

// One member plane z = a*x + b*y + offset.
struct Plane {
    double a = 0.0;
    double b = 0.0;
    double offset = 0.0;
    double height(double x, double y) const { return a * x + b * y + offset; }
};

// Two-parameter family of planes z = a*x + b*y + k(a,b). A null tilt means
// k == 0 (planes through the origin), which is the case the envelope engines
// handle; the tilt hook exists so membership/residual code generalizes.
struct PlaneFamily {
    RealFn2 tilt;  // optional
    double tilt_at(double a, double b) const { return tilt ? tilt(a, b) : 0.0; }
    // Family residual f(p; a, b) = a*x + b*y + k(a,b) - z.
    double residual(const Point3& p, double a, double b) const {
        return a * p.x + b * p.y + tilt_at(a, b) - p.z;
    }
};

Plane plane_at(const PlaneFamily& fam, double a, double b);

// --------------------------------------------------------------------------
// Constraint curves: the four ways a one-parameter sub-family is carved out
// of the two-parameter plane family.

// b = phi(a). phi_prime is optional; when absent, derivatives fall back to
// central differences (and when present it must agree with them — the tests
// check that).
struct FunctionOfA {
    RealFn phi;
    RealFn phi_prime;  // may be empty
    Interval a_domain;
};

// rel(a, b) = 0 with a rectangular search window. Use enumerate_branches to
// split the zero set into single-valued branches b = psi(a).
struct ImplicitRelation {
    RealFn2 rel;
    Interval a_domain;
    Interval b_domain;
};

// (a, b) = g(theta). `excluded` lists parameter values whose neighborhoods
// (radius excluded_radius) are poles or other no-go zones; when `wrap` is set
// the exclusion distance is measured around the circle theta_domain. g_prime
// is an optional analytic derivative — without it the engines use central
// differences, which is fine away from near-pole blowups.
struct ParametricCurve {
    std::function<Point2(double)> g;
    std::function<Point2(double)> g_prime;  // may be empty
    Interval theta_domain;
    std::vector<double> excluded;
    double excluded_radius = 1e-3;
    bool wrap = false;

    // True when theta lies within excluded_radius of an excluded value
    // (measured around the circle when wrap is set).
    bool excluded_at(double theta) const;
};

// (a, b) = m(x, y): the constraint is given directly as an inverse map from
// contact points, so each (x,y) knows its own plane.
struct InverseMap {
    std::function<Point2(double, double)> m;
    Rect xy_domain;
};

using ConstraintCurve = std::variant<FunctionOfA, ImplicitRelation, ParametricCurve, InverseMap>;

// Map a parameter value to the plane coefficients (a, b) it selects.
// FunctionOfA -> (a, phi(a)); ParametricCurve -> g(theta) after domain and
// exclusion checks. Scalar resolve on an ImplicitRelation or InverseMap is an
// error (use enumerate_branches / the Point2 overload).
Point2 resolve(const ConstraintCurve& c, double param, const ToleranceConfig& cfg = {});

// InverseMap resolve: (a, b) = m(x, y) after the rectangle check.
Point2 resolve(const ConstraintCurve& c, const Point2& xy, const ToleranceConfig& cfg = {});

// --------------------------------------------------------------------------
// Branches of an implicit relation.

namespace detail {
struct BranchData;
}

// One single-valued slice b = psi(a) of rel(a, b) = 0. The callable form
// re-solves the relation near a stored polyline, so psi is accurate to
// ~1e-14 relative at any a in the interval, not just at the enumeration
// samples. Immutable and cheap to copy.
class Branch {
public:
    // b = psi(a); throws OutOfDomainError outside a_interval (with a whisker
    // of slack for finite-difference probes) and NoRootsError if the relation
    // loses the root where the polyline says one should be.
    double psi(double a) const;
    double operator()(double a) const { return psi(a); }

    Interval a_interval() const;

    // True when this end of the branch is a turning point of the relation
    // (the root pair merges there) rather than the edge of the search domain.
    bool turning_lo() const;
    bool turning_hi() const;

    // One-sided slope of psi just inside the given end; together with a
    // steepness test this identifies vertical-tangent ends, which is what
    // the y == 0 limit of the envelope needs.
    double end_slope(bool hi_end) const;
    bool vertical_end(bool hi_end) const;

    const std::vector<double>& sample_a() const;
    const std::vector<double>& sample_b() const;

private:
    friend std::vector<Branch> enumerate_branches(const ImplicitRelation&, int,
                                                  const ToleranceConfig&);
    std::shared_ptr<const detail::BranchData> data_;
};

// Scan rel over a_samples columns, thread the per-column roots into branches
// by nearest-neighbor continuation (jump cap: 10x the median intra-column
// root spacing), and refine branch ends that die inside the domain down to
// their turning points. Branches come back sorted by (first a, then b);
// throws NoRootsError when the relation has no roots anywhere on the window.
std::vector<Branch> enumerate_branches(const ImplicitRelation& c, int a_samples,
                                       const ToleranceConfig& cfg = {});

} // namespace clairaut
