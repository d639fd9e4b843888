#pragma once

#include <functional>

#include "clairaut/errors.hpp"
#include "clairaut/geometry.hpp"

namespace clairaut {

// Shared numeric knobs. Every routine takes one of these so a pipeline can be
// tightened or loosened in one place; the defaults are what the catalog and
// CLI run with.
struct ToleranceConfig {
    double fd_step = 1e-6;       // relative central-difference step
    double root_tol = 1e-12;     // root acceptance: |f| or bracket width
    double residual_tol = 1e-8;  // membership/residual acceptance
    int quad_panels = 400;       // Simpson subintervals (must be even)
};

using RealFn = std::function<double(double)>;
using Field3 = std::function<double(const Point3&)>;

// Central difference with step h = fd_step * (1 + |a|), so the step scales
// away from the origin instead of drowning in cancellation.
double diff_central(const RealFn& f, double a, const ToleranceConfig& cfg = {});

// Composite Simpson over [a0, a1] with cfg.quad_panels subintervals.
// Exact through cubics; throws Error if quad_panels is odd or < 2.
// a0 > a1 is allowed and gives the signed integral.
double integrate(const RealFn& f, double a0, double a1, const ToleranceConfig& cfg = {});

// Bracketing root finder: bisection with secant acceleration. Requires
// f(lo) * f(hi) <= 0 (else NoBracketError). Returns r in [lo, hi] with
// |f(r)| <= root_tol or bracket width <= root_tol * (1 + |r|); throws
// MaxIterationsError if neither criterion is met in 200 iterations.
double find_root(const RealFn& f, double lo, double hi, const ToleranceConfig& cfg = {});

// Componentwise central-difference gradient of a scalar field at p, with a
// per-axis step fd_step * (1 + |p_i|).
Point3 gradient3(const Field3& F, const Point3& p, const ToleranceConfig& cfg = {});

} // namespace clairaut
