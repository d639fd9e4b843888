#pragma once

#include <string>
#include <vector>

#include "clairaut/families.hpp"
#include "clairaut/geometry.hpp"
#include "clairaut/numerics.hpp"
#include "clairaut/parallel.hpp"

namespace clairaut {

// One accepted envelope sample. Residuals are recomputed from scratch at the
// point (never assumed from the construction): family_residual is
// |a*x + b*y - z| with the plane the parameter selects, and
// stationarity_residual is |df/dparam| by central difference. The single
// exception is a vertical-tangent branch end reached in the y == 0 limit,
// where d/da is parametrization-degenerate; there the direction-normalized
// form |x*ta + y*tb| (unit constraint tangent, exactly vertical) is stored,
// which reduces to |y| = 0.
struct EnvelopePoint {
    Point3 p;
    double param = 0.0;
    double family_residual = 0.0;
    double stationarity_residual = 0.0;
};

struct EnvelopeDiagnostics {
    int attempted = 0;
    int accepted = 0;
    int skipped_no_bracket = 0;  // no stationary parameter for this (x,y)
    int skipped_excluded = 0;    // theta inside an excluded neighborhood
    int skipped_degenerate = 0;  // (a',b') direction vanished
    int skipped_domain = 0;      // domain error from a user callable
    int rejected_residual = 0;   // solved, but residuals out of tolerance
};

// Envelope samples in grid order (outer grid major). Points hold only the
// accepted samples; everything else is tallied in diag. source says which
// construction produced them.
struct SampledSurface {
    std::vector<EnvelopePoint> points;
    EnvelopeDiagnostics diag;
    std::string source;
};

std::vector<Point3> positions(const SampledSurface& s);

// Cartesian product of two grids as points, x-major.
std::vector<Point2> grid_points(const GridSpec& x_grid, const GridSpec& y_grid);

// Acceptance thresholds: membership must meet residual_tol, the
// finite-difference stationarity check gets the looser of residual_tol and
// this floor (finite differencing has its own noise floor).
inline double stationarity_tolerance(const ToleranceConfig& cfg) {
    return cfg.residual_tol > 1e-6 ? cfg.residual_tol : 1e-6;
}

// Default ray scales for the parametric-plane engine.
extern const std::vector<double> kDefaultSGrid;

// Envelope of z = a*x + phi(a)*y over a_grid x y_grid (a outer), using the
// parametric solution x = -phi'(a)*y, z = (-a*phi'(a) + phi(a))*y. phi' comes
// from c.phi_prime when present, central differences otherwise; the
// stationarity residual always re-checks with central differences.
SampledSurface envelope_function_constraint(const PlaneFamily& fam, const FunctionOfA& c,
                                            const GridSpec& a_grid, const GridSpec& y_grid,
                                            const ToleranceConfig& cfg = {},
                                            Exec exec = Exec::parallel);

// The y-normalized section of the same envelope: (X, Z) = (x/y, z/y) =
// (-phi'(a), -a*phi'(a) + phi(a)) per grid a. Returned as Point2{X, Z}.
std::vector<Point2> projective_curve(const FunctionOfA& c, const GridSpec& a_grid,
                                     const ToleranceConfig& cfg = {});

// Envelope over one branch b = psi(a) of an implicit relation: per (x, y),
// solve x + psi'(a)*y = 0 on the branch interval and lift to
// z = a*x + psi(a)*y. Points with no stationary a are skipped (diagnostics).
// When y == 0 exactly the stationarity equation degenerates; if the branch
// has exactly one vertical-tangent end whose slope sign opposes x, the
// endpoint limit (x, 0, a_end*x) is returned instead.
SampledSurface envelope_branch(const PlaneFamily& fam, const Branch& br,
                               const std::vector<Point2>& xy_grid,
                               const ToleranceConfig& cfg = {}, Exec exec = Exec::parallel);

// Envelope of planes selected by (a, b) = g(theta): for each theta the
// characteristic line of the family, sampled at the ray scales in s_grid:
// p = s * (-b'(theta), a'(theta), -b'(theta) a(theta) + a'(theta) b(theta)).
// theta values inside excluded neighborhoods are skipped and counted.
SampledSurface envelope_parametric_planes(const PlaneFamily& fam, const ParametricCurve& c,
                                          const GridSpec& theta_grid,
                                          const std::vector<double>& s_grid = kDefaultSGrid,
                                          const ToleranceConfig& cfg = {},
                                          Exec exec = Exec::parallel);

// Graph samples of the surface carried by an inverse contact map
// (a, b) = m(x, y): z = m1(x,y)*x + m2(x,y)*y at each grid point. param is 0
// and the stationarity residual is 0 by convention — the map pins (a, b)
// pointwise, so membership is the only meaningful residual.
SampledSurface envelope_inverse_map(const PlaneFamily& fam, const InverseMap& c,
                                    const std::vector<Point2>& xy_grid,
                                    const ToleranceConfig& cfg = {}, Exec exec = Exec::parallel);

// Scale surface samples onto the z = 1 plane: (x, y, z) -> (x/z, y/z),
// dropping points with |z| <= eps.
struct CrossSection {
    std::vector<Point2> points;
    int dropped = 0;
};
CrossSection cross_section_z1(const std::vector<Point3>& pts, double eps);
CrossSection cross_section_z1(const SampledSurface& s, double eps);

} // namespace clairaut
