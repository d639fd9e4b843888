#pragma once

#include <functional>
#include <variant>
#include <vector>

#include "clairaut/families.hpp"
#include "clairaut/geometry.hpp"
#include "clairaut/numerics.hpp"
#include "clairaut/parallel.hpp"

namespace clairaut {

// A candidate solution surface: a graph z = h(x, y), a level set
// F(x, y, z) = 0, or a bare point cloud (clouds support membership-style
// checks only).
struct ExplicitGraph {
    RealFn2 h;
    Rect domain = whole_plane();
};

struct ImplicitLevelSet {
    Field3 F;
};

struct SampledCloud {
    std::vector<Point3> points;
};

using Surface = std::variant<ExplicitGraph, ImplicitLevelSet, SampledCloud>;

// Residual of x*z_x + y*z_y + k(z_x, z_y) - z at (x, y) for z = h(x, y),
// with the partials taken by central differences. A null tilt means k == 0,
// the simplified equation.
double clairaut_residual_explicit(const ExplicitGraph& g, const Point2& xy,
                                  const RealFn2& tilt = {}, const ToleranceConfig& cfg = {});

// Same residual for the simplified equation on a level set F = 0, using
// z_x = -F_x/F_z, z_y = -F_y/F_z at p. Throws NotOnSurfaceError unless
// |F(p)| <= residual_tol * (1 + |p|), and VerticalTangentError when
// |F_z| <= 1e-6: there the level set has no slope, which is a different
// failure from not lying on the surface at all.
double clairaut_residual_implicit(const ImplicitLevelSet& s, const Point3& p,
                                  const ToleranceConfig& cfg = {});

// x*h_x + y*h_y - degree*h at (x, y): Euler's identity, zero when h is
// homogeneous of that degree. Partials by central differences.
double euler_residual(const ExplicitGraph& g, double degree, const Point2& xy,
                      const ToleranceConfig& cfg = {});

// Direct scaling test h(s*x, s*y) vs s^degree * h(x, y), with the defect
// normalized by 1 + |s^degree h|. Sample points come from a fixed
// low-discrepancy lattice over the graph's domain (unbounded domain sides
// fall back to [0.5, 2], the positive box every catalog solution lives on),
// so repeated runs see identical points. (scale, point) pairs where h throws
// or the power is undefined are skipped and counted.
struct HomogeneityReport {
    double max_defect = 0.0;
    double mean_defect = 0.0;
    int n_evaluated = 0;
    int n_skipped = 0;
    bool homogeneous(double tol) const { return n_evaluated > 0 && max_defect <= tol; }
};
HomogeneityReport homogeneity_check(const ExplicitGraph& g, double degree, int samples,
                                    const std::vector<double>& s_values);

// Membership defects |F(p)| / (1 + |p|^2) over a cloud. The normalization
// keeps far-out samples of homogeneous quadrics comparable to near ones.
// Reduction runs in index order regardless of the execution policy, so the
// report is bit-stable.
struct ResidualReport {
    double max_abs = 0.0;
    double mean_abs = 0.0;
    int n_evaluated = 0;
    int n_skipped = 0;
    Point3 worst_point;
};
ResidualReport implicit_membership(const ImplicitLevelSet& s, const std::vector<Point3>& pts,
                                   const ToleranceConfig& cfg = {}, Exec exec = Exec::parallel);

// Clairaut residual of a graph over a grid (x outer, y inner). Samples where
// h throws a domain error come back as NaN. This is the throughput kernel
// the benchmark drives.
std::vector<double> residual_grid(const ExplicitGraph& g, const GridSpec& x_grid,
                                  const GridSpec& y_grid, const RealFn2& tilt = {},
                                  const ToleranceConfig& cfg = {}, Exec exec = Exec::parallel);

// Does the plane z = a*x + b*y touch the surface at p? Three gaps must
// close: p on the plane, p on the surface, and the surface normal parallel
// (or antiparallel) to the plane normal (a, b, -1) within kTangencyAngleTol.
// surface_gap is |h - z| for a graph and |F| / (1 + |p|^2) for a level set.
// Throws VerticalTangentError on a level set with |F_z| <= 1e-6 at p, and
// Error for a SampledCloud (no normals to compare).
struct TangencyReport {
    bool tangent = false;
    double plane_gap = 0.0;
    double surface_gap = 0.0;
    double normal_angle = 0.0;  // radians
};
TangencyReport tangency_check(const Surface& s, double a, double b, const Point3& p,
                              const ToleranceConfig& cfg = {});

inline constexpr double kTangencyAngleTol = 1e-5;

} // namespace clairaut
