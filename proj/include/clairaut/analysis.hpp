#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "clairaut/geometry.hpp"
#include "clairaut/numerics.hpp"

namespace clairaut {

// A one-parameter family of plane curves f(x, y; a) = 0.
using CurveFamilyFn = std::function<double(double, double, double)>;

// The discriminant of such a family (f = 0, df/da = 0) mixes genuine
// envelope points with singular points of individual members. The two are
// told apart by the (x, y)-gradient of f: an envelope point has a regular
// member curve through it, a singular locus point does not. Cusp is reserved
// for parametric-map degeneracies found by detect_cusp.
enum class LocusLabel { Envelope, SingularLocus, Cusp, Indeterminate };

struct ClassifiedPoint {
    Point2 p;
    double param = 0.0;
    LocusLabel label = LocusLabel::Indeterminate;
    Point2 grad_family;         // (f_x, f_y) at the candidate
    double window_scale = 0.0;  // max |(f_x, f_y)| over a small probe ring
    double value = 0.0;         // f at the candidate
};

// Classify discriminant candidates ((x, y), a). Each gradient is measured
// against the strongest gradient on a ring of radius 0.01 * (1 + |(x,y)|)
// around its candidate, so verdicts are unchanged under f -> s*f. Throws
// CandidateNotOnFamilyError when a candidate misses f = 0 or df/da = 0 at
// window scale.
std::vector<ClassifiedPoint> classify_locus(const CurveFamilyFn& f,
                                            const std::vector<std::pair<Point2, double>>& candidates,
                                            const ToleranceConfig& cfg = {});

// Relative-gradient thresholds for the verdict: below the first fraction of
// the window scale is singular, above the second is a regular envelope
// point, anything between stays indeterminate.
inline constexpr double kSingularFrac = 1e-6;
inline constexpr double kEnvelopeFrac = 1e-4;

// Vanishing-speed test for a parametric plane curve at t0: the speed |g'(t)|
// (central differences) is sampled across [t0 - half_width, t0 + half_width]
// and the point is a cusp candidate when the speed at t0 collapses relative
// to the window's maximum.
struct CuspReport {
    bool is_cusp = false;
    double speed = 0.0;
    double window_max = 0.0;
};
CuspReport detect_cusp(const std::function<Point2(double)>& g, double t0,
                       const ToleranceConfig& cfg = {}, double half_width = 0.1,
                       int samples = 33);

inline constexpr double kCuspSpeedFrac = 1e-6;

// Strict monotonicity of fp across n_samples evenly spaced points of the
// interval, i.e. whether fp can be inverted there. direction is +1/-1 for
// the established trend, 0 when the endpoints tie. worst_step is the
// smallest trend-signed consecutive difference; invertible requires it to
// clear a margin of 1e-12 * (1 + max|fp|).
struct InvertibilityReport {
    bool invertible = false;
    int direction = 0;
    double worst_step = 0.0;
};
InvertibilityReport invertibility_check(const RealFn& fp, const Interval& iv, int n_samples);

// Detect a multivalued section profile: two samples whose polar angles agree
// to angle_tol (radians) while their radii differ by more than the factor
// 1 + radius_sep. Points within 1e-12 of the origin are ignored. The first
// witness pair in angle order is reported.
struct MultivaluedReport {
    bool multivalued = false;
    Point2 first;
    Point2 second;
    double angle_gap = 0.0;
    double radius_ratio = 0.0;
};
MultivaluedReport detect_multivalued(const std::vector<Point2>& pts, double angle_tol = 1e-3,
                                     double radius_sep = 0.05);

} // namespace clairaut
