#include "clairaut/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <string>

#include "clairaut/errors.hpp"

namespace clairaut {

namespace {

Point2 xy_gradient(const CurveFamilyFn& f, double x, double y, double a,
                   const ToleranceConfig& cfg) {
    const double hx = cfg.fd_step * (1.0 + std::fabs(x));
    const double hy = cfg.fd_step * (1.0 + std::fabs(y));
    return {(f(x + hx, y, a) - f(x - hx, y, a)) / (2.0 * hx),
            (f(x, y + hy, a) - f(x, y - hy, a)) / (2.0 * hy)};
}

} // namespace

std::vector<ClassifiedPoint> classify_locus(
    const CurveFamilyFn& f, const std::vector<std::pair<Point2, double>>& candidates,
    const ToleranceConfig& cfg) {
    constexpr int kRingSamples = 16;

    std::vector<ClassifiedPoint> out;
    out.reserve(candidates.size());
    for (const auto& [xy, a] : candidates) {
        ClassifiedPoint cp;
        cp.p = xy;
        cp.param = a;
        cp.value = f(xy.x, xy.y, a);
        cp.grad_family = xy_gradient(f, xy.x, xy.y, a, cfg);

        const double radius = 0.01 * (1.0 + norm(xy));
        cp.window_scale = norm(cp.grad_family);
        for (int j = 0; j < kRingSamples; ++j) {
            const double t = 2.0 * std::numbers::pi * j / kRingSamples;
            const Point2 q{xy.x + radius * std::cos(t), xy.y + radius * std::sin(t)};
            cp.window_scale = std::max(cp.window_scale, norm(xy_gradient(f, q.x, q.y, a, cfg)));
        }

        // The candidate must sit on the discriminant: f = 0 and df/da = 0,
        // with slack for what one window radius of f-variation can excuse.
        const double slack = 1.0 + cp.window_scale * radius;
        if (std::fabs(cp.value) > cfg.residual_tol * slack)
            throw CandidateNotOnFamilyError("f = " + std::to_string(cp.value) + " at (" +
                                            std::to_string(xy.x) + ", " + std::to_string(xy.y) +
                                            "), a = " + std::to_string(a));
        const double ha = cfg.fd_step * (1.0 + std::fabs(a));
        const double fa = (f(xy.x, xy.y, a + ha) - f(xy.x, xy.y, a - ha)) / (2.0 * ha);
        if (std::fabs(fa) > std::max(cfg.residual_tol, 1e-6) * slack)
            throw CandidateNotOnFamilyError("df/da = " + std::to_string(fa) +
                                            " at the candidate; not a stationary point");

        const double g = norm(cp.grad_family);
        if (g <= kSingularFrac * cp.window_scale)
            cp.label = LocusLabel::SingularLocus;
        else if (g >= kEnvelopeFrac * cp.window_scale)
            cp.label = LocusLabel::Envelope;
        else
            cp.label = LocusLabel::Indeterminate;
        out.push_back(cp);
    }
    return out;
}

CuspReport detect_cusp(const std::function<Point2(double)>& g, double t0,
                       const ToleranceConfig& cfg, double half_width, int samples) {
    if (samples < 3) throw Error("detect_cusp needs at least 3 window samples");

    const auto speed_at = [&](double t) {
        const double h = cfg.fd_step * (1.0 + std::fabs(t));
        const Point2 p = g(t + h);
        const Point2 m = g(t - h);
        return norm(Point2{(p.x - m.x) / (2.0 * h), (p.y - m.y) / (2.0 * h)});
    };

    CuspReport rep;
    rep.speed = speed_at(t0);
    for (int i = 0; i < samples; ++i) {
        const double t =
            t0 - half_width + 2.0 * half_width * (static_cast<double>(i) / (samples - 1));
        rep.window_max = std::max(rep.window_max, speed_at(t));
    }
    rep.is_cusp = rep.window_max > 0.0 && rep.speed <= kCuspSpeedFrac * rep.window_max;
    return rep;
}

InvertibilityReport invertibility_check(const RealFn& fp, const Interval& iv, int n_samples) {
    if (n_samples < 3) throw Error("invertibility_check needs at least 3 samples");

    std::vector<double> v(static_cast<std::size_t>(n_samples));
    double vmax = 0.0;
    for (int i = 0; i < n_samples; ++i) {
        const double t = iv.lo + iv.width() * (static_cast<double>(i) / (n_samples - 1));
        v[static_cast<std::size_t>(i)] = fp(t);
        vmax = std::max(vmax, std::fabs(v[static_cast<std::size_t>(i)]));
    }

    InvertibilityReport rep;
    const double trend = v.back() - v.front();
    if (trend > 0.0)
        rep.direction = 1;
    else if (trend < 0.0)
        rep.direction = -1;
    else
        return rep;  // endpoints tie: certainly not strictly monotone

    rep.worst_step = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        rep.worst_step = std::min(rep.worst_step, rep.direction * (v[i + 1] - v[i]));
    rep.invertible = rep.worst_step > 1e-12 * (1.0 + vmax);
    return rep;
}

MultivaluedReport detect_multivalued(const std::vector<Point2>& pts, double angle_tol,
                                     double radius_sep) {
    constexpr double kTinyRadius = 1e-12;
    struct Polar {
        double angle;
        double radius;
        Point2 p;
    };
    std::vector<Polar> polar;
    polar.reserve(pts.size());
    for (const auto& p : pts) {
        const double r = norm(p);
        if (r <= kTinyRadius) continue;
        polar.push_back({std::atan2(p.y, p.x), r, p});
    }
    std::sort(polar.begin(), polar.end(), [](const Polar& a, const Polar& b) {
        return a.angle != b.angle ? a.angle < b.angle : a.radius < b.radius;
    });

    MultivaluedReport rep;
    const auto n = polar.size();
    const auto check = [&](const Polar& a, const Polar& b, double gap) {
        const double ratio = std::max(a.radius, b.radius) / std::min(a.radius, b.radius);
        if (ratio >= 1.0 + radius_sep) {
            rep.multivalued = true;
            rep.first = a.p;
            rep.second = b.p;
            rep.angle_gap = gap;
            rep.radius_ratio = ratio;
            return true;
        }
        return false;
    };

    // All pairs within an angle_tol window of each other, including the pairs
    // that straddle the -pi/pi seam.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double gap = polar[j].angle - polar[i].angle;
            if (gap > angle_tol) break;
            if (check(polar[i], polar[j], gap)) return rep;
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        // Wrap: compare the lowest angles against the highest ones. A self
        // pair shows a gap of 2*pi and breaks out immediately.
        const double wrapped = polar[j].angle + 2.0 * std::numbers::pi;
        for (std::size_t i = n; i-- > 0;) {
            const double gap = wrapped - polar[i].angle;
            if (gap > angle_tol) break;
            if (i != j && check(polar[i], polar[j], gap)) return rep;
        }
    }
    return rep;
}

} // namespace clairaut
