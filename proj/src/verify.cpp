#include "clairaut/verify.hpp"

#include <cmath>
#include <cstddef>
#include <limits>
#include <string>

#include "clairaut/errors.hpp"

namespace clairaut {

namespace {

// Partials of a graph by central differences with per-axis relative steps.
Point2 graph_partials(const RealFn2& h, double x, double y, const ToleranceConfig& cfg) {
    const double hx = cfg.fd_step * (1.0 + std::fabs(x));
    const double hy = cfg.fd_step * (1.0 + std::fabs(y));
    return {(h(x + hx, y) - h(x - hx, y)) / (2.0 * hx),
            (h(x, y + hy) - h(x, y - hy)) / (2.0 * hy)};
}

} // namespace

double clairaut_residual_explicit(const ExplicitGraph& g, const Point2& xy, const RealFn2& tilt,
                                  const ToleranceConfig& cfg) {
    if (!g.domain.contains(xy.x, xy.y))
        throw OutOfDomainError("(x, y) = (" + std::to_string(xy.x) + ", " + std::to_string(xy.y) +
                               ") outside the graph domain");
    const Point2 dz = graph_partials(g.h, xy.x, xy.y, cfg);
    const double k = tilt ? tilt(dz.x, dz.y) : 0.0;
    return xy.x * dz.x + xy.y * dz.y + k - g.h(xy.x, xy.y);
}

double clairaut_residual_implicit(const ImplicitLevelSet& s, const Point3& p,
                                  const ToleranceConfig& cfg) {
    const double F = s.F(p);
    if (std::fabs(F) > cfg.residual_tol * (1.0 + norm(p)))
        throw NotOnSurfaceError("|F| = " + std::to_string(std::fabs(F)) + " at (" +
                                std::to_string(p.x) + ", " + std::to_string(p.y) + ", " +
                                std::to_string(p.z) + ")");
    const Point3 grad = gradient3(s.F, p, cfg);
    if (std::fabs(grad.z) <= 1e-6)
        throw VerticalTangentError("|F_z| = " + std::to_string(std::fabs(grad.z)) +
                                   "; the level set has no slope here");
    const double zx = -grad.x / grad.z;
    const double zy = -grad.y / grad.z;
    return p.x * zx + p.y * zy - p.z;
}

double euler_residual(const ExplicitGraph& g, double degree, const Point2& xy,
                      const ToleranceConfig& cfg) {
    if (!g.domain.contains(xy.x, xy.y))
        throw OutOfDomainError("(x, y) outside the graph domain");
    const Point2 dz = graph_partials(g.h, xy.x, xy.y, cfg);
    return xy.x * dz.x + xy.y * dz.y - degree * g.h(xy.x, xy.y);
}

HomogeneityReport homogeneity_check(const ExplicitGraph& g, double degree, int samples,
                                    const std::vector<double>& s_values) {
    if (samples < 1) throw Error("homogeneity_check needs at least one sample");

    // Sampling box: the domain pulled in by 5% per finite side; unbounded
    // sides default to [0.5, 2].
    const auto side = [](const Interval& iv) -> Interval {
        if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi)) return {0.5, 2.0};
        const double margin = 0.05 * iv.width();
        return {iv.lo + margin, iv.hi - margin};
    };
    const Interval bx = side(g.domain.x);
    const Interval by = side(g.domain.y);

    // Fixed 2-D low-discrepancy lattice (plastic-number rotations): spreads
    // any sample count evenly over the box with no RNG involved.
    constexpr double kAlpha1 = 0.7548776662466927;
    constexpr double kAlpha2 = 0.5698402909980532;

    HomogeneityReport rep;
    double sum = 0.0;
    for (int k = 0; k < samples; ++k) {
        const double u = std::fmod(0.5 + (k + 1) * kAlpha1, 1.0);
        const double v = std::fmod(0.5 + (k + 1) * kAlpha2, 1.0);
        const double x = bx.lo + bx.width() * u;
        const double y = by.lo + by.width() * v;
        for (double s : s_values) {
            double defect;
            try {
                const double expected = std::pow(s, degree) * g.h(x, y);
                const double got = g.h(s * x, s * y);
                if (!std::isfinite(expected) || !std::isfinite(got)) {
                    ++rep.n_skipped;
                    continue;
                }
                defect = std::fabs(got - expected) / (1.0 + std::fabs(expected));
            } catch (const Error&) {
                ++rep.n_skipped;
                continue;
            }
            ++rep.n_evaluated;
            sum += defect;
            if (defect > rep.max_defect) rep.max_defect = defect;
        }
    }
    if (rep.n_evaluated > 0) rep.mean_defect = sum / rep.n_evaluated;
    return rep;
}

ResidualReport implicit_membership(const ImplicitLevelSet& s, const std::vector<Point3>& pts,
                                   const ToleranceConfig&, Exec exec) {
    std::vector<double> vals(pts.size());
    parallel_for(pts.size(), exec, [&](std::size_t i) {
        try {
            vals[i] = std::fabs(s.F(pts[i])) / (1.0 + norm2(pts[i]));
        } catch (const Error&) {
            vals[i] = std::numeric_limits<double>::quiet_NaN();
        }
    });

    // Serial, index-ordered reduction: identical result under both policies.
    ResidualReport rep;
    double sum = 0.0;
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (std::isnan(vals[i])) {
            ++rep.n_skipped;
            continue;
        }
        ++rep.n_evaluated;
        sum += vals[i];
        if (vals[i] > rep.max_abs) {
            rep.max_abs = vals[i];
            rep.worst_point = pts[i];
        }
    }
    if (rep.n_evaluated > 0) rep.mean_abs = sum / rep.n_evaluated;
    return rep;
}

std::vector<double> residual_grid(const ExplicitGraph& g, const GridSpec& x_grid,
                                  const GridSpec& y_grid, const RealFn2& tilt,
                                  const ToleranceConfig& cfg, Exec exec) {
    const std::size_t ny = static_cast<std::size_t>(y_grid.count);
    std::vector<double> out(static_cast<std::size_t>(x_grid.count) * ny);
    parallel_for(out.size(), exec, [&](std::size_t k) {
        const Point2 xy{x_grid.at(static_cast<int>(k / ny)), y_grid.at(static_cast<int>(k % ny))};
        try {
            out[k] = clairaut_residual_explicit(g, xy, tilt, cfg);
        } catch (const Error&) {
            out[k] = std::numeric_limits<double>::quiet_NaN();
        }
    });
    return out;
}

TangencyReport tangency_check(const Surface& s, double a, double b, const Point3& p,
                              const ToleranceConfig& cfg) {
    TangencyReport rep;
    rep.plane_gap = std::fabs(a * p.x + b * p.y - p.z);

    Point3 surface_normal;
    if (const auto* g = std::get_if<ExplicitGraph>(&s)) {
        if (!g->domain.contains(p.x, p.y))
            throw OutOfDomainError("tangency point outside the graph domain");
        rep.surface_gap = std::fabs(g->h(p.x, p.y) - p.z);
        const Point2 dz = graph_partials(g->h, p.x, p.y, cfg);
        surface_normal = {dz.x, dz.y, -1.0};
    } else if (const auto* ls = std::get_if<ImplicitLevelSet>(&s)) {
        rep.surface_gap = std::fabs(ls->F(p)) / (1.0 + norm2(p));
        surface_normal = gradient3(ls->F, p, cfg);
        if (std::fabs(surface_normal.z) <= 1e-6)
            throw VerticalTangentError("|F_z| = " + std::to_string(std::fabs(surface_normal.z)) +
                                       "; tangency against a graph slope is undefined here");
    } else {
        throw Error("tangency_check needs a graph or level set, not a bare cloud");
    }

    const Point3 plane_normal{a, b, -1.0};
    const double denom = norm(surface_normal) * norm(plane_normal);
    // |cos| so an upside-down gradient still counts as parallel.
    const double c = std::fabs(dot(surface_normal, plane_normal)) / denom;
    rep.normal_angle = std::acos(c < 1.0 ? c : 1.0);

    const double gap_tol = cfg.residual_tol * (1.0 + norm(p));
    rep.tangent = rep.plane_gap <= gap_tol && rep.surface_gap <= gap_tol &&
                  rep.normal_angle <= kTangencyAngleTol;
    return rep;
}

} // namespace clairaut
