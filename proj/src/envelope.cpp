#include "clairaut/envelope.hpp"

#include <cmath>
#include <cstddef>
#include <utility>

#include "clairaut/errors.hpp"

namespace clairaut {

namespace {

constexpr int kStationarityScanCells = 64;
constexpr double kDegenerateDirection = 1e-12;

enum class PointStatus : unsigned char {
    accepted,
    rejected,
    no_bracket,
    excluded,
    degenerate,
    domain_error,
};

struct Slot {
    PointStatus status = PointStatus::domain_error;
    EnvelopePoint pt;
};

SampledSurface collect(std::vector<Slot>&& slots, std::string source) {
    SampledSurface out;
    out.source = std::move(source);
    out.diag.attempted = static_cast<int>(slots.size());
    for (auto& s : slots) {
        switch (s.status) {
        case PointStatus::accepted:
            out.points.push_back(s.pt);
            ++out.diag.accepted;
            break;
        case PointStatus::rejected: ++out.diag.rejected_residual; break;
        case PointStatus::no_bracket: ++out.diag.skipped_no_bracket; break;
        case PointStatus::excluded: ++out.diag.skipped_excluded; break;
        case PointStatus::degenerate: ++out.diag.skipped_degenerate; break;
        case PointStatus::domain_error: ++out.diag.skipped_domain; break;
        }
    }
    return out;
}

// Fill one slot, classifying solver/domain failures instead of letting them
// tear down the whole grid.
template <typename Fn>
void guarded(Slot& slot, Fn&& fn) {
    try {
        fn();
    } catch (const NoBracketError&) {
        slot.status = PointStatus::no_bracket;
    } catch (const Error&) {
        slot.status = PointStatus::domain_error;
    }
}

void finish(Slot& slot, const Point3& p, double param, double f_resid, double stat_resid,
            const ToleranceConfig& cfg) {
    slot.pt = EnvelopePoint{p, param, f_resid, stat_resid};
    const bool ok = f_resid <= cfg.residual_tol && stat_resid <= stationarity_tolerance(cfg);
    slot.status = ok ? PointStatus::accepted : PointStatus::rejected;
}

void require_homogeneous(const PlaneFamily& fam, const char* engine) {
    if (fam.tilt)
        throw Error(std::string(engine) +
                    " constructs envelopes of planes through the origin; the family must "
                    "have no tilt term");
}

} // namespace

const std::vector<double> kDefaultSGrid = {-2.0, -1.0, -0.5, 0.5, 1.0, 2.0};

std::vector<Point3> positions(const SampledSurface& s) {
    std::vector<Point3> out;
    out.reserve(s.points.size());
    for (const auto& ep : s.points) out.push_back(ep.p);
    return out;
}

std::vector<Point2> grid_points(const GridSpec& x_grid, const GridSpec& y_grid) {
    std::vector<Point2> out;
    out.reserve(static_cast<std::size_t>(x_grid.count) * static_cast<std::size_t>(y_grid.count));
    for (int i = 0; i < x_grid.count; ++i)
        for (int j = 0; j < y_grid.count; ++j) out.push_back(Point2{x_grid.at(i), y_grid.at(j)});
    return out;
}

SampledSurface envelope_function_constraint(const PlaneFamily& fam, const FunctionOfA& c,
                                            const GridSpec& a_grid, const GridSpec& y_grid,
                                            const ToleranceConfig& cfg, Exec exec) {
    require_homogeneous(fam, "envelope_function_constraint");
    if (a_grid.count < 1 || y_grid.count < 1) throw Error("empty grid");
    if (!c.a_domain.contains(a_grid.lo) || !c.a_domain.contains(a_grid.hi))
        throw OutOfDomainError("a_grid leaves the constraint's a-domain");

    const std::size_t na = static_cast<std::size_t>(a_grid.count);
    const std::size_t ny = static_cast<std::size_t>(y_grid.count);
    std::vector<Slot> slots(na * ny);

    parallel_for(slots.size(), exec, [&](std::size_t k) {
        guarded(slots[k], [&] {
            const double a = a_grid.at(static_cast<int>(k / ny));
            const double y = y_grid.at(static_cast<int>(k % ny));

            const double dphi = c.phi_prime ? c.phi_prime(a) : diff_central(c.phi, a, cfg);
            const double phi = c.phi(a);
            const Point3 p{-dphi * y, y, (-a * dphi + phi) * y};

            const double f_resid = std::fabs(fam.residual(p, a, phi));
            // Independent stationarity check: always differenced, even when an
            // analytic phi' built the point.
            const double dphi_fd = diff_central(c.phi, a, cfg);
            const double stat_resid = std::fabs(p.x + dphi_fd * p.y);
            finish(slots[k], p, a, f_resid, stat_resid, cfg);
        });
    });
    return collect(std::move(slots), "function constraint b = phi(a)");
}

std::vector<Point2> projective_curve(const FunctionOfA& c, const GridSpec& a_grid,
                                     const ToleranceConfig& cfg) {
    if (a_grid.count < 1) throw Error("empty grid");
    if (!c.a_domain.contains(a_grid.lo) || !c.a_domain.contains(a_grid.hi))
        throw OutOfDomainError("a_grid leaves the constraint's a-domain");
    std::vector<Point2> out;
    out.reserve(static_cast<std::size_t>(a_grid.count));
    for (int i = 0; i < a_grid.count; ++i) {
        const double a = a_grid.at(i);
        const double dphi = c.phi_prime ? c.phi_prime(a) : diff_central(c.phi, a, cfg);
        out.push_back(Point2{-dphi, -a * dphi + c.phi(a)});
    }
    return out;
}

SampledSurface envelope_branch(const PlaneFamily& fam, const Branch& br,
                               const std::vector<Point2>& xy_grid, const ToleranceConfig& cfg,
                               Exec exec) {
    require_homogeneous(fam, "envelope_branch");
    const Interval iv = br.a_interval();
    // Keep the root search away from the branch ends: psi is interpolated /
    // refined there and the central differences inside G need headroom.
    const double alo = iv.lo + 8.0 * cfg.fd_step * (1.0 + std::fabs(iv.lo));
    const double ahi = iv.hi - 8.0 * cfg.fd_step * (1.0 + std::fabs(iv.hi));

    std::vector<Slot> slots(xy_grid.size());
    parallel_for(slots.size(), exec, [&](std::size_t k) {
        guarded(slots[k], [&] {
            const double x = xy_grid[k].x;
            const double y = xy_grid[k].y;

            if (y == 0.0) {
                // The stationarity equation x + psi'(a) y = 0 degenerates. The
                // surviving limit points sit where the constraint curve turns
                // vertical with the slope running against x; there z/x -> a_end.
                if (x == 0.0) {
                    finish(slots[k], Point3{0.0, 0.0, 0.0}, 0.5 * (iv.lo + iv.hi), 0.0, 0.0, cfg);
                    return;
                }
                int hits = 0;
                double a_end = 0.0;
                for (const bool hi_end : {false, true}) {
                    if (!br.vertical_end(hi_end)) continue;
                    if (br.end_slope(hi_end) * x < 0.0) {
                        a_end = hi_end ? iv.hi : iv.lo;
                        ++hits;
                    }
                }
                if (hits != 1) {
                    slots[k].status = PointStatus::no_bracket;
                    return;
                }
                // Residuals in the directional-limit sense: membership is exact
                // and the normalized stationarity defect collapses to |y| = 0.
                finish(slots[k], Point3{x, 0.0, a_end * x}, a_end, 0.0, 0.0, cfg);
                return;
            }

            if (!(alo < ahi)) {
                slots[k].status = PointStatus::no_bracket;
                return;
            }
            const auto G = [&](double a) {
                return x + diff_central([&](double t) { return br.psi(t); }, a, cfg) * y;
            };

            // Coarse scan for the first stationary parameter.
            double root = 0.0;
            bool found = false;
            double prev_a = alo;
            double prev_v = G(alo);
            if (prev_v == 0.0) {
                root = alo;
                found = true;
            }
            for (int i = 1; !found && i <= kStationarityScanCells; ++i) {
                const double ai =
                    alo + (ahi - alo) * (static_cast<double>(i) / kStationarityScanCells);
                const double vi = G(ai);
                if (vi == 0.0) {
                    root = ai;
                    found = true;
                } else if (prev_v * vi < 0.0) {
                    root = find_root(G, prev_a, ai, cfg);
                    found = true;
                }
                prev_a = ai;
                prev_v = vi;
            }
            if (!found) {
                slots[k].status = PointStatus::no_bracket;
                return;
            }

            const double b = br.psi(root);
            const Point3 p{x, y, root * x + b * y};
            const double f_resid = std::fabs(fam.residual(p, root, b));
            const double stat_resid = std::fabs(G(root));
            finish(slots[k], p, root, f_resid, stat_resid, cfg);
        });
    });
    return collect(std::move(slots), "implicit-relation branch b = psi(a)");
}

SampledSurface envelope_parametric_planes(const PlaneFamily& fam, const ParametricCurve& c,
                                          const GridSpec& theta_grid,
                                          const std::vector<double>& s_grid,
                                          const ToleranceConfig& cfg, Exec exec) {
    require_homogeneous(fam, "envelope_parametric_planes");
    if (theta_grid.count < 1 || s_grid.empty()) throw Error("empty grid");
    const std::size_t ns = s_grid.size();
    std::vector<Slot> slots(static_cast<std::size_t>(theta_grid.count) * ns);

    parallel_for(slots.size(), exec, [&](std::size_t k) {
        guarded(slots[k], [&] {
            const double theta = theta_grid.at(static_cast<int>(k / ns));
            const double s = s_grid[k % ns];

            if (!c.theta_domain.contains(theta))
                throw OutOfDomainError("theta grid leaves the constraint's domain");
            if (c.excluded_at(theta)) {
                slots[k].status = PointStatus::excluded;
                return;
            }

            const Point2 ab = c.g(theta);
            double da, db;
            if (c.g_prime) {
                const Point2 d = c.g_prime(theta);
                da = d.x;
                db = d.y;
            } else {
                const double h = cfg.fd_step * (1.0 + std::fabs(theta));
                const Point2 gp = c.g(theta + h);
                const Point2 gm = c.g(theta - h);
                da = (gp.x - gm.x) / (2.0 * h);
                db = (gp.y - gm.y) / (2.0 * h);
            }
            const double scale = 1.0 + std::fabs(ab.x) + std::fabs(ab.y);
            if (da * da + db * db <= kDegenerateDirection * kDegenerateDirection * scale * scale) {
                slots[k].status = PointStatus::degenerate;
                return;
            }

            // Characteristic line of the family at this theta, sampled at s.
            const Point3 p{-db * s, da * s, (-db * ab.x + da * ab.y) * s};
            const double f_resid = std::fabs(fam.residual(p, ab.x, ab.y));

            // d/dtheta of the family residual at fixed p, differenced through g
            // itself so an analytic g' cannot vouch for its own construction.
            const double h = cfg.fd_step * (1.0 + std::fabs(theta));
            const Point2 gp = c.g(theta + h);
            const Point2 gm = c.g(theta - h);
            const double stat_resid =
                std::fabs((fam.residual(p, gp.x, gp.y) - fam.residual(p, gm.x, gm.y)) / (2.0 * h));
            finish(slots[k], p, theta, f_resid, stat_resid, cfg);
        });
    });
    return collect(std::move(slots), "parametric curve (a, b) = g(theta)");
}

SampledSurface envelope_inverse_map(const PlaneFamily& fam, const InverseMap& c,
                                    const std::vector<Point2>& xy_grid,
                                    const ToleranceConfig& cfg, Exec exec) {
    require_homogeneous(fam, "envelope_inverse_map");
    std::vector<Slot> slots(xy_grid.size());
    parallel_for(slots.size(), exec, [&](std::size_t k) {
        guarded(slots[k], [&] {
            const double x = xy_grid[k].x;
            const double y = xy_grid[k].y;
            if (!c.xy_domain.contains(x, y))
                throw OutOfDomainError("(x, y) outside the map's domain");
            const Point2 ab = c.m(x, y);
            const Point3 p{x, y, ab.x * x + ab.y * y};
            const double f_resid = std::fabs(fam.residual(p, ab.x, ab.y));
            finish(slots[k], p, 0.0, f_resid, 0.0, cfg);
        });
    });
    return collect(std::move(slots), "inverse map (a, b) = m(x, y)");
}

CrossSection cross_section_z1(const std::vector<Point3>& pts, double eps) {
    CrossSection cs;
    for (const auto& p : pts) {
        if (std::fabs(p.z) <= eps) {
            ++cs.dropped;
            continue;
        }
        cs.points.push_back(Point2{p.x / p.z, p.y / p.z});
    }
    return cs;
}

CrossSection cross_section_z1(const SampledSurface& s, double eps) {
    return cross_section_z1(positions(s), eps);
}

} // namespace clairaut
