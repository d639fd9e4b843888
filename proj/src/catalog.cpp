#include "clairaut/catalog.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <filesystem>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

#include "clairaut/csvio.hpp"
#include "clairaut/errors.hpp"
#include "json.hpp"

namespace clairaut {

namespace {

constexpr double kPi = std::numbers::pi_v<double>;

CheckResult le(std::string name, double measured, double threshold, std::string detail = "") {
    CheckResult c;
    c.name = std::move(name);
    c.measured = measured;
    c.threshold = threshold;
    c.passed = std::isfinite(measured) && measured <= threshold;
    c.detail = std::move(detail);
    return c;
}

CheckResult ge(std::string name, double measured, double bound, std::string detail = "") {
    CheckResult c;
    c.name = std::move(name);
    c.measured = measured;
    c.threshold = bound;
    c.passed = std::isfinite(measured) && measured >= bound;
    c.detail = std::move(detail);
    return c;
}

CheckResult expect(std::string name, bool ok, std::string detail = "") {
    CheckResult c;
    c.name = std::move(name);
    c.measured = ok ? 1.0 : 0.0;
    c.threshold = 1.0;
    c.passed = ok;
    c.detail = std::move(detail);
    return c;
}

CheckResult count_eq(std::string name, int got, int want, std::string detail = "") {
    CheckResult c;
    c.name = std::move(name);
    c.measured = got;
    c.threshold = want;
    c.passed = got == want;
    if (detail.empty()) detail = "got " + std::to_string(got) + ", want " + std::to_string(want);
    c.detail = std::move(detail);
    return c;
}

void finalize(EntryReport& rep) {
    rep.passed = !rep.checks.empty();
    for (const auto& c : rep.checks) rep.passed = rep.passed && c.passed;
}

void emit(EntryReport& rep, const std::string& out_dir, const std::string& fname,
          const std::string& content) {
    if (out_dir.empty()) return;
    const std::string path = out_dir + "/" + fname;
    atomic_write(path, content);
    rep.artifacts.push_back(path);
}

// Finalize, then write the JSON report (which lists itself as an artifact).
void write_report(EntryReport& rep, const std::string& out_dir) {
    finalize(rep);
    if (out_dir.empty()) return;
    const std::string path = out_dir + "/" + rep.name + "_report.json";
    rep.artifacts.push_back(path);
    atomic_write(path, report_json(rep) + "\n");
}

double max_graph_dev(const SampledSurface& s, const RealFn2& target) {
    double m = 0.0;
    for (const auto& pt : s.points) {
        const double d = std::fabs(pt.p.z - target(pt.p.x, pt.p.y));
        if (std::isnan(d)) return std::numeric_limits<double>::infinity();
        m = std::max(m, d);
    }
    return m;
}

double max_abs_vec(const std::vector<double>& v) {
    double m = 0.0;
    for (double r : v) {
        if (std::isnan(r)) return std::numeric_limits<double>::infinity();
        m = std::max(m, std::fabs(r));
    }
    return m;
}

const EnvelopePoint* find_spot(const SampledSurface& s, double x, double y, double tol) {
    for (const auto& pt : s.points)
        if (std::fabs(pt.p.x - x) <= tol && std::fabs(pt.p.y - y) <= tol) return &pt;
    return nullptr;
}

ExplicitGraph sqrt_xy_graph() {
    return {[](double x, double y) {
        const double v = x * y;
        if (v < 0.0) throw DomainError("2*sqrt(x*y) needs x*y >= 0", "sqrt(x*y)");
        return 2.0 * std::sqrt(v);
    }};
}

ExplicitGraph power_graph(double alpha) {
    return {[alpha](double x, double y) {
        if (x <= 0.0 || y <= 0.0)
            throw DomainError("x^a * y^(1-a) needs x, y > 0", "pow");
        return std::pow(x, alpha) * std::pow(y, 1.0 - alpha);
    }};
}

FunctionOfA power_constraint(double alpha) {
    const double q = alpha / (1.0 - alpha);
    return {[alpha, q](double a) {
                if (a <= 0.0) throw DomainError("constraint needs a > 0", "alpha/a");
                return (1.0 - alpha) * std::pow(alpha / a, q);
            },
            [alpha, q](double a) {
                if (a <= 0.0) throw DomainError("constraint needs a > 0", "alpha/a");
                return -std::pow(alpha / a, q + 1.0);
            },
            {0.05, 5.0}};
}

// ---------------------------------------------------------------------------
// parabola_family: y = (x + c)^2, vertex line y = 0.

EntryReport run_parabola(const std::string& out_dir, const ToleranceConfig& cfg, Exec) {
    EntryReport rep;
    rep.name = "parabola_family";
    const CurveFamilyFn f = [](double x, double y, double c) {
        const double u = x + c;
        return u * u - y;
    };

    const GridSpec c_grid{-2.0, 2.0, 41};
    std::vector<std::pair<Point2, double>> cands;
    std::vector<Point2> contacts;
    for (int i = 0; i < c_grid.count; ++i) {
        const double c = c_grid.at(i);
        cands.push_back({{-c, 0.0}, c});
        contacts.push_back({-c, 0.0});
    }

    const auto verdicts = classify_locus(f, cands, cfg);
    int off = 0;
    for (const auto& v : verdicts)
        if (v.label != LocusLabel::Envelope) ++off;
    rep.checks.push_back(expect("vertex line y = 0 is classified Envelope at every candidate",
                                off == 0,
                                std::to_string(static_cast<int>(verdicts.size()) - off) + " of " +
                                    std::to_string(verdicts.size()) + " candidates"));

    // Tangency in the 2-D sense: each member passes through its contact
    // point with zero slope, matching the flat envelope line.
    double worst_member = 0.0;
    double worst_slope = 0.0;
    const double h = cfg.fd_step;
    for (const auto& [pt, c] : cands) {
        worst_member = std::max(worst_member, std::fabs((pt.x + c) * (pt.x + c)));
        const double up = (pt.x + h + c) * (pt.x + h + c);
        const double dn = (pt.x - h + c) * (pt.x - h + c);
        worst_slope = std::max(worst_slope, std::fabs((up - dn) / (2.0 * h)));
    }
    rep.checks.push_back(le("contact points lie on their member parabolas", worst_member, 0.0));
    rep.checks.push_back(le("member slope vanishes at each contact", worst_slope, 1e-12));

    emit(rep, out_dir, "parabola_family_contacts.csv", points_csv(contacts, "x,y"));
    write_report(rep, out_dir);
    return rep;
}

// ---------------------------------------------------------------------------
// hyperbola_envelope: lines y = a - a^2 x, and the plane lift a*b = 1.

EntryReport run_hyperbola(const std::string& out_dir, const ToleranceConfig& cfg, Exec exec) {
    EntryReport rep;
    rep.name = "hyperbola_envelope";

    // 2-D line family.
    const CurveFamilyFn f = [](double x, double y, double a) { return a * a * x + y - a; };
    const GridSpec a_grid{1.0 / 3.0, 3.0, 40};
    std::vector<std::pair<Point2, double>> cands;
    double worst_disc = 0.0;
    for (int i = 0; i < a_grid.count; ++i) {
        const double a = a_grid.at(i);
        const Point2 pt{1.0 / (2.0 * a), a / 2.0};
        cands.push_back({pt, a});
        worst_disc = std::max(worst_disc, std::fabs(4.0 * pt.x * pt.y - 1.0));
    }
    const auto verdicts = classify_locus(f, cands, cfg);
    int off = 0;
    for (const auto& v : verdicts)
        if (v.label != LocusLabel::Envelope) ++off;
    rep.checks.push_back(
        expect("line-family discriminant is classified Envelope everywhere", off == 0));
    rep.checks.push_back(le("discriminant points satisfy 4xy = 1", worst_disc, 1e-12));

    // Independent spot: solve df/da = 0 at x = 1/2 and read the height off.
    const double x0 = 0.5;
    const double astar = find_root([x0](double a) { return 2.0 * a * x0 - 1.0; }, 0.2, 3.0, cfg);
    const double ystar = astar - astar * astar * x0;
    rep.checks.push_back(le("stationary height at x = 1/2 is 1/2", std::fabs(ystar - 0.5), 1e-9));

    // 3-D lift: planes z = a*x + b*y with a*b = 1.
    const PlaneFamily fam{};
    const ImplicitRelation rel{[](double a, double b) { return a * b - 1.0; },
                               {0.05, 5.0},
                               {0.1, 25.0}};
    const auto branches = enumerate_branches(rel, 64, cfg);
    rep.checks.push_back(count_eq("a*b = 1 threads into one branch over the window",
                                  static_cast<int>(branches.size()), 1));
    if (!branches.empty()) {
        const Branch& br = branches.front();
        const Interval iv = br.a_interval();
        double worst_rel = 0.0;
        for (int i = 0; i < 200; ++i) {
            const double a = iv.lo + 1e-3 + (iv.width() - 2e-3) * (static_cast<double>(i) / 199.0);
            worst_rel = std::max(worst_rel, std::fabs(a * br.psi(a) - 1.0));
        }
        rep.checks.push_back(le("branch values satisfy the relation", worst_rel, 1e-10));

        std::vector<Point2> row;
        for (int i = 0; i < 64; ++i)
            row.push_back({0.1 * std::pow(100.0, static_cast<double>(i) / 63.0), 1.0});
        const auto cloud = envelope_branch(fam, br, row, cfg, exec);
        rep.checks.push_back(count_eq("every ray sample is accepted", cloud.diag.accepted, 64));

        const ImplicitLevelSet quad{[](const Point3& p) {
            return p.z * p.z - 4.0 * p.x * p.y;
        }};
        const auto mem = implicit_membership(quad, positions(cloud), cfg, exec);
        rep.checks.push_back(le("cloud lies on z^2 = 4xy", mem.max_abs, 1e-8));

        const auto sec = cross_section_z1(cloud, 1e-9);
        rep.checks.push_back(count_eq("z = 1 section keeps every point", sec.dropped, 0));
        double worst_sec = 0.0;
        for (const auto& p : sec.points)
            worst_sec = std::max(worst_sec, std::fabs(4.0 * p.x * p.y - 1.0));
        rep.checks.push_back(le("section points satisfy 4XY = 1", worst_sec, 1e-8));

        emit(rep, out_dir, "hyperbola_envelope_points.csv", surface_csv(cloud));
        emit(rep, out_dir, "hyperbola_envelope_section.csv", points_csv(sec.points, "x,y"));
    }

    write_report(rep, out_dir);
    return rep;
}

// ---------------------------------------------------------------------------
// goursat_quartic: y^4 - y^2 = (x - a)^2, mixed discriminant.

EntryReport run_goursat(const std::string& out_dir, const ToleranceConfig& cfg, Exec) {
    EntryReport rep;
    rep.name = "goursat_quartic";
    const CurveFamilyFn f = [](double x, double y, double a) {
        const double u = x - a;
        const double y2 = y * y;
        return y2 * y2 - y2 - u * u;
    };

    const GridSpec a_grid{-1.5, 1.5, 25};
    std::vector<std::pair<Point2, double>> env_cands, sing_cands;
    std::vector<Point2> cand_pts;
    for (int i = 0; i < a_grid.count; ++i) {
        const double a = a_grid.at(i);
        env_cands.push_back({{a, 1.0}, a});
        env_cands.push_back({{a, -1.0}, a});
        sing_cands.push_back({{a, 0.0}, a});
        cand_pts.push_back({a, 1.0});
        cand_pts.push_back({a, -1.0});
        cand_pts.push_back({a, 0.0});
    }

    const auto env = classify_locus(f, env_cands, cfg);
    const auto sing = classify_locus(f, sing_cands, cfg);
    int env_off = 0, sing_off = 0;
    for (const auto& v : env)
        if (v.label != LocusLabel::Envelope) ++env_off;
    for (const auto& v : sing)
        if (v.label != LocusLabel::SingularLocus) ++sing_off;
    rep.checks.push_back(expect("lines y = +-1 are classified Envelope", env_off == 0,
                                std::to_string(static_cast<int>(env.size()) - env_off) + " of " +
                                    std::to_string(env.size())));
    rep.checks.push_back(expect("line y = 0 is classified SingularLocus", sing_off == 0,
                                std::to_string(static_cast<int>(sing.size()) - sing_off) + " of " +
                                    std::to_string(sing.size())));

    emit(rep, out_dir, "goursat_quartic_candidates.csv", points_csv(cand_pts, "x,y"));
    write_report(rep, out_dir);
    return rep;
}

// ---------------------------------------------------------------------------
// sqrt_xy: b = 1/a gives z = 2*sqrt(x*y).

EntryReport run_sqrt_xy(const std::string& out_dir, const ToleranceConfig& cfg, Exec exec) {
    EntryReport rep;
    rep.name = "sqrt_xy";
    const PlaneFamily fam{};
    const FunctionOfA c{[](double a) { return 1.0 / a; }, [](double a) { return -1.0 / (a * a); },
                        {0.05, 5.0}};

    const GridSpec a_grid{0.5, 4.375, 32};
    const GridSpec y_grid{0.125, 4.0, 32};
    const auto cloud = envelope_function_constraint(fam, c, a_grid, y_grid, cfg, exec);
    rep.checks.push_back(count_eq("every grid sample is accepted", cloud.diag.accepted, 1024));

    const auto target = [](double x, double y) { return 2.0 * std::sqrt(x * y); };
    rep.checks.push_back(le("cloud matches z = 2*sqrt(x*y)", max_graph_dev(cloud, target), 1e-8));

    const EnvelopePoint* spot = find_spot(cloud, 1.0, 4.0, 1e-9);
    rep.checks.push_back(expect("the a = 2, y = 4 sample lands on (1, 4, 4)",
                                spot != nullptr && std::fabs(spot->p.z - 4.0) <= 1e-9 &&
                                    std::fabs(spot->param - 2.0) <= 1e-9));

    const ImplicitLevelSet quad{[](const Point3& p) { return p.z * p.z - 4.0 * p.x * p.y; }};
    const auto mem = implicit_membership(quad, positions(cloud), cfg, exec);
    rep.checks.push_back(le("cloud lies on z^2 = 4xy", mem.max_abs, 1e-8));

    const auto resid = residual_grid(sqrt_xy_graph(), {0.5, 2.0, 20}, {0.5, 2.0, 20}, {}, cfg, exec);
    rep.checks.push_back(le("equation residual of z = 2*sqrt(x*y)", max_abs_vec(resid), 1e-7));

    const auto hc = homogeneity_check(sqrt_xy_graph(), 1.0, 25, {0.5, 2.0, 3.0});
    rep.checks.push_back(le("degree-1 scaling defect", hc.max_defect, 1e-10));

    const auto section = projective_curve(c, {0.5, 4.0, 200}, cfg);
    const auto mv = detect_multivalued(section);
    rep.checks.push_back(expect("section profile is single-valued", !mv.multivalued));

    const auto inv = invertibility_check(c.phi_prime, {0.5, 4.0}, 200);
    rep.checks.push_back(expect("slope map a -> phi'(a) is invertible", inv.invertible));

    emit(rep, out_dir, "sqrt_xy_points.csv", surface_csv(cloud));
    emit(rep, out_dir, "sqrt_xy_section.csv", points_csv(section, "x,y"));
    write_report(rep, out_dir);
    return rep;
}

// ---------------------------------------------------------------------------
// power_alpha: b = (1-alpha) * (alpha/a)^(alpha/(1-alpha)).

EntryReport run_power_alpha(const std::string& out_dir, const ToleranceConfig& cfg, Exec exec) {
    EntryReport rep;
    rep.name = "power_alpha";
    const PlaneFamily fam{};
    const std::array<double, 3> alphas{0.3, 0.5, 0.9};

    for (double alpha : alphas) {
        const std::string tag = " (alpha = " + format_double(alpha) + ")";
        const ExplicitGraph g = power_graph(alpha);

        const auto resid = residual_grid(g, {0.5, 2.0, 20}, {0.5, 2.0, 20}, {}, cfg, exec);
        rep.checks.push_back(le("equation residual of the power surface" + tag,
                                max_abs_vec(resid), 1e-7));

        const auto hc = homogeneity_check(g, 1.0, 25, {0.5, 2.0, 3.0});
        rep.checks.push_back(le("degree-1 scaling defect" + tag, hc.max_defect, 1e-10));

        const auto cloud = envelope_function_constraint(fam, power_constraint(alpha),
                                                        {0.6, 2.0, 16}, {0.5, 2.0, 12}, cfg, exec);
        rep.checks.push_back(
            count_eq("every grid sample is accepted" + tag, cloud.diag.accepted, 192));
        rep.checks.push_back(le("envelope rebuilds the power surface" + tag,
                                max_graph_dev(cloud, g.h), 1e-8));

        if (alpha == 0.5) emit(rep, out_dir, "power_alpha_points.csv", surface_csv(cloud));
    }

    // Contrast: an inhomogeneous surface fails degree 1 and passes degree 2.
    const ExplicitGraph g2{[](double x, double y) { return x * x + y * y; }};
    const auto bad = homogeneity_check(g2, 1.0, 25, {2.0});
    rep.checks.push_back(
        ge("x^2 + y^2 breaks the degree-1 scaling test", bad.max_defect, 1e-3));
    const auto good = homogeneity_check(g2, 2.0, 25, {0.5, 2.0, 3.0});
    rep.checks.push_back(le("x^2 + y^2 passes at degree 2", good.max_defect, 1e-10));

    write_report(rep, out_dir);
    return rep;
}

// ---------------------------------------------------------------------------
// euler_generator: z = sqrt(xy) * H(x/y) solves the equation for any H.

EntryReport run_euler_generator(const std::string& out_dir, const ToleranceConfig& cfg,
                                Exec exec) {
    EntryReport rep;
    rep.name = "euler_generator";

    struct Gen {
        std::string label;
        RealFn H;
    };
    const std::vector<Gen> gens{
        {"2 + cos(t)", [](double t) { return 2.0 + std::cos(t); }},
        {"exp(-t)", [](double t) { return std::exp(-t); }},
        {"1 + t/2", [](double t) { return 1.0 + 0.5 * t; }},
    };

    for (const auto& gen : gens) {
        const RealFn H = gen.H;
        const ExplicitGraph g{[H](double x, double y) {
            if (x <= 0.0 || y <= 0.0)
                throw DomainError("generator surface needs x, y > 0", "sqrt(x*y)");
            return std::sqrt(x * y) * H(x / y);
        }};
        const std::string tag = " for H = " + gen.label;

        const auto resid = residual_grid(g, {0.5, 2.0, 20}, {0.5, 2.0, 20}, {}, cfg, exec);
        rep.checks.push_back(le("equation residual" + tag, max_abs_vec(resid), 1e-7));

        const auto hc = homogeneity_check(g, 1.0, 25, {0.5, 2.0, 3.0});
        rep.checks.push_back(le("degree-1 scaling defect" + tag, hc.max_defect, 1e-10));

        double worst_euler = 0.0;
        const GridSpec probe{0.7, 1.9, 5};
        for (int i = 0; i < probe.count; ++i)
            for (int j = 0; j < probe.count; ++j)
                worst_euler = std::max(
                    worst_euler,
                    std::fabs(euler_residual(g, 1.0, {probe.at(i), probe.at(j)}, cfg)));
        rep.checks.push_back(le("Euler identity x*h_x + y*h_y = h" + tag, worst_euler, 1e-7));
    }

    write_report(rep, out_dir);
    return rep;
}

// ---------------------------------------------------------------------------
// bimodal_spline: piecewise-quartic phi' with two bumps.

EntryReport run_bimodal(const std::string& out_dir, const ToleranceConfig& cfg, Exec exec) {
    EntryReport rep;
    rep.name = "bimodal_spline";
    const PlaneFamily fam{};
    const RealFn s = bimodal_phi_prime();
    const FunctionOfA c = bimodal_constraint();

    // Knot values from the closed piece forms on both sides.
    const auto bump = [](double u) {
        const double t = u * u - 1.0;
        return t * t;
    };
    const auto p1 = [&](double a) { return bump(a - 1.0); };
    const auto p2 = [&](double a) { return 0.5 * bump(a - 1.0) + 0.5; };
    const auto p3 = [&](double a) { return 0.5 * bump(a - 3.0) + 0.5; };
    const auto p4 = [&](double a) { return bump(a - 3.0); };
    double knot_dev = 0.0;
    knot_dev = std::max(knot_dev, std::fabs(p1(1.0) - 1.0));
    knot_dev = std::max(knot_dev, std::fabs(p2(1.0) - 1.0));
    knot_dev = std::max(knot_dev, std::fabs(p2(2.0) - 0.5));
    knot_dev = std::max(knot_dev, std::fabs(p3(2.0) - 0.5));
    knot_dev = std::max(knot_dev, std::fabs(p3(3.0) - 1.0));
    knot_dev = std::max(knot_dev, std::fabs(p4(3.0) - 1.0));
    rep.checks.push_back(le("knot values are 1, 1/2, 1 from both pieces", knot_dev, 0.0));

    rep.checks.push_back(
        le("total integral of phi' over [0, 4] is 13/5",
           std::fabs(integrate(s, 0.0, 4.0, cfg) - 2.6), 1e-6));
    rep.checks.push_back(
        le("running integral reaches 13/5 at a = 4", std::fabs(c.phi(4.0) - 2.6), 1e-9));

    const auto inv_full = invertibility_check(s, {0.0, 4.0}, 200);
    rep.checks.push_back(
        expect("phi' is not invertible across [0, 4]", !inv_full.invertible));
    const auto inv_rise = invertibility_check(s, {0.05, 0.95}, 100);
    rep.checks.push_back(
        expect("phi' is invertible on the first rising stretch", inv_rise.invertible));

    const auto cloud = envelope_function_constraint(fam, c, {0.0, 4.0, 41}, {0.5, 4.0, 8},
                                                    cfg, exec);
    rep.checks.push_back(count_eq("every grid sample is accepted", cloud.diag.accepted, 328));

    const auto section = projective_curve(c, {0.0, 4.0, 4001}, cfg);
    const auto mv = detect_multivalued(section);
    rep.checks.push_back(expect("section profile doubles back: same angle, two radii",
                                mv.multivalued,
                                mv.multivalued ? "radius ratio " + format_double(mv.radius_ratio)
                                               : "no witness pair found"));

    emit(rep, out_dir, "bimodal_spline_points.csv", surface_csv(cloud));
    emit(rep, out_dir, "bimodal_spline_section.csv", points_csv(section, "x,y"));
    write_report(rep, out_dir);
    return rep;
}

// ---------------------------------------------------------------------------
// circle_relation: (a-1)^2 + (b-1)^2 = 1.

EntryReport run_circle(const std::string& out_dir, const ToleranceConfig& cfg, Exec exec) {
    EntryReport rep;
    rep.name = "circle_relation";
    const PlaneFamily fam{};
    const ImplicitRelation rel = circle_constraint();

    const auto branches = enumerate_branches(rel, 64, cfg);
    rep.checks.push_back(count_eq("the circle splits into two branches",
                                  static_cast<int>(branches.size()), 2));
    if (branches.size() == 2) {
        // Identify sheets by height at a = 1 instead of enumeration order.
        const Branch* lower = &branches[0];
        const Branch* upper = &branches[1];
        if (lower->psi(1.0) > upper->psi(1.0)) std::swap(lower, upper);

        double worst_rel = 0.0;
        for (const Branch* br : {lower, upper}) {
            const Interval iv = br->a_interval();
            for (int i = 0; i < 200; ++i) {
                const double a =
                    iv.lo + 1e-3 + (iv.width() - 2e-3) * (static_cast<double>(i) / 199.0);
                const double b = br->psi(a);
                const double u = a - 1.0, v = b - 1.0;
                worst_rel = std::max(worst_rel, std::fabs(u * u + v * v - 1.0));
            }
        }
        rep.checks.push_back(le("branch values satisfy the circle relation", worst_rel, 1e-8));

        const auto grid = grid_points({0.25, 4.0, 16}, {0.25, 4.0, 16});
        const auto lower_cloud = envelope_branch(fam, *lower, grid, cfg, exec);
        const auto upper_cloud = envelope_branch(fam, *upper, grid, cfg, exec);
        rep.checks.push_back(
            count_eq("lower sheet accepts the whole grid", lower_cloud.diag.accepted, 256));
        rep.checks.push_back(
            count_eq("upper sheet accepts the whole grid", upper_cloud.diag.accepted, 256));

        const ImplicitLevelSet quad{circle_quadric()};
        const auto mem_lo = implicit_membership(quad, positions(lower_cloud), cfg, exec);
        const auto mem_up = implicit_membership(quad, positions(upper_cloud), cfg, exec);
        rep.checks.push_back(
            le("lower sheet lies on z^2 = 2xz + 2yz - 2xy", mem_lo.max_abs, 1e-8));
        rep.checks.push_back(
            le("upper sheet lies on z^2 = 2xz + 2yz - 2xy", mem_up.max_abs, 1e-8));

        const EnvelopePoint* spot = find_spot(upper_cloud, 3.0, 4.0, 1e-9);
        rep.checks.push_back(expect("upper sheet passes through (3, 4, 12)",
                                    spot != nullptr && std::fabs(spot->p.z - 12.0) <= 1e-10));

        const auto edge = envelope_branch(fam, *upper, {{1.0, 0.0}}, cfg, exec);
        rep.checks.push_back(expect(
            "y = 0 limit of the upper sheet reaches (1, 0, 2) with a -> 2",
            edge.diag.accepted == 1 && std::fabs(edge.points[0].p.z - 2.0) <= 1e-9 &&
                std::fabs(edge.points[0].param - 2.0) <= 1e-9));

        emit(rep, out_dir, "circle_relation_lower.csv", surface_csv(lower_cloud));
        emit(rep, out_dir, "circle_relation_upper.csv", surface_csv(upper_cloud));
    }

    // The two closed-form sheets solve the equation directly.
    const ExplicitGraph up{[](double x, double y) {
        return x + y + std::sqrt(x * x + y * y);
    }};
    const ExplicitGraph dn{[](double x, double y) {
        return x + y - std::sqrt(x * x + y * y);
    }};
    const auto r_up = residual_grid(up, {0.5, 2.0, 20}, {0.5, 2.0, 20}, {}, cfg, exec);
    const auto r_dn = residual_grid(dn, {0.5, 2.0, 20}, {0.5, 2.0, 20}, {}, cfg, exec);
    rep.checks.push_back(
        le("equation residual of z = x + y + sqrt(x^2 + y^2)", max_abs_vec(r_up), 1e-7));
    rep.checks.push_back(
        le("equation residual of z = x + y - sqrt(x^2 + y^2)", max_abs_vec(r_dn), 1e-7));

    const ImplicitLevelSet quad{circle_quadric()};
    rep.checks.push_back(le("level-set residual at (3, 4, 12)",
                            std::fabs(clairaut_residual_implicit(quad, {3.0, 4.0, 12.0}, cfg)),
                            1e-7));

    write_report(rep, out_dir);
    return rep;
}

// ---------------------------------------------------------------------------
// tilted_cone: tangent planes of (x-z)^2 + (y-z)^2 = z^2.

EntryReport run_tilted_cone(const std::string& out_dir, const ToleranceConfig& cfg, Exec exec) {
    EntryReport rep;
    rep.name = "tilted_cone";
    const PlaneFamily fam{};
    const ParametricCurve curve = tilted_cone_constraint();
    const Surface cone{ImplicitLevelSet{cone_quadric()}};

    // Two hand-checked characteristic points.
    const auto spots = envelope_parametric_planes(fam, curve, {0.0, kPi / 2.0, 2}, {-4.0},
                                                  cfg, exec);
    bool spots_ok = spots.diag.accepted == 2;
    if (spots_ok) {
        const auto close = [](const Point3& p, double x, double y, double z) {
            return std::fabs(p.x - x) <= 1e-12 && std::fabs(p.y - y) <= 1e-12 &&
                   std::fabs(p.z - z) <= 1e-12;
        };
        spots_ok = close(spots.points[0].p, 2.0, 1.0, 1.0) &&
                   close(spots.points[1].p, 1.0, 2.0, 1.0);
    }
    rep.checks.push_back(expect(
        "characteristics at t = 0 and t = pi/2 (s = -4) hit (2,1,1) and (1,2,1)", spots_ok));

    // Full sweep on a pole-avoiding offset grid.
    const GridSpec theta_grid{-kPi + kPi / 32.0, kPi - kPi / 32.0, 32};
    const std::vector<double> s_grid{-4.0, -1.0, 1.0, 2.0, 4.0, 6.0};
    const auto cloud = envelope_parametric_planes(fam, curve, theta_grid, s_grid, cfg, exec);
    rep.checks.push_back(count_eq("offset grid clears the poles and accepts every ray sample",
                                  cloud.diag.accepted, 192));

    const auto mem = implicit_membership(std::get<ImplicitLevelSet>(cone), positions(cloud),
                                         cfg, exec);
    rep.checks.push_back(le("cloud lies on the cone quadric", mem.max_abs, 1e-8));

    // Tangency of the generating planes along the sweep.
    int not_tangent = 0;
    for (int i = 0; i < theta_grid.count; ++i) {
        const double t = theta_grid.at(i);
        const Point2 ab = curve.g(t);
        const Point2 d = curve.g_prime(t);
        const Point3 p{-d.y, d.x, -d.y * ab.x + d.x * ab.y};
        if (!tangency_check(cone, ab.x, ab.y, p, cfg).tangent) ++not_tangent;
    }
    rep.checks.push_back(count_eq("plane touches the cone at every sampled t", not_tangent, 0));

    // The sign-flipped variant parametrizes planes that miss the surface:
    // its t = 0 characteristic lands at (-2, -1, 1), off the cone.
    const ParametricCurve flipped = tilted_cone_constraint_flipped();
    const Point2 ab0 = flipped.g(0.0);
    const Point2 d0 = flipped.g_prime(0.0);
    const Point3 p0{-4.0 * -d0.y, -4.0 * d0.x, -4.0 * (-d0.y * ab0.x + d0.x * ab0.y)};
    const auto bad = tangency_check(cone, ab0.x, ab0.y, p0, cfg);
    rep.checks.push_back(expect("sign-flipped parametrization fails tangency at t = 0",
                                !bad.tangent,
                                "surface gap " + format_double(bad.surface_gap)));

    // Closed-form sheets and the level-set residual.
    const ExplicitGraph up{[](double x, double y) {
        if (x * y < 0.0) throw DomainError("sheet needs x*y >= 0", "sqrt(2*x*y)");
        return x + y + std::sqrt(2.0 * x * y);
    }};
    const ExplicitGraph dn{[](double x, double y) {
        if (x * y < 0.0) throw DomainError("sheet needs x*y >= 0", "sqrt(2*x*y)");
        return x + y - std::sqrt(2.0 * x * y);
    }};
    const auto r_up = residual_grid(up, {0.5, 2.0, 20}, {0.5, 2.0, 20}, {}, cfg, exec);
    const auto r_dn = residual_grid(dn, {0.5, 2.0, 20}, {0.5, 2.0, 20}, {}, cfg, exec);
    rep.checks.push_back(
        le("equation residual of z = x + y + sqrt(2xy)", max_abs_vec(r_up), 1e-7));
    rep.checks.push_back(
        le("equation residual of z = x + y - sqrt(2xy)", max_abs_vec(r_dn), 1e-7));

    double worst_impl = 0.0;
    const GridSpec probe{0.5, 2.0, 10};
    for (int i = 0; i < probe.count; ++i)
        for (int j = 0; j < probe.count; ++j) {
            const double x = probe.at(i), y = probe.at(j);
            const Point3 p{x, y, up.h(x, y)};
            worst_impl = std::max(
                worst_impl,
                std::fabs(clairaut_residual_implicit(std::get<ImplicitLevelSet>(cone), p, cfg)));
        }
    rep.checks.push_back(le("level-set residual along the upper sheet", worst_impl, 1e-7));

    emit(rep, out_dir, "tilted_cone_points.csv", surface_csv(cloud));
    write_report(rep, out_dir);
    return rep;
}

// ---------------------------------------------------------------------------
// chojnacki_cusp: inverse contact map with a cuspidal profile.

EntryReport run_chojnacki(const std::string& out_dir, const ToleranceConfig& cfg, Exec exec) {
    EntryReport rep;
    rep.name = "chojnacki_cusp";
    const PlaneFamily fam{};
    const InverseMap m = chojnacki_map();

    const auto grid = grid_points({-1.0, 1.0, 20}, {0.5, 2.0, 20});
    const auto cloud = envelope_inverse_map(fam, m, grid, cfg, exec);
    rep.checks.push_back(count_eq("every grid sample is accepted", cloud.diag.accepted, 400));

    const auto target = [](double x, double y) { return x * x * x / (y * y); };
    rep.checks.push_back(le("cloud matches z = x^3/y^2", max_graph_dev(cloud, target), 1e-10));

    const ImplicitLevelSet quad{[](const Point3& p) {
        return p.z * p.y * p.y - p.x * p.x * p.x;
    }};
    const auto mem = implicit_membership(quad, positions(cloud), cfg, exec);
    rep.checks.push_back(le("cloud lies on z*y^2 = x^3", mem.max_abs, 1e-8));

    // The map factors through the slope profile g(t) = (3t^2, -2t^3), t = x/y.
    const auto profile = [](double t) { return Point2{3.0 * t * t, -2.0 * t * t * t}; };
    double worst_factor = 0.0;
    for (const auto& pt : grid) {
        const Point2 ab = m.m(pt.x, pt.y);
        const Point2 gp = profile(pt.x / pt.y);
        worst_factor = std::max(worst_factor,
                                std::max(std::fabs(ab.x - gp.x), std::fabs(ab.y - gp.y)));
    }
    rep.checks.push_back(
        le("contact map factors through the profile (3t^2, -2t^3)", worst_factor, 1e-12));

    const auto cusp = detect_cusp(profile, 0.0, cfg);
    rep.checks.push_back(expect("profile velocity collapses at t = 0", cusp.is_cusp));

    int false_hits = 0;
    for (double t0 : {-2.0, -1.0, -0.5, -0.1, 0.1, 0.5, 1.0, 2.0})
        if (detect_cusp(profile, t0, cfg).is_cusp) ++false_hits;
    rep.checks.push_back(count_eq("no cusp is reported away from t = 0", false_hits, 0));

    const ExplicitGraph g{[](double x, double y) {
        if (y == 0.0) throw DomainError("x^3/y^2 needs y != 0", "y^2");
        return x * x * x / (y * y);
    }};
    const auto resid = residual_grid(g, {0.5, 2.0, 20}, {0.5, 2.0, 20}, {}, cfg, exec);
    rep.checks.push_back(le("equation residual of z = x^3/y^2", max_abs_vec(resid), 1e-7));
    const auto hc = homogeneity_check(g, 1.0, 25, {0.5, 2.0, 3.0});
    rep.checks.push_back(le("degree-1 scaling defect", hc.max_defect, 1e-10));

    emit(rep, out_dir, "chojnacki_cusp_points.csv", surface_csv(cloud));
    write_report(rep, out_dir);
    return rep;
}

// ---------------------------------------------------------------------------
// neg_quadratic: phi = -a^2/2 gives z = x^2/(2y).

EntryReport run_neg_quadratic(const std::string& out_dir, const ToleranceConfig& cfg,
                              Exec exec) {
    EntryReport rep;
    rep.name = "neg_quadratic";
    const PlaneFamily fam{};
    const FunctionOfA c{[](double a) { return -0.5 * a * a; }, [](double a) { return -a; },
                        {-5.0, 5.0}};

    const auto cloud = envelope_function_constraint(fam, c, {-2.0, 2.0, 21}, {0.5, 4.0, 15},
                                                    cfg, exec);
    rep.checks.push_back(count_eq("every grid sample is accepted", cloud.diag.accepted, 315));

    const auto target = [](double x, double y) { return x * x / (2.0 * y); };
    rep.checks.push_back(le("cloud matches z = x^2/(2y)", max_graph_dev(cloud, target), 1e-10));

    const ImplicitLevelSet quad{[](const Point3& p) {
        return 2.0 * p.y * p.z - p.x * p.x;
    }};
    const auto mem = implicit_membership(quad, positions(cloud), cfg, exec);
    rep.checks.push_back(le("cloud lies on 2yz = x^2", mem.max_abs, 1e-8));

    const auto inv = invertibility_check(c.phi_prime, {-2.0, 2.0}, 100);
    rep.checks.push_back(expect("slope map a -> -a is invertible", inv.invertible));

    const auto section = projective_curve(c, {-2.0, 2.0, 800}, cfg);
    const auto mv = detect_multivalued(section);
    rep.checks.push_back(
        expect("section profile is single-valued (contrast with bimodal_spline)",
               !mv.multivalued));

    const ExplicitGraph g{[](double x, double y) {
        if (y == 0.0) throw DomainError("x^2/(2y) needs y != 0", "2*y");
        return x * x / (2.0 * y);
    }};
    const auto resid = residual_grid(g, {0.5, 2.0, 20}, {0.5, 2.0, 20}, {}, cfg, exec);
    rep.checks.push_back(le("equation residual of z = x^2/(2y)", max_abs_vec(resid), 1e-7));
    const auto hc = homogeneity_check(g, 1.0, 25, {0.5, 2.0, 3.0});
    rep.checks.push_back(le("degree-1 scaling defect", hc.max_defect, 1e-10));

    emit(rep, out_dir, "neg_quadratic_points.csv", surface_csv(cloud));
    write_report(rep, out_dir);
    return rep;
}

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> out;

    {
        CatalogEntry e;
        e.name = "parabola_family";
        e.summary = "Vertex line of the parabolas y = (x + c)^2: the discriminant is a true "
                    "envelope (regular members, tangent contact).";
        e.curve_family = [](double x, double y, double c) {
            const double u = x + c;
            return u * u - y;
        };
        e.run = run_parabola;
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "hyperbola_envelope";
        e.summary = "Lines y = a - a^2 x envelope the hyperbola 4xy = 1; lifted to planes "
                    "z = a x + b y with a*b = 1, the same curve is the z = 1 section of "
                    "z^2 = 4xy.";
        e.curve_family = [](double x, double y, double a) { return a * a * x + y - a; };
        e.constraint = ImplicitRelation{[](double a, double b) { return a * b - 1.0; },
                                        {0.05, 5.0},
                                        {0.1, 25.0}};
        e.expected = Surface{ImplicitLevelSet{[](const Point3& p) {
            return p.z * p.z - 4.0 * p.x * p.y;
        }}};
        e.run = run_hyperbola;
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "goursat_quartic";
        e.summary = "Quartic family y^4 - y^2 = (x - a)^2: the discriminant splits into the "
                    "envelope lines y = +-1 and the singular-point line y = 0.";
        e.curve_family = [](double x, double y, double a) {
            const double u = x - a;
            const double y2 = y * y;
            return y2 * y2 - y2 - u * u;
        };
        e.run = run_goursat;
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "sqrt_xy";
        e.summary = "Planes z = a x + y/a envelope z = 2 sqrt(xy); the z = 1 section is the "
                    "hyperbola-like profile (1/a^2, 2/a).";
        e.constraint = FunctionOfA{[](double a) { return 1.0 / a; },
                                   [](double a) { return -1.0 / (a * a); },
                                   {0.05, 5.0}};
        e.expected = Surface{ImplicitLevelSet{[](const Point3& p) {
            return p.z * p.z - 4.0 * p.x * p.y;
        }}};
        e.run = run_sqrt_xy;
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "power_alpha";
        e.summary = "b = (1 - a0) (a0/a)^(a0/(1 - a0)) rebuilds z = x^a0 y^(1-a0) for "
                    "a0 in {0.3, 0.5, 0.9}.";
        e.notes = "a0 = 0.5 reduces to b = 1/(4a), the sqrt_xy constraint scaled by 1/4, "
                  "and the envelope to z = sqrt(xy).";
        e.constraint = FunctionOfA{[](double a) { return 0.25 / a; },
                                   [](double a) { return -0.25 / (a * a); },
                                   {0.05, 5.0}};
        e.expected = Surface{ExplicitGraph{[](double x, double y) {
            if (x <= 0.0 || y <= 0.0)
                throw DomainError("sqrt(x*y) needs x, y > 0", "sqrt");
            return std::sqrt(x * y);
        }}};
        e.run = run_power_alpha;
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "euler_generator";
        e.summary = "Every z = sqrt(xy) H(x/y) with smooth H solves the equation: degree-1 "
                    "homogeneity is the whole condition.";
        e.expected = Surface{ExplicitGraph{[](double x, double y) {
            if (x <= 0.0 || y <= 0.0)
                throw DomainError("generator surface needs x, y > 0", "sqrt(x*y)");
            return std::sqrt(x * y) * (2.0 + std::cos(x / y));
        }}};
        e.run = run_euler_generator;
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "bimodal_spline";
        e.summary = "A two-bump piecewise-quartic phi' makes the slope map non-invertible, and "
                    "the z = 1 section folds back over itself: same direction, two radii.";
        e.notes = "phi is pinned by phi(0) = 0; other antiderivative offsets shift the section "
                  "profile, not the envelope construction.";
        e.constraint = bimodal_constraint();
        e.run = run_bimodal;
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "circle_relation";
        e.summary = "Coefficients on the circle (a-1)^2 + (b-1)^2 = 1 envelope both sheets of "
                    "z^2 = 2xz + 2yz - 2xy.";
        e.notes = "Sheets are identified by branch height at a = 1 rather than enumeration "
                  "order, which is tie-prone at the turning points.";
        e.constraint = circle_constraint();
        e.expected = Surface{ImplicitLevelSet{circle_quadric()}};
        e.run = run_circle;
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "tilted_cone";
        e.summary = "Tangent planes a = cos(t)/D, b = sin(t)/D, D = 1 + cos t + sin t sweep "
                    "the cone (x - z)^2 + (y - z)^2 = z^2.";
        e.notes = "The sign pair (+cos, +sin) is forced by tangency: the flipped variant "
                  "(-cos t/D, -sin t/D) looks equally plausible but sends the t = 0 "
                  "characteristic to (-2, -1, 1), which misses the cone. It is kept as a "
                  "negative tangency check.";
        e.constraint = tilted_cone_constraint();
        e.expected = Surface{ImplicitLevelSet{cone_quadric()}};
        e.run = run_tilted_cone;
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "chojnacki_cusp";
        e.summary = "Inverse contact map m = (3x^2/y^2, -2x^3/y^3) rebuilds z = x^3/y^2; its "
                    "slope profile (3t^2, -2t^3) has a cusp at t = 0.";
        e.constraint = chojnacki_map();
        e.expected = Surface{ImplicitLevelSet{[](const Point3& p) {
            return p.z * p.y * p.y - p.x * p.x * p.x;
        }}};
        e.run = run_chojnacki;
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "neg_quadratic";
        e.summary = "phi = -a^2/2 gives z = x^2/(2y): invertible slope map, single-valued "
                    "section - the contrast case to bimodal_spline.";
        e.constraint = FunctionOfA{[](double a) { return -0.5 * a * a; },
                                   [](double a) { return -a; },
                                   {-5.0, 5.0}};
        e.expected = Surface{ImplicitLevelSet{[](const Point3& p) {
            return 2.0 * p.y * p.z - p.x * p.x;
        }}};
        e.run = run_neg_quadratic;
        out.push_back(std::move(e));
    }

    return out;
}

} // namespace

// ---------------------------------------------------------------------------
// Shared ingredients.

RealFn bimodal_phi_prime() {
    return [](double a) {
        const auto bump = [](double u) {
            const double t = u * u - 1.0;
            return t * t;
        };
        if (a <= 0.0 || a >= 4.0) return 0.0;
        if (a <= 1.0) return bump(a - 1.0);
        if (a <= 2.0) return 0.5 * bump(a - 1.0) + 0.5;
        if (a <= 3.0) return 0.5 * bump(a - 3.0) + 0.5;
        return bump(a - 3.0);
    };
}

RealFn bimodal_phi() {
    // Knot-split quadrature: cached full-piece integrals plus a partial piece,
    // so no Simpson panel ever straddles a knot.
    static const std::array<double, 5> cum = [] {
        std::array<double, 5> c{};
        const RealFn s = bimodal_phi_prime();
        const ToleranceConfig qc{};
        for (int k = 0; k < 4; ++k)
            c[k + 1] = c[k] + integrate(s, static_cast<double>(k), k + 1.0, qc);
        return c;
    }();
    return [](double a) -> double {
        if (a <= 0.0) return 0.0;
        if (a >= 4.0) return cum[4];
        const int k = std::min(3, static_cast<int>(a));
        double v = cum[k];
        if (a > static_cast<double>(k))
            v += integrate(bimodal_phi_prime(), static_cast<double>(k), a, ToleranceConfig{});
        return v;
    };
}

FunctionOfA bimodal_constraint() {
    return {bimodal_phi(), bimodal_phi_prime(), {-0.1, 4.1}};
}

ImplicitRelation circle_constraint() {
    return {[](double a, double b) {
                const double u = a - 1.0, v = b - 1.0;
                return u * u + v * v - 1.0;
            },
            {-0.25, 2.25},
            {-0.25, 2.25}};
}

ParametricCurve tilted_cone_constraint() {
    ParametricCurve c;
    c.g = [](double t) {
        const double d = 1.0 + std::cos(t) + std::sin(t);
        return Point2{std::cos(t) / d, std::sin(t) / d};
    };
    c.g_prime = [](double t) {
        const double d = 1.0 + std::cos(t) + std::sin(t);
        const double d2 = d * d;
        return Point2{-(1.0 + std::sin(t)) / d2, (1.0 + std::cos(t)) / d2};
    };
    c.theta_domain = {-kPi, kPi};
    c.excluded = {kPi, -kPi / 2.0};
    c.excluded_radius = 1e-3;
    c.wrap = true;
    return c;
}

ParametricCurve tilted_cone_constraint_flipped() {
    ParametricCurve c = tilted_cone_constraint();
    const auto g = c.g;
    const auto gp = c.g_prime;
    c.g = [g](double t) {
        const Point2 p = g(t);
        return Point2{-p.x, -p.y};
    };
    c.g_prime = [gp](double t) {
        const Point2 p = gp(t);
        return Point2{-p.x, -p.y};
    };
    return c;
}

InverseMap chojnacki_map() {
    return {[](double x, double y) {
                return Point2{3.0 * x * x / (y * y), -2.0 * x * x * x / (y * y * y)};
            },
            {{-2.0, 2.0}, {0.25, 4.0}}};
}

Field3 cone_quadric() {
    return [](const Point3& p) {
        const double u = p.x - p.z, v = p.y - p.z;
        return u * u + v * v - p.z * p.z;
    };
}

Field3 circle_quadric() {
    return [](const Point3& p) {
        return p.z * p.z - 2.0 * p.x * p.z - 2.0 * p.y * p.z + 2.0 * p.x * p.y;
    };
}

// ---------------------------------------------------------------------------
// Suite plumbing.

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

std::vector<std::string> catalog_list() {
    std::vector<std::string> names;
    for (const auto& e : catalog()) names.push_back(e.name);
    return names;
}

const CatalogEntry& catalog_get(const std::string& name) {
    for (const auto& e : catalog())
        if (e.name == name) return e;
    std::string msg = "unknown catalog entry '" + name + "'; known entries:";
    for (const auto& e : catalog()) msg += " " + e.name;
    throw UnknownEntryError(msg);
}

EntryReport catalog_run(const std::string& name, const std::string& out_dir,
                        const ToleranceConfig& cfg, Exec exec) {
    const CatalogEntry& e = catalog_get(name);
    try {
        return e.run(out_dir, cfg, exec);
    } catch (const Error& err) {
        EntryReport rep;
        rep.name = e.name;
        rep.checks.push_back(expect("entry completed without throwing", false, err.what()));
        finalize(rep);
        return rep;
    }
}

std::vector<EntryReport> catalog_run_all(const std::string& out_dir, const ToleranceConfig& cfg,
                                         Exec exec) {
    std::vector<EntryReport> reps;
    for (const auto& e : catalog()) reps.push_back(catalog_run(e.name, out_dir, cfg, exec));
    return reps;
}

std::string report_json(const EntryReport& rep) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : rep.checks)
        checks.push_back({{"name", c.name},
                          {"passed", c.passed},
                          {"measured", c.measured},
                          {"threshold", c.threshold},
                          {"detail", c.detail}});
    // Artifacts are recorded by filename so the report does not depend on
    // where the run happened to write them.
    nlohmann::json artifacts = nlohmann::json::array();
    for (const auto& a : rep.artifacts)
        artifacts.push_back(std::filesystem::path(a).filename().string());
    const nlohmann::json j{{"name", rep.name},
                           {"passed", rep.passed},
                           {"checks", checks},
                           {"artifacts", artifacts}};
    return j.dump();
}

} // namespace clairaut
