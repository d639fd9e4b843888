// Command-line front end: envelope construction, residual verification,
// discriminant classification, z = 1 sections, and the built-in example
// suite. Exit codes: 0 success, 1 check failure, 2 usage or spec error.
// Errors go to stderr as single-line JSON records.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <limits>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "clairaut/analysis.hpp"
#include "clairaut/catalog.hpp"
#include "clairaut/csvio.hpp"
#include "clairaut/envelope.hpp"
#include "clairaut/errors.hpp"
#include "clairaut/expr.hpp"
#include "clairaut/families.hpp"
#include "clairaut/verify.hpp"

namespace {

using namespace clairaut;
using nlohmann::json;

// ---------------------------------------------------------------------------
// Small parsing helpers.

GridSpec parse_range(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text) {
        if (ch == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    if (parts.size() != 3)
        throw SpecError("range '" + text + "' must look like lo:hi:count");
    try {
        std::size_t used = 0;
        const double lo = std::stod(parts[0], &used);
        if (used != parts[0].size()) throw std::invalid_argument(parts[0]);
        const double hi = std::stod(parts[1], &used);
        if (used != parts[1].size()) throw std::invalid_argument(parts[1]);
        const int count = std::stoi(parts[2], &used);
        if (used != parts[2].size()) throw std::invalid_argument(parts[2]);
        if (count < 1) throw SpecError("range '" + text + "' needs count >= 1");
        return {lo, hi, count};
    } catch (const SpecError&) {
        throw;
    } catch (const std::exception&) {
        throw SpecError("range '" + text + "' must look like lo:hi:count");
    }
}

Expr parse_expr(const std::string& text, const std::set<std::string>& allowed,
                const std::string& what) {
    Expr e;
    try {
        e = Expr::parse(text);
    } catch (const ParseError& pe) {
        throw SpecError(what + ": " + pe.what());
    }
    for (const auto& v : e.free_vars())
        if (!allowed.count(v)) {
            std::string names;
            for (const auto& a : allowed) names += (names.empty() ? "" : ", ") + a;
            throw SpecError(what + ": unknown variable '" + v + "' (allowed: " + names + ")");
        }
    return e;
}

RealFn fn_of(const Expr& e, const std::string& var) {
    return [e, var](double v) { return e.eval({{var, v}}); };
}

RealFn2 fn2_of(const Expr& e, const std::string& v1, const std::string& v2) {
    return [e, v1, v2](double a, double b) { return e.eval({{v1, a}, {v2, b}}); };
}

Field3 field_of(const Expr& e) {
    return [e](const Point3& p) {
        return e.eval({{"x", p.x}, {"y", p.y}, {"z", p.z}});
    };
}

void require_keys(const json& j, const std::set<std::string>& allowed,
                  const std::string& where) {
    if (!j.is_object()) throw SpecError(where + " must be a JSON object");
    for (const auto& item : j.items())
        if (!allowed.count(item.key()))
            throw SpecError("unknown key '" + item.key() + "' in " + where);
}

Interval json_interval(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw SpecError(where + " must be [lo, hi]");
    return {j[0].get<double>(), j[1].get<double>()};
}

json diagnostics_json(const SampledSurface& s) {
    return json{{"source", s.source},
                {"attempted", s.diag.attempted},
                {"accepted", s.diag.accepted},
                {"skipped_no_bracket", s.diag.skipped_no_bracket},
                {"skipped_excluded", s.diag.skipped_excluded},
                {"skipped_degenerate", s.diag.skipped_degenerate},
                {"skipped_domain", s.diag.skipped_domain},
                {"rejected_residual", s.diag.rejected_residual}};
}

// ---------------------------------------------------------------------------
// envelope subcommand.

struct EnvelopeArgs {
    std::string spec_path;
    std::string phi, phi_prime;
    std::string a_range, y_range, a_domain;
    std::string out, json_out, section_out;
};

struct EnvelopeOutputs {
    std::string out, json_out, section_out;
};

int write_surface_outputs(const SampledSurface& s, const EnvelopeOutputs& paths) {
    if (!paths.out.empty()) atomic_write(paths.out, surface_csv(s));
    if (!paths.json_out.empty()) atomic_write(paths.json_out, surface_json(s) + "\n");
    if (!paths.section_out.empty()) {
        const auto sec = cross_section_z1(s, 1e-9);
        atomic_write(paths.section_out, points_csv(sec.points, "x,y"));
    }
    std::cout << diagnostics_json(s).dump() << "\n";
    return (s.diag.accepted > 0 && s.diag.rejected_residual == 0) ? 0 : 1;
}

FunctionOfA make_phi_constraint(const std::string& phi_text, const std::string& prime_text,
                                std::optional<Interval> domain, const GridSpec& a_grid) {
    FunctionOfA c;
    c.phi = fn_of(parse_expr(phi_text, {"a"}, "--phi"), "a");
    if (!prime_text.empty())
        c.phi_prime = fn_of(parse_expr(prime_text, {"a"}, "--phi-prime"), "a");
    if (domain) {
        c.a_domain = *domain;
    } else {
        // Pad the sampled range so finite-difference probes stay legal.
        const double pad =
            1e-3 * (1.0 + std::max(std::fabs(a_grid.lo), std::fabs(a_grid.hi)));
        c.a_domain = {std::min(a_grid.lo, a_grid.hi) - pad,
                      std::max(a_grid.lo, a_grid.hi) + pad};
    }
    return c;
}

int run_envelope_spec(const std::string& path, ToleranceConfig cfg, Exec exec);

int run_envelope(const EnvelopeArgs& args, const ToleranceConfig& cfg, Exec exec) {
    if (!args.spec_path.empty()) return run_envelope_spec(args.spec_path, cfg, exec);
    if (args.phi.empty())
        throw SpecError("envelope needs --phi (or a --spec file for the other "
                        "constraint kinds)");
    if (args.a_range.empty() || args.y_range.empty())
        throw SpecError("envelope --phi needs --a-range and --y-range");

    const GridSpec a_grid = parse_range(args.a_range);
    const GridSpec y_grid = parse_range(args.y_range);
    std::optional<Interval> domain;
    if (!args.a_domain.empty()) {
        const GridSpec d = parse_range(args.a_domain + ":2");
        domain = Interval{d.lo, d.hi};
    }
    const FunctionOfA c = make_phi_constraint(args.phi, args.phi_prime, domain, a_grid);

    const PlaneFamily fam{};
    const auto s = envelope_function_constraint(fam, c, a_grid, y_grid, cfg, exec);
    return write_surface_outputs(s, {args.out, args.json_out, args.section_out});
}

int run_envelope_spec(const std::string& path, ToleranceConfig cfg, Exec exec) {
    json doc;
    try {
        doc = json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        throw SpecError(std::string("spec file is not valid JSON: ") + e.what());
    }

    static const std::set<std::string> common{"constraint", "out",       "json_out",
                                              "section_out", "tolerances"};
    static const std::set<std::string> phi_keys{"phi", "phi_prime", "a_domain", "a_grid",
                                                "y_grid"};
    static const std::set<std::string> rel_keys{"rel",    "a_domain", "b_domain", "branch",
                                                "a_samples", "x_grid", "y_grid"};
    static const std::set<std::string> par_keys{"g_a",      "g_b",     "g_prime_a",
                                                "g_prime_b", "theta_domain", "theta_grid",
                                                "s_grid",   "excluded", "excluded_radius",
                                                "wrap"};
    static const std::set<std::string> map_keys{"m_a", "m_b", "xy_domain", "x_grid", "y_grid"};

    if (!doc.is_object() || !doc.contains("constraint") || !doc["constraint"].is_string())
        throw SpecError("spec needs a string field 'constraint' "
                        "(phi | relation | parametric | map)");
    const std::string kind = doc["constraint"].get<std::string>();

    std::set<std::string> allowed = common;
    const std::set<std::string>* extra = nullptr;
    if (kind == "phi") extra = &phi_keys;
    else if (kind == "relation") extra = &rel_keys;
    else if (kind == "parametric") extra = &par_keys;
    else if (kind == "map") extra = &map_keys;
    else throw SpecError("unknown constraint kind '" + kind + "'");
    allowed.insert(extra->begin(), extra->end());
    require_keys(doc, allowed, "spec");

    if (doc.contains("tolerances")) {
        const json& t = doc["tolerances"];
        require_keys(t, {"fd_step", "root_tol", "residual_tol", "quad_panels"},
                     "spec.tolerances");
        if (t.contains("fd_step")) cfg.fd_step = t["fd_step"].get<double>();
        if (t.contains("root_tol")) cfg.root_tol = t["root_tol"].get<double>();
        if (t.contains("residual_tol")) cfg.residual_tol = t["residual_tol"].get<double>();
        if (t.contains("quad_panels")) cfg.quad_panels = t["quad_panels"].get<int>();
    }

    const auto text = [&doc](const std::string& key, bool required) -> std::string {
        if (!doc.contains(key)) {
            if (required) throw SpecError("spec is missing '" + key + "'");
            return "";
        }
        if (!doc[key].is_string()) throw SpecError("spec '" + key + "' must be a string");
        return doc[key].get<std::string>();
    };
    const auto grid = [&](const std::string& key) { return parse_range(text(key, true)); };

    EnvelopeOutputs paths{text("out", false), text("json_out", false),
                          text("section_out", false)};
    const PlaneFamily fam{};

    if (kind == "phi") {
        const GridSpec a_grid = grid("a_grid");
        std::optional<Interval> domain;
        if (doc.contains("a_domain")) domain = json_interval(doc["a_domain"], "spec.a_domain");
        const FunctionOfA c =
            make_phi_constraint(text("phi", true), text("phi_prime", false), domain, a_grid);
        const auto s = envelope_function_constraint(fam, c, a_grid, grid("y_grid"), cfg, exec);
        return write_surface_outputs(s, paths);
    }

    if (kind == "relation") {
        ImplicitRelation rel;
        rel.rel = fn2_of(parse_expr(text("rel", true), {"a", "b"}, "spec.rel"), "a", "b");
        if (!doc.contains("a_domain") || !doc.contains("b_domain"))
            throw SpecError("relation spec needs 'a_domain' and 'b_domain'");
        rel.a_domain = json_interval(doc["a_domain"], "spec.a_domain");
        rel.b_domain = json_interval(doc["b_domain"], "spec.b_domain");
        const int samples = doc.contains("a_samples") ? doc["a_samples"].get<int>() : 64;
        const auto branches = enumerate_branches(rel, samples, cfg);
        const int branch = doc.contains("branch") ? doc["branch"].get<int>() : 0;
        if (branch < 0 || branch >= static_cast<int>(branches.size()))
            throw SpecError("spec 'branch' = " + std::to_string(branch) + " but the relation has " +
                            std::to_string(branches.size()) + " branch(es)");
        const auto pts = grid_points(grid("x_grid"), grid("y_grid"));
        const auto s = envelope_branch(fam, branches[branch], pts, cfg, exec);
        return write_surface_outputs(s, paths);
    }

    if (kind == "parametric") {
        ParametricCurve c;
        const Expr ga = parse_expr(text("g_a", true), {"t"}, "spec.g_a");
        const Expr gb = parse_expr(text("g_b", true), {"t"}, "spec.g_b");
        c.g = [ga, gb](double t) {
            return Point2{ga.eval({{"t", t}}), gb.eval({{"t", t}})};
        };
        if (doc.contains("g_prime_a") != doc.contains("g_prime_b"))
            throw SpecError("spec needs both 'g_prime_a' and 'g_prime_b', or neither");
        if (doc.contains("g_prime_a")) {
            const Expr da = parse_expr(text("g_prime_a", true), {"t"}, "spec.g_prime_a");
            const Expr db = parse_expr(text("g_prime_b", true), {"t"}, "spec.g_prime_b");
            c.g_prime = [da, db](double t) {
                return Point2{da.eval({{"t", t}}), db.eval({{"t", t}})};
            };
        }
        if (!doc.contains("theta_domain")) throw SpecError("parametric spec needs 'theta_domain'");
        c.theta_domain = json_interval(doc["theta_domain"], "spec.theta_domain");
        if (doc.contains("excluded")) {
            for (const auto& v : doc["excluded"]) c.excluded.push_back(v.get<double>());
        }
        if (doc.contains("excluded_radius"))
            c.excluded_radius = doc["excluded_radius"].get<double>();
        if (doc.contains("wrap")) c.wrap = doc["wrap"].get<bool>();
        std::vector<double> s_grid = kDefaultSGrid;
        if (doc.contains("s_grid")) {
            s_grid.clear();
            for (const auto& v : doc["s_grid"]) s_grid.push_back(v.get<double>());
        }
        const auto s = envelope_parametric_planes(fam, c, grid("theta_grid"), s_grid, cfg, exec);
        return write_surface_outputs(s, paths);
    }

    // kind == "map"
    InverseMap m;
    const Expr ma = parse_expr(text("m_a", true), {"x", "y"}, "spec.m_a");
    const Expr mb = parse_expr(text("m_b", true), {"x", "y"}, "spec.m_b");
    m.m = [ma, mb](double x, double y) {
        const Bindings b{{"x", x}, {"y", y}};
        return Point2{ma.eval(b), mb.eval(b)};
    };
    if (!doc.contains("xy_domain") || !doc["xy_domain"].is_array() ||
        doc["xy_domain"].size() != 2)
        throw SpecError("map spec needs 'xy_domain' = [[xlo, xhi], [ylo, yhi]]");
    m.xy_domain = {json_interval(doc["xy_domain"][0], "spec.xy_domain[0]"),
                   json_interval(doc["xy_domain"][1], "spec.xy_domain[1]")};
    const auto pts = grid_points(grid("x_grid"), grid("y_grid"));
    const auto s = envelope_inverse_map(fam, m, pts, cfg, exec);
    return write_surface_outputs(s, paths);
}

// ---------------------------------------------------------------------------
// verify subcommand.

struct VerifyArgs {
    std::string implicit_expr, explicit_expr;
    std::string points_path;
    std::string x_range, y_range;
    std::string out;
};

int run_verify(const VerifyArgs& args, const ToleranceConfig& cfg, Exec exec) {
    if (args.implicit_expr.empty() == args.explicit_expr.empty())
        throw SpecError("verify needs exactly one of --implicit or --explicit");

    json report;
    double max_abs = 0.0;

    if (!args.implicit_expr.empty()) {
        if (args.points_path.empty()) throw SpecError("verify --implicit needs --points");
        const ImplicitLevelSet surf{
            field_of(parse_expr(args.implicit_expr, {"x", "y", "z"}, "--implicit"))};
        const auto cloud = read_surface_csv(read_file(args.points_path));
        const auto rep = implicit_membership(surf, positions(cloud), cfg, exec);
        max_abs = rep.max_abs;
        report = json{{"kind", "implicit_membership"},
                      {"max_abs", rep.max_abs},
                      {"mean_abs", rep.mean_abs},
                      {"n_evaluated", rep.n_evaluated},
                      {"n_skipped", rep.n_skipped},
                      {"worst_point", {rep.worst_point.x, rep.worst_point.y, rep.worst_point.z}},
                      {"tol", cfg.residual_tol}};
    } else {
        const ExplicitGraph g{
            fn2_of(parse_expr(args.explicit_expr, {"x", "y"}, "--explicit"), "x", "y")};
        std::vector<Point2> pts;
        if (!args.points_path.empty()) {
            const auto cloud = read_surface_csv(read_file(args.points_path));
            for (const auto& q : cloud.points) pts.push_back({q.p.x, q.p.y});
        } else if (!args.x_range.empty() && !args.y_range.empty()) {
            pts = grid_points(parse_range(args.x_range), parse_range(args.y_range));
        } else {
            throw SpecError("verify --explicit needs --points or both --x-range and --y-range");
        }
        double mean = 0.0;
        int evaluated = 0, skipped = 0;
        Point2 worst{};
        for (const auto& q : pts) {
            double r = 0.0;
            try {
                r = std::fabs(clairaut_residual_explicit(g, q, {}, cfg));
            } catch (const Error&) {
                ++skipped;
                continue;
            }
            ++evaluated;
            mean += r;
            if (r > max_abs) {
                max_abs = r;
                worst = q;
            }
        }
        if (evaluated > 0) mean /= evaluated;
        report = json{{"kind", "equation_residual"},
                      {"max_abs", max_abs},
                      {"mean_abs", mean},
                      {"n_evaluated", evaluated},
                      {"n_skipped", skipped},
                      {"worst_point", {worst.x, worst.y}},
                      {"tol", cfg.residual_tol}};
        if (evaluated == 0) max_abs = std::numeric_limits<double>::infinity();
    }

    const std::string line = report.dump() + "\n";
    if (!args.out.empty()) atomic_write(args.out, line);
    std::cout << line;
    return max_abs <= cfg.residual_tol ? 0 : 1;
}

// ---------------------------------------------------------------------------
// classify subcommand.

struct ClassifyArgs {
    std::string family_expr;
    std::string candidates_path;
    std::string out;
};

std::vector<std::pair<Point2, double>> read_candidates_csv(const std::string& content) {
    std::istringstream in(content);
    std::string line;
    if (!std::getline(in, line)) throw Error("candidates CSV is empty");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "x,y,a")
        throw Error("candidates CSV must start with the header x,y,a, got '" + line + "'");
    std::vector<std::pair<Point2, double>> cands;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string cell;
        std::vector<double> vals;
        while (std::getline(row, cell, ',')) {
            try {
                std::size_t used = 0;
                vals.push_back(std::stod(cell, &used));
                if (used != cell.size()) throw std::invalid_argument(cell);
            } catch (const std::exception&) {
                throw Error("candidates CSV line " + std::to_string(lineno) + ": bad number '" +
                            cell + "'");
            }
        }
        if (vals.size() != 3)
            throw Error("candidates CSV line " + std::to_string(lineno) + ": want 3 fields, got " +
                        std::to_string(vals.size()));
        cands.push_back({{vals[0], vals[1]}, vals[2]});
    }
    return cands;
}

const char* label_name(LocusLabel l) {
    switch (l) {
        case LocusLabel::Envelope: return "Envelope";
        case LocusLabel::SingularLocus: return "SingularLocus";
        case LocusLabel::Cusp: return "Cusp";
        default: return "Indeterminate";
    }
}

int run_classify(const ClassifyArgs& args, const ToleranceConfig& cfg, Exec) {
    if (args.family_expr.empty() || args.candidates_path.empty())
        throw SpecError("classify needs --family and --candidates");
    const Expr fe = parse_expr(args.family_expr, {"x", "y", "a"}, "--family");
    const CurveFamilyFn f = [fe](double x, double y, double a) {
        return fe.eval({{"x", x}, {"y", y}, {"a", a}});
    };
    const auto cands = read_candidates_csv(read_file(args.candidates_path));
    const auto verdicts = classify_locus(f, cands, cfg);

    json rows = json::array();
    for (const auto& v : verdicts)
        rows.push_back(json{{"x", v.p.x},
                            {"y", v.p.y},
                            {"a", v.param},
                            {"label", label_name(v.label)},
                            {"grad", {v.grad_family.x, v.grad_family.y}},
                            {"window_scale", v.window_scale}});
    const std::string text = rows.dump() + "\n";
    if (!args.out.empty()) atomic_write(args.out, text);
    std::cout << text;
    return 0;
}

// ---------------------------------------------------------------------------
// cross-section subcommand.

struct SectionArgs {
    std::string points_path;
    std::string out;
    double eps = 1e-9;
};

int run_section(const SectionArgs& args, const ToleranceConfig&, Exec) {
    if (args.points_path.empty() || args.out.empty())
        throw SpecError("cross-section needs --points and --out");
    const auto cloud = read_surface_csv(read_file(args.points_path));
    const auto sec = cross_section_z1(cloud, args.eps);
    atomic_write(args.out, points_csv(sec.points, "x,y"));
    std::cout << json{{"kept", static_cast<int>(sec.points.size())}, {"dropped", sec.dropped}}
                     .dump()
              << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// catalog subcommand.

struct CatalogArgs {
    bool list = false;
    bool run_all = false;
    std::string run_name;
    std::string out_dir;
};

int run_catalog(const CatalogArgs& args, const ToleranceConfig& cfg, Exec exec) {
    const int modes = (args.list ? 1 : 0) + (args.run_all ? 1 : 0) +
                      (args.run_name.empty() ? 0 : 1);
    if (modes != 1)
        throw SpecError("catalog needs exactly one of --list, --run NAME, --run-all");

    if (args.list) {
        for (const auto& name : catalog_list()) std::cout << name << "\n";
        return 0;
    }

    std::string out_dir = args.out_dir;
    if (out_dir.empty()) {
        if (const char* env = std::getenv("CLAIRAUT_OUT_DIR")) out_dir = env;
    }
    if (out_dir.empty()) out_dir = "catalog_out";

    std::vector<EntryReport> reports;
    if (args.run_all) {
        reports = catalog_run_all(out_dir, cfg, exec);
    } else {
        reports.push_back(catalog_run(args.run_name, out_dir, cfg, exec));
    }

    bool all_ok = true;
    for (const auto& rep : reports) {
        all_ok = all_ok && rep.passed;
        int failed = 0;
        std::string first_fail;
        for (const auto& c : rep.checks)
            if (!c.passed) {
                ++failed;
                if (first_fail.empty()) first_fail = c.name;
            }
        if (rep.passed) {
            std::cout << "PASS " << rep.name << " (" << rep.checks.size() << " checks)\n";
        } else {
            std::cout << "FAIL " << rep.name << " (" << failed << " of " << rep.checks.size()
                      << " checks failed; first: " << first_fail << ")\n";
        }
    }
    std::cout << (all_ok ? "OK" : "FAILED") << " " << reports.size() << " entr"
              << (reports.size() == 1 ? "y" : "ies") << ", artifacts in " << out_dir << "\n";
    return all_ok ? 0 : 1;
}

// ---------------------------------------------------------------------------

void print_error(const std::string& kind, const std::string& what) {
    std::cerr << json{{"error", what}, {"kind", kind}}.dump() << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Singular integrals of x z_x + y z_y = z: envelope construction, "
                 "verification, and the worked-example suite"};
    app.require_subcommand(0, 1);

    ToleranceConfig cfg;
    bool serial = false;
    app.add_option("--fd-step", cfg.fd_step, "relative finite-difference step");
    app.add_option("--root-tol", cfg.root_tol, "root acceptance tolerance");
    app.add_option("--residual-tol", cfg.residual_tol, "residual acceptance tolerance");
    app.add_option("--quad-panels", cfg.quad_panels, "Simpson panel count (even)");
    app.add_flag("--serial", serial, "run single-threaded");

    EnvelopeArgs env_args;
    auto* env_cmd = app.add_subcommand("envelope", "construct an envelope point cloud");
    env_cmd->add_option("--spec", env_args.spec_path, "FamilySpec JSON file");
    env_cmd->add_option("--phi", env_args.phi, "constraint b = phi(a), expression in a");
    env_cmd->add_option("--phi-prime", env_args.phi_prime, "analytic phi'(a), optional");
    env_cmd->add_option("--a-range", env_args.a_range, "parameter grid lo:hi:count");
    env_cmd->add_option("--y-range", env_args.y_range, "y grid lo:hi:count");
    env_cmd->add_option("--a-domain", env_args.a_domain, "phi domain lo:hi (default: padded range)");
    env_cmd->add_option("--out", env_args.out, "CSV output path");
    env_cmd->add_option("--json", env_args.json_out, "JSON mirror output path");
    env_cmd->add_option("--section", env_args.section_out, "z = 1 section CSV path");

    VerifyArgs ver_args;
    auto* ver_cmd = app.add_subcommand("verify", "residual checks for a candidate surface");
    ver_cmd->add_option("--implicit", ver_args.implicit_expr, "level set F(x,y,z)");
    ver_cmd->add_option("--explicit", ver_args.explicit_expr, "graph h(x,y)");
    ver_cmd->add_option("--points", ver_args.points_path, "surface CSV to check");
    ver_cmd->add_option("--x-range", ver_args.x_range, "x grid lo:hi:count (explicit mode)");
    ver_cmd->add_option("--y-range", ver_args.y_range, "y grid lo:hi:count (explicit mode)");
    ver_cmd->add_option("--out", ver_args.out, "also write the JSON report here");

    ClassifyArgs cls_args;
    auto* cls_cmd = app.add_subcommand("classify", "label discriminant candidates");
    cls_cmd->add_option("--family", cls_args.family_expr, "curve family f(x,y,a)");
    cls_cmd->add_option("--candidates", cls_args.candidates_path, "CSV with header x,y,a");
    cls_cmd->add_option("--out", cls_args.out, "also write the JSON verdicts here");

    SectionArgs sec_args;
    auto* sec_cmd = app.add_subcommand("cross-section", "z = 1 section of a surface CSV");
    sec_cmd->add_option("--points", sec_args.points_path, "surface CSV input");
    sec_cmd->add_option("--out", sec_args.out, "section CSV output");
    sec_cmd->add_option("--eps", sec_args.eps, "drop points with |z| <= eps");

    CatalogArgs cat_args;
    auto* cat_cmd = app.add_subcommand("catalog", "built-in worked-example suite");
    cat_cmd->add_flag("--list", cat_args.list, "list entry names");
    cat_cmd->add_option("--run", cat_args.run_name, "run one entry");
    cat_cmd->add_flag("--run-all", cat_args.run_all, "run every entry");
    cat_cmd->add_option("--out-dir", cat_args.out_dir,
                        "artifact directory (default: $CLAIRAUT_OUT_DIR or catalog_out)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        print_error("usage", e.what());
        return 2;
    }

    const Exec exec = serial ? Exec::serial : Exec::parallel;
    try {
        if (*env_cmd) return run_envelope(env_args, cfg, exec);
        if (*ver_cmd) return run_verify(ver_args, cfg, exec);
        if (*cls_cmd) return run_classify(cls_args, cfg, exec);
        if (*sec_cmd) return run_section(sec_args, cfg, exec);
        if (*cat_cmd) return run_catalog(cat_args, cfg, exec);
        print_error("usage", "missing subcommand (envelope, verify, classify, "
                             "cross-section, catalog); see --help");
        return 2;
    } catch (const SpecError& e) {
        print_error("spec", e.what());
        return 2;
    } catch (const Error& e) {
        print_error("error", e.what());
        return 2;
    } catch (const std::exception& e) {
        print_error("internal", e.what());
        return 2;
    }
}
