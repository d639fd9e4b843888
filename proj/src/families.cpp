#include "clairaut/families.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

namespace clairaut {

Plane plane_at(const PlaneFamily& fam, double a, double b) {
    return {a, b, fam.tilt_at(a, b)};
}

// --------------------------------------------------------------- resolve

namespace {

double wrap_distance(double theta, double target, const Interval& dom, bool wrap) {
    double d = std::fabs(theta - target);
    if (!wrap) return d;
    const double period = dom.width();
    d = std::fmod(d, period);
    return std::min(d, period - d);
}

} // namespace

bool ParametricCurve::excluded_at(double theta) const {
    for (double e : excluded)
        if (wrap_distance(theta, e, theta_domain, wrap) < excluded_radius) return true;
    return false;
}

Point2 resolve(const ConstraintCurve& c, double param, const ToleranceConfig&) {
    if (const auto* fn = std::get_if<FunctionOfA>(&c)) {
        if (!fn->a_domain.contains(param))
            throw OutOfDomainError("a = " + std::to_string(param) + " outside [" +
                                   std::to_string(fn->a_domain.lo) + ", " +
                                   std::to_string(fn->a_domain.hi) + "]");
        return {param, fn->phi(param)};
    }
    if (const auto* pc = std::get_if<ParametricCurve>(&c)) {
        if (!pc->theta_domain.contains(param))
            throw OutOfDomainError("theta = " + std::to_string(param) + " outside the domain");
        if (pc->excluded_at(param))
            throw ExcludedParameterError("theta = " + std::to_string(param) +
                                         " lies in an excluded neighborhood");
        return pc->g(param);
    }
    throw Error("scalar resolve needs a FunctionOfA or ParametricCurve constraint");
}

Point2 resolve(const ConstraintCurve& c, const Point2& xy, const ToleranceConfig&) {
    if (const auto* im = std::get_if<InverseMap>(&c)) {
        if (!im->xy_domain.contains(xy.x, xy.y))
            throw OutOfDomainError("(x, y) = (" + std::to_string(xy.x) + ", " +
                                   std::to_string(xy.y) + ") outside the map domain");
        return im->m(xy.x, xy.y);
    }
    throw Error("point resolve needs an InverseMap constraint");
}

// --------------------------------------------------------------- branches

namespace detail {

struct BranchData {
    RealFn2 rel;
    Interval b_domain;
    std::vector<double> a;  // ascending
    std::vector<double> b;
    bool turning_lo = false;
    bool turning_hi = false;
    double slope_lo = 0.0;
    double slope_hi = 0.0;
    bool vertical_lo = false;
    bool vertical_hi = false;

    double psi(double a_at) const;
};

namespace {

// Tolerances used when pinning roots of the relation itself. Much tighter
// than the user-facing root_tol: psi gets differenced with steps ~1e-6, so
// solver noise in psi has to sit well below 1e-12 to keep d(psi)/da quiet.
ToleranceConfig tight_root_cfg(const ToleranceConfig& cfg) {
    ToleranceConfig t = cfg;
    t.root_tol = 1e-15;
    return t;
}

// All roots of v(b) = rel(a_fixed, b) on [blo, bhi], found by a fixed-size
// scan: exact zeros at the nodes plus one find_root per strict sign change.
std::vector<double> scan_roots(const RealFn2& rel, double a_fixed, double blo, double bhi,
                               int cells, const ToleranceConfig& tight) {
    std::vector<double> values(cells + 1);
    for (int j = 0; j <= cells; ++j)
        values[j] = rel(a_fixed, blo + (bhi - blo) * (static_cast<double>(j) / cells));
    std::vector<double> roots;
    for (int j = 0; j <= cells; ++j)
        if (values[j] == 0.0) roots.push_back(blo + (bhi - blo) * (static_cast<double>(j) / cells));
    for (int j = 0; j < cells; ++j) {
        if (values[j] * values[j + 1] < 0.0) {
            const double cl = blo + (bhi - blo) * (static_cast<double>(j) / cells);
            const double cr = blo + (bhi - blo) * (static_cast<double>(j + 1) / cells);
            roots.push_back(find_root([&](double b) { return rel(a_fixed, b); }, cl, cr, tight));
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

// Newton, with finite-difference derivatives, for the nearest critical point
// of b -> rel(a_fixed, b). Near a turning point of the constraint the root
// pair sits closer than any fixed scan resolves, but the extremum between
// the two roots stays perfectly conditioned.
std::optional<double> critical_b(const RealFn2& rel, double a_fixed, double guess,
                                 double max_move) {
    double bc = guess;
    for (int it = 0; it < 40; ++it) {
        const double h = 1e-6 * (1.0 + std::fabs(bc));
        const double fp = rel(a_fixed, bc + h);
        const double f0 = rel(a_fixed, bc);
        const double fm = rel(a_fixed, bc - h);
        const double d2 = (fp - 2.0 * f0 + fm) / (h * h);
        if (d2 == 0.0 || !std::isfinite(d2)) return std::nullopt;
        const double step = -(fp - fm) / (2.0 * h) / d2;
        if (!std::isfinite(step) || std::fabs(bc + step - guess) > max_move) return std::nullopt;
        bc += step;
        if (std::fabs(step) <= 1e-10 * (1.0 + std::fabs(bc))) return bc;
    }
    return std::nullopt;
}

constexpr int kColumnScanCells = 256;
constexpr int kLocalScanCells = 64;

} // namespace

double BranchData::psi(double a_at) const {
    const double slack_lo = 1e-9 * (1.0 + std::fabs(a.front()));
    const double slack_hi = 1e-9 * (1.0 + std::fabs(a.back()));
    if (a_at < a.front() - slack_lo || a_at > a.back() + slack_hi)
        throw OutOfDomainError("a = " + std::to_string(a_at) + " outside branch interval [" +
                               std::to_string(a.front()) + ", " + std::to_string(a.back()) + "]");

    // Segment lookup + linear guess from the stored polyline.
    std::size_t i = std::upper_bound(a.begin(), a.end(), a_at) - a.begin();
    if (i == 0) i = 1;
    if (i >= a.size()) i = a.size() - 1;
    const double a0 = a[i - 1], a1 = a[i], b0 = b[i - 1], b1 = b[i];
    const double t = a1 == a0 ? 0.0 : (a_at - a0) / (a1 - a0);
    const double guess = b0 + (b1 - b0) * t;
    if (a_at == a0) return b0;
    if (a_at == a1) return b1;

    // Local window sized from the neighboring polyline steps; expand a few
    // times if the relation wandered further than the polyline suggests.
    double w = std::fabs(b1 - b0);
    if (i >= 2) w = std::max(w, std::fabs(b[i - 1] - b[i - 2]));
    if (i + 1 < b.size()) w = std::max(w, std::fabs(b[i + 1] - b[i]));
    w = std::max(4.0 * w, 4.0 * b_domain.width() / kColumnScanCells);

    const ToleranceConfig tight = tight_root_cfg({});
    for (int attempt = 0; attempt < 6; ++attempt) {
        auto roots = scan_roots(rel, a_at, guess - w, guess + w, kLocalScanCells, tight);
        if (roots.empty()) {
            // Near a turning point the root pair hides between scan nodes and
            // widening the window only coarsens the scan. Chase the extremum
            // separating the pair instead and bracket each root against it.
            if (const auto bc = critical_b(rel, a_at, guess, w)) {
                try {
                    const double vc = rel(a_at, *bc);
                    if (vc == 0.0) return *bc;
                    const double h = 1e-6 * (1.0 + std::fabs(*bc));
                    const double d2 =
                        (rel(a_at, *bc + h) - 2.0 * vc + rel(a_at, *bc - h)) / (h * h);
                    if (vc * d2 < 0.0) {
                        double span = 2.0 * std::sqrt(-2.0 * vc / d2);
                        for (int grow = 0; grow < 4 && roots.empty(); ++grow, span *= 2.0) {
                            if (rel(a_at, *bc - span) * vc < 0.0)
                                roots.push_back(find_root(
                                    [&](double b) { return rel(a_at, b); }, *bc - span, *bc,
                                    tight));
                            if (rel(a_at, *bc + span) * vc < 0.0)
                                roots.push_back(find_root(
                                    [&](double b) { return rel(a_at, b); }, *bc, *bc + span,
                                    tight));
                        }
                    }
                } catch (const Error&) {
                }
            }
        }
        if (!roots.empty()) {
            double best = roots.front();
            for (double r : roots)
                if (std::fabs(r - guess) < std::fabs(best - guess)) best = r;
            return best;
        }
        w *= 2.0;
    }
    throw NoRootsError("branch lost the relation root near a = " + std::to_string(a_at));
}

} // namespace detail

double Branch::psi(double a) const { return data_->psi(a); }
Interval Branch::a_interval() const { return {data_->a.front(), data_->a.back()}; }
bool Branch::turning_lo() const { return data_->turning_lo; }
bool Branch::turning_hi() const { return data_->turning_hi; }
double Branch::end_slope(bool hi_end) const { return hi_end ? data_->slope_hi : data_->slope_lo; }
bool Branch::vertical_end(bool hi_end) const {
    return hi_end ? data_->vertical_hi : data_->vertical_lo;
}
const std::vector<double>& Branch::sample_a() const { return data_->a; }
const std::vector<double>& Branch::sample_b() const { return data_->b; }

namespace {

struct Proto {
    std::vector<double> a;
    std::vector<double> b;
    int first_col = 0;
    int last_col = 0;
};

// Does rel(a, .) still have a root near tail_b? Returns the nearest root when
// it does. Used to bisect a dying branch down to its turning point.
std::optional<double> root_near(const RealFn2& rel, double a, double tail_b, double w,
                                const ToleranceConfig& tight) {
    const auto roots =
        detail::scan_roots(rel, a, tail_b - w, tail_b + w, detail::kLocalScanCells, tight);
    if (roots.empty()) return std::nullopt;
    double best = roots.front();
    for (double r : roots)
        if (std::fabs(r - tail_b) < std::fabs(best - tail_b)) best = r;
    return best;
}

} // namespace

std::vector<Branch> enumerate_branches(const ImplicitRelation& c, int a_samples,
                                       const ToleranceConfig& cfg) {
    if (a_samples < 2) throw Error("enumerate_branches needs a_samples >= 2");
    const ToleranceConfig tight = [&] {
        ToleranceConfig t = cfg;
        t.root_tol = 1e-15;
        return t;
    }();

    // Column scan.
    std::vector<double> columns(a_samples);
    std::vector<std::vector<double>> roots(a_samples);
    std::vector<double> gaps;
    for (int k = 0; k < a_samples; ++k) {
        columns[k] =
            c.a_domain.lo + c.a_domain.width() * (static_cast<double>(k) / (a_samples - 1));
        roots[k] = detail::scan_roots(c.rel, columns[k], c.b_domain.lo, c.b_domain.hi,
                                      detail::kColumnScanCells, tight);
        for (std::size_t j = 1; j < roots[k].size(); ++j)
            gaps.push_back(roots[k][j] - roots[k][j - 1]);
    }

    // Jump cap: 10x the median intra-column root spacing; +inf when no column
    // ever saw two roots.
    double cap = std::numeric_limits<double>::infinity();
    if (!gaps.empty()) {
        std::sort(gaps.begin(), gaps.end());
        cap = 10.0 * gaps[gaps.size() / 2];
    }

    // Thread roots into branches, nearest neighbor first.
    std::vector<Proto> protos;
    for (int k = 0; k < a_samples; ++k) {
        struct Pair {
            double dist;
            std::size_t proto;
            std::size_t root;
        };
        std::vector<Pair> pairs;
        for (std::size_t p = 0; p < protos.size(); ++p) {
            if (protos[p].last_col != k - 1) continue;  // already closed
            for (std::size_t r = 0; r < roots[k].size(); ++r)
                pairs.push_back({std::fabs(protos[p].b.back() - roots[k][r]), p, r});
        }
        std::sort(pairs.begin(), pairs.end(), [](const Pair& l, const Pair& r) {
            if (l.dist != r.dist) return l.dist < r.dist;
            if (l.proto != r.proto) return l.proto < r.proto;
            return l.root < r.root;
        });
        std::vector<bool> proto_used(protos.size(), false);
        std::vector<bool> root_used(roots[k].size(), false);
        for (const Pair& pr : pairs) {
            if (pr.dist > cap || proto_used[pr.proto] || root_used[pr.root]) continue;
            proto_used[pr.proto] = true;
            root_used[pr.root] = true;
            protos[pr.proto].a.push_back(columns[k]);
            protos[pr.proto].b.push_back(roots[k][pr.root]);
            protos[pr.proto].last_col = k;
        }
        for (std::size_t r = 0; r < roots[k].size(); ++r) {
            if (root_used[r]) continue;
            Proto np;
            np.a.push_back(columns[k]);
            np.b.push_back(roots[k][r]);
            np.first_col = k;
            np.last_col = k;
            protos.push_back(std::move(np));
        }
    }

    // Endpoint refinement: a branch that starts or dies strictly inside the
    // domain is bisected down to the parameter value where its root pair
    // merges (the turning point of the relation).
    struct Refined {
        bool turned = false;
        double a_end = 0.0;
        double b_end = 0.0;
    };
    auto refine_end = [&](const Proto& p, bool hi_end) -> Refined {
        const int col = hi_end ? p.last_col : p.first_col;
        const int beyond = hi_end ? col + 1 : col - 1;
        if (beyond < 0 || beyond >= a_samples) return {};
        const double tail_b = hi_end ? p.b.back() : p.b.front();
        double step = p.a.size() >= 2
                          ? std::fabs(hi_end ? p.b.back() - p.b[p.b.size() - 2]
                                             : p.b.front() - p.b[1])
                          : 0.0;
        const double w =
            std::max(4.0 * step, 4.0 * c.b_domain.width() / detail::kColumnScanCells);
        double good = columns[col];
        double good_b = tail_b;
        double bad = columns[beyond];
        while (std::fabs(bad - good) > 1e-13 * (1.0 + std::fabs(good))) {
            const double mid = 0.5 * (good + bad);
            if (auto r = root_near(c.rel, mid, tail_b, w, tight)) {
                good = mid;
                good_b = *r;
            } else {
                bad = mid;
            }
        }
        if (good == columns[col]) return {};  // never moved: treat as not turning
        // The sign scan behind root_near goes blind once the root pair is
        // closer than one cell, so the bisection stops short of the fold by
        // O(cell^2). Newton on the fold system (rel = 0, d rel/d b = 0)
        // recovers the turning point to near machine precision; keep it only
        // when it converges at or a hair past the bisection estimate.
        const double col_gap = std::fabs(columns[beyond] - columns[col]);
        const double dir = hi_end ? 1.0 : -1.0;
        double pa = good, pb = good_b;
        bool polished = false;
        try {
            for (int it = 0; it < 8 && !polished; ++it) {
                const auto bc = detail::critical_b(c.rel, pa, pb, w);
                if (!bc) break;
                pb = *bc;
                const double ha = 1e-6 * (1.0 + std::fabs(pa));
                const double v0 = c.rel(pa, pb);
                const double va = (c.rel(pa + ha, pb) - c.rel(pa - ha, pb)) / (2.0 * ha);
                if (va == 0.0 || !std::isfinite(va)) break;
                const double da = -v0 / va;
                if (!std::isfinite(da) || std::fabs(da) > col_gap) break;
                pa += da;
                polished = std::fabs(da) <= 1e-12 * (1.0 + std::fabs(pa));
            }
        } catch (const Error&) {
        }
        if (polished && (pa - good) * dir >= -1e-9 * (1.0 + std::fabs(good)) &&
            std::fabs(pa - good) <= col_gap && std::fabs(pb - tail_b) <= 4.0 * w) {
            good = pa;
            good_b = pb;
        }
        return {true, good, good_b};
    };

    std::vector<Proto> kept;
    for (auto& p : protos)
        if (p.a.size() >= 2) kept.push_back(std::move(p));
    if (kept.empty()) throw NoRootsError("relation has no roots on the sampled window");

    std::vector<Branch> out;
    for (auto& p : kept) {
        auto data = std::make_shared<detail::BranchData>();
        data->rel = c.rel;
        data->b_domain = c.b_domain;
        const Refined lo = refine_end(p, false);
        const Refined hi = refine_end(p, true);
        if (lo.turned) {
            p.a.insert(p.a.begin(), lo.a_end);
            p.b.insert(p.b.begin(), lo.b_end);
            data->turning_lo = true;
        }
        if (hi.turned) {
            p.a.push_back(hi.a_end);
            p.b.push_back(hi.b_end);
            data->turning_hi = true;
        }
        data->a = std::move(p.a);
        data->b = std::move(p.b);

        // One-sided slopes just inside each end; a probe magnitude far above
        // the polyline's own steepest segment marks a vertical-tangent end.
        double steepest = 0.0;
        for (std::size_t i = 1; i < data->a.size(); ++i) {
            const double da = data->a[i] - data->a[i - 1];
            if (da > 0.0) steepest = std::max(steepest, std::fabs(data->b[i] - data->b[i - 1]) / da);
        }
        auto probe_slope = [&](bool hi_end) {
            const double a_end = hi_end ? data->a.back() : data->a.front();
            const double b_end = hi_end ? data->b.back() : data->b.front();
            const double h = 1e-5 * (1.0 + std::fabs(a_end));
            const double a_in = hi_end ? a_end - h : a_end + h;
            try {
                const double b_in = data->psi(a_in);
                return hi_end ? (b_end - b_in) / h : (b_in - b_end) / h;
            } catch (const Error&) {
                // Fall back to the end segment of the polyline.
                const std::size_t n = data->a.size();
                const std::size_t i = hi_end ? n - 1 : 1;
                const double da = data->a[i] - data->a[i - 1];
                return da == 0.0 ? 0.0 : (data->b[i] - data->b[i - 1]) / da;
            }
        };
        data->slope_lo = probe_slope(false);
        data->slope_hi = probe_slope(true);
        const double vertical_bar = 20.0 * std::max(1.0, steepest);
        data->vertical_lo = data->turning_lo || std::fabs(data->slope_lo) > vertical_bar;
        data->vertical_hi = data->turning_hi || std::fabs(data->slope_hi) > vertical_bar;

        Branch br;
        br.data_ = std::move(data);
        out.push_back(std::move(br));
    }

    std::sort(out.begin(), out.end(), [](const Branch& l, const Branch& r) {
        if (l.sample_a().front() != r.sample_a().front())
            return l.sample_a().front() < r.sample_a().front();
        return l.sample_b().front() < r.sample_b().front();
    });
    return out;
}

} // namespace clairaut
