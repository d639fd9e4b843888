// Timing harness for the three bulk kernels, serial reference vs the OpenMP
// path. Parallel output must be bit-identical to serial; the harness checks
// that while it times. Exit 0 on identical results, 1 otherwise.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "clairaut/catalog.hpp"
#include "clairaut/envelope.hpp"
#include "clairaut/families.hpp"
#include "clairaut/verify.hpp"

namespace {

using namespace clairaut;

double seconds(const std::function<void()>& fn) {
    double best = 1e30;
    for (int rep = 0; rep < 3; ++rep) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    return best;
}

bool same_bits(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) return false;
    return a.empty() ||
           std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

std::vector<double> flatten(const SampledSurface& s) {
    std::vector<double> out;
    out.reserve(s.points.size() * 6);
    for (const auto& pt : s.points) {
        out.push_back(pt.p.x);
        out.push_back(pt.p.y);
        out.push_back(pt.p.z);
        out.push_back(pt.param);
        out.push_back(pt.family_residual);
        out.push_back(pt.stationarity_residual);
    }
    return out;
}

void report(const char* name, std::size_t n, double ser, double par, bool identical) {
    std::printf("%-18s n=%-8zu serial %8.1f ms   parallel %8.1f ms   speedup %5.2fx   %s\n",
                name, n, ser * 1e3, par * 1e3, par > 0.0 ? ser / par : 0.0,
                identical ? "bit-identical" : "MISMATCH");
}

} // namespace

int main(int argc, char** argv) {
    int scale = 1;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--scale" && i + 1 < argc) {
            scale = std::atoi(argv[++i]);
        } else {
            std::fprintf(stderr, "usage: %s [--scale K]\n", argv[0]);
            return 2;
        }
    }
    if (scale < 1) scale = 1;
    const ToleranceConfig cfg;
    bool all_identical = true;

    // residual_grid: equation residual of the upper cone sheet.
    {
        const ExplicitGraph g{[](double x, double y) {
            return x + y + std::sqrt(2.0 * x * y);
        }};
        const GridSpec gx{0.5, 4.0, 400 * scale};
        const GridSpec gy{0.5, 4.0, 400};
        std::vector<double> rs, rp;
        const double ts = seconds([&] { rs = residual_grid(g, gx, gy, {}, cfg, Exec::serial); });
        const double tp = seconds([&] { rp = residual_grid(g, gx, gy, {}, cfg, Exec::parallel); });
        const bool ok = same_bits(rs, rp);
        all_identical = all_identical && ok;
        report("residual_grid", rs.size(), ts, tp, ok);
    }

    // implicit_membership: cone quadric over a big sampled sheet.
    {
        const GridSpec gx{0.5, 4.0, 1000};
        const GridSpec gy{0.5, 4.0, 250 * scale};
        std::vector<Point3> pts;
        pts.reserve(static_cast<std::size_t>(gx.count) * gy.count);
        for (int i = 0; i < gx.count; ++i)
            for (int j = 0; j < gy.count; ++j) {
                const double x = gx.at(i), y = gy.at(j);
                pts.push_back({x, y, x + y + std::sqrt(2.0 * x * y)});
            }
        const ImplicitLevelSet quad{cone_quadric()};
        ResidualReport rs, rp;
        const double ts = seconds([&] { rs = implicit_membership(quad, pts, cfg, Exec::serial); });
        const double tp =
            seconds([&] { rp = implicit_membership(quad, pts, cfg, Exec::parallel); });
        const bool ok = std::memcmp(&rs.max_abs, &rp.max_abs, sizeof(double)) == 0 &&
                        std::memcmp(&rs.mean_abs, &rp.mean_abs, sizeof(double)) == 0 &&
                        rs.n_evaluated == rp.n_evaluated && rs.n_skipped == rp.n_skipped;
        all_identical = all_identical && ok;
        report("implicit_membership", pts.size(), ts, tp, ok);
    }

    // envelope_branch: upper sheet of the circle relation, per-point root solves.
    {
        const PlaneFamily fam{};
        const auto branches = enumerate_branches(circle_constraint(), 64, cfg);
        const Branch* upper = &branches[0];
        for (const auto& br : branches)
            if (br.psi(1.0) > upper->psi(1.0)) upper = &br;
        const auto grid = grid_points({0.25, 4.0, 128}, {0.25, 4.0, 128 * scale});
        SampledSurface ss, sp;
        const double ts =
            seconds([&] { ss = envelope_branch(fam, *upper, grid, cfg, Exec::serial); });
        const double tp =
            seconds([&] { sp = envelope_branch(fam, *upper, grid, cfg, Exec::parallel); });
        const bool ok = same_bits(flatten(ss), flatten(sp)) &&
                        ss.diag.accepted == sp.diag.accepted;
        all_identical = all_identical && ok;
        report("envelope_branch", grid.size(), ts, tp, ok);
    }

    std::puts(all_identical ? "all kernels bit-identical across execution policies"
                            : "kernel outputs differ between execution policies");
    return all_identical ? 0 : 1;
}
