#include "clairaut/numerics.hpp"

#include <cmath>
#include <string>

namespace clairaut {

double diff_central(const RealFn& f, double a, const ToleranceConfig& cfg) {
    const double h = cfg.fd_step * (1.0 + std::fabs(a));
    return (f(a + h) - f(a - h)) / (2.0 * h);
}

double integrate(const RealFn& f, double a0, double a1, const ToleranceConfig& cfg) {
    const int n = cfg.quad_panels;
    if (n < 2 || n % 2 != 0)
        throw Error("quad_panels must be even and >= 2, got " + std::to_string(n));
    if (a0 == a1) return 0.0;
    const double h = (a1 - a0) / n;
    double odd = 0.0, even = 0.0;
    for (int i = 1; i < n; i += 2) odd += f(a0 + i * h);
    for (int i = 2; i < n; i += 2) even += f(a0 + i * h);
    return (h / 3.0) * (f(a0) + f(a1) + 4.0 * odd + 2.0 * even);
}

double find_root(const RealFn& f, double lo, double hi, const ToleranceConfig& cfg) {
    double flo = f(lo);
    double fhi = f(hi);
    if (std::fabs(flo) <= cfg.root_tol) return lo;
    if (std::fabs(fhi) <= cfg.root_tol) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw NoBracketError("no sign change on [" + std::to_string(lo) + ", " +
                             std::to_string(hi) + "]: f(lo)=" + std::to_string(flo) +
                             ", f(hi)=" + std::to_string(fhi));

    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (hi - lo <= cfg.root_tol * (1.0 + std::fabs(mid))) return mid;

        // Alternate secant and bisection steps: the secant step gives the
        // superlinear finish, the interleaved bisection guarantees the
        // bracket keeps shrinking even when the secant stalls at one end.
        double c = mid;
        if (iter % 2 == 0 && fhi != flo) {
            const double s = hi - fhi * (hi - lo) / (fhi - flo);
            if (std::isfinite(s) && s > lo && s < hi) c = s;
        }
        const double fc = f(c);
        if (std::fabs(fc) <= cfg.root_tol) return c;
        if ((fc > 0.0) == (flo > 0.0)) {
            lo = c;
            flo = fc;
        } else {
            hi = c;
            fhi = fc;
        }
    }
    throw MaxIterationsError("root finder did not converge in 200 iterations");
}

Point3 gradient3(const Field3& F, const Point3& p, const ToleranceConfig& cfg) {
    const double hx = cfg.fd_step * (1.0 + std::fabs(p.x));
    const double hy = cfg.fd_step * (1.0 + std::fabs(p.y));
    const double hz = cfg.fd_step * (1.0 + std::fabs(p.z));
    return {(F({p.x + hx, p.y, p.z}) - F({p.x - hx, p.y, p.z})) / (2.0 * hx),
            (F({p.x, p.y + hy, p.z}) - F({p.x, p.y - hy, p.z})) / (2.0 * hy),
            (F({p.x, p.y, p.z + hz}) - F({p.x, p.y, p.z - hz})) / (2.0 * hz)};
}

} // namespace clairaut
