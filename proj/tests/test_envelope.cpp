#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "clairaut/envelope.hpp"
#include "doctest.h"

using namespace clairaut;

namespace {

FunctionOfA phi_inverse() {
    return {[](double a) { return 1.0 / a; }, [](double a) { return -1.0 / (a * a); },
            {0.05, 5.0}};
}

ImplicitRelation circle_rel() {
    return {[](double a, double b) {
                const double u = a - 1.0, v = b - 1.0;
                return u * u + v * v - 1.0;
            },
            {-0.25, 2.25},
            {-0.25, 2.25}};
}

} // namespace

TEST_CASE("grid_points runs x-major") {
    const auto pts = grid_points({0.0, 1.0, 2}, {5.0, 6.0, 2});
    REQUIRE(pts.size() == 4);
    CHECK(pts[0].x == 0.0);
    CHECK(pts[0].y == 5.0);
    CHECK(pts[1].x == 0.0);
    CHECK(pts[1].y == 6.0);
    CHECK(pts[3].x == 1.0);
    CHECK(pts[3].y == 6.0);
    CHECK(grid_points({1.0, 9.0, 1}, {2.0, 9.0, 1}).size() == 1);
}

TEST_CASE("function constraint b = 1/a sweeps out z = 2 sqrt(xy)") {
    const PlaneFamily fam{};
    const auto surf =
        envelope_function_constraint(fam, phi_inverse(), {1.0, 3.0, 5}, {1.0, 4.0, 4});
    CHECK(surf.diag.attempted == 20);
    CHECK(surf.diag.accepted == 20);
    CHECK(surf.diag.rejected_residual == 0);

    for (const auto& pt : surf.points) {
        // Parametric solution: x = y/a^2, z = 2y/a.
        CHECK(pt.p.z == doctest::Approx(2.0 * std::sqrt(pt.p.x * pt.p.y)).epsilon(1e-12));
        CHECK(pt.family_residual <= 1e-10);
        CHECK(pt.stationarity_residual <= 1e-6);
    }

    // The worked contact point: a = 2, y = 4 lands on (1, 4, 4).
    const auto spot = envelope_function_constraint(fam, phi_inverse(), {2.0, 2.0, 1}, {4.0, 4.0, 1});
    REQUIRE(spot.points.size() == 1);
    CHECK(spot.points[0].p.x == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(spot.points[0].p.z == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(spot.points[0].param == 2.0);
}

TEST_CASE("function constraint falls back to central differences") {
    // Same constraint without the analytic derivative: results must agree.
    const FunctionOfA no_prime{[](double a) { return 1.0 / a; }, {}, {0.05, 5.0}};
    const PlaneFamily fam{};
    const auto with = envelope_function_constraint(fam, phi_inverse(), {1.0, 3.0, 4}, {2.0, 2.0, 1});
    const auto without = envelope_function_constraint(fam, no_prime, {1.0, 3.0, 4}, {2.0, 2.0, 1});
    REQUIRE(with.points.size() == without.points.size());
    for (std::size_t i = 0; i < with.points.size(); ++i) {
        CHECK(without.points[i].p.x ==
              doctest::Approx(with.points[i].p.x).epsilon(1e-8));
        CHECK(without.points[i].p.z ==
              doctest::Approx(with.points[i].p.z).epsilon(1e-8));
    }

    // A grid that leaves the declared domain is a caller error.
    CHECK_THROWS_AS(
        envelope_function_constraint(fam, phi_inverse(), {0.01, 0.03, 3}, {1.0, 1.0, 1}),
        OutOfDomainError);

    // A phi that throws inside the grid is counted per point, not fatal.
    const FunctionOfA partial{[](double a) {
                                  if (a < 0.9) throw DomainError("phi undefined here", "phi");
                                  return 1.0 / a;
                              },
                              {},
                              {0.0, 5.0}};
    const auto skipped = envelope_function_constraint(fam, partial, {0.5, 1.5, 3}, {1.0, 1.0, 1});
    CHECK(skipped.diag.skipped_domain == 1);
    CHECK(skipped.diag.accepted == 2);
}

TEST_CASE("projective section of b = 1/a is the parabola Z^2 = 4X") {
    const auto curve = projective_curve(phi_inverse(), {0.5, 4.0, 50});
    REQUIRE(curve.size() == 50);
    for (const auto& pt : curve)
        CHECK(pt.y * pt.y == doctest::Approx(4.0 * pt.x).epsilon(1e-10));
    // Spot values: a = 2 -> (1/4, 1), a = 1 -> (1, 2).
    const auto at2 = projective_curve(phi_inverse(), {2.0, 2.0, 1});
    CHECK(at2[0].x == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(at2[0].y == doctest::Approx(1.0).epsilon(1e-12));
    const auto at1 = projective_curve(phi_inverse(), {1.0, 1.0, 1});
    CHECK(at1[0].x == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(at1[0].y == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("branch envelope of the unit-circle relation") {
    const PlaneFamily fam{};
    const auto branches = enumerate_branches(circle_rel(), 64);
    REQUIRE(branches.size() == 2);
    const Branch* upper = &branches[0];
    if (branches[1].psi(1.0) > upper->psi(1.0)) upper = &branches[1];

    // Worked interior point: (3, 4) -> a = 1.6, b = 1.8, z = 12.
    const auto spot = envelope_branch(fam, *upper, {{3.0, 4.0}});
    REQUIRE(spot.diag.accepted == 1);
    CHECK(spot.points[0].p.z == doctest::Approx(12.0).epsilon(1e-11));
    CHECK(spot.points[0].param == doctest::Approx(1.6).epsilon(1e-10));

    // y = 0 limits ride the vertical-tangent ends: x > 0 picks the a -> 2
    // fold, x < 0 the a -> 0 fold.
    const auto hi_edge = envelope_branch(fam, *upper, {{1.0, 0.0}});
    REQUIRE(hi_edge.diag.accepted == 1);
    CHECK(std::fabs(hi_edge.points[0].p.z - 2.0) <= 1e-10);
    CHECK(std::fabs(hi_edge.points[0].param - 2.0) <= 1e-10);

    const auto lo_edge = envelope_branch(fam, *upper, {{-1.0, 0.0}});
    REQUIRE(lo_edge.diag.accepted == 1);
    CHECK(std::fabs(lo_edge.points[0].p.z) <= 1e-10);
    CHECK(std::fabs(lo_edge.points[0].param) <= 1e-10);

    // The origin is always a member.
    const auto origin = envelope_branch(fam, *upper, {{0.0, 0.0}});
    REQUIRE(origin.diag.accepted == 1);
    CHECK(origin.points[0].p.z == 0.0);

    // Points with no stationary parameter are skipped, not fabricated:
    // the upper branch has psi' < 0 only on (1, 2), so x/y far outside
    // psi'-range finds no bracket.
    const auto none = envelope_branch(fam, *upper, {{100.0, 0.001}});
    CHECK(none.diag.accepted == 0);
    CHECK(none.diag.skipped_no_bracket == 1);
}

TEST_CASE("branch envelope of b = 1/a matches the function-constraint form") {
    const PlaneFamily fam{};
    const ImplicitRelation rel{[](double a, double b) { return a * b - 1.0; },
                               {0.05, 5.0},
                               {0.1, 25.0}};
    const auto branches = enumerate_branches(rel, 64);
    REQUIRE(branches.size() == 1);

    // Worked point (1, 1): stationarity 1 - 1/a^2 = 0 -> a = 1, z = 2.
    const auto spot = envelope_branch(fam, branches[0], {{1.0, 1.0}});
    REQUIRE(spot.diag.accepted == 1);
    CHECK(spot.points[0].param == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(spot.points[0].p.z == doctest::Approx(2.0).epsilon(1e-9));

    // Against the closed form across a row.
    const auto row = envelope_branch(fam, branches[0], grid_points({0.5, 8.0, 12}, {1.0, 1.0, 1}));
    CHECK(row.diag.accepted == 12);
    for (const auto& pt : row.points)
        CHECK(pt.p.z == doctest::Approx(2.0 * std::sqrt(pt.p.x * pt.p.y)).epsilon(1e-9));
}

TEST_CASE("parametric plane envelope samples characteristic rays") {
    const PlaneFamily fam{};
    ParametricCurve hyp;
    hyp.g = [](double t) { return Point2{t, 1.0 / t}; };
    hyp.g_prime = [](double t) { return Point2{1.0, -1.0 / (t * t)}; };
    hyp.theta_domain = {0.5, 4.0};

    // Characteristic at theta = 2, s = 4: p = 4(1/4, 1, 1) = (1, 4, 4).
    const auto spot = envelope_parametric_planes(fam, hyp, {2.0, 2.0, 1}, {4.0});
    REQUIRE(spot.diag.accepted == 1);
    CHECK(spot.points[0].p.x == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(spot.points[0].p.y == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(spot.points[0].p.z == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(spot.points[0].param == 2.0);

    // Every sampled point sits on z^2 = 4xy.
    const auto sweep = envelope_parametric_planes(fam, hyp, {0.6, 3.5, 30});
    CHECK(sweep.diag.accepted == 30 * 6);  // default s grid has 6 scales
    for (const auto& pt : sweep.points)
        CHECK(pt.p.z * pt.p.z == doctest::Approx(4.0 * pt.p.x * pt.p.y).epsilon(1e-8));

    // Central-difference fallback agrees with the analytic derivative.
    ParametricCurve fd = hyp;
    fd.g_prime = {};
    const auto fd_spot = envelope_parametric_planes(fam, fd, {2.0, 2.0, 1}, {4.0});
    REQUIRE(fd_spot.diag.accepted == 1);
    CHECK(fd_spot.points[0].p.x == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(fd_spot.points[0].p.z == doctest::Approx(4.0).epsilon(1e-8));
}

TEST_CASE("parametric envelope skips excluded and degenerate parameters") {
    const PlaneFamily fam{};
    ParametricCurve c;
    c.g = [](double t) { return Point2{std::cos(t), std::sin(t)}; };
    c.theta_domain = {0.0, 1.0};
    c.excluded = {0.5};
    c.excluded_radius = 0.05;
    const auto s = envelope_parametric_planes(fam, c, {0.46, 0.54, 5}, {1.0});
    CHECK(s.diag.skipped_excluded == 5);
    CHECK(s.points.empty());

    ParametricCurve frozen;
    frozen.g = [](double) { return Point2{1.0, 1.0}; };
    frozen.theta_domain = {0.0, 1.0};
    const auto d = envelope_parametric_planes(fam, frozen, {0.2, 0.8, 3}, {1.0});
    CHECK(d.diag.skipped_degenerate == 3);
}

TEST_CASE("inverse map lifts z = m1 x + m2 y") {
    const PlaneFamily fam{};
    InverseMap m;
    m.m = [](double x, double y) {
        return Point2{3 * x * x / (y * y), -2 * x * x * x / (y * y * y)};
    };
    m.xy_domain = {{-2.0, 2.0}, {0.25, 4.0}};

    const auto surf = envelope_inverse_map(fam, m, grid_points({-1.0, 1.0, 9}, {0.5, 2.0, 9}));
    CHECK(surf.diag.accepted == 81);
    for (const auto& pt : surf.points) {
        const double t = pt.p.x / pt.p.y;
        CHECK(pt.p.z ==
              doctest::Approx(t * t * pt.p.x).epsilon(1e-12));  // x^3/y^2 via (x/y)^2 x
        CHECK(pt.stationarity_residual == 0.0);
        CHECK(pt.param == 0.0);
    }

    const auto outside = envelope_inverse_map(fam, m, {{3.0, 1.0}});
    CHECK(outside.diag.skipped_domain == 1);
}

TEST_CASE("scaled envelope points stay on their planes") {
    // Scaling closure: p on plane (a, b) implies s*p on the same plane.
    const PlaneFamily fam{};
    const FunctionOfA c = phi_inverse();
    const auto surf = envelope_function_constraint(fam, c, {0.8, 3.0, 10}, {0.5, 4.0, 8});
    REQUIRE(surf.diag.accepted == 80);
    for (const auto& pt : surf.points) {
        const Point2 ab = resolve(ConstraintCurve{c}, pt.param);
        for (const double s : {0.5, 2.0, -1.0}) {
            CHECK(std::fabs(fam.residual(scale(s, pt.p), ab.x, ab.y)) <= 1e-10);
            // Stationarity x + phi'(a) y = 0 is homogeneous in (x, y) too.
            CHECK(std::fabs(s * pt.p.x + (-1.0 / (ab.x * ab.x)) * s * pt.p.y) <= 1e-6);
        }
    }
}

TEST_CASE("cross sections scale onto z = 1") {
    CrossSection cs = cross_section_z1(std::vector<Point3>{{1.0, 4.0, 4.0}, {2.0, 2.0, 0.0}}, 1e-9);
    REQUIRE(cs.points.size() == 1);
    CHECK(cs.dropped == 1);
    CHECK(cs.points[0].x == 0.25);
    CHECK(cs.points[0].y == 1.0);

    // Section of z = 2 sqrt(xy): (x/z)(y/z) = 1/4.
    const auto surf = envelope_function_constraint(PlaneFamily{}, phi_inverse(), {0.8, 3.0, 10},
                                                   {0.5, 4.0, 8});
    const CrossSection sec = cross_section_z1(surf, 1e-9);
    CHECK(sec.dropped == 0);
    for (const auto& pt : sec.points)
        CHECK(4.0 * pt.x * pt.y == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("points come back in grid order") {
    const auto grid = grid_points({-1.0, 1.0, 5}, {0.5, 2.0, 4});
    const auto surf = envelope_inverse_map(
        PlaneFamily{},
        InverseMap{[](double x, double y) {
                       return Point2{3 * x * x / (y * y), -2 * x * x * x / (y * y * y)};
                   },
                   {{-2.0, 2.0}, {0.25, 4.0}}},
        grid);
    REQUIRE(surf.points.size() == grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        CHECK(surf.points[i].p.x == grid[i].x);
        CHECK(surf.points[i].p.y == grid[i].y);
    }
}
