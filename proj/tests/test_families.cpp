#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <variant>

#include "clairaut/families.hpp"
#include "doctest.h"

using namespace clairaut;

namespace {

ImplicitRelation circle_rel() {
    return {[](double a, double b) {
                const double u = a - 1.0, v = b - 1.0;
                return u * u + v * v - 1.0;
            },
            {-0.25, 2.25},
            {-0.25, 2.25}};
}

} // namespace

TEST_CASE("plane family residual and tilt hook") {
    const PlaneFamily flat{};
    CHECK(flat.residual({1.0, 2.0, 8.0}, 2.0, 3.0) == 0.0);
    CHECK(plane_at(flat, 2.0, 3.0).height(1.0, 2.0) == 8.0);

    const PlaneFamily tilted{[](double a, double b) { return -a * b; }};
    CHECK(tilted.residual({1.0, 1.0, -1.0}, 2.0, 3.0) == 0.0);  // 2 + 3 - 6 = -1
}

TEST_CASE("scalar resolve on the closed-form constraints") {
    const FunctionOfA inv{[](double a) { return 1.0 / a; }, {}, {0.5, 4.0}};
    const Point2 ab = resolve(ConstraintCurve{inv}, 2.0);
    CHECK(ab.x == 2.0);
    CHECK(ab.y == 0.5);
    CHECK_THROWS_AS(resolve(ConstraintCurve{inv}, 10.0), OutOfDomainError);

    ParametricCurve circle;
    circle.g = [](double t) { return Point2{std::cos(t), std::sin(t)}; };
    circle.theta_domain = {-3.2, 3.2};
    const Point2 g0 = resolve(ConstraintCurve{circle}, 0.0);
    CHECK(g0.x == 1.0);
    CHECK(g0.y == 0.0);
    CHECK_THROWS_AS(resolve(ConstraintCurve{circle}, 5.0), OutOfDomainError);

    CHECK_THROWS_AS(resolve(ConstraintCurve{circle_rel()}, 1.0), Error);
}

TEST_CASE("excluded neighborhoods, flat and wrapped") {
    ParametricCurve c;
    c.g = [](double t) { return Point2{t, t}; };
    c.theta_domain = {-3.14159265358979323846, 3.14159265358979323846};
    c.excluded = {3.14159265358979323846};
    c.excluded_radius = 1e-3;

    CHECK(c.excluded_at(3.141));
    CHECK_FALSE(c.excluded_at(0.0));
    // Just past -pi is close to +pi only around the circle.
    CHECK_FALSE(c.excluded_at(-3.1411));
    c.wrap = true;
    CHECK(c.excluded_at(-3.1411));
    CHECK_THROWS_AS(resolve(ConstraintCurve{c}, 3.141), ExcludedParameterError);
}

TEST_CASE("inverse map resolve guards its rectangle") {
    InverseMap m;
    m.m = [](double x, double y) { return Point2{3 * x * x / (y * y), -2 * x * x * x / (y * y * y)}; };
    m.xy_domain = {{-2.0, 2.0}, {0.25, 4.0}};
    const Point2 ab = resolve(ConstraintCurve{m}, Point2{1.0, 1.0});
    CHECK(ab.x == 3.0);
    CHECK(ab.y == -2.0);
    CHECK_THROWS_AS(resolve(ConstraintCurve{m}, Point2{0.0, 0.1}), OutOfDomainError);
    CHECK_THROWS_AS(resolve(ConstraintCurve{m}, 1.0), Error);  // scalar overload
}

TEST_CASE("hyperbola relation threads into a single branch") {
    const ImplicitRelation rel{[](double a, double b) { return a * b - 1.0; },
                               {0.05, 5.0},
                               {0.1, 25.0}};
    const auto branches = enumerate_branches(rel, 64);
    REQUIRE(branches.size() == 1);
    const Branch& br = branches[0];
    const Interval iv = br.a_interval();
    CHECK(iv.lo == doctest::Approx(0.05));
    CHECK(iv.hi == doctest::Approx(5.0));
    CHECK_FALSE(br.turning_lo());
    CHECK_FALSE(br.turning_hi());

    // psi re-solves between samples: |a*psi(a) - 1| everywhere on the branch.
    double worst = 0.0;
    for (int i = 0; i < 500; ++i) {
        const double a = 0.06 + (4.9 - 0.06) * i / 499.0;
        worst = std::fmax(worst, std::fabs(a * br.psi(a) - 1.0));
    }
    CHECK(worst <= 1e-9);
    CHECK_THROWS_AS(br.psi(6.0), OutOfDomainError);
}

TEST_CASE("circle relation splits into two branches with exact fold ends") {
    const auto branches = enumerate_branches(circle_rel(), 64);
    REQUIRE(branches.size() == 2);
    for (const Branch& br : branches) {
        const Interval iv = br.a_interval();
        // Turning points recovered well past scan resolution.
        CHECK(std::fabs(iv.lo - 0.0) <= 1e-9);
        CHECK(std::fabs(iv.hi - 2.0) <= 1e-9);
        CHECK(br.turning_lo());
        CHECK(br.turning_hi());
        CHECK(br.vertical_end(false));
        CHECK(br.vertical_end(true));
    }

    const Branch* lower = &branches[0];
    const Branch* upper = &branches[1];
    if (lower->psi(1.0) > upper->psi(1.0)) std::swap(lower, upper);
    CHECK(std::fabs(lower->psi(1.0) - 0.0) <= 1e-12);
    CHECK(std::fabs(upper->psi(1.0) - 2.0) <= 1e-12);

    // One-sided slopes blow up toward the folds with the right signs.
    CHECK(lower->end_slope(false) < -20.0);
    CHECK(lower->end_slope(true) > 20.0);
    CHECK(upper->end_slope(false) > 20.0);
    CHECK(upper->end_slope(true) < -20.0);

    // psi against the closed form, including deep near-fold probes where the
    // root pair is far closer than any scan cell.
    for (const double a : {0.01, 0.3, 1.0, 1.7, 1.99, 1.999999, 2.0 - 1e-7, 2.0 - 1e-9}) {
        const double s = std::sqrt(1.0 - (a - 1.0) * (a - 1.0));
        CHECK(lower->psi(a) == doctest::Approx(1.0 - s).epsilon(1e-10));
        CHECK(upper->psi(a) == doctest::Approx(1.0 + s).epsilon(1e-10));
    }
    CHECK(upper->psi(upper->a_interval().hi) == upper->sample_b().back());
}

TEST_CASE("disjoint straight branches stay separate") {
    const ImplicitRelation rel{[](double a, double b) { return (b - a) * (b - a - 5.0); },
                               {0.0, 1.0},
                               {-10.0, 10.0}};
    const auto branches = enumerate_branches(rel, 16);
    REQUIRE(branches.size() == 2);
    CHECK(branches[0].psi(0.5) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(branches[1].psi(0.5) == doctest::Approx(5.5).epsilon(1e-12));
    CHECK_FALSE(branches[0].turning_lo());
    CHECK_FALSE(branches[0].vertical_end(true));
}

TEST_CASE("branch enumeration failure modes") {
    CHECK_THROWS_AS(enumerate_branches(circle_rel(), 1), Error);
    const ImplicitRelation empty{[](double a, double b) { return a * a + b * b + 1.0; },
                                 {-1.0, 1.0},
                                 {-1.0, 1.0}};
    CHECK_THROWS_AS(enumerate_branches(empty, 16), NoRootsError);
}

TEST_CASE("branch order is deterministic") {
    const auto first = enumerate_branches(circle_rel(), 32);
    const auto second = enumerate_branches(circle_rel(), 32);
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
        CHECK(first[i].sample_a() == second[i].sample_a());
        CHECK(first[i].sample_b() == second[i].sample_b());
    }
    // Sorted by first a, then b.
    CHECK(first[0].sample_b().front() <= first[1].sample_b().front());
}
