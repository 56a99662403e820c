#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "logwexp/diode.hpp"
#include "logwexp/eval.hpp"
#include "support/ulp.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

using logwexp::DiodeParams;
using logwexp::SweepSpec;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// residual of the defining relation a*exp(b*u) + b*u = v, scaled like the
// round-trip acceptance check
double relation_defect(const DiodeParams& p, double v, double u) {
    const double bu = p.b * u;
    return std::fabs(p.a * std::exp(bu) + bu - v);
}

}  // namespace

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(DiodeParams(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(DiodeParams(-1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(DiodeParams(1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(DiodeParams(1.0, -2.0), std::domain_error);
    CHECK_THROWS_AS(DiodeParams(kInf, 1.0), std::domain_error);
    CHECK_THROWS_AS(DiodeParams(1.0, kNaN), std::domain_error);
    CHECK_NOTHROW(DiodeParams(1e-12, 38.0));

    CHECK_THROWS_AS(SweepSpec(1.0, -1.0, 10), std::invalid_argument);
    CHECK_THROWS_AS(SweepSpec(0.0, 0.0, 10), std::invalid_argument);
    CHECK_THROWS_AS(SweepSpec(-kInf, 1.0, 10), std::invalid_argument);
    CHECK_THROWS_AS(SweepSpec(0.0, kNaN, 10), std::invalid_argument);
    CHECK_THROWS_AS(SweepSpec(0.0, 1.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(SweepSpec(0.0, 1.0, 0), std::invalid_argument);
    CHECK_NOTHROW(SweepSpec(-4.0, 4.0, 2));
}

TEST_CASE("solve_u satisfies the defining relation") {
    CHECK(std::fabs(logwexp::solve_u(DiodeParams(1.0, 1.0), 1.0)) <= 1.2e-16);
    CHECK(std::fabs(logwexp::solve_u(DiodeParams(2.0, 3.0), 2.0)) <= 1e-15);
    CHECK(logwexp::solve_u(DiodeParams(0.5, 2.0), 10.0) == 1.3416528975823694);
}

TEST_CASE("round trip across parameter decades") {
    int bad = 0;
    double worst = 0.0;
    for (const double a : {1e-3, 1.0, 1e3}) {
        for (const double b : {1e-2, 1.0, 1e2}) {
            const DiodeParams p(a, b);
            for (int i = 0; i <= 400; ++i) {
                const double v = -100.0 + 200.0 * i / 400.0;
                const double u = logwexp::solve_u(p, v);
                const double d = relation_defect(p, v, u);
                const double scaled = d / std::max(1.0, std::fabs(v));
                worst = std::max(worst, scaled);
                if (!(scaled <= 1e-12)) ++bad;
            }
        }
    }
    CAPTURE(worst);
    CHECK(bad == 0);
}

TEST_CASE("du_dv pinned values and sign") {
    CHECK(logwexp::du_dv(DiodeParams(1.0, 1.0), 1.0) == 0.5);
    CHECK(logwexp::du_dv(DiodeParams(1.0, 2.0), 1.0) == 0.25);
    CHECK(ulp_distance(logwexp::du_dv(DiodeParams(1.0, 1.0), 0.0),
                       0.6381037433651108) <= 1);

    int bad = 0;
    const DiodeParams p(0.1, 3.0);
    for (int i = 0; i <= 100; ++i) {
        const double v = -20.0 + 40.0 * i / 100.0;
        if (!(logwexp::du_dv(p, v) > 0.0)) ++bad;
    }
    CHECK(bad == 0);
}

TEST_CASE("du_dv agrees with a central difference") {
    const DiodeParams p(0.5, 2.0);
    for (const double v : {-15.0, -3.0, 0.0, 0.8, 4.0, 60.0}) {
        const double h = 1e-6 * std::max(1.0, std::fabs(v));
        const double fd = (logwexp::solve_u(p, v + h) - logwexp::solve_u(p, v - h)) / (2.0 * h);
        const double d = logwexp::du_dv(p, v);
        CHECK(std::fabs(fd - d) / d <= 1e-5);
    }
}

TEST_CASE("sweep_curve structure") {
    const DiodeParams unit(1.0, 1.0);
    const auto pts = logwexp::sweep_curve(unit, SweepSpec(-1.0, 1.0, 3));
    REQUIRE(pts.size() == 3);
    CHECK(pts[0].first == -1.0);
    CHECK(pts[1].first == 0.0);
    CHECK(pts[2].first == 1.0);
    for (const auto& [v, u] : pts) {
        CHECK(u == logwexp::evaluate(v).value);
    }

    const auto two = logwexp::sweep_curve(unit, SweepSpec(0.0, 0.5, 2));
    REQUIRE(two.size() == 2);
    CHECK(ulp_distance(two[0].second, -0.5671432904097838) <= 1);
    CHECK(ulp_distance(two[1].second, -0.2662486081617503) <= 1);

    const auto five = logwexp::sweep_curve(unit, SweepSpec(-4.0, 4.0, 5));
    REQUIRE(five.size() == 5);
    CHECK(five[0].first == -4.0);
    CHECK(five[1].first == -2.0);
    CHECK(five[2].first == 0.0);
    CHECK(five[3].first == 2.0);
    CHECK(five[4].first == 4.0);

    // endpoints always land exactly on the requested range
    const auto odd = logwexp::sweep_curve(DiodeParams(0.3, 7.0), SweepSpec(-0.1, 0.7, 17));
    CHECK(odd.front().first == -0.1);
    CHECK(odd.back().first == 0.7);

    int bad = 0;
    for (std::size_t i = 1; i < odd.size(); ++i) {
        if (!(odd[i].second >= odd[i - 1].second)) ++bad;
    }
    CHECK(bad == 0);
}
