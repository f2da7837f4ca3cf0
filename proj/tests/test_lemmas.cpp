#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "generators.hpp"
#include "quilt/lemmas.hpp"

#include <cmath>

using namespace quilt;

namespace {

double bisect_kappa_inverse(double y) {
    double lo = 0.0, hi = 50.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (2.0 * std::log(std::cosh(mid)) < y ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("triangle gap lies strictly between its bounds and matches the metric triangle") {
    testgen::Gen gen(31);
    for (int i = 0; i < 10000; ++i) {
        const double k = 1.0 + std::exp(gen.uniform(-4.0, 3.0));
        const double t = gen.uniform(1e-4, 1.0 - 1e-4);
        const double f = triangle_gap(k, t);
        const double lower = log_cosh_bound(k);
        REQUIRE(lower > 0.0);
        REQUIRE(f > lower);
        REQUIRE(f < std::log(k));
        REQUIRE(std::abs(f - triangle_gap_metric(k, t)) < 1e-9);
    }
    CHECK(std::abs(triangle_gap(2.0, 0.5) - triangle_gap_metric(2.0, 0.5)) < 1e-10);
}

TEST_CASE("triangle gap limits in t") {
    for (double k : {1.1, 2.0, 5.0, 40.0}) {
        CHECK(std::abs(triangle_gap(k, 1e-6) - log_cosh_bound(k)) < 1e-6);
        CHECK(std::abs(triangle_gap(k, 1.0 - 1e-13) - std::log(k)) < 1e-6);
        // Near t = 1 the gap behaves like log k - sqrt(1 - t^2).
        for (double t : {1.0 - 1e-4, 1.0 - 1e-6, 1.0 - 1e-8}) {
            const double s = std::sqrt(1.0 - t * t);
            CHECK(std::abs(std::log(k) - triangle_gap(k, t) - s) < 2.0 * s * s * (1.0 + 1.0 / (k * k - 1.0)) + 1e-12);
        }
    }
}

TEST_CASE("triangle gap rejects out-of-range parameters") {
    CHECK_THROWS_AS(triangle_gap(1.0, 0.5), DomainError);
    CHECK_THROWS_AS(triangle_gap(2.0, 0.0), DomainError);
    CHECK_THROWS_AS(triangle_gap(2.0, 1.0), DomainError);
    CHECK_THROWS_AS(triangle_gap_metric(0.5, 0.5), DomainError);
}

TEST_CASE("two-sided detour exceeds the chord by twice the log-cosh bound") {
    testgen::Gen gen(32);
    for (int i = 0; i < 10000; ++i) {
        const Geodesic gamma = gen.geodesic();
        const HPoint A = point_on(gamma, gen.uniform(-4, 4));
        const HPoint C = point_on(gamma, gen.uniform(-4, 4));
        const Geodesic perp = orthogonal_geodesic_at(gamma, gen.uniform(-4, 4));
        const double off = gen.uniform(0.01, 4.0) * (gen.uniform(0, 1) < 0.5 ? -1.0 : 1.0);
        const HPoint E = foot_of_perpendicular(point_on(perp, 0.0), gamma);
        const double base = arclength_param(perp, E);
        const HPoint B = point_on(perp, base + off);
        REQUIRE(detour_slack(A, C, B, gamma) > 0.0);
    }
}

TEST_CASE("collapsed detour and the ideal limit") {
    const Geodesic axis = Geodesic::vertical(0.0);
    const double k = 3.0;
    const HPoint E{0.0, 1.0};
    const HPoint B = point_on(Geodesic::semicircle(0.0, 1.0), std::log(k));
    CHECK(std::abs(distance(B, E) - std::log(k)) < 1e-12);
    const double collapsed = detour_slack(E, E, B, axis);
    CHECK(std::abs(collapsed - (2.0 * std::log(k) - 2.0 * log_cosh_bound(k))) < 1e-12);
    CHECK(collapsed > 0.0);

    double previous = collapsed;
    for (double s : {2.0, 4.0, 8.0, 12.0}) {
        const double slack = detour_slack({0, std::exp(-s)}, {0, std::exp(s)}, B, axis);
        CHECK(slack > 0.0);
        CHECK(slack < previous);
        previous = slack;
    }
    CHECK(previous < 1e-8);
    CHECK_THROWS_AS(detour_slack({0, 1}, {0, 2}, {0, 1.5}, axis), DegenerateInput);
    CHECK_THROWS_AS(detour_slack({1, 1}, {0, 2}, B, axis), DegenerateInput);
}

TEST_CASE("quadrilateral side lengths and defect") {
    const QuadSides closed = quad_sides_closed(0.5, 2.0);
    const QuadSides metric = quad_sides_metric(0.5, 2.0);
    CHECK(std::abs(closed.BD - std::log(2.0)) < 1e-15);
    CHECK(std::abs(closed.BD - metric.BD) < 1e-10);
    CHECK(std::abs(closed.AB - metric.AB) < 1e-10);
    CHECK(std::abs(closed.AC - metric.AC) < 1e-10);
    CHECK(std::abs(closed.CD - metric.CD) < 1e-10);
    CHECK(std::abs(quad_defect(0.5, 2.0) - quad_defect_metric(0.5, 2.0)) < 1e-10);

    testgen::Gen gen(33);
    for (int i = 0; i < 2000; ++i) {
        const double x0 = gen.uniform(0.01, 0.99), r = std::exp(gen.uniform(0.0, 3.0));
        REQUIRE(std::abs(quad_defect(x0, r) - quad_defect_metric(x0, r)) < 1e-9);
        REQUIRE(std::abs(quad_defect(x0, 1.0)) < 1e-10);
        REQUIRE(std::abs(quad_defect_metric(x0, 1.0)) < 1e-10);
    }
    for (double x0 : {0.1, 0.5, 0.9}) {
        double previous = quad_defect(x0, 1.0);
        for (int i = 1; i <= 100; ++i) {
            const double d = quad_defect(x0, 1.0 + 0.05 * i);
            REQUIRE(d > 0.0);
            REQUIRE(d > previous);
            previous = d;
        }
    }
    CHECK_THROWS_AS(quad_defect(0.0, 2.0), DomainError);
    CHECK_THROWS_AS(quad_defect(0.5, 0.9), DomainError);
}

TEST_CASE("kappa and its inverse") {
    CHECK(kappa(0.0) == 0.0);
    CHECK(std::abs(kappa_inverse(1.5) - std::acosh(std::exp(0.75))) < 1e-15);
    CHECK(std::abs(kappa_inverse(1.5) - bisect_kappa_inverse(1.5)) < 1e-12);
    double previous = -1.0;
    for (int i = 0; i <= 200; ++i) {
        const double y = 0.05 * i;
        REQUIRE(std::abs(kappa(kappa_inverse(y)) - y) < 1e-10);
        const double k = kappa(0.05 * i);
        REQUIRE(k > previous);
        previous = k;
    }
    CHECK_THROWS_AS(kappa(-0.1), DomainError);
    CHECK_THROWS_AS(kappa_inverse(-0.1), DomainError);
}

TEST_CASE("collar half-width") {
    CHECK(std::abs(collar_halfwidth(2.0 * std::asinh(1.0)) - std::asinh(0.5)) < 1e-15);
    double previous = 1e300;
    for (int i = 1; i <= 100; ++i) {
        const double w = collar_halfwidth(0.05 * i);
        REQUIRE(w < previous);
        previous = w;
    }
    CHECK(collar_halfwidth(0.5) > 0.5);
    CHECK(collar_halfwidth(0.95) < 0.95);
    CHECK_THROWS_AS(collar_halfwidth(0.0), DomainError);
}
