#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "generators.hpp"
#include "quilt/dirichlet.hpp"

#include <cmath>

using namespace quilt;

namespace {

const double kLn2 = std::log(2.0);

CompactSet three_points() { return make_compact_set({{0, 0}, {1, 1}, {3, 3}}); }

Element element_of(const Isometry& g) { return {g, {0}, 0.0}; }

}  // namespace

TEST_CASE("bisectors of the annulus generator are the predicted semicircles") {
    const HPoint p = make_point(0.0, std::sqrt(2.0));
    const Isometry g0 = Isometry::from(std::sqrt(2.0), 0, 0, 1 / std::sqrt(2.0));
    const HalfPlane up = bisector_halfplane(p, g0);
    CHECK(!up.boundary.is_vertical());
    CHECK(std::abs(up.boundary.center) < 1e-12);
    CHECK(std::abs(up.boundary.radius - 2.0) < 1e-12);
    CHECK(up.side == -1);
    const HalfPlane down = bisector_halfplane(p, invert(g0));
    CHECK(std::abs(down.boundary.radius - 1.0) < 1e-12);
    CHECK(down.side == 1);
    CHECK_THROWS_AS(bisector_halfplane(p, Isometry::identity()), DegenerateInput);
}

TEST_CASE("reflection in the bisector swaps the center and its image") {
    testgen::Gen gen(71);
    for (int trial = 0; trial < 300; ++trial) {
        const HPoint p = gen.point(3.0);
        const Isometry g = gen.isometry(trial % 2 ? 1 : -1);
        const HPoint q = apply(g, p);
        if (distance(p, q) < 1e-6) continue;
        const HalfPlane hp = bisector_halfplane(p, g);
        REQUIRE(hp.contains(p));
        REQUIRE(!hp.contains(q));
        const HPoint r = apply(reflect_in(hp.boundary), p);
        REQUIRE(distance(r, q) < 1e-8 * (1.0 + distance(p, q)));
    }
}

TEST_CASE("shadow examples") {
    const IdealInterval inside = shadow({Geodesic::semicircle(1.0, 2.0), 1});
    CHECK(inside.lo.value == -1.0);
    CHECK(inside.hi.value == 3.0);
    CHECK(!inside.wraps());
    CHECK(inside.measure() == 4.0);
    const IdealInterval outside = shadow({Geodesic::semicircle(1.0, 2.0), -1});
    CHECK(outside.wraps());
    CHECK(outside.contains_infinity());
    CHECK(outside.contains(100.0));
    CHECK(!outside.contains(0.0));
    const IdealInterval left = shadow({Geodesic::vertical(2.0), 1});
    CHECK(left.lo.infinite);
    CHECK(left.contains(-1e9));
    CHECK(!left.contains(3.0));
    const IdealInterval right = shadow({Geodesic::vertical(2.0), -1});
    CHECK(right.hi.infinite);
    CHECK(right.contains(3.0));
}

TEST_CASE("shadows are the ideal points outside the half-plane") {
    testgen::Gen gen(72);
    for (int trial = 0; trial < 300; ++trial) {
        const HalfPlane hp{gen.geodesic(), gen.integer(0, 1) ? 1 : -1};
        const IdealInterval s = shadow(hp);
        for (int k = 0; k < 20; ++k) {
            const double x = gen.uniform(-20.0, 20.0);
            if (hp.boundary.is_vertical() ? std::abs(x - hp.boundary.center) < 1e-6
                                          : std::abs(std::abs(x - hp.boundary.center) - hp.boundary.radius) < 1e-6)
                continue;
            const bool in_half = hp.contains(make_point(x, 1e-9));
            REQUIRE(s.contains(x, 0.0) != in_half);
        }
    }
}

TEST_CASE("annulus group has boundary [-e^a, -1] u [1, e^a]") {
    for (double a : {0.3, kLn2, 1.0}) {
        const QuiltSpec spec = annulus_spec(a, 6);
        const GroupApprox G = build_group(spec);
        const DirichletApprox D = boundary_at_infinity(G.basepoint, G.ball.elements, 6);
        REQUIRE(D.boundary.size() == 2);
        const double ea = std::exp(a);
        CHECK(std::abs(D.boundary[0].lo.value + ea) < 1e-10);
        CHECK(std::abs(D.boundary[0].hi.value + 1.0) < 1e-10);
        CHECK(std::abs(D.boundary[1].lo.value - 1.0) < 1e-10);
        CHECK(std::abs(D.boundary[1].hi.value - ea) < 1e-10);
        CHECK(!D.boundary_contains_infinity());
        const auto par = detect_parabolic_boundary(G.ball.elements, IdealInterval::between(-ea, ea), D);
        CHECK(par.empty());
        const PredictionReport r = compare_to_prediction(G, spec, {2, 4, 6});
        CHECK(!r.has_cstar);
        CHECK(r.monotone);
        CHECK(r.negative_interval_ok);
    }
}

TEST_CASE("empty element list gives the whole circle") {
    const DirichletApprox D = boundary_at_infinity(make_point(0, 1), {}, 0);
    REQUIRE(D.boundary.size() == 1);
    CHECK(D.boundary[0].full);
    CHECK(!D.warning.empty());
}

TEST_CASE("sweep handles touching shadows, infinity and wrap-around") {
    const HPoint c = make_point(0.0, 1.0);
    // Translations z -> z + 2 and inverse: bisectors Re z = 1 and Re z = -1.
    const Isometry t = Isometry::from(1, 2, 0, 1);
    DirichletApprox D = boundary_at_infinity(c, {element_of(t), element_of(invert(t))});
    // [-1, 1] plus the cusp at inf.
    REQUIRE(D.boundary.size() == 2);
    CHECK(D.boundary[0].lo.value == doctest::Approx(-1.0));
    CHECK(D.boundary[0].hi.value == doctest::Approx(1.0));
    CHECK(D.boundary[1].is_point());
    CHECK(D.boundary_contains_infinity());

    // Only z -> z + 2: boundary (-inf, 1] joined through inf.
    D = boundary_at_infinity(c, {element_of(t)});
    REQUIRE(D.boundary.size() == 1);
    CHECK(D.boundary[0].lo.infinite);
    CHECK(D.boundary_contains_infinity());
    CHECK(D.boundary_contains(-50.0));

    // Two dilations touching at a point: shadows (-1,1)-complement pieces meet.
    const Isometry d = Isometry::from(2, 0, 0, 0.5);
    D = boundary_at_infinity(c, {element_of(d), element_of(invert(d))});
    REQUIRE(D.boundary.size() == 2);
    CHECK(D.measure_in(-10, 10) == doctest::Approx(2 * (2.0 - 0.5)).epsilon(1e-12));
}

TEST_CASE("shipped quilt matches the predicted limit set") {
    const QuiltSpec spec = build_quilt_spec(three_points(), kLn2, 3, 10, false);
    const GroupApprox G = build_group(spec);
    std::vector<DirichletApprox> stages;
    const PredictionReport r = compare_to_prediction(G, spec, {6, 8, 10}, &stages);
    REQUIRE(r.stages.size() == 3);
    CHECK(r.has_cstar);
    CHECK(r.monotone);
    CHECK(r.cstar_always_contained);
    CHECK(r.excess_nonincreasing);
    CHECK(r.hausdorff_nonincreasing);
    CHECK(r.negative_interval_ok);
    for (const auto& st : r.stages) {
        CHECK(st.negative_interval_exact);
        MESSAGE("L=" << st.word_length << " n=" << st.elements << " excess=" << st.excess_measure
                     << " hausdorff=" << st.hausdorff << " parabolics=" << st.parabolic_count
                     << " gap=" << st.min_parabolic_gap);
    }
    for (double x : {1.0, 4.0 / 3.0, 2.0}) CHECK(stages.back().boundary_contains(x, 1e-9));
    CHECK(!render_svg(stages.back(), spec).empty());
    CHECK(render_svg(stages.back(), spec) == render_svg(stages.back(), spec));
}

TEST_CASE("disc extension removes the negative interval") {
    const QuiltSpec spec = build_quilt_spec(three_points(), 0.5, 3, 10, true);
    const GroupApprox G = build_group(spec);
    const PredictionReport r = compare_to_prediction(G, spec, {6, 8, 10});
    CHECK(r.negative_interval_ok);
    CHECK(r.stages.back().negative_measure < 0.05);
    CHECK(r.monotone);

    const QuiltSpec plain = build_quilt_spec(three_points(), 0.5, 3, 10, false);
    const PredictionReport rp = compare_to_prediction(build_group(plain), plain, {6, 8, 10});
    CHECK(rp.negative_interval_ok);
    CHECK(rp.stages.back().negative_measure == doctest::Approx(std::exp(0.5) - 1.0));
}

TEST_CASE("boundaries shrink along nested balls") {
    testgen::Gen gen(73);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Generator> gens;
        for (int k = 0; k < 2; ++k) gens.push_back({"g" + std::to_string(k), gen.isometry(1)});
        const HPoint p = gen.point(1.0);
        const BallResult ball = enumerate_ball(gens, 5, p, std::nullopt);
        DirichletApprox prev = boundary_at_infinity(p, truncate_ball(ball.elements, 1));
        for (int L = 2; L <= 5; ++L) {
            const DirichletApprox next = boundary_at_infinity(p, truncate_ball(ball.elements, L));
            REQUIRE(boundary_contained(next, prev, 1e-9));
            prev = next;
        }
    }
}

TEST_CASE("parabolic generator fixed points on the boundary are detected and isolated") {
    const QuiltSpec spec = build_quilt_spec(three_points(), kLn2, 3, 10, false);
    const GroupApprox G = build_group(spec);
    const double ea = std::exp(spec.a);
    const DirichletApprox D = boundary_at_infinity(G.basepoint, G.ball.elements, 10);
    const auto found = detect_parabolic_boundary(G.ball.elements, IdealInterval::between(-ea, ea), D);
    int on_boundary = 0;
    for (const Generator& g : G.generators) {
        if (classify(g.g) != IsometryClass::parabolic) continue;
        const double x = fixed_points(g.g).front().value;
        if (!D.boundary_contains(x, 1e-9)) continue;
        ++on_boundary;
        bool hit = false;
        for (const ParabolicPoint& p : found) hit = hit || std::abs(p.point - x) < 1e-9;
        CHECK(hit);
    }
    CHECK(on_boundary >= 3);
    for (const ParabolicPoint& p : found) {
        CHECK(p.gap > 0.0);
        CHECK(D.boundary_contains(p.point, 1e-9));
    }
}
