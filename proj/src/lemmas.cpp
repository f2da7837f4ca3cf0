#include "quilt/lemmas.hpp"

#include <cmath>

namespace quilt {

namespace {

void check_triangle(double k, double t) {
    if (!(k > 1.0) || !std::isfinite(k)) throw DomainError("triangle leg parameter must exceed 1");
    if (!(t > 0.0 && t < 1.0)) throw DomainError("triangle height must lie in (0, 1)");
}

void check_quad(double x0, double r) {
    if (!(x0 > 0.0 && x0 < 1.0)) throw DomainError("quad offset must lie in (0, 1)");
    if (!(r >= 1.0) || !std::isfinite(r)) throw DomainError("quad radius must be at least 1");
}

}  // namespace

HPoint RightTriangleSample::E() const { return {0.0, 1.0}; }
HPoint RightTriangleSample::B() const { return {0.0, k}; }
HPoint RightTriangleSample::A() const { return {std::sqrt(1.0 - t * t), t}; }

double QuadSample::y0() const { return std::sqrt(1.0 - x0 * x0); }
double QuadSample::y1() const { return std::sqrt(r * r - x0 * x0); }
HPoint QuadSample::A() const { return {x0, y0()}; }
HPoint QuadSample::B() const { return {0.0, 1.0}; }
HPoint QuadSample::C() const { return {x0, y1()}; }
HPoint QuadSample::D() const { return {0.0, r}; }

double log_cosh_bound(double k) { return std::log((k * k + 1.0) / (2.0 * k)); }

double triangle_gap(double k, double t) {
    check_triangle(k, t);
    const double k2 = k * k;
    const double num = 1.0 + k2 + std::sqrt(1.0 + k2 * k2 + 2.0 * k2 * (1.0 - 2.0 * t * t));
    const double den = 2.0 * k * (1.0 + std::sqrt(1.0 - t * t));
    return std::log(num / den);
}

double triangle_gap_metric(double k, double t) {
    check_triangle(k, t);
    const RightTriangleSample tri{k, t};
    const double e = distance(tri.A(), tri.B());
    const double b = distance(tri.A(), tri.E());
    return e - b;
}

double detour_slack(const HPoint& A, const HPoint& C, const HPoint& B, const Geodesic& gamma) {
    if (!on_geodesic(A, gamma, 1e-9) || !on_geodesic(C, gamma, 1e-9))
        throw DegenerateInput("A and C must lie on the line");
    const HPoint E = foot_of_perpendicular(B, gamma);
    const double be = distance(B, E);
    if (be < 1e-12) throw DegenerateInput("B lies on the line");
    const double k = std::exp(be);
    return distance(A, B) + distance(B, C) - distance(A, C) - 2.0 * log_cosh_bound(k);
}

double quad_defect(double x0, double r) {
    check_quad(x0, r);
    return std::log(1.0 + x0) + std::log(r / (r + x0));
}

QuadSides quad_sides_closed(double x0, double r) {
    check_quad(x0, r);
    const QuadSample q{x0, r};
    return {std::log(r), std::log((1.0 + x0) / q.y0()), std::log(q.y1() / q.y0()), std::log((r + x0) / q.y1())};
}

QuadSides quad_sides_metric(double x0, double r) {
    check_quad(x0, r);
    const QuadSample q{x0, r};
    return {distance(q.B(), q.D()), distance(q.A(), q.B()), distance(q.A(), q.C()), distance(q.C(), q.D())};
}

double quad_defect_metric(double x0, double r) {
    const QuadSides s = quad_sides_metric(x0, r);
    return (s.AB + s.BD) - (s.AC + s.CD);
}

double kappa(double R) {
    if (!(R >= 0.0)) throw DomainError("kappa needs a nonnegative argument");
    return 2.0 * std::log(std::cosh(R));
}

double kappa_inverse(double y) {
    if (!(y >= 0.0)) throw DomainError("kappa inverse needs a nonnegative argument");
    return std::acosh(std::exp(0.5 * y));
}

double collar_halfwidth(double len) {
    if (!(len > 0.0)) throw DomainError("collar needs a positive length");
    return std::asinh(1.0 / (2.0 * std::sinh(0.5 * len)));
}

}  // namespace quilt
