#pragma once

#include "quilt/hyperbolic.hpp"

namespace quilt {

// Right triangle with E = i, B = k i and A = s + t i on the unit circle.
struct RightTriangleSample {
    double k = 2.0;
    double t = 0.5;

    HPoint E() const;
    HPoint B() const;
    HPoint A() const;
};

// Quadrilateral B = i, A = x0 + i y0 on the unit circle, C = x0 + i y1, D = r i.
struct QuadSample {
    double x0 = 0.5;
    double r = 2.0;

    double y0() const;
    double y1() const;
    HPoint A() const;
    HPoint B() const;
    HPoint C() const;
    HPoint D() const;
};

struct QuadSides {
    double BD = 0.0, AB = 0.0, AC = 0.0, CD = 0.0;
};

double log_cosh_bound(double k);  // log((k^2 + 1) / 2k)

double triangle_gap(double k, double t);
double triangle_gap_metric(double k, double t);

double detour_slack(const HPoint& A, const HPoint& C, const HPoint& B, const Geodesic& gamma);

double quad_defect(double x0, double r);
QuadSides quad_sides_closed(double x0, double r);
QuadSides quad_sides_metric(double x0, double r);
double quad_defect_metric(double x0, double r);

double kappa(double R);
double kappa_inverse(double y);

double collar_halfwidth(double len);

}  // namespace quilt
