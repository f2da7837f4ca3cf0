#pragma once

#include <Eigen/Dense>

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace quilt {

using cplx = std::complex<double>;

struct DegenerateInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Point of the upper half-plane.
struct HPoint {
    double x = 0.0;
    double y = 1.0;

    cplx z() const { return {x, y}; }
};

HPoint make_point(double x, double y);
HPoint make_point(cplx z);

// Point of R u {inf}.
struct IdealPoint {
    double value = 0.0;
    bool infinite = false;

    static IdealPoint at(double v) { return {v, false}; }
    static IdealPoint infinity() { return {0.0, true}; }
};

bool same_ideal(const IdealPoint& p, const IdealPoint& q, double tol = 1e-12);

struct Geodesic {
    enum class Kind { vertical, semicircle };

    Kind kind = Kind::vertical;
    double center = 0.0;  // foot for vertical lines
    double radius = 0.0;

    static Geodesic vertical(double foot);
    static Geodesic semicircle(double center, double radius);

    bool is_vertical() const { return kind == Kind::vertical; }
    // Endpoints ordered (low, high); a vertical line ends at (foot, inf).
    IdealPoint lo() const;
    IdealPoint hi() const;
};

// z -> m(z) when orientation is +1, z -> m(-conj z) when it is -1.
struct Isometry {
    Eigen::Matrix2d m = Eigen::Matrix2d::Identity();
    int orientation = 1;

    static Isometry identity() { return {}; }
    static Isometry from(double a, double b, double c, double d, int orientation = 1);

    double trace() const { return m(0, 0) + m(1, 1); }
};

// side +1 is Re z > foot for a vertical boundary and |z - c| > r for a semicircle.
struct HalfPlane {
    Geodesic boundary;
    int side = 1;

    bool contains(const HPoint& z) const;
    double signed_value(const HPoint& z) const;
};

enum class IsometryClass { identity, elliptic, parabolic, hyperbolic };

inline constexpr double kParabolicBand = 1e-9;

double distance(const HPoint& z, const HPoint& w);
double distance_cosh_form(const HPoint& z, const HPoint& w);

HPoint apply(const Isometry& g, const HPoint& z);
IdealPoint apply_ideal(const Isometry& g, const IdealPoint& q);
Geodesic apply_geodesic(const Isometry& g, const Geodesic& gamma);
HalfPlane apply_halfplane(const Isometry& g, const HalfPlane& hp);

Isometry canonical(Isometry g);
Isometry compose(const Isometry& g, const Isometry& h);
Isometry invert(const Isometry& g);
Isometry conjugate(const Isometry& by, const Isometry& g);
double max_entry_gap(const Isometry& g, const Isometry& h);

Geodesic geodesic_between(const HPoint& p, const HPoint& q);
Geodesic geodesic_from_endpoints(const IdealPoint& u, const IdealPoint& v);

Geodesic perpendicular_bisector(const HPoint& p, const HPoint& q);

// Orientation-preserving map sending gamma.lo() to 0 and gamma.hi() to inf.
Isometry standardizer(const Geodesic& gamma);
// Unit-speed point on gamma; s = 0 is the top of a semicircle or height 1 on a vertical line,
// increasing toward hi().
HPoint point_on(const Geodesic& gamma, double s);
double arclength_param(const Geodesic& gamma, const HPoint& z);

HPoint foot_of_perpendicular(const HPoint& z, const Geodesic& gamma);
double distance_to_geodesic(const HPoint& z, const Geodesic& gamma);
Geodesic orthogonal_geodesic_at(const Geodesic& gamma, double s);
bool on_geodesic(const HPoint& z, const Geodesic& gamma, double tol = 1e-10);

Isometry reflect_in(const Geodesic& gamma);

IsometryClass classify(const Isometry& g);
double translation_length(const Isometry& g);
std::vector<IdealPoint> fixed_points(const Isometry& g);

// Length of the common perpendicular; 0 when asymptotic, empty when the geodesics cross.
std::optional<double> geodesic_gap(const Geodesic& g1, const Geodesic& g2);

std::optional<HPoint> intersect(const Geodesic& g1, const Geodesic& g2);

std::string to_string(IsometryClass c);

}  // namespace quilt
