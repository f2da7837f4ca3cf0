#include "quilt/hyperbolic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace quilt {

namespace {

const Eigen::Matrix2d kFlip = (Eigen::Matrix2d() << 1.0, 0.0, 0.0, -1.0).finished();

cplx act(const Eigen::Matrix2d& m, cplx w) {
    return (m(0, 0) * w + m(0, 1)) / (m(1, 0) * w + m(1, 1));
}

// Picks the sign of +-m; values are already unimodular.
Isometry sign_normalized(Isometry g) {
    const double scale = g.m.cwiseAbs().maxCoeff();
    const double entries[3] = {g.m(0, 0), g.m(0, 1), g.m(1, 0)};
    for (double e : entries) {
        if (std::abs(e) > 1e-13 * scale) {
            if (e < 0.0) g.m = -g.m;
            break;
        }
    }
    return g;
}

}  // namespace

HPoint make_point(double x, double y) {
    if (!std::isfinite(x) || !std::isfinite(y) || !(y > 0.0))
        throw DomainError("point must be finite with positive height");
    return {x, y};
}

HPoint make_point(cplx z) { return make_point(z.real(), z.imag()); }

bool same_ideal(const IdealPoint& p, const IdealPoint& q, double tol) {
    if (p.infinite || q.infinite) return p.infinite && q.infinite;
    return std::abs(p.value - q.value) <= tol * (1.0 + std::abs(p.value) + std::abs(q.value));
}

Geodesic Geodesic::vertical(double foot) {
    if (!std::isfinite(foot)) throw DomainError("vertical geodesic needs a finite foot");
    return {Kind::vertical, foot, 0.0};
}

Geodesic Geodesic::semicircle(double center, double radius) {
    if (!std::isfinite(center) || !std::isfinite(radius) || !(radius > 0.0))
        throw DomainError("semicircle needs a finite center and positive radius");
    return {Kind::semicircle, center, radius};
}

IdealPoint Geodesic::lo() const {
    return is_vertical() ? IdealPoint::at(center) : IdealPoint::at(center - radius);
}

IdealPoint Geodesic::hi() const {
    return is_vertical() ? IdealPoint::infinity() : IdealPoint::at(center + radius);
}

Isometry Isometry::from(double a, double b, double c, double d, int orientation) {
    Isometry g;
    g.m << a, b, c, d;
    g.orientation = orientation;
    return canonical(g);
}

double HalfPlane::signed_value(const HPoint& z) const {
    if (boundary.is_vertical()) return side * (z.x - boundary.center);
    const double dx = z.x - boundary.center;
    return side * (dx * dx + z.y * z.y - boundary.radius * boundary.radius);
}

bool HalfPlane::contains(const HPoint& z) const { return signed_value(z) > 0.0; }

double distance(const HPoint& z, const HPoint& w) {
    const double a = std::abs(z.z() - std::conj(w.z()));
    const double b = std::abs(z.z() - w.z());
    // (a+b)/(a-b) rewritten with a^2 - b^2 = 4 Im z Im w to avoid cancellation.
    return 2.0 * std::log((a + b) / (2.0 * std::sqrt(z.y * w.y)));
}

double distance_cosh_form(const HPoint& z, const HPoint& w) {
    // arccosh(1 + x) without forming 1 + x
    const double x = std::norm(z.z() - w.z()) / (2.0 * z.y * w.y);
    return std::log1p(x + std::sqrt(x * (x + 2.0)));
}

HPoint apply(const Isometry& g, const HPoint& z) {
    cplx w = z.z();
    if (g.orientation < 0) w = -std::conj(w);
    const cplx r = act(g.m, w);
    return {r.real(), r.imag()};
}

IdealPoint apply_ideal(const Isometry& g, const IdealPoint& q) {
    const double a = g.m(0, 0), b = g.m(0, 1), c = g.m(1, 0), d = g.m(1, 1);
    if (q.infinite) {
        if (c == 0.0) return IdealPoint::infinity();
        return IdealPoint::at(a / c);
    }
    const double x = g.orientation < 0 ? -q.value : q.value;
    const double den = c * x + d;
    if (std::abs(den) <= 1e-15 * (std::abs(c * x) + std::abs(d))) return IdealPoint::infinity();
    return IdealPoint::at((a * x + b) / den);
}

Geodesic apply_geodesic(const Isometry& g, const Geodesic& gamma) {
    return geodesic_from_endpoints(apply_ideal(g, gamma.lo()), apply_ideal(g, gamma.hi()));
}

namespace {

HPoint sample_inside(const HalfPlane& hp) {
    const Geodesic& b = hp.boundary;
    if (b.is_vertical()) return {b.center + hp.side, 1.0};
    if (hp.side < 0) return {b.center, 0.5 * b.radius};
    return {b.center, 2.0 * b.radius};
}

}  // namespace

HalfPlane apply_halfplane(const Isometry& g, const HalfPlane& hp) {
    HalfPlane out{apply_geodesic(g, hp.boundary), 1};
    const HPoint probe = apply(g, sample_inside(hp));
    if (!out.contains(probe)) out.side = -1;
    return out;
}

Isometry canonical(Isometry g) {
    const double det = g.m.determinant();
    if (!(det > 0.0)) throw DomainError("isometry matrix must have positive determinant");
    g.m /= std::sqrt(det);
    return sign_normalized(g);
}

Isometry compose(const Isometry& g, const Isometry& h) {
    Isometry r;
    r.m = g.orientation < 0 ? Eigen::Matrix2d(g.m * kFlip * h.m * kFlip) : Eigen::Matrix2d(g.m * h.m);
    r.orientation = g.orientation * h.orientation;
    return sign_normalized(r);
}

Isometry invert(const Isometry& g) {
    Isometry r;
    r.m << g.m(1, 1), -g.m(0, 1), -g.m(1, 0), g.m(0, 0);
    if (g.orientation < 0) r.m = kFlip * r.m * kFlip;
    r.orientation = g.orientation;
    return sign_normalized(r);
}

Isometry conjugate(const Isometry& by, const Isometry& g) { return compose(compose(by, g), invert(by)); }

double max_entry_gap(const Isometry& g, const Isometry& h) {
    if (g.orientation != h.orientation) return std::numeric_limits<double>::infinity();
    const Isometry a = sign_normalized(g), b = sign_normalized(h);
    return (a.m - b.m).cwiseAbs().maxCoeff();
}

Geodesic geodesic_between(const HPoint& p, const HPoint& q) {
    if (std::abs(p.x - q.x) + std::abs(p.y - q.y) <= 1e-15 * (1.0 + std::abs(p.x) + p.y))
        throw DegenerateInput("geodesic through coincident points");
    if (std::abs(p.x - q.x) <= 1e-14 * (1.0 + std::abs(p.x) + std::abs(q.x)))
        return Geodesic::vertical(0.5 * (p.x + q.x));
    const double c = (std::norm(p.z()) - std::norm(q.z())) / (2.0 * (p.x - q.x));
    return Geodesic::semicircle(c, std::abs(p.z() - c));
}

Geodesic geodesic_from_endpoints(const IdealPoint& u, const IdealPoint& v) {
    if (same_ideal(u, v, 1e-15)) throw DegenerateInput("geodesic with coincident endpoints");
    if (u.infinite) return Geodesic::vertical(v.value);
    if (v.infinite) return Geodesic::vertical(u.value);
    return Geodesic::semicircle(0.5 * (u.value + v.value), 0.5 * std::abs(u.value - v.value));
}

Geodesic perpendicular_bisector(const HPoint& p, const HPoint& q) {
    if (std::abs(p.x - q.x) + std::abs(p.y - q.y) <= 1e-15 * (1.0 + std::abs(p.x) + p.y))
        throw DegenerateInput("bisector of coincident points");
    if (std::abs(p.y - q.y) <= 1e-14 * (p.y + q.y)) return Geodesic::vertical(0.5 * (p.x + q.x));
    // Apollonius circle |z-p|^2 = lambda |z-q|^2 with lambda = Im p / Im q.
    const double lambda = p.y / q.y;
    const double c = (p.x - lambda * q.x) / (1.0 - lambda);
    const double r = std::sqrt(lambda) * std::abs(p.z() - q.z()) / std::abs(1.0 - lambda);
    return Geodesic::semicircle(c, r);
}

Isometry standardizer(const Geodesic& gamma) {
    if (gamma.is_vertical()) return Isometry::from(1.0, -gamma.center, 0.0, 1.0);
    const double lo = gamma.center - gamma.radius, hi = gamma.center + gamma.radius;
    return Isometry::from(1.0, -lo, -1.0, hi);
}

HPoint point_on(const Geodesic& gamma, double s) {
    return apply(invert(standardizer(gamma)), HPoint{0.0, std::exp(s)});
}

double arclength_param(const Geodesic& gamma, const HPoint& z) {
    return std::log(std::abs(apply(standardizer(gamma), z).z()));
}

HPoint foot_of_perpendicular(const HPoint& z, const Geodesic& gamma) {
    const Isometry t = standardizer(gamma);
    const HPoint w = apply(t, z);
    return apply(invert(t), HPoint{0.0, std::abs(w.z())});
}

double distance_to_geodesic(const HPoint& z, const Geodesic& gamma) {
    if (gamma.is_vertical()) return std::asinh(std::abs(z.x - gamma.center) / z.y);
    const double dx = z.x - gamma.center;
    const double num = std::abs(dx * dx + z.y * z.y - gamma.radius * gamma.radius);
    return std::asinh(num / (2.0 * gamma.radius * z.y));
}

Geodesic orthogonal_geodesic_at(const Geodesic& gamma, double s) {
    return apply_geodesic(invert(standardizer(gamma)), Geodesic::semicircle(0.0, std::exp(s)));
}

bool on_geodesic(const HPoint& z, const Geodesic& gamma, double tol) {
    return distance_to_geodesic(z, gamma) <= tol;
}

Isometry reflect_in(const Geodesic& gamma) {
    if (gamma.is_vertical()) return Isometry::from(1.0, 2.0 * gamma.center, 0.0, 1.0, -1);
    const double c = gamma.center, r = gamma.radius;
    return Isometry::from(c / r, (c * c - r * r) / r, 1.0 / r, c / r, -1);
}

IsometryClass classify(const Isometry& g) {
    if (g.orientation != 1) throw DomainError("classification needs an orientation-preserving isometry");
    const Isometry h = sign_normalized(g);
    const double tr = std::abs(h.trace());
    if (std::abs(tr - 2.0) < kParabolicBand) {
        const Eigen::Matrix2d gap = h.m - Eigen::Matrix2d::Identity();
        const Eigen::Matrix2d gap2 = h.m + Eigen::Matrix2d::Identity();
        if (gap.cwiseAbs().maxCoeff() < 1e-9 || gap2.cwiseAbs().maxCoeff() < 1e-9)
            return IsometryClass::identity;
        return IsometryClass::parabolic;
    }
    return tr < 2.0 ? IsometryClass::elliptic : IsometryClass::hyperbolic;
}

double translation_length(const Isometry& g) {
    switch (classify(g)) {
        case IsometryClass::elliptic:
            throw DomainError("elliptic isometry has no translation length");
        case IsometryClass::hyperbolic:
            return 2.0 * std::acosh(0.5 * std::abs(g.trace()));
        default:
            return 0.0;
    }
}

std::vector<IdealPoint> fixed_points(const Isometry& g) {
    if (g.orientation != 1) throw DomainError("fixed points need an orientation-preserving isometry");
    const Isometry h = sign_normalized(g);
    const double a = h.m(0, 0), b = h.m(0, 1), c = h.m(1, 0), d = h.m(1, 1);
    const double scale = h.m.cwiseAbs().maxCoeff();
    std::vector<IdealPoint> out;
    const IsometryClass kind = classify(h);
    if (kind == IsometryClass::identity || kind == IsometryClass::elliptic) return out;
    if (std::abs(c) <= 1e-14 * scale) {
        if (kind == IsometryClass::hyperbolic) out.push_back(IdealPoint::at(b / (d - a)));
        out.push_back(IdealPoint::infinity());
        return out;
    }
    if (kind == IsometryClass::parabolic) {
        out.push_back(IdealPoint::at((a - d) / (2.0 * c)));
        return out;
    }
    const double root = std::sqrt(h.trace() * h.trace() - 4.0);
    double x1 = (a - d - root) / (2.0 * c), x2 = (a - d + root) / (2.0 * c);
    if (x1 > x2) std::swap(x1, x2);
    out.push_back(IdealPoint::at(x1));
    out.push_back(IdealPoint::at(x2));
    return out;
}

std::optional<double> geodesic_gap(const Geodesic& g1, const Geodesic& g2) {
    const Geodesic h = apply_geodesic(standardizer(g1), g2);
    if (h.is_vertical()) return 0.0;  // shares the endpoint at infinity
    double u = h.center - h.radius, v = h.center + h.radius;
    const double tol = 1e-13 * (std::abs(u) + std::abs(v));
    if (std::abs(u) <= tol || std::abs(v) <= tol) return 0.0;
    if (u < 0.0 && v > 0.0) return std::nullopt;
    u = std::abs(u);
    v = std::abs(v);
    if (u > v) std::swap(u, v);
    return std::acosh((v + u) / (v - u));
}

std::optional<HPoint> intersect(const Geodesic& g1, const Geodesic& g2) {
    const Isometry t = standardizer(g1);
    const Geodesic h = apply_geodesic(t, g2);
    if (h.is_vertical()) return std::nullopt;
    if (std::abs(h.center) >= h.radius) return std::nullopt;
    const double y = std::sqrt(h.radius * h.radius - h.center * h.center);
    return apply(invert(t), HPoint{0.0, y});
}

std::string to_string(IsometryClass c) {
    switch (c) {
        case IsometryClass::identity: return "identity";
        case IsometryClass::elliptic: return "elliptic";
        case IsometryClass::parabolic: return "parabolic";
        case IsometryClass::hyperbolic: return "hyperbolic";
    }
    return "unknown";
}

}  // namespace quilt
