#include "quilt/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

namespace quilt {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSweepTol = 1e-12;

struct Piece {
    double l, h;
};

// Closed-set view on the real line; the flag records whether inf belongs to the set.
struct RealView {
    std::vector<Piece> pieces;
    bool has_inf = false;
};

RealView real_view(const IdealInterval& iv) {
    RealView v;
    if (iv.full) return {{{-kInf, kInf}}, true};
    const bool lo_inf = iv.lo.infinite, hi_inf = iv.hi.infinite;
    if (lo_inf && hi_inf) return {{}, true};
    if (lo_inf) return {{{-kInf, iv.hi.value}}, true};
    if (hi_inf) return {{{iv.lo.value, kInf}}, true};
    if (iv.lo.value <= iv.hi.value) return {{{iv.lo.value, iv.hi.value}}, false};
    return {{{-kInf, iv.hi.value}, {iv.lo.value, kInf}}, true};
}

RealView real_view(const std::vector<IdealInterval>& set) {
    RealView out;
    for (const IdealInterval& iv : set) {
        const RealView v = real_view(iv);
        out.pieces.insert(out.pieces.end(), v.pieces.begin(), v.pieces.end());
        out.has_inf = out.has_inf || v.has_inf;
    }
    std::sort(out.pieces.begin(), out.pieces.end(), [](const Piece& a, const Piece& b) { return a.l < b.l; });
    return out;
}

double overlap(const Piece& p, double lo, double hi) { return std::max(0.0, std::min(p.h, hi) - std::max(p.l, lo)); }

double gap_to(const Piece& p, double x) {
    if (x < p.l) return p.l - x;
    if (x > p.h) return x - p.h;
    return 0.0;
}

}  // namespace

bool IdealInterval::is_point() const {
    if (full) return false;
    if (lo.infinite || hi.infinite) return lo.infinite && hi.infinite;
    return lo.value == hi.value;
}

bool IdealInterval::wraps() const { return full || (!lo.infinite && !hi.infinite && lo.value > hi.value); }

bool IdealInterval::contains(double x, double tol) const {
    for (const Piece& p : real_view(*this).pieces)
        if (x >= p.l - tol && x <= p.h + tol) return true;
    return false;
}

bool IdealInterval::contains_infinity() const { return real_view(*this).has_inf; }

double IdealInterval::measure() const {
    double m = 0.0;
    for (const Piece& p : real_view(*this).pieces) m += p.h - p.l;
    return m;
}

bool DirichletApprox::boundary_contains(double x, double tol) const {
    for (const IdealInterval& iv : boundary)
        if (iv.contains(x, tol)) return true;
    return false;
}

bool DirichletApprox::boundary_contains_infinity() const { return real_view(boundary).has_inf; }

double DirichletApprox::measure_in(double lo, double hi) const {
    double m = 0.0;
    for (const Piece& p : real_view(boundary).pieces) m += overlap(p, lo, hi);
    return m;
}

HalfPlane bisector_halfplane(const HPoint& center, const Isometry& g) {
    const HPoint image = apply(g, center);
    if (distance(center, image) < 1e-12) throw DegenerateInput("element fixes the center");
    HalfPlane hp{perpendicular_bisector(center, image), 1};
    if (!hp.contains(center)) hp.side = -1;
    return hp;
}

IdealInterval shadow(const HalfPlane& hp) {
    const Geodesic& b = hp.boundary;
    if (b.is_vertical()) {
        if (hp.side > 0) return {IdealPoint::infinity(), IdealPoint::at(b.center), false};
        return {IdealPoint::at(b.center), IdealPoint::infinity(), false};
    }
    const double lo = b.center - b.radius, hi = b.center + b.radius;
    if (hp.side > 0) return IdealInterval::between(lo, hi);
    return IdealInterval::between(hi, lo);
}

namespace {

// Complement of a union of open arcs, as closed components.
std::vector<IdealInterval> complement(const std::vector<IdealInterval>& shadows) {
    std::vector<Piece> pieces;
    bool inf_covered = false;
    for (const IdealInterval& s : shadows) {
        const RealView v = real_view(s);
        pieces.insert(pieces.end(), v.pieces.begin(), v.pieces.end());
        if (s.wraps()) inf_covered = true;
    }
    std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) {
        if (a.l != b.l) return a.l < b.l;
        return a.h < b.h;
    });
    std::vector<Piece> comps;
    double cur = -kInf;
    double last_point = std::numeric_limits<double>::quiet_NaN();
    for (const Piece& p : pieces) {
        if (p.l > cur + kSweepTol) {
            comps.push_back({cur, p.l});
        } else if (std::isfinite(cur) && p.l >= cur - kSweepTol && p.h > cur + kSweepTol) {
            if (!(last_point == cur)) comps.push_back({cur, cur});
            last_point = cur;
        }
        cur = std::max(cur, p.h);
    }
    if (cur < kInf) comps.push_back({cur, kInf});

    std::vector<IdealInterval> out;
    if (comps.empty()) {
        if (!inf_covered) out.push_back({IdealPoint::infinity(), IdealPoint::infinity(), false});
        return out;
    }
    const bool left_open = comps.front().l == -kInf, right_open = comps.back().h == kInf;
    if (left_open && right_open && comps.size() == 1) return {IdealInterval::whole()};
    size_t first = 0, last = comps.size();
    if (left_open && right_open) {
        ++first;
        --last;
    } else if (left_open) {
        out.push_back({IdealPoint::infinity(), IdealPoint::at(comps.front().h), false});
        ++first;
    }
    for (size_t i = first; i < last; ++i) {
        if (i + 1 == comps.size() && right_open) continue;
        out.push_back(IdealInterval::between(comps[i].l, comps[i].h));
    }
    if (left_open && right_open) {
        out.push_back(IdealInterval::between(comps.back().l, comps.front().h));
    } else if (right_open) {
        out.push_back({IdealPoint::at(comps.back().l), IdealPoint::infinity(), false});
    } else if (!left_open && !inf_covered) {
        out.push_back({IdealPoint::infinity(), IdealPoint::infinity(), false});
    }
    return out;
}

}  // namespace

DirichletApprox boundary_at_infinity(const HPoint& center, const std::vector<Element>& elements, int ball_param) {
    DirichletApprox out;
    out.center = center;
    out.ball_param = ball_param;
    for (const Element& e : elements) {
        if (distance(center, apply(e.g, center)) < 1e-12) continue;
        out.halfplanes.push_back(bisector_halfplane(center, e.g));
        out.shadows.push_back(shadow(out.halfplanes.back()));
    }
    if (out.shadows.empty()) {
        out.warning = "no nontrivial elements: the boundary is the whole circle";
        out.boundary = {IdealInterval::whole()};
        return out;
    }
    out.boundary = complement(out.shadows);
    return out;
}

std::vector<ParabolicPoint> detect_parabolic_boundary(const std::vector<Element>& elements, const IdealInterval& window,
                                                      const DirichletApprox& approx) {
    std::vector<double> points;
    for (const Element& e : elements) {
        if (e.g.orientation != 1 || classify(e.g) != IsometryClass::parabolic) continue;
        const auto fp = fixed_points(e.g);
        if (fp.empty() || fp[0].infinite) continue;
        const double x = fp[0].value;
        if (!window.contains(x, 0.0) || !approx.boundary_contains(x, 1e-9)) continue;
        points.push_back(x);
    }
    std::sort(points.begin(), points.end());
    std::vector<ParabolicPoint> out;
    for (double x : points) {
        if (!out.empty() && std::abs(x - out.back().point) <= 1e-9 * (1.0 + std::abs(x))) continue;
        ParabolicPoint pp{x, 0.0};
        const IdealInterval* home = nullptr;
        for (const IdealInterval& iv : approx.boundary)
            if (iv.contains(x, 1e-9)) home = &iv;
        if (home && home->measure() < 1e-12 && !home->contains_infinity()) {
            double gap = kInf;
            for (const IdealInterval& iv : approx.boundary) {
                if (&iv == home) continue;
                for (const Piece& p : real_view(iv).pieces) gap = std::min(gap, gap_to(p, x));
            }
            pp.gap = gap;
        }
        out.push_back(pp);
    }
    return out;
}

bool boundary_contained(const DirichletApprox& inner, const DirichletApprox& outer, double tol) {
    const RealView in = real_view(inner.boundary), out = real_view(outer.boundary);
    if (in.has_inf && !out.has_inf) return false;
    for (const Piece& p : in.pieces) {
        bool inside = false;
        for (const Piece& q : out.pieces)
            if (q.l <= p.l + tol && p.h <= q.h + tol) inside = true;
        if (!inside) return false;
    }
    return true;
}

std::vector<Element> truncate_ball(const std::vector<Element>& elements, int word_length) {
    std::vector<Element> out;
    for (const Element& e : elements)
        if (static_cast<int>(e.word.size()) <= word_length) out.push_back(e);
    return out;
}

namespace {

double distance_to_set(const std::vector<Component>& parts, double x) {
    double best = kInf;
    for (const Component& c : parts) best = std::min(best, gap_to({c.lo, c.hi}, x));
    return best;
}

}  // namespace

PredictionReport compare_to_prediction(const GroupApprox& group, const QuiltSpec& spec, const std::vector<int>& schedule,
                                       std::vector<DirichletApprox>* approxes) {
    if (std::abs(group.a - spec.a) > 1e-15 || group.theoremC != spec.theoremC)
        throw SpecError("usage: group was not built from this spec");
    PredictionReport report;
    report.has_cstar = !spec.c_star().parts.empty();
    report.theoremC = spec.theoremC;
    const double ea = std::exp(spec.a);
    const IdealInterval window = IdealInterval::between(-ea, ea);
    const std::vector<Component>& cstar = spec.c_star().parts;
    double cstar_measure = 0.0;
    for (const Component& c : cstar) cstar_measure += c.hi - c.lo;

    DirichletApprox previous;
    for (size_t s = 0; s < schedule.size(); ++s) {
        const int L = schedule[s];
        const std::vector<Element> elems = truncate_ball(group.ball.elements, L);
        DirichletApprox approx = boundary_at_infinity(group.basepoint, elems, L);
        approx.parabolics = detect_parabolic_boundary(elems, window, approx);

        PredictionStage st;
        st.word_length = L;
        st.elements = elems.size();
        const RealView view = real_view(approx.boundary);
        st.all_cstar_contained = true;
        for (const Component& c : cstar) {
            CStarStatus cs{c.lo, c.hi, false};
            for (const Piece& p : view.pieces)
                if (p.l <= c.lo + 1e-9 && c.hi <= p.h + 1e-9) cs.contained = true;
            st.all_cstar_contained = st.all_cstar_contained && cs.contained;
            st.cstar.push_back(cs);
        }
        st.excess_measure = report.has_cstar ? std::max(0.0, approx.measure_in(1.0, ea) - cstar_measure) : 0.0;
        if (report.has_cstar) {
            for (const Piece& raw : view.pieces) {
                const Piece p{std::max(raw.l, 1.0), std::min(raw.h, ea)};
                if (p.l > p.h) continue;
                bool parabolic = false;
                if (p.h - p.l < 1e-12)
                    for (const ParabolicPoint& pp : approx.parabolics)
                        if (std::abs(pp.point - p.l) <= 1e-9 * (1.0 + std::abs(p.l))) parabolic = true;
                if (parabolic) continue;
                std::vector<double> candidates{p.l, p.h};
                for (size_t i = 0; i + 1 < cstar.size(); ++i) {
                    const double mid = 0.5 * (cstar[i].hi + cstar[i + 1].lo);
                    if (mid >= p.l && mid <= p.h) candidates.push_back(mid);
                }
                for (double x : candidates) st.hausdorff = std::max(st.hausdorff, distance_to_set(cstar, x));
            }
        }
        st.negative_measure = approx.measure_in(-ea, -1.0);
        for (const Piece& p : view.pieces)
            if (std::abs(p.l + ea) < 1e-10 && std::abs(p.h + 1.0) < 1e-10) st.negative_interval_exact = true;
        st.parabolic_count = approx.parabolics.size();
        st.min_parabolic_gap = kInf;
        for (const ParabolicPoint& pp : approx.parabolics) st.min_parabolic_gap = std::min(st.min_parabolic_gap, pp.gap);
        if (approx.parabolics.empty()) st.min_parabolic_gap = 0.0;
        if (s > 0) {
            st.contained_in_previous = boundary_contained(approx, previous);
            const PredictionStage& prev = report.stages.back();
            report.monotone = report.monotone && st.contained_in_previous;
            report.excess_nonincreasing = report.excess_nonincreasing && st.excess_measure <= prev.excess_measure + 1e-12;
            report.hausdorff_nonincreasing = report.hausdorff_nonincreasing && st.hausdorff <= prev.hausdorff + 1e-12;
        }
        if (report.has_cstar) report.cstar_always_contained = report.cstar_always_contained && st.all_cstar_contained;
        if (!spec.theoremC) report.negative_interval_ok = report.negative_interval_ok && st.negative_interval_exact;
        report.stages.push_back(st);
        previous = approx;
        if (approxes) approxes->push_back(std::move(approx));
    }
    if (spec.theoremC && !report.stages.empty())
        report.negative_interval_ok = report.stages.back().negative_measure < report.negative_tolerance;
    return report;
}

std::string render_svg(const DirichletApprox& approx, const QuiltSpec& spec, std::size_t max_arcs) {
    const double W = 900.0, H = 480.0, margin = 30.0;
    const double X = 1.6 * std::exp(spec.a);
    const double scale = (W - 2 * margin) / (2 * X);
    const double axis_y = H - margin;
    auto px = [&](double x) { return margin + (x + X) * scale; };
    auto py = [&](double y) { return axis_y - y * scale; };

    std::ostringstream s;
    s << std::fixed << std::setprecision(3);
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\" viewBox=\"0 0 " << W
      << ' ' << H << "\">\n";
    s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    s << "<line x1=\"" << margin << "\" y1=\"" << axis_y << "\" x2=\"" << W - margin << "\" y2=\"" << axis_y
      << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    s << "<g fill=\"none\" stroke=\"#4a6fa5\" stroke-width=\"0.8\">\n";
    std::size_t drawn = 0;
    for (const HalfPlane& hp : approx.halfplanes) {
        if (drawn >= max_arcs) break;
        const Geodesic& b = hp.boundary;
        if (b.is_vertical()) {
            if (std::abs(b.center) > X) continue;
            s << "<line x1=\"" << px(b.center) << "\" y1=\"" << axis_y << "\" x2=\"" << px(b.center) << "\" y2=\""
              << margin << "\"/>\n";
        } else {
            if (b.center + b.radius < -X || b.center - b.radius > X || b.radius * scale < 0.2) continue;
            s << "<path d=\"M " << px(b.center - b.radius) << ' ' << axis_y << " A " << b.radius * scale << ' '
              << b.radius * scale << " 0 0 1 " << px(b.center + b.radius) << ' ' << axis_y << "\"/>\n";
        }
        ++drawn;
    }
    s << "</g>\n<g stroke=\"#c0392b\" stroke-width=\"4\">\n";
    for (const Piece& raw : real_view(approx.boundary).pieces) {
        const double l = std::max(raw.l, -X), h = std::min(raw.h, X);
        if (l > h) continue;
        if (h - l < 1e-9) {
            s << "<circle cx=\"" << px(l) << "\" cy=\"" << axis_y << "\" r=\"3\" fill=\"#c0392b\" stroke=\"none\"/>\n";
        } else {
            s << "<line x1=\"" << px(l) << "\" y1=\"" << axis_y << "\" x2=\"" << px(h) << "\" y2=\"" << axis_y << "\"/>\n";
        }
    }
    s << "</g>\n<g stroke=\"#27ae60\" stroke-width=\"2\">\n";
    for (const Component& c : spec.c_star().parts) {
        for (double x : {c.lo, c.hi})
            s << "<line x1=\"" << px(x) << "\" y1=\"" << axis_y + 8 << "\" x2=\"" << px(x) << "\" y2=\"" << axis_y - 8
              << "\"/>\n";
    }
    s << "</g>\n";
    s << "<circle cx=\"" << px(approx.center.x) << "\" cy=\"" << py(approx.center.y)
      << "\" r=\"3\" fill=\"black\"/>\n";
    s << "</svg>\n";
    return s.str();
}

}  // namespace quilt
