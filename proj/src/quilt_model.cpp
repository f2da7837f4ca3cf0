#include "quilt/quilt_model.hpp"

#include "quilt/lemmas.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace quilt {

namespace {

constexpr double kPosTol = 1e-12;

double wrap(double s, double a) {
    double r = std::fmod(s, a);
    if (r < 0.0) r += a;
    if (a - r <= kPosTol * a) r = 0.0;
    return r;
}

[[noreturn]] void violated(const std::string& clause) { throw SpecError("invariant violated: " + clause); }

}  // namespace

bool CompactSet::contains(double x, double tol) const {
    for (const Component& c : parts)
        if (x >= c.lo - tol && x <= c.hi + tol) return true;
    return false;
}

CompactSet make_compact_set(std::vector<Component> parts) {
    if (parts.empty()) throw DegenerateInput("compact set is empty");
    for (const Component& c : parts)
        if (!std::isfinite(c.lo) || !std::isfinite(c.hi) || c.lo > c.hi)
            throw DegenerateInput("component must be a finite closed interval");
    std::sort(parts.begin(), parts.end(), [](const Component& l, const Component& r) { return l.lo < r.lo; });
    for (size_t i = 1; i < parts.size(); ++i)
        if (!(parts[i].lo > parts[i - 1].hi)) throw DegenerateInput("components must be pairwise disjoint");
    if (parts.size() == 1 && parts[0].is_point()) throw DegenerateInput("compact set needs at least two points");
    if (parts.size() == 1) throw DegenerateInput("compact set must not be a single interval");
    return CompactSet{std::move(parts)};
}

CompactSet cantor_stage(int n, double lo, double hi) {
    if (n < 0) throw DomainError("cantor stage must be nonnegative");
    std::vector<Component> parts{{lo, hi}};
    for (int step = 0; step < n; ++step) {
        std::vector<Component> next;
        for (const Component& c : parts) {
            const double third = (c.hi - c.lo) / 3.0;
            next.push_back({c.lo, c.lo + third});
            next.push_back({c.hi - third, c.hi});
        }
        parts = std::move(next);
    }
    if (parts.size() == 1) return make_compact_set({{lo, lo}, {hi, hi}});
    return make_compact_set(std::move(parts));
}

Normalization normalize_compact_set(const CompactSet& K, double a) {
    if (!(a > 0.0)) throw DomainError("annulus length must be positive");
    if (K.parts.empty() || K.max() <= K.min()) throw DegenerateInput("compact set needs at least two points");
    Normalization n;
    const double ea = std::exp(a);
    n.A = (ea - 1.0) / (K.max() - K.min());
    n.B = 1.0 - n.A * K.min();
    for (const Component& c : K.parts) n.image.parts.push_back({n.apply(c.lo), n.apply(c.hi)});
    n.image.parts.front().lo = 1.0;
    n.image.parts.back().hi = ea;
    return n;
}

double lambda_map(double c_star, double a) {
    if (!(c_star >= 1.0 - 1e-12 && c_star <= std::exp(a) * (1.0 + 1e-12)))
        throw DomainError("lambda map input must lie in [1, e^a]");
    return std::log(c_star);
}

double lambda_inverse(double s) { return std::exp(s); }

double CircleSet::arc_measure() const {
    double m = 0.0;
    for (const Arc& arc : arcs) m += arc.hi - arc.lo;
    return m;
}

CircleSet make_circle_set(double a, std::vector<Arc> arcs) {
    if (!(a > 0.0)) throw DomainError("circumference must be positive");
    for (Arc& arc : arcs) {
        if (!(arc.hi >= arc.lo) || arc.hi - arc.lo >= a) throw DegenerateInput("arc must be shorter than the circle");
        const double len = arc.hi - arc.lo;
        arc.lo = wrap(arc.lo, a);
        arc.hi = arc.lo + len;
    }
    std::sort(arcs.begin(), arcs.end(), [](const Arc& l, const Arc& r) { return l.lo < r.lo; });
    for (size_t i = 0; i < arcs.size(); ++i) {
        const Arc& cur = arcs[i];
        const Arc& next = arcs[(i + 1) % arcs.size()];
        const double next_lo = (i + 1 == arcs.size()) ? next.lo + a : next.lo;
        if (arcs.size() > 1 && !(next_lo > cur.hi + kPosTol)) throw DegenerateInput("arcs must be disjoint");
    }
    return CircleSet{a, std::move(arcs)};
}

std::vector<IntervalRec> complement_intervals(const CircleSet& cs) {
    const double a = cs.circumference;
    const size_t n = cs.arcs.size();
    if (n < 2) throw SpecError("complement of C must have at least two components");
    std::vector<IntervalRec> out;
    for (size_t i = 0; i < n; ++i) {
        const Arc& cur = cs.arcs[i];
        const double next_lo = (i + 1 == n) ? cs.arcs[0].lo + a : cs.arcs[i + 1].lo;
        IntervalRec rec;
        rec.length = next_lo - cur.hi;
        rec.start = wrap(cur.hi, a);
        rec.end = wrap(next_lo, a);
        out.push_back(rec);
    }
    std::stable_sort(out.begin(), out.end(), [](const IntervalRec& l, const IntervalRec& r) {
        if (std::abs(l.length - r.length) > kPosTol) return l.length > r.length;
        return l.start < r.start;
    });
    for (size_t i = 0; i < out.size(); ++i) out[i].index = static_cast<int>(i) + 1;
    return out;
}

double lift_base(const CircleSet& cs) {
    if (cs.arcs.empty()) return 0.0;
    return cs.arcs.front().lo;
}

double lifted_start(const IntervalRec& rec, double base, double a) {
    double s = rec.start;
    while (s < base - kPosTol) s += a;
    return s;
}

std::vector<Geodesic> scaffolding_lifts(const std::vector<IntervalRec>& intervals, double a, double base) {
    std::vector<double> positions;
    for (const IntervalRec& rec : intervals) {
        const double s = lifted_start(rec, base, a);
        positions.push_back(s);
        double e = s + rec.length;
        if (e >= base + a - kPosTol) e -= a;
        positions.push_back(e);
    }
    std::sort(positions.begin(), positions.end());
    std::vector<Geodesic> lifts;
    for (size_t i = 0; i < positions.size(); ++i) {
        if (i > 0 && positions[i] - positions[i - 1] <= kPosTol) continue;
        lifts.push_back(Geodesic::semicircle(0.0, std::exp(positions[i])));
    }
    return lifts;
}

std::vector<double> FluteSpec::lengths() const {
    std::vector<double> out(static_cast<size_t>(depth), tail_length);
    if (!out.empty()) out[0] = first_length;
    return out;
}

std::vector<double> QuiltSpec::c_positions() const {
    std::vector<double> out;
    const double a = circle.circumference;
    for (const Arc& arc : circle.arcs) {
        out.push_back(wrap(arc.lo, a));
        if (arc.hi > arc.lo) out.push_back(wrap(arc.hi, a));
    }
    std::sort(out.begin(), out.end());
    return out;
}

void validate(const QuiltSpec& spec) {
    if (!(spec.a > 0.0 && spec.a <= 1.0)) violated("0 < a <= 1");
    if (spec.theoremC) {
        if (!(spec.a < 1.0)) violated("a < 1 when the twice-punctured disc is glued");
        if (!(collar_halfwidth(spec.a) > spec.a)) {
            std::ostringstream msg;
            msg << "collar half-width " << collar_halfwidth(spec.a) << " must exceed a = " << spec.a;
            violated(msg.str());
        }
    }
    if (spec.word_ball < 1) violated("word_ball >= 1");
    if (!(spec.prune_radius > 0.0)) violated("prune_radius > 0");
    if (spec.flutes.size() != spec.intervals.size()) violated("one flute per complement interval");
    const double R = kappa_inverse(spec.a + 1.0);
    for (size_t i = 0; i < spec.flutes.size(); ++i) {
        const FluteSpec& f = spec.flutes[i];
        if (!(f.first_length > 0.0)) violated("first flute length > 0");
        if (std::abs(f.first_length - spec.intervals[i].length) > 1e-12) violated("first flute length = |I_i|");
        if (std::abs(f.tail_length - R) > 1e-12) violated("tail length R = kappa_inverse(a + 1)");
        if (f.depth < 1) violated("flute depth >= 1");
    }
}

QuiltSpec build_quilt_spec(const CompactSet& K, double a, int depth, int word_ball, bool theoremC,
                           double prune_radius) {
    QuiltSpec spec;
    spec.a = a;
    spec.K = K;
    spec.word_ball = word_ball;
    spec.prune_radius = prune_radius;
    spec.theoremC = theoremC;
    if (!(a > 0.0 && a <= 1.0)) violated("0 < a <= 1");
    spec.phi = normalize_compact_set(K, a);

    std::vector<Arc> arcs;
    for (const Component& c : spec.phi.image.parts) arcs.push_back({lambda_map(c.lo, a), lambda_map(c.hi, a)});
    arcs.front().lo = 0.0;
    arcs.back().hi = a;
    // The two extreme points of C* land on the same point of the circle.
    Arc first = arcs.front(), last = arcs.back();
    arcs.erase(arcs.begin());
    arcs.pop_back();
    arcs.push_back({last.lo, a + first.hi});
    spec.circle = make_circle_set(a, arcs);
    spec.intervals = complement_intervals(spec.circle);

    const double R = kappa_inverse(a + 1.0);
    for (const IntervalRec& rec : spec.intervals) spec.flutes.push_back({rec.length, R, depth});
    validate(spec);
    return spec;
}

QuiltSpec annulus_spec(double a, int word_ball, double prune_radius) {
    QuiltSpec spec;
    spec.a = a;
    spec.word_ball = word_ball;
    spec.prune_radius = prune_radius;
    spec.circle.circumference = a;
    validate(spec);
    return spec;
}

}  // namespace quilt
