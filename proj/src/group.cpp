#include "quilt/group.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <unordered_map>

namespace quilt {

ReflectionChain reflection_chain(const FluteSpec& spec) {
    ReflectionChain chain;
    chain.lengths = spec.lengths();
    if (chain.lengths.empty()) throw DomainError("flute needs at least one gamma curve");
    for (double len : chain.lengths)
        if (!(len > 0.0) || !std::isfinite(len)) throw DomainError("flute lengths must be positive");
    for (size_t j = 0; j < chain.lengths.size(); ++j) {
        const double d = 0.5 * chain.lengths[j];
        const double tau = (std::cosh(d) + 1.0) / (std::cosh(d) - 1.0);
        double u, v;
        if (j == 0) {
            u = 1.0 / std::sqrt(tau);
            v = std::sqrt(tau);
        } else {
            u = chain.v.back();
            v = tau * u;
        }
        chain.u.push_back(u);
        chain.v.push_back(v);
        chain.gammas.push_back(Geodesic::semicircle(0.5 * (u + v), 0.5 * (v - u)));
    }
    return chain;
}

std::vector<Isometry> flute_loop_elements(const ReflectionChain& chain) {
    const Isometry rho_beta = reflect_in(chain.boundary_lift);
    std::vector<Isometry> out;
    for (const Geodesic& g : chain.gammas) out.push_back(compose(rho_beta, reflect_in(g)));
    return out;
}

std::vector<Isometry> flute_parabolics(const ReflectionChain& chain) {
    std::vector<Isometry> out;
    for (size_t j = 0; j + 1 < chain.gammas.size(); ++j)
        out.push_back(compose(reflect_in(chain.gammas[j]), reflect_in(chain.gammas[j + 1])));
    return out;
}

Isometry align_map(const ReflectionChain& chain, const IntervalRec& interval, double s1) {
    if (chain.lengths.empty()) throw ConsistencyError("empty reflection chain");
    if (std::abs(interval.length - chain.lengths[0]) > 1e-9)
        throw ConsistencyError("interval length does not match the first flute length");
    // z -> e^{s1} (w - 1) / (w + 1) with w = -conj z.
    const double up = std::exp(0.5 * s1) / std::sqrt(2.0);
    const double down = std::exp(-0.5 * s1) / std::sqrt(2.0);
    return Isometry::from(up, -up, down, down, -1);
}

std::string word_string(const std::vector<Generator>& gens, const std::vector<int>& word) {
    std::string out;
    for (int letter : word) {
        if (!out.empty()) out += ' ';
        out += gens[static_cast<size_t>(letter / 2)].label;
        if (letter % 2 == 1) out += "^-1";
    }
    return out.empty() ? "id" : out;
}

namespace {

using CellKey = std::array<long long, 5>;

struct CellHash {
    size_t operator()(const CellKey& k) const {
        size_t h = 1469598103934665603ull;
        for (long long v : k) h = (h ^ static_cast<size_t>(v)) * 1099511628211ull;
        return h;
    }
};

constexpr double kGrid = 1e6;
constexpr double kSameTol = 1e-9;

// Deduplicates isometries up to sign with a coarse grid and an exact comparison inside cells.
class ElementIndex {
public:
    bool contains(const Isometry& g) const { return find(g.m, g.orientation) || find(-g.m, g.orientation); }

    void insert(const Isometry& g) {
        CellKey key;
        for (int i = 0; i < 4; ++i) key[static_cast<size_t>(i)] = static_cast<long long>(std::floor(g.m(i / 2, i % 2) * kGrid));
        key[4] = g.orientation;
        cells_[key].push_back(g.m);
    }

private:
    bool find(const Eigen::Matrix2d& m, int orientation) const {
        std::array<std::array<long long, 2>, 4> options;
        std::array<int, 4> counts{};
        for (int i = 0; i < 4; ++i) {
            const double scaled = m(i / 2, i % 2) * kGrid;
            const double base = std::floor(scaled);
            const double frac = scaled - base;
            auto& opt = options[static_cast<size_t>(i)];
            int& n = counts[static_cast<size_t>(i)];
            opt[static_cast<size_t>(n++)] = static_cast<long long>(base);
            if (frac < kSameTol * kGrid) opt[static_cast<size_t>(n++)] = static_cast<long long>(base) - 1;
            else if (frac > 1.0 - kSameTol * kGrid) opt[static_cast<size_t>(n++)] = static_cast<long long>(base) + 1;
        }
        for (int a = 0; a < counts[0]; ++a)
            for (int b = 0; b < counts[1]; ++b)
                for (int c = 0; c < counts[2]; ++c)
                    for (int d = 0; d < counts[3]; ++d) {
                        const CellKey key{options[0][static_cast<size_t>(a)], options[1][static_cast<size_t>(b)],
                                          options[2][static_cast<size_t>(c)], options[3][static_cast<size_t>(d)],
                                          orientation};
                        const auto it = cells_.find(key);
                        if (it == cells_.end()) continue;
                        for (const Eigen::Matrix2d& other : it->second)
                            if ((other - m).cwiseAbs().maxCoeff() < kSameTol) return true;
                    }
        return false;
    }

    std::unordered_map<CellKey, std::vector<Eigen::Matrix2d>, CellHash> cells_;
};

}  // namespace

BallResult enumerate_ball(const std::vector<Generator>& gens, int max_len, const HPoint& basepoint,
                          std::optional<double> prune_radius, std::size_t max_elements) {
    if (max_len < 0) throw DomainError("word length must be nonnegative");
    std::vector<Isometry> letters;
    for (const Generator& gen : gens) {
        letters.push_back(gen.g);
        letters.push_back(invert(gen.g));
    }
    BallResult result;
    result.pruned = prune_radius.has_value();
    ElementIndex seen;
    seen.insert(Isometry::identity());

    struct Node {
        Isometry g;
        std::vector<int> word;
    };
    std::vector<Node> frontier{{Isometry::identity(), {}}};
    double outside = std::numeric_limits<double>::infinity();
    for (int len = 1; len <= max_len + 1 && !frontier.empty(); ++len) {
        const bool probing = len == max_len + 1;
        std::vector<Node> next;
        for (const Node& node : frontier) {
            const int last = node.word.empty() ? -1 : node.word.back();
            for (int k = 0; k < static_cast<int>(letters.size()); ++k) {
                if (last >= 0 && k == (last ^ 1)) continue;
                Isometry g = compose(node.g, letters[static_cast<size_t>(k)]);
                if (seen.contains(g)) continue;
                const double disp = distance(basepoint, apply(g, basepoint));
                const bool beyond = prune_radius && disp > *prune_radius;
                // Generators stay in the ball even beyond the prune radius, without extensions.
                if (probing || (beyond && len > 1)) {
                    outside = std::min(outside, disp);
                    continue;
                }
                seen.insert(g);
                std::vector<int> word = node.word;
                word.push_back(k);
                result.elements.push_back({g, word, disp});
                if (result.elements.size() > max_elements)
                    throw ResourceError("word ball exceeded the element cap", result.elements.size());
                if (!beyond) next.push_back({g, std::move(word)});
            }
        }
        frontier = std::move(next);
    }
    result.certified_radius = prune_radius ? std::min(*prune_radius, outside) : outside;
    std::stable_sort(result.elements.begin(), result.elements.end(), [](const Element& l, const Element& r) {
        if (l.word.size() != r.word.size()) return l.word.size() < r.word.size();
        return l.word < r.word;
    });
    return result;
}

Region Region::disc(double center, double radius) {
    if (!(radius > 0.0)) throw DomainError("region radius must be positive");
    return {Kind::disc, center, radius, radius};
}

Region Region::inner(double radius_pos, double radius_neg) { return {Kind::inner, 0.0, radius_pos, radius_neg}; }

Region Region::outer(double radius_pos, double radius_neg) { return {Kind::outer, 0.0, radius_pos, radius_neg}; }

bool Region::contains(const HPoint& z) const {
    constexpr double margin = 1e-12;
    if (kind == Kind::disc) {
        const double dx = z.x - center;
        return dx * dx + z.y * z.y < radius * radius * (1.0 - margin);
    }
    const double r = z.x >= 0.0 ? radius : radius_neg;
    const double n = z.x * z.x + z.y * z.y;
    if (kind == Kind::inner) return n < r * r * (1.0 - margin);
    return n > r * r * (1.0 + margin);
}

HalfPlane Region::hull() const {
    switch (kind) {
        case Kind::disc: return {Geodesic::semicircle(center, radius), -1};
        case Kind::inner: return {Geodesic::semicircle(0.0, std::max(radius, radius_neg)), -1};
        case Kind::outer: return {Geodesic::semicircle(0.0, std::min(radius, radius_neg)), 1};
    }
    return {};
}

std::pair<HPoint, Isometry> PairingSystem::reduce(const HPoint& z) const {
    HPoint w = z;
    Isometry acc = Isometry::identity();
    for (int step = 0; step < 100000; ++step) {
        bool moved = false;
        for (size_t k = 0; k < letters.size(); ++k) {
            if (!letters[k].region.contains(w)) continue;
            const Isometry& back = letters[k ^ 1].g;
            w = apply(back, w);
            acc = compose(back, acc);
            moved = true;
            break;
        }
        if (!moved) return {w, acc};
    }
    throw ConsistencyError("point did not reduce into the fundamental polygon");
}

SearchResult orbit_search(const PairingSystem& pairing, const HPoint& z, const HPoint& w, std::size_t node_cap) {
    const HPoint w0 = pairing.reduce(w).first;
    SearchResult out;
    out.value = distance(z, w0);
    std::vector<HalfPlane> hulls;
    std::vector<Isometry> inverses;
    for (const PingPongLetter& l : pairing.letters) {
        hulls.push_back(l.region.hull());
        inverses.push_back(invert(l.g));
    }
    struct Node {
        Isometry u, u_inv;
        int last;
    };
    std::vector<Node> stack{{Isometry::identity(), Isometry::identity(), -1}};
    while (!stack.empty()) {
        const Node node = stack.back();
        stack.pop_back();
        const HPoint zp = apply(node.u_inv, z);
        for (size_t k = 0; k < pairing.letters.size(); ++k) {
            if (node.last >= 0 && static_cast<int>(k) == (node.last ^ 1)) continue;
            const HalfPlane& hp = hulls[k];
            const double lb = hp.contains(zp) ? 0.0 : distance_to_geodesic(zp, hp.boundary);
            if (lb >= out.value - 1e-12) continue;
            if (++out.nodes > node_cap) return out;
            const Isometry v = compose(node.u, pairing.letters[k].g);
            out.value = std::min(out.value, distance(z, apply(v, w0)));
            stack.push_back({v, compose(inverses[k], node.u_inv), static_cast<int>(k)});
        }
    }
    out.complete = true;
    return out;
}

DiscGeodesics disc_geodesics(double a) {
    const double q1 = std::exp(0.25 * a), q3 = std::exp(0.75 * a);
    return {Geodesic::semicircle(0.0, q1), Geodesic::semicircle(-0.5 * (q1 + q3), 0.5 * (q3 - q1)),
            Geodesic::semicircle(0.0, q3)};
}

double GroupApprox::min_displacement() const {
    double best = std::numeric_limits<double>::infinity();
    for (const Element& e : ball.elements) best = std::min(best, e.displacement);
    return best;
}

namespace {

Region image_disc(const Isometry& m, const Geodesic& gamma) {
    const Geodesic image = apply_geodesic(m, gamma);
    if (image.is_vertical()) throw ConsistencyError("flute half-disc maps to a vertical line");
    return Region::disc(image.center, image.radius);
}

GroupApprox build(const QuiltSpec& spec, bool with_disc) {
    validate(spec);
    GroupApprox G;
    G.a = spec.a;
    G.base = spec.base();
    G.word_ball = spec.word_ball;
    G.prune_radius = spec.prune_radius;
    G.basepoint = {0.0, std::exp(0.5 * spec.a)};
    G.theoremC = with_disc;

    const double a = spec.a, b = G.base;
    const Isometry g0 = Isometry::from(std::exp(0.5 * a), 0.0, 0.0, std::exp(-0.5 * a));
    G.generators.push_back({"g0", g0});
    const double inner_neg = with_disc ? std::exp(0.25 * a) : std::exp(b);
    const double outer_neg = with_disc ? std::exp(1.25 * a) : std::exp(b + a);
    G.pairing.letters.push_back({"g0", g0, Region::outer(std::exp(b + a), outer_neg)});
    G.pairing.letters.push_back({"g0^-1", invert(g0), Region::inner(std::exp(b), inner_neg)});

    for (size_t i = 0; i < spec.intervals.size(); ++i) {
        const IntervalRec& rec = spec.intervals[i];
        FluteRealization fr;
        fr.interval_index = rec.index;
        fr.s1 = lifted_start(rec, b, a);
        fr.chain = reflection_chain(spec.flutes[i]);
        fr.align = align_map(fr.chain, rec, fr.s1);
        const std::string tag = std::to_string(rec.index);

        const auto parabolics = flute_parabolics(fr.chain);
        for (size_t j = 0; j < parabolics.size(); ++j)
            G.generators.push_back({"P[" + tag + "," + std::to_string(j) + "]", conjugate(fr.align, parabolics[j])});

        const Isometry rho0 = reflect_in(fr.chain.gammas[0]);
        for (size_t j = 1; j < fr.chain.gammas.size(); ++j) {
            const Geodesic& gj = fr.chain.gammas[j];
            const Isometry q = conjugate(fr.align, compose(rho0, reflect_in(gj)));
            const std::string label = "Q[" + tag + "," + std::to_string(j) + "]";
            G.pairing.letters.push_back({label, q, image_disc(fr.align, apply_geodesic(rho0, gj))});
            G.pairing.letters.push_back({label + "^-1", invert(q), image_disc(fr.align, gj)});
        }
        G.flutes.push_back(std::move(fr));
    }

    if (with_disc) {
        const DiscGeodesics c = disc_geodesics(a);
        const Isometry r1 = reflect_in(c.c1), r2 = reflect_in(c.c2), r3 = reflect_in(c.c3);
        G.generators.push_back({"T1", compose(r1, r2)});
        G.generators.push_back({"T2", compose(r2, r3)});
        const Isometry s = compose(r3, r2);
        const Geodesic far = apply_geodesic(r3, c.c2);
        G.pairing.letters.push_back({"S", s, Region::disc(far.center, far.radius)});
        G.pairing.letters.push_back({"S^-1", invert(s), Region::disc(c.c2.center, c.c2.radius)});
    }

    G.ball = enumerate_ball(G.generators, spec.word_ball, G.basepoint, spec.prune_radius);
    return G;
}

}  // namespace

GroupApprox assemble_group(const QuiltSpec& spec) { return build(spec, false); }

GroupApprox theoremC_extension(const QuiltSpec& spec) {
    if (!spec.theoremC) throw SpecError("invariant violated: theoremC must be set for the disc extension");
    return build(spec, true);
}

GroupApprox build_group(const QuiltSpec& spec) { return spec.theoremC ? theoremC_extension(spec) : assemble_group(spec); }

}  // namespace quilt
