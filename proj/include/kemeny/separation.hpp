#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "kemeny/errors.hpp"
#include "kemeny/graph.hpp"
#include "kemeny/kemeny.hpp"
#include "kemeny/rational.hpp"

namespace kemeny {

/// Per-part data for a chain G_1 (+) ... (+) G_n. Parts are 0-indexed here;
/// the shared vertex between parts i and i+1 is parts[i].attach_right.
struct SeparationTerms {
    std::vector<std::size_t> m;
    std::vector<Rational> kemeny;
    std::vector<Rational> moment_left;          ///< mu(G_j, attach_left_j)
    std::vector<Rational> moment_right;         ///< mu(G_j, attach_right_j)
    std::vector<Rational> internal_resistance;  ///< r_{G_j}(attach_left_j, attach_right_j)

    [[nodiscard]] std::size_t parts() const { return m.size(); }

    /// Moment of part j at the vertex it shares on the side facing part i.
    [[nodiscard]] const Rational& facing_moment(std::size_t i, std::size_t j) const {
        if (i == j) throw GraphError("facing moment is undefined for i == j");
        return j > i ? moment_left.at(j) : moment_right.at(j);
    }

    /// r(v_{i,i+1}, v_{j-1,j}) for i < j, summed across the intermediate
    /// parts by cut-vertex additivity. Zero when j == i + 1.
    [[nodiscard]] Rational cross_resistance(std::size_t i, std::size_t j) const {
        Rational r;
        for (std::size_t t = i + 1; t < j; ++t) r += internal_resistance.at(t);
        return r;
    }
};

inline SeparationTerms separation_terms(const OneSumChain& chain) {
    SeparationTerms terms;
    for (const ChainPart& part : chain.parts()) {
        const GraphProfile p = profile(part.graph);
        terms.m.push_back(p.m);
        terms.kemeny.push_back(p.kemeny);
        terms.moment_left.push_back(p.moment(part.attach_left));
        terms.moment_right.push_back(p.moment(part.attach_right));
        terms.internal_resistance.push_back(p.resistance(part.attach_left, part.attach_right));
    }
    return terms;
}

/// K(G1 (+)_v G2) = [m1(K1 + mu(G2,v)) + m2(K2 + mu(G1,v))] / (m1 + m2)
inline Rational kemeny_one_sep(const GraphProfile& p1, Vertex v1, const GraphProfile& p2, Vertex v2) {
    const std::size_t m = p1.m + p2.m;
    if (m == 0) throw GraphError("1-sum of two single vertices has no edges");
    const Rational m1(static_cast<long>(p1.m));
    const Rational m2(static_cast<long>(p2.m));
    return (m1 * (p1.kemeny + p2.moment(v2)) + m2 * (p2.kemeny + p1.moment(v1))) / Rational(static_cast<long>(m));
}

inline Rational kemeny_one_sep(const Graph& g1, Vertex v1, const Graph& g2, Vertex v2) {
    require_vertex(g1, v1);
    require_vertex(g2, v2);
    return kemeny_one_sep(profile(g1), v1, profile(g2), v2);
}

/// mu(G, v0) for v0 in part 0:
///   sum_i mu(G_i, v_{i-1,i}) + 2 sum_{i>=2} r(v_{i-2,i-1}, v_{i-1,i}) sum_{j>=i} m_j
/// with v_{0,1} = v0. `prof[i]` is profile(chain[i].graph).
inline Rational moment_chain(const std::vector<GraphProfile>& prof, const OneSumChain& chain, Vertex v0) {
    require_vertex(chain[0].graph, v0);
    const std::size_t n = chain.size();
    if (prof.size() != n) throw GraphError("one profile per chain part required");

    std::vector<std::size_t> tail_edges(n + 1, 0);  // tail_edges[i] = sum_{j>=i} m_j
    for (std::size_t i = n; i-- > 0;) tail_edges[i] = tail_edges[i + 1] + prof[i].m;

    auto entry_vertex = [&](std::size_t i) { return i == 0 ? v0 : chain[i].attach_left; };

    Rational total = prof[0].moment(v0);
    for (std::size_t i = 1; i < n; ++i) {
        total += prof[i].moment(chain[i].attach_left);
        const Rational& step = prof[i - 1].resistance(entry_vertex(i - 1), chain[i - 1].attach_right);
        total += Rational(2) * step * Rational(static_cast<long>(tail_edges[i]));
    }
    return total;
}

inline Rational moment_chain(const OneSumChain& chain, Vertex v0) {
    std::vector<GraphProfile> prof;
    prof.reserve(chain.size());
    for (const ChainPart& part : chain.parts()) prof.push_back(profile(part.graph));
    return moment_chain(prof, chain, v0);
}

/// K(G) for a chain:
///   [sum_i m_i (K_i + sum_{j!=i} mu(G_j, v_{q(i,j)})) + 2 sum_{j-i>=2} m_i m_j r(v_{i,i+1}, v_{j-1,j})] / sum m_i
inline Rational kemeny_chain(const SeparationTerms& t) {
    const std::size_t n = t.parts();
    std::size_t total_edges = 0;
    for (std::size_t mi : t.m) total_edges += mi;
    if (total_edges == 0) throw GraphError("chain has no edges");

    Rational numerator;
    for (std::size_t i = 0; i < n; ++i) {
        if (t.m[i] == 0) continue;
        Rational inner = t.kemeny[i];
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i) inner += t.facing_moment(i, j);
        }
        numerator += Rational(static_cast<long>(t.m[i])) * inner;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 2; j < n; ++j) {
            numerator += Rational(static_cast<long>(2 * t.m[i] * t.m[j])) * t.cross_resistance(i, j);
        }
    }
    return numerator / Rational(static_cast<long>(total_edges));
}

inline Rational kemeny_chain(const OneSumChain& chain) { return kemeny_chain(separation_terms(chain)); }


/// Chain whose parts are all glued at one common vertex.
inline OneSumChain star_of_parts_chain(const std::vector<RootedGraph>& parts) {
    std::vector<ChainPart> chain;
    for (const auto& [g, v] : parts) chain.push_back(ChainPart{g, v, v});
    return OneSumChain(std::move(chain));
}

/// K(G_1 (+)_v ... (+)_v G_n) = sum_i m_i (K_i + sum_{j!=i} mu(G_j,v)) / sum m_i
inline Rational kemeny_star_of_parts(const std::vector<RootedGraph>& parts) {
    if (parts.empty()) throw GraphError("need at least one part");
    std::vector<GraphProfile> prof;
    for (const auto& [g, v] : parts) {
        require_vertex(g, v);
        prof.push_back(profile(g));
    }
    std::size_t total_edges = 0;
    for (const auto& p : prof) total_edges += p.m;
    if (total_edges == 0) throw GraphError("parts have no edges");

    Rational numerator;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        Rational inner = prof[i].kemeny;
        for (std::size_t j = 0; j < parts.size(); ++j) {
            if (j != i) inner += prof[j].moment(parts[j].second);
        }
        numerator += Rational(static_cast<long>(prof[i].m)) * inner;
    }
    return numerator / Rational(static_cast<long>(total_edges));
}

}  // namespace kemeny
