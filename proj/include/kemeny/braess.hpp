#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "kemeny/errors.hpp"
#include "kemeny/graph.hpp"
#include "kemeny/kemeny.hpp"
#include "kemeny/parallel.hpp"
#include "kemeny/rational.hpp"
#include "kemeny/resistance.hpp"

namespace kemeny {

struct BraessTerms {
    Rational a;  ///< mu(G2^,v) - mu(G2,v)
    Rational b;  ///< K(G2^) - mu(G2,v)
    Rational c;  ///< K(G2^) - K(G2)
};

struct SeparationInfo {
    Vertex cut_vertex = 0;  ///< label of v in the composite
    std::size_t m1 = 0;
    std::size_t m2 = 0;
    Rational first_term;    ///< l m1 (mu(G1,v) - K(G1)) / (m(m+l))
    Rational second_term;   ///< [A m1^2 + ((A+C) m2 + B l) m1 + C(m2^2 + l m2)] / (m(m+l))
};

struct BraessReport {
    std::string graph;
    EdgeSet edge_set;  ///< canonical form
    std::size_t l = 0;
    Rational delta_kemeny;
    std::optional<BraessTerms> terms;
    std::optional<SeparationInfo> separation;
    bool is_braess = false;
    std::optional<bool> sufficient;  ///< separated-formula sufficiency condition
    std::optional<bool> resistances_nonincreasing;  ///< no pairwise resistance grew
};

namespace detail {

inline void require_non_edges(const Graph& g, const EdgeSet& edges) {
    const EdgeSet canon = canonical_edge_set(edges);
    if (canon.size() != edges.size()) throw GraphError("edge set contains a repeated pair");
    for (const Edge& e : edges) {
        if (e.u == e.v) throw GraphError("self-loop in edge set");
        require_vertex(g, e.v);
        if (g.has_edge(e.u, e.v)) {
            throw GraphError("{" + std::to_string(e.u) + "," + std::to_string(e.v) + "} is already an edge");
        }
    }
}

}  // namespace detail

/// K(g + edges) - K(g)
inline Rational delta_kemeny_direct(const Graph& g, const EdgeSet& edges) {
    detail::require_non_edges(g, edges);
    if (edges.empty()) {
        require_kemeny_input(g);
        return Rational(0);
    }
    const Rational before = kemeny_resistance(g).kemeny;
    return kemeny_resistance(add_edges(g, edges)).kemeny - before;
}

namespace detail {

inline bool nonincreasing(const ResistanceMatrix<Rational>& before, const ResistanceMatrix<Rational>& after) {
    for (Vertex i = 0; i < before.n(); ++i) {
        for (Vertex j = i + 1; j < before.n(); ++j) {
            if (after(i, j) > before(i, j)) return false;
        }
    }
    return true;
}

inline BraessReport direct_report(const Graph& g, const ResistanceMatrix<Rational>& base_r, const Rational& base_k,
                                  const EdgeSet& edges, const std::string& name) {
    BraessReport r;
    r.graph = name;
    r.edge_set = canonical_edge_set(edges);
    r.l = edges.size();
    const Graph grown = add_edges(g, edges);
    const auto after = resistance_matrix<Rational>(grown);
    r.delta_kemeny = kemeny_from_resistances(grown, after) - base_k;
    r.is_braess = r.delta_kemeny.sign() > 0;
    r.resistances_nonincreasing = nonincreasing(base_r, after);
    return r;
}

}  // namespace detail

/// Direct Delta K of one edge set as a report (no separation terms).
inline BraessReport braess_check(const Graph& g, const EdgeSet& edges, const std::string& name = "") {
    require_kemeny_input(g);
    detail::require_non_edges(g, edges);
    const auto base_r = resistance_matrix<Rational>(g);
    return detail::direct_report(g, base_r, kemeny_from_resistances(g, base_r), edges, name);
}

/// Scalar data of G1 (+)_v G2 and of G2^ = G2 + (l edges), all taken at v.
struct SeparatedParts {
    std::size_t m1 = 0;
    Rational kemeny1;
    Rational moment1;
    std::size_t m2 = 0;
    Rational kemeny2;
    Rational moment2;
    std::size_t l = 0;
    Rational kemeny2_hat;
    Rational moment2_hat;
};

/// Delta K from part data only.
inline BraessReport delta_kemeny_separated(const SeparatedParts& p) {
    const std::size_t m_total = p.m1 + p.m2;
    if (m_total == 0) throw GraphError("composite has no edges");

    BraessReport rep;
    rep.l = p.l;
    BraessTerms terms{p.moment2_hat - p.moment2, p.kemeny2_hat - p.moment2, p.kemeny2_hat - p.kemeny2};

    const Rational m1(static_cast<long>(p.m1));
    const Rational m2(static_cast<long>(p.m2));
    const Rational lr(static_cast<long>(p.l));
    const Rational m(static_cast<long>(m_total));
    const Rational denom = m * (m + lr);

    const Rational first = lr * m1 * (p.moment1 - p.kemeny1) / denom;
    const Rational numerator = terms.a * m1 * m1 + ((terms.a + terms.c) * m2 + terms.b * lr) * m1 +
                               terms.c * (m2 * m2 + lr * m2);
    const Rational second = numerator / denom;

    rep.delta_kemeny = first + second;
    rep.terms = terms;
    rep.separation = SeparationInfo{0, p.m1, p.m2, first, second};
    rep.is_braess = rep.delta_kemeny.sign() > 0;
    rep.sufficient = numerator.sign() > 0;
    return rep;
}

/// Delta K for edges added inside the g2 side of g1 (+)_{v1,v2} g2.
/// Edge labels are g2's (which the composite keeps).
inline BraessReport delta_kemeny_separated(const Graph& g1, Vertex v1, const Graph& g2, Vertex v2,
                                           const EdgeSet& edges_in_g2) {
    require_vertex(g1, v1);
    require_vertex(g2, v2);
    for (const Edge& e : edges_in_g2) {
        if (e.v >= g2.n()) throw GraphError("edge crosses the separation (not inside the second part)");
    }
    detail::require_non_edges(g2, edges_in_g2);

    const GraphProfile p1 = profile(g1);
    const GraphProfile p2 = profile(g2);
    SeparatedParts parts{p1.m, p1.kemeny, p1.moment(v1), p2.m, p2.kemeny, p2.moment(v2),
                         edges_in_g2.size(), p2.kemeny, p2.moment(v2)};
    if (!edges_in_g2.empty()) {
        const GraphProfile hat = profile(add_edges(g2, edges_in_g2));
        parts.kemeny2_hat = hat.kemeny;
        parts.moment2_hat = hat.moment(v2);
    }
    BraessReport rep = delta_kemeny_separated(parts);
    rep.edge_set = canonical_edge_set(edges_in_g2);
    rep.separation->cut_vertex = v2;
    return rep;
}

/// Threshold on m1 = |E(G1)| above which any l edges added among k pendants
/// at v form a Braess set:
///   l <  k: (1/8)[sqrt(33l^2 + 50l + 17) - l - 1]
///   l >= k: (1/8)[sqrt(33k^2 - 30k + 1) - k - 1]
/// `bound` is exact when the radicand is a perfect square, otherwise the
/// square root is rounded up to a multiple of 1e-6 (the threshold only grows).
struct PendantStarBound {
    std::size_t k = 0;
    std::size_t l = 0;
    Rational bound;
    bool exact = false;

    [[nodiscard]] bool satisfied_by(std::size_t m1) const { return Rational(static_cast<long>(m1)) > bound; }
};

inline constexpr unsigned long kSqrtGranularity = 1000000;

inline void require_pendant_params(std::size_t k, std::size_t l) {
    if (k < 1 || l < 1 || l > k * (k - 1) / 2) {
        throw GraphError("pendant star bound needs k >= 1 and 1 <= l <= C(k+1,2) - k");
    }
}

inline PendantStarBound pendant_star_bound(std::size_t k, std::size_t l) {
    require_pendant_params(k, l);
    const long kk = static_cast<long>(k);
    const long ll = static_cast<long>(l);
    Rational radicand;
    Rational offset;
    if (l < k) {
        radicand = Rational(33 * ll * ll + 50 * ll + 17);
        offset = Rational(ll + 1);
    } else {
        radicand = Rational(33 * kk * kk - 30 * kk + 1);
        offset = Rational(kk + 1);
    }
    PendantStarBound out{k, l, Rational(0), false};
    Rational root;
    if (exact_sqrt(radicand, root)) {
        out.exact = true;
    } else {
        root = sqrt_ceiling(radicand, kSqrtGranularity);
    }
    out.bound = (root - offset) / Rational(8);
    return out;
}

/// The unsimplified threshold
///   m1 > (1/(8l))[k^2 - 2kl - k + sqrt(k(k^3 - 16l^2 + 2k^2(6l-1) + k(20l^2 - 12l + 1)))]
/// in binary64.
inline double pendant_star_bound_raw(std::size_t k, std::size_t l) {
    require_pendant_params(k, l);
    const double kk = static_cast<double>(k);
    const double ll = static_cast<double>(l);
    const double inner = kk * (kk * kk * kk - 16 * ll * ll + 2 * kk * kk * (6 * ll - 1) + kk * (20 * ll * ll - 12 * ll + 1));
    return (kk * kk - 2 * kk * ll - kk + std::sqrt(inner)) / (8 * ll);
}

struct ScanConfig {
    std::size_t max_set_size = 2;
    std::size_t max_non_edges = 20;
};

/// Every non-empty set of at most max_set_size non-edges with its exact
/// direct Delta K, sorted by Delta K descending, ties by edge set.
inline std::vector<BraessReport> braess_scan(const Graph& g, const ScanConfig& cfg = {}, const std::string& name = "") {
    require_kemeny_input(g);
    if (cfg.max_set_size < 1) throw GraphError("max set size must be >= 1");
    const EdgeSet candidates = g.non_edges();
    if (candidates.size() > cfg.max_non_edges) {
        throw CapExceeded("graph has " + std::to_string(candidates.size()) + " non-edges; scan cap is " +
                          std::to_string(cfg.max_non_edges));
    }

    std::vector<EdgeSet> subsets;
    std::vector<std::size_t> pick;
    auto extend = [&](auto&& self, std::size_t start) -> void {
        if (!pick.empty()) {
            EdgeSet s;
            for (std::size_t i : pick) s.push_back(candidates[i]);
            subsets.push_back(std::move(s));
        }
        if (pick.size() == cfg.max_set_size) return;
        for (std::size_t i = start; i < candidates.size(); ++i) {
            pick.push_back(i);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    extend(extend, 0);

    const auto base_r = resistance_matrix<Rational>(g);
    const Rational base_k = kemeny_from_resistances(g, base_r);
    std::vector<BraessReport> reports(subsets.size());
    parallel_for(subsets.size(),
                 [&](std::size_t i) { reports[i] = detail::direct_report(g, base_r, base_k, subsets[i], name); });
    std::stable_sort(reports.begin(), reports.end(), [](const BraessReport& x, const BraessReport& y) {
        if (x.delta_kemeny != y.delta_kemeny) return x.delta_kemeny > y.delta_kemeny;
        return x.edge_set < y.edge_set;
    });
    return reports;
}

// ---------------------------------------------------------------------------
// K_n (+) P_n with the clique at one path end: every non-edge of any G2
// glued at the free path end becomes Braess once n is large.

/// Clique on vertices of the path end 0; returns the graph and the free
/// (degree-1) path end.
inline std::pair<Graph, Vertex> make_clique_path(std::size_t n) {
    if (n < 2) throw GraphError("clique-path needs n >= 2");
    OneSum s = one_sum(make_complete(n), 0, make_path(n), 0);
    return {std::move(s.graph), n - 1};
}

struct CliquePathConstants {
    Rational kemeny;               ///< (3n^4 - n^3 + 5n^2 - 18n + 12) / (3n(n+2))
    Rational moment;               ///< (n-1)^2 (n + 1 + 2/n)
    Rational moment_minus_kemeny;  ///< (3n^4 - 2n^2 - 8n + 6) / (3(n+2))
};

inline CliquePathConstants clique_path_constants(std::size_t size) {
    const long n = static_cast<long>(size);
    const long n2 = n * n, n4 = n2 * n2;
    return CliquePathConstants{
        Rational(3 * n4 - n2 * n + 5 * n2 - 18 * n + 12, 3 * n * (n + 2)),
        Rational((n - 1) * (n - 1)) * (Rational(n + 1) + Rational(2, n)),
        Rational(3 * n4 - 2 * n2 - 8 * n + 6, 3 * (n + 2)),
    };
}

}  // namespace kemeny
