#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kemeny/errors.hpp"
#include "kemeny/rational.hpp"

namespace kemeny {

using Vertex = std::size_t;

/// Unordered pair stored as (min, max).
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

using EdgeSet = std::vector<Edge>;

/// Sorted, de-duplicated copy of `edges` (each pair already (min, max)).
inline EdgeSet canonical_edge_set(EdgeSet edges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

/// Simple undirected graph on vertices 0..n-1 with optional positive
/// edge weights (conductances). Immutable once built.
class Graph {
public:
    Graph() : Graph(1) {}

    explicit Graph(std::size_t n, EdgeSet edges = {}, std::optional<std::vector<Rational>> weights = std::nullopt)
        : n_(n) {
        if (n == 0) throw GraphError("graph must have at least one vertex");
        if (weights && weights->size() != edges.size()) {
            throw GraphError("weight list length does not match edge list length");
        }
        std::vector<std::size_t> order(edges.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        for (const Edge& e : edges) {
            if (e.u == e.v) throw GraphError("self-loop at vertex " + std::to_string(e.u));
            if (e.v >= n) throw GraphError("vertex " + std::to_string(e.v) + " out of range for n=" + std::to_string(n));
        }
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });
        edges_.reserve(edges.size());
        for (std::size_t idx : order) {
            if (!edges_.empty() && edges_.back() == edges[idx]) {
                throw GraphError("duplicate edge {" + std::to_string(edges[idx].u) + "," + std::to_string(edges[idx].v) + "}");
            }
            edges_.push_back(edges[idx]);
        }
        if (weights) {
            std::vector<Rational> sorted;
            sorted.reserve(order.size());
            for (std::size_t idx : order) {
                if ((*weights)[idx].sign() <= 0) throw GraphError("edge weights must be strictly positive");
                sorted.push_back((*weights)[idx]);
            }
            weights_ = std::move(sorted);
        }
        adjacency_.assign(n_, {});
        for (const Edge& e : edges_) {
            adjacency_[e.u].push_back(e.v);
            adjacency_[e.v].push_back(e.u);
        }
        for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
    }

    [[nodiscard]] std::size_t n() const { return n_; }
    [[nodiscard]] std::size_t m() const { return edges_.size(); }
    [[nodiscard]] const EdgeSet& edges() const { return edges_; }
    [[nodiscard]] bool has_weights() const { return weights_.has_value(); }
    [[nodiscard]] const std::optional<std::vector<Rational>>& weights() const { return weights_; }

    /// Weight of the i-th edge in edges(); 1 when unweighted.
    [[nodiscard]] Rational weight(std::size_t edge_index) const {
        return weights_ ? (*weights_)[edge_index] : Rational(1);
    }

    [[nodiscard]] std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
    [[nodiscard]] const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }

    [[nodiscard]] bool has_edge(Vertex a, Vertex b) const {
        if (a == b || a >= n_ || b >= n_) return false;
        return std::binary_search(edges_.begin(), edges_.end(), Edge(a, b));
    }

    [[nodiscard]] std::vector<std::size_t> degrees() const {
        std::vector<std::size_t> d(n_);
        for (Vertex v = 0; v < n_; ++v) d[v] = adjacency_[v].size();
        return d;
    }

    /// All pairs {u,v}, u<v, that are not edges, in lexicographic order.
    [[nodiscard]] EdgeSet non_edges() const {
        EdgeSet out;
        for (Vertex a = 0; a < n_; ++a) {
            for (Vertex b = a + 1; b < n_; ++b) {
                if (!has_edge(a, b)) out.emplace_back(a, b);
            }
        }
        return out;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_ && a.weights_ == b.weights_;
    }

private:
    std::size_t n_ = 1;
    EdgeSet edges_;
    std::optional<std::vector<Rational>> weights_;
    std::vector<std::vector<Vertex>> adjacency_;
};

// ---------------------------------------------------------------------------
// Connectivity

inline bool is_connected(const Graph& g) {
    std::vector<char> seen(g.n(), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const Vertex x = stack.back();
        stack.pop_back();
        for (Vertex y : g.neighbors(x)) {
            if (!seen[y]) {
                seen[y] = 1;
                ++reached;
                stack.push_back(y);
            }
        }
    }
    return reached == g.n();
}

inline void require_connected(const Graph& g) {
    if (!is_connected(g)) throw DisconnectedGraph();
}

inline void require_vertex(const Graph& g, Vertex v) {
    if (v >= g.n()) {
        throw GraphError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(g.n()));
    }
}

/// Articulation points (vertices whose removal disconnects their
/// component), ascending. Iterative Hopcroft-Tarjan low-link DFS.
inline std::vector<Vertex> cut_vertices(const Graph& g) {
    const std::size_t n = g.n();
    constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> disc(n, unvisited), low(n, 0), parent(n, unvisited), next_child(n, 0);
    std::vector<char> is_cut(n, 0);
    std::size_t timer = 0;

    for (Vertex root = 0; root < n; ++root) {
        if (disc[root] != unvisited) continue;
        std::size_t root_children = 0;
        std::vector<Vertex> stack{root};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            const Vertex x = stack.back();
            const auto& nbrs = g.neighbors(x);
            if (next_child[x] < nbrs.size()) {
                const Vertex y = nbrs[next_child[x]++];
                if (disc[y] == unvisited) {
                    parent[y] = x;
                    disc[y] = low[y] = timer++;
                    if (x == root) ++root_children;
                    stack.push_back(y);
                } else if (y != parent[x]) {
                    low[x] = std::min(low[x], disc[y]);
                }
            } else {
                stack.pop_back();
                const Vertex p = parent[x];
                if (p != unvisited) {
                    low[p] = std::min(low[p], low[x]);
                    if (p != root && low[x] >= disc[p]) is_cut[p] = 1;
                }
            }
        }
        if (root_children > 1) is_cut[root] = 1;
    }

    std::vector<Vertex> out;
    for (Vertex v = 0; v < n; ++v) {
        if (is_cut[v]) out.push_back(v);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Standard families

inline Graph make_complete(std::size_t n) {
    if (n < 1) throw GraphError("complete graph needs n >= 1");
    EdgeSet e;
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) e.emplace_back(a, b);
    }
    return Graph(n, std::move(e));
}

/// 0 - 1 - ... - (n-1)
inline Graph make_path(std::size_t n) {
    if (n < 1) throw GraphError("path graph needs n >= 1");
    EdgeSet e;
    for (Vertex a = 0; a + 1 < n; ++a) e.emplace_back(a, a + 1);
    return Graph(n, std::move(e));
}

/// Center 0, leaves 1..n-1.
inline Graph make_star(std::size_t n) {
    if (n < 1) throw GraphError("star graph needs n >= 1");
    EdgeSet e;
    for (Vertex a = 1; a < n; ++a) e.emplace_back(0, a);
    return Graph(n, std::move(e));
}

inline Graph make_cycle(std::size_t n) {
    if (n < 3) throw GraphError("cycle graph needs n >= 3");
    EdgeSet e;
    for (Vertex a = 0; a < n; ++a) e.emplace_back(a, (a + 1) % n);
    return Graph(n, std::move(e));
}

/// B(k,a,b,c): k copies of P_a whose left ends form a clique joined to
/// every vertex of a K_b, and whose right ends form a clique joined to every
/// vertex of a K_c. Labels: K_b = 0..b-1, path j occupies b+j*a .. b+j*a+a-1
/// (left end first), K_c follows. For k=1 this is K_{b+1} + P_a + K_{c+1}.
inline Graph make_barbell(std::size_t k, std::size_t a, std::size_t b, std::size_t c) {
    if (k < 1 || a < 2 || b < 1 || c < 1) {
        throw GraphError("barbell needs k >= 1, a >= 2, b >= 1, c >= 1");
    }
    const std::size_t n = k * a + b + c;
    auto path_vertex = [&](std::size_t j, std::size_t t) { return b + j * a + t; };
    const Vertex c0 = b + k * a;
    EdgeSet e;
    for (Vertex x = 0; x < b; ++x) {
        for (Vertex y = x + 1; y < b; ++y) e.emplace_back(x, y);
        for (std::size_t j = 0; j < k; ++j) e.emplace_back(x, path_vertex(j, 0));
    }
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t t = 0; t + 1 < a; ++t) e.emplace_back(path_vertex(j, t), path_vertex(j, t + 1));
        for (std::size_t j2 = j + 1; j2 < k; ++j2) {
            e.emplace_back(path_vertex(j, 0), path_vertex(j2, 0));
            e.emplace_back(path_vertex(j, a - 1), path_vertex(j2, a - 1));
        }
    }
    for (Vertex x = c0; x < c0 + c; ++x) {
        for (Vertex y = x + 1; y < c0 + c; ++y) e.emplace_back(x, y);
        for (std::size_t j = 0; j < k; ++j) e.emplace_back(x, path_vertex(j, a - 1));
    }
    return Graph(n, std::move(e));
}

// ---------------------------------------------------------------------------
// Edge edits

inline Graph add_edges(const Graph& g, const EdgeSet& extra) {
    EdgeSet all = g.edges();
    std::optional<std::vector<Rational>> weights = g.weights();
    for (const Edge& e : extra) {
        if (e.u == e.v) throw GraphError("self-loop at vertex " + std::to_string(e.u));
        require_vertex(g, e.v);
        if (g.has_edge(e.u, e.v)) {
            throw GraphError("{" + std::to_string(e.u) + "," + std::to_string(e.v) + "} is already an edge");
        }
        all.push_back(e);
        if (weights) weights->push_back(Rational(1));
    }
    return Graph(g.n(), std::move(all), std::move(weights));
}

inline Graph remove_edges(const Graph& g, const EdgeSet& drop) {
    EdgeSet kept;
    std::optional<std::vector<Rational>> weights;
    if (g.has_weights()) weights.emplace();
    const EdgeSet sorted_drop = canonical_edge_set(drop);
    for (const Edge& e : sorted_drop) {
        if (!g.has_edge(e.u, e.v)) {
            throw GraphError("{" + std::to_string(e.u) + "," + std::to_string(e.v) + "} is not an edge");
        }
    }
    for (std::size_t i = 0; i < g.m(); ++i) {
        if (std::binary_search(sorted_drop.begin(), sorted_drop.end(), g.edges()[i])) continue;
        kept.push_back(g.edges()[i]);
        if (weights) weights->push_back(g.weight(i));
    }
    return Graph(g.n(), std::move(kept), std::move(weights));
}

// ---------------------------------------------------------------------------
// 1-sums

/// A graph with a distinguished vertex.
using RootedGraph = std::pair<Graph, Vertex>;

struct OneSum {
    Graph graph;
    std::vector<Vertex> left_map;   ///< g1 vertex -> result vertex
    std::vector<Vertex> right_map;  ///< g2 vertex -> result vertex (identity)
    Vertex merged = 0;
};

/// Glue g1 at v1 onto g2 at v2. g2 keeps its labels; g1's other vertices
/// follow in ascending order; the shared vertex is v2.
inline OneSum one_sum(const Graph& g1, Vertex v1, const Graph& g2, Vertex v2) {
    require_vertex(g1, v1);
    require_vertex(g2, v2);
    require_connected(g1);
    require_connected(g2);

    OneSum out;
    out.merged = v2;
    out.right_map.resize(g2.n());
    std::iota(out.right_map.begin(), out.right_map.end(), Vertex{0});
    out.left_map.resize(g1.n());
    Vertex next = g2.n();
    for (Vertex x = 0; x < g1.n(); ++x) out.left_map[x] = (x == v1) ? v2 : next++;

    const bool weighted = g1.has_weights() || g2.has_weights();
    EdgeSet edges = g2.edges();
    std::optional<std::vector<Rational>> weights;
    if (weighted) {
        weights.emplace();
        for (std::size_t i = 0; i < g2.m(); ++i) weights->push_back(g2.weight(i));
    }
    for (std::size_t i = 0; i < g1.m(); ++i) {
        const Edge& e = g1.edges()[i];
        edges.emplace_back(out.left_map[e.u], out.left_map[e.v]);
        if (weighted) weights->push_back(g1.weight(i));
    }
    out.graph = Graph(g1.n() + g2.n() - 1, std::move(edges), std::move(weights));
    return out;
}

struct ChainPart {
    Graph graph;
    Vertex attach_left = 0;   ///< shared with the previous part (unused for the first part)
    Vertex attach_right = 0;  ///< shared with the next part (unused for the last part)
};

/// G_1 (+) G_2 (+) ... (+) G_n where part i's attach_right is identified
/// with part i+1's attach_left.
class OneSumChain {
public:
    OneSumChain() = default;
    explicit OneSumChain(std::vector<ChainPart> parts) : parts_(std::move(parts)) { validate(); }

    [[nodiscard]] const std::vector<ChainPart>& parts() const { return parts_; }
    [[nodiscard]] std::size_t size() const { return parts_.size(); }
    [[nodiscard]] const ChainPart& operator[](std::size_t i) const { return parts_.at(i); }

private:
    void validate() const {
        if (parts_.empty()) throw GraphError("chain needs at least one part");
        for (const ChainPart& p : parts_) {
            require_connected(p.graph);
            require_vertex(p.graph, p.attach_left);
            require_vertex(p.graph, p.attach_right);
        }
    }

    std::vector<ChainPart> parts_;
};

struct ChainSum {
    Graph graph;
    std::vector<std::vector<Vertex>> maps;  ///< maps[i][x]: part i vertex x -> result vertex
};

/// Left fold of one_sum. Part 0 keeps its labels; each later part's
/// non-shared vertices are appended in ascending order.
inline ChainSum chain_sum(const OneSumChain& chain) {
    ChainSum out;
    const auto& parts = chain.parts();
    out.graph = parts[0].graph;
    out.maps.emplace_back(parts[0].graph.n());
    std::iota(out.maps[0].begin(), out.maps[0].end(), Vertex{0});
    for (std::size_t i = 1; i < parts.size(); ++i) {
        const Vertex shared = out.maps[i - 1][parts[i - 1].attach_right];
        OneSum s = one_sum(parts[i].graph, parts[i].attach_left, out.graph, shared);
        out.graph = std::move(s.graph);
        out.maps.push_back(std::move(s.left_map));
    }
    return out;
}

}  // namespace kemeny
