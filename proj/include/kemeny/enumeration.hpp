#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iterator>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "kemeny/errors.hpp"
#include "kemeny/graph.hpp"
#include "kemeny/kemeny.hpp"
#include "kemeny/parallel.hpp"
#include "kemeny/rational.hpp"

namespace kemeny {

// ---------------------------------------------------------------------------
// Pruefer codes

using PruferSequence = std::vector<Vertex>;

/// Labelled tree on n vertices from a sequence of length n-2 over [0, n).
inline Graph prufer_decode(const PruferSequence& seq, std::size_t n) {
    if (n < 1) throw GraphError("tree needs n >= 1");
    if (n == 1) return Graph(1);
    if (seq.size() != n - 2) throw GraphError("Pruefer sequence must have length n-2");
    std::vector<std::size_t> remaining(n, 1);
    for (Vertex x : seq) {
        if (x >= n) throw GraphError("Pruefer entry out of range");
        ++remaining[x];
    }
    EdgeSet edges;
    edges.reserve(n - 1);
    for (Vertex x : seq) {
        Vertex leaf = 0;
        while (remaining[leaf] != 1) ++leaf;
        edges.emplace_back(leaf, x);
        --remaining[leaf];
        --remaining[x];
    }
    Vertex a = n, b = n;
    for (Vertex v = 0; v < n; ++v) {
        if (remaining[v] == 1) (a == n ? a : b) = v;
    }
    edges.emplace_back(a, b);
    return Graph(n, std::move(edges));
}

inline PruferSequence prufer_encode(const Graph& tree) {
    const std::size_t n = tree.n();
    if (tree.m() + 1 != n || !is_connected(tree)) throw GraphError("Pruefer encoding needs a tree");
    if (n <= 2) return {};
    std::vector<std::size_t> deg = tree.degrees();
    std::vector<char> removed(n, 0);
    PruferSequence seq;
    seq.reserve(n - 2);
    for (std::size_t step = 0; step + 2 < n; ++step) {
        Vertex leaf = 0;
        while (removed[leaf] || deg[leaf] != 1) ++leaf;
        removed[leaf] = 1;
        for (Vertex y : tree.neighbors(leaf)) {
            if (!removed[y]) {
                seq.push_back(y);
                --deg[y];
            }
        }
    }
    return seq;
}

inline constexpr std::size_t kMaxTreeOrder = 9;

/// All n^(n-2) labelled trees on n vertices (one for n <= 2), in
/// lexicographic order of their Pruefer sequences.
class TreeEnumeration {
public:
    explicit TreeEnumeration(std::size_t n) : n_(n) {
        if (n < 1 || n > kMaxTreeOrder) {
            throw CapExceeded("tree enumeration supports 1 <= n <= " + std::to_string(kMaxTreeOrder));
        }
    }

    [[nodiscard]] std::size_t order() const { return n_; }

    [[nodiscard]] std::size_t size() const {
        if (n_ <= 2) return 1;
        std::size_t total = 1;
        for (std::size_t i = 0; i + 2 < n_; ++i) total *= n_;
        return total;
    }

    /// The index-th sequence in lexicographic order.
    [[nodiscard]] PruferSequence sequence(std::size_t index) const {
        PruferSequence seq(n_ >= 2 ? n_ - 2 : 0);
        for (std::size_t pos = seq.size(); pos-- > 0;) {
            seq[pos] = index % n_;
            index /= n_;
        }
        return seq;
    }

    [[nodiscard]] Graph tree(std::size_t index) const { return prufer_decode(sequence(index), n_); }

    class iterator {
    public:
        using value_type = Graph;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        iterator(const TreeEnumeration* owner, std::size_t index) : owner_(owner), index_(index) {}

        Graph operator*() const { return owner_->tree(index_); }
        iterator& operator++() {
            ++index_;
            return *this;
        }
        iterator operator++(int) {
            iterator old = *this;
            ++index_;
            return old;
        }
        friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.index_ >= it.owner_->size(); }
        [[nodiscard]] std::size_t index() const { return index_; }

    private:
        const TreeEnumeration* owner_ = nullptr;
        std::size_t index_ = 0;
    };

    [[nodiscard]] iterator begin() const { return iterator(this, 0); }
    [[nodiscard]] std::default_sentinel_t end() const { return {}; }

private:
    std::size_t n_;
};

inline TreeEnumeration all_trees(std::size_t n) { return TreeEnumeration(n); }

// ---------------------------------------------------------------------------
// Canonical forms (for isomorphism-class corpora)

/// AHU encoding of a tree rooted at the centre (min over two centres).
inline std::string tree_canonical_code(const Graph& tree) {
    const std::size_t n = tree.n();
    if (n == 1) return "()";
    // peel leaves to find the centre(s)
    std::vector<std::size_t> deg = tree.degrees();
    std::vector<Vertex> layer;
    for (Vertex v = 0; v < n; ++v) {
        if (deg[v] <= 1) layer.push_back(v);
    }
    std::size_t left = n;
    std::vector<char> gone(n, 0);
    while (left > 2) {
        std::vector<Vertex> next;
        for (Vertex leaf : layer) {
            gone[leaf] = 1;
            --left;
            for (Vertex y : tree.neighbors(leaf)) {
                if (!gone[y] && --deg[y] == 1) next.push_back(y);
            }
        }
        layer = std::move(next);
    }
    std::vector<Vertex> centres;
    for (Vertex v = 0; v < n; ++v) {
        if (!gone[v]) centres.push_back(v);
    }

    auto encode = [&](Vertex root) {
        auto rec = [&](auto&& self, Vertex x, Vertex parent) -> std::string {
            std::vector<std::string> kids;
            for (Vertex y : tree.neighbors(x)) {
                if (y != parent) kids.push_back(self(self, y, x));
            }
            std::sort(kids.begin(), kids.end());
            std::string s = "(";
            for (const auto& k : kids) s += k;
            return s + ")";
        };
        return rec(rec, root, n);
    };
    std::string best = encode(centres[0]);
    if (centres.size() == 2) best = std::min(best, encode(centres[1]));
    return best;
}

namespace detail {

inline std::size_t pair_bit(std::size_t a, std::size_t b, std::size_t n) {
    if (a > b) std::swap(a, b);
    return a * n - a * (a + 1) / 2 + (b - a - 1);
}

/// Smallest edge bitmask over all relabellings; if `root` < n, only those
/// sending root to 0.
inline std::uint64_t min_relabelled_mask(const Graph& g, std::size_t root) {
    const std::size_t n = g.n();
    if (n > 11) throw CapExceeded("canonical form by permutation supports n <= 11");
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::uint64_t best = ~std::uint64_t{0};
    do {
        if (root < n && perm[root] != 0) continue;
        std::uint64_t mask = 0;
        for (const Edge& e : g.edges()) mask |= std::uint64_t{1} << pair_bit(perm[e.u], perm[e.v], n);
        best = std::min(best, mask);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace detail

/// Isomorphism-invariant key of an unweighted graph with n <= 11.
inline std::pair<std::size_t, std::uint64_t> canonical_key(const Graph& g) {
    return {g.n(), detail::min_relabelled_mask(g, g.n())};
}

/// Key of the rooted graph (g, root): equal iff an isomorphism maps root to root.
inline std::pair<std::size_t, std::uint64_t> rooted_canonical_key(const Graph& g, Vertex root) {
    require_vertex(g, root);
    return {g.n(), detail::min_relabelled_mask(g, root)};
}

// ---------------------------------------------------------------------------
// Connected-graph corpora

inline constexpr std::size_t kMaxExhaustiveOrder = 6;

struct GraphCorpus {
    std::size_t n_max = 0;
    std::vector<Graph> graphs;
};

/// Every connected labelled graph on 1..n_max vertices, by filtering edge
/// subsets of K_n in increasing bitmask order.
inline GraphCorpus connected_corpus(std::size_t n_max) {
    if (n_max < 1 || n_max > kMaxExhaustiveOrder) {
        throw CapExceeded("exhaustive corpus supports 1 <= n_max <= " + std::to_string(kMaxExhaustiveOrder));
    }
    GraphCorpus out{n_max, {}};
    for (std::size_t n = 1; n <= n_max; ++n) {
        EdgeSet all;
        for (Vertex a = 0; a < n; ++a) {
            for (Vertex b = a + 1; b < n; ++b) all.emplace_back(a, b);
        }
        const std::uint64_t subsets = std::uint64_t{1} << all.size();
        for (std::uint64_t mask = 0; mask < subsets; ++mask) {
            if (std::popcount(mask) + 1 < n) continue;
            EdgeSet e;
            for (std::size_t i = 0; i < all.size(); ++i) {
                if (mask >> i & 1) e.push_back(all[i]);
            }
            Graph g(n, std::move(e));
            if (is_connected(g)) out.graphs.push_back(std::move(g));
        }
    }
    return out;
}

/// One representative per isomorphism class, in first-seen order.
inline std::vector<Graph> isomorphism_classes(const std::vector<Graph>& graphs) {
    std::set<std::pair<std::size_t, std::uint64_t>> seen;
    std::vector<Graph> reps;
    for (const Graph& g : graphs) {
        if (seen.insert(canonical_key(g)).second) reps.push_back(g);
    }
    return reps;
}

/// Connected graphs on 1..n_max vertices up to isomorphism.
inline std::vector<Graph> connected_graph_classes(std::size_t n_max) {
    return isomorphism_classes(connected_corpus(n_max).graphs);
}

/// Every (graph, vertex) pair over the given graphs.
inline std::vector<RootedGraph> all_rootings(const std::vector<Graph>& graphs) {
    std::vector<RootedGraph> out;
    for (const Graph& g : graphs) {
        for (Vertex v = 0; v < g.n(); ++v) out.emplace_back(g, v);
    }
    return out;
}

/// Unlabelled trees on n vertices (one labelled representative per class).
inline std::vector<Graph> tree_classes(std::size_t n) {
    std::set<std::string> seen;
    std::vector<Graph> reps;
    for (Graph t : all_trees(n)) {
        if (seen.insert(tree_canonical_code(t)).second) reps.push_back(std::move(t));
    }
    return reps;
}

// ---------------------------------------------------------------------------
// Random sampling (beyond exhaustive sizes)

using Rng = std::mt19937_64;

/// Uniform random labelled tree plus each remaining pair with probability p.
inline Graph random_connected_graph(std::size_t n, Rng& rng, double extra_edge_probability = 0.3) {
    if (n < 1) throw GraphError("random graph needs n >= 1");
    if (n == 1) return Graph(1);
    PruferSequence seq(n - 2);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (auto& x : seq) x = pick(rng);
    const Graph tree = prufer_decode(seq, n);
    std::bernoulli_distribution coin(extra_edge_probability);
    EdgeSet extra;
    for (const Edge& e : tree.non_edges()) {
        if (coin(rng)) extra.push_back(e);
    }
    return add_edges(tree, extra);
}

/// Chain of part_count random connected parts of 1..max_part vertices
/// (the first at least 2) with random attachment vertices.
inline OneSumChain random_chain(Rng& rng, std::size_t part_count, std::size_t max_part) {
    std::vector<ChainPart> parts;
    for (std::size_t i = 0; i < part_count; ++i) {
        std::uniform_int_distribution<std::size_t> size_pick(i == 0 ? 2 : 1, max_part);
        Graph g = random_connected_graph(size_pick(rng), rng);
        std::uniform_int_distribution<Vertex> vpick(0, g.n() - 1);
        const Vertex left = vpick(rng);
        const Vertex right = vpick(rng);
        parts.push_back(ChainPart{std::move(g), left, right});
    }
    return OneSumChain(std::move(parts));
}

// ---------------------------------------------------------------------------
// Path extremality among trees

struct PathMaxResult {
    std::size_t n = 0;
    std::size_t trees = 0;
    std::size_t exact_checks = 0;  ///< float-filtered candidates re-verified exactly
    Rational path_value;           ///< K(P_n) or mu(P_n, end)
    Rational max_value;            ///< exact maximum over the candidates
    std::size_t trees_at_max = 0;
    bool holds = false;
};

inline constexpr double kFloatFilterTolerance = 1e-6;

namespace detail {

inline bool is_path_tree(const Graph& t) {
    for (Vertex v = 0; v < t.n(); ++v) {
        if (t.degree(v) > 2) return false;
    }
    return true;
}

inline void require_path_max_order(std::size_t n) {
    if (n < 1 || n > 8) throw CapExceeded("path extremality sweeps support 1 <= n <= 8");
}

}  // namespace detail

/// K(T) <= K(P_n) over all labelled trees T, equality only for paths.
/// Float pass over every tree; exact re-check of trees within 1e-6 of the max.
inline PathMaxResult verify_path_max_kemeny(std::size_t n) {
    detail::require_path_max_order(n);
    PathMaxResult res;
    res.n = n;
    if (n < 2) {
        res.trees = 1;
        res.holds = true;
        return res;
    }
    const TreeEnumeration trees(n);
    res.trees = trees.size();
    std::vector<double> approx(trees.size());
    parallel_for(trees.size(), [&](std::size_t i) { approx[i] = kemeny_resistance_float(trees.tree(i)); });
    const double top = *std::max_element(approx.begin(), approx.end());
    const double cut = top - kFloatFilterTolerance * std::max(1.0, std::abs(top));

    res.path_value = kemeny_resistance(make_path(n)).kemeny;
    res.holds = true;
    bool first = true;
    for (std::size_t i = 0; i < trees.size(); ++i) {
        if (approx[i] < cut) continue;
        const Graph t = trees.tree(i);
        const Rational exact = kemeny_resistance(t).kemeny;
        ++res.exact_checks;
        if (first || exact > res.max_value) {
            res.max_value = exact;
            res.trees_at_max = 0;
            first = false;
        }
        if (exact == res.max_value) ++res.trees_at_max;
        if (exact > res.path_value) res.holds = false;
        if (exact == res.path_value && !detail::is_path_tree(t)) res.holds = false;
    }
    if (res.max_value != res.path_value) res.holds = false;
    return res;
}

/// mu(T, v) <= mu(P_n, end) = (n-1)^2 over all labelled trees and vertices.
inline PathMaxResult verify_path_max_moment(std::size_t n) {
    detail::require_path_max_order(n);
    PathMaxResult res;
    res.n = n;
    if (n < 2) {
        res.trees = 1;
        res.holds = true;
        return res;
    }
    const TreeEnumeration trees(n);
    res.trees = trees.size();
    std::vector<double> approx(trees.size());
    parallel_for(trees.size(), [&](std::size_t i) {
        const Graph t = trees.tree(i);
        const auto r = resistance_matrix<double>(t);
        double best = 0;
        for (Vertex v = 0; v < n; ++v) best = std::max(best, moment_from_resistances(t, r, v));
        approx[i] = best;
    });
    const double top = *std::max_element(approx.begin(), approx.end());
    const double cut = top - kFloatFilterTolerance * std::max(1.0, std::abs(top));

    res.path_value = moment(make_path(n), 0).value;
    res.holds = true;
    bool first = true;
    for (std::size_t i = 0; i < trees.size(); ++i) {
        if (approx[i] < cut) continue;
        const Graph t = trees.tree(i);
        ++res.exact_checks;
        Rational tree_max;
        for (const MomentValue& mv : all_moments(t)) tree_max = std::max(tree_max, mv.value);
        if (first || tree_max > res.max_value) {
            res.max_value = tree_max;
            res.trees_at_max = 0;
            first = false;
        }
        if (tree_max == res.max_value) ++res.trees_at_max;
        if (tree_max > res.path_value) res.holds = false;
    }
    if (res.max_value != res.path_value) res.holds = false;
    return res;
}

}  // namespace kemeny
