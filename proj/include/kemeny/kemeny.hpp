#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "kemeny/errors.hpp"
#include "kemeny/graph.hpp"
#include "kemeny/matrix.hpp"
#include "kemeny/rational.hpp"
#include "kemeny/resistance.hpp"

namespace kemeny {

enum class KemenyMethod { resistance, hitting_time };

inline const char* to_string(KemenyMethod m) {
    return m == KemenyMethod::resistance ? "resistance" : "hitting_time";
}

struct KemenyReport {
    Rational kemeny;
    std::size_t m = 0;
    KemenyMethod method = KemenyMethod::resistance;
    std::optional<std::vector<Rational>> per_start_values;  ///< hitting-time method only
};

struct MomentValue {
    Vertex vertex = 0;
    Rational value;
};

enum class NumericMode { exact, floating };

/// Float arithmetic is only used for graphs with more than `float_cutoff`
/// vertices, and only when the mode asks for it.
struct NumericConfig {
    NumericMode mode = NumericMode::exact;
    std::size_t float_cutoff = 64;

    [[nodiscard]] bool use_float(const Graph& g) const {
        return mode == NumericMode::floating && g.n() > float_cutoff;
    }
};

inline void require_unweighted(const Graph& g) {
    if (g.has_weights()) throw GraphError("Kemeny's constant is only defined here for unweighted graphs");
}

inline void require_kemeny_input(const Graph& g) {
    require_unweighted(g);
    if (g.n() < 2) throw GraphError("Kemeny's constant needs at least two vertices");
    require_connected(g);
}

/// d^T R d / 4m
template <typename T>
T kemeny_from_resistances(const Graph& g, const ResistanceMatrix<T>& r) {
    const auto d = g.degrees();
    T total(0);
    for (Vertex i = 0; i < g.n(); ++i) {
        T row(0);
        for (Vertex j = 0; j < g.n(); ++j) {
            if (i != j) row += T(static_cast<long>(d[j])) * r(i, j);
        }
        total += T(static_cast<long>(d[i])) * row;
    }
    return total / T(static_cast<long>(4 * g.m()));
}

/// sum_i d_i r(i, v)
template <typename T>
T moment_from_resistances(const Graph& g, const ResistanceMatrix<T>& r, Vertex v) {
    T total(0);
    for (Vertex i = 0; i < g.n(); ++i) {
        if (i != v) total += T(static_cast<long>(g.degree(i))) * r(i, v);
    }
    return total;
}

inline KemenyReport kemeny_resistance(const Graph& g) {
    require_kemeny_input(g);
    const auto r = resistance_matrix<Rational>(g);
    return KemenyReport{kemeny_from_resistances(g, r), g.m(), KemenyMethod::resistance, std::nullopt};
}

/// Same formula in binary64; for the large-graph float mode and sweep pre-filters.
inline double kemeny_resistance_float(const Graph& g) {
    require_kemeny_input(g);
    const auto r = resistance_matrix<double>(g);
    return kemeny_from_resistances(g, r);
}

/// Independent route: for each target j solve m_jj = 0,
/// m_ij = 1 + sum_k P_ik m_kj with P = D^{-1} W, then evaluate
/// sum_j pi_j m_ij (pi_j = d_j / 2m) from every start i. All starts must agree.
inline KemenyReport kemeny_hitting_oracle(const Graph& g) {
    require_kemeny_input(g);
    const std::size_t n = g.n();
    const auto d = g.degrees();
    const Rational two_m(static_cast<long>(2 * g.m()));

    // hitting[i][j] = m_ij
    std::vector<std::vector<Rational>> hitting(n, std::vector<Rational>(n));
    for (Vertex target = 0; target < n; ++target) {
        std::vector<Vertex> index_of(n, n);
        std::vector<Vertex> others;
        for (Vertex i = 0; i < n; ++i) {
            if (i == target) continue;
            index_of[i] = others.size();
            others.push_back(i);
        }
        const std::size_t k = others.size();
        Matrix<Rational> a(k, k);
        Matrix<Rational> b(k, 1, Rational(1));
        for (std::size_t row = 0; row < k; ++row) {
            const Vertex i = others[row];
            a(row, row) += Rational(1);
            const Rational p(1L, static_cast<long>(d[i]));
            for (Vertex nb : g.neighbors(i)) {
                if (nb != target) a(row, index_of[nb]) -= p;
            }
        }
        const Matrix<Rational> x = solve(std::move(a), std::move(b));
        for (std::size_t row = 0; row < k; ++row) hitting[others[row]][target] = x(row, 0);
    }

    std::vector<Rational> per_start(n);
    for (Vertex i = 0; i < n; ++i) {
        Rational total;
        for (Vertex j = 0; j < n; ++j) {
            if (j != i) total += Rational(static_cast<long>(d[j])) / two_m * hitting[i][j];
        }
        per_start[i] = std::move(total);
    }
    for (Vertex i = 1; i < n; ++i) {
        if (per_start[i] != per_start[0]) {
            throw ConsistencyError("hitting-time Kemeny value depends on the start vertex (" + per_start[0].str() +
                                   " vs " + per_start[i].str() + ")");
        }
    }
    return KemenyReport{per_start[0], g.m(), KemenyMethod::hitting_time, std::move(per_start)};
}

/// mu(G, v) = d^T R e_v
inline MomentValue moment(const Graph& g, Vertex v) {
    require_unweighted(g);
    require_vertex(g, v);
    require_connected(g);
    const auto r = resistance_matrix<Rational>(g);
    return MomentValue{v, moment_from_resistances(g, r, v)};
}

inline std::vector<MomentValue> all_moments(const Graph& g) {
    require_unweighted(g);
    require_connected(g);
    const auto r = resistance_matrix<Rational>(g);
    std::vector<MomentValue> out;
    for (Vertex v = 0; v < g.n(); ++v) out.push_back({v, moment_from_resistances(g, r, v)});
    return out;
}

inline Rational moment_minus_kemeny(const Graph& g, Vertex v) {
    require_kemeny_input(g);
    require_vertex(g, v);
    const auto r = resistance_matrix<Rational>(g);
    Rational diff = moment_from_resistances(g, r, v) - kemeny_from_resistances(g, r);
    if (diff.sign() < 0) {
        throw ConsistencyError("moment below Kemeny's constant at vertex " + std::to_string(v));
    }
    return diff;
}

/// Everything the decomposition formulas need from one part, from a single
/// resistance solve. A single-vertex part has m = 0, K = 0, mu = 0.
struct GraphProfile {
    std::size_t m = 0;
    Rational kemeny;
    std::vector<Rational> moments;
    ResistanceMatrix<Rational> resistance;

    [[nodiscard]] const Rational& moment(Vertex v) const { return moments.at(v); }
};

inline GraphProfile profile(const Graph& g) {
    require_unweighted(g);
    require_connected(g);
    auto r = resistance_matrix<Rational>(g);
    std::vector<Rational> mu;
    mu.reserve(g.n());
    for (Vertex v = 0; v < g.n(); ++v) mu.push_back(moment_from_resistances(g, r, v));
    Rational k = g.n() >= 2 ? kemeny_from_resistances(g, r) : Rational(0);
    return GraphProfile{g.m(), std::move(k), std::move(mu), std::move(r)};
}

}  // namespace kemeny
