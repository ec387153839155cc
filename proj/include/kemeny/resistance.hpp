#pragma once

#include <cstddef>
#include <type_traits>
#include <vector>

#include "kemeny/graph.hpp"
#include "kemeny/matrix.hpp"
#include "kemeny/rational.hpp"

namespace kemeny {

template <typename T>
T scalar_from(const Rational& x) {
    if constexpr (std::is_same_v<T, Rational>) {
        return x;
    } else {
        return static_cast<T>(x.to_double());
    }
}

/// L = D - W, W the (weighted) adjacency matrix.
template <typename T = Rational>
Matrix<T> laplacian(const Graph& g) {
    Matrix<T> l(g.n(), g.n());
    for (std::size_t i = 0; i < g.m(); ++i) {
        const Edge& e = g.edges()[i];
        const T w = scalar_from<T>(g.weight(i));
        l(e.u, e.u) += w;
        l(e.v, e.v) += w;
        l(e.u, e.v) -= w;
        l(e.v, e.u) -= w;
    }
    return l;
}

/// Moore-Penrose pseudoinverse of the Laplacian of a connected graph via
/// L^+ = (L + J/n)^{-1} - J/n. Valid because ker L = span{1}.
template <typename T = Rational>
Matrix<T> laplacian_pinv(const Graph& g) {
    require_connected(g);
    const std::size_t n = g.n();
    const T shift = T(1) / T(static_cast<long>(n));
    Matrix<T> bordered = laplacian<T>(g);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) bordered(i, j) += shift;
    }
    Matrix<T> out = inverse(std::move(bordered));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) out(i, j) -= shift;
    }
    return out;
}

/// Symmetric matrix of pairwise effective resistances, zero diagonal.
template <typename T = Rational>
class ResistanceMatrix {
public:
    explicit ResistanceMatrix(const Matrix<T>& pinv) : n_(pinv.rows()), entries_(pinv.rows(), pinv.rows()) {
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = i + 1; j < n_; ++j) {
                T r = pinv(i, i) + pinv(j, j) - pinv(i, j) - pinv(j, i);
                entries_(i, j) = r;
                entries_(j, i) = std::move(r);
            }
        }
    }

    [[nodiscard]] std::size_t n() const { return n_; }
    const T& operator()(Vertex i, Vertex j) const { return entries_(i, j); }
    [[nodiscard]] const Matrix<T>& matrix() const { return entries_; }

private:
    std::size_t n_;
    Matrix<T> entries_;
};

/// r(i,j) = (e_i - e_j)^T L^+ (e_i - e_j), exactly for T = Rational.
template <typename T = Rational>
ResistanceMatrix<T> resistance_matrix(const Graph& g) {
    return ResistanceMatrix<T>(laplacian_pinv<T>(g));
}

/// Checks r_G(i,j) = r_G1(i,v1) + r_G2(v2,j) for every i on the g1 side
/// and j on the g2 side of one_sum(g1, v1, g2, v2).
inline bool verify_cut_vertex_resistance(const Graph& g1, Vertex v1, const Graph& g2, Vertex v2) {
    const OneSum sum = one_sum(g1, v1, g2, v2);
    const auto r = resistance_matrix(sum.graph);
    const auto r1 = resistance_matrix(g1);
    const auto r2 = resistance_matrix(g2);
    for (Vertex i = 0; i < g1.n(); ++i) {
        for (Vertex j = 0; j < g2.n(); ++j) {
            if (r(sum.left_map[i], sum.right_map[j]) != r1(i, v1) + r2(v2, j)) return false;
        }
    }
    return true;
}

/// Star on n+1 vertices (center 0) with every edge of conductance `conductance`.
inline Graph make_weighted_star(std::size_t leaves, const Rational& conductance) {
    EdgeSet e;
    for (Vertex x = 1; x <= leaves; ++x) e.emplace_back(0, x);
    return Graph(leaves + 1, std::move(e), std::vector<Rational>(leaves, conductance));
}

/// K_n with unit resistors vs. S_{n+1} with resistance 1/n per edge:
/// true iff every leaf-to-leaf resistance of the star equals the
/// corresponding K_n resistance.
inline bool mesh_star_equivalence(std::size_t n) {
    if (n < 2) throw GraphError("mesh-star equivalence needs n >= 2");
    const auto star = resistance_matrix(make_weighted_star(n, Rational(static_cast<long>(n))));
    const auto mesh = resistance_matrix(make_complete(n));
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = 0; j < n; ++j) {
            if (star(i + 1, j + 1) != mesh(i, j)) return false;
        }
    }
    return true;
}

}  // namespace kemeny
