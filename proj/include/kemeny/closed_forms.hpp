#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "kemeny/errors.hpp"
#include "kemeny/graph.hpp"
#include "kemeny/kemeny.hpp"
#include "kemeny/rational.hpp"

namespace kemeny {

enum class Family { complete, path, star };

inline const char* to_string(Family f) {
    switch (f) {
        case Family::complete: return "complete";
        case Family::path: return "path";
        case Family::star: return "star";
    }
    return "?";
}

inline Graph make_family(Family f, std::size_t n) {
    switch (f) {
        case Family::complete: return make_complete(n);
        case Family::path: return make_path(n);
        case Family::star: return make_star(n);
    }
    throw GraphError("unknown family");
}

namespace detail {
inline Rational q(long num, long den = 1) { return Rational(num, den); }
inline Rational binom2(long x) { return Rational(x * (x - 1) / 2); }
}  // namespace detail

/// (n-1)^2/n, (2n^2-4n+3)/6, n-3/2 for K_n, P_n, S_n.
inline Rational kemeny_closed(Family f, std::size_t size) {
    if (size < 2) throw GraphError("closed forms need n >= 2");
    const long n = static_cast<long>(size);
    switch (f) {
        case Family::complete: return detail::q((n - 1) * (n - 1), n);
        case Family::path: return detail::q(2 * n * n - 4 * n + 3, 6);
        case Family::star: return detail::q(2 * n - 3, 2);
    }
    throw GraphError("unknown family");
}

/// Moment at 0-based vertex v: 2(n-1)^2/n on K_n; (n-1-v)^2 + v^2 on P_n;
/// n-1 at the center (v = 0) of S_n.
inline Rational moment_closed(Family f, std::size_t size, Vertex v) {
    if (size < 2) throw GraphError("closed forms need n >= 2");
    if (v >= size) throw GraphError("vertex out of range");
    const long n = static_cast<long>(size);
    const long j = static_cast<long>(v);
    switch (f) {
        case Family::complete: return detail::q(2 * (n - 1) * (n - 1), n);
        case Family::path: return detail::q((n - 1 - j) * (n - 1 - j) + j * j);
        case Family::star:
            if (v != 0) throw GraphError("star moment closed form is only given at the center");
            return detail::q(n - 1);
    }
    throw GraphError("unknown family");
}

/// K(B(1,a,b,c)), evaluated term by term:
///   (1/m) [ C(b+1,2)(b^2/(b+1) + (a-1)^2 + 2c^2/(c+1))
///         + (a-1)((2a^2-4a+3)/6 + 2b^2/(b+1) + 2c^2/(c+1))
///         + C(c+1,2)(c^2/(c+1) + (a-1)^2 + 2b^2/(b+1))
///         + 2 C(b+1,2) C(c+1,2) (a-1) ],  m = C(b+1,2) + C(c+1,2) + a - 1
inline Rational kemeny_barbell(std::size_t a_, std::size_t b_, std::size_t c_) {
    if (a_ < 2 || b_ < 1 || c_ < 1) throw GraphError("barbell needs a >= 2, b >= 1, c >= 1");
    using detail::q;
    const long a = static_cast<long>(a_), b = static_cast<long>(b_), c = static_cast<long>(c_);
    const Rational cb = detail::binom2(b + 1);
    const Rational cc = detail::binom2(c + 1);
    const Rational path_edges = q(a - 1);
    const Rational m = cb + cc + path_edges;
    const Rational kb = q(b * b, b + 1);  // K(K_{b+1})
    const Rational kc = q(c * c, c + 1);
    const Rational mub = q(2 * b * b, b + 1);  // mu(K_{b+1}, .)
    const Rational muc = q(2 * c * c, c + 1);
    const Rational mupath = q((a - 1) * (a - 1));  // mu(P_a, end)
    const Rational kpath = q(2 * a * a - 4 * a + 3, 6);

    Rational total = cb * (kb + mupath + muc);
    total += path_edges * (kpath + mub + muc);
    total += cc * (kc + mupath + mub);
    total += Rational(2) * cb * cc * path_edges;
    return total / m;
}

/// K(B(1, n/3, n/3, n/3)) =
///   (1/54)[n^3 + 3n^2 + 24n - 36 + (-513n^2 + 1782n - 1701)/(n^3 + 9n^2 + 9n - 27)]
inline Rational kemeny_barbell_thirds(std::size_t size) {
    if (size < 9 || size % 3 != 0) throw GraphError("n must be a multiple of 3 and at least 9");
    const long n = static_cast<long>(size);
    const Rational poly(n * n * n + 3 * n * n + 24 * n - 36);
    const Rational frac(-513 * n * n + 1782 * n - 1701, n * n * n + 9 * n * n + 9 * n - 27);
    return (poly + frac) / Rational(54);
}

/// K(B(1, n/3+2, n/3-1, n/3-1)) =
///   (1/54)[n^3 + 3n^2 + 60n - 270 + (297n^2 - 729n + 5832)/(n^3 + 9n)]
inline Rational kemeny_barbell_best(std::size_t size) {
    if (size < 9 || size % 3 != 0) throw GraphError("n must be a multiple of 3 and at least 9");
    const long n = static_cast<long>(size);
    const Rational poly(n * n * n + 3 * n * n + 60 * n - 270);
    const Rational frac(297 * n * n - 729 * n + 5832, n * n * n + 9 * n);
    return (poly + frac) / Rational(54);
}

/// G with k pendant vertices attached at v (pendants take labels n..n+k-1).
inline Graph attach_pendants(const Graph& g, Vertex v, std::size_t k) {
    if (k < 1) throw GraphError("need k >= 1 pendants");
    return one_sum(make_star(k + 1), 0, g, v).graph;
}

/// [m1 K(G1) + k mu(G1,v) + k(m1 + k - 1/2)] / (m1 + k)
inline Rational kemeny_k_pendants(std::size_t m1_, const Rational& kemeny1, const Rational& moment1, std::size_t k_) {
    if (k_ < 1) throw GraphError("need k >= 1 pendants");
    const Rational m1(static_cast<long>(m1_));
    const Rational k(static_cast<long>(k_));
    return (m1 * kemeny1 + k * moment1 + k * (m1 + k - Rational(1, 2))) / (m1 + k);
}

inline Rational kemeny_k_pendants(const Graph& g, Vertex v, std::size_t k) {
    require_vertex(g, v);
    const GraphProfile p = profile(g);
    return kemeny_k_pendants(p.m, p.kemeny, p.moment(v), k);
}

// ---------------------------------------------------------------------------
// Pendant triplets: three pendants at v with 0, 1, 2 or 3 edges among them.

enum class TripletVariant { bar, tilde, hat, star };

/// S_4 (center 0, leaves 1,2,3) with 0/1/2/3 leaf edges.
inline Graph triplet_gadget(TripletVariant variant) {
    EdgeSet e{{0, 1}, {0, 2}, {0, 3}};
    if (variant != TripletVariant::bar) e.emplace_back(1, 2);
    if (variant == TripletVariant::hat || variant == TripletVariant::star) e.emplace_back(2, 3);
    if (variant == TripletVariant::star) e.emplace_back(1, 3);
    return Graph(4, std::move(e));
}

/// The explicit augmented graph: gadget glued to g at v (g keeps its labels).
inline Graph triplet_graph(const Graph& g, Vertex v, TripletVariant variant) {
    return one_sum(triplet_gadget(variant), 0, g, v).graph;
}

struct TripletValues {
    Rational bar, tilde, hat, star;
};

/// (2mK+6mu+6m+15)/(2m+6), (6mK+24mu+22m+61)/(6m+24),
/// (4mK+20mu+16m+47)/(4m+20), (2mK+12mu+9m+27)/(2m+12)
inline TripletValues kemeny_triplet_variants(std::size_t m_, const Rational& k, const Rational& mu) {
    const Rational m(static_cast<long>(m_));
    auto lin = [&](long a, long b, long c, long d) {  // (a m K + b mu + c m + d)
        return Rational(a) * m * k + Rational(b) * mu + Rational(c) * m + Rational(d);
    };
    return TripletValues{
        lin(2, 6, 6, 15) / (Rational(2) * m + Rational(6)),
        lin(6, 24, 22, 61) / (Rational(6) * m + Rational(24)),
        lin(4, 20, 16, 47) / (Rational(4) * m + Rational(20)),
        lin(2, 12, 9, 27) / (Rational(2) * m + Rational(12)),
    };
}

inline TripletValues kemeny_triplet_variants(const Graph& g, Vertex v) {
    require_vertex(g, v);
    if (g.m() < 1) throw GraphError("pendant triplet formulas need m >= 1");
    const GraphProfile p = profile(g);
    return kemeny_triplet_variants(p.m, p.kemeny, p.moment(v));
}

/// Numerators whose signs decide the pairwise comparisons of the four
/// triplet graphs (each denominator is positive):
///   hat - tilde : 24m(mu-K) + 2(4m^2 - 9m - 46)
///   star - hat  : 8m(mu-K)  + 2(2m^2 + m - 12)
///   star - tilde: 24m(mu-K) + 2(5m^2 - 4m - 42)
///   hat - bar   : 16m(mu-K) + 2(4m^2 + 5m - 9)
///   star - bar  : 12m(mu-K) + 6(m^2 + m - 3)
struct ComparisonQuantities {
    Rational hat_vs_tilde, star_vs_hat, star_vs_tilde, hat_vs_bar, star_vs_bar;
};

inline ComparisonQuantities comparison_quantities(std::size_t m_, const Rational& k, const Rational& mu) {
    const long m = static_cast<long>(m_);
    const Rational gap = mu - k;
    auto term = [&](long coeff) { return Rational(coeff * m) * gap; };
    return ComparisonQuantities{
        term(24) + Rational(2 * (4 * m * m - 9 * m - 46)),
        term(8) + Rational(2 * (2 * m * m + m - 12)),
        term(24) + Rational(2 * (5 * m * m - 4 * m - 42)),
        term(16) + Rational(2 * (4 * m * m + 5 * m - 9)),
        term(12) + Rational(6 * (m * m + m - 3)),
    };
}

/// Denominator products matching each comparison numerator, so that
/// K(X) - K(Y) = numerator / denominator exactly.
inline ComparisonQuantities comparison_denominators(std::size_t m_) {
    const long m = static_cast<long>(m_);
    return ComparisonQuantities{
        Rational((4 * m + 20) * (6 * m + 24)),
        Rational((2 * m + 12) * (4 * m + 20)),
        Rational((2 * m + 12) * (6 * m + 24)),
        Rational((4 * m + 20) * (2 * m + 6)),
        Rational((2 * m + 12) * (2 * m + 6)),
    };
}

/// A named closed-form evaluation, optionally checked against direct computation.
struct ClosedFormResult {
    std::string name;
    std::map<std::string, long> parameters;
    Rational value;
    std::optional<Rational> direct;
    bool verified_against_direct = false;
};

inline ClosedFormResult barbell_result(std::size_t a, std::size_t b, std::size_t c, bool compute_direct) {
    ClosedFormResult out{"barbell",
                         {{"a", static_cast<long>(a)}, {"b", static_cast<long>(b)}, {"c", static_cast<long>(c)}},
                         kemeny_barbell(a, b, c),
                         std::nullopt,
                         false};
    if (compute_direct) {
        out.direct = kemeny_resistance(make_barbell(1, a, b, c)).kemeny;
        out.verified_against_direct = *out.direct == out.value;
    }
    return out;
}

}  // namespace kemeny
