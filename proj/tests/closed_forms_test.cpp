#include "kemeny/closed_forms.hpp"

#include "gtest/gtest.h"
#include "kemeny/enumeration.hpp"
#include "kemeny/errors.hpp"

namespace kemeny {
namespace {

Rational direct(const Graph& g) { return kemeny_resistance(g).kemeny; }

TEST(Families, Examples) {
  EXPECT_EQ(kemeny_closed(Family::path, 3), Rational(3, 2));
  EXPECT_EQ(kemeny_closed(Family::complete, 2), Rational(1, 2));
  EXPECT_EQ(kemeny_closed(Family::path, 2), Rational(1, 2));
  EXPECT_EQ(moment_closed(Family::star, 6, 0), Rational(5));
  EXPECT_EQ(moment_closed(Family::path, 5, 0), Rational(16));
  EXPECT_EQ(moment_closed(Family::path, 3, 1), Rational(2));
  EXPECT_THROW(moment_closed(Family::star, 6, 1), GraphError);
  EXPECT_THROW(kemeny_closed(Family::path, 1), GraphError);
  EXPECT_THROW(moment_closed(Family::path, 4, 4), GraphError);
}

TEST(Families, MatchDirect) {
  for (std::size_t n = 2; n <= 12; ++n) {
    for (Family f : {Family::complete, Family::path, Family::star}) {
      const Graph g = make_family(f, n);
      EXPECT_EQ(kemeny_closed(f, n), direct(g)) << to_string(f) << n;
      const std::size_t last = f == Family::star ? 1 : n;
      for (Vertex v = 0; v < last; ++v) EXPECT_EQ(moment_closed(f, n, v), moment(g, v).value);
    }
  }
}

TEST(Barbell, Examples) {
  EXPECT_EQ(kemeny_barbell(6, 4, 5), Rational(503, 6));
  EXPECT_EQ(kemeny_barbell(6, 4, 5), direct(make_barbell(1, 6, 4, 5)));
  for (std::size_t n = 4; n <= 10; ++n) EXPECT_EQ(kemeny_barbell(n - 2, 1, 1), kemeny_closed(Family::path, n));
  EXPECT_THROW(kemeny_barbell(1, 2, 2), GraphError);
  EXPECT_THROW(kemeny_barbell(2, 0, 2), GraphError);
}

TEST(Barbell, SymmetricInCliques) {
  for (std::size_t a = 2; a <= 6; ++a) {
    for (std::size_t b = 1; b <= 6; ++b) {
      for (std::size_t c = 1; c <= 6; ++c) EXPECT_EQ(kemeny_barbell(a, b, c), kemeny_barbell(a, c, b));
    }
  }
}

TEST(Barbell, Result) {
  const ClosedFormResult r = barbell_result(6, 4, 5, true);
  EXPECT_EQ(r.name, "barbell");
  EXPECT_EQ(r.parameters.at("a"), 6);
  ASSERT_TRUE(r.direct);
  EXPECT_TRUE(r.verified_against_direct);
  const ClosedFormResult quick = barbell_result(6, 4, 5, false);
  EXPECT_FALSE(quick.direct);
  EXPECT_FALSE(quick.verified_against_direct);
}

TEST(Barbell, Corollaries) {
  EXPECT_EQ(kemeny_barbell_thirds(9), kemeny_barbell(3, 3, 3));
  EXPECT_EQ(kemeny_barbell_best(9), kemeny_barbell(5, 2, 2));
  EXPECT_EQ(kemeny_barbell_thirds(12), direct(make_barbell(1, 4, 4, 4)));
  EXPECT_EQ(kemeny_barbell_best(12), direct(make_barbell(1, 6, 3, 3)));
  for (std::size_t n = 9; n <= 30; n += 3) EXPECT_GT(kemeny_barbell_best(n), kemeny_barbell_thirds(n));
  EXPECT_THROW(kemeny_barbell_thirds(10), GraphError);
  EXPECT_THROW(kemeny_barbell_best(6), GraphError);
}

TEST(Pendants, Examples) {
  EXPECT_EQ(kemeny_k_pendants(make_path(2), 1, 1), Rational(3, 2));
  for (Vertex v = 0; v < 3; ++v) {
    EXPECT_EQ(kemeny_k_pendants(make_complete(3), v, 2), direct(attach_pendants(make_complete(3), v, 2)));
  }
  const Graph g = attach_pendants(make_cycle(4), 1, 3);
  EXPECT_EQ(g.n(), 7u);
  EXPECT_EQ(g.degree(1), 5u);
  EXPECT_EQ(g.degree(6), 1u);
  EXPECT_THROW(attach_pendants(make_cycle(4), 1, 0), GraphError);
}

TEST(Pendants, ThreeIsTheBarTriplet) {
  for (const Graph& g : connected_graph_classes(4)) {
    if (g.m() == 0) continue;
    for (Vertex v = 0; v < g.n(); ++v) EXPECT_EQ(kemeny_k_pendants(g, v, 3), kemeny_triplet_variants(g, v).bar);
  }
}

TEST(Triplets, GadgetConstants) {
  const Graph tilde = triplet_gadget(TripletVariant::tilde);
  const Graph hat = triplet_gadget(TripletVariant::hat);
  const Graph star = triplet_gadget(TripletVariant::star);
  EXPECT_EQ(direct(tilde), Rational(61, 24));
  EXPECT_EQ(moment(tilde, 0).value, Rational(11, 3));
  EXPECT_EQ(direct(hat), Rational(47, 20));
  EXPECT_EQ(moment(hat, 0).value, Rational(4));
  EXPECT_EQ(star, make_complete(4));
  EXPECT_EQ(direct(star), Rational(9, 4));
  EXPECT_EQ(moment(star, 0).value, Rational(9, 2));
}

TEST(Triplets, MatchDirect) {
  for (const Graph& g : {make_path(2), make_complete(3), make_cycle(5), make_star(5)}) {
    for (Vertex v = 0; v < g.n(); ++v) {
      const TripletValues t = kemeny_triplet_variants(g, v);
      EXPECT_EQ(t.bar, direct(triplet_graph(g, v, TripletVariant::bar)));
      EXPECT_EQ(t.tilde, direct(triplet_graph(g, v, TripletVariant::tilde)));
      EXPECT_EQ(t.hat, direct(triplet_graph(g, v, TripletVariant::hat)));
      EXPECT_EQ(t.star, direct(triplet_graph(g, v, TripletVariant::star)));
    }
  }
  EXPECT_THROW(kemeny_triplet_variants(Graph(1), 0), GraphError);
}

TEST(Triplets, P2Ordering) {
  const TripletValues t = kemeny_triplet_variants(make_path(2), 0);
  EXPECT_EQ(t.bar, t.star);
  EXPECT_LT(t.star, t.hat);
  EXPECT_LT(t.hat, t.tilde);
}

TEST(Comparison, S4CentreCounterexample) {
  const ComparisonQuantities q = comparison_quantities(3, Rational(5, 2), Rational(3));
  EXPECT_EQ(q.hat_vs_tilde, Rational(-38));
  const TripletValues t = kemeny_triplet_variants(make_star(4), 0);
  EXPECT_LT(t.hat, t.tilde);
}

TEST(Comparison, NumeratorsReproduceDifferences) {
  for (const Graph& g : connected_graph_classes(5)) {
    if (g.m() == 0) continue;
    const GraphProfile p = profile(g);
    const ComparisonQuantities den = comparison_denominators(p.m);
    for (Vertex v = 0; v < g.n(); ++v) {
      const TripletValues t = kemeny_triplet_variants(p.m, p.kemeny, p.moment(v));
      const ComparisonQuantities q = comparison_quantities(p.m, p.kemeny, p.moment(v));
      EXPECT_EQ(q.hat_vs_tilde / den.hat_vs_tilde, t.hat - t.tilde);
      EXPECT_EQ(q.star_vs_hat / den.star_vs_hat, t.star - t.hat);
      EXPECT_EQ(q.star_vs_tilde / den.star_vs_tilde, t.star - t.tilde);
      EXPECT_EQ(q.hat_vs_bar / den.hat_vs_bar, t.hat - t.bar);
      EXPECT_EQ(q.star_vs_bar / den.star_vs_bar, t.star - t.bar);
    }
  }
}

}  // namespace
}  // namespace kemeny
