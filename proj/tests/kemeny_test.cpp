#include "kemeny/kemeny.hpp"

#include <algorithm>

#include "gtest/gtest.h"
#include "kemeny/enumeration.hpp"
#include "kemeny/errors.hpp"

namespace kemeny {
namespace {

TEST(Kemeny, ResistanceExamples) {
  EXPECT_EQ(kemeny_resistance(make_complete(5)).kemeny, Rational(16, 5));
  EXPECT_EQ(kemeny_resistance(make_path(4)).kemeny, Rational(19, 6));
  EXPECT_EQ(kemeny_resistance(make_star(6)).kemeny, Rational(9, 2));
  EXPECT_EQ(kemeny_resistance(make_cycle(4)).kemeny, Rational(5, 2));
  EXPECT_EQ(kemeny_resistance(make_path(2)).kemeny, Rational(1, 2));
  const KemenyReport r = kemeny_resistance(make_path(7));
  EXPECT_EQ(r.m, 6u);
  EXPECT_EQ(r.method, KemenyMethod::resistance);
  EXPECT_FALSE(r.per_start_values);
}

TEST(Kemeny, HittingOracleExamples) {
  const KemenyReport k3 = kemeny_hitting_oracle(make_complete(3));
  EXPECT_EQ(k3.kemeny, Rational(4, 3));
  ASSERT_TRUE(k3.per_start_values);
  for (const Rational& x : *k3.per_start_values) EXPECT_EQ(x, Rational(4, 3));
  EXPECT_EQ(kemeny_hitting_oracle(make_path(2)).kemeny, Rational(1, 2));
  EXPECT_EQ(kemeny_hitting_oracle(make_path(7)).kemeny, Rational(73, 6));
  EXPECT_EQ(kemeny_hitting_oracle(make_cycle(4)).kemeny, Rational(5, 2));
  EXPECT_EQ(kemeny_hitting_oracle(make_barbell(1, 6, 4, 5)).kemeny, Rational(503, 6));
}

TEST(Kemeny, RejectsBadInput) {
  EXPECT_THROW(kemeny_resistance(Graph(1)), GraphError);
  EXPECT_THROW(kemeny_resistance(Graph(3, {{0, 1}})), DisconnectedGraph);
  const Graph weighted(2, {{0, 1}}, std::vector<Rational>{Rational(2)});
  EXPECT_THROW(kemeny_resistance(weighted), GraphError);
  EXPECT_THROW(kemeny_hitting_oracle(weighted), GraphError);
  EXPECT_THROW(moment(weighted, 0), GraphError);
  EXPECT_THROW(moment(make_path(3), 3), GraphError);
}

TEST(Kemeny, MethodsAgreeOnCorpus) {
  for (const Graph& g : connected_corpus(5).graphs) {
    if (g.n() < 2) continue;
    const KemenyReport hit = kemeny_hitting_oracle(g);
    EXPECT_EQ(hit.kemeny, kemeny_resistance(g).kemeny);
    for (const Rational& x : *hit.per_start_values) EXPECT_EQ(x, hit.kemeny);
    EXPECT_GT(hit.kemeny, Rational(0));
  }
}

TEST(Kemeny, FloatAgrees) {
  Rng rng(5);
  for (int i = 0; i < 20; ++i) {
    const Graph g = random_connected_graph(2 + i % 10, rng);
    EXPECT_NEAR(kemeny_resistance_float(g), kemeny_resistance(g).kemeny.to_double(), 1e-9);
  }
}

TEST(NumericConfig, Cutoff) {
  NumericConfig cfg;
  EXPECT_FALSE(cfg.use_float(make_path(100)));
  cfg.mode = NumericMode::floating;
  EXPECT_FALSE(cfg.use_float(make_path(64)));
  EXPECT_TRUE(cfg.use_float(make_path(65)));
}

TEST(Moment, Examples) {
  EXPECT_EQ(moment(make_path(5), 0).value, Rational(16));
  EXPECT_EQ(moment(make_complete(4), 2).value, Rational(9, 2));
  EXPECT_EQ(moment(make_star(4), 0).value, Rational(3));
  EXPECT_EQ(moment(Graph(1), 0).value, Rational(0));
  const auto all = all_moments(make_path(3));
  ASSERT_EQ(all.size(), 3u);
  EXPECT_EQ(all[1].vertex, 1u);
  EXPECT_EQ(all[1].value, Rational(2));
}

TEST(Moment, MinusKemeny) {
  EXPECT_EQ(moment_minus_kemeny(make_path(2), 0), Rational(1, 2));
  for (std::size_t n = 2; n <= 7; ++n) {
    EXPECT_EQ(moment_minus_kemeny(make_complete(n), 0), Rational(static_cast<long>((n - 1) * (n - 1)), static_cast<long>(n)));
  }
  for (const Graph& g : connected_corpus(5).graphs) {
    if (g.n() < 2) continue;
    for (Vertex v = 0; v < g.n(); ++v) EXPECT_GE(moment_minus_kemeny(g, v), Rational(0));
  }
}

TEST(Kemeny, CompleteGraphIsMinimal) {
  // exact over every labelled connected graph on up to 6 vertices
  std::vector<Rational> low(7);
  std::vector<bool> seen(7, false);
  for (const Graph& g : connected_corpus(6).graphs) {
    if (g.n() < 2) continue;
    const Rational k = kemeny_resistance(g).kemeny;
    if (!seen[g.n()] || k < low[g.n()]) low[g.n()] = k;
    seen[g.n()] = true;
  }
  for (std::size_t n = 2; n <= 6; ++n) EXPECT_EQ(low[n], kemeny_resistance(make_complete(n)).kemeny) << n;
}

TEST(Kemeny, CompleteGraphIsMinimalSeven) {
  // all 2^21 edge subsets on 7 vertices; float screen, exact re-check near the minimum
  const std::size_t n = 7;
  EdgeSet all;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) all.emplace_back(a, b);
  }
  const double floor_value = kemeny_resistance(make_complete(n)).kemeny.to_double();
  std::size_t near = 0;
  for (std::uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
    if (std::popcount(mask) < 6) continue;
    EdgeSet e;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (mask >> i & 1) e.push_back(all[i]);
    }
    const Graph g(n, std::move(e));
    if (!is_connected(g)) continue;
    const double k = kemeny_resistance_float(g);
    ASSERT_GT(k, floor_value - 1e-6);
    if (k < floor_value + 1e-6) {
      ++near;
      EXPECT_EQ(kemeny_resistance(g).kemeny, kemeny_resistance(make_complete(n)).kemeny);
      EXPECT_EQ(g.m(), all.size());
    }
  }
  EXPECT_EQ(near, 1u);
}

}  // namespace
}  // namespace kemeny
