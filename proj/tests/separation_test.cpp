#include "kemeny/separation.hpp"

#include "gtest/gtest.h"
#include "kemeny/closed_forms.hpp"
#include "kemeny/enumeration.hpp"
#include "kemeny/errors.hpp"

namespace kemeny {
namespace {

Rational direct(const Graph& g) { return kemeny_resistance(g).kemeny; }

TEST(OneSep, Examples) {
  EXPECT_EQ(kemeny_one_sep(make_path(3), 2, make_path(3), 0), Rational(11, 2));
  EXPECT_EQ(kemeny_one_sep(make_complete(4), 1, make_star(4), 0),
            direct(one_sum(make_complete(4), 1, make_star(4), 0).graph));
  EXPECT_EQ(kemeny_one_sep(make_cycle(5), 3, Graph(1), 0), direct(make_cycle(5)));
  EXPECT_THROW(kemeny_one_sep(Graph(1), 0, Graph(1), 0), GraphError);
}

TEST(OneSep, ExhaustiveSmallPairsAndSymmetry) {
  const auto graphs = connected_graph_classes(4);
  for (const Graph& g1 : graphs) {
    for (const Graph& g2 : graphs) {
      if (g1.m() + g2.m() == 0) continue;
      for (Vertex v1 = 0; v1 < g1.n(); ++v1) {
        for (Vertex v2 = 0; v2 < g2.n(); ++v2) {
          const Rational f = kemeny_one_sep(g1, v1, g2, v2);
          EXPECT_EQ(f, direct(one_sum(g1, v1, g2, v2).graph));
          EXPECT_EQ(f, kemeny_one_sep(g2, v2, g1, v1));
        }
      }
    }
  }
}

TEST(MomentChain, TwoParts) {
  const Graph g1 = make_cycle(4), g2 = make_complete(3);
  const Vertex v0 = 2, v12 = 0;
  const OneSumChain chain({ChainPart{g1, v0, v12}, ChainPart{g2, 1, 1}});
  const GraphProfile p1 = profile(g1), p2 = profile(g2);
  const Rational expected = p1.moment(v0) + p2.moment(1) + Rational(2 * static_cast<long>(g2.m())) * p1.resistance(v12, v0);
  EXPECT_EQ(moment_chain(chain, v0), expected);
  const ChainSum s = chain_sum(chain);
  EXPECT_EQ(moment_chain(chain, v0), moment(s.graph, s.maps[0][v0]).value);
}

TEST(MomentChain, PathOfEdges) {
  for (std::size_t n = 2; n <= 9; ++n) {
    std::vector<ChainPart> parts(n - 1, ChainPart{make_path(2), 0, 1});
    EXPECT_EQ(moment_chain(OneSumChain(parts), 0), Rational(static_cast<long>((n - 1) * (n - 1))));
  }
}

TEST(MomentChain, SinglePart) {
  const OneSumChain chain({ChainPart{make_star(5), 3, 0}});
  EXPECT_EQ(moment_chain(chain, 3), moment(make_star(5), 3).value);
  EXPECT_THROW(moment_chain(chain, 5), GraphError);
}

TEST(KemenyChain, Barbell) {
  for (std::size_t a = 2; a <= 5; ++a) {
    for (std::size_t b = 1; b <= 4; ++b) {
      for (std::size_t c = 1; c <= 4; ++c) {
        const OneSumChain chain({ChainPart{make_complete(b + 1), 0, 0}, ChainPart{make_path(a), 0, a - 1},
                                 ChainPart{make_complete(c + 1), 0, 0}});
        EXPECT_EQ(kemeny_chain(chain), kemeny_barbell(a, b, c));
      }
    }
  }
}

TEST(KemenyChain, PathOfP3) {
  std::vector<ChainPart> parts(4, ChainPart{make_path(3), 0, 2});
  EXPECT_EQ(kemeny_chain(OneSumChain(parts)), Rational(43, 2));
  EXPECT_EQ(direct(chain_sum(OneSumChain(parts)).graph), Rational(43, 2));
}

TEST(KemenyChain, SeparationTerms) {
  const OneSumChain chain({ChainPart{make_path(3), 0, 2}, ChainPart{make_cycle(4), 0, 2}, ChainPart{make_path(2), 0, 1},
                           ChainPart{make_complete(3), 0, 0}});
  const SeparationTerms t = separation_terms(chain);
  EXPECT_EQ(t.parts(), 4u);
  EXPECT_EQ(t.internal_resistance[1], Rational(1));
  EXPECT_EQ(t.cross_resistance(0, 1), Rational(0));
  EXPECT_EQ(t.cross_resistance(0, 3), Rational(2));
  EXPECT_EQ(t.facing_moment(0, 2), t.moment_left[2]);
  EXPECT_EQ(t.facing_moment(3, 2), t.moment_right[2]);
  EXPECT_THROW(t.facing_moment(1, 1), GraphError);
  EXPECT_EQ(kemeny_chain(t), direct(chain_sum(chain).graph));
}

TEST(KemenyChain, RandomChains) {
  Rng rng(3);
  std::uniform_int_distribution<std::size_t> parts(3, 5);
  for (int i = 0; i < 30; ++i) {
    const OneSumChain chain = random_chain(rng, parts(rng), 5);
    const ChainSum s = chain_sum(chain);
    EXPECT_EQ(kemeny_chain(chain), direct(s.graph));
    EXPECT_EQ(moment_chain(chain, chain[0].attach_left), moment(s.graph, s.maps[0][chain[0].attach_left]).value);
  }
}

TEST(StarOfParts, Examples) {
  for (std::size_t k = 1; k <= 6; ++k) {
    std::vector<RootedGraph> parts(k, RootedGraph{make_path(2), 0});
    EXPECT_EQ(kemeny_star_of_parts(parts), Rational(2 * static_cast<long>(k) - 1, 2));
  }
  const std::vector<RootedGraph> two{{make_cycle(4), 1}, {make_star(4), 2}};
  EXPECT_EQ(kemeny_star_of_parts(two), kemeny_one_sep(make_cycle(4), 1, make_star(4), 2));

  const std::vector<RootedGraph> friendship(3, RootedGraph{make_complete(3), 0});
  const Graph f3 = chain_sum(star_of_parts_chain(friendship)).graph;
  EXPECT_EQ(f3.n(), 7u);
  EXPECT_EQ(kemeny_star_of_parts(friendship), direct(f3));
  EXPECT_EQ(kemeny_star_of_parts(friendship), kemeny_chain(star_of_parts_chain(friendship)));
  EXPECT_THROW(kemeny_star_of_parts({}), GraphError);
}

}  // namespace
}  // namespace kemeny
