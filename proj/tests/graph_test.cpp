#include "kemeny/graph.hpp"

#include <algorithm>

#include "gtest/gtest.h"
#include "kemeny/enumeration.hpp"
#include "kemeny/errors.hpp"
#include "kemeny/kemeny.hpp"

namespace kemeny {
namespace {

bool removal_disconnects(const Graph& g, Vertex x) {
  EdgeSet keep;
  for (const Edge& e : g.edges()) {
    if (e.u == x || e.v == x) continue;
    keep.emplace_back(e.u > x ? e.u - 1 : e.u, e.v > x ? e.v - 1 : e.v);
  }
  return !is_connected(Graph(g.n() - 1, keep));
}

TEST(Graph, RejectsInvalidInput) {
  EXPECT_THROW(Graph(0), GraphError);
  EXPECT_THROW(Graph(3, {{1, 1}}), GraphError);
  EXPECT_THROW(Graph(3, {{0, 3}}), GraphError);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), GraphError);
  EXPECT_THROW(Graph(2, {{0, 1}}, std::vector<Rational>{Rational(0)}), GraphError);
  EXPECT_THROW(Graph(2, {{0, 1}}, std::vector<Rational>{Rational(-1, 2)}), GraphError);
}

TEST(Graph, EdgesAreCanonical) {
  const Graph g(3, {{2, 1}, {1, 0}});
  ASSERT_EQ(g.m(), 2u);
  EXPECT_EQ(g.edges()[0], Edge(0, 1));
  EXPECT_EQ(g.edges()[1], Edge(1, 2));
  EXPECT_TRUE(g.has_edge(2, 1));
  EXPECT_FALSE(g.has_edge(0, 2));
  EXPECT_EQ(g.non_edges(), EdgeSet({{0, 2}}));
}

TEST(Graph, Families) {
  EXPECT_EQ(make_path(3).edges(), EdgeSet({{0, 1}, {1, 2}}));
  EXPECT_EQ(make_star(4).degree(0), 3u);
  EXPECT_EQ(make_complete(5).m(), 10u);
  EXPECT_EQ(make_cycle(4).m(), 4u);
  EXPECT_THROW(make_cycle(2), GraphError);
  EXPECT_THROW(make_path(0), GraphError);
  EXPECT_EQ(make_path(1).m(), 0u);
}

TEST(Graph, Barbell) {
  const Graph b = make_barbell(1, 6, 4, 5);
  EXPECT_EQ(b.n(), 15u);
  EXPECT_EQ(b.m(), 10u + 15u + 5u);
  EXPECT_TRUE(is_connected(b));
  EXPECT_EQ(make_barbell(1, 2, 1, 1), make_path(4));
  EXPECT_THROW(make_barbell(1, 1, 2, 2), GraphError);
  EXPECT_THROW(make_barbell(0, 2, 2, 2), GraphError);
  for (std::size_t a = 2; a <= 6; ++a) {
    for (std::size_t bb = 1; bb <= 5; ++bb) {
      for (std::size_t c = 1; c <= 5; ++c) {
        const Graph g = make_barbell(1, a, bb, c);
        EXPECT_EQ(g.n(), a + bb + c);
        EXPECT_EQ(g.m(), (bb + 1) * bb / 2 + (c + 1) * c / 2 + a - 1);
      }
    }
  }
}

TEST(Graph, BarbellGeneralK) {
  const Graph g = make_barbell(3, 4, 2, 3);
  EXPECT_EQ(g.n(), 3u * 4u + 2u + 3u);
  EXPECT_TRUE(is_connected(g));
}

TEST(Graph, CutVertices) {
  EXPECT_EQ(cut_vertices(make_path(3)), std::vector<Vertex>({1}));
  EXPECT_TRUE(cut_vertices(make_complete(4)).empty());
  EXPECT_TRUE(cut_vertices(make_cycle(5)).empty());

  const Graph b = make_barbell(1, 6, 4, 5);
  const auto cuts = cut_vertices(b);
  std::vector<Vertex> brute;
  for (Vertex x = 0; x < b.n(); ++x) {
    if (removal_disconnects(b, x)) brute.push_back(x);
  }
  EXPECT_EQ(cuts, brute);
}

TEST(Graph, BarbellHasTwoCutVerticesWhenCliquesAreBig) {
  for (std::size_t a = 3; a <= 5; ++a) {
    for (std::size_t bb = 2; bb <= 4; ++bb) {
      for (std::size_t c = 2; c <= 4; ++c) {
        // the path interior vertices are cut vertices too; count the junctions
        const Graph g = make_barbell(1, a, bb, c);
        std::size_t junctions = 0;
        for (Vertex x : cut_vertices(g)) junctions += g.degree(x) > 2 ? 1 : 0;
        EXPECT_EQ(junctions, 2u);
      }
    }
  }
}

TEST(Graph, CutVerticesMatchBruteForceOnCorpus) {
  for (const Graph& g : connected_corpus(5).graphs) {
    if (g.n() < 3) continue;
    std::vector<Vertex> brute;
    for (Vertex x = 0; x < g.n(); ++x) {
      if (removal_disconnects(g, x)) brute.push_back(x);
    }
    EXPECT_EQ(cut_vertices(g), brute);
  }
}

TEST(Graph, Connectivity) {
  EXPECT_TRUE(is_connected(Graph(1)));
  EXPECT_FALSE(is_connected(Graph(2)));
  EXPECT_FALSE(is_connected(Graph(4, {{0, 1}, {2, 3}})));
  EXPECT_THROW(require_connected(Graph(4, {{0, 1}, {2, 3}})), DisconnectedGraph);
}

TEST(Graph, AddRemoveEdges) {
  EXPECT_EQ(add_edges(make_path(3), {{0, 2}}), make_complete(3));
  EXPECT_EQ(add_edges(make_path(7), {{0, 2}, {4, 6}}).m(), 8u);
  EXPECT_EQ(add_edges(make_path(4), {}), make_path(4));
  EXPECT_THROW(add_edges(make_path(3), {{0, 1}}), GraphError);
  EXPECT_THROW(add_edges(make_path(3), {{1, 1}}), GraphError);
  const EdgeSet extra{{0, 3}, {1, 3}};
  EXPECT_EQ(remove_edges(add_edges(make_path(4), extra), extra), make_path(4));
}

TEST(OneSum, Paths) {
  const OneSum s = one_sum(make_path(2), 1, make_path(2), 0);
  EXPECT_EQ(s.graph.n(), 3u);
  EXPECT_EQ(s.graph.m(), 2u);
  EXPECT_EQ(s.merged, 0u);
  EXPECT_EQ(s.right_map, std::vector<Vertex>({0, 1}));
  EXPECT_EQ(s.left_map, std::vector<Vertex>({2, 0}));
}

TEST(OneSum, Bowtie) {
  const OneSum s = one_sum(make_complete(3), 0, make_complete(3), 0);
  EXPECT_EQ(s.graph.n(), 5u);
  EXPECT_EQ(s.graph.degree(s.merged), 4u);
  EXPECT_EQ(cut_vertices(s.graph), std::vector<Vertex>({0}));
}

TEST(OneSum, EdgeCountAdditive) {
  EXPECT_EQ(one_sum(make_complete(4), 2, make_path(5), 0).graph.m(), 10u);
  const auto graphs = connected_graph_classes(4);
  for (const Graph& g1 : graphs) {
    for (const Graph& g2 : graphs) {
      for (Vertex v1 = 0; v1 < g1.n(); ++v1) {
        for (Vertex v2 = 0; v2 < g2.n(); ++v2) {
          const OneSum s = one_sum(g1, v1, g2, v2);
          EXPECT_EQ(s.graph.n(), g1.n() + g2.n() - 1);
          EXPECT_EQ(s.graph.m(), g1.m() + g2.m());
          EXPECT_EQ(s.graph.degree(s.merged), g1.degree(v1) + g2.degree(v2));
          EXPECT_TRUE(is_connected(s.graph));
          for (const Edge& e : g1.edges()) EXPECT_TRUE(s.graph.has_edge(s.left_map[e.u], s.left_map[e.v]));
          for (const Edge& e : g2.edges()) EXPECT_TRUE(s.graph.has_edge(s.right_map[e.u], s.right_map[e.v]));
        }
      }
    }
  }
}

TEST(OneSum, RejectsBadInput) {
  EXPECT_THROW(one_sum(make_path(2), 2, make_path(2), 0), GraphError);
  EXPECT_THROW(one_sum(Graph(2), 0, make_path(2), 0), DisconnectedGraph);
}

TEST(ChainSum, Examples) {
  const ChainSum single = chain_sum(OneSumChain({ChainPart{make_cycle(4), 0, 2}}));
  EXPECT_EQ(single.graph, make_cycle(4));

  const OneSumChain three({ChainPart{make_path(2), 0, 1}, ChainPart{make_path(2), 0, 1}, ChainPart{make_path(2), 0, 1}});
  const ChainSum p4 = chain_sum(three);
  EXPECT_EQ(p4.graph.n(), 4u);
  EXPECT_EQ(p4.graph.m(), 3u);
  EXPECT_TRUE(is_connected(p4.graph));
  EXPECT_EQ(cut_vertices(p4.graph).size(), 2u);

  const OneSumChain two({ChainPart{make_complete(3), 0, 1}, ChainPart{make_star(4), 0, 0}});
  const OneSum direct = one_sum(make_star(4), 0, make_complete(3), 1);
  EXPECT_EQ(chain_sum(two).graph, direct.graph);
}

TEST(ChainSum, BarbellChain) {
  // K_{b+1}, P_a (attached at both ends), K_{c+1}
  const std::size_t a = 4, b = 2, c = 3;
  const OneSumChain chain({ChainPart{make_complete(b + 1), 0, 0}, ChainPart{make_path(a), 0, a - 1},
                           ChainPart{make_complete(c + 1), 0, 0}});
  const ChainSum s = chain_sum(chain);
  const Graph ref = make_barbell(1, a, b, c);
  EXPECT_EQ(s.graph.n(), ref.n());
  EXPECT_EQ(s.graph.m(), ref.m());
  EXPECT_EQ(canonical_key(s.graph), canonical_key(ref));
  EXPECT_EQ(kemeny_resistance(s.graph).kemeny, kemeny_resistance(ref).kemeny);
}

TEST(ChainSum, RejectsBadChains) {
  EXPECT_THROW(OneSumChain(std::vector<ChainPart>{}), GraphError);
  EXPECT_THROW(OneSumChain({ChainPart{make_path(2), 0, 2}}), GraphError);
  EXPECT_THROW(OneSumChain({ChainPart{Graph(2), 0, 1}}), DisconnectedGraph);
}

}  // namespace
}  // namespace kemeny
