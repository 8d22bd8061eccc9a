#include <gtest/gtest.h>

#include <random>

#include "p3iso/enumerate.hpp"
#include "p3iso/generators.hpp"
#include "p3iso/patterns.hpp"
#include "support/oracles.hpp"
#include "support/random_graphs.hpp"

using namespace p3iso;

namespace {

bool witness_is_isomorphism(const Graph& g, const Graph& h, const IsoWitness& w) {
  if (w.mapping.size() != h.order() || g.order() != h.order()) return false;
  if (w.image(g.order()).size() != g.order()) return false;
  for (Vertex a = 0; a < h.order(); ++a)
    for (Vertex b = 0; b < h.order(); ++b)
      if (a != b && h.adjacent(a, b) != g.adjacent(w.mapping[a], w.mapping[b])) return false;
  return true;
}

}  // namespace

TEST(IsolationFamily, ParseAndName) {
  EXPECT_EQ(IsolationFamily::parse("p3"), IsolationFamily::p3());
  EXPECT_EQ(IsolationFamily::parse("k1"), IsolationFamily::k1());
  EXPECT_EQ(IsolationFamily::parse("cycle:5"), IsolationFamily::cycle(5));
  EXPECT_EQ(IsolationFamily::parse("cycle:5").name(), "cycle:5");
  EXPECT_THROW(IsolationFamily::parse("cycle:2"), std::invalid_argument);
  EXPECT_THROW(IsolationFamily::parse("p4"), std::invalid_argument);
}

TEST(ContainsCopy, Examples) {
  EXPECT_FALSE(contains_copy(path(2), IsolationFamily::p3()));
  auto w = contains_copy(cycle(5), IsolationFamily::p3());
  ASSERT_TRUE(w);
  EXPECT_EQ(w->mapping, (std::vector<Vertex>{1, 0, 4}));
  auto rest = delete_closed_neighborhood(cycle(6), VertexSet(6, {0}));
  EXPECT_TRUE(contains_copy(rest.graph, IsolationFamily::p3()));
}

TEST(ContainsCopy, P3WitnessCenterRule) {
  // Star K1,3 plus a pendant path: vertex 1 has the max degree.
  Graph g(6, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {4, 5}});
  auto w = find_copy_within(g, IsolationFamily::p3(), g.vertices());
  ASSERT_TRUE(w);
  EXPECT_EQ(w->mapping, (std::vector<Vertex>{0, 1, 2}));
  auto w2 = find_copy_within(g, IsolationFamily::p3(), VertexSet(6, {3, 4, 5}));
  ASSERT_TRUE(w2);
  EXPECT_EQ(w2->mapping, (std::vector<Vertex>{3, 4, 5}));
}

TEST(ContainsCopy, P3IffMaxDegreeAtLeastTwo) {
  EnumSpec spec;
  spec.max_n = 8;
  spec.connected_only = false;
  enumerate_connected_subcubic(spec, [](const Graph& g) {
    ASSERT_EQ(contains_copy(g, IsolationFamily::p3()).has_value(), g.max_degree() >= 2);
  });
}

TEST(ContainsCopy, OtherFamilies) {
  EXPECT_TRUE(contains_copy(Graph(1, std::vector<Edge>{}), IsolationFamily::k1()));
  EXPECT_FALSE(contains_copy(Graph(3, std::vector<Edge>{}), IsolationFamily::k2()));
  EXPECT_TRUE(contains_copy(path(2), IsolationFamily::k2()));
  EXPECT_FALSE(contains_copy(cycle(4), IsolationFamily::k3()));
  EXPECT_TRUE(contains_copy(complete(4), IsolationFamily::k3()));
  EXPECT_TRUE(contains_copy(complete(4), IsolationFamily::cycle(4)));
  EXPECT_FALSE(contains_copy(cycle(6), IsolationFamily::cycle(5)));
  EXPECT_TRUE(contains_copy(cycle(6), IsolationFamily::any_cycle()));
  EXPECT_FALSE(contains_copy(path(9), IsolationFamily::any_cycle()));
  auto fam = IsolationFamily::finite({path(4)});
  EXPECT_FALSE(contains_copy(path(3), fam));
  EXPECT_TRUE(contains_copy(cycle(4), fam));
}

TEST(InducedCycle, Examples) {
  auto w = has_induced_cycle(cycle(6), 6);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->mapping.front(), 0u);
  EXPECT_LT(w->mapping[1], w->mapping.back());
  EXPECT_FALSE(has_induced_cycle(catalog_entry(CatalogId::G15).graph, 6));
  EXPECT_FALSE(has_induced_cycle(complete(4), 4));
  EXPECT_TRUE(has_induced_cycle(complete(4), 3));
}

TEST(InducedCycle, AgreesWithSubsetScanOnSmallGraphs) {
  const auto levels = oracle::all_graphs_up_to(7);
  for (std::size_t n = 3; n <= 7; ++n)
    for (const auto& g : levels[n]) {
      auto m = oracle::matrix(g);
      for (std::size_t k = 3; k <= n; ++k) ASSERT_EQ(has_induced_cycle(g, k).has_value(), oracle::has_induced_cycle(m, k));
    }
}

TEST(InducedCycle, AgreesWithSubsetScanOnSubcubicUpToNine) {
  EnumSpec spec;
  spec.min_n = 6;
  spec.max_n = 9;
  enumerate_connected_subcubic(spec, [](const Graph& g) {
    auto m = oracle::matrix(g);
    for (std::size_t k : {4u, 5u, 6u, 7u}) ASSERT_EQ(has_induced_cycle(g, k).has_value(), oracle::has_induced_cycle(m, k));
  });
}

TEST(InducedCycle, RandomGeneralGraphsUpToNine) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 300; ++t) {
    Graph g = sample::random_graph(6 + rng() % 4, 0.35, rng);
    auto m = oracle::matrix(g);
    for (std::size_t k = 3; k <= g.order(); ++k) ASSERT_EQ(has_induced_cycle(g, k).has_value(), oracle::has_induced_cycle(m, k));
  }
}

TEST(Isomorphism, Examples) {
  std::mt19937_64 rng(1);
  Graph c7 = cycle(7);
  for (int t = 0; t < 20; ++t) {
    Graph h = sample::random_relabel(c7, rng);
    auto w = is_isomorphic(c7, h);
    ASSERT_TRUE(w);
    EXPECT_TRUE(witness_is_isomorphism(c7, h, *w));
  }
  const Graph& g74 = catalog_entry(CatalogId::G74).graph;
  const Graph& g76 = catalog_entry(CatalogId::G76).graph;
  EXPECT_EQ(g74.edge_count(), 10u);
  EXPECT_EQ(g76.edge_count(), 10u);
  EXPECT_FALSE(is_isomorphic(g74, g76));
  EXPECT_FALSE(is_isomorphic(path(3), complete(3)));
}

TEST(Isomorphism, EquivalenceOnRandomSample) {
  std::mt19937_64 rng(99);
  std::vector<Graph> graphs;
  for (int t = 0; t < 200; ++t) {
    Graph base = sample::random_eligible_subcubic(4 + rng() % 7, rng, rng() % 6);
    graphs.push_back(rng() % 2 ? sample::random_relabel(base, rng) : base);
  }
  for (const auto& g : graphs) {
    auto w = is_isomorphic(g, g);
    ASSERT_TRUE(w);
    EXPECT_TRUE(witness_is_isomorphism(g, g, *w));
  }
  for (std::size_t i = 0; i < graphs.size(); ++i)
    for (std::size_t j = 0; j < graphs.size(); ++j) {
      if (graphs[i].order() != graphs[j].order()) continue;
      auto ij = is_isomorphic(graphs[i], graphs[j]);
      auto ji = is_isomorphic(graphs[j], graphs[i]);
      ASSERT_EQ(ij.has_value(), ji.has_value());
      ASSERT_EQ(ij.has_value(), canonical_code(graphs[i]) == canonical_code(graphs[j]));
      if (ij) ASSERT_TRUE(witness_is_isomorphism(graphs[i], graphs[j], *ij));
    }
  // Transitivity through composed witnesses.
  for (int t = 0; t < 50; ++t) {
    const Graph& a = graphs[rng() % graphs.size()];
    Graph b = sample::random_relabel(a, rng), c = sample::random_relabel(b, rng);
    auto ab = is_isomorphic(a, b), bc = is_isomorphic(b, c);
    ASSERT_TRUE(ab && bc);
    IsoWitness ac;
    ac.mapping.resize(c.order());
    for (Vertex v = 0; v < c.order(); ++v) ac.mapping[v] = ab->mapping[bc->mapping[v]];
    EXPECT_TRUE(witness_is_isomorphism(a, c, ac));
  }
}

TEST(Isomorphism, AutomorphismCountsOfSmallGraphs) {
  auto count = [](const Graph& g) {
    std::size_t c = 0;
    for_each_isomorphism(g, g, [&](const IsoWitness&) {
      ++c;
      return true;
    });
    return c;
  };
  EXPECT_EQ(count(cycle(7)), 14u);
  EXPECT_EQ(count(complete(4)), 24u);
  EXPECT_EQ(count(path(5)), 2u);
  EXPECT_EQ(count(catalog_entry(CatalogId::C11).graph), 22u);
}

TEST(Embedding, SubgraphAndInduced) {
  auto w = find_embedding(cycle(4), complete(4), complete(4).vertices(), false);
  ASSERT_TRUE(w);
  EXPECT_FALSE(find_embedding(cycle(4), complete(4), complete(4).vertices(), true));
  EXPECT_TRUE(find_embedding(path(3), cycle(5), VertexSet(5, {0, 1, 2}), true));
  EXPECT_FALSE(find_embedding(path(3), cycle(5), VertexSet(5, {0, 1, 3}), false));
}

TEST(CatalogMatch, Examples) {
  auto m = catalog_match(cycle(11));
  ASSERT_TRUE(m);
  EXPECT_EQ(m->id, CatalogId::C11);
  EXPECT_FALSE(catalog_match(construction_B(8, path(3))));
  EXPECT_FALSE(catalog_match(cycle(15)));
  std::mt19937_64 rng(4);
  for (const auto& e : catalog()) {
    Graph h = sample::random_relabel(e.graph, rng);
    auto r = catalog_match(h);
    ASSERT_TRUE(r) << to_string(e.id);
    EXPECT_EQ(r->id, e.id);
    EXPECT_TRUE(witness_is_isomorphism(h, e.graph, r->witness));
  }
}

TEST(CatalogMatch, ExactlyTheCatalogAmongSmallEligibleGraphs) {
  EnumSpec spec;
  spec.max_n = 8;
  spec.filter = EnumFilter::NoInducedC6;
  std::vector<CatalogId> found;
  enumerate_connected_subcubic(spec, [&](const Graph& g) {
    if (auto m = catalog_match(g)) {
      EXPECT_TRUE(g.order() == 3 || g.order() == 7);
      found.push_back(m->id);
    }
  });
  std::sort(found.begin(), found.end());
  EXPECT_EQ(found, (std::vector<CatalogId>{CatalogId::P3, CatalogId::C3, CatalogId::C7, CatalogId::G71, CatalogId::G72,
                                           CatalogId::G73, CatalogId::G74, CatalogId::G75, CatalogId::G76}));
}
