#include <gtest/gtest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "p3iso/generators.hpp"
#include "p3iso/io.hpp"
#include "p3iso/solver.hpp"
#include "p3iso/verify.hpp"

using namespace p3iso;

namespace {

std::set<CatalogId> ids(const OrderRow& r) {
  std::set<CatalogId> out;
  for (const auto& e : r.exceptions) out.insert(e.id);
  return out;
}

}  // namespace

TEST(VerifyOrders, ExceptionsUpToNine) {
  auto rep = verify_orders(1, 9);
  ASSERT_TRUE(rep.passed());
  ASSERT_EQ(rep.rows.size(), 9u);
  EXPECT_EQ(ids(*rep.row(3)), (std::set<CatalogId>{CatalogId::P3, CatalogId::C3}));
  EXPECT_EQ(ids(*rep.row(7)), (std::set<CatalogId>{CatalogId::C7, CatalogId::G71, CatalogId::G72, CatalogId::G73,
                                                   CatalogId::G74, CatalogId::G75, CatalogId::G76}));
  EXPECT_EQ(rep.row(7)->exceptions.size(), 7u);
  for (std::size_t n : {1u, 2u, 4u, 5u, 6u, 8u, 9u}) EXPECT_TRUE(rep.row(n)->exceptions.empty()) << n;
  for (const auto& r : rep.rows) EXPECT_EQ(r.eligible + r.ineligible, r.examined);
  EXPECT_EQ(rep.row(9)->examined, 531u);
}

TEST(VerifyOrders, ParallelReportIsIdentical) {
  VerifyOptions opts;
  opts.jobs = 3;
  auto a = verify_orders(1, 9), b = verify_orders(1, 9, opts);
  EXPECT_EQ(a.to_json(), b.to_json());
}

TEST(VerifyOrders, ConstructiveCheck) {
  VerifyOptions opts;
  opts.check_constructive = true;
  auto rep = verify_orders(8, 9, opts);
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.row(8)->constructive_runs, rep.row(8)->eligible);
  EXPECT_EQ(rep.row(9)->fallbacks, 0u);
}

TEST(VerifyStream, CountsAndEligibility) {
  std::stringstream in;
  in << emit_graph6(cycle(11)) << "\n"
     << emit_graph6(catalog_entry(CatalogId::G11).graph) << "\n"
     << emit_graph6(cycle(6)) << "\n"
     << emit_graph6(complete(5)) << "\n"
     << "garbage!\n"
     << emit_graph6(path(11)) << "\n";
  auto rep = verify_stream(in);
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.malformed_lines, 1u);
  const auto* r11 = rep.row(11);
  ASSERT_NE(r11, nullptr);
  EXPECT_EQ(r11->examined, 3u);
  EXPECT_EQ(ids(*r11), (std::set<CatalogId>{CatalogId::C11, CatalogId::G11}));
  EXPECT_EQ(rep.row(6)->ineligible, 1u);
  EXPECT_EQ(rep.row(5)->ineligible, 1u);
}

TEST(VerifyStream, FlagsNothingOnTheCorpusFixture) {
  std::ifstream in(std::string(P3ISO_TEST_DATA) + "/connected_subcubic_11.g6");
  ASSERT_TRUE(in);
  auto rep = verify_stream(in);
  EXPECT_TRUE(rep.passed());
  ASSERT_EQ(rep.rows.size(), 1u);
  EXPECT_EQ(rep.rows[0].examined, 5524u);
  EXPECT_EQ(ids(rep.rows[0]), (std::set<CatalogId>{CatalogId::C11, CatalogId::G11}));
}

TEST(Report, JsonAndText) {
  auto rep = verify_orders(3, 3);
  auto j = rep.to_json();
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_EQ(j["orders"][0]["exceptions"].size(), 2u);
  const std::string text = rep.to_text();
  EXPECT_NE(text.find("PASS"), std::string::npos);
  EXPECT_NE(text.find("exception n=3 C3 Bw"), std::string::npos);
  rep.rows[0].violations.push_back("x");
  EXPECT_FALSE(rep.passed());
  EXPECT_NE(rep.to_text().find("FAIL"), std::string::npos);
}

TEST(Observations, AllPass) {
  const auto results = check_observations();
  EXPECT_EQ(results.size(), 11u);
  for (const auto& r : results) EXPECT_TRUE(r.passed) << r.name << ": " << r.detail;
}

TEST(Observations, SpecialEdgeAdditions) {
  const Graph& g75 = catalog_entry(CatalogId::G75).graph;
  EXPECT_EQ(isolation_number(g75.with_edge(0, 3), IsolationFamily::p3()).value, 1u);
  EXPECT_EQ(isolation_number(g75.with_edge(0, 4), IsolationFamily::p3()).value, 1u);
  const Graph& g11 = catalog_entry(CatalogId::G11).graph;
  for (Vertex v = 0; v < 11; ++v)
    if (g11.degree(v) == 2) EXPECT_TRUE(is_connected(delete_closed_neighborhood(g11, VertexSet(11, {v})).graph));
}
