#include <gtest/gtest.h>

#include "cayley/oracle.hpp"
#include "cayley/spectra.hpp"

using cayley::ConnectionSet;
using cayley::Permutation;

namespace {

ConnectionSet three_cycles_of_s3() {
  auto c = Permutation::from_cycles(3, {{1, 2, 3}});
  return ConnectionSet(3, {c, c.inverse()}, "3-cycles");
}

}  // namespace

TEST(Oracle, ThreeCyclesOfS3GiveTwoTriangles) {
  auto g = cayley::build_graph(three_cycles_of_s3());
  EXPECT_EQ(g.vertex_count(), 6u);
  auto s = cayley::structure_check(g);
  EXPECT_EQ(s.components, 2);
  EXPECT_FALSE(s.bipartite);
  auto spec = cayley::brute_spectrum(g);
  ASSERT_EQ(spec.entries.size(), 2u);
  EXPECT_EQ(spec.multiplicity_of(2, 1e-9), 2u);
  EXPECT_EQ(spec.multiplicity_of(-1, 1e-9), 4u);
}

TEST(Oracle, FourCyclesMovingOneConnected) {
  auto g = cayley::build_graph(cayley::enum_cycles(5, 4, 1));
  EXPECT_EQ(g.vertex_count(), 120u);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) ASSERT_EQ(g.neighbours(v).size(), 24u);
  EXPECT_EQ(cayley::structure_check(g).components, 1);
}

TEST(Oracle, FiveCyclesOfS5SplitIntoCosets) {
  auto g = cayley::build_graph(cayley::enum_cycles(5, 5, 1));
  EXPECT_EQ(cayley::structure_check(g).components, 2);
  // Every edge joins two permutations of the same sign.
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    for (auto w : g.neighbours(v)) EXPECT_EQ(g.vertices[v].sign(), g.vertices[w].sign());
  }
}

TEST(Oracle, BruteMatchesAssembly) {
  for (auto [n, k, r] : {std::tuple{5, 4, 1}, {5, 3, 2}, {6, 5, 2}}) {
    auto h = cayley::enum_cycles(n, k, r);
    auto brute = cayley::brute_spectrum(cayley::build_graph(h));
    auto cmp = cayley::compare_spectra(brute, cayley::assemble_graph_spectrum(h), 1e-6);
    EXPECT_TRUE(cmp.equal) << n << k << r;
  }
}

TEST(Oracle, TopIndexSecondEigenvalue) {
  auto brute = cayley::brute_spectrum(cayley::build_graph(cayley::enum_cycles(5, 4, 3)));
  EXPECT_EQ(brute.largest(), 12);
  EXPECT_EQ(brute.at_level(2), 6);
}

TEST(Oracle, StructureOfWorkedGraphs) {
  EXPECT_EQ(cayley::structure_check(cayley::build_graph(cayley::enum_cycles(6, 5, 1))).components, 2);
  auto s7 = cayley::structure_check(cayley::build_graph(cayley::enum_cycles(7, 6, 2), 2));
  EXPECT_EQ(s7.components, 1);
  EXPECT_TRUE(s7.bipartite);
  auto s5 = cayley::structure_check(cayley::build_graph(cayley::enum_cycles(5, 2, 1)));
  EXPECT_EQ(s5.components, 1);
  EXPECT_TRUE(s5.bipartite);
}

TEST(Oracle, EquitableQuotientIsQuotientMatrix) {
  for (auto [n, k, r] : {std::tuple{5, 4, 1}, {6, 5, 2}, {6, 3, 1}}) {
    auto h = cayley::enum_cycles(n, k, r);
    auto g = cayley::build_graph(h);
    auto b = cayley::quotient_matrix(h);
    for (int i = 1; i <= n; ++i) EXPECT_EQ(cayley::equitable_quotient(g, i), b);
  }
}

TEST(Oracle, EdgeListCountsEachEdgeOnce) {
  auto g = cayley::build_graph(cayley::enum_cycles(4, 3, 1));
  auto text = cayley::export_edge_list(g);
  auto lines = static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
  EXPECT_EQ(lines, g.vertex_count() * g.degree / 2);
}

TEST(Oracle, GraphBuildIsWorkerIndependent) {
  auto h = cayley::enum_cycles(6, 4, 2);
  auto a = cayley::build_graph(h, 1);
  auto b = cayley::build_graph(h, 3);
  EXPECT_EQ(a.offsets, b.offsets);
  EXPECT_EQ(a.targets, b.targets);
}
