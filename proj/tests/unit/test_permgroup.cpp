#include <gtest/gtest.h>

#include <set>

#include "cayley/errors.hpp"
#include "cayley/permgroup.hpp"
#include "support/oracles.hpp"

using cayley::ConnectionSet;
using cayley::Partition;
using cayley::Permutation;

namespace {

std::set<oracle::Line> as_lines(const ConnectionSet& h) {
  std::set<oracle::Line> out;
  for (const auto& p : h) out.insert(p.one_line());
  return out;
}

}  // namespace

TEST(Permutation, ComposeAppliesRightFactorFirst) {
  auto a = Permutation::transposition(3, 1, 2);
  auto b = Permutation::transposition(3, 2, 3);
  auto ab = cayley::compose(a, b);
  // a(b(x)) evaluated by hand: 1->1->2, 2->3->3, 3->2->1.
  EXPECT_EQ(ab(1), 2);
  EXPECT_EQ(ab(2), 3);
  EXPECT_EQ(ab(3), 1);
  EXPECT_EQ(ab.cycle_notation(), "(1 2 3)");
}

TEST(Permutation, ComposeMatchesPointwiseDefinitionEverywhere) {
  auto group = cayley::all_permutations(4);
  for (const auto& a : group) {
    for (const auto& b : group) {
      auto ab = a * b;
      for (int x = 1; x <= 4; ++x) EXPECT_EQ(ab(x), a(b(x)));
    }
  }
}

TEST(Permutation, InverseAndIdentity) {
  for (const auto& p : cayley::all_permutations(5)) {
    EXPECT_TRUE((p * p.inverse()).is_identity());
    EXPECT_EQ(p * Permutation::identity(5), p);
  }
}

TEST(Permutation, RankRoundTrips) {
  auto group = cayley::all_permutations(5);
  ASSERT_EQ(group.size(), 120u);
  for (std::size_t i = 0; i < group.size(); ++i) {
    EXPECT_EQ(group[i].rank(), i);
    EXPECT_EQ(cayley::unrank_permutation(5, i), group[i]);
  }
}

TEST(Permutation, CycleTypeOfIdentityAndFullCycle) {
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(cayley::cycle_type(Permutation::identity(n)), Partition::column(n));
    std::vector<int> cycle(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) cycle[static_cast<std::size_t>(i)] = i + 1;
    EXPECT_EQ(cayley::cycle_type(Permutation::from_cycles(n, {cycle})), Partition::row(n));
  }
}

TEST(Permutation, CycleTypeMatchesOracle) {
  for (const auto& p : cayley::all_permutations(6)) {
    EXPECT_EQ(cayley::cycle_type(p).vec(), oracle::cycle_lengths(p.one_line()));
  }
}

TEST(Permutation, SignIsParityOfCycleType) {
  for (const auto& p : cayley::all_permutations(5)) {
    int even_cycles = 0;
    for (int len : oracle::cycle_lengths(p.one_line())) even_cycles += (len % 2 == 0);
    EXPECT_EQ(p.sign(), even_cycles % 2 == 0 ? 1 : -1);
  }
}

TEST(ConnectionSet, RejectsIdentityAndMissingInverses) {
  auto three = Permutation::from_cycles(4, {{1, 2, 3}});
  EXPECT_THROW(ConnectionSet(4, {Permutation::identity(4)}, "id"), cayley::ParameterError);
  EXPECT_THROW(ConnectionSet(4, {three}, "no-inverse"), cayley::ParameterError);
  EXPECT_NO_THROW(ConnectionSet(4, {three, three.inverse()}, "ok"));
}

TEST(EnumCycles, FullFourCycleClassOfS5) {
  auto h = cayley::enum_cycles(5, 4, 0);
  EXPECT_EQ(h.size(), 30u);
  EXPECT_EQ(as_lines(h), oracle::filter_cycles(5, 4, 0));
}

TEST(EnumCycles, FourCyclesOfS5MovingOne) {
  auto h = cayley::enum_cycles(5, 4, 1);
  EXPECT_EQ(h.size(), 24u);
  EXPECT_EQ(as_lines(h), oracle::filter_cycles(5, 4, 1));
}

TEST(EnumCycles, FiveCyclesOfS6MovingOneAndTwo) {
  auto h = cayley::enum_cycles(6, 5, 2);
  EXPECT_EQ(h.size(), 96u);
  EXPECT_EQ(as_lines(h), oracle::filter_cycles(6, 5, 2));
}

TEST(EnumCycles, SizeFormulaAndMembershipForAllSmallParameters) {
  for (int n = 3; n <= 7; ++n) {
    for (int k = 2; k <= n; ++k) {
      for (int r = 0; r < k; ++r) {
        auto h = cayley::enum_cycles(n, k, r);
        EXPECT_EQ(static_cast<std::uint64_t>(h.size()),
                  oracle::binomial(n - r, k - r) * oracle::factorial(k - 1));
        EXPECT_EQ(cayley::cycle_set_size(n, k, r), cayley::Integer(h.size()));
        EXPECT_EQ(as_lines(h), oracle::filter_cycles(n, k, r)) << n << "," << k << "," << r;
      }
    }
  }
}

TEST(EnumCycles, NMinusOneCycleSizeIsLinearInN) {
  for (int n = 4; n <= 8; ++n) {
    EXPECT_EQ(cayley::enum_cycles(n, n - 1, 1).size(),
              static_cast<std::size_t>(n - 1) * oracle::factorial(n - 2));
  }
}

TEST(EnumCycles, RejectsBadParameters) {
  EXPECT_THROW(cayley::enum_cycles(5, 6, 1), cayley::ParameterError);
  EXPECT_THROW(cayley::enum_cycles(5, 4, 4), cayley::ParameterError);
  EXPECT_THROW(cayley::enum_cycles(9, 4, 1), cayley::CapExceeded);
}

TEST(Slices, StabilizerSliceFixesThePoint) {
  auto h = cayley::enum_cycles(6, 5, 0);
  for (int j = 1; j <= 6; ++j) {
    auto slice = cayley::stabilizer_slice(h, j);
    EXPECT_EQ(slice.size(), 24u);
    for (const auto& p : slice) EXPECT_TRUE(p.fixes(j));
  }
}

TEST(Slices, RelabelledSliceIsFullClassOneDegreeDown) {
  auto h = cayley::enum_cycles(6, 5, 1);
  for (int j = 2; j <= 6; ++j) {
    auto relabelled = cayley::relabel_to_subgroup(cayley::stabilizer_slice(h, j), j);
    EXPECT_EQ(relabelled.degree(), 5);
    EXPECT_EQ(as_lines(relabelled), oracle::filter_cycles(5, 5, 0));
  }
}

TEST(Slices, ClassSplitsIntoMovingAndFixingR) {
  // C(n,k;r) minus C(n,k;r+1) is the part fixing r+1, which is C(n-1,k;r)
  // sitting inside S_{n-1} after relabelling.
  for (int n = 5; n <= 7; ++n) {
    for (int k = 3; k <= n - 1; ++k) {
      for (int r = 1; r <= k - 2; ++r) {
        auto whole = cayley::enum_cycles(n, k, r);
        auto rest = cayley::set_difference(whole, cayley::enum_cycles(n, k, r + 1), "rest");
        auto fixing = cayley::stabilizer_slice(whole, r + 1);
        EXPECT_EQ(as_lines(rest), as_lines(fixing));
        auto moved = cayley::conjugate_set(rest, Permutation::transposition(n, r + 1, n), "moved");
        for (const auto& p : moved) EXPECT_TRUE(p.fixes(n));
        EXPECT_EQ(moved.size(), oracle::filter_cycles(n - 1, k, r).size());
      }
    }
  }
}

TEST(Quotient, RowsSumToDegree) {
  auto h = cayley::enum_cycles(6, 5, 2);
  auto b = cayley::quotient_matrix(h);
  ASSERT_EQ(b.rows(), 6);
  for (int a = 0; a < 6; ++a) EXPECT_EQ(b.row(a).sum(), 96);
  EXPECT_EQ(b, b.transpose());
}

TEST(Quotient, EntriesCountImages) {
  auto h = cayley::enum_cycles(5, 4, 1);
  auto b = cayley::quotient_matrix(h);
  for (int a = 1; a <= 5; ++a) {
    for (int c = 1; c <= 5; ++c) {
      std::int64_t count = 0;
      for (const auto& line : oracle::filter_cycles(5, 4, 1)) count += line[static_cast<std::size_t>(a - 1)] == c;
      EXPECT_EQ(b(a - 1, c - 1), count);
    }
  }
}

TEST(Export, OneLinePerElement) {
  auto h = cayley::enum_cycles(4, 3, 1);
  auto text = cayley::export_one_line(h);
  EXPECT_EQ(static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')), h.size());
}
