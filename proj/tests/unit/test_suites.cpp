#include <gtest/gtest.h>

#include "cayleyspec/suites.hpp"

class Suite : public testing::TestWithParam<std::string> {};

TEST_P(Suite, Passes) {
  auto result = cayleyspec::run_suite(GetParam());
  for (const auto& m : result.messages) ADD_FAILURE() << m;
  EXPECT_GT(result.checks, 0u);
  EXPECT_EQ(result.failures, 0u);
}

INSTANTIATE_TEST_SUITE_P(Invariants, Suite, testing::ValuesIn(cayleyspec::suite_names()),
                         [](const testing::TestParamInfo<std::string>& info) { return info.param; });

TEST(Suites, UnknownNameThrows) {
  EXPECT_THROW(cayleyspec::run_suite("missing"), std::invalid_argument);
}
