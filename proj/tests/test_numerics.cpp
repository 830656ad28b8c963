#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "olb/error.hpp"
#include "olb/numerics.hpp"

using namespace olb;

TEST(Numerics, SolveBracketed) {
  const num::Root r = num::solve_bracketed([](double x) { return num::Jet{x * x - 2.0, 2.0 * x}; }, 0.0, 2.0);
  EXPECT_NEAR(r.x, std::sqrt(2.0), 1e-12);
  const num::Root s = num::solve_bracketed([](double x) { return std::cos(x) - x; }, 0.0, 1.0);
  EXPECT_NEAR(std::cos(s.x), s.x, 1e-12);
  try {
    num::solve_bracketed([](double x) { return x * x + 1.0; }, -1.0, 1.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoRoot);
  }
}

TEST(Numerics, ScanAndMaximize) {
  const auto br = num::scan_brackets([](double x) { return std::sin(x); }, 0.5, 10.0, 200);
  ASSERT_EQ(br.size(), 3u);
  EXPECT_LE(br[0].first, M_PI);
  EXPECT_GE(br[0].second, M_PI);
  const auto [x, v] = num::maximize([](double t) { return -(t - 0.3) * (t - 0.3) + 1.0; }, -1.0, 2.0);
  EXPECT_NEAR(x, 0.3, 1e-7);
  EXPECT_NEAR(v, 1.0, 1e-14);
}

TEST(Numerics, Integrate) {
  EXPECT_NEAR(num::integrate([](double x) { return std::sin(x); }, 0.0, M_PI), 2.0, 1e-13);
  EXPECT_NEAR(num::integrate([](double x) { return std::exp(x); }, 0.0, 1.0), std::exp(1.0) - 1.0, 1e-13);
}

TEST(Numerics, LinearFit) {
  const std::vector<double> x{1, 2, 3, 4}, y{5, 7, 9, 11};
  const auto [slope, intercept] = num::linear_fit(x, y);
  EXPECT_NEAR(slope, 2.0, 1e-14);
  EXPECT_NEAR(intercept, 3.0, 1e-13);
}

TEST(Numerics, ParallelMapKeepsOrder) {
  const auto v = num::parallel_map<std::size_t>(1000, [](std::size_t i) { return i * i; });
  ASSERT_EQ(v.size(), 1000u);
  for (std::size_t i = 0; i < v.size(); ++i) EXPECT_EQ(v[i], i * i);
  EXPECT_GE(num::worker_count(), 1u);
}
