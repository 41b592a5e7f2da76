#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "scramblegraph/errors.hpp"
#include "scramblegraph/mds.hpp"

namespace sg = scramblegraph;

namespace {

std::vector<std::vector<double>> planar(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> x(0.0, 10.0), y(0.0, 3.0);
  std::vector<std::vector<double>> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back({x(rng), y(rng)});
  return pts;
}

double max_relative_error(const sg::DistanceMatrix& d, const sg::Projection2D& p) {
  double worst = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      const double dx = p.coordinates[i][0] - p.coordinates[j][0];
      const double dy = p.coordinates[i][1] - p.coordinates[j][1];
      const double got = std::hypot(dx, dy);
      worst = std::max(worst, std::abs(got - d(i, j)) / std::max(d(i, j), 1e-12));
    }
  }
  return worst;
}

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST(ClassicalMds, SinglePoint) {
  const auto p = sg::classical_mds(sg::DistanceMatrix(1));
  ASSERT_EQ(p.coordinates.size(), 1u);
  EXPECT_EQ(p.coordinates[0][0], 0.0);
  EXPECT_EQ(p.coordinates[0][1], 0.0);
  EXPECT_EQ(p.stress, 0.0);
}

TEST(ClassicalMds, TwoPoints) {
  sg::DistanceMatrix d(2);
  d.set(0, 1, 5.0);
  const auto p = sg::classical_mds(d);
  EXPECT_NEAR(std::abs(p.coordinates[0][0]), 2.5, 1e-9);
  EXPECT_NEAR(p.coordinates[0][0], -p.coordinates[1][0], 1e-9);
  EXPECT_NEAR(std::max(p.coordinates[0][0], p.coordinates[1][0]), 2.5, 1e-9);
  EXPECT_NEAR(p.coordinates[0][1], 0.0, 1e-9);
  EXPECT_NEAR(p.coordinates[1][1], 0.0, 1e-9);
}

TEST(ClassicalMds, RecoversPlanarConfigurations) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 30; ++trial) {
    const auto d = sg::DistanceMatrix::euclidean(planar(rng, 3 + trial));
    const auto p = sg::classical_mds(d);
    EXPECT_LT(max_relative_error(d, p), 1e-6);
    EXPECT_LT(p.stress, 1e-9);
    double mx = 0.0, my = 0.0;
    for (const auto& c : p.coordinates) {
      mx += c[0];
      my += c[1];
    }
    EXPECT_LT(std::abs(mx / d.size()), 1e-9);
    EXPECT_LT(std::abs(my / d.size()), 1e-9);
    EXPECT_GE(p.eigenvalues[0], p.eigenvalues[1]);
  }
}

TEST(ClassicalMds, StressNonNegativeOnHighDimensionalInput) {
  std::mt19937_64 rng(103);
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<std::vector<double>> pts(20, std::vector<double>(6));
  for (auto& p : pts) {
    for (auto& x : p) x = g(rng);
  }
  const auto p = sg::classical_mds(sg::DistanceMatrix::euclidean(pts));
  EXPECT_GT(p.stress, 0.0);
  EXPECT_LT(p.stress, 1.0);
}

TEST(ClassicalMds, PermutationInvariant) {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 20; ++trial) {
    auto pts = planar(rng, 12);
    std::vector<std::size_t> perm(pts.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::vector<double>> shuffled;
    for (auto i : perm) shuffled.push_back(pts[i]);
    const auto a = sg::classical_mds(sg::DistanceMatrix::euclidean(pts));
    const auto b = sg::classical_mds(sg::DistanceMatrix::euclidean(shuffled));
    for (std::size_t k = 0; k < perm.size(); ++k) {
      EXPECT_NEAR(b.coordinates[k][0], a.coordinates[perm[k]][0], 1e-6);
      EXPECT_NEAR(b.coordinates[k][1], a.coordinates[perm[k]][1], 1e-6);
    }
  }
}

TEST(ClassicalMds, RejectsInvalidMatrix) {
  EXPECT_THROW(sg::classical_mds(sg::DistanceMatrix::from_rows({{0, 1}, {3, 0}})), sg::InputError);
  EXPECT_THROW(sg::classical_mds(sg::DistanceMatrix::from_rows({{0, -2}, {-2, 0}})), sg::InputError);
  EXPECT_THROW(sg::classical_mds(sg::DistanceMatrix()), sg::InputError);
}

TEST(Stress, ZeroForExactAndPositiveOtherwise) {
  sg::DistanceMatrix d(2);
  d.set(0, 1, 2.0);
  EXPECT_EQ(sg::stress(d, {{{0.0, 0.0}}, {{2.0, 0.0}}}), 0.0);
  EXPECT_NEAR(sg::stress(d, {{{0.0, 0.0}}, {{1.0, 0.0}}}), 0.25, 1e-12);
}

TEST(ExportScatter, ColorsAndDeterminism) {
  std::mt19937_64 rng(109);
  const auto p = sg::classical_mds(sg::DistanceMatrix::euclidean(planar(rng, 8)));
  const sg::Clusters clusters{{0, 1, 2, 3}, {4, 5}, {6}, {7}};
  const auto svg = sg::export_scatter(p, clusters);
  const sg::ScatterPalette palette;
  EXPECT_EQ(count_of(svg, palette.largest), 4u);
  EXPECT_EQ(count_of(svg, palette.second), 2u);
  EXPECT_EQ(count_of(svg, palette.singleton), 2u);
  EXPECT_EQ(svg, sg::export_scatter(p, clusters));
  EXPECT_NE(svg.find("viewBox=\"0 0 800 800\""), std::string::npos);

  const auto one = sg::export_scatter(p, {{0, 1, 2, 3, 4, 5, 6, 7}});
  EXPECT_EQ(count_of(one, palette.largest), 8u);
}

TEST(ExportScatter, EmptyProjection) {
  const auto svg = sg::export_scatter(sg::Projection2D{}, {});
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_EQ(count_of(svg, "<circle"), 0u);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
}
