#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "vecsim/ensemble.hpp"

namespace vecsim {
namespace {

BinaryGrid complement(const BinaryGrid& g) {
  BinaryGrid out(g.width(), g.height());
  for (std::size_t i = 0; i < g.size(); ++i) out.cells()[i] = g.cells()[i] ? 0 : 1;
  return out;
}

TEST(Etype, IdenticalRealizationsReproduceTheGrid) {
  std::mt19937 gen(1);
  const BinaryGrid g = testing::random_grid(gen, 12, 9, 0.4);
  const std::vector<BinaryGrid> ens(5, g);
  const EtypeMap m = etype(ens);
  EXPECT_EQ(m.count, 5u);
  for (std::size_t i = 0; i < g.size(); ++i) EXPECT_EQ(m.values.cells()[i], g.cells()[i] ? 1.0 : 0.0);
}

TEST(Etype, ComplementaryPairGivesOneHalf) {
  std::mt19937 gen(2);
  const BinaryGrid g = testing::random_grid(gen, 10, 10, 0.5);
  const std::vector<BinaryGrid> ens{g, complement(g)};
  const EtypeMap m = etype(ens);
  for (const double v : m.values.cells()) EXPECT_EQ(v, 0.5);
}

TEST(Etype, Errors) {
  EXPECT_THROW(etype(std::vector<BinaryGrid>{}), ValidationError);
  const std::vector<BinaryGrid> mixed{BinaryGrid(3, 3), BinaryGrid(3, 4)};
  EXPECT_THROW(etype(mixed), ValidationError);
}

TEST(Connectivity, RatiosAgainstTraining) {
  BinaryGrid training(9, 9);
  for (int x = 0; x < 9; ++x) training(x, 4) = 1;
  BinaryGrid split(9, 9);
  split(0, 0) = split(4, 4) = split(8, 8) = 1;
  split(8, 7) = 1;
  const std::vector<BinaryGrid> same{training};
  EXPECT_EQ(connectivity_report(same, training).median_component_ratio, 1.0);
  const std::vector<BinaryGrid> three{split};
  const auto report = connectivity_report(three, training);
  EXPECT_EQ(report.training.components, 1);
  EXPECT_EQ(report.realizations[0].components, 3);
  EXPECT_EQ(report.median_component_ratio, 3.0);
  EXPECT_DOUBLE_EQ(report.realizations[0].largest_fraction, 0.5);
  EXPECT_DOUBLE_EQ(report.realizations[0].sand_fraction, 4.0 / 81.0);
}

TEST(Connectivity, MedianOfRatios) {
  BinaryGrid training(5, 5);
  training(2, 2) = 1;
  BinaryGrid two(5, 5);
  two(0, 0) = two(4, 4) = 1;
  const std::vector<BinaryGrid> ens{training, two, two, training};
  EXPECT_EQ(connectivity_report(ens, training).median_component_ratio, 1.5);
}

TEST(Connectivity, RowMatchesUnionFind) {
  std::mt19937 gen(3);
  for (int i = 0; i < 20; ++i) {
    const BinaryGrid g = testing::random_grid(gen, 15, 11, 0.45);
    EXPECT_EQ(connectivity_row(g, 8).components, testing::union_find_components(g, 8));
    EXPECT_EQ(connectivity_row(g, 4).components, testing::union_find_components(g, 4));
  }
  EXPECT_EQ(connectivity_row(BinaryGrid(4, 4)).largest_fraction, 0.0);
}

TEST(Connectivity, Errors) {
  const std::vector<BinaryGrid> ens{BinaryGrid(4, 4, 1)};
  EXPECT_THROW(connectivity_report(ens, BinaryGrid(4, 4)), ValidationError);
  EXPECT_THROW(connectivity_report(ens, BinaryGrid(5, 4, 1)), ValidationError);
}

TEST(Variability, Extremes) {
  std::mt19937 gen(4);
  const BinaryGrid g = testing::random_grid(gen, 10, 8, 0.5);
  const std::vector<BinaryGrid> same{g, g, g};
  EXPECT_EQ(variability(same), 0.0);
  const std::vector<BinaryGrid> opposite{g, complement(g)};
  EXPECT_EQ(variability(opposite), 1.0);
}

TEST(Variability, SeedExcludedAndSymmetric) {
  BinaryGrid a(6, 6);
  BinaryGrid b(6, 6);
  // Differences only inside the seed region do not count.
  a(0, 5) = a(5, 0) = 1;
  const std::vector<BinaryGrid> pair{a, b};
  EXPECT_EQ(variability(pair, 1, 1), 0.0);
  b(3, 3) = 1;
  const std::vector<BinaryGrid> ab{a, b};
  const std::vector<BinaryGrid> ba{b, a};
  EXPECT_DOUBLE_EQ(variability(ab, 1, 1), 1.0 / 25.0);
  EXPECT_EQ(variability(ab, 1, 1), variability(ba, 1, 1));
}

TEST(Variability, Errors) {
  EXPECT_THROW(variability(std::vector<BinaryGrid>{BinaryGrid(3, 3)}), ValidationError);
  EXPECT_THROW(variability(std::vector<BinaryGrid>{BinaryGrid(3, 3), BinaryGrid(4, 3)}), ValidationError);
}

}  // namespace
}  // namespace vecsim
