#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "vecsim/patterns.hpp"

namespace vecsim {
namespace {

const DirectionalInterval kQuarter{0.0, kPi / 2};

Pattern make_pattern(std::vector<Direction> values, Cell anchor = {0, 0}) {
  return Pattern{std::move(values), Direction{}, anchor};
}

DistanceParams params(double beta, Normalization n, int w = 10, int h = 10) {
  DistanceParams p;
  p.di = kQuarter;
  p.b = 2.0;
  p.beta = beta;
  p.normalization = n;
  p.field_width = w;
  p.field_height = h;
  return p;
}

TEST(Template, Sizes) {
  EXPECT_EQ(make_template(1, 1).size(), 4u);
  EXPECT_EQ(make_template(2, 1).size(), 7u);
  EXPECT_EQ(make_template(3, 3).size(), 24u);
  EXPECT_EQ(make_template(5, 5).size(), 60u);
  EXPECT_THROW(make_template(0, 1), ValidationError);
  EXPECT_THROW(make_template(1, 0), ValidationError);
}

TEST(Template, ExactOffsets) {
  const std::vector<Cell> expected{{-1, -1}, {0, -1}, {1, -1}, {-1, 0}};
  EXPECT_EQ(make_template(1, 1).offsets, expected);
}

TEST(Template, OffsetsPrecedeCentreInScanOrder) {
  for (int w = 1; w <= 4; ++w) {
    for (int h = 1; h <= 4; ++h) {
      for (const Cell o : make_template(w, h).offsets) {
        EXPECT_TRUE(o.y < 0 || (o.y == 0 && o.x < 0));
        EXPECT_LE(std::abs(o.x), w);
        EXPECT_GE(o.y, -h);
      }
    }
  }
}

TEST(ExtractPatterns, SmallField) {
  VectorField f(3, 3);
  f(0, 0) = 0.1;
  f(1, 0) = 0.2;
  f(2, 0) = 0.3;
  f(0, 1) = 0.4;
  const auto base = extract_patterns(f, make_template(1, 1));
  ASSERT_EQ(base.size(), 2u);
  EXPECT_EQ(base.patterns[0].anchor, Cell(1, 1));
  EXPECT_EQ(base.patterns[1].anchor, Cell(1, 2));
  const std::vector<Direction> first{0.1, 0.2, 0.3, 0.4};
  EXPECT_EQ(base.patterns[0].values, first);
  EXPECT_FALSE(base.patterns[0].center_value.has_value());
}

TEST(ExtractPatterns, AllNdField) {
  const auto base = extract_patterns(VectorField(6, 4), make_template(1, 2));
  EXPECT_EQ(base.size(), 8u);
  for (const auto& p : base.patterns) {
    for (const auto& v : p.values) EXPECT_FALSE(v.has_value());
  }
}

TEST(ExtractPatterns, TooSmall) {
  EXPECT_THROW(extract_patterns(VectorField(2, 5), make_template(1, 1)), ValidationError);
  EXPECT_THROW(extract_patterns(VectorField(5, 1), make_template(1, 1)), ValidationError);
}

TEST(ExtractPatterns, CountMatchesEnumeration) {
  const auto t = make_template(5, 5);
  const auto base = extract_patterns(VectorField(183, 183), t);
  EXPECT_EQ(base.size(), 30794u);
  EXPECT_EQ(base.size(), testing::enumerate_anchors(183, 183, t.offsets));
  for (int w = 1; w <= 3; ++w) {
    for (int h = 1; h <= 3; ++h) {
      const auto tt = make_template(w, h);
      EXPECT_EQ(extract_patterns(VectorField(11, 9), tt).size(), testing::enumerate_anchors(11, 9, tt.offsets));
    }
  }
}

TEST(AngleDiff, CaseRule) {
  EXPECT_DOUBLE_EQ(angle_diff(0.0, kPi / 2, 2.0, kQuarter), -kPi / 2);
  EXPECT_EQ(angle_diff(Direction{}, Direction{}, 2.0, kQuarter), 0.0);
  EXPECT_DOUBLE_EQ(angle_diff(0.3, Direction{}, 2.0, kQuarter), kPi / 2);
  EXPECT_DOUBLE_EQ(angle_diff(Direction{}, 0.3, 4.0, kQuarter), kPi / 4);
}

TEST(AngleDiff, UsesIntervalRepresentatives) {
  // pi and -pi are the same direction.
  const DirectionalInterval west(3 * kPi / 4, 5 * kPi / 4);
  EXPECT_NEAR(angle_diff(kPi, -kPi, 2.0, west), 0.0, 1e-15);
  EXPECT_NEAR(angle_diff(-3 * kPi / 4, 3 * kPi / 4, 2.0, west), kPi / 2, 1e-12);
}

TEST(DistTvf, MaximalDisagreement) {
  const auto a = make_pattern({0.0, 0.0, 0.0, 0.0});
  const auto b = make_pattern({kPi / 2, kPi / 2, kPi / 2, kPi / 2});
  EXPECT_NEAR(dist_tvf(a, b, params(1.0, Normalization::paper_raw)), 9.8696, 1e-4);
  EXPECT_DOUBLE_EQ(dist_tvf(a, b, params(1.0, Normalization::paper_raw)), kPi * kPi);
  EXPECT_DOUBLE_EQ(dist_tvf(a, b, params(1.0, Normalization::unit_scaled)), 1.0);
  const auto nd = make_pattern({Direction{}, Direction{}, Direction{}, Direction{}});
  EXPECT_DOUBLE_EQ(dist_tvf(a, nd, params(1.0, Normalization::unit_scaled)), 1.0);
  EXPECT_THROW(dist_tvf(a, make_pattern({0.0}), params(1.0, Normalization::paper_raw)), ValidationError);
}

TEST(DistLoc, Examples) {
  EXPECT_EQ(dist_loc({0, 0}, {3, 4}, Normalization::paper_raw, 4, 5), 25.0);
  EXPECT_EQ(dist_loc({0, 0}, {3, 4}, Normalization::unit_scaled, 4, 5), 1.0);
  EXPECT_EQ(dist_loc({2, 2}, {2, 2}, Normalization::unit_scaled, 4, 5), 0.0);
}

TEST(Dist, BetaEndpointsAndBlend) {
  const auto a = make_pattern({0.0, 0.0, 0.0, 0.0}, {0, 0});
  const auto b = make_pattern({kPi / 2, 0.0, 0.0, 0.0}, {9, 9});
  const double tvf = dist_tvf(a, b, params(1.0, Normalization::unit_scaled));
  const double loc = dist_loc(a.anchor, b.anchor, Normalization::unit_scaled, 10, 10);
  EXPECT_DOUBLE_EQ(tvf, 0.25);
  EXPECT_DOUBLE_EQ(loc, 1.0);
  EXPECT_EQ(dist(a, b, params(0.0, Normalization::unit_scaled)), loc);
  EXPECT_EQ(dist(a, b, params(1.0, Normalization::unit_scaled)), tvf);
  EXPECT_NEAR(dist(a, b, params(0.3, Normalization::unit_scaled)), 0.3 * 0.25 + 0.7 * 1.0, 1e-15);
}

TEST(Dist, RandomPairsMatchOracleAndAxioms) {
  std::mt19937 gen(4242);
  std::uniform_real_distribution<double> angle(0.0, kPi / 2);
  std::bernoulli_distribution nd(0.3);
  std::uniform_int_distribution<int> coord(0, 19);
  std::uniform_real_distribution<double> beta_dist(0.0, 1.0);
  const std::size_t n = make_template(2, 2).size();
  auto draw = [&] {
    std::vector<Direction> v(n);
    for (auto& d : v) {
      if (!nd(gen)) d = angle(gen);
    }
    return make_pattern(std::move(v), {coord(gen), coord(gen)});
  };
  for (int i = 0; i < 1000; ++i) {
    const Pattern a = draw();
    const Pattern b = draw();
    const double beta = i % 10 == 0 ? 0.0 : (i % 10 == 1 ? 1.0 : beta_dist(gen));
    for (const auto norm : {Normalization::paper_raw, Normalization::unit_scaled}) {
      const auto p = params(beta, norm, 20, 20);
      const double raw = testing::case_rule_sum(a.values, b.values, 2.0);
      const double expect_tvf =
          norm == Normalization::unit_scaled ? raw / (static_cast<double>(n) * (kPi / 2) * (kPi / 2)) : raw;
      EXPECT_NEAR(dist_tvf(a, b, p), expect_tvf, 1e-12);
      const double dab = dist(a, b, p);
      EXPECT_GE(dab, 0.0);
      EXPECT_EQ(dist(a, a, p), 0.0);
      EXPECT_NEAR(dab, dist(b, a, p), 1e-15);
      if (norm == Normalization::unit_scaled) {
        EXPECT_LE(dist_tvf(a, b, p), 1.0 + 1e-12);
        EXPECT_LE(dab, 1.0 + 1e-12);
      }
    }
  }
}

TEST(PatternTable, EncodesAbsentNdAndAngles) {
  VectorField f(3, 3);
  f(0, 0) = 0.5;
  PatternTable table(make_template(1, 1), kQuarter);
  table.add(f, {1, 1});
  table.add(f, {0, 0});
  ASSERT_EQ(table.size(), 2u);
  EXPECT_EQ(table.slots(0)[0], Slot::angle);
  EXPECT_EQ(table.reps(0)[0], 0.5);
  EXPECT_EQ(table.slots(0)[1], Slot::nd);
  for (const Slot s : table.slots(1)) EXPECT_EQ(s, Slot::absent);
  EXPECT_EQ(table.center(1), Direction(0.5));
}

TEST(SlotTerm, CaseRule) {
  EXPECT_EQ(slot_term(Slot::angle, 0.5, Slot::angle, 0.25, 9.0), 0.0625);
  EXPECT_EQ(slot_term(Slot::nd, 0.0, Slot::nd, 0.0, 9.0), 0.0);
  EXPECT_EQ(slot_term(Slot::nd, 0.0, Slot::angle, 0.1, 9.0), 9.0);
}

}  // namespace
}  // namespace vecsim
