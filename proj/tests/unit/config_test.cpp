#include <gtest/gtest.h>

#include "vecsim/config.hpp"
#include "vecsim/errors.hpp"

namespace vecsim {
namespace {

const DirectionalInterval kQuarter{0.0, kPi / 2};

TEST(Config, DefaultsWithGivenInterval) {
  const SimulationConfig cfg = parse_config_text("", kQuarter);
  EXPECT_EQ(cfg.step_n, 1);
  EXPECT_EQ(cfg.step_m, 3);
  EXPECT_EQ(cfg.beta, 0.5);
  EXPECT_EQ(cfg.interp_radius, 1);
  EXPECT_EQ(cfg.normalization, Normalization::unit_scaled);
  EXPECT_DOUBLE_EQ(cfg.b_param, 2.0);
  EXPECT_EQ(cfg.erosion_stop, ErosionStop(ResidualFraction{0.1}));
  EXPECT_EQ(cfg.seed_rows_r, cfg.template_h);
  EXPECT_EQ(cfg.seed_cols_t, cfg.template_w);
}

TEST(Config, IntervalFromTextWithPiForms) {
  const SimulationConfig cfg = parse_config_text("di_min = -pi/4\ndi_max = 1*pi/4\n");
  EXPECT_DOUBLE_EQ(cfg.di.theta_min(), -kPi / 4);
  EXPECT_DOUBLE_EQ(cfg.di.theta_max(), kPi / 4);
  EXPECT_DOUBLE_EQ(cfg.b_param, 2.0);
  const SimulationConfig c2 = parse_config_text("di_min = 0\ndi_max = 3*pi/4\n");
  EXPECT_DOUBLE_EQ(c2.b_param, 4.0 / 3.0);
}

TEST(Config, BetaBoundaries) {
  EXPECT_EQ(parse_config_text("beta = 0", kQuarter).beta, 0.0);
  EXPECT_EQ(parse_config_text("beta = 1", kQuarter).beta, 1.0);
  try {
    parse_config_text("beta = 1.5", kQuarter);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("beta"), std::string::npos);
  }
}

TEST(Config, RejectsInvariantViolations) {
  EXPECT_THROW(parse_config_text("step_n = 3\nstep_m = 3", kQuarter), ValidationError);
  EXPECT_THROW(parse_config_text("step_n = 0", kQuarter), ValidationError);
  EXPECT_THROW(parse_config_text("template_w = 4\nseed_cols_t = 3", kQuarter), ValidationError);
  EXPECT_THROW(parse_config_text("template_h = 4\nseed_rows_r = 2", kQuarter), ValidationError);
  EXPECT_THROW(parse_config_text("erosion_stop = residual_fraction 1.0", kQuarter), ValidationError);
  EXPECT_THROW(parse_config_text("b_param = 0", kQuarter), ValidationError);
  EXPECT_THROW(parse_config_text("accept_a = -1", kQuarter), ValidationError);
  EXPECT_THROW(parse_config_text("di_min = 0\ndi_max = 4"), ValidationError);  // diameter >= pi
  EXPECT_THROW(parse_config_text("di_min = 1\ndi_max = 0.5"), ValidationError);
}

TEST(Config, RejectsUnknownAndMalformed) {
  EXPECT_THROW(parse_config_text("gamma = 1", kQuarter), ValidationError);
  EXPECT_THROW(parse_config_text("beta 0.5", kQuarter), FormatError);
  EXPECT_THROW(parse_config_text("beta = 0.5\nbeta = 0.2", kQuarter), FormatError);
  EXPECT_THROW(parse_config_text("beta = half", kQuarter), ValidationError);
  EXPECT_THROW(parse_config_text("step_n = 1"), ValidationError);  // no interval
  EXPECT_THROW(parse_config_text("di_min = 0"), ValidationError);
}

TEST(Config, SeedDefaultsFollowTemplate) {
  const SimulationConfig cfg = parse_config_text("template_w = 5\ntemplate_h = 4", kQuarter);
  EXPECT_EQ(cfg.seed_cols_t, 5);
  EXPECT_EQ(cfg.seed_rows_r, 4);
}

TEST(Config, StopCriteria) {
  EXPECT_EQ(parse_config_text("erosion_stop = fixed_k 3", kQuarter).erosion_stop, ErosionStop(FixedSteps{3}));
  EXPECT_EQ(parse_config_text("erosion_stop = max_components 4", kQuarter).erosion_stop,
            ErosionStop(MaxComponents{4}));
  EXPECT_THROW(parse_config_text("erosion_stop = forever 1", kQuarter), ValidationError);
}

TEST(Config, CommentsAndBlankLines) {
  const SimulationConfig cfg = parse_config_text("# header\n\n  beta = 0.25  # trailing\n", kQuarter);
  EXPECT_EQ(cfg.beta, 0.25);
}

TEST(Config, TextRoundTripAndDigest) {
  SimulationConfig cfg = parse_config_text(
      "di_min = 0.1\ndi_max = 1.3\nbeta = 0.3\nerosion_stop = fixed_k 2\nrng_seed = 18446744073709551615\n"
      "normalization = paper_raw\nstructuring_element = square\ncomponent_connectivity = 4\n");
  const SimulationConfig back = parse_config_text(to_text(cfg));
  EXPECT_EQ(back, cfg);
  EXPECT_EQ(config_digest(back), config_digest(cfg));
  EXPECT_EQ(config_digest(cfg).size(), 16u);
  cfg.rng_seed = 3;
  EXPECT_NE(config_digest(back), config_digest(cfg));
}

TEST(Config, MissingFileIsIoError) { EXPECT_THROW(parse_config("/nonexistent/vecsim.cfg"), IoError); }

}  // namespace
}  // namespace vecsim
