#include <gtest/gtest.h>

#include <string>

#include "vtype/scenario.hpp"

namespace vtype {
namespace {

ConfigError parse_error(const std::string& text) {
  try {
    parse_scenario(text);
  } catch (const ConfigError& e) {
    return e;
  }
  ADD_FAILURE() << "expected ConfigError for:\n" << text;
  return ConfigError(ConfigError::Kind::type, "", "");
}

TEST(ParseScenario, FillsDefaults) {
  const ScenarioConfig cfg = parse_scenario("kappa=0.1\ntheta=1\ninitial=bell\nt_max=10");
  EXPECT_DOUBLE_EQ(cfg.params.kappa, 0.1);
  EXPECT_DOUBLE_EQ(cfg.params.theta, 1.0);
  EXPECT_DOUBLE_EQ(cfg.params.gamma0, 1.0);
  EXPECT_DOUBLE_EQ(cfg.params.delta, 0.0);
  EXPECT_DOUBLE_EQ(cfg.strengths.p, 0.0);
  EXPECT_DOUBLE_EQ(cfg.strengths.p_r, 0.0);
  EXPECT_EQ(cfg.steps, 1000);
  EXPECT_DOUBLE_EQ(cfg.t_max, 10.0);
  EXPECT_EQ(cfg.initial.kind, InitialKind::bell);
  EXPECT_TRUE(cfg.sweeps.empty());
  EXPECT_FALSE(cfg.is_grid());
}

TEST(ParseScenario, CommentsAndWhitespace) {
  const ScenarioConfig cfg = parse_scenario("# header\n  kappa = 2 # trailing\n\nt_max=5\r\ndelta=-3\n");
  EXPECT_DOUBLE_EQ(cfg.params.kappa, 2.0);
  EXPECT_DOUBLE_EQ(cfg.params.delta, -3.0);
}

TEST(ParseScenario, ThetaOutOfRangeNamesField) {
  const ConfigError e = parse_error("kappa=1\nt_max=1\ntheta=1.5");
  EXPECT_EQ(e.kind(), ConfigError::Kind::range);
  EXPECT_EQ(e.field(), "parameters");
  EXPECT_NE(std::string(e.what()).find("theta"), std::string::npos);
  EXPECT_NE(std::string(e.what()).find("|theta| <= 1"), std::string::npos);
}

TEST(ParseScenario, NamedErrors) {
  EXPECT_EQ(parse_error("kappa=1\nt_max=1\nfoo=2").kind(), ConfigError::Kind::unknown_key);
  EXPECT_EQ(parse_error("kappa=1\nt_max=1\nfoo=2").field(), "foo");
  EXPECT_EQ(parse_error("kappa=abc\nt_max=1").kind(), ConfigError::Kind::type);
  EXPECT_EQ(parse_error("kappa=abc\nt_max=1").field(), "kappa");
  EXPECT_EQ(parse_error("t_max=1").field(), "kappa");
  EXPECT_EQ(parse_error("kappa=1").field(), "t_max");
  EXPECT_EQ(parse_error("kappa=1\nt_max=1\nsteps=1").field(), "steps");
  EXPECT_EQ(parse_error("kappa=1\nt_max=1\nsteps=2.5").kind(), ConfigError::Kind::type);
  EXPECT_EQ(parse_error("kappa=1\nt_max=1\nkappa=2").kind(), ConfigError::Kind::duplicate);
  EXPECT_EQ(parse_error("kappa=1\nt_max=1\np_r=1").kind(), ConfigError::Kind::range);
  EXPECT_EQ(parse_error("kappa=-1\nt_max=1").kind(), ConfigError::Kind::range);
  EXPECT_EQ(parse_error("kappa=1\nt_max=0").field(), "t_max");
  EXPECT_EQ(parse_error("kappa=1\nt_max=1\ninitial=ghz").field(), "initial");
  EXPECT_EQ(parse_error("kappa=1\nt_max=1\nsweep1_key=omega\nsweep1_values=1").field(), "sweep1_key");
  EXPECT_EQ(parse_error("kappa=1\nt_max=1\nsweep1_key=p").field(), "sweep1_values");
  EXPECT_EQ(parse_error("kappa=1\nt_max=1\nsweep1_key=p\nsweep1_values=0,1.2").field(), "sweep1_values");
  EXPECT_EQ(parse_error("kappa=1\nt_max=1\nsweep2_key=p\nsweep2_values=0").field(), "sweep1_key");
  EXPECT_EQ(parse_error("kappa=1\nt_max=1\nsweep1_key=p\nsweep1_values=0\nsweep2_key=p\nsweep2_values=1")
                .kind(),
            ConfigError::Kind::duplicate);
  EXPECT_EQ(parse_error("kappa=1\nt_max=1\njunk").kind(), ConfigError::Kind::type);
}

TEST(ParseScenario, CustomInitialState) {
  const ScenarioConfig cfg = parse_scenario("kappa=1\nt_max=1\nc2a_re=0.6\nc1b_im=0.8\n");
  EXPECT_EQ(cfg.initial.kind, InitialKind::custom);
  const AmplitudeSet a = cfg.initial.amplitudes();
  EXPECT_EQ(a.c2a, complex(0.6, 0.0));
  EXPECT_EQ(a.c1b, complex(0.0, 0.8));
  EXPECT_EQ(a.c1a, complex(0.0));
  EXPECT_EQ(parse_error("kappa=1\nt_max=1\nc2a_re=0.9\nc1b_re=0.9").field(), "initial");
  EXPECT_EQ(parse_error("kappa=1\nt_max=1\ninitial=bell\nc2a_re=0.5").field(), "initial");
}

TEST(ParseScenario, GridModeSelection) {
  const ScenarioConfig one_axis = parse_scenario("kappa=1\nt_max=1\nsweep1_key=p\nsweep1_values=0,0.5");
  EXPECT_FALSE(one_axis.is_grid());
  const ScenarioConfig with_eval =
      parse_scenario("kappa=1\nt_max=1\nsweep1_key=p\nsweep1_values=0,0.5\neval_time=4");
  EXPECT_TRUE(with_eval.is_grid());
  EXPECT_DOUBLE_EQ(with_eval.grid_time(), 4.0);
  const ScenarioConfig two_axes = parse_scenario(
      "kappa=1\nt_max=3\nsweep1_key=p\nsweep1_values=0,0.5\nsweep2_key=p_r\nsweep2_values=0,0.9");
  EXPECT_TRUE(two_axes.is_grid());
  EXPECT_DOUBLE_EQ(two_axes.grid_time(), 3.0);
  EXPECT_EQ(parse_error("kappa=1\nt_max=1\neval_time=2").field(), "sweep1_key");
}

TEST(Presets, Fig3dMatchesCaption) {
  const auto cfgs = preset("fig3d");
  ASSERT_EQ(cfgs.size(), 1u);
  const ScenarioConfig& cfg = cfgs[0];
  EXPECT_DOUBLE_EQ(cfg.params.kappa, 0.1);
  EXPECT_DOUBLE_EQ(cfg.params.delta, 0.0);
  EXPECT_DOUBLE_EQ(cfg.strengths.p, 0.0);
  EXPECT_DOUBLE_EQ(cfg.strengths.p_r, 0.9);
  EXPECT_EQ(cfg.initial.kind, InitialKind::bell);
  ASSERT_EQ(cfg.sweeps.size(), 1u);
  EXPECT_EQ(cfg.sweeps[0].key, SweepKey::theta);
  EXPECT_EQ(cfg.sweeps[0].values, (std::vector<double>{0.0, 0.3, 0.7, 1.0}));
}

TEST(Presets, CaptionParameters) {
  EXPECT_EQ(preset("fig4a")[0].initial.kind, InitialKind::product);
  EXPECT_DOUBLE_EQ(preset("fig4b")[0].params.kappa, 10.0);
  EXPECT_DOUBLE_EQ(preset("fig6c")[0].params.theta, 0.7);
  EXPECT_EQ(preset("fig6c")[0].sweeps[0].key, SweepKey::p);
  EXPECT_EQ(preset("fig5d")[0].sweeps[0].key, SweepKey::p_r);
  EXPECT_DOUBLE_EQ(preset("fig5d")[0].params.theta, 1.0);
  EXPECT_DOUBLE_EQ(preset("fig7b")[0].params.theta, 0.0);
  EXPECT_EQ(preset("fig8c")[0].sweeps[0].values, (std::vector<double>{0.0, 5.0, 10.0}));
  EXPECT_EQ(preset("fig8c")[0].initial.kind, InitialKind::product);

  const auto fig2a = preset("fig2a");
  ASSERT_EQ(fig2a.size(), 2u);
  EXPECT_EQ(fig2a[0].initial.kind, InitialKind::bell);
  EXPECT_EQ(fig2a[1].initial.kind, InitialKind::product);
  EXPECT_TRUE(fig2a[0].is_grid());
  EXPECT_DOUBLE_EQ(fig2a[0].grid_time(), 10.0);
  EXPECT_EQ(fig2a[0].sweeps[0].values.size(), 51u);
  EXPECT_DOUBLE_EQ(fig2a[0].sweeps[0].values.back(), 1.0);
  EXPECT_LT(preset("fig2b")[0].sweeps[0].values.back(), 1.0);
}

TEST(Presets, AllNamesParse) {
  const auto names = preset_names();
  EXPECT_EQ(names.size(), 26u);
  for (const auto& name : names) EXPECT_NO_THROW(preset(name)) << name;
  EXPECT_THROW(preset("fig9a"), std::invalid_argument);
  EXPECT_THROW(preset("fig3e"), std::invalid_argument);
}

}  // namespace
}  // namespace vtype
