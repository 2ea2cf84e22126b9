#include <doctest.h>

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

#include "../oracle/oracle_values.hpp"
#include "helpers.hpp"
#include "relspin/crypto_audit.hpp"
#include "relspin/errors.hpp"
#include "relspin/sampling.hpp"

using namespace relspin;

namespace {
const double kTsirelson = 2.0 * std::sqrt(2.0);

Error error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e;
  }
  FAIL("expected an error");
  return Error(ErrorCode::InvalidArgument, "");
}
}  // namespace

TEST_CASE("load_distribution examples") {
  SUBCASE("single rest row") {
    const auto d = load_distribution("beta_x,beta_y,beta_z,weight\n0,0,0,1\n");
    REQUIRE(d.samples().size() == 1);
    CHECK(d.samples()[0].beta.magnitude() == 0.0);
    CHECK(d.samples()[0].weight == 1.0);
  }
  SUBCASE("two symmetric rows normalize to one half") {
    const auto d = load_distribution("beta_x,beta_y,beta_z,weight\r\n0.9,0,0,3\r\n-0.9,0,0,3\r\n\n");
    REQUIRE(d.samples().size() == 2);
    CHECK(d.samples()[0].weight == 0.5);
    CHECK(d.samples()[1].weight == 0.5);
  }
  SUBCASE("superluminal row") {
    const auto e = error_of([] { load_distribution("beta_x,beta_y,beta_z,weight\n0,0,0,1\n1.2,0,0,1\n"); });
    CHECK(e.code() == ErrorCode::SuperluminalSample);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    CHECK(std::string(e.what()).find("1.2,0,0,1") != std::string::npos);
  }
  SUBCASE("|beta| = 1 is rejected") {
    CHECK(error_of([] { load_distribution("beta_x,beta_y,beta_z,weight\n0,1,0,1\n"); }).code() ==
          ErrorCode::SuperluminalSample);
  }
}

TEST_CASE("load_distribution parse errors carry line numbers") {
  const auto bad_number = error_of([] { load_distribution("beta_x,beta_y,beta_z,weight\n0,0,x,1\n"); });
  CHECK(bad_number.code() == ErrorCode::ParseError);
  CHECK(std::string(bad_number.what()).find("line 2") != std::string::npos);

  const auto short_row = error_of([] { load_distribution("beta_x,beta_y,beta_z,weight\n\n0,0,1\n"); });
  CHECK(short_row.code() == ErrorCode::ParseError);
  CHECK(std::string(short_row.what()).find("line 3") != std::string::npos);

  CHECK(error_of([] { load_distribution("bx,by,bz,w\n0,0,0,1\n"); }).code() == ErrorCode::ParseError);
  CHECK(error_of([] { load_distribution(""); }).code() == ErrorCode::ParseError);
  CHECK(error_of([] { load_distribution("beta_x,beta_y,beta_z,weight\n0,0,0,0\n"); }).code() ==
        ErrorCode::ParseError);
  CHECK(error_of([] { load_distribution("beta_x,beta_y,beta_z,weight\n"); }).code() ==
        ErrorCode::EmptyDistribution);
}

TEST_CASE("from_samples validation") {
  CHECK(error_of([] { VelocityDistribution::from_samples({}); }).code() == ErrorCode::EmptyDistribution);
  CHECK(error_of([] { VelocityDistribution::from_samples({{BeamVelocity({0, 0, 1}), 1.0}}); }).code() ==
        ErrorCode::SuperluminalSample);
  CHECK(error_of([] { VelocityDistribution::from_samples({{BeamVelocity(), -1.0}}); }).code() ==
        ErrorCode::InvalidArgument);
}

TEST_CASE("expected_chsh examples") {
  const auto s = ChshSettings::standard();
  CHECK(std::fabs(expected_chsh(VelocityDistribution::delta(BeamVelocity::rest()), s) + kTsirelson) < 1e-12);
  CHECK(std::fabs(expected_chsh(VelocityDistribution::delta(BeamVelocity({0, 0, 0.99})), s) + kTsirelson) < 1e-12);

  const auto mix = VelocityDistribution::delta(BeamVelocity::rest())
                       .mix(VelocityDistribution::delta(BeamVelocity({0.99, 0, 0})), 0.5);
  CHECK(std::fabs(expected_chsh(mix, s) - oracle::kMixRestAlongX099) < 1e-12);
}

TEST_CASE("expected_chsh is linear, bounded and order independent") {
  auto gen = testing::rng(131);
  std::uniform_real_distribution<double> unit(0.01, 0.99);
  for (int trial = 0; trial < 50; ++trial) {
    const auto s = random_settings(gen);
    std::vector<VelocitySample> a_samples, b_samples;
    for (int i = 0; i < 7; ++i) a_samples.push_back({random_velocity(gen, 0.99), unit(gen)});
    for (int i = 0; i < 5; ++i) b_samples.push_back({random_velocity(gen, 0.99), unit(gen)});
    const auto da = VelocityDistribution::from_samples(a_samples);
    const auto db = VelocityDistribution::from_samples(b_samples);
    const double w = unit(gen);
    const double ea = expected_chsh(da, s);
    const double eb = expected_chsh(db, s);
    CHECK(std::fabs(expected_chsh(da.mix(db, w), s) - (w * ea + (1 - w) * eb)) < 1e-12);
    CHECK(std::fabs(ea) <= kTsirelson + 1e-12);

    auto shuffled = a_samples;
    std::shuffle(shuffled.begin(), shuffled.end(), gen);
    CHECK(std::fabs(expected_chsh(VelocityDistribution::from_samples(shuffled), s) - ea) < 1e-12);
  }
}

TEST_CASE("audit examples") {
  const auto s = ChshSettings::standard();
  SUBCASE("rest: no alarm") {
    const auto r = audit(VelocityDistribution::delta(BeamVelocity::rest()), s, 2.7);
    CHECK(r.verdict == Verdict::NoAlarm);
    CHECK(std::fabs(r.degradation) < 1e-12);
    CHECK(r.breakdown.size() == 1);
  }
  SUBCASE("0.99 x: false alarm risk") {
    const auto r = audit(VelocityDistribution::delta(BeamVelocity({0.99, 0, 0})), s, 2.7);
    CHECK(r.verdict == Verdict::FalseAlarmRisk);
    CHECK(std::fabs(r.expected_chsh - oracle::kChshAlongX099) < 1e-12);
    CHECK(r.degradation > 0.5);
  }
  SUBCASE("threshold 2 sqrt2 flags any suppression") {
    const auto d = VelocityDistribution::delta(BeamVelocity::rest())
                       .mix(VelocityDistribution::delta(BeamVelocity::in_plane(0.3, 1.0)), 0.9);
    CHECK(audit(d, s, kTsirelson).verdict == Verdict::FalseAlarmRisk);
  }
  SUBCASE("threshold validation") {
    const auto d = VelocityDistribution::delta(BeamVelocity::rest());
    CHECK_THROWS_AS(audit(d, s, 0.0), Error);
    CHECK_THROWS_AS(audit(d, s, 3.0), Error);
  }
}

TEST_CASE("audit invariants") {
  auto gen = testing::rng(137);
  std::uniform_real_distribution<double> unit(0.01, 1.0);
  std::uniform_real_distribution<double> threshold(2.0, kTsirelson);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<VelocitySample> samples;
    for (int i = 0; i < 4; ++i) samples.push_back({random_velocity(gen, 0.99), unit(gen)});
    const double t = threshold(gen);
    const auto r = audit(VelocityDistribution::from_samples(samples), ChshSettings::standard(), t);
    CHECK(r.degradation >= -1e-9);
    CHECK((r.verdict == Verdict::FalseAlarmRisk) == (std::fabs(r.expected_chsh) < t));
  }
}

TEST_CASE("audit JSON") {
  const auto r = audit(VelocityDistribution::delta(BeamVelocity({0.99, 0, 0})), ChshSettings::standard());
  const auto j = nlohmann::json::parse(to_json(r));
  CHECK(j.at("verdict") == "FalseAlarmRisk");
  CHECK(j.at("alarm_threshold") == 2.7);
  CHECK(j.at("expected_chsh").get<double>() == r.expected_chsh);
  CHECK(j.at("breakdown").size() == 1);
  CHECK(j.at("breakdown")[0].at("beta")[0] == 0.99);
  CHECK(j.contains("threshold_semantics"));
  CHECK(to_json(r) == to_json(r));
}
