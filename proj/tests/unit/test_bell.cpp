#include <doctest.h>

#include <cmath>
#include <sstream>

#include "../oracle/oracle_values.hpp"
#include "helpers.hpp"
#include "relspin/bell.hpp"
#include "relspin/errors.hpp"
#include "relspin/format.hpp"
#include "relspin/sampling.hpp"

using namespace relspin;

namespace {
const double kTsirelson = 2.0 * std::sqrt(2.0);

double value_at(const ScanTable& t, std::size_t col, std::vector<std::size_t> index) {
  const auto& v = t.at(col, index);
  REQUIRE(v.has_value());
  return *v;
}
}  // namespace

TEST_CASE("chsh examples") {
  const auto s = ChshSettings::standard();
  CHECK(std::fabs(chsh_value(s, BeamVelocity::rest()) + kTsirelson) < 1e-12);
  CHECK(std::fabs(chsh_value(s, BeamVelocity::rest()) - oracle::kChshRest) < 1e-12);
  CHECK(std::fabs(chsh_value(s, BeamVelocity({0, 0, 0.99})) + kTsirelson) < 1e-12);
  CHECK(std::fabs(chsh_value(s, BeamVelocity({0, 0, 0.99})) - oracle::kChshPerp099) < 1e-12);

  const auto tilted = BeamVelocity::in_plane(0.9, M_PI / 4);
  const double c = chsh_value(s, tilted);
  CHECK(std::fabs(c) < kTsirelson);
  CHECK(std::fabs(c - oracle::kChshInPlane09Quarter) < 1e-12);
  CHECK(std::fabs(c - chsh_value(s, tilted, CorrelationRoute::Oracle)) < 1e-12);

  CHECK(std::fabs(chsh_value(s, BeamVelocity({0.99, 0, 0})) - oracle::kChshAlongX099) < 1e-12);
  CHECK(std::fabs(chsh_value(s, BeamVelocity::in_plane(0.99, M_PI / 4)) - oracle::kChshInPlane099Quarter) < 1e-12);
}

TEST_CASE("chsh names the degenerate setting") {
  try {
    chsh_value(ChshSettings::standard(), BeamVelocity({1, 0, 0}));
    FAIL("expected DegenerateObservable");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateObservable);
    CHECK(std::string(e.what()).find("E(a,b)") != std::string::npos);
  }
}

TEST_CASE("closed-form and oracle routes agree; Tsirelson bound holds") {
  auto gen = testing::rng(83);
  for (int i = 0; i < 2000; ++i) {
    const auto s = random_settings(gen);
    const auto beta = random_velocity(gen, 0.999);
    const double c = chsh_value(s, beta);
    CHECK(std::fabs(c) <= kTsirelson + 1e-9);
    CHECK(std::fabs(c - chsh_value(s, beta, CorrelationRoute::Oracle)) < 1e-11);
  }
}

TEST_CASE("grids") {
  CHECK(linspace(0.0, 1.0, 5) == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
  CHECK(linspace(0.3, 1.0, 1) == std::vector<double>{0.3});
  CHECK(linspace(0.0, 1.0, 1001).back() == 1.0);
  const auto p = periodic_grid(0.0, 2.0 * M_PI, 4);
  REQUIRE(p.size() == 4);
  CHECK(p[2] == doctest::Approx(M_PI));
}

TEST_CASE("scan_beta_phi") {
  const auto s = ChshSettings::standard();
  SUBCASE("single rest point") {
    const double zero[] = {0.0};
    const auto t = scan_beta_phi(s, zero, zero);
    REQUIRE(t.point_count() == 1);
    CHECK(std::fabs(value_at(t, 0, {0, 0}) + kTsirelson) < 1e-12);
  }
  SUBCASE("row at 0.999 is suppressed below 2 sqrt2 - 0.5") {
    const double beta[] = {0.999};
    const auto phis = periodic_grid(0.0, 2.0 * M_PI, 360);
    const auto t = scan_beta_phi(s, beta, phis);
    double worst = 0.0;
    for (std::size_t j = 0; j < phis.size(); ++j) worst = std::max(worst, std::fabs(value_at(t, 0, {0, j})));
    CHECK(worst < kTsirelson - 0.5);
    CHECK(std::fabs(worst - oracle::kRow0999MaxAbs) < 1e-12);
  }
  SUBCASE("invariant under phi -> phi + pi") {
    const auto betas = linspace(0.0, 0.999, 11);
    const auto phis = periodic_grid(0.0, 2.0 * M_PI, 40);
    const auto t = scan_beta_phi(s, betas, phis);
    for (std::size_t i = 0; i < betas.size(); ++i)
      for (std::size_t j = 0; j < 20; ++j)
        CHECK(std::fabs(value_at(t, 0, {i, j}) - value_at(t, 0, {i, j + 20})) < 1e-12);
  }
  SUBCASE("degenerate points at beta = 1 become gaps") {
    const double beta[] = {1.0};
    // b is perpendicular to n at phi = 0 and a' at phi = pi/4; nothing is at pi/8.
    const double phi[] = {0.0, M_PI / 4, M_PI / 8};
    const auto t = scan_beta_phi(s, beta, phi);
    CHECK_FALSE(t.at(0, std::vector<std::size_t>{0, 0}).has_value());
    CHECK_FALSE(t.at(0, std::vector<std::size_t>{0, 1}).has_value());
    CHECK(t.at(0, std::vector<std::size_t>{0, 2}).has_value());
    const auto csv = to_csv(t);
    CHECK(csv.find(",degenerate\n") != std::string::npos);
  }
  SUBCASE("errors") {
    const double one[] = {0.5};
    CHECK_THROWS_AS(scan_beta_phi(s, {}, one), Error);
    try {
      scan_beta_phi(s, one, {});
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::EmptyGrid);
    }
    const double bad[] = {1.5};
    CHECK_THROWS_AS(scan_beta_phi(s, bad, one), Error);
  }
}

TEST_CASE("scan_theta_phi") {
  const auto s = ChshSettings::standard();
  const auto thetas = linspace(0.0, M_PI, 13);
  const auto phis = periodic_grid(0.0, 2.0 * M_PI, 24);
  const auto fast = scan_theta_phi(s, 0.99, thetas, phis);
  const auto slow = scan_theta_phi(s, 0.95, thetas, phis);

  SUBCASE("theta = 0 is maximal for every phi") {
    for (std::size_t j = 0; j < phis.size(); ++j) CHECK(std::fabs(value_at(fast, 0, {0, j}) + kTsirelson) < 1e-10);
  }
  SUBCASE("theta = pi/2 row equals the in-plane scan") {
    const double beta[] = {0.99};
    const auto plane = scan_beta_phi(s, beta, phis);
    for (std::size_t j = 0; j < phis.size(); ++j)
      CHECK(std::fabs(value_at(fast, 0, {6, j}) - value_at(plane, 0, {0, j})) < 1e-12);
  }
  SUBCASE("slower beam violates at least as much") {
    for (std::size_t i = 0; i < thetas.size(); ++i)
      for (std::size_t j = 0; j < phis.size(); ++j)
        CHECK(std::fabs(value_at(slow, 0, {i, j})) >= std::fabs(value_at(fast, 0, {i, j})) - 1e-12);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(scan_theta_phi(s, 0.99, {}, phis), Error);
    CHECK_THROWS_AS(scan_theta_phi(s, 1.2, thetas, phis), Error);
  }
}

TEST_CASE("proper_time_comparison") {
  const double grid[] = {0.0, 0.6, 1.0};
  const auto t = proper_time_comparison(grid);
  CHECK(value_at(t, 0, {0}) == 0.0);
  CHECK(value_at(t, 1, {0}) == 0.0);
  CHECK(std::fabs(value_at(t, 0, {1}) + 0.36 / 1.64) < 1e-15);
  CHECK(std::fabs(value_at(t, 1, {1}) + 0.2) < 1e-15);
  CHECK(value_at(t, 0, {2}) == -1.0);
  CHECK(value_at(t, 1, {2}) == -1.0);

  const auto fine = linspace(0.0, 1.0, 1001);
  const auto big = proper_time_comparison(fine);
  for (std::size_t i = 1; i + 1 < fine.size(); ++i)
    CHECK(std::fabs(value_at(big, 0, {i})) > std::fabs(value_at(big, 1, {i})));
}

TEST_CASE("scan tables are reproducible") {
  const auto s = ChshSettings::standard();
  const auto betas = linspace(0.0, 1.0, 9);
  const auto phis = periodic_grid(0.0, 2.0 * M_PI, 9);
  CHECK(to_csv(scan_beta_phi(s, betas, phis)) == to_csv(scan_beta_phi(s, betas, phis)));
}

TEST_CASE("maximize_chsh") {
  SUBCASE("rest reaches the Tsirelson bound") {
    const auto best = maximize_chsh(BeamVelocity::rest());
    CHECK(std::fabs(best.value - kTsirelson) < 1e-6);
    CHECK(std::fabs(std::fabs(chsh_value(best.settings, BeamVelocity::rest())) - best.value) < 1e-15);
  }
  SUBCASE("in-plane settings under perpendicular motion") {
    ChshSearchOptions options;
    options.plane_normal = Direction::z_axis();
    const auto best = maximize_chsh(BeamVelocity({0, 0, 0.99}), options);
    CHECK(std::fabs(best.value - kTsirelson) < 1e-6);
    for (const auto& d : {best.settings.a, best.settings.a_prime, best.settings.b, best.settings.b_prime})
      CHECK(std::fabs(d.z()) < 1e-12);
  }
  SUBCASE("unrestricted search along x reorients the settings") {
    const auto best = maximize_chsh(BeamVelocity({0.99, 0, 0}));
    CHECK(best.value > 2.0);
    CHECK(best.value <= kTsirelson + 1e-12);
    CHECK(std::fabs(best.value - oracle::kBestChshAlongX099) < 1e-6);
  }
  SUBCASE("refinement never loses ground and is deterministic") {
    ChshSearchOptions options;
    options.seed = 99;
    options.restarts = 3;
    const auto beta = BeamVelocity::in_plane(0.95, 0.3);
    const auto first = maximize_chsh(beta, options);
    const auto second = maximize_chsh(beta, options);
    CHECK(first.value >= first.coarse_value);
    CHECK(std::is_sorted(first.history.begin(), first.history.end()));
    CHECK(first.value == second.value);
    CHECK(first.settings == second.settings);
  }
  SUBCASE("never returns a degenerate optimum at |beta| = 1") {
    ChshSearchOptions options;
    options.restarts = 2;
    const auto beta = BeamVelocity({1, 0, 0});
    const auto best = maximize_chsh(beta, options);
    CHECK_NOTHROW(chsh_value(best.settings, beta));
  }
}
