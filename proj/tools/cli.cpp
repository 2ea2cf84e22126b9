#include "cli.hpp"

#include <unistd.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "relspin/bell.hpp"
#include "relspin/crypto_audit.hpp"
#include "relspin/dirac.hpp"
#include "relspin/errors.hpp"
#include "relspin/format.hpp"
#include "relspin/sampling.hpp"
#include "relspin/spin_observables.hpp"

namespace relspin::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<double> parse_list(const std::string& text, std::size_t expected, const std::string& flag) {
  std::vector<double> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const std::string field = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size() || !std::isfinite(v)) {
      throw UsageError(flag + ": '" + field + "' is not a number");
    }
    values.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (values.size() != expected) {
    throw UsageError(flag + " expects " + std::to_string(expected) + " comma-separated numbers");
  }
  return values;
}

Vec3 parse_vec(const std::string& text, const std::string& flag) {
  const auto v = parse_list(text, 3, flag);
  return {v[0], v[1], v[2]};
}

Direction parse_direction(const Vec3& v, const std::string& flag, std::ostream& err) {
  const double len = norm(v);
  if (!(len > 0.0)) throw UsageError(flag + " must be a nonzero vector");
  if (std::fabs(len - 1.0) > Direction::kUnitTolerance) {
    err << "warning: " << flag << " normalized from length " << format_double(len) << "\n";
  }
  return Direction::normalize(v);
}

Direction parse_direction(const std::string& text, const std::string& flag, std::ostream& err) {
  return parse_direction(parse_vec(text, flag), flag, err);
}

ChshSettings parse_settings(const std::string& text, std::ostream& err) {
  if (text.empty()) return ChshSettings::standard();
  const auto v = parse_list(text, 12, "--settings");
  const auto dir = [&](std::size_t k, const char* name) {
    return parse_direction(Vec3{v[3 * k], v[3 * k + 1], v[3 * k + 2]}, std::string("--settings ") + name, err);
  };
  return {dir(0, "a"), dir(1, "a'"), dir(2, "b"), dir(3, "b'")};
}

void emit(const std::string& content, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << content;
    return;
  }
  namespace fs = std::filesystem;
  const fs::path target(out_path);
  fs::path temp = target;
  temp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream file(temp, std::ios::binary | std::ios::trunc);
    if (!file) throw UsageError("cannot open " + temp.string() + " for writing");
    file << content;
    if (!file.flush()) throw UsageError("failed writing " + temp.string());
  }
  std::error_code ec;
  fs::rename(temp, target, ec);
  if (ec) {
    fs::remove(temp);
    throw UsageError("cannot move output into " + out_path + ": " + ec.message());
  }
}

// ---------------------------------------------------------------------------
// dirac-check

struct Aggregate {
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = true;
};

void merge(std::map<std::string, Aggregate>& into, std::vector<std::string>& order, const dirac::Report& report) {
  for (const auto& r : report) {
    auto [it, inserted] = into.try_emplace(r.check);
    if (inserted) order.push_back(r.check);
    it->second.max_residual = std::max(it->second.max_residual, r.max_residual);
    it->second.tolerance = r.tolerance;
    it->second.pass = it->second.pass && r.pass;
  }
}

void run_dirac_suite(std::map<std::string, Aggregate>& agg, std::vector<std::string>& order, const Vec3& p,
                     double m, const std::vector<Direction>& axes) {
  const auto ops = dirac::build_context(p, m);
  merge(agg, order, dirac::spin_forms_check(ops));
  merge(agg, order, dirac::casimir_check(ops));
  merge(agg, order, dirac::evenness_check(ops));
  merge(agg, order, dirac::precession_check(ops));
  for (const auto& a : axes) {
    merge(agg, order, dirac::spin_spectrum_check(ops, a));
    if (m > 0.0) merge(agg, order, dirac::eigenstate_check(ops, a));
  }
  if (m > 0.0 && dot(p, p) > 0.0) merge(agg, order, dirac::hamiltonian_identity_check(ops));
  if (dot(p, p) > 0.0) merge(agg, order, dirac::massless_even_velocity_check(p));
}

// ---------------------------------------------------------------------------
// selftest

struct SuiteOutcome {
  std::string name;
  double worst;
  double tolerance;
  bool pass;
};

SuiteOutcome oracle_equivalence_suite(std::size_t samples) {
  std::mt19937_64 rng(20240601);
  double worst = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    const auto a = random_direction(rng);
    const auto b = random_direction(rng);
    const auto beta = random_velocity(rng, 0.999);
    worst = std::max(worst, std::fabs(eprb_closed_form(a, b, beta) - eprb_oracle(a, b, beta)));
  }
  return {"oracle_equivalence", worst, 1e-12, worst < 1e-12};
}

SuiteOutcome tsirelson_suite(std::size_t samples) {
  std::mt19937_64 rng(20240602);
  double worst = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    const auto s = random_settings(rng);
    const auto beta = random_velocity(rng, 0.999);
    worst = std::max(worst, std::fabs(chsh_value(s, beta)));
  }
  const double bound = 2.0 * std::sqrt(2.0) + 1e-9;
  return {"tsirelson_bound", worst, bound, worst <= bound};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Relativistic EPR-Bohm spin correlations, CHSH scans, Dirac identity checks and QKD audits",
               "relspin"};
  app.require_subcommand(1, 1);

  std::string out_path;
  const auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "Write output atomically to PATH instead of standard output");
  };

  std::string a_text;
  std::string b_text;
  std::string beta_text = "0,0,0";
  std::string settings_text;
  std::size_t grid = 0;
  std::vector<double> beta_mags;
  std::string p_text;
  double mass = 1.0;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  std::string dist_path;
  double threshold = kDefaultAlarmThreshold;
  std::size_t oracle_samples = 10'000;
  std::size_t tsirelson_samples = 100'000;

  auto* correlate = app.add_subcommand("correlate", "Closed-form and matrix-oracle correlation E(a,b)");
  correlate->add_option("--a", a_text, "Detector axis a as x,y,z")->required();
  correlate->add_option("--b", b_text, "Detector axis b as x,y,z")->required();
  correlate->add_option("--beta", beta_text, "Beam velocity as x,y,z");
  add_out(correlate);

  auto* chsh = app.add_subcommand("chsh", "CHSH value at one beam velocity");
  chsh->add_option("--beta", beta_text, "Beam velocity as x,y,z");
  chsh->add_option("--settings", settings_text, "a,a',b,b' as 12 comma-separated numbers");
  add_out(chsh);

  auto* fig1 = app.add_subcommand("fig1", "Orthogonal-pair correlation vs proper-time shift (CSV)");
  fig1->add_option("--grid", grid, "Number of beta points on [0,1] (default 101)")->check(CLI::PositiveNumber);
  add_out(fig1);

  auto* fig2 = app.add_subcommand("fig2", "CHSH over beam direction at fixed speed (CSV)");
  fig2->add_option("--grid", grid, "Points per angle (default 61)")->check(CLI::PositiveNumber);
  fig2->add_option("--beta-mag", beta_mags, "Beam speed(s); default 0.99 and 0.95");
  fig2->add_option("--settings", settings_text, "a,a',b,b' as 12 comma-separated numbers");
  add_out(fig2);

  auto* fig3 = app.add_subcommand("fig3", "CHSH over in-plane beam velocity (CSV)");
  fig3->add_option("--grid", grid, "Points per axis (default 101)")->check(CLI::PositiveNumber);
  fig3->add_option("--settings", settings_text, "a,a',b,b' as 12 comma-separated numbers");
  add_out(fig3);

  auto* dirac_check = app.add_subcommand("dirac-check", "Free Dirac operator identities (JSON)");
  dirac_check->add_option("--p", p_text, "Momentum as x,y,z (default: random trials)");
  dirac_check->add_option("--m", mass, "Mass used with --p (default 1)");
  dirac_check->add_option("--a", a_text, "Spin axis used with --p");
  dirac_check->add_option("--trials", trials, "Random contexts when --p is absent (default 100)");
  dirac_check->add_option("--seed", seed, "Seed for random trials");
  add_out(dirac_check);

  auto* crypto = app.add_subcommand("crypto-audit", "False-alarm audit for a beam velocity distribution (JSON)");
  crypto->add_option("--dist", dist_path, "CSV with header beta_x,beta_y,beta_z,weight")->required();
  crypto->add_option("--threshold", threshold, "Alarm threshold on |CHSH| (default 2.7)");
  crypto->add_option("--settings", settings_text, "a,a',b,b' as 12 comma-separated numbers");
  add_out(crypto);

  auto* selftest = app.add_subcommand("selftest", "Oracle-equivalence and Tsirelson-bound suites");
  selftest->add_option("--oracle-samples", oracle_samples, "Samples for the oracle suite (default 10000)");
  selftest->add_option("--tsirelson-samples", tsirelson_samples, "Samples for the Tsirelson suite (default 100000)");
  add_out(selftest);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    std::ostringstream text;
    int status = kOk;

    if (correlate->parsed()) {
      const auto a = parse_direction(a_text, "--a", err);
      const auto b = parse_direction(b_text, "--b", err);
      const BeamVelocity beta(parse_vec(beta_text, "--beta"));
      const double closed = eprb_closed_form(a, b, beta);
      const double oracle = eprb_oracle(a, b, beta);
      nlohmann::ordered_json j = {{"closed_form", closed}, {"oracle", oracle}, {"difference", closed - oracle}};
      text << j.dump(2) << "\n";
    } else if (chsh->parsed()) {
      const BeamVelocity beta(parse_vec(beta_text, "--beta"));
      text << format_double(chsh_value(parse_settings(settings_text, err), beta)) << "\n";
    } else if (fig1->parsed()) {
      const auto betas = linspace(0.0, 1.0, grid ? grid : 101);
      text << to_csv(proper_time_comparison(betas));
    } else if (fig2->parsed()) {
      const std::size_t n = grid ? grid : 61;
      const auto settings = parse_settings(settings_text, err);
      if (beta_mags.empty()) beta_mags = {0.99, 0.95};
      const auto thetas = linspace(0.0, M_PI, n);
      const auto phis = periodic_grid(0.0, 2.0 * M_PI, n);
      std::vector<ScanTable> tables;
      for (const double mag : beta_mags) tables.push_back(scan_theta_phi(settings, mag, thetas, phis));
      text << to_csv(tables);
    } else if (fig3->parsed()) {
      const std::size_t n = grid ? grid : 101;
      const auto settings = parse_settings(settings_text, err);
      text << to_csv(scan_beta_phi(settings, linspace(0.0, 1.0, n), periodic_grid(0.0, 2.0 * M_PI, n)));
    } else if (dirac_check->parsed()) {
      std::map<std::string, Aggregate> agg;
      std::vector<std::string> order;
      if (!p_text.empty()) {
        const Vec3 p = parse_vec(p_text, "--p");
        std::vector<Direction> axes;
        if (!a_text.empty()) {
          axes.push_back(parse_direction(a_text, "--a", err));
        } else {
          axes = {Direction::x_axis(), Direction::y_axis(), Direction::z_axis(), Direction::normalize({1, 1, 1})};
        }
        run_dirac_suite(agg, order, p, mass, axes);
      } else {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> component(-3.0, 3.0);
        std::uniform_real_distribution<double> mass_dist(0.1, 3.0);
        for (std::size_t t = 0; t < trials; ++t) {
          const Vec3 p{component(rng), component(rng), component(rng)};
          const double m = mass_dist(rng);
          run_dirac_suite(agg, order, p, m, {random_direction(rng)});
        }
      }
      nlohmann::ordered_json records = nlohmann::ordered_json::array();
      for (const auto& name : order) {
        const auto& a = agg.at(name);
        records.push_back(
            {{"check", name}, {"max_residual", a.max_residual}, {"tolerance", a.tolerance}, {"pass", a.pass}});
        if (!a.pass) {
          err << "error: check " << name << " failed\n";
          status = kComputation;
        }
      }
      text << records.dump(2) << "\n";
    } else if (crypto->parsed()) {
      std::ifstream file(dist_path);
      if (!file) throw UsageError("cannot read distribution file " + dist_path);
      const auto distribution = load_distribution(file);
      const auto report = audit(distribution, parse_settings(settings_text, err), threshold);
      text << to_json(report);
      if (report.verdict == Verdict::FalseAlarmRisk) status = kAlarm;
    } else if (selftest->parsed()) {
      for (const auto& suite : {oracle_equivalence_suite(oracle_samples), tsirelson_suite(tsirelson_samples)}) {
        text << suite.name << " " << (suite.pass ? "PASS" : "FAIL") << " worst=" << format_double(suite.worst)
             << " limit=" << format_double(suite.tolerance) << "\n";
        if (!suite.pass) status = kComputation;
      }
    }

    emit(text.str(), out_path, out);
    return status;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.name() << ": " << e.what() << "\n";
    return kComputation;
  }
}

}  // namespace relspin::cli
