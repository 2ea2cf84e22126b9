#include "relspin/bell.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "relspin/errors.hpp"
#include "relspin/format.hpp"
#include "relspin/spin_observables.hpp"

namespace relspin {

ChshSettings ChshSettings::standard() {
  return {Direction::normalize({1.0, 1.0, 0.0}), Direction::normalize({-1.0, 1.0, 0.0}),
          Direction::y_axis(), Direction::x_axis()};
}

double chsh_value(const ChshSettings& s, const BeamVelocity& beta, CorrelationRoute route) {
  const auto correlation = [&](const Direction& x, const Direction& y, const char* label) {
    try {
      return route == CorrelationRoute::ClosedForm ? eprb_closed_form(x, y, beta)
                                                   : eprb_oracle(x, y, beta);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegenerateObservable) throw;
      throw Error(ErrorCode::DegenerateObservable, std::string("CHSH term ") + label + ": " + e.what());
    }
  };
  return correlation(s.a, s.b, "E(a,b)") + correlation(s.a, s.b_prime, "E(a,b')") +
         correlation(s.a_prime, s.b, "E(a',b)") - correlation(s.a_prime, s.b_prime, "E(a',b')");
}

// ---------------------------------------------------------------------------
// Scan tables

std::size_t ScanTable::point_count() const {
  std::size_t count = 1;
  for (const auto& axis : axes) count *= axis.values.size();
  return count;
}

std::vector<double> ScanTable::coordinates(std::size_t flat) const {
  std::vector<double> coords(axes.size());
  for (std::size_t k = axes.size(); k-- > 0;) {
    const std::size_t n = axes[k].values.size();
    coords[k] = axes[k].values[flat % n];
    flat /= n;
  }
  return coords;
}

const std::optional<double>& ScanTable::at(std::size_t col, std::span<const std::size_t> index) const {
  std::size_t flat = 0;
  for (std::size_t k = 0; k < axes.size(); ++k) flat = flat * axes[k].values.size() + index[k];
  return columns.at(col).values.at(flat);
}

namespace {

void require_nonempty(std::span<const double> grid, const char* name) {
  if (grid.empty()) throw Error(ErrorCode::EmptyGrid, std::string(name) + " grid is empty");
}

void require_speeds(std::span<const double> grid) {
  for (const double b : grid) {
    if (!(b >= 0.0 && b <= 1.0)) {
      throw Error(ErrorCode::InvalidArgument, "beta grid value " + format_double(b) + " outside [0, 1]");
    }
  }
}

std::string describe(const ChshSettings& s) {
  const auto vec = [](const Direction& d) {
    return "(" + format_double(d.x()) + " " + format_double(d.y()) + " " + format_double(d.z()) + ")";
  };
  return "a=" + vec(s.a) + " a'=" + vec(s.a_prime) + " b=" + vec(s.b) + " b'=" + vec(s.b_prime);
}

std::optional<double> chsh_or_gap(const ChshSettings& s, const BeamVelocity& beta) {
  try {
    return chsh_value(s, beta);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DegenerateObservable) throw;
    return std::nullopt;
  }
}

}  // namespace

ScanTable scan_beta_phi(const ChshSettings& s, std::span<const double> beta_grid,
                        std::span<const double> phi_grid) {
  require_nonempty(beta_grid, "beta");
  require_nonempty(phi_grid, "phi");
  require_speeds(beta_grid);

  ScanTable table;
  table.kind = "beta_phi";
  table.metadata = {{"scan", "chsh over in-plane beam velocity beta*(cos phi, sin phi, 0)"},
                    {"settings", describe(s)}};
  table.axes = {{"beta", {beta_grid.begin(), beta_grid.end()}},
                {"phi", {phi_grid.begin(), phi_grid.end()}}};
  ScanColumn column{"chsh", {}};
  column.values.reserve(table.point_count());
  for (const double b : beta_grid)
    for (const double phi : phi_grid) column.values.push_back(chsh_or_gap(s, BeamVelocity::in_plane(b, phi)));
  table.columns.push_back(std::move(column));
  return table;
}

ScanTable scan_theta_phi(const ChshSettings& s, double beta_mag, std::span<const double> theta_grid,
                         std::span<const double> phi_grid) {
  require_nonempty(theta_grid, "theta");
  require_nonempty(phi_grid, "phi");
  const double mags[] = {beta_mag};
  require_speeds(mags);

  ScanTable table;
  table.kind = "theta_phi";
  table.metadata = {
      {"scan", "chsh over beam velocity beta_mag*(cos phi sin theta, sin phi sin theta, cos theta)"},
      {"settings", describe(s)}};
  table.constants = {{"beta_mag", beta_mag}};
  table.axes = {{"theta", {theta_grid.begin(), theta_grid.end()}},
                {"phi", {phi_grid.begin(), phi_grid.end()}}};
  ScanColumn column{"chsh", {}};
  column.values.reserve(table.point_count());
  for (const double theta : theta_grid)
    for (const double phi : phi_grid)
      column.values.push_back(chsh_or_gap(s, BeamVelocity::spherical(beta_mag, theta, phi)));
  table.columns.push_back(std::move(column));
  return table;
}

ScanTable proper_time_comparison(std::span<const double> beta_grid) {
  require_speeds(beta_grid);

  ScanTable table;
  table.kind = "proper_time";
  table.metadata = {{"scan", "orthogonal-pair correlation vs proper-time shift"}};
  table.axes = {{"beta", {beta_grid.begin(), beta_grid.end()}}};
  ScanColumn correlation{"eprb_orthogonal_pair", {}};
  ScanColumn proper_time{"proper_time_shift", {}};
  for (const double b : beta_grid) {
    const double b2 = b * b;
    correlation.values.push_back(-b2 / (2.0 - b2));
    proper_time.values.push_back(std::sqrt(1.0 - b2) - 1.0);
  }
  table.columns.push_back(std::move(correlation));
  table.columns.push_back(std::move(proper_time));
  return table;
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> out(n);
  if (n == 1) {
    out[0] = lo;
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = (i + 1 == n) ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  return out;
}

std::vector<double> periodic_grid(double lo, double hi, std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n);
  return out;
}

// ---------------------------------------------------------------------------
// Maximization

namespace {

class SettingsChart {
 public:
  explicit SettingsChart(const std::optional<Direction>& plane_normal) : planar_(plane_normal.has_value()) {
    if (planar_) {
      const auto frame = beam_frame(BeamVelocity::along(*plane_normal, 1.0));
      u_ = frame[0].vec();
      v_ = frame[1].vec();
    }
  }

  std::size_t dimension() const { return planar_ ? 4 : 8; }

  bool is_polar(std::size_t coord) const { return !planar_ && coord % 2 == 0; }

  ChshSettings settings(const std::vector<double>& x) const {
    return {direction(x, 0), direction(x, 1), direction(x, 2), direction(x, 3)};
  }

  std::vector<double> angles(const ChshSettings& s) const {
    std::vector<double> x;
    for (const Direction* d : {&s.a, &s.a_prime, &s.b, &s.b_prime}) {
      if (planar_) {
        x.push_back(std::atan2(dot(d->vec(), v_), dot(d->vec(), u_)));
      } else {
        x.push_back(std::acos(std::clamp(d->z(), -1.0, 1.0)));
        x.push_back(std::atan2(d->y(), d->x()));
      }
    }
    return x;
  }

 private:
  Direction direction(const std::vector<double>& x, std::size_t which) const {
    if (planar_) {
      const double psi = x[which];
      return Direction::normalize(std::cos(psi) * u_ + std::sin(psi) * v_);
    }
    return Direction::spherical(x[2 * which], x[2 * which + 1]);
  }

  bool planar_;
  Vec3 u_{};
  Vec3 v_{};
};

struct SearchResult {
  std::vector<double> x;
  double value;
  double coarse_value;
  std::vector<double> history;
};

SearchResult local_search(const SettingsChart& chart, const BeamVelocity& beta, std::vector<double> x,
                          const ChshSearchOptions& options) {
  const auto objective = [&](const std::vector<double>& point) {
    const auto c = chsh_or_gap(chart.settings(point), beta);
    return c ? std::fabs(*c) : 0.0;
  };

  double current = objective(x);
  std::vector<double> history{current};
  const auto grid_n = static_cast<std::size_t>(std::max(options.grid_points, 12));

  // Coarse stage: exhaustive 1-D sweeps along each angle until a full pass
  // brings no improvement.
  for (int pass = 0; pass < 50; ++pass) {
    bool improved = false;
    for (std::size_t i = 0; i < chart.dimension(); ++i) {
      const auto grid = chart.is_polar(i) ? linspace(0.0, M_PI, grid_n) : periodic_grid(0.0, 2.0 * M_PI, grid_n);
      for (const double g : grid) {
        std::vector<double> trial = x;
        trial[i] = g;
        const double f = objective(trial);
        if (f > current) {
          current = f;
          x = std::move(trial);
          history.push_back(current);
          improved = true;
        }
      }
    }
    if (!improved) break;
  }
  const double coarse = current;

  // Refinement: compass search with step halving.
  double step = 2.0 * M_PI / static_cast<double>(grid_n);
  std::size_t evaluations = 0;
  constexpr std::size_t kMaxEvaluations = 2'000'000;
  while (step >= options.tol && evaluations < kMaxEvaluations) {
    bool improved = false;
    for (std::size_t i = 0; i < chart.dimension(); ++i) {
      for (const double sign : {1.0, -1.0}) {
        std::vector<double> trial = x;
        trial[i] += sign * step;
        const double f = objective(trial);
        ++evaluations;
        if (f > current) {
          current = f;
          x = std::move(trial);
          history.push_back(current);
          improved = true;
          break;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return {std::move(x), current, coarse, std::move(history)};
}

}  // namespace

ChshOptimum maximize_chsh(const BeamVelocity& beta, const ChshSearchOptions& options) {
  if (options.restarts < 1) throw Error(ErrorCode::InvalidArgument, "restarts must be >= 1");
  if (!(options.tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tol must be positive");

  const SettingsChart chart(options.plane_normal);
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);

  std::optional<SearchResult> best;
  for (int r = 0; r < options.restarts; ++r) {
    std::vector<double> start;
    if (r == 0) {
      start = chart.angles(ChshSettings::standard());
    } else {
      start.resize(chart.dimension());
      for (std::size_t i = 0; i < start.size(); ++i) {
        start[i] = chart.is_polar(i) ? 0.5 * angle(rng) : angle(rng);
      }
    }
    SearchResult result = local_search(chart, beta, std::move(start), options);
    if (!best || result.value > best->value) best = std::move(result);
  }
  return {chart.settings(best->x), best->value, best->coarse_value, std::move(best->history)};
}

}  // namespace relspin
