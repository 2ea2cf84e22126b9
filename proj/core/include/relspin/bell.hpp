#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "relspin/kinematics.hpp"

namespace relspin {

struct ChshSettings {
  Direction a;
  Direction a_prime;
  Direction b;
  Direction b_prime;

  /// a = (1,1,0)/sqrt2, a' = (-1,1,0)/sqrt2, b = (0,1,0), b' = (1,0,0):
  /// maximal violation at rest.
  static ChshSettings standard();

  friend bool operator==(const ChshSettings&, const ChshSettings&) = default;
};

enum class CorrelationRoute { ClosedForm, Oracle };

/// E(a,b) + E(a,b') + E(a',b) - E(a',b'). A DegenerateObservable error names
/// the failing setting.
double chsh_value(const ChshSettings& s, const BeamVelocity& beta,
                  CorrelationRoute route = CorrelationRoute::ClosedForm);

struct ScanAxis {
  std::string name;
  std::vector<double> values;
};

/// An empty optional marks a grid point whose observable was degenerate.
struct ScanColumn {
  std::string name;
  std::vector<std::optional<double>> values;
};

/// Values over the Cartesian product of `axes`, row-major (last axis fastest).
/// `constants` are fixed scan parameters repeated on every serialized row.
struct ScanTable {
  std::string kind;
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::pair<std::string, double>> constants;
  std::vector<ScanAxis> axes;
  std::vector<ScanColumn> columns;

  std::size_t point_count() const;
  /// Grid coordinates of flat point index `flat`.
  std::vector<double> coordinates(std::size_t flat) const;
  /// Value of column `col` at the given per-axis indices.
  const std::optional<double>& at(std::size_t col, std::span<const std::size_t> index) const;
};

/// CHSH over beta (cos phi, sin phi, 0). beta values must lie in [0, 1].
ScanTable scan_beta_phi(const ChshSettings& s, std::span<const double> beta_grid,
                        std::span<const double> phi_grid);

/// CHSH over beta_mag (cos phi sin theta, sin phi sin theta, cos theta).
ScanTable scan_theta_phi(const ChshSettings& s, double beta_mag, std::span<const double> theta_grid,
                         std::span<const double> phi_grid);

/// Columns: -beta^2/(2 - beta^2) (orthogonal settings at 45 degrees to the
/// beam) and sqrt(1 - beta^2) - 1 (proper-time shift).
ScanTable proper_time_comparison(std::span<const double> beta_grid);

/// n points evenly spaced on [lo, hi] including both ends (n = 1 gives lo).
std::vector<double> linspace(double lo, double hi, std::size_t n);
/// n points on [lo, hi) with spacing (hi - lo)/n.
std::vector<double> periodic_grid(double lo, double hi, std::size_t n);

struct ChshSearchOptions {
  int restarts = 4;
  double tol = 1e-9;
  std::uint64_t seed = 0;
  /// Per-coordinate sweep resolution of the coarse stage.
  int grid_points = 16;
  /// When set, all four settings are confined to the plane with this normal.
  std::optional<Direction> plane_normal;
};

struct ChshOptimum {
  ChshSettings settings;
  /// |c| at `settings`.
  double value;
  /// Best |c| after the coarse stage of the winning restart.
  double coarse_value;
  /// Accepted |c| values of the winning restart, non-decreasing.
  std::vector<double> history;
};

/// Multi-start derivative-free maximization of |chsh_value| over the setting
/// angles. Degenerate settings score 0.
ChshOptimum maximize_chsh(const BeamVelocity& beta, const ChshSearchOptions& options = {});

}  // namespace relspin
