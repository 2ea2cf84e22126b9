#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "relspin/bell.hpp"
#include "relspin/kinematics.hpp"

namespace relspin {

struct VelocitySample {
  BeamVelocity beta;
  double weight;
};

/// Discrete beam velocity distribution; weights positive and summing to 1,
/// every |beta| < 1.
class VelocityDistribution {
 public:
  /// Normalizes the weights. Throws EmptyDistribution, SuperluminalSample
  /// (|beta| >= 1) or InvalidArgument (non-positive weight).
  static VelocityDistribution from_samples(std::vector<VelocitySample> samples);
  static VelocityDistribution delta(const BeamVelocity& beta);

  const std::vector<VelocitySample>& samples() const noexcept { return samples_; }

  /// w * this + (1 - w) * other, concatenating the supports.
  VelocityDistribution mix(const VelocityDistribution& other, double w) const;

 private:
  explicit VelocityDistribution(std::vector<VelocitySample> samples) : samples_(std::move(samples)) {}
  std::vector<VelocitySample> samples_;
};

/// Parses CSV with header `beta_x,beta_y,beta_z,weight`. Errors carry the
/// 1-based line number (ParseError) or the offending row (SuperluminalSample).
VelocityDistribution load_distribution(std::istream& in);
VelocityDistribution load_distribution(std::string_view text);

/// Weighted ensemble average of per-velocity CHSH values (compensated sum).
double expected_chsh(const VelocityDistribution& d, const ChshSettings& s);

enum class Verdict { NoAlarm, FalseAlarmRisk };
std::string_view to_string(Verdict v) noexcept;

struct SampleContribution {
  Vec3 beta;
  double weight;
  double chsh;
  double weighted;
};

struct AuditReport {
  double expected_chsh;
  double ideal_chsh;  // same settings at rest
  double degradation; // |ideal| - |expected|
  double alarm_threshold;
  Verdict verdict;    // FalseAlarmRisk iff |expected| < threshold
  std::vector<SampleContribution> breakdown;
};

inline constexpr double kDefaultAlarmThreshold = 2.7;

/// Threshold must lie in (0, 2 sqrt 2].
AuditReport audit(const VelocityDistribution& d, const ChshSettings& s,
                  double alarm_threshold = kDefaultAlarmThreshold);

/// JSON object with snake_case keys; includes a note that the threshold is
/// an operator-chosen rule, not a physical constant.
std::string to_json(const AuditReport& report);

}  // namespace relspin
