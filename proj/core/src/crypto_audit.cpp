#include "relspin/crypto_audit.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "relspin/errors.hpp"
#include "relspin/format.hpp"

namespace relspin {

namespace {

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

double parse_number(std::string_view field, std::size_t line_no) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size() || !std::isfinite(value)) {
    throw Error(ErrorCode::ParseError,
                "line " + std::to_string(line_no) + ": '" + std::string(field) + "' is not a number");
  }
  return value;
}

}  // namespace

VelocityDistribution VelocityDistribution::from_samples(std::vector<VelocitySample> samples) {
  if (samples.empty()) throw Error(ErrorCode::EmptyDistribution, "velocity distribution has no samples");
  CompensatedSum total;
  for (const auto& s : samples) {
    if (!(s.beta.magnitude() < 1.0)) {
      throw Error(ErrorCode::SuperluminalSample,
                  "sample with |beta| = " + format_double(s.beta.magnitude()) + " is not below 1");
    }
    if (!(s.weight > 0.0) || !std::isfinite(s.weight)) {
      throw Error(ErrorCode::InvalidArgument, "sample weights must be positive and finite");
    }
    total.add(s.weight);
  }
  const double norm = total.value();
  for (auto& s : samples) s.weight /= norm;
  return VelocityDistribution(std::move(samples));
}

VelocityDistribution VelocityDistribution::delta(const BeamVelocity& beta) {
  return from_samples({{beta, 1.0}});
}

VelocityDistribution VelocityDistribution::mix(const VelocityDistribution& other, double w) const {
  if (!(w > 0.0 && w < 1.0)) throw Error(ErrorCode::InvalidArgument, "mixing weight must lie in (0, 1)");
  std::vector<VelocitySample> merged;
  for (const auto& s : samples_) merged.push_back({s.beta, w * s.weight});
  for (const auto& s : other.samples_) merged.push_back({s.beta, (1.0 - w) * s.weight});
  return VelocityDistribution(std::move(merged));
}

VelocityDistribution load_distribution(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::vector<VelocitySample> samples;

  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view content = trim(line);
    if (content.empty()) continue;
    const auto fields = split(content);
    if (!have_header) {
      if (fields != std::vector<std::string_view>{"beta_x", "beta_y", "beta_z", "weight"}) {
        throw Error(ErrorCode::ParseError,
                    "line " + std::to_string(line_no) + ": expected header beta_x,beta_y,beta_z,weight");
      }
      have_header = true;
      continue;
    }
    if (fields.size() != 4) {
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(line_no) + ": expected 4 fields, found " + std::to_string(fields.size()));
    }
    const Vec3 beta{parse_number(fields[0], line_no), parse_number(fields[1], line_no),
                    parse_number(fields[2], line_no)};
    const double weight = parse_number(fields[3], line_no);
    if (!(norm(beta) < 1.0)) {
      throw Error(ErrorCode::SuperluminalSample,
                  "line " + std::to_string(line_no) + ": row '" + std::string(content) + "' has |beta| = " +
                      format_double(norm(beta)) + " >= 1");
    }
    if (!(weight > 0.0)) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": weight must be positive");
    }
    samples.push_back({BeamVelocity(beta), weight});
  }
  if (!have_header) throw Error(ErrorCode::ParseError, "line 1: missing header beta_x,beta_y,beta_z,weight");
  return VelocityDistribution::from_samples(std::move(samples));
}

VelocityDistribution load_distribution(std::string_view text) {
  std::istringstream in{std::string(text)};
  return load_distribution(in);
}

namespace {

std::vector<SampleContribution> contributions(const VelocityDistribution& d, const ChshSettings& s) {
  std::vector<SampleContribution> out;
  out.reserve(d.samples().size());
  for (std::size_t k = 0; k < d.samples().size(); ++k) {
    const auto& sample = d.samples()[k];
    double c = 0.0;
    try {
      c = chsh_value(s, sample.beta);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegenerateObservable) throw;
      throw Error(ErrorCode::DegenerateObservable, "sample " + std::to_string(k) + ": " + e.what());
    }
    out.push_back({sample.beta.vec(), sample.weight, c, sample.weight * c});
  }
  return out;
}

double weighted_total(const std::vector<SampleContribution>& parts) {
  CompensatedSum sum;
  for (const auto& p : parts) sum.add(p.weighted);
  return sum.value();
}

}  // namespace

double expected_chsh(const VelocityDistribution& d, const ChshSettings& s) {
  return weighted_total(contributions(d, s));
}

std::string_view to_string(Verdict v) noexcept {
  return v == Verdict::NoAlarm ? "NoAlarm" : "FalseAlarmRisk";
}

AuditReport audit(const VelocityDistribution& d, const ChshSettings& s, double alarm_threshold) {
  if (!(alarm_threshold > 0.0 && alarm_threshold <= 2.0 * std::sqrt(2.0))) {
    throw Error(ErrorCode::InvalidArgument, "alarm threshold must lie in (0, 2*sqrt(2)]");
  }
  AuditReport report{};
  report.breakdown = contributions(d, s);
  report.expected_chsh = weighted_total(report.breakdown);
  report.ideal_chsh = chsh_value(s, BeamVelocity::rest());
  report.degradation = std::fabs(report.ideal_chsh) - std::fabs(report.expected_chsh);
  report.alarm_threshold = alarm_threshold;
  report.verdict = std::fabs(report.expected_chsh) < alarm_threshold ? Verdict::FalseAlarmRisk : Verdict::NoAlarm;
  return report;
}

std::string to_json(const AuditReport& report) {
  nlohmann::ordered_json breakdown = nlohmann::ordered_json::array();
  for (const auto& c : report.breakdown) {
    breakdown.push_back({{"beta", {c.beta.x, c.beta.y, c.beta.z}},
                         {"weight", c.weight},
                         {"chsh", c.chsh},
                         {"weighted_contribution", c.weighted}});
  }
  const nlohmann::ordered_json j = {
      {"expected_chsh", report.expected_chsh},
      {"ideal_chsh", report.ideal_chsh},
      {"degradation", report.degradation},
      {"alarm_threshold", report.alarm_threshold},
      {"verdict", std::string(to_string(report.verdict))},
      {"breakdown", breakdown},
      {"threshold_semantics",
       "operator-chosen alarm rule: FalseAlarmRisk iff |expected_chsh| < alarm_threshold"},
  };
  return j.dump(2) + "\n";
}

}  // namespace relspin
