#pragma once

// Residual checks of the functional equations and closed forms, collected
// into a serializable report.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tornheim/quadrature.hpp"
#include "tornheim/tornheim_eval.hpp"

namespace tornheim {

struct IdentityCase {
  std::string identity_id;
  nlohmann::json params;
  Complex lhs;
  Complex rhs;
  double abs_err = 0.0;
  double rel_err = 0.0;
  double tol = 0.0;
  bool pass = false;
  /// Failure reason or a remark about the case; omitted from JSON when empty.
  std::string note;
};

struct ReportSummary {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
};

struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  nlohmann::json settings;
  std::vector<IdentityCase> cases;

  ReportSummary summary() const;
  bool all_passed() const { return summary().failed == 0; }
};

struct VerifySettings {
  std::uint64_t seed = 0;
  /// Replaces every case's own tolerance when set.
  std::optional<double> tol;
  int grid_points = 20;
  SummationSettings summation;
  QuadSettings quad;

  nlohmann::json to_json() const;
};

/// Suite identifiers accepted by run_suite: every identity tag plus "all".
const std::vector<std::string>& suite_ids();

/// Random points with Re s_i in (1.5, 3.5) and |Im s_i| <= 2.
std::vector<TornheimArgs> theorem_grid(std::uint64_t seed, int count);

VerificationReport verify_theorem_i(const std::vector<TornheimArgs>& points, const VerifySettings& settings);
VerificationReport verify_theorem_ii(const std::vector<TornheimArgs>& points, const VerifySettings& settings);
/// Each point (s1, s2) with Re s_i < 0; plain and reflected forms.
VerificationReport verify_lemma3(const std::vector<std::pair<Complex, Complex>>& points,
                                 const VerifySettings& settings);
/// Each point (s1, s2) with Re s_i > 1.
VerificationReport verify_prop4(const std::vector<std::pair<Complex, Complex>>& points,
                                const VerifySettings& settings);

/// Runs one identity battery, or all of them for "all". Cases are sorted by
/// identity_id then params. Throws DomainError on an unknown id.
VerificationReport run_suite(const std::string& id, const VerifySettings& settings);
VerificationReport run_all(const VerifySettings& settings);

/// pass <=> abs_err <= tol or rel_err <= tol, with rel_err = abs_err / |rhs|.
IdentityCase make_case(std::string id, nlohmann::json params, Complex lhs, Complex rhs, double tol,
                       std::string note = {});

nlohmann::json to_json(const VerificationReport& report);
VerificationReport report_from_json(const nlohmann::json& j);
std::string to_csv(const VerificationReport& report);
std::string to_text(const VerificationReport& report);

}  // namespace tornheim
