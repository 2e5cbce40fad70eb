#pragma once

// Structured record of one identity check and its JSON rendering.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "cyclomat/complex_approx.hpp"
#include "cyclomat/cyclotomic.hpp"
#include "cyclomat/finite_field.hpp"

namespace cyclomat {

enum class Status { pass, fail, skipped };
enum class Backend { exact, numeric, both };

std::string to_string(Status s);
std::string to_string(Backend b);

/// {"conductor": m, "coeffs": [["num", "den"], ...]} with decimal strings.
nlohmann::json render(const CycNum& a);
/// {"re": "...", "im": "...", "precision_bits": n}.
nlohmann::json render(const ComplexApprox& z);
/// {"field": [p, n], "coeffs": [c_0, ..., c_{n-1}]}.
nlohmann::json render(const FiniteField& field, const FieldElement& x);

struct VerificationReport {
  std::string claim_id;
  /// Ordered so the rendering is deterministic.
  std::map<std::string, nlohmann::json> parameters;
  nlohmann::json lhs;
  nlohmann::json rhs;
  Status status = Status::pass;
  std::string reason;
  Backend backend = Backend::exact;
  double elapsed_ms = 0.0;
  /// Component checks (one per r, per eigenpair, ...) folded into status.
  std::vector<VerificationReport> checks;

  static VerificationReport skipped(std::string claim_id, std::string reason);

  /// Records a component check; any failing check fails the report.
  void add_check(VerificationReport check);
  /// Marks the report failed (keeps the first reason).
  void fail(const std::string& why);

  bool passed() const { return status == Status::pass; }
  nlohmann::json to_json() const;
};

}  // namespace cyclomat
