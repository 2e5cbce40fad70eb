#include "cyclomat/report.hpp"

namespace cyclomat {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::skipped:
      return "skipped";
  }
  return "unknown";
}

std::string to_string(Backend b) {
  switch (b) {
    case Backend::exact:
      return "exact";
    case Backend::numeric:
      return "numeric";
    case Backend::both:
      return "both";
  }
  return "unknown";
}

nlohmann::json render(const CycNum& a) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const mpq_class& c : a.coeffs()) {
    coeffs.push_back({c.get_num().get_str(), c.get_den().get_str()});
  }
  return {{"conductor", a.conductor()}, {"coeffs", coeffs}};
}

nlohmann::json render(const ComplexApprox& z) {
  const int digits = static_cast<int>(z.precision() * 0.30103) + 1;
  return {{"re", z.re().to_string(digits)}, {"im", z.im().to_string(digits)}, {"precision_bits", z.precision()}};
}

nlohmann::json render(const FiniteField& field, const FieldElement& x) {
  return {{"field", {field.p(), field.n()}}, {"coeffs", x.coeffs}};
}

VerificationReport VerificationReport::skipped(std::string claim_id, std::string reason) {
  VerificationReport r;
  r.claim_id = std::move(claim_id);
  r.status = Status::skipped;
  r.reason = std::move(reason);
  return r;
}

void VerificationReport::add_check(VerificationReport check) {
  if (check.status == Status::fail && status != Status::fail) {
    status = Status::fail;
    if (reason.empty()) reason = check.claim_id + ": " + check.reason;
  }
  checks.push_back(std::move(check));
}

void VerificationReport::fail(const std::string& why) {
  if (status != Status::fail && reason.empty()) reason = why;
  status = Status::fail;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [key, value] : parameters) params[key] = value;
  nlohmann::json out = {{"claim_id", claim_id},
                        {"parameters", params},
                        {"lhs", lhs},
                        {"rhs", rhs},
                        {"status", to_string(status)},
                        {"backend", to_string(backend)},
                        {"elapsed_ms", elapsed_ms}};
  if (!reason.empty()) out["reason"] = reason;
  if (!checks.empty()) {
    nlohmann::json sub = nlohmann::json::array();
    for (const auto& c : checks) sub.push_back(c.to_json());
    out["checks"] = sub;
  }
  return out;
}

}  // namespace cyclomat
