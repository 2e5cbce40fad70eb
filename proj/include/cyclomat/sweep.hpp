#pragma once

// Claim registry and the parallel sweep runner behind the CLI.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cyclomat/finite_field.hpp"
#include "cyclomat/report.hpp"
#include "cyclomat/theorems.hpp"

namespace cyclomat {

/// Every claim id understood by run_claim, in a fixed order.
const std::vector<std::string>& claim_ids();
bool is_claim(const std::string& id);

/// Optional pins for a claim's free parameters; unset ones are enumerated
/// over their full admissible range.
struct ClaimArgs {
  std::optional<std::vector<std::int64_t>> r;
  std::optional<std::uint32_t> k;
  std::optional<std::int64_t> a;
  std::optional<std::int64_t> b;
  std::optional<std::uint32_t> m;
  std::optional<std::int64_t> psi;
  VerifyOptions options;
};

/// Runs one claim over `field`, one report per enumerated parameter tuple.
/// Inapplicable fields produce a single skipped report.
std::vector<VerificationReport> run_claim(const std::string& id, const FiniteField& field, const ClaimArgs& args);

struct Congruence {
  std::uint32_t modulus = 1;
  std::uint32_t residue = 0;
};

struct SweepConfig {
  std::uint32_t q_min = 3;
  std::uint32_t q_max = 31;
  std::vector<Congruence> congruences;
  /// nullopt selects every admissible r.
  std::optional<std::vector<std::int64_t>> r;
  std::vector<std::string> claims;
  Backend backend = Backend::both;
  int precision_bits = default_precision_bits();
  unsigned parallelism = 0;  // 0: hardware concurrency
  std::string format = "json";
  std::string output;

  /// Parses and validates; unknown keys and bad values throw InvalidParameter.
  static SweepConfig from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

struct SweepSummary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skipped = 0;
};

struct SweepResult {
  std::vector<VerificationReport> reports;
  SweepSummary summary;
};

/// Odd prime powers in [q_min, q_max] passing every congruence filter.
std::vector<std::uint32_t> sweep_moduli(const SweepConfig& config);

/// Runs every (claim, q, parameter) task on a worker pool; reports come back
/// in task order regardless of scheduling.
SweepResult run_sweep(const SweepConfig& config);

SweepSummary summarize(const std::vector<VerificationReport>& reports);

/// {"version", "config", "reports", "summary"}.
nlohmann::json sweep_json(const SweepConfig& config, const SweepResult& result);
/// claim_id,p,n,q,k,r,status,backend,lhs_hash,rhs_hash,elapsed_ms
std::string sweep_csv(const SweepResult& result);
std::string sweep_text(const SweepResult& result);
std::string render_sweep(const SweepConfig& config, const SweepResult& result);

/// 64-bit FNV-1a of the compact JSON rendering, as 16 hex digits.
std::string value_hash(const nlohmann::json& value);

}  // namespace cyclomat
