#include "cyclomat/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <thread>

#include "cyclomat/arith.hpp"
#include "cyclomat/errors.hpp"
#include "cyclomat/matrices.hpp"

namespace cyclomat {

namespace {

std::vector<std::int64_t> all_r(const FiniteField& field) {
  std::vector<std::int64_t> out;
  for (std::int64_t r = 1; r <= static_cast<std::int64_t>(field.q()) - 2; ++r) out.push_back(r);
  return out;
}

std::vector<std::int64_t> selected_r(const FiniteField& field, const ClaimArgs& args) {
  if (!args.r) return all_r(field);
  return *args.r;
}

// Divisors k of q-1 with 1 < k < q-1 and (q-1)/k even.
std::vector<std::uint32_t> even_cofactor_k(const FiniteField& field) {
  std::vector<std::uint32_t> out;
  const std::uint32_t order = field.group_order();
  for (std::uint64_t k : divisors(order)) {
    if (k > 1 && k < order && (order / k) % 2 == 0) out.push_back(static_cast<std::uint32_t>(k));
  }
  return out;
}

VerificationReport skipped_for(const std::string& id, const FiniteField& field, const std::string& why) {
  VerificationReport r = VerificationReport::skipped(id, why);
  r.parameters = {{"p", field.p()}, {"n", field.n()}, {"q", field.q()}};
  return r;
}

}  // namespace

const std::vector<std::string>& claim_ids() {
  static const std::vector<std::string> ids = {
      "thm1.i",   "thm1.ii",      "thm2",  "thm3.i",   "thm3.ii",  "thm3.iii", "thm3.iii.corrected",
      "class_number", "mordell", "lemma3.1", "lemma2.1", "lemma2.2", "eq1.1",    "eq1.2",
      "eigen.M",  "eigen.N"};
  return ids;
}

bool is_claim(const std::string& id) {
  const auto& ids = claim_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

std::vector<VerificationReport> run_claim(const std::string& id, const FiniteField& field, const ClaimArgs& args) {
  if (!is_claim(id)) throw InvalidParameter("unknown claim '" + id + "'");
  const VerifyOptions& opts = args.options;
  const std::uint32_t q = field.q();
  std::vector<VerificationReport> out;
  // Wall time per report, measured around each verifier call.
  auto timed = [&out](auto&& fn) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report = fn();
    report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(report));
  };

  auto per_r = [&](const std::function<VerificationReport(std::int64_t)>& fn) {
    for (std::int64_t r : selected_r(field, args)) timed([&] { return fn(r); });
  };
  auto per_k = [&](const std::function<VerificationReport(std::uint32_t)>& fn) {
    const auto ks = args.k ? std::vector<std::uint32_t>{*args.k} : even_cofactor_k(field);
    if (ks.empty()) out.push_back(skipped_for(id, field, "no divisor k of q-1 with (q-1)/k even"));
    for (std::uint32_t k : ks) timed([&] { return fn(k); });
  };

  if (id == "thm1.i") {
    per_r([&](std::int64_t r) { return verify_thm1_i(field, r, opts); });
  } else if (id == "thm1.ii") {
    per_k([&](std::uint32_t k) { return verify_thm1_ii(field, k, opts); });
  } else if (id == "thm2") {
    per_r([&](std::int64_t r) { return verify_thm2(field, r, opts); });
  } else if (id == "thm3.i") {
    per_k([&](std::uint32_t k) { return verify_thm3_i(field, k); });
  } else if (id == "thm3.ii") {
    timed([&] { return verify_thm3_ii(field); });
  } else if (id == "thm3.iii") {
    per_r([&](std::int64_t r) { return verify_thm3_iii(field, r); });
  } else if (id == "thm3.iii.corrected") {
    per_r([&](std::int64_t r) { return verify_thm3_iii_corrected(field, r); });
  } else if (id == "class_number" || id == "mordell") {
    if (field.n() != 1) {
      out.push_back(skipped_for(id, field, "needs a prime field"));
    } else {
      timed([&] { return id == "mordell" ? verify_mordell(field.p()) : verify_class_number(field.p()); });
    }
  } else if (id == "lemma3.1") {
    const std::int64_t top = static_cast<std::int64_t>(q) - 2;
    for (std::int64_t a = args.a.value_or(1); a <= (args.a ? *args.a : top); ++a) {
      for (std::int64_t b = args.b.value_or(0); b <= (args.b ? *args.b : top); ++b) {
        timed([&] { return verify_lemma31(field, a, b); });
      }
    }
  } else if (id == "lemma2.1") {
    std::vector<std::uint32_t> ms;
    if (args.m) {
      ms.push_back(*args.m);
    } else {
      for (std::uint64_t m : divisors(field.group_order()))
        if (m > 1) ms.push_back(static_cast<std::uint32_t>(m));
    }
    for (std::uint32_t m : ms) {
      const std::int64_t lo = args.psi.value_or(0);
      const std::int64_t hi = args.psi ? *args.psi : static_cast<std::int64_t>(q) - 2;
      for (std::int64_t psi = lo; psi <= hi; ++psi) timed([&] { return verify_lemma21(field, m, psi, opts); });
    }
  } else if (id == "lemma2.2") {
    const std::int64_t top = static_cast<std::int64_t>(q) - 2;
    for (std::int64_t a = args.a.value_or(1); a <= (args.a ? *args.a : top); ++a) {
      for (std::int64_t b = args.b.value_or(1); b <= (args.b ? *args.b : top); ++b) {
        timed([&] { return verify_lemma22(field, a, b, opts); });
      }
    }
  } else if (id == "eq1.1") {
    timed([&] { return verify_quadratic_gauss(field, opts); });
  } else if (id == "eq1.2") {
    if (field.n() != 1) {
      out.push_back(skipped_for(id, field, "needs a prime field"));
    } else {
      const std::int64_t lo = args.psi.value_or(1);
      const std::int64_t hi = args.psi ? *args.psi : static_cast<std::int64_t>(q) - 2;
      for (std::int64_t psi = lo; psi <= hi; ++psi) {
        timed([&] { return verify_carlitz(field, psi, opts.precision_bits, opts.rel_tol, opts.exact_gauss); });
      }
    }
  } else if (id == "eigen.M" || id == "eigen.N") {
    const bool is_m = id == "eigen.M";
    if (is_m ? q % 4 != 3 : q % 8 != 5) {
      out.push_back(skipped_for(id, field, is_m ? "needs q = 3 (mod 4)" : "needs q = 5 (mod 8)"));
    } else {
      per_r([&](std::int64_t r) {
        return eigen_structure_check(field, r, is_m ? EigenVariant::M : EigenVariant::N);
      });
    }
  }
  return out;
}

SweepConfig SweepConfig::from_json(const nlohmann::json& j) {
  static const std::set<std::string> known = {"q_min",   "q_max",          "congruences", "r",
                                              "claims",  "backend",        "precision_bits",
                                              "parallelism", "format",     "output"};
  if (!j.is_object()) throw InvalidParameter("sweep config must be a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (!known.count(key)) throw InvalidParameter("unknown config key '" + key + "'");
  }
  SweepConfig c;
  try {
    if (j.contains("q_min")) c.q_min = j.at("q_min").get<std::uint32_t>();
    if (j.contains("q_max")) c.q_max = j.at("q_max").get<std::uint32_t>();
    if (j.contains("congruences")) {
      for (const auto& item : j.at("congruences")) {
        for (const auto& [key, _] : item.items()) {
          if (key != "modulus" && key != "residue") throw InvalidParameter("unknown congruence key '" + key + "'");
        }
        Congruence cg{item.at("modulus").get<std::uint32_t>(), item.at("residue").get<std::uint32_t>()};
        if (cg.modulus == 0 || cg.residue >= cg.modulus) throw InvalidParameter("congruence needs 0 <= residue < modulus");
        c.congruences.push_back(cg);
      }
    }
    if (j.contains("r")) {
      const auto& r = j.at("r");
      if (r.is_string()) {
        if (r.get<std::string>() != "all") throw InvalidParameter("r must be \"all\" or a list of integers");
      } else {
        c.r = r.get<std::vector<std::int64_t>>();
      }
    }
    if (j.contains("claims")) c.claims = j.at("claims").get<std::vector<std::string>>();
    if (j.contains("backend")) {
      const auto b = j.at("backend").get<std::string>();
      if (b == "exact") c.backend = Backend::exact;
      else if (b == "numeric") c.backend = Backend::numeric;
      else if (b == "both") c.backend = Backend::both;
      else throw InvalidParameter("backend must be exact, numeric or both");
    }
    if (j.contains("precision_bits")) c.precision_bits = j.at("precision_bits").get<int>();
    if (j.contains("parallelism")) c.parallelism = j.at("parallelism").get<unsigned>();
    if (j.contains("format")) c.format = j.at("format").get<std::string>();
    if (j.contains("output")) c.output = j.at("output").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidParameter(std::string("malformed sweep config: ") + e.what());
  }
  if (c.q_min > c.q_max) throw InvalidParameter("q_min must not exceed q_max");
  if (c.q_max > (1U << 24)) throw InvalidParameter("q_max too large");
  if (c.precision_bits < kMinPrecisionBits) throw InvalidParameter("precision_bits must be at least 53");
  if (c.claims.empty()) throw InvalidParameter("claims must be nonempty");
  for (const auto& id : c.claims) {
    if (!is_claim(id)) throw InvalidParameter("unknown claim '" + id + "'");
  }
  if (c.format != "json" && c.format != "csv" && c.format != "text") {
    throw InvalidParameter("format must be json, csv or text");
  }
  return c;
}

nlohmann::json SweepConfig::to_json() const {
  nlohmann::json cong = nlohmann::json::array();
  for (const auto& cg : congruences) cong.push_back({{"modulus", cg.modulus}, {"residue", cg.residue}});
  nlohmann::json j = {{"q_min", q_min},
                      {"q_max", q_max},
                      {"congruences", cong},
                      {"claims", claims},
                      {"backend", to_string(backend)},
                      {"precision_bits", precision_bits},
                      {"format", format}};
  if (r) j["r"] = *r;
  else j["r"] = "all";
  if (!output.empty()) j["output"] = output;
  // parallelism is deliberately left out: it cannot change the results.
  return j;
}

std::vector<std::uint32_t> sweep_moduli(const SweepConfig& config) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t q = std::max<std::uint32_t>(config.q_min, 3); q <= config.q_max; ++q) {
    const PrimePower pp = as_prime_power(q);
    if (pp.p == 0 || pp.p == 2) continue;
    bool ok = true;
    for (const auto& cg : config.congruences) ok = ok && q % cg.modulus == cg.residue;
    if (ok) out.push_back(q);
  }
  return out;
}

SweepSummary summarize(const std::vector<VerificationReport>& reports) {
  SweepSummary s;
  for (const auto& r : reports) {
    switch (r.status) {
      case Status::pass:
        ++s.pass;
        break;
      case Status::fail:
        ++s.fail;
        break;
      case Status::skipped:
        ++s.skipped;
        break;
    }
  }
  return s;
}

SweepResult run_sweep(const SweepConfig& config) {
  struct Task {
    std::string claim;
    std::size_t field_index;
    std::optional<std::int64_t> r;
  };
  const auto moduli = sweep_moduli(config);
  std::vector<FiniteField> fields;
  for (std::uint32_t q : moduli) {
    const PrimePower pp = as_prime_power(q);
    fields.push_back(FiniteField::make(static_cast<std::uint32_t>(pp.p), pp.n));
  }
  static const std::set<std::string> per_r_claims = {"thm1.i", "thm2", "thm3.iii", "thm3.iii.corrected", "eigen.M",
                                                     "eigen.N"};
  std::vector<Task> tasks;
  for (std::size_t f = 0; f < fields.size(); ++f) {
    for (const auto& claim : config.claims) {
      if (per_r_claims.count(claim)) {
        const auto rs = config.r ? *config.r : all_r(fields[f]);
        for (std::int64_t r : rs) tasks.push_back({claim, f, r});
      } else {
        tasks.push_back({claim, f, std::nullopt});
      }
    }
  }

  std::vector<std::vector<VerificationReport>> slots(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const Task& t = tasks[i];
      ClaimArgs args;
      args.options.backend = config.backend;
      args.options.precision_bits = config.precision_bits;
      if (t.r) args.r = std::vector<std::int64_t>{*t.r};
      try {
        slots[i] = run_claim(t.claim, fields[t.field_index], args);
      } catch (const std::exception& e) {
        VerificationReport r;
        r.claim_id = t.claim;
        r.parameters = {{"q", fields[t.field_index].q()}};
        if (t.r) r.parameters["r"] = *t.r;
        r.fail(std::string("error: ") + e.what());
        slots[i] = {std::move(r)};
      }
    }
  };
  unsigned threads = config.parallelism != 0 ? config.parallelism : std::thread::hardware_concurrency();
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1))));
  {
    std::vector<std::jthread> pool;
    for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
  }

  SweepResult result;
  for (auto& slot : slots) {
    for (auto& r : slot) result.reports.push_back(std::move(r));
  }
  result.summary = summarize(result.reports);
  return result;
}

nlohmann::json sweep_json(const SweepConfig& config, const SweepResult& result) {
  nlohmann::json reports = nlohmann::json::array();
  for (const auto& r : result.reports) reports.push_back(r.to_json());
  return {{"version", CYCLOMAT_VERSION},
          {"config", config.to_json()},
          {"reports", reports},
          {"summary", {{"pass", result.summary.pass}, {"fail", result.summary.fail}, {"skipped", result.summary.skipped}}}};
}

std::string value_hash(const nlohmann::json& value) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : value.dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

std::string param_or_empty(const VerificationReport& r, const char* key) {
  auto it = r.parameters.find(key);
  if (it == r.parameters.end()) return "";
  return it->second.is_string() ? it->second.get<std::string>() : it->second.dump();
}

}  // namespace

std::string sweep_csv(const SweepResult& result) {
  std::ostringstream out;
  out << "claim_id,p,n,q,k,r,status,backend,lhs_hash,rhs_hash,elapsed_ms\n";
  for (const auto& r : result.reports) {
    char elapsed[32];
    std::snprintf(elapsed, sizeof elapsed, "%.3f", r.elapsed_ms);
    out << r.claim_id << ',' << param_or_empty(r, "p") << ',' << param_or_empty(r, "n") << ','
        << param_or_empty(r, "q") << ',' << param_or_empty(r, "k") << ',' << param_or_empty(r, "r") << ','
        << to_string(r.status) << ',' << to_string(r.backend) << ',' << value_hash(r.lhs) << ','
        << value_hash(r.rhs) << ',' << elapsed << '\n';
  }
  return out.str();
}

std::string sweep_text(const SweepResult& result) {
  std::ostringstream out;
  for (const auto& r : result.reports) {
    out << to_string(r.status) << "  " << r.claim_id;
    for (const auto& [key, value] : r.parameters) out << ' ' << key << '=' << value.dump();
    if (!r.reason.empty()) out << "  (" << r.reason << ')';
    out << '\n';
  }
  out << "summary: " << result.summary.pass << " pass, " << result.summary.fail << " fail, "
      << result.summary.skipped << " skipped\n";
  return out.str();
}

std::string render_sweep(const SweepConfig& config, const SweepResult& result) {
  if (config.format == "csv") return sweep_csv(result);
  if (config.format == "text") return sweep_text(result);
  return sweep_json(config, result).dump(2) + "\n";
}

}  // namespace cyclomat
