// cyclomat: evaluate character sums, build cyclotomic matrices, and verify
// the determinant identities over ranges of finite fields.
//
// Exit codes: 0 all pass/skip, 1 some check failed, 2 usage or config error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclomat/char_sums.hpp"
#include "cyclomat/cyclotomic.hpp"
#include "cyclomat/errors.hpp"
#include "cyclomat/finite_field.hpp"
#include "cyclomat/matrices.hpp"
#include "cyclomat/report.hpp"
#include "cyclomat/simd/mod_kernels.hpp"
#include "cyclomat/sweep.hpp"
#include "cyclomat/theorems.hpp"

using namespace cyclomat;
using nlohmann::json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct FieldArgs {
  std::uint32_t p = 0;
  std::uint32_t n = 1;
};

void add_field_options(CLI::App* cmd, FieldArgs& f) {
  cmd->add_option("--p", f.p, "characteristic (odd prime)")->required();
  cmd->add_option("--n", f.n, "extension degree")->capture_default_str();
}

FiniteField make_field(const FieldArgs& f) { return FiniteField::make(f.p, f.n); }

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidParameter("cannot write '" + path + "'");
  out << text;
}

json exact_and_numeric(const CycNum& value, int precision) {
  return {{"exact", render(value)}, {"complex", render(embed_complex(value, precision))}};
}

// --r accepts "all" or a comma-separated list of integers.
std::optional<std::vector<std::int64_t>> parse_r(const std::string& text) {
  if (text.empty() || text == "all") return std::nullopt;
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidParameter("--r expects 'all' or integers, got '" + item + "'");
    }
  }
  return out;
}

// ---------------------------------------------------------------- sums

struct SumsArgs {
  FieldArgs field;
  std::int64_t r = 1, a = 1, b = 1, c = 1, lambda = -1;
  int precision = default_precision_bits();
  bool exact = false;
};

int run_sums(const std::string& which, const SumsArgs& s) {
  const FiniteField field = make_field(s.field);
  json out = {{"field", {field.p(), field.n()}}, {"sum", which}};
  if (which == "gauss") {
    out["r"] = s.r;
    const ComplexApprox g = gauss_sum(field, s.r, s.precision);
    out["complex"] = render(g);
    out["abs"] = g.abs().to_string(20);
    if (s.exact) out["exact"] = render(gauss_sum_exact(field, s.r));
  } else if (which == "jacobi") {
    out.update({{"a", s.a}, {"b", s.b}});
    out.update(exact_and_numeric(jacobi_sum(field, s.a, s.b), s.precision));
  } else if (which == "binomial") {
    out.update({{"a", s.a}, {"b", s.b}});
    out.update(exact_and_numeric(greene_binomial(field, s.a, s.b), s.precision));
  } else {
    out.update({{"a", s.a}, {"b", s.b}, {"c", s.c}, {"lambda", s.lambda}});
    out.update(exact_and_numeric(hyp2f1(field, s.a, s.b, s.c, field.from_int(s.lambda)), s.precision));
  }
  std::cout << out.dump(2) << '\n';
  return 0;
}

// ---------------------------------------------------------------- matrix

struct MatrixArgs {
  FieldArgs field;
  std::string family;
  std::uint32_t k = 2;
  std::int64_t r = 1;
  std::int64_t psi = 1;
  int precision = default_precision_bits();
};

json render_matrix(const CycMatrix& mat) {
  json rows = json::array();
  for (std::size_t i = 0; i < mat.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < mat.dim(); ++j) row.push_back(render(mat.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json render_matrix(const FieldMatrix& mat) {
  json rows = json::array();
  for (std::size_t i = 0; i < mat.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < mat.dim(); ++j) row.push_back(render(mat.field(), mat.element(i, j)));
    rows.push_back(row);
  }
  return rows;
}

int run_matrix(bool det, const MatrixArgs& a) {
  const FiniteField field = make_field(a.field);
  json out = {{"family", a.family}, {"field", {field.p(), field.n()}}};
  if (a.family == "T") {
    const FieldMatrix mat = build_T(field, a.k, a.r);
    out.update({{"k", a.k}, {"r", a.r}, {"dim", mat.dim()}});
    if (det) {
      const FieldElement d = det_field(mat);
      out["determinant"] = render(field, d);
      if (field.in_prime_field(d)) out["determinant_int"] = d.coeffs.empty() ? 0 : d.coeffs[0];
    } else {
      out["entries"] = render_matrix(mat);
    }
  } else {
    CycMatrix mat = [&] {
      if (a.family == "B") return build_B(field, a.k, a.r);
      if (a.family == "M") return build_M(field, a.r);
      if (a.family == "N") return build_N(field, a.r);
      if (a.family == "carlitz") return build_carlitz(field, a.psi);
      throw InvalidParameter("unknown family '" + a.family + "' (expected B, T, M, N or carlitz)");
    }();
    if (a.family == "B") out.update({{"k", a.k}, {"r", a.r}});
    if (a.family == "M" || a.family == "N") out["r"] = a.r;
    if (a.family == "carlitz") out["psi"] = a.psi;
    out["dim"] = mat.dim();
    if (det) {
      out["determinant"] = exact_and_numeric(det_exact(mat), a.precision);
    } else {
      out["entries"] = render_matrix(mat);
    }
  }
  std::cout << out.dump(2) << '\n';
  return 0;
}

// ---------------------------------------------------------------- verify / sweep

struct VerifyArgs {
  FieldArgs field;
  std::string claim;
  std::string r = "all";
  std::optional<std::uint32_t> k;
  std::optional<std::int64_t> a, b, psi;
  std::optional<std::uint32_t> m;
  std::string backend = "both";
  int precision = default_precision_bits();
  bool exact_gauss = false;
  std::string format = "text";
  std::string output;
};

Backend parse_backend(const std::string& s) {
  if (s == "exact") return Backend::exact;
  if (s == "numeric") return Backend::numeric;
  return Backend::both;
}

int run_verify(const VerifyArgs& v) {
  if (!is_claim(v.claim)) throw InvalidParameter("unknown claim '" + v.claim + "'");
  const FiniteField field = make_field(v.field);
  ClaimArgs args;
  args.r = parse_r(v.r);
  args.k = v.k;
  args.a = v.a;
  args.b = v.b;
  args.m = v.m;
  args.psi = v.psi;
  args.options.backend = parse_backend(v.backend);
  args.options.precision_bits = v.precision;
  args.options.exact_gauss = v.exact_gauss;

  SweepResult result;
  result.reports = run_claim(v.claim, field, args);
  result.summary = summarize(result.reports);

  std::string text;
  if (v.format == "json") {
    json reports = json::array();
    for (const auto& r : result.reports) reports.push_back(r.to_json());
    json config = {{"claim", v.claim}, {"p", v.field.p}, {"n", v.field.n}, {"r", v.r},
                   {"backend", v.backend}, {"precision_bits", v.precision}};
    const json doc = {{"version", CYCLOMAT_VERSION},
                      {"config", config},
                      {"reports", reports},
                      {"summary",
                       {{"pass", result.summary.pass}, {"fail", result.summary.fail}, {"skipped", result.summary.skipped}}}};
    text = doc.dump(2) + "\n";
  } else if (v.format == "csv") {
    text = sweep_csv(result);
  } else {
    text = sweep_text(result);
  }
  emit(text, v.output);
  return result.summary.fail == 0 ? 0 : kExitFail;
}

int run_sweep_cmd(const std::string& config_path, const std::string& output_override,
                  const std::string& format_override) {
  std::ifstream in(config_path);
  if (!in) throw InvalidParameter("cannot read config '" + config_path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidParameter(std::string("config is not valid JSON: ") + e.what());
  }
  SweepConfig config = SweepConfig::from_json(j);
  if (!output_override.empty()) config.output = output_override;
  if (!format_override.empty()) config.format = format_override;
  const SweepResult result = run_sweep(config);
  emit(render_sweep(config, result), config.output);
  std::cerr << "sweep: " << result.summary.pass << " pass, " << result.summary.fail << " fail, "
            << result.summary.skipped << " skipped\n";
  return result.summary.fail == 0 ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Character sums and cyclotomic determinants over finite fields"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(CYCLOMAT_VERSION));

  // sums
  SumsArgs sums;
  auto* sums_cmd = app.add_subcommand("sums", "evaluate Gauss, Jacobi, binomial and 2F1 sums");
  sums_cmd->require_subcommand(1);
  std::string sums_which;
  for (const char* name : {"gauss", "jacobi", "binomial", "hyp2f1"}) {
    auto* sub = sums_cmd->add_subcommand(name);
    add_field_options(sub, sums.field);
    sub->add_option("--precision", sums.precision, "MPFR precision in bits")->check(CLI::Range(53, 1 << 20));
    if (std::string(name) == "gauss") {
      sub->add_option("--r", sums.r, "character exponent");
      sub->add_flag("--exact", sums.exact, "also compute the exact value in Q(zeta_{p(q-1)})");
    } else {
      sub->add_option("--a", sums.a);
      sub->add_option("--b", sums.b);
      if (std::string(name) == "hyp2f1") {
        sub->add_option("--c", sums.c);
        sub->add_option("--lambda", sums.lambda, "argument, as an integer mod p");
      }
    }
    sub->callback([&sums_which, name] { sums_which = name; });
  }

  // matrix
  MatrixArgs mat;
  bool mat_det = false;
  auto* matrix_cmd = app.add_subcommand("matrix", "build a cyclotomic matrix or take its determinant");
  matrix_cmd->require_subcommand(1);
  for (const char* name : {"build", "det"}) {
    auto* sub = matrix_cmd->add_subcommand(name);
    add_field_options(sub, mat.field);
    sub->add_option("--family", mat.family)->required()->check(CLI::IsMember({"B", "T", "M", "N", "carlitz"}));
    sub->add_option("--k", mat.k);
    sub->add_option("--r", mat.r);
    sub->add_option("--psi", mat.psi, "Carlitz character exponent");
    sub->add_option("--precision", mat.precision)->check(CLI::Range(53, 1 << 20));
    sub->callback([&mat_det, name] { mat_det = std::string(name) == "det"; });
  }

  // verify
  VerifyArgs ver;
  auto* verify_cmd = app.add_subcommand("verify", "verify one claim over one field");
  verify_cmd->add_option("claim", ver.claim)->required()->check(CLI::IsMember(claim_ids()));
  add_field_options(verify_cmd, ver.field);
  verify_cmd->add_option("--r", ver.r, "'all' or a comma-separated list")->capture_default_str();
  verify_cmd->add_option("--k", ver.k);
  verify_cmd->add_option("--a", ver.a);
  verify_cmd->add_option("--b", ver.b);
  verify_cmd->add_option("--m", ver.m);
  verify_cmd->add_option("--psi", ver.psi);
  verify_cmd->add_option("--backend", ver.backend)->check(CLI::IsMember({"exact", "numeric", "both"}));
  verify_cmd->add_option("--precision", ver.precision)->check(CLI::Range(53, 1 << 20));
  verify_cmd->add_flag("--exact-gauss", ver.exact_gauss, "also check Gauss-sum identities exactly");
  verify_cmd->add_option("--format", ver.format)->check(CLI::IsMember({"json", "csv", "text"}));
  verify_cmd->add_option("--output,-o", ver.output, "report file (default stdout)");

  // sweep
  std::string sweep_config, sweep_output, sweep_format;
  auto* sweep_cmd = app.add_subcommand("sweep", "run a configured sweep");
  sweep_cmd->add_option("--config", sweep_config, "JSON sweep configuration")->required();
  sweep_cmd->add_option("--output,-o", sweep_output, "overrides the config's output path");
  sweep_cmd->add_option("--format", sweep_format)->check(CLI::IsMember({"json", "csv", "text"}));

  // info
  auto* info_cmd = app.add_subcommand("info", "print build and runtime configuration");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*sums_cmd) return run_sums(sums_which, sums);
    if (*matrix_cmd) return run_matrix(mat_det, mat);
    if (*verify_cmd) return run_verify(ver);
    if (*sweep_cmd) return run_sweep_cmd(sweep_config, sweep_output, sweep_format);
    if (*info_cmd) {
      const json info = {{"version", CYCLOMAT_VERSION},
                         {"simd", simd::isa_name(simd::active_kernels().isa)},
                         {"precision_bits", default_precision_bits()},
                         {"claims", claim_ids()}};
      std::cout << info.dump(2) << '\n';
      return 0;
    }
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidParameter& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
