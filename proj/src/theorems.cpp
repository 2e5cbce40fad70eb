#include "cyclomat/theorems.hpp"

#include <algorithm>
#include <string>

#include "cyclomat/arith.hpp"
#include "cyclomat/char_sums.hpp"
#include "cyclomat/errors.hpp"
#include "cyclomat/matrices.hpp"

namespace cyclomat {

namespace {

using Params = std::map<std::string, nlohmann::json>;

Params field_params(const FiniteField& field) {
  return {{"p", field.p()}, {"n", field.n()}, {"q", field.q()}};
}

VerificationReport make_report(std::string claim, Params params, Backend backend) {
  VerificationReport r;
  r.claim_id = std::move(claim);
  r.parameters = std::move(params);
  r.backend = backend;
  return r;
}

VerificationReport skip(std::string claim, Params params, std::string why) {
  VerificationReport r = VerificationReport::skipped(std::move(claim), std::move(why));
  r.parameters = std::move(params);
  return r;
}

bool in_range(const FiniteField& field, std::int64_t r) { return r >= 1 && r <= static_cast<std::int64_t>(field.q()) - 2; }

bool wants_exact(const VerifyOptions& o) { return o.backend != Backend::numeric; }
bool wants_numeric(const VerifyOptions& o) { return o.backend != Backend::exact; }

VerificationReport exact_check(std::string id, const CycNum& lhs, const CycNum& rhs) {
  VerificationReport c;
  c.claim_id = std::move(id);
  c.lhs = render(lhs);
  c.rhs = render(rhs);
  if (!(lhs == rhs)) c.fail("exact sides differ");
  return c;
}

VerificationReport numeric_check(std::string id, const ComplexApprox& lhs, const ComplexApprox& rhs, double tol) {
  VerificationReport c;
  c.claim_id = std::move(id);
  c.backend = Backend::numeric;
  c.lhs = render(lhs);
  c.rhs = render(rhs);
  if (!approx_equal(lhs, rhs, tol)) {
    c.fail("relative difference " + std::to_string(relative_difference(lhs, rhs)) + " exceeds " + std::to_string(tol));
  }
  return c;
}

VerificationReport field_check(std::string id, const FiniteField& field, const FieldElement& lhs,
                               const FieldElement& rhs) {
  VerificationReport c;
  c.claim_id = std::move(id);
  c.lhs = render(field, lhs);
  c.rhs = render(field, rhs);
  if (!(lhs == rhs)) c.fail("field elements differ");
  return c;
}

// 2^{-(q-1)/4} prod_{k=0}^{(q-5)/4} (binom(2k+r, r) + binom(2k+r+(q-1)/2, r)) mod p.
std::uint64_t fourth_power_binomial_product(const FiniteField& field, std::uint64_t r) {
  const std::uint32_t p = field.p();
  const std::uint64_t q = field.q();
  std::uint64_t acc = 1;
  for (std::uint64_t k = 0; k <= (q - 5) / 4; ++k) {
    const std::uint64_t term =
        (binomial_mod_prime(2 * k + r, r, p) + binomial_mod_prime(2 * k + r + (q - 1) / 2, r, p)) % p;
    acc = acc * term % p;
  }
  const std::uint64_t half = pow_mod(2, p - 2, p);
  return acc * pow_mod(half, (q - 1) / 4, p) % p;
}

VerificationReport thm3_iii_impl(const FiniteField& field, std::int64_t r, bool corrected) {
  const std::string id = corrected ? "thm3.iii.corrected" : "thm3.iii";
  Params params = field_params(field);
  params["k"] = 4;
  params["r"] = r;
  if (field.q() % 8 != 5) return skip(id, params, "needs q = 5 (mod 8)");
  if (!in_range(field, r)) return skip(id, params, "r outside [1, q-2]");
  VerificationReport report = make_report(id, params, Backend::exact);
  const FieldElement det = det_field(build_T(field, 4, r));
  std::uint64_t rhs = fourth_power_binomial_product(field, static_cast<std::uint64_t>(r));
  if (corrected && ((field.q() - 1) / 4) % 2 == 1) rhs = (field.p() - rhs) % field.p();
  const FieldElement rhs_elem = field.from_int(static_cast<std::int64_t>(rhs));
  report.lhs = render(field, det);
  report.rhs = render(field, rhs_elem);
  if (!(det == rhs_elem)) report.fail("det T_{q,4}(r) differs from the binomial product");
  VerificationReport membership;
  membership.claim_id = id + ".prime_subfield";
  membership.lhs = render(field, det);
  if (!field.in_prime_field(det)) membership.fail("determinant not in F_p");
  report.add_check(std::move(membership));
  return report;
}

}  // namespace

VerificationReport verify_thm1_i(const FiniteField& field, std::int64_t r, const VerifyOptions& opts) {
  Params params = field_params(field);
  params["k"] = 2;
  params["r"] = r;
  const std::uint32_t q = field.q();
  if (q % 4 != 3) return skip("thm1.i", params, "needs q = 3 (mod 4)");
  if (!in_range(field, r)) return skip("thm1.i", params, "r outside [1, q-2]");
  VerificationReport report = make_report("thm1.i", params, opts.backend);
  const std::uint64_t m = field.group_order();
  const CycMatrix b = build_B(field, 2, r);

  CycNum det = CycNum::zero(m);
  if (wants_exact(opts)) {
    det = det_exact(b);
    // (a) Jacobi product.
    CycNum jacobi_product = CycNum::one(m);
    for (std::int64_t k = 0; k <= static_cast<std::int64_t>(q - 3) / 2; ++k) jacobi_product *= jacobi_sum(field, r, 2 * k);
    report.add_check(exact_check("thm1.i.jacobi_product", det, jacobi_product));
    // (c) Greene binomial form.
    CycNum binomial_product = CycNum::one(m);
    for (std::int64_t k = 0; k <= static_cast<std::int64_t>(q - 3) / 2; ++k) {
      binomial_product *= greene_binomial(field, r, 2 * k);
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), q, (q - 1) / 2);
    report.add_check(exact_check("thm1.i.binomial_product", det, binomial_product * mpq_class(scale)));
    report.lhs = render(det);
    report.rhs = render(jacobi_product);
  }
  if (wants_numeric(opts)) {
    // (b) Gauss-sum closed form.
    const int prec = opts.precision_bits;
    const ComplexApprox g = gauss_sum(field, r, prec);
    const Real q_real(static_cast<double>(q), prec);
    ComplexApprox closed = g.pow((q - 1) / 2);
    if (r % 2 == 1) {
      closed = closed * ComplexApprox::root_of_unity(field.n(), 4, prec) * (Real(1.0, prec) / sqrt(q_real));
      if (((q - 3) / 4) % 2 == 1) closed = -closed;
    } else {
      closed = closed * (Real(1.0, prec) / q_real);
    }
    const ComplexApprox numeric_det = det_numeric(b, prec);
    if (wants_exact(opts)) {
      const ComplexApprox embedded = embed_complex(det, prec);
      report.add_check(numeric_check("thm1.i.gauss_closed_form", embedded, closed, opts.rel_tol));
      report.add_check(numeric_check("thm1.i.numeric_determinant", embedded, numeric_det, opts.rel_tol));
    } else {
      report.add_check(numeric_check("thm1.i.gauss_closed_form", numeric_det, closed, opts.rel_tol));
      report.lhs = render(numeric_det);
      report.rhs = render(closed);
    }
  }
  return report;
}

VerificationReport verify_thm1_ii(const FiniteField& field, std::uint32_t k, const VerifyOptions&) {
  Params params = field_params(field);
  params["k"] = k;
  const std::uint32_t order = field.group_order();
  if (k <= 1 || k >= order || order % k != 0) return skip("thm1.ii", params, "k must be a divisor of q-1 in (1, q-1)");
  if ((order / k) % 2 != 0) return skip("thm1.ii", params, "needs (q-1)/k even");
  VerificationReport report = make_report("thm1.ii", params, Backend::exact);

  // Witness: -1 in D_k, so the column of a_j equals the column of -a_j.
  const auto a = residue_set(field, k);
  const FiniteField::Code minus_one = field.from_int_code(-1);
  VerificationReport witness;
  witness.claim_id = "thm1.ii.minus_one_in_Dk";
  if (std::find(a.begin(), a.end(), minus_one) == a.end()) witness.fail("-1 is not a k-th power residue");
  report.add_check(std::move(witness));

  for (std::int64_t r = 1; r <= static_cast<std::int64_t>(field.q()) - 2; ++r) {
    const CycMatrix b = build_B(field, k, r);
    VerificationReport check;
    check.claim_id = "thm1.ii.singular";
    check.parameters = {{"r", r}};
    // Column j' with a_{j'} = -a_j duplicates column j.
    const std::size_t j_prime = static_cast<std::size_t>(
        std::find(a.begin(), a.end(), field.neg_code(a[0])) - a.begin());
    bool duplicated = j_prime != 0 && j_prime < a.size();
    for (std::size_t i = 0; duplicated && i < a.size(); ++i) duplicated = b.at(i, 0) == b.at(i, j_prime);
    if (!duplicated) check.fail("no duplicated column found");
    const CycNum det = det_exact(b);
    check.lhs = render(det);
    check.rhs = render(CycNum::zero(field.group_order()));
    if (!det.is_zero()) check.fail("determinant is nonzero");
    report.add_check(std::move(check));
  }
  return report;
}

VerificationReport verify_thm2(const FiniteField& field, std::int64_t r, const VerifyOptions&) {
  Params params = field_params(field);
  params["k"] = 4;
  params["r"] = r;
  const std::uint32_t q = field.q();
  if (q % 8 != 5) return skip("thm2", params, "needs q = 5 (mod 8)");
  if (!in_range(field, r)) return skip("thm2", params, "r outside [1, q-2]");
  VerificationReport report = make_report("thm2", params, Backend::exact);
  const std::uint64_t m = field.group_order();
  const CycNum det = det_exact(build_B(field, 4, r));
  const FieldElement minus_one = field.from_int(-1);
  const std::int64_t count = static_cast<std::int64_t>(q - 1) / 4;
  mpq_class scale = 1;
  for (std::int64_t i = 0; i < count; ++i) scale *= mpq_class(q, 2);

  CycNum hyp_product = CycNum::one(m);
  for (std::int64_t k = 0; k < count; ++k) hyp_product *= hyp2f1(field, -r, 4 * k, 4 * k + r, minus_one);
  hyp_product *= scale;
  if (r % 2 != 0) hyp_product = -hyp_product;
  report.add_check(exact_check("thm2.hyp2f1_product", det, hyp_product));

  const std::int64_t phi = static_cast<std::int64_t>(m / 2);
  CycNum pair_product = CycNum::one(m);
  for (std::int64_t k = 0; k < count; ++k) {
    pair_product *= greene_binomial(field, r, 2 * k) + greene_binomial(field, r, phi + 2 * k);
  }
  pair_product *= scale;
  report.add_check(exact_check("thm2.binomial_pair_product", det, pair_product));

  report.lhs = render(det);
  report.rhs = render(hyp_product);
  return report;
}

VerificationReport verify_thm3_i(const FiniteField& field, std::uint32_t k) {
  Params params = field_params(field);
  params["k"] = k;
  const std::uint32_t order = field.group_order();
  if (k <= 1 || k >= order || order % k != 0) return skip("thm3.i", params, "k must be a divisor of q-1 in (1, q-1)");
  if ((order / k) % 2 != 0) return skip("thm3.i", params, "needs (q-1)/k even");
  VerificationReport report = make_report("thm3.i", params, Backend::exact);
  for (std::int64_t r = 1; r <= static_cast<std::int64_t>(field.q()) - 2; ++r) {
    VerificationReport check = field_check("thm3.i.singular", field, det_field(build_T(field, k, r)), field.zero());
    check.parameters = {{"r", r}};
    report.add_check(std::move(check));
  }
  return report;
}

VerificationReport verify_thm3_ii(const FiniteField& field) {
  Params params = field_params(field);
  params["k"] = 2;
  VerificationReport report = make_report("thm3.ii", params, Backend::exact);
  const std::uint32_t p = field.p();
  const bool special = p % 4 == 3 && field.n() == 1;
  nlohmann::json nonsingular = nlohmann::json::array();
  nlohmann::json expected = nlohmann::json::array();
  std::vector<FieldElement> dets(field.q(), field.zero());
  for (std::int64_t r = 1; r <= static_cast<std::int64_t>(field.q()) - 2; ++r) {
    dets[r] = det_field(build_T(field, 2, r));
    if (!dets[r].is_zero()) nonsingular.push_back(r);
    if (special && (r == 1 || r == 2)) expected.push_back(r);
  }
  report.lhs = {{"nonsingular_r", nonsingular}};
  report.rhs = {{"nonsingular_r", expected}};
  if (nonsingular != expected) report.fail("nonsingular set differs from the iff condition");

  if (special && p > 3) {
    const std::uint64_t h = class_number(p);
    report.parameters["h"] = h;
    const std::int64_t e1 = static_cast<std::int64_t>(p + 3 + 2 * h) / 4;
    const std::int64_t e2 = static_cast<std::int64_t>(p + 1) / 4;
    report.add_check(field_check("thm3.ii.det_T1", field, dets[1], field.from_int(e1 % 2 == 0 ? 1 : -1)));
    report.add_check(field_check("thm3.ii.det_T2", field, dets[2], field.from_int(e2 % 2 == 0 ? 1 : -1)));
  }
  return report;
}

VerificationReport verify_thm3_iii(const FiniteField& field, std::int64_t r) { return thm3_iii_impl(field, r, false); }

VerificationReport verify_thm3_iii_corrected(const FiniteField& field, std::int64_t r) {
  return thm3_iii_impl(field, r, true);
}

VerificationReport verify_class_number(std::uint64_t p) {
  Params params = {{"p", p}, {"n", 1}, {"q", p}};
  if (!is_prime(p) || p % 4 != 3 || p <= 3) return skip("class_number", params, "needs prime p = 3 (mod 4), p > 3");
  VerificationReport report = make_report("class_number", params, Backend::exact);
  const std::uint64_t forms = class_number(p);
  const std::uint64_t analytic = class_number_analytic(p);
  report.lhs = forms;
  report.rhs = analytic;
  if (forms != analytic) report.fail("form count differs from the analytic class number");
  return report;
}

VerificationReport verify_mordell(std::uint64_t p) {
  Params params = {{"p", p}, {"n", 1}, {"q", p}};
  if (!is_prime(p) || p % 4 != 3 || p <= 3) return skip("mordell", params, "needs prime p = 3 (mod 4), p > 3");
  VerificationReport report = make_report("mordell", params, Backend::exact);
  const std::uint64_t h = class_number(p);
  report.parameters["h"] = h;
  std::uint64_t fact = 1;
  for (std::uint64_t i = 2; i <= (p - 1) / 2; ++i) fact = fact * i % p;
  const std::uint64_t predicted = ((h + 1) / 2) % 2 == 0 ? 1 : p - 1;
  report.lhs = fact;
  report.rhs = predicted;
  if (fact != predicted) report.fail("((p-1)/2)! has the wrong sign");

  VerificationReport aux;
  aux.claim_id = "mordell.two";
  aux.lhs = pow_mod(2, (p - 1) / 2, p);
  aux.rhs = ((p + 1) / 4) % 2 == 0 ? 1 : p - 1;
  if (aux.lhs != aux.rhs) aux.fail("2^{(p-1)/2} has the wrong sign");
  report.add_check(std::move(aux));
  return report;
}

VerificationReport verify_lemma31(const FiniteField& field, std::int64_t a, std::int64_t b) {
  Params params = field_params(field);
  params["a"] = a;
  params["b"] = b;
  const std::int64_t top = static_cast<std::int64_t>(field.q()) - 2;
  if (a < 1 || a > top || b < 0 || b > top) return skip("lemma3.1", params, "needs 1 <= a <= q-2, 0 <= b <= q-2");
  VerificationReport report = make_report("lemma3.1", params, Backend::exact);
  const CycNum j = jacobi_sum(field, -a, -b);
  const FieldElement reduced = reduce_mod_prime(j, field);
  const std::uint32_t p = field.p();
  const std::uint32_t binom =
      binomial_mod_prime(static_cast<std::uint64_t>(a + b), static_cast<std::uint64_t>(a), p);
  const FieldElement expected = field.from_int(-static_cast<std::int64_t>(binom));
  report.lhs = render(field, reduced);
  report.rhs = render(field, expected);
  if (!(reduced == expected)) report.fail("reduced Jacobi sum differs from -binom(a+b, a)");
  if (b == 0) {
    report.parameters["clause"] = "b = 0";
    report.add_check(field_check("lemma3.1.b_zero", field, reduced, field.from_int(-1)));
  } else if (a + b >= static_cast<std::int64_t>(field.q())) {
    report.parameters["clause"] = "a + b >= q";
    report.add_check(field_check("lemma3.1.vanishing", field, reduced, field.zero()));
  }
  return report;
}

VerificationReport verify_lemma21(const FiniteField& field, std::uint32_t m, std::int64_t psi_exponent,
                                  const VerifyOptions& opts) {
  Params params = field_params(field);
  params["m"] = m;
  params["psi"] = psi_exponent;
  const std::uint32_t order = field.group_order();
  if (m <= 1 || order % m != 0) return skip("lemma2.1", params, "needs m | q-1, m > 1");
  VerificationReport report = make_report("lemma2.1", params, Backend::numeric);
  const int prec = opts.precision_bits;
  const GaussSumTable g(field, prec);
  const std::int64_t step = order / m;
  ComplexApprox lhs(1.0, 0.0, prec);
  ComplexApprox rho_product(1.0, 0.0, prec);
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(m); ++k) {
    lhs = lhs * g[psi_exponent + k * step];
    rho_product = rho_product * g[k * step];
  }
  // psi^{-m}(m), m read in F_p (p does not divide m since m | q - 1).
  const std::uint64_t log_m = field.dlog_code(field.from_int_code(m));
  const std::int64_t e = static_cast<std::int64_t>(
      normalize_exponent(-static_cast<std::int64_t>(m) * psi_exponent, order) * log_m % order);
  const ComplexApprox rhs =
      -(ComplexApprox::root_of_unity(e, order, prec) * g[static_cast<std::int64_t>(m) * psi_exponent] * rho_product);
  VerificationReport check = numeric_check("lemma2.1", lhs, rhs, opts.rel_tol);
  report.lhs = check.lhs;
  report.rhs = check.rhs;
  if (!check.passed()) report.fail(check.reason);
  return report;
}

VerificationReport verify_lemma22(const FiniteField& field, std::int64_t a, std::int64_t b,
                                  const VerifyOptions& opts) {
  const std::uint32_t order = field.group_order();
  const std::uint64_t ea = normalize_exponent(a, order);
  const std::uint64_t eb = normalize_exponent(b, order);
  Params params = field_params(field);
  params["a"] = ea;
  params["b"] = eb;
  if (ea == 0) return skip("lemma2.2", params, "psi_1 must be nontrivial");
  VerificationReport report = make_report("lemma2.2", params, Backend::both);
  const int prec = opts.precision_bits;
  const auto ia = static_cast<std::int64_t>(ea);
  const auto ib = static_cast<std::int64_t>(eb);
  const ComplexApprox ga = gauss_sum(field, ia, prec);

  if (eb != 0 && (ea + eb) % order != 0) {
    const CycNum j = jacobi_sum(field, ia, ib);
    const ComplexApprox lhs = embed_complex(j, prec) * gauss_sum(field, ia + ib, prec);
    const ComplexApprox rhs = ga * gauss_sum(field, ib, prec);
    report.add_check(numeric_check("lemma2.2.i", lhs, rhs, opts.rel_tol));
  }
  const int sign = ea % 2 == 0 ? 1 : -1;
  {
    const ComplexApprox lhs = ga * gauss_sum(field, -ia, prec);
    const ComplexApprox rhs(static_cast<double>(sign) * field.q(), 0.0, prec);
    report.add_check(numeric_check("lemma2.2.ii", lhs, rhs, opts.rel_tol));
  }
  report.add_check(exact_check("lemma2.2.iii", jacobi_sum(field, ia, -ia), CycNum::rational(order, -sign)));
  report.lhs = report.checks.back().lhs;
  report.rhs = report.checks.back().rhs;
  return report;
}

VerificationReport verify_quadratic_gauss(const FiniteField& field, const VerifyOptions& opts) {
  VerificationReport report = make_report("eq1.1", field_params(field), Backend::numeric);
  const int prec = opts.precision_bits;
  const std::uint32_t n = field.n();
  const ComplexApprox g = gauss_sum(field, field.group_order() / 2, prec);
  ComplexApprox closed(sqrt(Real(static_cast<double>(field.q()), prec)), Real(prec));
  if (field.p() % 4 == 3) closed = closed * ComplexApprox::root_of_unity(n, 4, prec);
  if ((n - 1) % 2 == 1) closed = -closed;
  VerificationReport check = numeric_check("eq1.1", g, closed, opts.rel_tol);
  report.lhs = check.lhs;
  report.rhs = check.rhs;
  if (!check.passed()) report.fail(check.reason);
  return report;
}

}  // namespace cyclomat
