#include "axial/axial.hpp"
#include "axial/errors.hpp"

namespace axial {

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

bool IdentityReport::passed() const {
  for (const auto& c : checks)
    if (c.status == Status::Fail) return false;
  return true;
}

namespace {

// Coefficient c with r == c * a0, or nullopt.
std::optional<FieldElement> multiple_of(const Vector& r, const Vector& a0) {
  auto c = solve_in_span(r, {a0});
  if (!c) return std::nullopt;
  return c->front();
}

}  // namespace

IdentityReport identity_suite(const Algebra& alg, const DihedralData& dd_in) {
  IdentityReport rep;
  const FieldPtr& f = alg.field();
  DihedralData dd = dd_in;
  extend_window(dd, 4);
  const FieldElement& eta = dd.eta;
  const FieldElement one = FieldElement::one(f);
  const FieldElement two = FieldElement::from_integer(f, 2);
  const FieldElement three = FieldElement::from_integer(f, 3);
  const FieldElement four = FieldElement::from_integer(f, 4);
  const FieldElement five = FieldElement::from_integer(f, 5);
  auto add = [&](const std::string& name, Status st, const std::string& detail = "") {
    rep.checks.push_back({name, st, detail});
  };
  auto a = [&](int i) -> const Vector& { return dd.axis(i); };
  auto p = [&](int i, int j) { return p_vector(alg, dd, i, j); };
  auto mul = [&](const Vector& x, const Vector& y) { return alg.multiply(x, y); };
  const Vector& a0 = a(0);

  for (const char* s : {"lambda1", "lambda2", "lambda3", "mu", "nu", "rho", "pi"}) rep.scalars[s] = std::nullopt;

  AxisDecomposition dec;
  try {
    dec = split_eigenspace(alg, a0, eta, dd.tau0);
  } catch (const Error& e) {
    add("decomposition", Status::Fail, e.what());
    return rep;
  }

  std::array<FieldElement, 4> lambda;
  lambda[0] = one;
  for (int i = 1; i <= 3; ++i) {
    lambda[i] = lambda_coefficient(dec, a(i));
    rep.scalars["lambda" + std::to_string(i)] = lambda[i];
  }

  for (int i = 1; i <= 3; ++i) {
    const std::string idx = std::to_string(i);
    Vector pi0 = p(i, 0);
    Vector lhs = mul(a0, pi0);
    Vector rhs = ((one - eta) * lambda[i] - eta) * a0;
    add("a0*p" + idx + "0", lhs == rhs ? Status::Pass : Status::Fail);
    Vector v = pi0 - (lambda[i] - eta) * a0 + (eta / two) * (a(i) + a(-i));
    add("p" + idx + "0 in M2", contains_vector(dec.parts[2], v) ? Status::Pass : Status::Fail);
  }

  const FieldElement& l1 = lambda[1];
  const FieldElement& l2 = lambda[2];
  const Vector p1 = p(1, 0);
  const Vector s1 = two * p1 + eta * (a(1) + a(-1));
  const FieldElement k1 = (two * eta - one) * (four * l1 - three * eta) / (two * eta);

  // Membership of a0*p21 in k1*s1 + F a0; mu is the a0 coefficient, which
  // agrees with solve_in_span against {s1, a0} whenever these are independent.
  std::optional<FieldElement> mu = multiple_of(mul(a0, p(2, 1)) - k1 * s1, a0);
  rep.scalars["mu"] = mu;
  add("multiplication (1)", mu ? Status::Pass : Status::Fail);

  if (mu) {
    Vector known2 = (eta / two) * (p(3, 1) - p(3, -1)) -
                    ((two * eta - one) * (two * l1 - eta) / (two * eta)) * (two * p(2, 0) + eta * (a(2) + a(-2))) -
                    ((*mu - eta * l2 + two * eta * eta) / eta) * s1;
    auto half_nu = multiple_of(mul(a0, p(3, 1)) - known2, a0);
    if (half_nu) rep.scalars["nu"] = two * *half_nu;
    add("multiplication (2)", half_nu ? Status::Pass : Status::Fail);

    const FieldElement kk = (two * eta - one) * (four * l1 - three * eta);
    const FieldElement eta2 = eta * eta;
    Vector known3 = (kk / four) * (two * p(3, 0) + p(3, 1) + p(3, -1)) +
                    (*mu + kk * (two * (two * eta - one) * l1 - four * eta2 + eta) / (two * eta2)) * p(2, 0) +
                    (kk * (four * (two * eta - one) * l1 - eta * l2 - five * eta2 + three * eta) / eta2) * p1 +
                    ((two * eta - one) * kk * (three * l1 - two * eta) / (two * eta)) * (a(2) + a(-2)) +
                    (kk * (two * *mu - eta * l2 + two * eta2) / (two * eta)) * (a(1) + a(-1));
    auto rho = multiple_of(mul(p(2, 0), p(2, 1)) - known3, a0);
    rep.scalars["rho"] = rho;
    add("multiplication (3)", rho ? Status::Pass : Status::Fail, rho ? "" : "residual is not a multiple of a0");
  } else {
    add("multiplication (2)", Status::Skipped, "mu unavailable");
    add("multiplication (3)", Status::Skipped, "mu unavailable");
  }

  if (l1 == three * eta / four) {
    bool ok = p(2, 1) == p(2, 0) || (mu && mu->is_zero());
    add("p21 = p20 or mu = 0", ok ? Status::Pass : Status::Fail);
  } else {
    add("p21 = p20 or mu = 0", Status::Skipped, "lambda1 differs from 3*eta/4");
  }

  Vector pp = mul(p1, p1);
  if (p1.is_zero()) {
    add("p*p = pi*p", Status::Pass, "p vanishes");
  } else {
    auto pi = solve_in_span(pp, {p1});
    if (pi) rep.scalars["pi"] = pi->front();
    add("p*p = pi*p", pi ? Status::Pass : Status::Fail, pi ? "" : "p*p is not a multiple of p");
  }
  size_t gen = generated_subalgebra(alg, {a0, a(1)}).dim();
  rep.dim_a0_a1 = gen;
  if (alg.dim() > 3) {
    add("dim <a0,a1> = 3", gen == 3 ? Status::Pass : Status::Fail, "dimension " + std::to_string(gen));
  } else {
    add("dim <a0,a1> = 3", Status::Skipped, "ambient dimension at most 3");
  }
  return rep;
}

}  // namespace axial
