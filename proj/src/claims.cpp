#include <atomic>
#include <chrono>
#include <functional>
#include <sstream>
#include <thread>

#include "axial/catalog.hpp"
#include "axial/errors.hpp"
#include "json.hpp"

namespace axial {

namespace {

using json = nlohmann::ordered_json;

VerifyReport verify_default(const CatalogEntry& e) {
  try {
    return verify_entry(e, InstanceRequest{}, VerifyOptions{});
  } catch (const Error& err) {
    VerifyReport r;
    r.subject = e.name;
    r.field = e.default_field;
    r.dim = e.dim;
    r.checks.push_back({"instantiate", Status::Fail, err.what()});
    return r;
  }
}

std::string failing(const VerifyReport& r, const std::vector<std::string>& prefixes) {
  std::string out;
  for (const auto& c : r.checks) {
    bool mine = false;
    for (const auto& p : prefixes) mine = mine || c.name.rfind(p, 0) == 0;
    if (mine && c.status == Status::Fail) {
      if (!out.empty()) out += "; ";
      out += c.name + (c.detail.empty() ? "" : ": " + c.detail);
    }
  }
  return out;
}

std::string params_of(const VerifyReport& r) { return "field=" + r.field + ", eta=" + r.eta; }

ClaimResult existence_claim(const CatalogEntry& e, const VerifyReport& r) {
  ClaimResult c;
  c.kind = ClaimKind::Existence;
  c.subject = e.name;
  c.parameters = params_of(r);
  c.statement = "dihedral axial decomposition algebra of Majorana type (eta,eta)";
  c.detail = failing(r, {"instantiate", "fusion", "dihedral"});
  c.status = c.detail.empty() ? Status::Pass : Status::Fail;
  return c;
}

ClaimResult dimension_claim(const CatalogEntry& e, const VerifyReport& r) {
  ClaimResult c;
  c.kind = ClaimKind::Dimension;
  c.subject = e.name;
  c.parameters = params_of(r);
  const auto& ex = e.presentation.expected;
  c.statement = "dim " + std::to_string(e.dim) + ", adim " + std::to_string(ex->adim) + ", " +
                (ex->even ? "even" : "odd") + " relation (case " + std::to_string(ex->case_tag) + ")";
  c.detail = failing(r, {"instantiate", "axial dimension", "relation"});
  if (r.dim != e.dim) c.detail += (c.detail.empty() ? "" : "; ") + std::string("ambient dimension ") + std::to_string(r.dim);
  c.status = c.detail.empty() ? Status::Pass : Status::Fail;
  return c;
}

Subspace span_of(const Algebra& alg, const std::vector<std::string>& texts) {
  std::vector<Vector> vs;
  for (const auto& t : texts) vs.push_back(parse_vector(t, alg));
  return Subspace::span(alg.field(), alg.dim(), vs);
}

// Coordinates of x*p outside Span{p} for every basis vector x.
std::vector<FieldElement> off_span_coordinates(const Algebra& alg, size_t p) {
  std::vector<FieldElement> out;
  for (size_t b = 0; b < alg.dim(); ++b) {
    Vector v = alg.multiply(alg.basis_vector(b), alg.basis_vector(p));
    for (size_t k = 0; k < v.size(); ++k)
      if (k != p && !v[k].is_zero()) out.push_back(v[k]);
  }
  return out;
}

std::string rational_list(const std::vector<mpq_class>& xs) {
  std::string s = "{";
  for (size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + xs[i].get_str();
  return s + "}";
}

// Span{p1} is an ideal over Q(eta) only on the stated locus.
ClaimResult ideal_locus_claim(const CatalogEntry& e, const mpq_class& expected) {
  ClaimResult c;
  c.kind = ClaimKind::Ideal;
  c.subject = e.name;
  c.parameters = "field=qeta";
  c.statement = "Span{p1} is an ideal exactly at eta = " + expected.get_str();
  try {
    Instance gen = instantiate_entry(e, InstanceRequest{"qeta", std::nullopt, std::nullopt});
    const Algebra& alg = *gen.algebra;
    size_t p = *alg.index_of("p1");
    if (is_ideal(alg, span_of(alg, {"p1"}))) {
      c.detail = "ideal for generic eta";
      return c;
    }
    QPoly g;
    for (const auto& x : off_span_coordinates(alg, p)) g = gcd(g, x.numerator());
    QPoly rest = g;
    std::vector<mpq_class> locus;
    for (const auto& r : rational_roots(g)) {
      while (rest.eval(r) == 0) rest = divmod(rest, QPoly({-r, mpq_class(1)})).first;
      try {
        Instance at = instantiate_entry(e, InstanceRequest{"q", r.get_str(), std::nullopt});
        if (is_ideal(*at.algebra, span_of(*at.algebra, {"p1"}))) locus.push_back(r);
      } catch (const Error&) {
        // eta = r is not an admissible parameter
      }
    }
    std::ostringstream d;
    d << "vanishing locus of " << g.to_string("eta") << "; admissible rational points " << rational_list(locus);
    if (rest.degree() > 0) d << "; further factor " << rest.to_string("eta");
    c.detail = d.str();
    c.status = locus == std::vector<mpq_class>{expected} && rest.degree() <= 0 ? Status::Pass : Status::Fail;
  } catch (const Error& err) {
    c.detail = err.what();
  }
  return c;
}

// Span{p1} is an ideal of the rational table only in the stated characteristic.
ClaimResult ideal_characteristic_claim(const CatalogEntry& e, long expected) {
  ClaimResult c;
  c.kind = ClaimKind::Ideal;
  c.subject = e.name;
  c.parameters = "field=q, eta=" + *e.presentation.eta;
  c.statement = "Span{p1} is an ideal exactly in characteristic " + std::to_string(expected);
  try {
    Instance inst = instantiate_entry(e, InstanceRequest{});
    const Algebra& alg = *inst.algebra;
    if (is_ideal(alg, span_of(alg, {"p1"}))) {
      c.detail = "ideal in characteristic 0";
      return c;
    }
    mpz_class g = 0, den = 1;
    for (const auto& x : off_span_coordinates(alg, *alg.index_of("p1"))) {
      mpq_class q = x.rational();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_num_mpz_t());
    }
    // Primes dividing a table denominator cannot carry the table.
    for (size_t i = 0; i < alg.dim(); ++i)
      for (size_t j = i; j < alg.dim(); ++j)
        if (const Vector* v = alg.product(i, j))
          for (const auto& x : v->entries()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.rational().get_den_mpz_t());
    g = abs(g);
    std::vector<mpz_class> primes;
    mpz_class rest = g;
    for (mpz_class q = 2; q * q <= rest; ++q)
      while (rest % q == 0) {
        if (primes.empty() || primes.back() != q) primes.push_back(q);
        rest /= q;
      }
    if (rest > 1 && (primes.empty() || primes.back() != rest)) primes.push_back(rest);
    std::vector<mpz_class> locus;
    for (const auto& q : primes) {
      if (q == 2 || den % q == 0) continue;
      Presentation pres = e.presentation;
      pres.constraints.exclude_eta.clear();
      Instance at = instantiate(pres, InstanceRequest{"gf:" + q.get_str(), std::nullopt, std::nullopt});
      if (is_ideal(*at.algebra, span_of(*at.algebra, {"p1"}))) locus.push_back(q);
    }
    std::string ls;
    for (const auto& q : locus) ls += (ls.empty() ? "" : ", ") + q.get_str();
    c.detail = "gcd of obstructions " + g.get_str() + "; admissible characteristics {" + ls + "}";
    c.status = locus == std::vector<mpz_class>{mpz_class(expected)} ? Status::Pass : Status::Fail;
  } catch (const Error& err) {
    c.detail = err.what();
  }
  return c;
}

// parent / Span(ideal) is isomorphic to target through label-preserving
// axis correspondence.
ClaimResult quotient_iso_claim(const std::string& subject, const std::string& params, const std::string& statement,
                               const std::function<Instance()>& parent_fn, const std::vector<std::string>& ideal,
                               const std::function<Instance()>& target_fn, const std::vector<std::string>& labels) {
  ClaimResult c;
  c.kind = ClaimKind::QuotientIsomorphism;
  c.subject = subject;
  c.parameters = params;
  c.statement = statement;
  try {
    Instance parent = parent_fn();
    Instance target = target_fn();
    Subspace s = span_of(*parent.algebra, ideal);
    if (!is_ideal(*parent.algebra, s)) {
      c.detail = "not an ideal";
      return c;
    }
    Quotient q = quotient(parent.algebra, s);
    if (q.algebra->dim() != target.algebra->dim()) {
      c.detail = "quotient has dimension " + std::to_string(q.algebra->dim()) + ", target " +
                 std::to_string(target.algebra->dim());
      return c;
    }
    std::vector<std::pair<Vector, Vector>> pairs;
    for (const auto& l : labels) {
      auto ti = target.algebra->index_of(l);
      auto pi = parent.algebra->index_of(l);
      if (!ti || !pi) throw Error(ErrorKind::InvalidInput, "label " + l + " missing");
      pairs.emplace_back(target.algebra->basis_vector(*ti), q.projection.apply(parent.algebra->basis_vector(*pi)));
    }
    ExtendResult ext = extend_from_generators(target.algebra, pairs, q.algebra);
    if (ext.status != ExtendStatus::Ok) {
      c.detail = std::string(extend_status_name(ext.status)) + ": " + ext.detail;
      return c;
    }
    if (!inverse(ext.map->matrix)) {
      c.detail = "homomorphism is not bijective";
      return c;
    }
    c.detail = "bijective homomorphism on " + std::to_string(q.algebra->dim()) + " dimensions";
    c.status = Status::Pass;
  } catch (const Error& err) {
    c.detail = err.what();
  }
  return c;
}

ClaimResult bar_quotient_claim() {
  ClaimResult c;
  c.kind = ClaimKind::Ideal;
  c.subject = "BarFourTwo";
  c.parameters = "field=q, eta=2";
  const std::vector<std::string> ideal{"p20 + p1 + 2*a2 + 2*a0 + a1 + am1", "p21 + p1 + a2 + a0 + 2*a1 + 2*am1"};
  c.statement = "Span{" + ideal[0] + ", " + ideal[1] +
                "} is an ideal with a 5-dimensional dihedral quotient of axial dimension 4";
  try {
    Instance inst = instantiate_entry(find_entry("BarFourTwo"), InstanceRequest{});
    const Algebra& alg = *inst.algebra;
    const FieldPtr& f = alg.field();
    Subspace s = span_of(alg, ideal);
    if (s.dim() != 2 || !is_ideal(alg, s)) {
      c.detail = "not a 2-dimensional ideal";
      return c;
    }
    const DihedralData& dd = *inst.dihedral;
    for (const auto& v : s.basis())
      if (!contains_vector(s, dd.f1.apply(v)) || !contains_vector(s, dd.tau0.apply(v))) {
        c.detail = "ideal is not invariant under the shift and flip";
        return c;
      }
    Quotient q = quotient(inst.algebra, s);
    std::vector<Vector> lift;
    for (size_t r : q.representatives) lift.push_back(alg.basis_vector(r));
    Matrix L = Matrix::from_columns(f, alg.dim(), lift);
    const Matrix& P = q.projection.matrix;
    std::map<int, Vector> declared;
    for (const auto& [i, v] : dd.declared) declared[i] = P.apply(v);
    Instance qi;
    qi.algebra = q.algebra;
    qi.eta = inst.eta;
    qi.dihedral = make_dihedral(*q.algebra, declared, P * dd.f1 * L, P * dd.tau0 * L, inst.eta,
                                static_cast<int>(q.algebra->dim()) + 2);
    VerifyOptions opts;
    opts.identities = false;
    VerifyReport r = verify_instance("BarFourTwo/I", qi, std::nullopt, opts);
    std::string adim;
    for (const auto& [k, v] : r.scalars)
      if (k == "adim") adim = v;
    std::string bad = failing(r, {"fusion", "dihedral", "axial dimension"});
    c.detail = "quotient dim " + std::to_string(q.algebra->dim()) + ", adim " + (adim.empty() ? "?" : adim);
    if (!bad.empty()) c.detail += "; " + bad;
    c.status = q.algebra->dim() == 5 && adim == "4" && bad.empty() ? Status::Pass : Status::Fail;
  } catch (const Error& err) {
    c.detail = err.what();
  }
  return c;
}

Instance at(const std::string& name, const std::string& field, const std::optional<std::string>& eta) {
  return instantiate_entry(find_entry(name), InstanceRequest{field, eta, std::nullopt});
}

Instance seven_mod5() {
  Presentation pres = find_entry("Seven").presentation;
  pres.constraints.exclude_eta.clear();
  return instantiate(pres, InstanceRequest{"gf:5", std::nullopt, std::nullopt});
}

}  // namespace

ClaimsReport check_claims(unsigned workers) {
  auto t0 = std::chrono::steady_clock::now();
  const auto& entries = catalog_entries();
  ClaimsReport rep;
  rep.entries.resize(entries.size());

  std::vector<ClaimResult> extra(8);
  std::vector<std::function<void()>> tasks;
  for (size_t i = 0; i < entries.size(); ++i) tasks.push_back([&, i] { rep.entries[i] = verify_default(entries[i]); });
  tasks.push_back([&] { extra[0] = ideal_locus_claim(find_entry("ThreeEv"), mpq_class(-1, 3)); });
  tasks.push_back([&] { extra[1] = ideal_locus_claim(find_entry("FourEv"), mpq_class(-1, 3)); });
  tasks.push_back([&] { extra[2] = ideal_characteristic_claim(find_entry("Seven"), 5); });
  tasks.push_back([&] {
    extra[3] = quotient_iso_claim("ThreeEv", "field=q, eta=-1/3", "ThreeEv(-1/3)/Span{p1} is isomorphic to ThreeEvX",
                                  [] { return at("ThreeEv", "q", "-1/3"); }, {"p1"},
                                  [] { return at("ThreeEvX", "q", std::nullopt); }, {"am1", "a0", "a1"});
  });
  tasks.push_back([&] {
    extra[4] = quotient_iso_claim("FourEv", "field=q, eta=-1/3", "FourEv(-1/3)/Span{p1} is isomorphic to FourEvX",
                                  [] { return at("FourEv", "q", "-1/3"); }, {"p1"},
                                  [] { return at("FourEvX", "q", std::nullopt); }, {"am1", "a0", "a1", "a2"});
  });
  tasks.push_back([&] {
    extra[5] = quotient_iso_claim("FiveThree", "field=q, eta=-1/3",
                                  "FiveThree(-1/3)/Span{am2 + am1 + a0 + a1 + a2} is isomorphic to FourEvX",
                                  [] { return at("FiveThree", "q", "-1/3"); }, {"am2 + am1 + a0 + a1 + a2"},
                                  [] { return at("FourEvX", "q", std::nullopt); }, {"am1", "a0", "a1", "a2"});
  });
  tasks.push_back([&] {
    extra[6] = quotient_iso_claim("Seven", "field=gf:5, eta=4/3", "Seven/Span{p1} in characteristic 5 is isomorphic to SevenX",
                                  seven_mod5, {"p1"}, [] { return at("SevenX", "gf:5", std::nullopt); },
                                  {"am3", "am2", "am1", "a0", "a1", "a2", "a3"});
  });
  tasks.push_back([&] { extra[7] = bar_quotient_claim(); });

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(tasks.size()));
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (size_t t; (t = next.fetch_add(1)) < tasks.size();) tasks[t]();
    });
  for (auto& th : pool) th.join();

  for (size_t i = 0; i < entries.size(); ++i) rep.claims.push_back(existence_claim(entries[i], rep.entries[i]));
  for (size_t i = 0; i < entries.size(); ++i) rep.claims.push_back(dimension_claim(entries[i], rep.entries[i]));
  for (auto& c : extra) rep.claims.push_back(std::move(c));
  rep.duration_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

std::string claims_text(const ClaimsReport& r) {
  std::ostringstream os;
  size_t pass = 0;
  for (const auto& c : r.claims) {
    std::string st = status_name(c.status);
    os << st << std::string(6 - st.size(), ' ') << claim_kind_name(c.kind) << "  " << c.subject << " [" << c.parameters
       << "]: " << c.statement;
    if (!c.detail.empty()) os << "  (" << c.detail << ")";
    os << "\n";
    if (c.status == Status::Pass) ++pass;
  }
  os << pass << "/" << r.claims.size() << " claims pass\n";
  os << "duration: " << r.duration_ms << " ms\n";
  return os.str();
}

namespace {

json canonical(const ClaimsReport& r) {
  json j = json::object();
  json entries = json::array();
  for (const auto& e : r.entries) entries.push_back(json::parse(report_canonical(e)));
  json claims = json::array();
  for (const auto& c : r.claims) {
    json o = json::object();
    o["kind"] = claim_kind_name(c.kind);
    o["subject"] = c.subject;
    o["parameters"] = c.parameters;
    o["statement"] = c.statement;
    o["status"] = status_name(c.status);
    o["detail"] = c.detail;
    claims.push_back(o);
  }
  j["result"] = r.passed() ? "pass" : "fail";
  j["claims"] = claims;
  j["entries"] = entries;
  return j;
}

}  // namespace

std::string claims_canonical(const ClaimsReport& r) { return canonical(r).dump(2); }

std::string claims_json(const ClaimsReport& r) {
  json j = json::object();
  j["canonical"] = canonical(r);
  json timing = json::object();
  timing["duration_ms"] = r.duration_ms;
  json per = json::object();
  for (const auto& e : r.entries) per[e.subject] = e.duration_ms;
  timing["entries_ms"] = per;
  j["timing"] = timing;
  return j.dump(2) + "\n";
}

}  // namespace axial
