#include <map>
#include <random>

#include "doctest.h"
#include "support.hpp"

using namespace testing_support;

namespace {

constexpr int kCases = 1000;
constexpr uint64_t kSeed = 0x5eed2024;

using Rng = std::mt19937_64;

long small(Rng& rng, long bound) { return static_cast<long>(rng() % (2 * bound + 1)) - bound; }

mpq_class rand_q(Rng& rng, long bound = 9) {
  mpq_class v(small(rng, bound), static_cast<long>(rng() % bound) + 1);
  v.canonicalize();
  return v;
}

QPoly rand_poly(Rng& rng, int max_degree) {
  std::vector<mpq_class> c;
  int d = static_cast<int>(rng() % (max_degree + 1));
  for (int i = 0; i <= d; ++i) c.push_back(rand_q(rng, 5));
  return QPoly(c);
}

FieldElement rand_elem(Rng& rng, const FieldPtr& f) {
  switch (f->kind()) {
    case FieldKind::Rationals:
      return FieldElement::from_rational(f, rand_q(rng));
    case FieldKind::PrimeField:
      return FieldElement::from_integer(f, mpz_class(static_cast<unsigned long>(rng() % f->p().get_ui())));
    case FieldKind::NumberField:
      return FieldElement::from_payload(f, rand_poly(rng, f->minpoly().degree() - 1), QPoly(mpq_class(1)));
    case FieldKind::RationalFunctions: {
      QPoly den;
      while (den.is_zero()) den = rand_poly(rng, 2);
      return FieldElement::from_payload(f, rand_poly(rng, 2), den);
    }
  }
  return FieldElement::zero(f);
}

FieldElement rand_int_elem(Rng& rng, const FieldPtr& f, long bound = 3) {
  return FieldElement::from_integer(f, mpz_class(small(rng, bound)));
}

Vector rand_vec(Rng& rng, const FieldPtr& f, size_t n) {
  Vector v(f, n);
  for (size_t i = 0; i < n; ++i) v[i] = rand_int_elem(rng, f);
  return v;
}

// Matrix entry: small polynomials over Q(eta), since random fractions make
// elimination blow up.
FieldElement rand_entry(Rng& rng, const FieldPtr& f) {
  if (f->kind() != FieldKind::RationalFunctions) return rand_elem(rng, f);
  return FieldElement::from_payload(f, QPoly(std::vector<mpq_class>{small(rng, 3), small(rng, 2)}), QPoly(mpq_class(1)));
}

Matrix rand_matrix(Rng& rng, const FieldPtr& f, size_t r, size_t c) {
  Matrix m(f, r, c);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < c; ++j)
      if (rng() % 3 != 0) m(i, j) = rand_entry(rng, f);
  // Occasionally copy a combination of earlier rows to force rank defects.
  if (r > 1 && rng() % 2 == 0) {
    size_t dst = rng() % r, src = rng() % r;
    FieldElement s = rand_int_elem(rng, f);
    for (size_t j = 0; j < c; ++j) m(dst, j) = s * m(src, j);
  }
  return m;
}

std::vector<FieldPtr> all_fields() {
  return {q(), parse_field_spec("gf:7"), parse_field_spec("gf:1000003"), parse_field_spec("nf:-1,2,1"),
          parse_field_spec("nf:-2,0,0,1"), qeta()};
}

struct Sample {
  std::string name;
  Instance inst;
};

// Entries at parameters where full verification passes, over fields that
// keep the arithmetic cheap enough for thousands of cases.
const std::vector<Sample>& verified_samples() {
  static const std::vector<Sample> s = [] {
    std::vector<Sample> v;
    v.push_back({"FiveThree", entry("FiveThree", "q", "3")});
    v.push_back({"FiveThree(eta)", entry("FiveThree")});
    v.push_back({"ThreeEvX", entry("ThreeEvX")});
    v.push_back({"FourEv(-1/3)", entry("FourEv", "q", "-1/3")});
    v.push_back({"FourEvX", entry("FourEvX")});
    v.push_back({"BarFourTwo", entry("BarFourTwo")});
    v.push_back({"SixThree", entry("SixThree")});
    v.push_back({"Seven", entry("Seven")});
    v.push_back({"SevenX", entry("SevenX")});
    for (auto& x : v) extend_window(*x.inst.dihedral, 14);
    return v;
  }();
  return s;
}

Matrix mat_pow(const Matrix& m, const Matrix& inv, int e) {
  Matrix r = Matrix::identity(m.field(), m.rows());
  for (int i = 0; i < std::abs(e); ++i) r = (e > 0 ? m : inv) * r;
  return r;
}

Matrix tau_at(const DihedralData& dd, int j) {
  return mat_pow(dd.f1, *dd.f1_inv, j) * dd.tau0 * mat_pow(dd.f1, *dd.f1_inv, -j);
}

// Formal sums over the symbols a_i.
using Formal = std::map<int, mpq_class>;

void add(Formal& f, int i, const mpq_class& c) {
  f[i] += c;
  if (f[i] == 0) f.erase(i);
}

Formal map_index(const Formal& f, const std::function<int(int)>& g) {
  Formal out;
  for (const auto& [i, c] : f) add(out, g(i), c);
  return out;
}

Formal combine(const Formal& a, const Formal& b, int sign) {
  Formal out = a;
  for (const auto& [i, c] : b) add(out, i, sign * c);
  return out;
}

Formal one_minus_tau(const Formal& r) { return combine(r, map_index(r, [](int i) { return -i; }), -1); }
Formal shift(const Formal& r, int s) {
  return map_index(r, [s](int i) { return i + s; });
}

// Coefficients of (a_j - a_{-j}) read off an antisymmetric sum; nullopt if
// the sum is not antisymmetric.
std::optional<std::vector<mpq_class>> antisymmetric_coeffs(const Formal& f, size_t len) {
  std::vector<mpq_class> out(len, 0);
  for (const auto& [i, c] : f) {
    if (i == 0) return std::nullopt;
    auto it = f.find(-i);
    if (it == f.end() || it->second != -c) return std::nullopt;
    if (i > 0) {
      if (static_cast<size_t>(i) >= len) return std::nullopt;
      out[i] = c;
    }
  }
  return out;
}

std::vector<mpq_class> rationals_of(const std::vector<FieldElement>& v) {
  std::vector<mpq_class> out;
  for (const auto& x : v) out.push_back(x.rational());
  return out;
}

}  // namespace

TEST_CASE("field laws") {
  Rng rng(kSeed);
  for (const auto& f : all_fields()) {
    CAPTURE(f->spec());
    const FieldElement zero = FieldElement::zero(f), one = FieldElement::one(f);
    for (int t = 0; t < kCases; ++t) {
      FieldElement x = rand_elem(rng, f), y = rand_elem(rng, f), z = rand_elem(rng, f);
      REQUIRE((x + y) + z == x + (y + z));
      REQUIRE((x * y) * z == x * (y * z));
      REQUIRE(x + y == y + x);
      REQUIRE(x * y == y * x);
      REQUIRE(x * (y + z) == x * y + x * z);
      REQUIRE(x + zero == x);
      REQUIRE(x * one == x);
      REQUIRE(x + (-x) == zero);
      REQUIRE(x - y == x + (-y));
      if (!x.is_zero()) {
        REQUIRE(x * x.inverse() == one);
        REQUIRE(y / x * x == y);
      }
    }
  }
}

TEST_CASE("canonical form and parse round trip") {
  Rng rng(kSeed + 1);
  for (const auto& f : all_fields()) {
    CAPTURE(f->spec());
    for (int t = 0; t < kCases; ++t) {
      FieldElement x = rand_elem(rng, f) * rand_elem(rng, f) + rand_elem(rng, f);
      FieldElement again = FieldElement::from_payload(f, x.numerator(), x.denominator());
      REQUIRE(again.numerator() == x.numerator());
      REQUIRE(again.denominator() == x.denominator());
      std::string text = x.to_string();
      CAPTURE(text);
      REQUIRE(parse_scalar(text, f) == x);
    }
  }
}

TEST_CASE("specialize is a ring homomorphism") {
  Rng rng(kSeed + 2);
  const FieldPtr src = qeta();
  for (const auto& target : {q(), parse_field_spec("gf:101"), parse_field_spec("nf:-1,2,1")}) {
    CAPTURE(target->spec());
    int done = 0, attempts = 0;
    while (done < kCases) {
      REQUIRE(++attempts < 20 * kCases);
      FieldElement x = rand_elem(rng, src), y = rand_elem(rng, src);
      FieldElement v = target->kind() == FieldKind::NumberField ? FieldElement::generator(target)
                                                                : rand_elem(rng, target);
      try {
        FieldElement sx = specialize(x, target, v), sy = specialize(y, target, v);
        REQUIRE(specialize(x * y, target, v) == sx * sy);
        REQUIRE(specialize(x + y, target, v) == sx + sy);
        REQUIRE(specialize(x - y, target, v) == sx - sy);
        ++done;
      } catch (const Error& e) {
        REQUIRE(e.kind() == ErrorKind::DenominatorVanishes);
      }
    }
  }
}

TEST_CASE("rref idempotence, rank-nullity and kernels") {
  Rng rng(kSeed + 3);
  const std::vector<FieldPtr> fields{q(), parse_field_spec("gf:7"), qeta()};
  for (int t = 0; t < kCases; ++t) {
    const FieldPtr& f = fields[t % fields.size()];
    size_t r = 1 + rng() % 6, c = 1 + rng() % 7;
    Matrix m = rand_matrix(rng, f, r, c);
    RrefResult a = rref(m);
    RrefResult b = rref(a.form);
    REQUIRE(b.form == a.form);
    REQUIRE(b.rank == a.rank);
    Subspace k = kernel(m);
    REQUIRE(a.rank + k.dim() == c);
    for (const auto& v : k.basis()) REQUIRE(m.apply(v).is_zero());
  }
}

TEST_CASE("solve_in_span agrees with membership") {
  Rng rng(kSeed + 4);
  const std::vector<FieldPtr> fields{q(), parse_field_spec("gf:5"), parse_field_spec("nf:-1,2,1")};
  for (int t = 0; t < kCases; ++t) {
    const FieldPtr& f = fields[t % fields.size()];
    size_t n = 1 + rng() % 6, m = 1 + rng() % 5;
    std::vector<Vector> sp;
    for (size_t i = 0; i < m; ++i) sp.push_back(rand_vec(rng, f, n));
    Vector target = rand_vec(rng, f, n);
    if (rng() % 2 == 0) {
      target = Vector(f, n);
      for (const auto& s : sp) target += rand_int_elem(rng, f) * s;
    }
    auto sol = solve_in_span(target, sp);
    REQUIRE(sol.has_value() == contains_vector(Subspace::span(f, n, sp), target));
    if (sol) {
      Vector back(f, n);
      for (size_t i = 0; i < m; ++i) back += (*sol)[i] * sp[i];
      REQUIRE(back == target);
    }
  }
}

TEST_CASE("subspace equality is canonical") {
  Rng rng(kSeed + 5);
  const std::vector<FieldPtr> fields{q(), parse_field_spec("gf:7"), qeta()};
  for (int t = 0; t < kCases; ++t) {
    const FieldPtr& f = fields[t % fields.size()];
    size_t n = 1 + rng() % 6, m = 1 + rng() % 4;
    std::vector<Vector> g;
    for (size_t i = 0; i < m; ++i) g.push_back(rand_vec(rng, f, n));
    std::vector<Vector> h;
    for (size_t i = 0; i < m + 1; ++i) {
      Vector v(f, n);
      for (const auto& x : g) v += rand_entry(rng, f) * x;
      h.push_back(v);
    }
    Subspace a = Subspace::span(f, n, g), b = Subspace::span(f, n, h);
    if (a.dim() == b.dim()) {
      REQUIRE(subspace_equals(a, b));
      REQUIRE(a.basis_matrix() == b.basis_matrix());
    } else {
      REQUIRE(b.dim() < a.dim());
      REQUIRE_FALSE(subspace_equals(a, b));
    }
  }
}

TEST_CASE("multiply is symmetric and bilinear") {
  Rng rng(kSeed + 6);
  const auto& samples = verified_samples();
  for (int t = 0; t < kCases; ++t) {
    const Sample& s = samples[t % samples.size()];
    const Algebra& alg = *s.inst.algebra;
    const FieldPtr& f = alg.field();
    Vector x = rand_vec(rng, f, alg.dim()), y = rand_vec(rng, f, alg.dim()), z = rand_vec(rng, f, alg.dim());
    FieldElement c = rand_elem(rng, f);
    REQUIRE(alg.multiply(x, y) == alg.multiply(y, x));
    REQUIRE(alg.multiply(c * x + y, z) == c * alg.multiply(x, z) + alg.multiply(y, z));
  }
}

TEST_CASE("quotient projection is a surjective homomorphism") {
  struct Case {
    Instance inst;
    std::vector<std::string> ideal;
  };
  std::vector<Case> cases{
      {unconstrained("ThreeEv", "q", "-1/3"), {"p1"}},
      {unconstrained("FourEv", "q", "-1/3"), {"p1"}},
      {unconstrained("Seven", "gf:5", "4/3"), {"p1"}},
      {entry("FiveThree", "q", "-1/3"), {"am2 + am1 + a0 + a1 + a2"}},
      {entry("BarFourTwo"), {"p20 + p1 + 2*a2 + 2*a0 + a1 + am1", "p21 + p1 + a2 + a0 + 2*a1 + 2*am1"}},
  };
  std::vector<Quotient> quots;
  for (const auto& c : cases) {
    std::vector<Vector> gens;
    for (const auto& g : c.ideal) gens.push_back(vec(g, c.inst));
    Subspace ideal = Subspace::span(c.inst.algebra->field(), c.inst.algebra->dim(), gens);
    REQUIRE(is_ideal(*c.inst.algebra, ideal));
    Quotient qt = quotient(c.inst.algebra, ideal);
    REQUIRE(rref(qt.projection.matrix).rank == qt.algebra->dim());
    REQUIRE(qt.algebra->dim() + ideal.dim() == c.inst.algebra->dim());
    REQUIRE(is_homomorphism(qt.projection));
    quots.push_back(qt);
  }
  Rng rng(kSeed + 7);
  for (int t = 0; t < kCases; ++t) {
    size_t i = t % cases.size();
    const Algebra& alg = *cases[i].inst.algebra;
    const AlgebraMap& p = quots[i].projection;
    Vector x = rand_vec(rng, alg.field(), alg.dim()), y = rand_vec(rng, alg.field(), alg.dim());
    REQUIRE(p.apply(alg.multiply(x, y)) == quots[i].algebra->multiply(p.apply(x), p.apply(y)));
    // Surjectivity: a random target vector has a preimage.
    Vector w = rand_vec(rng, alg.field(), quots[i].algebra->dim());
    std::vector<Vector> cols;
    for (size_t j = 0; j < alg.dim(); ++j) cols.push_back(p.matrix.column(j));
    REQUIRE(solve_in_span(w, cols).has_value());
  }
}

TEST_CASE("generated subalgebras are closed") {
  Rng rng(kSeed + 8);
  const auto& samples = verified_samples();
  for (int t = 0; t < kCases; ++t) {
    const Sample& s = samples[t % samples.size()];
    const Algebra& alg = *s.inst.algebra;
    const FieldPtr& f = alg.field();
    const DihedralData& dd = *s.inst.dihedral;
    std::vector<Vector> gens;
    size_t m = 1 + rng() % 2;
    for (size_t i = 0; i < m; ++i) {
      // Mix axes with sparse random vectors so proper subalgebras occur.
      if (rng() % 2 == 0) {
        gens.push_back(dd.axis(static_cast<int>(small(rng, 3))));
      } else {
        Vector v(f, alg.dim());
        v[rng() % alg.dim()] = FieldElement::one(f);
        if (rng() % 2 == 0) v[rng() % alg.dim()] = rand_int_elem(rng, f);
        gens.push_back(v);
      }
    }
    Subspace sub = generated_subalgebra(alg, gens);
    for (const auto& g : gens) REQUIRE(contains_vector(sub, g));
    auto basis = sub.basis();
    for (size_t i = 0; i < basis.size(); ++i)
      for (size_t j = i; j < basis.size(); ++j) REQUIRE(contains_vector(sub, alg.multiply(basis[i], basis[j])));
  }
}

TEST_CASE("extend_from_generators returns homomorphisms") {
  Rng rng(kSeed + 9);
  const auto& samples = verified_samples();
  int ok = 0;
  for (int t = 0; t < kCases; ++t) {
    const Sample& s = samples[t % samples.size()];
    CAPTURE(s.name);
    const AlgebraPtr& alg = s.inst.algebra;
    const FieldPtr& f = alg->field();
    const DihedralData& dd = *s.inst.dihedral;
    int shift = static_cast<int>(small(rng, 3));
    int dir = rng() % 2 == 0 ? 1 : -1;
    // The axes a_-4..a_4 generate every sample; the image is a dihedral
    // group element.
    std::vector<std::pair<Vector, Vector>> pairs;
    for (int i = -4; i <= 4; ++i) pairs.emplace_back(dd.axis(i), dd.axis(shift + dir * i));
    bool perturbed = rng() % 4 == 0;
    if (perturbed) pairs[1].second = rand_vec(rng, f, alg->dim());
    ExtendResult r = extend_from_generators(alg, pairs, alg);
    REQUIRE(r.status != ExtendStatus::NotGenerating);
    if (!perturbed) REQUIRE(r.status == ExtendStatus::Ok);
    if (r.status != ExtendStatus::Ok) continue;
    ++ok;
    REQUIRE(r.map);
    REQUIRE(is_homomorphism(*r.map));
    for (const auto& [src, img] : pairs) REQUIRE(r.map->apply(src) == img);
    for (int i = -2; i <= 3; ++i) {
      Vector g = r.map->apply(dd.axis(i));
      REQUIRE(alg->multiply(g, g) == g);
    }
  }
  CHECK(ok > kCases / 2);
}

namespace {

struct AxisCache {
  std::map<std::pair<size_t, int>, AxisDecomposition> dec;
  std::map<std::pair<size_t, int>, Matrix> miy;

  const AxisDecomposition& decomposition(size_t s, int j) {
    auto key = std::make_pair(s, j);
    auto it = dec.find(key);
    if (it != dec.end()) return it->second;
    const Sample& smp = verified_samples()[s];
    const DihedralData& dd = *smp.inst.dihedral;
    return dec.emplace(key, split_eigenspace(*smp.inst.algebra, dd.axis(j), dd.eta, tau_at(dd, j))).first->second;
  }
  const Matrix& miyamoto_at(size_t s, int j) {
    auto key = std::make_pair(s, j);
    auto it = miy.find(key);
    if (it != miy.end()) return it->second;
    return miy.emplace(key, miyamoto(*verified_samples()[s].inst.algebra, decomposition(s, j))).first->second;
  }
};

}  // namespace

TEST_CASE("ad acts on each part by its eigenvalue") {
  Rng rng(kSeed + 10);
  AxisCache cache;
  const auto& samples = verified_samples();
  for (int t = 0; t < kCases; ++t) {
    size_t s = t % samples.size();
    int j = static_cast<int>(small(rng, 2));
    const Algebra& alg = *samples[s].inst.algebra;
    const AxisDecomposition& d = cache.decomposition(s, j);
    int part = static_cast<int>(rng() % 4);
    Vector v(alg.field(), alg.dim());
    for (const auto& b : d.parts[part].basis()) v += rand_int_elem(rng, alg.field()) * b;
    REQUIRE(alg.multiply(d.axis, v) == d.rule.phi[part] * v);
  }
}

TEST_CASE("miyamoto involutions and conjugation coherence") {
  Rng rng(kSeed + 11);
  AxisCache cache;
  const auto& samples = verified_samples();
  for (int t = 0; t < kCases; ++t) {
    size_t s = t % samples.size();
    int j = static_cast<int>(small(rng, 3));
    CAPTURE(samples[s].name);
    CAPTURE(j);
    const Algebra& alg = *samples[s].inst.algebra;
    const DihedralData& dd = *samples[s].inst.dihedral;
    const FieldPtr& f = alg.field();
    const Matrix& g = cache.miyamoto_at(s, j);
    const Matrix& g0 = cache.miyamoto_at(s, 0);
    Vector x = rand_vec(rng, f, alg.dim()), y = rand_vec(rng, f, alg.dim());
    REQUIRE(g.apply(g.apply(x)) == x);
    REQUIRE(g.apply(alg.multiply(x, y)) == alg.multiply(g.apply(x), g.apply(y)));
    Matrix fj = mat_pow(dd.f1, *dd.f1_inv, j), fmj = mat_pow(dd.f1, *dd.f1_inv, -j);
    REQUIRE(g.apply(x) == fj.apply(g0.apply(fmj.apply(x))));
    REQUIRE(g.apply(dd.axis(j + 1)) == dd.axis(j - 1));
  }
}

TEST_CASE("theta = f1 tau0 reflects the window") {
  Rng rng(kSeed + 12);
  const auto& samples = verified_samples();
  std::vector<Matrix> theta;
  for (const auto& s : samples) theta.push_back(s.inst.dihedral->f1 * s.inst.dihedral->tau0);
  for (int t = 0; t < kCases; ++t) {
    size_t s = t % samples.size();
    const DihedralData& dd = *samples[s].inst.dihedral;
    int i = static_cast<int>(small(rng, 12));
    REQUIRE(theta[s].apply(dd.axis(i)) == dd.axis(1 - i));
  }
}

TEST_CASE("axial dimension is invariant under shifting the window") {
  Rng rng(kSeed + 13);
  const auto& samples = verified_samples();
  std::map<std::pair<size_t, int>, RelationWitness> cache;
  std::vector<RelationWitness> base;
  for (const auto& s : samples) base.push_back(axial_dimension(*s.inst.algebra, *s.inst.dihedral, 12));
  for (int t = 0; t < kCases; ++t) {
    size_t s = t % samples.size();
    int sh = static_cast<int>(small(rng, 3));
    auto key = std::make_pair(s, sh);
    if (!cache.count(key)) {
      const Sample& smp = samples[s];
      const DihedralData& dd = *smp.inst.dihedral;
      DihedralData moved =
          make_dihedral(*smp.inst.algebra, {{0, dd.axis(sh)}}, dd.f1, tau_at(dd, sh), dd.eta, 12);
      cache.emplace(key, axial_dimension(*smp.inst.algebra, moved, 12));
    }
    const RelationWitness& w = cache.at(key);
    CAPTURE(samples[s].name);
    CAPTURE(sh);
    REQUIRE(w.adim == base[s].adim);
    REQUIRE(w.case_tag == base[s].case_tag);
    REQUIRE(w.alpha == base[s].alpha);
  }
}

TEST_CASE("relation_transform agrees with formal application of tau0 and f1") {
  Rng rng(kSeed + 14);
  const FieldPtr f = q();
  for (int t = 0; t < kCases; ++t) {
    size_t k = rng() % 5;
    std::vector<mpq_class> a;
    for (size_t i = 0; i <= k; ++i) a.push_back(rand_q(rng));
    std::vector<FieldElement> alpha;
    for (const auto& x : a) alpha.push_back(FieldElement::from_rational(f, x));
    const int K = static_cast<int>(k);

    // Odd relation on 2k+1 axes: sum alpha_i (a_{i+1} - a_{-i}).
    Formal odd;
    for (int i = 0; i <= K; ++i) {
      add(odd, i + 1, a[i]);
      add(odd, -i, -a[i]);
    }
    Formal t2 = one_minus_tau(odd);
    Formal t1 = combine(combine(t2, shift(t2, 1), 1), shift(t2, -1), 1);
    auto c2 = antisymmetric_coeffs(t2, k + 2);
    auto c1 = antisymmetric_coeffs(t1, k + 3);
    REQUIRE(c2);
    REQUIRE(c1);
    REQUIRE(rationals_of(relation_transform(alpha, RelationMode::Lemma23Part2)) == *c2);
    REQUIRE(rationals_of(relation_transform(alpha, RelationMode::Lemma23Part1)) == *c1);

    // Even relation on 2k+1 axes: alpha_0 a_0 + sum alpha_i (a_i + a_{-i}).
    Formal even;
    add(even, 0, a[0]);
    for (int i = 1; i <= K; ++i) {
      add(even, i, a[i]);
      add(even, -i, a[i]);
    }
    Formal e2 = one_minus_tau(shift(even, 1));
    Formal e1 = one_minus_tau(combine(shift(even, 1), shift(even, 2), 1));
    auto d2 = antisymmetric_coeffs(e2, k + 2);
    auto d1 = antisymmetric_coeffs(e1, k + 3);
    REQUIRE(d2);
    REQUIRE(d1);
    REQUIRE(rationals_of(relation_transform(alpha, RelationMode::Lemma24Part2)) == *d2);
    REQUIRE(rationals_of(relation_transform(alpha, RelationMode::Lemma24Part1)) == *d1);

    // Linearity.
    FieldElement c = FieldElement::from_rational(f, rand_q(rng));
    std::vector<FieldElement> scaled;
    for (const auto& x : alpha) scaled.push_back(c * x);
    for (auto mode : {RelationMode::Lemma23Part1, RelationMode::Lemma23Part2, RelationMode::Lemma24Part1,
                      RelationMode::Lemma24Part2, RelationMode::Lemma24Part3}) {
      auto lhs = relation_transform(scaled, mode), rhs = relation_transform(alpha, mode);
      REQUIRE(lhs.size() == rhs.size());
      for (size_t i = 0; i < lhs.size(); ++i) REQUIRE(lhs[i] == c * rhs[i]);
    }
  }
}

TEST_CASE("transformed relations vanish in catalog algebras") {
  struct Carrier {
    std::string name;
    Instance inst;
    RelationWitness w;
    std::vector<RelationMode> modes;
  };
  std::vector<Carrier> carriers;
  auto add_carrier = [&](const std::string& name, Instance inst, std::vector<RelationMode> modes) {
    extend_window(*inst.dihedral, 16);
    RelationWitness w = axial_dimension(*inst.algebra, *inst.dihedral, 12);
    carriers.push_back({name, std::move(inst), std::move(w), std::move(modes)});
  };
  const std::vector<RelationMode> odd{RelationMode::Lemma23Part1, RelationMode::Lemma23Part2};
  const std::vector<RelationMode> even{RelationMode::Lemma24Part1, RelationMode::Lemma24Part2};
  add_carrier("FiveThree", entry("FiveThree"), odd);
  add_carrier("Seven", entry("Seven"), odd);
  add_carrier("SevenX", entry("SevenX"), odd);
  add_carrier("ThreeEvX", entry("ThreeEvX"), odd);
  add_carrier("FourEvX", entry("FourEvX"), even);
  add_carrier("FourEv", entry("FourEv"), even);
  for (const auto& c : carriers) {
    CAPTURE(c.name);
    REQUIRE(c.w.case_tag == (c.modes == odd ? 4 : 1));
  }

  Rng rng(kSeed + 15);
  for (int t = 0; t < kCases; ++t) {
    const Carrier& c = carriers[t % carriers.size()];
    const DihedralData& dd = *c.inst.dihedral;
    const Algebra& alg = *c.inst.algebra;
    RelationMode mode = c.modes[rng() % c.modes.size()];
    int s = static_cast<int>(small(rng, 4));
    CAPTURE(c.name);
    CAPTURE(s);
    auto coeffs = relation_transform(c.w.alpha, mode);
    Vector v(alg.field(), alg.dim());
    for (size_t j = 1; j < coeffs.size(); ++j) {
      int jj = static_cast<int>(j);
      v += coeffs[j] * (dd.axis(jj + s) - dd.axis(-jj + s));
    }
    REQUIRE(v.is_zero());
    // The shifted witness itself also vanishes.
    Vector r(alg.field(), alg.dim());
    for (const auto& [i, x] : c.w.relation) r += x * dd.axis(i + s);
    REQUIRE(r.is_zero());
  }
}
