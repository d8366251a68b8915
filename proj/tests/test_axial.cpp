#include "doctest.h"
#include "support.hpp"

using namespace testing_support;

namespace {

std::array<size_t, 4> dims_of(const AxisDecomposition& d) { return d.dims(); }

const IdentityCheck* find_check(const IdentityReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("split_eigenspace on FiveThree and ThreeEv") {
  Instance five = entry("FiveThree");
  const Algebra& alg = *five.algebra;
  AxisDecomposition d = split_eigenspace(alg, vec("a0", five), five.eta, five.dihedral->tau0);
  CHECK(dims_of(d) == std::array<size_t, 4>{1, 1, 1, 2});
  CHECK(subspace_equals(d.parts[3], Subspace::span(alg.field(), 5, {vec("a1 - am1", five), vec("a2 - am2", five)})));

  AxisDecomposition di = split_eigenspace(alg, vec("a0", five), five.eta, Matrix::identity(alg.field(), 5));
  CHECK(di.parts[3].dim() == 0);
  CHECK(di.parts[2].dim() == 3);

  Instance three = entry("ThreeEv");
  AxisDecomposition t = split_eigenspace(*three.algebra, vec("a0", three), three.eta, three.dihedral->tau0);
  CHECK(subspace_equals(t.parts[3], Subspace::span(three.algebra->field(), 4, {vec("a1 - am1", three)})));
  CHECK(t.parts[2].dim() == 1);
}

TEST_CASE("split_eigenspace rejects non-semisimple data and trivial eta") {
  Instance five = entry("FiveThree");
  const Algebra& alg = *five.algebra;
  CHECK(kind_of([&] { split_eigenspace(alg, vec("a0 + a1", five), five.eta, five.dihedral->tau0); }) ==
        ErrorKind::NotIdempotent);
  // x is idempotent but ad(x) has the eigenvalue 1/3 outside {0, 1, eta}.
  auto f = q();
  Algebra::Table t;
  t[{0, 0}] = Vector::unit(f, 2, 0);
  t[{0, 1}] = el("1/3", f) * Vector::unit(f, 2, 1);
  Algebra small(f, {"x", "y"}, t);
  CHECK(kind_of([&] { split_eigenspace(small, Vector::unit(f, 2, 0), el("1/2", f), Matrix::identity(f, 2)); }) ==
        ErrorKind::NotSemisimple);
  CHECK(kind_of([&] { split_eigenspace(alg, vec("a0", five), FieldElement::one(alg.field()), five.dihedral->tau0); }) ==
        ErrorKind::ConstraintViolation);
}

TEST_CASE("fusion rule") {
  Instance five = entry("FiveThree");
  AxisDecomposition d = split_eigenspace(*five.algebra, vec("a0", five), five.eta, five.dihedral->tau0);
  CHECK(check_fusion(*five.algebra, d).empty());

  Instance gen = unconstrained("SixThree", "qeta");
  AxisDecomposition g = split_eigenspace(*gen.algebra, vec("a0", gen), gen.eta, gen.dihedral->tau0);
  CHECK_FALSE(check_fusion(*gen.algebra, g).empty());

  Instance nf = entry("SixThree");
  AxisDecomposition n = split_eigenspace(*nf.algebra, vec("a0", nf), nf.eta, nf.dihedral->tau0);
  CHECK(check_fusion(*nf.algebra, n).empty());
}

TEST_CASE("miyamoto involutions") {
  Instance five = entry("FiveThree");
  const Algebra& alg = *five.algebra;
  AxisDecomposition di = split_eigenspace(alg, vec("a0", five), five.eta, Matrix::identity(alg.field(), 5));
  CHECK(miyamoto(alg, di) == Matrix::identity(alg.field(), 5));
  AxisDecomposition d = split_eigenspace(alg, vec("a0", five), five.eta, five.dihedral->tau0);
  CHECK(miyamoto(alg, d) == five.dihedral->tau0);

  Instance three = entry("ThreeEv");
  AxisDecomposition t = split_eigenspace(*three.algebra, vec("a0", three), three.eta, three.dihedral->tau0);
  Matrix m = miyamoto(*three.algebra, t);
  CHECK(m.apply(vec("p1", three)) == vec("p1", three));
  CHECK(m.apply(vec("a0", three)) == vec("a0", three));
  CHECK(m.apply(vec("a1", three)) == vec("am1", three));
  CHECK(m.apply(vec("am1", three)) == vec("a1", three));
}

TEST_CASE("check_dihedral") {
  Instance five = entry("FiveThree");
  DihedralReport r = check_dihedral(*five.algebra, *five.dihedral, -2, 2);
  CHECK(r.fusion_ok);
  CHECK(r.dihedral_ok());

  DihedralData broken = *five.dihedral;
  broken.tau0 = Matrix::identity(five.algebra->field(), 5);
  DihedralReport b = check_dihedral(*five.algebra, broken, -2, 2);
  CHECK_FALSE(b.d3);

  Instance gen = unconstrained("SixThree", "qeta");
  DihedralReport g = check_dihedral(*gen.algebra, *gen.dihedral, -2, 3);
  CHECK_FALSE(g.fusion_ok);
}

TEST_CASE("axial dimension and relation witnesses") {
  Instance three = entry("ThreeEv");
  RelationWitness w3 = axial_dimension(*three.algebra, *three.dihedral, 6);
  CHECK(w3.adim == 3);
  CHECK(w3.even);
  CHECK(w3.case_tag == 3);
  const FieldPtr& f = three.algebra->field();
  CHECK(w3.relation.at(2) == FieldElement::one(f));
  CHECK(w3.relation.at(-1) == FieldElement::one(f));
  CHECK(w3.relation.at(1) == el("-2*eta", f));
  CHECK(w3.relation.at(0) == el("-2*eta", f));

  Instance five = entry("FiveThree");
  RelationWitness w5 = axial_dimension(*five.algebra, *five.dihedral, 7);
  CHECK(w5.adim == 5);
  CHECK_FALSE(w5.even);
  CHECK(w5.case_tag == 4);
  CHECK(w5.alpha[0].is_zero());
  CHECK(w5.alpha[1].is_zero());
  CHECK(w5.alpha[2].is_one());

  Instance seven = entry("Seven");
  RelationWitness w7 = axial_dimension(*seven.algebra, *seven.dihedral, 10);
  CHECK(w7.adim == 7);
  CHECK(w7.case_tag == 4);
  CHECK(w7.alpha[0].is_zero());
  CHECK(w7.alpha[1].is_one());
  CHECK(w7.alpha[2].is_one());
  CHECK(w7.alpha[3].is_one());
}

TEST_CASE("axial_dimension needs a window that stabilizes") {
  Instance five = entry("FiveThree");
  CHECK(kind_of([&] { axial_dimension(*five.algebra, *five.dihedral, 1); }) == ErrorKind::NoStabilization);
}

TEST_CASE("p vectors") {
  Instance three = entry("ThreeEv");
  CHECK(p_vector(*three.algebra, *three.dihedral, 1, 0) == vec("p1", three));

  Instance five = entry("FiveThree");
  CHECK(p_vector(*five.algebra, *five.dihedral, 2, 0) == p_vector(*five.algebra, *five.dihedral, 1, 0));
  CHECK(p_vector(*five.algebra, *five.dihedral, 1, 0) == vec("-eta/4*am2 - eta/4*am1 - eta/4*a0 - eta/4*a1 - eta/4*a2", five));

  Instance six = entry("SixThree");
  CHECK(p_vector(*six.algebra, *six.dihedral, 3, 0) == vec("-eta*a0 - eta*a3", six));
  CHECK(kind_of([&] { p_vector(*six.algebra, *six.dihedral, 40, 0); }) == ErrorKind::WindowTooSmall);
}

TEST_CASE("lambda coefficients") {
  Instance three = entry("ThreeEv");
  AxisDecomposition t = split_eigenspace(*three.algebra, vec("a0", three), three.eta, three.dihedral->tau0);
  CHECK(lambda_coefficient(t, vec("a0", three)).is_one());
  CHECK(lambda_coefficient(t, vec("a1", three)) == el("3*eta/4", three.algebra->field()));

  Instance six = entry("SixThree");
  AxisDecomposition s = split_eigenspace(*six.algebra, vec("a0", six), six.eta, six.dihedral->tau0);
  CHECK(lambda_coefficient(s, vec("a3", six)).is_zero());
}

TEST_CASE("identity suite examples") {
  Instance three = entry("ThreeEv");
  IdentityReport r3 = identity_suite(*three.algebra, *three.dihedral);
  REQUIRE(find_check(r3, "a0*p10"));
  CHECK(find_check(r3, "a0*p10")->status == Status::Pass);
  CHECK(*r3.scalars.at("lambda1") == el("3*eta/4", three.algebra->field()));

  Instance four = entry("FourEv");
  IdentityReport r4 = identity_suite(*four.algebra, *four.dihedral);
  REQUIRE(find_check(r4, "p*p = pi*p"));
  CHECK(find_check(r4, "p*p = pi*p")->status == Status::Pass);
  CHECK(r4.scalars.at("pi").has_value());

  Instance five = entry("FiveThree");
  IdentityReport r5 = identity_suite(*five.algebra, *five.dihedral);
  REQUIRE(find_check(r5, "p21 = p20 or mu = 0"));
  CHECK(find_check(r5, "p21 = p20 or mu = 0")->status == Status::Pass);
  CHECK(r5.passed());

  // lambda1 differs from 3*eta/4 in SixThree, so the corollary is vacuous.
  Instance six = entry("SixThree");
  IdentityReport r6 = identity_suite(*six.algebra, *six.dihedral);
  REQUIRE(find_check(r6, "p21 = p20 or mu = 0"));
  CHECK(find_check(r6, "p21 = p20 or mu = 0")->status == Status::Skipped);
}

TEST_CASE("relation_transform examples") {
  auto f = q();
  FieldElement c = el("5/2", f), one = FieldElement::one(f), zero = FieldElement::zero(f);
  CHECK(relation_transform({c}, RelationMode::Lemma23Part2) == std::vector<FieldElement>{zero, c});
  CHECK(relation_transform({one, one}, RelationMode::Lemma23Part2) == std::vector<FieldElement>{zero, el("2", f), one});
  std::vector<FieldElement> a{el("3", f), el("1", f), el("7", f)};
  CHECK(relation_transform(a, RelationMode::Lemma24Part3) == std::vector<FieldElement>{el("2", f), el("-6", f), el("7", f)});
}
