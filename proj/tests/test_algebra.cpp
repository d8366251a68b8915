#include "doctest.h"
#include "support.hpp"

using namespace testing_support;

TEST_CASE("axes are idempotent in every catalog algebra") {
  for (const auto& e : catalog_entries()) {
    CAPTURE(e.name);
    Instance inst = instantiate_entry(e, InstanceRequest{});
    Vector a0 = vec("a0", inst);
    CHECK(inst.algebra->multiply(a0, a0) == a0);
  }
}

TEST_CASE("multiplication is commutative by construction") {
  Instance inst = entry("Seven");
  Vector x = vec("p1 + 2*a1 - a3", inst), y = vec("am2 - 1/3*a0", inst);
  CHECK(inst.algebra->multiply(x, y) == inst.algebra->multiply(y, x));
}

TEST_CASE("generated subalgebras") {
  Instance inst = entry("FiveThree");
  const Algebra& alg = *inst.algebra;
  std::vector<Vector> all;
  for (size_t i = 0; i < alg.dim(); ++i) all.push_back(alg.basis_vector(i));
  CHECK(generated_subalgebra(alg, all).dim() == 5);
  CHECK(generated_subalgebra(alg, {vec("a0", inst)}).dim() == 1);
  CHECK(generated_subalgebra(alg, {vec("a0", inst), vec("a1", inst)}).dim() == 3);
}

TEST_CASE("ideals of Span{p1}") {
  CHECK(is_ideal(*entry("ThreeEv").algebra, Subspace::zero(qeta(), 4)));
  Instance gen = entry("ThreeEv");
  CHECK_FALSE(is_ideal(*gen.algebra, Subspace::span(gen.algebra->field(), 4, {vec("p1", gen)})));
  Instance at = entry("ThreeEv", "q", "-1/3");
  CHECK(is_ideal(*at.algebra, Subspace::span(at.algebra->field(), 4, {vec("p1", at)})));

  Instance s5 = unconstrained("Seven", "gf:5");
  CHECK(is_ideal(*s5.algebra, Subspace::span(s5.algebra->field(), 8, {vec("p1", s5)})));
  Instance s0 = entry("Seven");
  CHECK_FALSE(is_ideal(*s0.algebra, Subspace::span(s0.algebra->field(), 8, {vec("p1", s0)})));
}

TEST_CASE("quotients") {
  Instance at = entry("ThreeEv", "q", "-1/3");
  Quotient qt = quotient(at.algebra, Subspace::span(at.algebra->field(), 4, {vec("p1", at)}));
  CHECK(qt.algebra->dim() == 3);
  CHECK(qt.algebra->labels() == std::vector<std::string>{"am1", "a0", "a1"});

  Instance five = entry("FiveThree", "q", "-1/3");
  Quotient q5 = quotient(five.algebra, Subspace::span(five.algebra->field(), 5, {vec("am2 + am1 + a0 + a1 + a2", five)}));
  CHECK(q5.algebra->dim() == 4);

  Instance gen = entry("ThreeEv");
  CHECK(kind_of([&] { quotient(gen.algebra, Subspace::span(gen.algebra->field(), 4, {vec("p1", gen)})); }) ==
        ErrorKind::NotAnIdeal);
}

TEST_CASE("homomorphism checks") {
  Instance five = entry("FiveThree");
  const Algebra& alg = *five.algebra;
  CHECK(is_homomorphism(AlgebraMap{five.algebra, five.algebra, Matrix::identity(alg.field(), 5)}));
  CHECK(is_endomorphism(alg, five.dihedral->tau0));

  Instance three = entry("ThreeEv");
  const Algebra& t = *three.algebra;
  std::vector<Vector> cols{vec("a0", three), vec("am1", three), vec("p1", three), vec("a1", three)};
  CHECK_FALSE(is_endomorphism(t, Matrix::from_columns(t.field(), 4, cols)));
}

TEST_CASE("extend_from_generators") {
  Instance five = entry("FiveThree");
  const Algebra& alg = *five.algebra;
  std::vector<std::pair<Vector, Vector>> pairs;
  for (size_t i = 0; i < alg.dim(); ++i) pairs.emplace_back(alg.basis_vector(i), alg.basis_vector(i));
  ExtendResult id = extend_from_generators(five.algebra, pairs, five.algebra);
  REQUIRE(id.status == ExtendStatus::Ok);
  CHECK(id.map->matrix == Matrix::identity(alg.field(), 5));

  ExtendResult partial = extend_from_generators(five.algebra, {{vec("a0", five), vec("a0", five)}}, five.algebra);
  CHECK(partial.status == ExtendStatus::NotGenerating);

  // a0 -> a0, a1 -> a0 forces a0*a1 -> a0, inconsistent with linearity.
  ExtendResult bad = extend_from_generators(
      five.algebra, {{vec("a0", five), vec("a0", five)}, {vec("a1", five), vec("a0", five)}}, five.algebra);
  CHECK(bad.status == ExtendStatus::Inconsistent);

  // The shift is determined by the images of two adjacent axes.
  std::vector<std::pair<Vector, Vector>> gens;
  for (const char* l : {"am2", "am1", "a0", "a1", "a2"}) gens.emplace_back(vec(l, five), five.dihedral->f1.apply(vec(l, five)));
  ExtendResult sh = extend_from_generators(five.algebra, gens, five.algebra);
  REQUIRE(sh.status == ExtendStatus::Ok);
  CHECK(sh.map->matrix == five.dihedral->f1);
}

TEST_CASE("algebra tables are validated") {
  auto f = q();
  Algebra::Table t;
  t[{0, 0}] = Vector(f, 3);
  CHECK(kind_of([&] { Algebra(f, {"x", "y"}, t); }) == ErrorKind::DimensionMismatch);
  CHECK(kind_of([&] { Algebra(f, {"x", "x"}, {}); }) == ErrorKind::InvalidInput);
}
