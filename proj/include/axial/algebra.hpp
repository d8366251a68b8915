#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "axial/linalg.hpp"

namespace axial {

// Commutative algebra given by structure constants on a labelled basis.
// Only unordered pairs {i,j} are stored, so commutativity is structural.
class Algebra {
 public:
  using Table = std::map<std::pair<size_t, size_t>, Vector>;

  Algebra(FieldPtr f, std::vector<std::string> labels, const Table& table);

  const FieldPtr& field() const { return f_; }
  size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<size_t> index_of(const std::string& label) const;
  Vector basis_vector(size_t i) const { return Vector::unit(f_, dim(), i); }
  Vector zero_vector() const { return Vector(f_, dim()); }
  // Product of basis elements i and j; nullptr when it is zero.
  const Vector* product(size_t i, size_t j) const;

  Vector multiply(const Vector& x, const Vector& y) const;
  Matrix adjoint(const Vector& a) const;

 private:
  FieldPtr f_;
  std::vector<std::string> labels_;
  std::vector<std::optional<Vector>> table_;  // dense n*n, symmetric
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

// Linear map between algebras; columns are images of source basis vectors.
struct AlgebraMap {
  AlgebraPtr source;
  AlgebraPtr target;
  Matrix matrix;

  Vector apply(const Vector& v) const { return matrix.apply(v); }
};

Subspace generated_subalgebra(const Algebra& alg, const std::vector<Vector>& gens);
bool is_ideal(const Algebra& alg, const Subspace& s);
bool is_homomorphism(const AlgebraMap& m);
// is_homomorphism for a linear map of an algebra to itself.
bool is_endomorphism(const Algebra& alg, const Matrix& m);

struct Quotient {
  AlgebraPtr algebra;
  AlgebraMap projection;
  std::vector<size_t> representatives;  // source indices of the coset basis
};

// Coset basis: the non-pivot coordinates of the ideal's RREF.
Quotient quotient(const AlgebraPtr& alg, const Subspace& ideal);

enum class ExtendStatus { Ok, Inconsistent, NotGenerating };

struct ExtendResult {
  ExtendStatus status = ExtendStatus::Ok;
  std::optional<AlgebraMap> map;
  std::string detail;
};

const char* extend_status_name(ExtendStatus s);

// Closes the generators under products breadth-first (left operand earlier),
// carrying images along, and solves for the unique linear map.
ExtendResult extend_from_generators(const AlgebraPtr& alg, const std::vector<std::pair<Vector, Vector>>& pairs,
                                    const AlgebraPtr& target);

}  // namespace axial
