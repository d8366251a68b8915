#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "axial/algebra.hpp"

namespace axial {

// Eigenvalue labels 0..3 with Phi = (0, 1, xi, eta); here xi = eta.
struct FusionRule {
  std::array<FieldElement, 4> phi;

  static FusionRule majorana(const FieldElement& eta);
  // Parts allowed to contain M^i * M^j.
  static const std::vector<int>& allowed(int i, int j);
};

struct AxisDecomposition {
  Vector axis;
  std::array<Subspace, 4> parts;
  FusionRule rule;

  std::array<size_t, 4> dims() const;
};

// M^0 = ker ad(a), M^1 = Fa, and the eta-eigenspace split by tau into its
// fixed (M^2) and negated (M^3) halves.
AxisDecomposition split_eigenspace(const Algebra& alg, const Vector& a, const FieldElement& eta, const Matrix& tau);

struct FusionViolation {
  int i, j;
  Vector product;
};

std::vector<FusionViolation> check_fusion(const Algebra& alg, const AxisDecomposition& dec);

// Fixes M^0 + M^1 + M^2 and negates M^3; throws MiyamotoNotAutomorphism if
// the result is not an algebra automorphism.
Matrix miyamoto(const Algebra& alg, const AxisDecomposition& dec);

// Axis window a_i for i in [lo, hi] generated from a_0 by f1, together with
// the maps.  declared holds the axes named in the presentation.
struct DihedralData {
  std::map<int, Vector> axes;
  std::map<int, Vector> declared;
  Matrix f1;
  std::optional<Matrix> f1_inv;
  Matrix tau0;
  FieldElement eta;

  int lo() const { return axes.begin()->first; }
  int hi() const { return axes.rbegin()->first; }
  const Vector& axis(int i) const;
  bool has(int i) const { return axes.count(i) != 0; }
};

// Builds the window [-n, n+1] starting from declared[0].
DihedralData make_dihedral(const Algebra& alg, const std::map<int, Vector>& declared, const Matrix& f1,
                           const Matrix& tau0, const FieldElement& eta, int n);
// Widens the window of dd to [-n, n+1].
void extend_window(DihedralData& dd, int n);

struct DihedralReport {
  bool fusion_ok = true;
  bool d1 = true, d2 = true, d3 = true;
  std::vector<std::string> violations;
  std::vector<std::string> fusion_violations;
  std::optional<std::array<size_t, 4>> dims_at_a0;

  bool dihedral_ok() const { return d1 && d2 && d3; }
};

// Checks axes a_j for j in [jlo, jhi]: primitivity, fusion, Miyamoto
// involutions against the conjugates f1^j tau0 f1^-j, and (D1)-(D3).
DihedralReport check_dihedral(const Algebra& alg, const DihedralData& dd, int jlo, int jhi);

struct RelationWitness {
  bool even = false;
  int case_tag = 0;
  int k = 0;
  std::vector<FieldElement> alpha;       // normalized so the last entry is 1
  std::map<int, FieldElement> relation;  // coefficient of a_i in the vanishing combination
  size_t adim = 0;
};

RelationWitness axial_dimension(const Algebra& alg, const DihedralData& dd, int window);

// p_{i,j} = a_j a_{i+j} - eta (a_j + a_{i+j}).
Vector p_vector(const Algebra& alg, const DihedralData& dd, int i, int j);

// Coefficient of the axis in the M^1 component of target.
FieldElement lambda_coefficient(const AxisDecomposition& dec, const Vector& target);

enum class RelationMode { Lemma23Part1, Lemma23Part2, Lemma24Part1, Lemma24Part2, Lemma24Part3 };

std::vector<FieldElement> relation_transform(const std::vector<FieldElement>& coeffs, RelationMode mode);

enum class Status { Pass, Fail, Skipped };
const char* status_name(Status s);

struct IdentityCheck {
  std::string name;
  Status status = Status::Skipped;
  std::string detail;
};

struct IdentityReport {
  std::map<std::string, std::optional<FieldElement>> scalars;  // lambda1..3, mu, nu, rho, pi
  std::vector<IdentityCheck> checks;
  std::optional<size_t> dim_a0_a1;

  bool passed() const;
};

IdentityReport identity_suite(const Algebra& alg, const DihedralData& dd);

}  // namespace axial
