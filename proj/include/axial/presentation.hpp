#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "axial/axial.hpp"

namespace axial {

// A vector written as label -> scalar literal pairs, in input order.
using VectorText = std::vector<std::pair<std::string, std::string>>;

struct ProductText {
  std::string left, right;
  VectorText value;
};

struct DihedralText {
  int lo = 0, hi = 0;
  std::vector<VectorText> axes;  // axes[t] is a_{lo+t}
  std::vector<std::pair<std::string, VectorText>> shift_images;
  std::vector<std::pair<std::string, VectorText>> flip_images;
};

struct ConstraintText {
  std::vector<std::string> nonzero;
  std::optional<mpz_class> characteristic;
  std::vector<std::string> exclude_eta;
  // Fixed value of eta; any other requested value is rejected.
  std::optional<std::string> eta;
  // The variable must satisfy this monic polynomial (ascending coefficients),
  // so a generic parameter is rejected.
  std::optional<QPoly> minpoly;
};

struct ExpectedRelation {
  size_t adim = 0;
  bool even = false;
  int case_tag = 0;
  std::vector<std::string> alpha;
};

// Symbolic algebra data: all scalars are literals over `field`.
struct Presentation {
  std::string name;
  FieldPtr field;
  std::optional<std::string> eta;  // eigenvalue when field has no variable
  std::vector<std::string> basis;
  std::vector<ProductText> products;
  std::optional<DihedralText> dihedral;
  ConstraintText constraints;
  std::optional<ExpectedRelation> expected;
};

Presentation presentation_from_json(const std::string& text);
std::string presentation_to_json(const Presentation& p);

// Parses a field spelling q | gf:<p> | qeta | nf:<c0,c1,...>.
FieldPtr parse_field_spec(const std::string& spec);

// Vector literal such as "p1", "a0 + 2*a1" or "(-1/3)*p1 - a2".
Vector parse_vector(const std::string& text, const Algebra& alg);

struct Instance {
  AlgebraPtr algebra;
  FieldElement eta;
  std::optional<DihedralData> dihedral;
  std::vector<std::string> seed_notes;  // extension problems in the seed
  std::vector<FieldElement> expected_alpha;
};

struct InstanceRequest {
  std::optional<std::string> field;  // CLI field spelling
  std::optional<std::string> eta;    // scalar literal over the target field
  std::optional<int> window;
};

// Checks constraints, converts every literal into the target field and
// builds the dihedral data from the seed.  Throws ConstraintViolation,
// DenominatorVanishes and parse errors.
Instance instantiate(const Presentation& p, const InstanceRequest& req);

// Converts a literal written over `source` into `target` at the given eta.
FieldElement convert_scalar(const std::string& text, const FieldPtr& source, const FieldPtr& target,
                            const FieldElement& eta);

}  // namespace axial
