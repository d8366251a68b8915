#include "axial/axial.hpp"
#include "axial/errors.hpp"

namespace axial {

namespace {

// alpha_i with zero outside [0, k] unless a boundary override applies.
struct Seq {
  const std::vector<FieldElement>& a;
  FieldElement zero;
  std::optional<FieldElement> minus_one;

  FieldElement at(int i) const {
    if (i == -1 && minus_one) return *minus_one;
    if (i < 0 || i >= static_cast<int>(a.size())) return zero;
    return a[i];
  }
};

}  // namespace

// Outputs for the first four modes are coefficients of (a_j - a_{-j}) for
// j = 0, 1, ...; the j = 0 slot is always zero and kept for alignment.  The
// last mode outputs coefficients of (a_{j+1} - a_{-j}) for j = 1..k.
std::vector<FieldElement> relation_transform(const std::vector<FieldElement>& coeffs, RelationMode mode) {
  if (coeffs.empty()) throw Error(ErrorKind::InvalidInput, "relation_transform needs at least one coefficient");
  const FieldPtr& f = coeffs.front().field();
  const FieldElement zero = FieldElement::zero(f);
  const FieldElement two = FieldElement::from_integer(f, 2);
  const int k = static_cast<int>(coeffs.size()) - 1;
  std::vector<FieldElement> out;
  switch (mode) {
    case RelationMode::Lemma23Part2: {
      Seq s{coeffs, zero, -coeffs[0]};
      out.push_back(zero);
      for (int j = 1; j <= k; ++j) out.push_back(s.at(j) + s.at(j - 1));
      out.push_back(s.at(k));
      break;
    }
    case RelationMode::Lemma23Part1: {
      Seq s{coeffs, zero, -coeffs[0]};
      out.push_back(zero);
      for (int i = 1; i <= k + 1; ++i) {
        out.push_back(s.at(i + 1) + two * s.at(i) + two * s.at(i - 1) + s.at(i - 2));
      }
      out.push_back(s.at(k));
      break;
    }
    case RelationMode::Lemma24Part2: {
      Seq s{coeffs, zero, std::nullopt};
      out.push_back(zero);
      for (int j = 1; j <= k; ++j) out.push_back(s.at(j - 1) - s.at(j + 1));
      out.push_back(s.at(k));
      break;
    }
    case RelationMode::Lemma24Part1: {
      Seq s{coeffs, zero, k >= 1 ? coeffs[1] : zero};
      out.push_back(zero);
      for (int i = 1; i <= k + 1; ++i) out.push_back(s.at(i - 2) + s.at(i - 1) - s.at(i + 1) - s.at(i + 2));
      out.push_back(s.at(k));
      break;
    }
    case RelationMode::Lemma24Part3: {
      // Input is (alpha_1, ..., alpha_k).
      for (size_t i = 0; i + 1 < coeffs.size(); ++i) out.push_back(coeffs[i] - coeffs[i + 1]);
      out.push_back(coeffs.back());
      break;
    }
  }
  return out;
}

}  // namespace axial
