#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "axial/presentation.hpp"

namespace axial {

struct CheckResult {
  std::string name;
  Status status = Status::Skipped;
  std::string detail;
};

// Check groups selected by --check.
struct VerifyOptions {
  bool fusion = true;
  bool dihedral = true;
  bool relations = true;
  bool identities = true;
  std::optional<int> window;
};

// Parses "fusion,dihedral,relations,identities" or "all".
VerifyOptions parse_check_list(const std::string& text);

struct VerifyReport {
  std::string subject;
  std::string field;
  std::string eta;
  size_t dim = 0;
  std::vector<CheckResult> checks;
  std::vector<std::pair<std::string, std::string>> scalars;
  std::vector<std::string> notes;
  double duration_ms = 0;

  bool passed() const;
};

VerifyReport verify_instance(const std::string& subject, const Instance& inst,
                             const std::optional<ExpectedRelation>& expected, const VerifyOptions& opts);

std::string report_text(const VerifyReport& r);
// Deterministic document: {"canonical": {...}, "timing": {"duration_ms": ...}}.
std::string report_json(const VerifyReport& r);
// The canonical section alone, serialized.
std::string report_canonical(const VerifyReport& r);

}  // namespace axial
