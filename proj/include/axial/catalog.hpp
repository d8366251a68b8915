#pragma once

#include <optional>
#include <string>
#include <vector>

#include "axial/presentation.hpp"
#include "axial/report.hpp"

namespace axial {

struct CatalogEntry {
  std::string name;
  std::string title;
  size_t dim = 0;
  // Field used when no --field is given, and for exported files.
  std::string default_field;
  Presentation presentation;
  std::vector<std::string> notes;
};

// Specializations of families defined elsewhere; listed without tables.
struct CatalogStub {
  std::string name;
  std::string note;
};

const std::vector<CatalogEntry>& catalog_entries();
const std::vector<CatalogStub>& catalog_stubs();
// Throws UnknownEntry.
const CatalogEntry& find_entry(const std::string& name);

// Fills the entry's default field when the request leaves it open.
Instance instantiate_entry(const CatalogEntry& e, InstanceRequest req);
// Presentation written over the default field, for export.
Presentation export_presentation(const CatalogEntry& e);

// Instantiates and runs every check; constraint errors propagate.
VerifyReport verify_entry(const CatalogEntry& e, const InstanceRequest& req, const VerifyOptions& opts);

enum class ClaimKind { Existence, Ideal, QuotientIsomorphism, Dimension };
const char* claim_kind_name(ClaimKind k);

struct ClaimResult {
  ClaimKind kind = ClaimKind::Existence;
  std::string subject;
  std::string parameters;
  std::string statement;
  Status status = Status::Fail;
  std::string detail;
};

struct ClaimsReport {
  std::vector<VerifyReport> entries;  // catalog order
  std::vector<ClaimResult> claims;
  double duration_ms = 0;

  bool passed() const;
};

// Verifies every entry at its stated parameters on up to `workers` threads
// and discharges the ideal, quotient and isomorphism claims.
ClaimsReport check_claims(unsigned workers = 0);

std::string claims_text(const ClaimsReport& r);
std::string claims_json(const ClaimsReport& r);
std::string claims_canonical(const ClaimsReport& r);

}  // namespace axial
