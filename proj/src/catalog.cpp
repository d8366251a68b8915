#include "axial/catalog.hpp"

namespace axial {

Instance instantiate_entry(const CatalogEntry& e, InstanceRequest req) {
  if (!req.field) req.field = e.default_field;
  return instantiate(e.presentation, req);
}

Presentation export_presentation(const CatalogEntry& e) {
  Presentation p = e.presentation;
  p.field = parse_field_spec(e.default_field);
  return p;
}

VerifyReport verify_entry(const CatalogEntry& e, const InstanceRequest& req, const VerifyOptions& opts) {
  Instance inst = instantiate_entry(e, req);
  return verify_instance(e.name, inst, e.presentation.expected, opts);
}

const char* claim_kind_name(ClaimKind k) {
  switch (k) {
    case ClaimKind::Existence: return "existence";
    case ClaimKind::Ideal: return "ideal";
    case ClaimKind::QuotientIsomorphism: return "quotient_isomorphism";
    case ClaimKind::Dimension: return "dimension";
  }
  return "?";
}

bool ClaimsReport::passed() const {
  for (const auto& c : claims)
    if (c.status != Status::Pass) return false;
  return true;
}

}  // namespace axial
