#include "axial/report.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "axial/errors.hpp"
#include "json.hpp"

namespace axial {

using json = nlohmann::ordered_json;

VerifyOptions parse_check_list(const std::string& text) {
  VerifyOptions o;
  o.fusion = o.dihedral = o.relations = o.identities = false;
  std::stringstream ss(text);
  std::string tok;
  bool any = false;
  while (std::getline(ss, tok, ',')) {
    any = true;
    if (tok == "all") {
      o.fusion = o.dihedral = o.relations = o.identities = true;
    } else if (tok == "fusion") {
      o.fusion = true;
    } else if (tok == "dihedral") {
      o.dihedral = true;
    } else if (tok == "relations") {
      o.relations = true;
    } else if (tok == "identities") {
      o.identities = true;
    } else {
      throw Error(ErrorKind::InvalidInput, "unknown check '" + tok + "'");
    }
  }
  if (!any) throw Error(ErrorKind::InvalidInput, "empty check list");
  return o;
}

bool VerifyReport::passed() const {
  for (const auto& c : checks)
    if (c.status == Status::Fail) return false;
  return true;
}

namespace {

// Joins distinct entries in first-seen order.
std::string join(const std::vector<std::string>& xs, const std::string& sep = "; ") {
  std::string out;
  std::vector<std::string> seen;
  for (const auto& x : xs) {
    if (std::find(seen.begin(), seen.end(), x) != seen.end()) continue;
    seen.push_back(x);
    if (!out.empty()) out += sep;
    out += x;
  }
  return out;
}

std::string vector_text(const std::vector<FieldElement>& xs) {
  std::vector<std::string> parts;
  for (const auto& x : xs) parts.push_back(x.to_string());
  return "[" + join(parts, ", ") + "]";
}

Status status_of(bool ok) { return ok ? Status::Pass : Status::Fail; }

}  // namespace

VerifyReport verify_instance(const std::string& subject, const Instance& inst,
                             const std::optional<ExpectedRelation>& expected, const VerifyOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  const Algebra& alg = *inst.algebra;
  VerifyReport r;
  r.subject = subject;
  r.field = alg.field()->spec();
  r.eta = inst.eta.to_string();
  r.dim = alg.dim();
  r.notes = inst.seed_notes;
  auto add = [&](const std::string& name, Status st, const std::string& detail = "") {
    r.checks.push_back({name, st, detail});
  };

  if (!inst.dihedral) {
    const std::string why = "no dihedral seed";
    if (opts.fusion) add("fusion", Status::Skipped, why);
    if (opts.dihedral) add("dihedral", Status::Skipped, why);
    if (opts.relations) add("axial dimension", Status::Skipped, why);
    if (opts.identities) add("identities", Status::Skipped, why);
  } else {
    const DihedralData& dd = *inst.dihedral;
    if (opts.fusion || opts.dihedral) {
      DihedralReport dr = check_dihedral(alg, dd, dd.declared.begin()->first, dd.declared.rbegin()->first);
      if (dr.dims_at_a0) {
        const auto& d = *dr.dims_at_a0;
        r.scalars.emplace_back("dims at a0", std::to_string(d[0]) + "," + std::to_string(d[1]) + "," +
                                                 std::to_string(d[2]) + "," + std::to_string(d[3]));
      }
      if (opts.fusion) add("fusion", status_of(dr.fusion_ok), join(dr.fusion_violations));
      if (opts.dihedral) {
        for (const char* tag : {"D1", "D2", "D3"}) {
          std::vector<std::string> mine;
          for (const auto& v : dr.violations)
            if (v.rfind(tag, 0) == 0) mine.push_back(v.substr(std::string(tag).size() + 2));
          add(std::string("dihedral ") + tag, status_of(mine.empty()), join(mine));
        }
      }
    }
    if (opts.relations) {
      int window = opts.window ? *opts.window : static_cast<int>(alg.dim()) + 2;
      try {
        RelationWitness w = axial_dimension(alg, dd, window);
        r.scalars.emplace_back("adim", std::to_string(w.adim));
        r.scalars.emplace_back("relation", w.even ? "even" : "odd");
        r.scalars.emplace_back("relation case", std::to_string(w.case_tag));
        r.scalars.emplace_back("alpha", vector_text(w.alpha));
        if (expected) {
          add("axial dimension", status_of(w.adim == expected->adim),
              "expected " + std::to_string(expected->adim) + ", found " + std::to_string(w.adim));
          bool case_ok = w.even == expected->even && w.case_tag == expected->case_tag;
          add("relation case", status_of(case_ok),
              std::string("expected ") + (expected->even ? "even" : "odd") + " case " +
                  std::to_string(expected->case_tag) + ", found " + (w.even ? "even" : "odd") + " case " +
                  std::to_string(w.case_tag));
          bool alpha_ok = w.alpha == inst.expected_alpha;
          add("relation coefficients", status_of(alpha_ok),
              "expected " + vector_text(inst.expected_alpha) + ", found " + vector_text(w.alpha));
        } else {
          add("axial dimension", Status::Pass, "not documented; found " + std::to_string(w.adim));
        }
      } catch (const Error& e) {
        add("axial dimension", Status::Fail, e.what());
      }
    }
    if (opts.identities) {
      try {
        IdentityReport ir = identity_suite(alg, dd);
        for (const auto& [name, value] : ir.scalars) r.scalars.emplace_back(name, value ? value->to_string() : "undefined");
        r.scalars.emplace_back("dim <a0,a1>", ir.dim_a0_a1 ? std::to_string(*ir.dim_a0_a1) : "undefined");
        for (const auto& c : ir.checks) add("identity: " + c.name, c.status, c.detail);
      } catch (const Error& e) {
        add("identities", Status::Fail, e.what());
      }
    }
  }
  r.duration_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::string report_text(const VerifyReport& r) {
  std::ostringstream os;
  os << "subject: " << r.subject << "\n"
     << "field: " << r.field << "\n"
     << "eta: " << r.eta << "\n"
     << "dim: " << r.dim << "\n"
     << "checks:\n";
  for (const auto& c : r.checks) {
    std::string st = status_name(c.status);
    os << "  " << st << std::string(8 - st.size(), ' ') << c.name;
    if (!c.detail.empty()) os << "  (" << c.detail << ")";
    os << "\n";
  }
  if (!r.scalars.empty()) {
    os << "scalars:\n";
    for (const auto& [k, v] : r.scalars) os << "  " << k << " = " << v << "\n";
  }
  if (!r.notes.empty()) {
    os << "notes:\n";
    for (const auto& n : r.notes) os << "  " << n << "\n";
  }
  os << "result: " << (r.passed() ? "pass" : "fail") << "\n";
  os << "duration: " << r.duration_ms << " ms\n";
  return os.str();
}

namespace {

json canonical_json(const VerifyReport& r) {
  json j = json::object();
  j["subject"] = r.subject;
  j["field"] = r.field;
  j["eta"] = r.eta;
  j["dim"] = r.dim;
  j["result"] = r.passed() ? "pass" : "fail";
  json checks = json::array();
  for (const auto& c : r.checks) {
    json e = json::object();
    e["name"] = c.name;
    e["status"] = status_name(c.status);
    e["detail"] = c.detail;
    checks.push_back(e);
  }
  j["checks"] = checks;
  json scalars = json::object();
  for (const auto& [k, v] : r.scalars) scalars[k] = v;
  j["scalars"] = scalars;
  j["notes"] = r.notes;
  return j;
}

}  // namespace

std::string report_canonical(const VerifyReport& r) { return canonical_json(r).dump(2); }

std::string report_json(const VerifyReport& r) {
  json j = json::object();
  j["canonical"] = canonical_json(r);
  j["timing"] = {{"duration_ms", r.duration_ms}};
  return j.dump(2) + "\n";
}

}  // namespace axial
