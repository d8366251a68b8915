#include <map>

#include "axial/catalog.hpp"
#include "axial/errors.hpp"

namespace axial {

namespace {

using Lin = std::map<std::string, mpq_class>;

const char* const kExcludeGlobal[] = {"0", "1", "1/2"};

struct Builder {
  CatalogEntry e;

  Builder(std::string name, std::string title, std::string field_spec, std::vector<std::string> basis) {
    e.name = std::move(name);
    e.title = std::move(title);
    e.default_field = field_spec;
    e.presentation.name = e.name;
    e.presentation.basis = std::move(basis);
    e.dim = e.presentation.basis.size();
  }
  Builder& field(const std::string& spec) {
    e.presentation.field = parse_field_spec(spec);
    return *this;
  }
  Builder& prod(const std::string& l, const std::string& r, VectorText v) {
    e.presentation.products.push_back({l, r, std::move(v)});
    return *this;
  }
  // Writes the coefficients in basis order, dropping zeros.
  Builder& prod(const std::string& l, const std::string& r, const Lin& v) {
    VectorText t;
    for (const auto& b : e.presentation.basis) {
      auto it = v.find(b);
      if (it != v.end() && it->second != 0) t.emplace_back(b, it->second.get_str());
    }
    return prod(l, r, std::move(t));
  }
  Builder& idempotents(const std::vector<std::string>& axes) {
    for (const auto& a : axes) prod(a, a, VectorText{{a, "1"}});
    return *this;
  }
  Builder& scalar_action(const std::string& p, const std::string& c) {
    for (const auto& b : e.presentation.basis) prod(b, p, VectorText{{b, c}});
    return *this;
  }
  Builder& dihedral(int lo, const std::vector<std::string>& axes,
                    std::vector<std::pair<std::string, VectorText>> shift,
                    std::vector<std::pair<std::string, VectorText>> flip) {
    DihedralText d;
    d.lo = lo;
    d.hi = lo + static_cast<int>(axes.size()) - 1;
    for (const auto& a : axes) d.axes.push_back(VectorText{{a, "1"}});
    d.shift_images = std::move(shift);
    d.flip_images = std::move(flip);
    e.presentation.dihedral = std::move(d);
    return *this;
  }
  Builder& exclude(std::vector<std::string> extra = {}, bool global = true) {
    auto& ex = e.presentation.constraints.exclude_eta;
    if (global) ex.assign(std::begin(kExcludeGlobal), std::end(kExcludeGlobal));
    for (auto& x : extra) ex.push_back(std::move(x));
    return *this;
  }
  Builder& fixed_eta(const std::string& v) {
    e.presentation.eta = v;
    e.presentation.constraints.eta = v;
    return *this;
  }
  Builder& expected(size_t adim, bool even, int case_tag, std::vector<std::string> alpha) {
    e.presentation.expected = ExpectedRelation{adim, even, case_tag, std::move(alpha)};
    return *this;
  }
  Builder& note(std::string n) {
    e.notes.push_back(std::move(n));
    return *this;
  }
};

VectorText one(const std::string& l) { return {{l, "1"}}; }

// a_i a_j = p + eta (a_i + a_j)
VectorText near(const std::string& p, const std::string& pc, const std::string& x, const std::string& y,
                const std::string& eta) {
  return {{p, pc}, {x, eta}, {y, eta}};
}

CatalogEntry three_ev() {
  Builder b("ThreeEv", "4-dimensional algebra with an even relation among three axes", "qeta",
            {"p1", "am1", "a0", "a1"});
  b.field("qeta")
      .scalar_action("p1", "-eta*(3*eta+1)/4")
      .idempotents({"am1", "a0", "a1"})
      .prod("am1", "a0", near("p1", "1", "am1", "a0", "eta"))
      .prod("a0", "a1", near("p1", "1", "a0", "a1", "eta"))
      .prod("am1", "a1", near("p1", "2*eta-1", "am1", "a1", "eta"))
      .dihedral(-1, {"am1", "a0", "a1"},
                {{"p1", one("p1")},
                 {"am1", one("a0")},
                 {"a0", one("a1")},
                 {"a1", {{"am1", "-1"}, {"a0", "2*eta"}, {"a1", "2*eta"}}}},
                {{"p1", one("p1")}, {"am1", one("a1")}, {"a0", one("a0")}, {"a1", one("am1")}})
      .exclude()
      .expected(3, true, 3, {"-2*eta", "1"})
      .note("shift image of a1 is a2 = 2*eta*(a0 + a1) - am1, solved from the even relation");
  return b.e;
}

CatalogEntry three_ev_x() {
  Builder b("ThreeEvX", "quotient of ThreeEv by Span{p1} at eta = -1/3", "q", {"am1", "a0", "a1"});
  b.field("q")
      .fixed_eta("-1/3")
      .idempotents({"am1", "a0", "a1"})
      .prod("am1", "a0", {{"am1", "-1/3"}, {"a0", "-1/3"}})
      .prod("a0", "a1", {{"a0", "-1/3"}, {"a1", "-1/3"}})
      .prod("am1", "a1", {{"am1", "-1/3"}, {"a1", "-1/3"}})
      .dihedral(-1, {"am1", "a0", "a1"}, {{"am1", one("a0")}, {"a0", one("a1")}, {"a1", one("am1")}},
                {{"am1", one("a1")}, {"a0", one("a0")}, {"a1", one("am1")}})
      .exclude()
      .expected(3, false, 4, {"0", "1"})
      .note("shift is the 3-cycle; the parent's even seed a2 = 2*eta*(a0 + a1) - am1 is not multiplicative here");
  return b.e;
}

CatalogEntry four_ev() {
  Builder b("FourEv", "5-dimensional algebra with an even relation among four axes", "qeta",
            {"p1", "am1", "a0", "a1", "a2"});
  const std::string al = "2*eta/(eta+1)";  // minus the relation coefficient
  b.field("qeta")
      .scalar_action("p1", "-eta*(3*eta+1)/4")
      .idempotents({"am1", "a0", "a1", "a2"})
      .prod("am1", "a0", near("p1", "1", "am1", "a0", "eta"))
      .prod("a0", "a1", near("p1", "1", "a0", "a1", "eta"))
      .prod("a1", "a2", near("p1", "1", "a1", "a2", "eta"))
      .prod("am1", "a1", near("p1", al, "am1", "a1", "eta"))
      .prod("a0", "a2", near("p1", al, "a0", "a2", "eta"))
      .prod("am1", "a2", near("p1", "(5*eta^2-1)/(eta+1)^2", "am1", "a2", "eta"))
      .dihedral(-1, {"am1", "a0", "a1", "a2"},
                {{"p1", one("p1")},
                 {"am1", one("a0")},
                 {"a0", one("a1")},
                 {"a1", one("a2")},
                 {"a2", {{"am1", "-1"}, {"a0", al}, {"a1", al}, {"a2", al}}}},
                {{"p1", one("p1")},
                 {"am1", one("a1")},
                 {"a0", one("a0")},
                 {"a1", one("am1")},
                 {"a2", {{"am1", al}, {"a0", al}, {"a1", al}, {"a2", "-1"}}}})
      .exclude({"-1"})
      .expected(4, true, 1, {"-2*eta/(eta+1)", "-2*eta/(eta+1)", "1"})
      .note("the listed squares a_i a_i = p1 + eta(a_0 + a_i) are read as nearest-neighbour products a_i a_(i+1)")
      .note("the coefficient of p1 in a_i a_(i+2) is taken as 2*eta/(eta+1); the extra factor eta breaks the shift")
      .note("shift image of a2 and flip image of a2 are solved from the even relation");
  b.e.presentation.constraints.nonzero = {"eta+1"};
  return b.e;
}

CatalogEntry four_ev_x() {
  Builder b("FourEvX", "quotient of FourEv by Span{p1} at eta = -1/3", "q", {"am1", "a0", "a1", "a2"});
  b.field("q").fixed_eta("-1/3").idempotents({"am1", "a0", "a1", "a2"});
  const std::vector<std::string> ax{"am1", "a0", "a1", "a2"};
  for (size_t i = 0; i < ax.size(); ++i)
    for (size_t j = i + 1; j < ax.size(); ++j) b.prod(ax[i], ax[j], VectorText{{ax[i], "-1/3"}, {ax[j], "-1/3"}});
  b.dihedral(-1, ax,
             {{"am1", one("a0")},
              {"a0", one("a1")},
              {"a1", one("a2")},
              {"a2", {{"am1", "-1"}, {"a0", "-1"}, {"a1", "-1"}, {"a2", "-1"}}}},
             {{"am1", one("a1")}, {"a0", one("a0")}, {"a1", one("am1")}, {"a2", {{"am1", "-1"}, {"a0", "-1"}, {"a1", "-1"}, {"a2", "-1"}}}})
      .exclude({"-1"})
      .expected(4, true, 1, {"1", "1", "1"});
  return b.e;
}

CatalogEntry bar_four_two() {
  Builder b("BarFourTwo", "7-dimensional algebra of Majorana type (2,2) with period-4 axes", "q",
            {"p1", "p20", "p21", "am1", "a0", "a1", "a2"});
  b.field("q").fixed_eta("2").scalar_action("p1", "-3").idempotents({"am1", "a0", "a1", "a2"});
  // Indices mod 4: a_-2 = a_2 and a_3 = a_-1.
  auto lab = [](int i) {
    static const char* const names[] = {"a0", "a1", "a2", "am1"};
    return std::string(names[((i % 4) + 4) % 4]);
  };
  for (int i = -1; i <= 2; ++i)
    for (int j = 0; j <= 1; ++j) {
      std::string p = j == 0 ? "p20" : "p21";
      if ((i - j) % 2 == 0) {
        b.prod(lab(i), p, VectorText{{lab(i), "-3"}});
      } else {
        Lin v{{"p1", -3}};
        v[lab(i - 1)] -= 3;
        v[lab(i + 1)] -= 3;
        v[lab(i)] -= 6;
        b.prod(lab(i), p, v);
      }
    }
  b.prod("p20", "p21", VectorText{{"p1", "9"}, {"am1", "9"}, {"a0", "9"}, {"a1", "9"}, {"a2", "9"}})
      .prod("p20", "p20", VectorText{{"p20", "-3"}})
      .prod("p21", "p21", VectorText{{"p21", "-3"}})
      .prod("am1", "a0", near("p1", "1", "am1", "a0", "2"))
      .prod("a0", "a1", near("p1", "1", "a0", "a1", "2"))
      .prod("a1", "a2", near("p1", "1", "a1", "a2", "2"))
      .prod("am1", "a2", near("p1", "1", "am1", "a2", "2"))
      .prod("a0", "a2", near("p20", "1", "a0", "a2", "2"))
      .prod("am1", "a1", near("p21", "1", "am1", "a1", "2"))
      .dihedral(-1, {"am1", "a0", "a1", "a2"},
                {{"p1", one("p1")},
                 {"p20", one("p21")},
                 {"p21", one("p20")},
                 {"am1", one("a0")},
                 {"a0", one("a1")},
                 {"a1", one("a2")},
                 {"a2", one("am1")}},
                {{"p1", one("p1")},
                 {"p20", one("p20")},
                 {"p21", one("p21")},
                 {"am1", one("a1")},
                 {"a0", one("a0")},
                 {"a1", one("am1")},
                 {"a2", one("a2")}})
      .exclude()
      .expected(4, false, 2, {"0", "1"})
      .note("the squares p20*p20 = -3*p20 and p21*p21 = -3*p21 are not listed; they are the unique values making "
            "the shift and flip multiplicative")
      .note("the unclosed product a_i a_j = p1 + eta(a_i + a_j is read with the parenthesis closed and eta = 2");
  return b.e;
}

CatalogEntry five_three() {
  const std::vector<std::string> ax{"am2", "am1", "a0", "a1", "a2"};
  Builder b("FiveThree", "5-dimensional algebra with a_i a_j = -eta/4*S + eta(a_i + a_j), S the axis sum", "qeta",
            ax);
  b.field("qeta").idempotents(ax);
  for (size_t i = 0; i < ax.size(); ++i)
    for (size_t j = i + 1; j < ax.size(); ++j) {
      VectorText v;
      for (size_t k = 0; k < ax.size(); ++k) v.emplace_back(ax[k], k == i || k == j ? "3*eta/4" : "-eta/4");
      b.prod(ax[i], ax[j], v);
    }
  b.dihedral(-2, ax,
             {{"am2", one("am1")}, {"am1", one("a0")}, {"a0", one("a1")}, {"a1", one("a2")}, {"a2", one("am2")}},
             {{"am2", one("a2")}, {"am1", one("a1")}, {"a0", one("a0")}, {"a1", one("am1")}, {"a2", one("am2")}})
      .exclude()
      .expected(5, false, 4, {"0", "0", "1"});
  return b.e;
}

CatalogEntry six_three() {
  Builder b("SixThree", "7-dimensional algebra with period-6 axes, eta a root of eta^2 + 2*eta - 1", "nf:-1,2,1",
            {"am2", "am1", "a0", "a1", "a2", "a3", "p1"});
  auto lab = [](int i) {
    static const char* const names[] = {"a0", "a1", "a2", "a3", "am2", "am1"};
    return std::string(names[((i % 6) + 6) % 6]);
  };
  b.field("qeta").scalar_action("p1", "-eta^2/2");
  for (int i = 0; i < 6; ++i) b.prod(lab(i), lab(i), one(lab(i)));
  for (int i = 0; i < 6; ++i) b.prod(lab(i), lab(i + 1), near("p1", "1", lab(i), lab(i + 1), "eta"));
  for (int i = 0; i < 6; ++i) {
    // a_i a_(i+2), each unordered pair once; a_i a_(i+3) = 0 is left implicit.
    if (i >= 4) continue;
    b.prod(lab(i), lab(i + 2), VectorText{{lab(i), "eta/2"}, {lab(i + 2), "eta/2"}, {lab(i + 4), "-eta/2"}});
  }
  b.prod(lab(4), lab(0), VectorText{{lab(4), "eta/2"}, {lab(0), "eta/2"}, {lab(2), "-eta/2"}});
  b.prod(lab(5), lab(1), VectorText{{lab(5), "eta/2"}, {lab(1), "eta/2"}, {lab(3), "-eta/2"}});
  std::vector<std::pair<std::string, VectorText>> shift{{"p1", one("p1")}}, flip{{"p1", one("p1")}};
  for (int i = 0; i < 6; ++i) {
    shift.emplace_back(lab(i), one(lab(i + 1)));
    flip.emplace_back(lab(i), one(lab(-i)));
  }
  b.dihedral(-2, {"am2", "am1", "a0", "a1", "a2", "a3"}, shift, flip)
      .exclude()
      .expected(6, false, 2, {"0", "0", "1"})
      .note("the scalar action x*p1 = -eta^2/2*x is taken as listed");
  b.e.presentation.constraints.minpoly = QPoly({-1, 2, 1});
  return b.e;
}

// Products of the 8-dimensional algebra at eta = 4/3; with_p1 = false gives
// the quotient by Span{p1}.
void seven_products(Builder& b, bool with_p1) {
  const mpq_class eta(4, 3);
  auto lab = [](int i) { return i >= 0 ? "a" + std::to_string(i) : "am" + std::to_string(-i); };
  auto add = [](Lin& v, const Lin& w, const mpq_class& c) {
    for (const auto& [k, x] : w) v[k] += c * x;
  };
  Lin p30{{lab(3), mpq_class(-2, 3)}, {lab(-3), mpq_class(-2, 3)}, {lab(2), mpq_class(1, 3)},
          {lab(-2), mpq_class(1, 3)}, {lab(1), mpq_class(-1, 3)}, {lab(-1), mpq_class(-1, 3)},
          {lab(0), mpq_class(-1, 3)}};
  Lin p31 = p30, p3m1 = p30;
  p31[lab(3)] += mpq_class(5, 3);
  p31[lab(-2)] -= mpq_class(5, 3);
  p3m1[lab(-3)] += mpq_class(5, 3);
  p3m1[lab(2)] -= mpq_class(5, 3);
  const Lin* p3[3] = {&p30, &p31, &p3m1};  // p_{3,i} by i mod 3
  Lin p1;
  if (with_p1) p1["p1"] = 1;

  if (with_p1) b.scalar_action("p1", "-5/3");
  for (int i = -3; i <= 3; ++i) b.prod(lab(i), lab(i), one(lab(i)));
  for (int i = -3; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) {
      int d = j - i;
      Lin v;
      if (d == 1 || d == 2 || d == 4) {
        v = p1;
        v[lab(i)] += eta;
        v[lab(j)] += eta;
      } else if (d == 3) {
        v = *p3[((i % 3) + 3) % 3];
        v[lab(i)] += eta;
        v[lab(j)] += eta;
      } else if (d == 5 && i == -3) {
        // a_-3 a_2
        v = p1;
        add(v, p3m1, -1);
        v[lab(-3)] += mpq_class(4, 3);
        v[lab(2)] -= mpq_class(1, 3);
      } else if (d == 5) {
        // a_-2 a_3
        v = p1;
        add(v, p31, -1);
        v[lab(3)] += mpq_class(4, 3);
        v[lab(-2)] -= mpq_class(1, 3);
      } else {
        // a_-3 a_3
        v = p30;
        v[lab(3)] += eta;
        v[lab(-3)] += eta;
      }
      b.prod(lab(i), lab(j), v);
    }
  std::vector<std::pair<std::string, VectorText>> shift, flip;
  if (with_p1) {
    shift.emplace_back("p1", one("p1"));
    flip.emplace_back("p1", one("p1"));
  }
  for (int i = -3; i <= 2; ++i) shift.emplace_back(lab(i), one(lab(i + 1)));
  shift.emplace_back(lab(3), VectorText{{lab(-3), "1"}, {lab(-2), "1"}, {lab(-1), "1"}, {lab(2), "-1"}, {lab(3), "-1"}});
  for (int i = -3; i <= 3; ++i) flip.emplace_back(lab(i), one(lab(-i)));
  b.dihedral(-3, {lab(-3), lab(-2), lab(-1), lab(0), lab(1), lab(2), lab(3)}, shift, flip);
}

CatalogEntry seven() {
  Builder b("Seven", "8-dimensional algebra at eta = 4/3", "q",
            {"p1", "am3", "am2", "am1", "a0", "a1", "a2", "a3"});
  b.field("q").fixed_eta("4/3");
  seven_products(b, true);
  b.exclude()
      .expected(7, false, 4, {"0", "1", "1", "1"})
      .note("p30 is read with -2/3*(a3 + a_-3); the printed -2/3*(a3 - a_-3) is not fixed by the flip")
      .note("shift image of a3 is a4 = a_-3 - a3 + a_-2 - a2 + a_-1, solved from the odd relation");
  return b.e;
}

CatalogEntry seven_x() {
  Builder b("SevenX", "quotient of the 8-dimensional algebra by Span{p1} in characteristic 5", "gf:5",
            {"am3", "am2", "am1", "a0", "a1", "a2", "a3"});
  b.field("gf:5").fixed_eta("4/3");
  seven_products(b, false);
  // 4/3 = 1/2 in GF(5), so only 0 and 1 are excluded here.
  b.exclude({"0", "1"}, false).expected(7, false, 4, {"0", "1", "1", "1"});
  b.e.presentation.constraints.characteristic = mpz_class(5);
  return b.e;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {three_ev(),   three_ev_x(), four_ev(),   four_ev_x(), bar_four_two(),
                                                    five_three(), six_three(),  seven(),     seven_x()};
  return entries;
}

const std::vector<CatalogStub>& catalog_stubs() {
  static const std::vector<CatalogStub> stubs = {
      {"Jordan(eta)", "primitive axial algebras of Jordan type"},
      {"3(eta,eta,0)", "specialization xi = eta of the 3-dimensional family"},
      {"3(-1/3,-1/3,0)x", "quotient of 3(eta,eta,0) at eta = -1/3"},
      {"IV1(1/4,1/4)", "specialization xi = eta = 1/4"},
      {"IV2(2,2,1/2)", "specialization xi = eta = 2"},
      {"IV2(xi,(1-xi^2)/2,-1/(xi+1))", "xi a root of xi^2 + 2*xi - 1"},
      {"V1(-1/3,-1/3)", "specialization xi = eta = -1/3"},
      {"VI2(4/9,4/9)", "specialization xi = eta = 4/9"},
  };
  return stubs;
}

const CatalogEntry& find_entry(const std::string& name) {
  for (const auto& e : catalog_entries())
    if (e.name == name) return e;
  throw Error(ErrorKind::UnknownEntry, "no catalog entry named '" + name + "'");
}

}  // namespace axial
