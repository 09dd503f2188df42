#include <functional>

#include "cubicdyn/realhomology.hpp"

namespace cubicdyn {

namespace {

// Rational function num/den over Z, unreduced.
struct Frac {
  IntPoly num, den;
  Frac(IntPoly n = IntPoly(), IntPoly d = IntPoly::constant(Int(1))) : num(std::move(n)), den(std::move(d)) {}
  friend Frac operator+(const Frac& a, const Frac& b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
  friend Frac operator-(const Frac& a, const Frac& b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
  friend Frac operator*(const Frac& a, const Frac& b) { return {a.num * b.num, a.den * b.den}; }
  friend Frac operator/(const Frac& a, const Frac& b) { return {a.num * b.den, a.den * b.num}; }
};

Frac c(long v) { return Frac(IntPoly::constant(Int(v))); }
Frac sgn(int e) { return c(e % 2 == 0 ? 1 : -1); }
// t^k, k may be negative
Frac tp(int k) {
  if (k >= 0) return Frac(IntPoly::monomial(Int(1), k));
  return Frac(IntPoly::constant(Int(1)), IntPoly::monomial(Int(1), -k));
}
// (-t)^k
Frac mt(int k) { return sgn(k) * tp(k); }
Frac poly(std::initializer_list<long> cs) { return Frac(int_poly(cs)); }

Frac phi_cyclic(int n1, int n2, int n3) {
  int N = n1 + n2 + n3;
  return sgn(N + 1) + sgn(n2 + n3 + 1) * poly({1, 0, 1}) * tp(n1) / poly({-1, 1}) +
         sgn(n2 + n3) * poly({1, 3, -1, 1}) * tp(n3) / poly({-1, 0, 1}) - poly({1, 0, 1}) * tp(n2) / poly({1, 1});
}

Frac phi_id_general(int n1, int n2) {
  return c(1) + sgn(n1) * tp(n1 + 1) - c(2) * tp(n2) + sgn(1 + n1) * tp(1 + n2) + tp(n1 + n2);
}

struct SwapRow {
  std::string name;
  int specificity;
  std::function<bool(int, int, int)> guard;
  // one or more readings of the same formula
  std::function<std::vector<std::pair<std::string, Frac>>(int, int, int)> phi;
};

std::vector<std::pair<std::string, Frac>> single(Frac f) { return {{"as printed", std::move(f)}}; }

const std::vector<SwapRow>& swap_phi_rows() {
  static const std::vector<SwapRow> rows = {
      {"n1=3, n2=4, n3=3", 3, [](int a, int b, int c3) { return a == 3 && b == 4 && c3 == 3; },
       [](int, int, int) { return single(poly({1, 0, 0, -1, -1, 1})); }},
      {"n1=1, n2=4, n3>=6", 2, [](int a, int b, int c3) { return a == 1 && b == 4 && c3 >= 6; },
       [](int, int, int) { return single(poly({1, -1, -1, 2, -1})); }},
      {"n1=1, n2>=5, n3>=n2-1", 1, [](int a, int b, int c3) { return a == 1 && b >= 5 && c3 >= b - 1; },
       [](int a, int b, int c3) {
         std::vector<std::pair<std::string, Frac>> out;
         for (auto [name, n] : {std::pair<std::string, int>{"n=n2", b}, {"n=n3", c3}, {"n=n1+n2+n3", a + b + c3}, {"n=n2+1", b + 1}})
           out.emplace_back(name, tp(n) + (c(-1) - tp(3) + c(2) * tp(n - 2)) / poly({-1, 1}));
         return out;
       }},
      {"n1=2, n2=3, n3>=6", 2, [](int a, int b, int c3) { return a == 2 && b == 3 && c3 >= 6; },
       [](int, int, int) { return single(poly({1, 0, -1, 0, 1, -1})); }},
      {"n3=2<n2-1", 1, [](int, int b, int c3) { return c3 == 2 && 2 < b - 1; },
       [](int a, int, int) { return single(c(1) + tp(3) - tp(a) - tp(1 + a) + tp(2 + a) - tp(3 + a)); }},
      {"n1=n3<n2-1", 1, [](int a, int b, int c3) { return a == c3 && c3 < b - 1; },
       [](int a, int, int) {
         return single(c(1) + sgn(a) * tp(a) + tp(2 * a) * poly({-1, 1}) +
                       c(2) * sgn(a) * tp(a) * (mt(a) + tp(1)) / poly({1, 1}));
       }},
      {"2<n3<=n1-1", 0, [](int a, int, int c3) { return 2 < c3 && c3 <= a - 1; },
       [](int a, int, int c3) {
         return single(c(1) + sgn(c3) * (tp(a) + tp(a + 1) + tp(c3 + 1)) + poly({-1, 1}) * tp(a + c3) -
                       c(2) * sgn(c3) * tp(a + 2) * (c(1) - mt(c3 - 2)) / poly({1, 1}));
       }},
      {"n1+1<=n3<n2-1", 0, [](int a, int b, int c3) { return a + 1 <= c3 && c3 < b - 1; },
       [](int a, int, int c3) {
         return single(c(1) + sgn(a) * (tp(1 + c3) - tp(a) * poly({1, 1})) + tp(a + c3) * poly({-1, 1}) +
                       c(2) * sgn(a + 1) * tp(2 + c3) * (c(1) - mt(a - 2)) / poly({1, 1}) +
                       c(2) * sgn(a + 1) * (tp(1 + c3) - tp(2 + a)) / poly({-1, 1}));
       }},
      {"n3>=n2-1", 0, [](int, int b, int c3) { return c3 >= b - 1; },
       [](int a, int b, int) {
         return single(c(1) + sgn(a) * tp(b) * poly({1, -1}) + tp(a + b) + sgn(1 + a) * tp(a) * poly({1, 1}) +
                       c(2) * sgn(1 + a) * (c(0) - tp(2 + a) + tp(b)) / poly({-1, 1}));
       }},
  };
  return rows;
}

PhiCheck check(std::string formula, std::string reading, const Frac& phi, int N, const IntPoly& chi_R) {
  PhiCheck pc;
  pc.formula = std::move(formula);
  pc.reading = std::move(reading);
  auto p = reciprocal_from_phi(phi.num, phi.den, N);
  if (!p) {
    pc.relation = PolyRelation::NotPolynomial;
    return pc;
  }
  pc.predicted = *p;
  pc.relation = compare_up_to_sign(*p, chi_R);
  return pc;
}

}  // namespace

std::optional<IntPoly> reciprocal_from_phi(const IntPoly& num, const IntPoly& den, int N) {
  // phi(1/t) = rev(num) t^{deg den} / (rev(den) t^{deg num})
  int da = num.degree(), db = den.degree();
  IntPoly ra = reverse(num), rb = reverse(den);
  IntPoly lhs = num * rb * IntPoly::monomial(Int(1), da);
  IntPoly rhs = IntPoly::monomial(Int((N + 1) % 2 ? -1 : 1), N + 1 + db) * ra * den;
  IntPoly top = lhs - rhs;
  IntPoly bottom = den * rb * IntPoly::monomial(Int(1), da) * int_poly({1, 1});
  auto [q, r] = divmod(to_rat(top), to_rat(bottom));
  if (!r.is_zero()) return std::nullopt;
  std::vector<Int> out;
  for (const auto& a : q.c) {
    if (a.get_den() != 1) return std::nullopt;
    out.push_back(a.get_num());
  }
  return IntPoly(std::move(out));
}

std::string AppendixAudit::str() const {
  switch (status) {
    case Status::Match: return "match";
    case Status::Mismatch: return "mismatch";
    case Status::Uncovered: return "uncovered";
  }
  return "?";
}

nlohmann::json AppendixAudit::to_json() const {
  nlohmann::json j;
  j["status"] = str();
  j["chi_R"] = cubicdyn::to_json(chi_R);
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json e{{"formula", c.formula},
                     {"reading", c.reading},
                     {"relation", to_string(c.relation)},
                     {"decisive", c.decisive}};
    if (c.relation != PolyRelation::NotPolynomial) e["predicted"] = cubicdyn::to_json(c.predicted);
    j["checks"].push_back(e);
  }
  return j;
}

AppendixAudit verify_appendix_phi(const OrbitData& od, const IntPoly& chi_R) {
  AppendixAudit out;
  out.chi_R = chi_R;
  const int n1 = od.n1(), n2 = od.n2(), n3 = od.n3(), N = od.total();
  switch (od.kind()) {
    case SigmaKind::Cycle123: {
      std::array<int, 3> s = od.n;
      std::sort(s.begin(), s.end());
      out.checks.push_back(check("cyclic", "sorted n1<=n2<=n3", phi_cyclic(s[0], s[1], s[2]), N, chi_R));
      out.checks.push_back(check("cyclic", "sorted, n2 and n3 exchanged", phi_cyclic(s[0], s[2], s[1]), N, chi_R));
      if (n1 == 3 && n2 == 3)
        out.checks.push_back(check("g-identity (3,3,n)", "g", Frac(g_poly()), N, chi_R));
      break;
    }
    case SigmaKind::Id:
      if (n1 == 2 && n2 == 3)
        out.checks.push_back(check("id (2,3,n3)", "as printed", poly({1, -2, 0, 3, -3, 1}), N, chi_R));
      else
        out.checks.push_back(check("id general", "as printed", phi_id_general(n1, n2), N, chi_R));
      break;
    case SigmaKind::Swap12:
      if (n1 < n2) {
        int top = -1;
        for (const auto& row : swap_phi_rows())
          if (row.guard(n1, n2, n3)) top = std::max(top, row.specificity);
        for (const auto& row : swap_phi_rows()) {
          if (!row.guard(n1, n2, n3)) continue;
          for (auto& [reading, phi] : row.phi(n1, n2, n3)) {
            out.checks.push_back(check("table4 " + row.name, reading, phi, N, chi_R));
            out.checks.back().decisive = row.specificity == top;
          }
        }
      }
      break;
  }
  if (out.checks.empty()) return out;
  // a formula matches when one of its readings matches; every decisive formula must match
  std::vector<std::string> formulas;
  for (const auto& c : out.checks)
    if (c.decisive && std::find(formulas.begin(), formulas.end(), c.formula) == formulas.end())
      formulas.push_back(c.formula);
  bool all = true;
  for (const auto& f : formulas) {
    bool any = false;
    for (const auto& c : out.checks)
      if (c.formula == f && c.match()) any = true;
    all = all && any;
  }
  out.status = all ? AppendixAudit::Status::Match : AppendixAudit::Status::Mismatch;
  return out;
}

AppendixAudit verify_appendix_phi(const OrbitData& od) {
  try {
    return verify_appendix_phi(od, charpoly_real(od));
  } catch (const NotRealizable&) {
  } catch (const NoDelta&) {
  }
  return AppendixAudit{};
}

}  // namespace cubicdyn
