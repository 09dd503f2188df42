#include "doctest.h"

#include <cmath>

#include "cubicdyn/realhomology.hpp"
#include "cubicdyn/sweep.hpp"

using namespace cubicdyn;

namespace {

std::vector<OrbitData> realizable_upto(int max_sum) {
  std::vector<OrbitData> out;
  for (const auto& od : canonical_orbit_data(max_sum, {SigmaKind::Id, SigmaKind::Swap12, SigmaKind::Cycle123}))
    if (realizability(od).kind == Verdict::Kind::Realizable) out.push_back(od);
  return out;
}

}  // namespace

TEST_CASE("Coxeter line class and interior signs") {
  for (int n = 8; n <= 14; ++n) {
    CAPTURE(n);
    auto cfg = marked_config(make_od(1, 1, n, SigmaKind::Cycle123));
    auto line = line_on_cubic(2, cfg, '-');
    auto cls = real_line_class(line, cfg);
    auto basis = blown_basis(cfg.od);
    for (size_t k = 0; k < basis.size(); ++k) {
      const Label& b = basis[k];
      int expect = 0;
      if (b == Label::blown(2, 1)) expect = 1;
      if (b.i == 3 && b.j >= 2) expect = b.j == n - 1 ? -1 : 1;
      CAPTURE(b.str());
      CHECK(cls[k] == expect);
    }
    for (int j = 1; j < n; ++j) CHECK(interior_sign(3, j, cfg) == ((j == n - 2 || j == n - 4) ? 1 : -1));
  }
}

TEST_CASE("structural invariants of the real action") {
  for (const auto& od : realizable_upto(14)) {
    CAPTURE(format_od(od));
    auto cfg = marked_config(od);
    HomologyAction a = real_action_matrix(cfg), b = inverse_action_matrix(cfg);
    const IntMatrix& m = a.matrix;
    CHECK(m.size() == od.total());
    CHECK(m * b.matrix == IntMatrix::identity(m.size()));
    CHECK(abs(determinant(m)) == 1);
    CHECK(m.max_abs() <= 1);
    IntPoly chi_R = charpoly_real(a);
    CHECK(chi_R.degree() == od.total());
    CHECK(chi_R == charpoly_real(b));
    CHECK(reciprocal_sign(chi_R) != 0);
    double delta = dynamical_degree(od)->approx;
    CHECK(spectral_radius(chi_R) <= delta + 1e-9);
  }
}

TEST_CASE("growth classes") {
  struct Case {
    const char* od;
    long order;
  };
  for (Case c : {Case{"1,4,8:123", 180}, Case{"2,3,5:123", 84}, Case{"3,4,5:123", 126}, Case{"3,4,6:123", 60},
                 Case{"3,5,5:123", 168}}) {
    Growth g = growth_class(parse_od(c.od));
    CAPTURE(c.od);
    CHECK(g.kind == Growth::Kind::Periodic);
    CHECK(g.order == c.order);
    CHECK(real_action_matrix(parse_od(c.od)).matrix.pow(c.order).is_identity());
  }
  Growth lin = growth_class(parse_od("1,3,9:123"));
  CHECK(lin.kind == Growth::Kind::Polynomial);
  CHECK(lin.degree == 1);
  Growth ex = growth_class(parse_od("1,1,8:123"));
  CHECK(ex.kind == Growth::Kind::Exponential);
  CHECK(ex.rho == doctest::Approx(1.17628081826).epsilon(1e-10));
  CHECK(ex.str() == "exponential");
}

TEST_CASE("entropy status") {
  EntropyStatus a = entropy_status(parse_od("1,1,8:123"));
  CHECK(a.maximal);
  CHECK(a.str() == "homology_maximal");
  EntropyStatus b = entropy_status(parse_od("3,3,5:123"));
  CHECK_FALSE(b.maximal);
  CHECK(b.rho_R < b.delta);
  for (const char* s : {"2,3,7:id", "2,4,6:id", "1,4,7:12", "1,5,4:12", "1,9,2:12", "2,5,5:123"})
    CHECK_MESSAGE(entropy_status(parse_od(s)).maximal, s);
}

TEST_CASE("(3,3,n) identity") {
  const IntPoly g = g_poly();
  CHECK(g == int_poly({1, 0, 0, 0, -2, 2, -1, 1}));
  for (int n = 4; n <= 16; ++n) {
    IntPoly chi_R = charpoly_real(make_od(3, 3, n, SigmaKind::Cycle123));
    // (t+1) chi_R = +-(g(t) + (-t)^n t^7 g(1/t))
    IntPoly rhs = g + IntPoly::monomial(Int(n % 2 ? -1 : 1), n) * reverse(g);
    IntPoly lhs = int_poly({1, 1}) * chi_R;
    CHECK((lhs == rhs || lhs == -rhs));
    CHECK(positive_lead(phi_33n(n)) == positive_lead(chi_R));
  }
}

TEST_CASE("polynomial comparison") {
  IntPoly p = int_poly({1, 2, 0, 1});
  CHECK(compare_up_to_sign(p, p) == PolyRelation::Equal);
  CHECK(compare_up_to_sign(-p, p) == PolyRelation::Negated);
  CHECK(compare_up_to_sign(p.negated_variable(), p) == PolyRelation::VariableNegated);
  CHECK(compare_up_to_sign(int_poly({1, 1}), p) == PolyRelation::Mismatch);
}

TEST_CASE("phi expansion") {
  // phi = 1 gives [1 - (-t)^{N+1}] / (t+1) = sum_{k<=N} (-t)^k
  auto r = reciprocal_from_phi(int_poly({1}), int_poly({1}), 4);
  REQUIRE(r.has_value());
  CHECK(*r == int_poly({1, -1, 1, -1, 1}));
  // phi = 1/(t-2) has no polynomial expansion
  CHECK_FALSE(reciprocal_from_phi(int_poly({1}), int_poly({-2, 1}), 4).has_value());
}

TEST_CASE("cyclic closed form with exchanged lengths") {
  for (const auto& od : realizable_upto(18)) {
    if (od.kind() != SigmaKind::Cycle123) continue;
    CAPTURE(format_od(od));
    AppendixAudit a = verify_appendix_phi(od);
    bool exchanged = false;
    for (const auto& c : a.checks)
      if (c.reading == "sorted, n2 and n3 exchanged" && c.match()) exchanged = true;
    CHECK(exchanged);
  }
}

TEST_CASE("(2,4,5,id) real characteristic polynomial") {
  IntPoly chi_R = charpoly_real(parse_od("2,4,5:id"));
  auto split = cyclotomic_split(chi_R);
  const IntPoly s = int_poly({1, 0, 0, -1, -1, -1, 0, 0, 1});
  CHECK(split.factors == std::map<int, int>{{1, 1}, {4, 1}});
  // the residual is s(-t)
  CHECK(positive_lead(split.residual) == positive_lead(s.negated_variable()));
}
