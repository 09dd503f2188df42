#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "cubicdyn/orbitspec.hpp"

using namespace cubicdyn;

namespace {

std::vector<Permutation3> all_perms() {
  std::vector<Permutation3> out;
  std::array<int, 3> a{1, 2, 3};
  do out.push_back(Permutation3{a});
  while (std::next_permutation(a.begin(), a.end()));
  return out;
}

// relabelling pi carries (n, sigma) to (n', pi sigma pi^-1)
bool is_relabelling(const std::array<int, 3>& n, const Permutation3& s, const Canonical& c) {
  Permutation3 pi{c.relabel};
  if (!pi.valid()) return false;
  for (int i = 1; i <= 3; ++i) {
    if (c.od.len(pi(i)) != n[i - 1]) return false;
    if (c.od.sigma(pi(i)) != pi(s(i))) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("permutations") {
  for (const auto& p : all_perms()) {
    CHECK(p.valid());
    CHECK(p.compose(p.inverse()) == Permutation3::id());
    CHECK(p.inverse().compose(p) == Permutation3::id());
  }
  CHECK(Permutation3::cycle123()(1) == 2);
  CHECK(Permutation3::cycle123().compose(Permutation3::cycle123()).compose(Permutation3::cycle123()) == Permutation3::id());
  CHECK_FALSE(Permutation3{{1, 1, 2}}.valid());
}

TEST_CASE("canonical form is a relabelling") {
  for (const auto& s : all_perms())
    for (int a = 1; a <= 4; ++a)
      for (int b = 1; b <= 4; ++b)
        for (int c = 1; c <= 4; ++c) {
          std::array<int, 3> n{a, b, c};
          Canonical k = canonicalize(n, s);
          CAPTURE(a);
          CAPTURE(b);
          CAPTURE(c);
          CHECK(k.od.canonical_sigma());
          CHECK(is_relabelling(n, s, k));
          Canonical again = canonicalize(k.od.n, k.od.sigma);
          CHECK(again.od == k.od);
        }
}

TEST_CASE("canonical forms of named data") {
  CHECK(parse_od("5,2,4:id") == make_od(2, 4, 5, SigmaKind::Id));
  CHECK(parse_od("2,3,4:13") == make_od(2, 4, 3, SigmaKind::Swap12));
  CHECK(parse_od("2,3,4:132") == make_od(2, 4, 3, SigmaKind::Cycle123));
  CHECK(format_od(parse_od("1,1,8:123")) == "1,1,8:123");
  CHECK_THROWS_AS(parse_od("1,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_od("1,2,3:14"), std::invalid_argument);
  CHECK_THROWS_AS(parse_od("0,2,3:id"), std::invalid_argument);
  CHECK_THROWS_AS(parse_od("a,2,3:id"), std::invalid_argument);
}

TEST_CASE("complex characteristic polynomial") {
  CHECK(charpoly_complex(parse_od("1,1,8:123")) == int_poly({-1, 0, 1, 1, 0, 0, 0, 0, -1, -1, 0, 1}));
  // Coxeter family t^n (t^3 - t - 1) + t^3 + t^2 - 1
  for (int n = 4; n <= 20; ++n) {
    IntPoly expect = IntPoly::monomial(Int(1), n) * int_poly({-1, -1, 0, 1}) + int_poly({-1, 0, 1, 1});
    CHECK(charpoly_complex(make_od(1, 1, n, SigmaKind::Cycle123)) == expect);
  }
  auto split = cyclotomic_split(charpoly_complex(parse_od("2,4,5:id")));
  CHECK(positive_lead(split.residual) == int_poly({1, 0, 0, -1, -1, -1, 0, 0, 1}));
  CHECK(charpoly_complex(parse_od("2,4,5:id")).degree() == 12);
}

TEST_CASE("charpoly agrees with the H2 action matrix") {
  for (const auto& k : {SigmaKind::Id, SigmaKind::Swap12, SigmaKind::Cycle123})
    for (int a = 1; a <= 5; ++a)
      for (int b = a; b <= 6; ++b)
        for (int c = 1; c <= 7; ++c) {
          OrbitData od = make_od(a, b, c, k);
          if (!(canonicalize(od.n, od.sigma).od == od)) continue;
          CAPTURE(format_od(od));
          IntPoly chi = charpoly_complex(od);
          CHECK(chi.degree() == od.total() + 1);
          CHECK(sign_at(chi, Rat(1)) == 0);
          IntMatrix m = h2_action(od);
          CHECK(positive_lead(charpoly(m)) == positive_lead(chi));
          CHECK(abs(determinant(m)) == 1);
        }
}

TEST_CASE("dynamical degree") {
  auto d = dynamical_degree(parse_od("1,1,8:123"));
  REQUIRE(d.has_value());
  CHECK(d->approx == doctest::Approx(1.17628081825991750).epsilon(1e-15));
  CHECK_FALSE(dynamical_degree(parse_od("1,1,7:123")).has_value());
  CHECK(entropy(parse_od("1,1,7:123")) == 0);
  CHECK(entropy(parse_od("2,4,5:id")) == doctest::Approx(std::log(1.28064)).epsilon(1e-4));
  for (int n = 4; n <= 30; ++n) {
    double v = dynamical_degree(make_od(3, 3, n, SigmaKind::Cycle123))->approx;
    CHECK(v > 1.431);
    CHECK(v < 1.684);
  }
  // realizability threshold: delta > 1 exactly when n1+n2+n3 >= 10 for Coxeter data
  for (int n = 1; n <= 12; ++n) CHECK(dynamical_degree(make_od(1, 1, n, SigmaKind::Cycle123)).has_value() == (n + 2 >= 10));
}

TEST_CASE("spectral summary") {
  SpectralSummary s = spectral_summary(parse_od("2,4,5:id"));
  CHECK(s.degree_check == 0);
  REQUIRE(s.delta.has_value());
  CHECK(s.delta->decimal(5) == "1.28063");
}
