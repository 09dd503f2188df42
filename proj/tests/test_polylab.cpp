#include "doctest.h"

#include <cmath>

#include "cubicdyn/intmatrix.hpp"
#include "cubicdyn/polylab.hpp"

using namespace cubicdyn;

namespace {

double eval_d(const IntPoly& p, double x) {
  double acc = 0;
  for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

// bisection on sign changes of a double evaluation; independent of the Sturm machinery
double bisect_largest_root(const IntPoly& p, double lo, double hi) {
  auto f = [&](double x) { return eval_d(p, x); };
  const int steps = 4000;
  double a = hi, fa = f(hi);
  for (int k = steps - 1; k >= 0; --k) {
    double b = lo + (hi - lo) * k / steps, fb = f(b);
    if ((fa > 0) != (fb > 0)) {
      for (int it = 0; it < 200; ++it) {
        double m = 0.5 * (a + b);
        if ((f(m) > 0) == (fa > 0)) a = m; else b = m;
      }
      return 0.5 * (a + b);
    }
    a = b;
    fa = fb;
  }
  return NAN;
}

IntMatrix companion(const IntPoly& p) {
  const int d = p.degree();
  IntMatrix m(d);
  for (int i = 1; i < d; ++i) m(i, i - 1) = 1;
  for (int i = 0; i < d; ++i) m(i, d - 1) = -p.coeff(i) / p.lead();
  return m;
}

// Phi_k as (t^k - 1) divided by Phi_d for proper divisors d
IntPoly naive_cyclotomic(int k) {
  IntPoly p = IntPoly::monomial(Int(1), k) - IntPoly::constant(Int(1));
  for (int d = 1; d < k; ++d)
    if (k % d == 0) p = *exact_div(p, naive_cyclotomic(d));
  return p;
}

const IntPoly s_poly = int_poly({1, 0, 0, -1, -1, -1, 0, 0, 1});
const IntPoly g_poly_ = int_poly({1, 0, 0, 0, -2, 2, -1, 1});

}  // namespace

TEST_CASE("reverse and reciprocity") {
  CHECK(reverse(int_poly({3, 2, 1})) == int_poly({1, 2, 3}));
  CHECK(reverse(int_poly({1, 3, 1})) == int_poly({1, 3, 1}));
  CHECK(is_reciprocal(int_poly({1, 3, 1})));
  CHECK(reciprocal_sign(int_poly({-1, 0, 1})) == -1);
  CHECK(reciprocal_sign(int_poly({3, 2, 1})) == 0);
  // t^7 g(1/t) = 1 - t + 2t^2 - 2t^3 + t^7
  CHECK(reverse(g_poly_) == int_poly({1, -1, 2, -2, 0, 0, 0, 1}));
}

TEST_CASE("exact division and gcd") {
  IntPoly a = int_poly({-1, 1}) * int_poly({1, 0, 1});
  CHECK(*exact_div(a, int_poly({1, 0, 1})) == int_poly({-1, 1}));
  CHECK_FALSE(exact_div(a, int_poly({1, 1})).has_value());
  CHECK(gcd(a, int_poly({1, 0, 1}) * int_poly({2, 1})) == int_poly({1, 0, 1}));
  CHECK(squarefree_part(int_poly({-1, 1}).pow(3) * int_poly({1, 1})) == int_poly({-1, 0, 1}));
}

TEST_CASE("Sturm counts") {
  CHECK(sturm_count(int_poly({-2, 0, 1}), Bound(0), Bound(2)) == 1);
  CHECK(sturm_count(int_poly({-2, 0, 1}), Bound::minus_infinity(), Bound::plus_infinity()) == 2);
  CHECK(sturm_count(s_poly, Bound(1), Bound(2)) == 1);
  // (1,1,7) Coxeter polynomial has no root above 1
  IntPoly chi7 = IntPoly::monomial(Int(1), 7) * int_poly({-1, -1, 0, 1}) + int_poly({-1, 0, 1, 1});
  CHECK(sturm_count(chi7, Bound(1), Bound::plus_infinity()) == 0);
  // grid sign changes of a polynomial with well separated simple roots
  IntPoly p = int_poly({-1, 3}) * int_poly({-5, 2}) * int_poly({7, 1}) * int_poly({1, 1, 1});
  int changes = 0;
  double prev = eval_d(p, -10.0);
  for (int k = 1; k <= 20000; ++k) {
    double v = eval_d(p, -10.0 + 20.0 * k / 20000);
    if ((v > 0) != (prev > 0)) ++changes;
    prev = v;
  }
  CHECK(sturm_count(p, Bound(-10), Bound(10)) == changes);
}

TEST_CASE("largest real root against bisection oracle") {
  IntPoly plastic = int_poly({-1, -1, 0, 1});
  auto r = largest_real_root(plastic, 30);
  REQUIRE(r.has_value());
  CHECK(r->approx == doctest::Approx(bisect_largest_root(plastic, 0, 3)).epsilon(1e-12));
  CHECK(r->approx == doctest::Approx(1.3247180).epsilon(1e-7));

  IntPoly lehmer = IntPoly::monomial(Int(1), 8) * plastic + int_poly({-1, 0, 1, 1});
  auto l = largest_real_root(lehmer, 30);
  REQUIRE(l.has_value());
  CHECK(l->approx == doctest::Approx(bisect_largest_root(lehmer, 1, 2)).epsilon(1e-12));
  CHECK(l->approx == doctest::Approx(1.17628).epsilon(1e-5));

  auto d = largest_real_root(s_poly, 30);
  CHECK(d->approx == doctest::Approx(1.28064).epsilon(1e-5));
  CHECK(Rat(d->hi - d->lo) < Rat(1, 1000000));
}

TEST_CASE("refine and decimal") {
  auto r = *largest_real_root(int_poly({-2, 0, 1}), 10);
  RootBracket f = refine(r, 200);
  CHECK(f.width() < Rat(Int(1), Int(1) << 200));
  CHECK(f.decimal(30) == "1.414213562373095048801688724209");
}

TEST_CASE("cyclotomic polynomials match the division oracle") {
  for (int k = 1; k <= 40; ++k) {
    CAPTURE(k);
    CHECK(cyclotomic(k) == naive_cyclotomic(k));
    CHECK(cyclotomic(k).degree() == euler_phi(k));
  }
}

TEST_CASE("cyclotomic splitting") {
  auto a = cyclotomic_split(int_poly({1, 1, 1}));
  CHECK(a.factors == std::map<int, int>{{3, 1}});
  CHECK(a.residual == int_poly({1}));

  auto b = cyclotomic_split(int_poly({1, 0, 1}) * s_poly);
  CHECK(b.factors == std::map<int, int>{{4, 1}});
  CHECK(positive_lead(b.residual) == s_poly);

  IntPoly c = int_poly({-1, 1}).pow(3) * int_poly({1, 1}) * s_poly;
  auto cs = cyclotomic_split(c);
  CHECK(cs.factors == std::map<int, int>{{1, 3}, {2, 1}});
  CHECK(positive_lead(cs.residual) == s_poly);
  CHECK(cs.reassemble() == c);
}

TEST_CASE("power sums against companion-matrix traces") {
  auto lucas = power_sums(int_poly({-1, -1, 1}), 4);
  CHECK(lucas == std::vector<Int>{2, 1, 3, 4, 7});
  auto cube = power_sums(int_poly({-1, 1}).pow(3), 3);
  CHECK(cube == std::vector<Int>{3, 3, 3, 3});
  for (const IntPoly& p : {s_poly, int_poly({1, -2, 0, 1, 0, 3, -1, 1}), int_poly({-1, 2, 0, -2, 2, 0, -1, 1})}) {
    auto ps = power_sums(p, 25);
    IntMatrix m = companion(p), mk = IntMatrix::identity(p.degree());
    for (int n = 1; n <= 25; ++n) {
      mk = mk * m;
      CHECK(ps[n] == mk.trace());
    }
  }
  CHECK(power_sums(s_poly, 1)[1] == 0);
}

TEST_CASE("charpoly of integer matrices") {
  IntMatrix m = companion(s_poly);
  CHECK(charpoly(m) == s_poly);
  CHECK(determinant(IntMatrix::identity(5)) == 1);
  IntMatrix n(3);
  n(0, 1) = 1;
  n(1, 2) = 1;
  CHECK(rank(n) == 2);
  CHECK(n.pow(3) == IntMatrix(3));
}

TEST_CASE("certified complex roots") {
  auto i = all_complex_roots(int_poly({1, 0, 1}));
  REQUIRE(i.roots.size() == 2);
  for (const auto& r : i.roots) {
    CHECK(std::abs(r.z.real()) < 1e-20);
    CHECK(std::abs(std::abs(r.z.imag()) - 1) < 1e-20);
  }
  // t^7 g(1/t): one real root near -1.4334, non-real moduli 0.719, 0.980, 1.185
  auto rs = all_complex_roots(reverse(g_poly_));
  REQUIRE(rs.roots.size() == 7);
  std::vector<double> real_roots_found, moduli;
  for (const auto& r : rs.roots) {
    if (std::abs(r.z.imag()) < 1e-12)
      real_roots_found.push_back(r.z.real());
    else if (r.z.imag() > 0)
      moduli.push_back(std::abs(r.z));
  }
  REQUIRE(real_roots_found.size() == 1);
  CHECK(real_roots_found[0] == doctest::Approx(-1.4334).epsilon(1e-4));
  std::sort(moduli.begin(), moduli.end());
  REQUIRE(moduli.size() == 3);
  CHECK(moduli[0] == doctest::Approx(0.719).epsilon(1e-3));
  CHECK(moduli[1] == doctest::Approx(0.980).epsilon(1e-3));
  CHECK(moduli[2] == doctest::Approx(1.185).epsilon(1e-3));
}

TEST_CASE("number field arithmetic") {
  auto r = *largest_real_root(int_poly({-2, 0, 1}), 20);
  ContextPtr ctx = make_context(int_poly({-2, 0, 1}), r);
  FieldElem d = FieldElem::generator(ctx);
  CHECK(nf_is_zero(d * d - FieldElem::from_rat(2, ctx)));
  CHECK_FALSE(nf_is_zero(d - FieldElem::from_rat(1, ctx)));
  CHECK(nf_sign(d - FieldElem::from_rat(Rat(141, 100), ctx)) == 1);
  CHECK(nf_sign(d - FieldElem::from_rat(Rat(142, 100), ctx)) == -1);
  FieldElem x = (d + FieldElem::from_rat(1, ctx)).inverse();
  CHECK(nf_is_zero(x * (d + FieldElem::from_rat(1, ctx)) - FieldElem::from_rat(1, ctx)));
  CHECK(nf_approx(x) == doctest::Approx(std::sqrt(2.0) - 1).epsilon(1e-14));
  CHECK(nf_is_zero(FieldElem(RatPoly(), ctx)));
}

TEST_CASE("json round trip") {
  CHECK(int_poly_from_json(to_json(s_poly)) == s_poly);
  CHECK(to_string(int_poly({-1, 0, 1})) == "t^2 - 1");
}
