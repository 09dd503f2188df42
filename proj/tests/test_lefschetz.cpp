#include "doctest.h"

#include "cubicdyn/lefschetz.hpp"
#include "cubicdyn/realhomology.hpp"

using namespace cubicdyn;

TEST_CASE("complex count equals 2 + trace of the H2 action") {
  for (const char* s : {"1,1,8:123", "2,4,5:id", "3,3,4:123", "1,8,2:12", "2,2,7:123"}) {
    OrbitData od = parse_od(s);
    IntMatrix m = h2_action(od), mk = IntMatrix::identity(m.size());
    CHECK(complex_fix_count(od, 0) == 2 + od.total() + 1);
    for (int n = 1; n <= 30; ++n) {
      mk = mk * m;
      CAPTURE(s);
      CAPTURE(n);
      CHECK(complex_fix_count(od, n) == 2 + mk.trace());
    }
  }
  CHECK(complex_fix_count(make_od(3, 3, 7, SigmaKind::Cycle123), 1) == 4);
  CHECK(complex_fix_count(parse_od("2,4,5:id"), 1) == 4);
}

TEST_CASE("real index sum equals 1 - trace of the real action") {
  for (const char* s : {"1,1,8:123", "2,4,5:id", "3,3,5:123", "1,8,2:12", "1,4,8:123"}) {
    OrbitData od = parse_od(s);
    IntMatrix m = real_action_matrix(od).matrix, mk = IntMatrix::identity(m.size());
    for (int n = 1; n <= 30; ++n) {
      mk = mk * m;
      CHECK(real_index_sum(od, n) == 1 - mk.trace());
    }
  }
}

TEST_CASE("(2,4,5,id) real sum on multiples of 4") {
  OrbitData od = parse_od("2,4,5:id");
  const IntPoly s = int_poly({1, 0, 0, -1, -1, -1, 0, 0, 1});
  auto ps = power_sums(s, 40);
  for (int n = 4; n <= 40; n += 4) {
    // chi_R = (t-1)(t^2+1)s(-t): 1 - (1 + 2 + P_s(n)) on multiples of 4
    CHECK(real_index_sum(od, n) == -2 - ps[n]);
    CHECK(complex_fix_count(od, n) + real_index_sum(od, n) == 4);
  }
}

TEST_CASE("bookkeeping readings") {
  IntPoly chi = charpoly_complex(parse_od("2,4,5:id"));
  for (int n = 1; n <= 12; ++n) {
    CountBookkeeping b = count_bookkeeping(chi, n);
    CHECK(b.full == complex_fix_count(chi, n));
  }
  // Coxeter data: only the root at 1 is cyclotomic, so both readings agree
  IntPoly cox = charpoly_complex(parse_od("1,1,8:123"));
  for (int n = 1; n <= 12; ++n) CHECK(count_bookkeeping(cox, n).agree());
}

TEST_CASE("all-real certificate") {
  OrbitData od = parse_od("2,4,5:id");
  std::vector<int> ns;
  for (int n = 4; n <= 40; n += 4) ns.push_back(n);
  CertificateReport good = all_real_certificate(od, ns, Int(2));
  CHECK(good.all_pass);
  CHECK(good.failure.empty());
  CertificateReport bad = all_real_certificate(od, ns, Int(3));
  CHECK_FALSE(bad.all_pass);
  CHECK_FALSE(bad.failure.empty());
  // n = 2: 6 + 2 != 2 * 2
  CHECK_FALSE(all_real_certificate(od, {2}, Int(2)).all_pass);

  IntPoly chi = charpoly_complex(od), chi_R = charpoly_real(od);
  FixCountTable t = fix_count_table(chi, chi_R, 12);
  apply_certificate(t, good);
  for (const auto& r : t.rows) {
    CHECK(r.certified == (r.n % 4 == 0));
    if (r.certified) {
      CHECK(*r.fix_plus == 2);
      CHECK(*r.fix_minus == r.complex_count - 2);
    }
  }
  CHECK(t.to_csv().rfind("n,complex_count,index_sum,fix_plus,fix_minus,certified\n", 0) == 0);
}

TEST_CASE("holomorphic Lefschetz check") {
  using C = std::complex<double>;
  CHECK(holomorphic_lefschetz_check({{C(0), C(0)}}, 1) == 0);
  CHECK(holomorphic_lefschetz_check({{C(2), C(3)}}, 1) == doctest::Approx(0.5));
  CHECK_THROWS_AS(holomorphic_lefschetz_check({{C(0), C(0)}}, 2), std::invalid_argument);
}
