#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "cubicdyn/orbitspec.hpp"

namespace cubicdyn {

// 2 + P_chi(n): Lefschetz number of f^n on the blowup; n = 0 gives 2 + deg chi.
Int complex_fix_count(const IntPoly& chi, int n);
Int complex_fix_count(const OrbitData& od, int n);
// 1 - P_{chi_R}(n): sum of fixed-point indices of f_R^n on the real surface.
Int real_index_sum(const IntPoly& chi_R, int n);
Int real_index_sum(const OrbitData& od, int n);

// Two readings of the complex count: every root of chi, or only the roots at 1
// plus the non-cyclotomic residual (other cyclotomic factors dropped).
struct CountBookkeeping {
  int n = 0;
  Int full;
  Int unit_root_only;
  bool agree() const { return full == unit_root_only; }
};
CountBookkeeping count_bookkeeping(const IntPoly& chi, int n);

struct FixCountRow {
  int n = 0;
  Int complex_count;
  Int index_sum;
  std::optional<Int> fix_plus, fix_minus;  // when every fixed point is real
  bool certified = false;
};

struct FixCountTable {
  std::vector<FixCountRow> rows;

  std::string to_csv() const;
  nlohmann::json to_json() const;
};

FixCountTable fix_count_table(const IntPoly& chi, const IntPoly& chi_R, int n_max);

struct CertificateRow {
  int n = 0;
  Int complex_count, index_sum;
  bool parity_ok = false;
  bool pass = false;
};

struct CertificateReport {
  Int fix_plus_hypothesis;
  std::vector<CertificateRow> rows;
  bool all_pass = false;
  std::string failure;  // first arithmetic inconsistency, if any
};

// Checks complex_count(n) + index_sum(n) = 2 * fix_plus for every n in n_set.
CertificateReport all_real_certificate(const IntPoly& chi, const IntPoly& chi_R, const std::vector<int>& n_set,
                                       const Int& fix_plus_hypothesis);
CertificateReport all_real_certificate(const OrbitData& od, const std::vector<int>& n_set,
                                       const Int& fix_plus_hypothesis);
void apply_certificate(FixCountTable& table, const CertificateReport& cert);

// |sum 1/((1-mu1)(1-mu2)) - 1| over a complete fixed-point set. Throws
// std::invalid_argument when the set size differs from the expected count.
double holomorphic_lefschetz_check(const std::vector<std::pair<std::complex<double>, std::complex<double>>>& multipliers,
                                   int expected_count);

}  // namespace cubicdyn
