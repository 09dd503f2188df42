#include "cubicdyn/lefschetz.hpp"

#include "cubicdyn/realhomology.hpp"

#include <sstream>

namespace cubicdyn {

namespace {

Int power_sum(const IntPoly& p, int n) {
  if (n == 0) return Int(p.degree());
  return power_sums(p, n)[n];
}

}  // namespace

Int complex_fix_count(const IntPoly& chi, int n) {
  if (n < 0) throw std::invalid_argument("complex_fix_count: negative n");
  return 2 + power_sum(chi, n);
}

Int complex_fix_count(const OrbitData& od, int n) { return complex_fix_count(charpoly_complex(od), n); }

Int real_index_sum(const IntPoly& chi_R, int n) {
  if (n < 1) throw std::invalid_argument("real_index_sum: n must be positive");
  return 1 - power_sum(chi_R, n);
}

Int real_index_sum(const OrbitData& od, int n) { return real_index_sum(charpoly_real(od), n); }

CountBookkeeping count_bookkeeping(const IntPoly& chi, int n) {
  CountBookkeeping b;
  b.n = n;
  b.full = complex_fix_count(chi, n);
  CyclotomicSplit cs = cyclotomic_split(chi);
  Int ones = 0;
  for (const auto& [k, m] : cs.factors)
    if (k == 1) ones = m;
  b.unit_root_only = 2 + ones + (cs.residual.degree() >= 1 ? power_sum(cs.residual, n) : Int(0));
  return b;
}

FixCountTable fix_count_table(const IntPoly& chi, const IntPoly& chi_R, int n_max) {
  FixCountTable t;
  auto pc = power_sums(chi, n_max);
  auto pr = power_sums(chi_R, n_max);
  for (int n = 1; n <= n_max; ++n) {
    FixCountRow r;
    r.n = n;
    r.complex_count = 2 + pc[n];
    r.index_sum = 1 - pr[n];
    t.rows.push_back(r);
  }
  return t;
}

std::string FixCountTable::to_csv() const {
  std::ostringstream os;
  os << "n,complex_count,index_sum,fix_plus,fix_minus,certified\n";
  for (const auto& r : rows) {
    os << r.n << ',' << r.complex_count.get_str() << ',' << r.index_sum.get_str() << ','
       << (r.fix_plus ? r.fix_plus->get_str() : "") << ',' << (r.fix_minus ? r.fix_minus->get_str() : "") << ','
       << (r.certified ? "true" : "false") << '\n';
  }
  return os.str();
}

nlohmann::json FixCountTable::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json e{{"n", r.n},
                     {"complex_count", r.complex_count.get_str()},
                     {"index_sum", r.index_sum.get_str()},
                     {"certified", r.certified}};
    e["fix_plus"] = r.fix_plus ? nlohmann::json(r.fix_plus->get_str()) : nlohmann::json();
    e["fix_minus"] = r.fix_minus ? nlohmann::json(r.fix_minus->get_str()) : nlohmann::json();
    j.push_back(e);
  }
  return j;
}

CertificateReport all_real_certificate(const IntPoly& chi, const IntPoly& chi_R, const std::vector<int>& n_set,
                                       const Int& fix_plus_hypothesis) {
  CertificateReport rep;
  rep.fix_plus_hypothesis = fix_plus_hypothesis;
  rep.all_pass = !n_set.empty();
  for (int n : n_set) {
    CertificateRow r;
    r.n = n;
    r.complex_count = complex_fix_count(chi, n);
    r.index_sum = real_index_sum(chi_R, n);
    Int sum = r.complex_count + r.index_sum;
    r.parity_ok = mpz_even_p(sum.get_mpz_t()) != 0;
    r.pass = r.parity_ok && sum == 2 * fix_plus_hypothesis;
    if (!r.parity_ok && rep.failure.empty())
      rep.failure = "odd sum " + sum.get_str() + " at n=" + std::to_string(n);
    else if (!r.pass && rep.failure.empty())
      rep.failure = "sum " + sum.get_str() + " at n=" + std::to_string(n) + " differs from 2 * " +
                    fix_plus_hypothesis.get_str();
    rep.all_pass = rep.all_pass && r.pass;
    rep.rows.push_back(r);
  }
  return rep;
}

CertificateReport all_real_certificate(const OrbitData& od, const std::vector<int>& n_set,
                                       const Int& fix_plus_hypothesis) {
  return all_real_certificate(charpoly_complex(od), charpoly_real(od), n_set, fix_plus_hypothesis);
}

void apply_certificate(FixCountTable& table, const CertificateReport& cert) {
  for (const auto& c : cert.rows) {
    if (!c.pass) continue;
    for (auto& r : table.rows) {
      if (r.n != c.n) continue;
      r.certified = true;
      r.fix_plus = Int((r.complex_count + r.index_sum) / 2);
      r.fix_minus = Int((r.complex_count - r.index_sum) / 2);
    }
  }
}

double holomorphic_lefschetz_check(const std::vector<std::pair<std::complex<double>, std::complex<double>>>& multipliers,
                                   int expected_count) {
  if (static_cast<int>(multipliers.size()) != expected_count)
    throw std::invalid_argument("holomorphic_lefschetz_check: incomplete fixed-point set (" +
                                std::to_string(multipliers.size()) + " of " + std::to_string(expected_count) + ")");
  std::complex<double> sum = 0;
  for (const auto& [a, b] : multipliers) sum += 1.0 / ((1.0 - a) * (1.0 - b));
  return std::abs(sum - 1.0);
}

}  // namespace cubicdyn
