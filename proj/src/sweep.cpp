#include "cubicdyn/sweep.hpp"

#include <omp.h>

#include <algorithm>
#include <sstream>

#include "cubicdyn/realhomology.hpp"

namespace cubicdyn {

std::vector<OrbitData> canonical_orbit_data(int max_sum, const std::vector<SigmaKind>& kinds) {
  std::vector<OrbitData> out;
  for (int a = 1; a <= max_sum; ++a)
    for (int b = 1; a + b < max_sum; ++b)
      for (int c = 1; a + b + c <= max_sum; ++c)
        for (SigmaKind k : kinds) {
          OrbitData od = make_od(a, b, c, k);
          if (canonicalize(od.n, od.sigma).od == od) out.push_back(od);
        }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SigmaKind> parse_sigma_list(const std::string& s) {
  if (s == "all") return {SigmaKind::Id, SigmaKind::Swap12, SigmaKind::Cycle123};
  std::vector<SigmaKind> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok == "id") out.push_back(SigmaKind::Id);
    else if (tok == "12") out.push_back(SigmaKind::Swap12);
    else if (tok == "123" || tok == "cyc") out.push_back(SigmaKind::Cycle123);
    else throw std::invalid_argument("unknown permutation '" + tok + "' (expected id, 12, 123 or all)");
  }
  if (out.empty()) throw std::invalid_argument("empty permutation list");
  return out;
}

namespace {

std::string fixed(double v, int digits) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(digits);
  os << v;
  return os.str();
}

std::string table_summary(const TableClassification& tc) {
  if (!tc.covered) return tc.reason;
  return tc.passed ? "pass" : "fail";
}

}  // namespace

SweepRow sweep_row(const OrbitData& od, int digits) {
  SweepRow r;
  r.od = od;
  try {
    SpectralSummary sp = spectral_summary(od);
    r.chi = to_string(sp.chi);
    if (sp.delta) r.delta = sp.delta->decimal(digits);
    Verdict v = realizability(od);
    r.verdict = v.str();
    r.table = table_summary(classify_table_row(od));
    if (v.kind != Verdict::Kind::Realizable) return r;
    MarkedConfig cfg = marked_config(od);
    RealSpectralSummary rs = real_spectral_summary(cfg);
    r.chi_R = to_string(rs.chi_R);
    r.rho_R = fixed(rs.rho_R, digits);
    r.growth = rs.growth.str();
    r.status = rs.status.str();
    r.reciprocal = rs.reciprocal ? "true" : "false";
    r.inverse_agrees = rs.inverse_agrees ? "true" : "false";
    r.appendix = verify_appendix_phi(od, rs.chi_R).str();
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  return r;
}

std::vector<SweepRow> sweep_serial(const std::vector<OrbitData>& ods, int digits) {
  std::vector<SweepRow> rows;
  rows.reserve(ods.size());
  for (const auto& od : ods) rows.push_back(sweep_row(od, digits));
  return rows;
}

std::vector<SweepRow> sweep_parallel(const std::vector<OrbitData>& ods, int threads, int digits) {
  std::vector<SweepRow> rows(ods.size());
  const long n = static_cast<long>(ods.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(1, threads))
  for (long i = 0; i < n; ++i) rows[i] = sweep_row(ods[i], digits);
  return rows;
}

std::string sweep_csv_header() {
  return "n1,n2,n3,sigma,verdict,delta,rho_R,growth,status,reciprocal,inverse_agrees,table,appendix,chi,chi_R,error";
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

}  // namespace

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << sweep_csv_header() << '\n';
  for (const auto& r : rows) {
    os << r.od.n1() << ',' << r.od.n2() << ',' << r.od.n3() << ',' << sigma_name(r.od.sigma) << ',' << r.verdict << ','
       << r.delta << ',' << r.rho_R << ',' << r.growth << ',' << r.status << ',' << r.reciprocal << ','
       << r.inverse_agrees << ',' << r.table << ',' << r.appendix << ',' << csv_field(r.chi) << ',' << csv_field(r.chi_R)
       << ',' << csv_field(r.error) << '\n';
  }
  return os.str();
}

nlohmann::json sweep_json(const std::vector<SweepRow>& rows) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json e{{"od", format_od(r.od)}, {"verdict", r.verdict}, {"table", r.table}};
    auto opt = [&](const char* key, const std::string& v) { e[key] = v.empty() ? nlohmann::json() : nlohmann::json(v); };
    opt("delta", r.delta);
    opt("chi", r.chi);
    opt("chi_R", r.chi_R);
    opt("rho_R", r.rho_R);
    opt("growth", r.growth);
    opt("status", r.status);
    opt("appendix", r.appendix);
    opt("error", r.error);
    e["reciprocal"] = r.reciprocal.empty() ? nlohmann::json() : nlohmann::json(r.reciprocal == "true");
    e["inverse_agrees"] = r.inverse_agrees.empty() ? nlohmann::json() : nlohmann::json(r.inverse_agrees == "true");
    j.push_back(e);
  }
  return j;
}

}  // namespace cubicdyn
