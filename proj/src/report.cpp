#include "cubicdyn/report.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cubicdyn/explicitmaps.hpp"
#include "cubicdyn/lefschetz.hpp"
#include "cubicdyn/realhomology.hpp"
#include "cubicdyn/sweep.hpp"

namespace cubicdyn {

namespace {

using nlohmann::json;

std::string num(const Real& v, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << v;
  return os.str();
}

std::string num(double v, int digits) {
  std::ostringstream os;
  os.precision(std::min(digits, 15));
  os << v;
  return os.str();
}

json cnum(const Cplx& z, int digits) { return {{"re", num(z.real(), digits)}, {"im", num(z.imag(), digits)}}; }

json poly_json(const IntPoly& p) { return {{"text", to_string(p)}, {"coefficients", to_json(p)}}; }

json verdict_json(const Verdict& v) {
  json j{{"kind", v.str()}, {"coincidences", json::array()}};
  for (const auto& c : v.coincidences) j["coincidences"].push_back({c.a.str(), c.b.str()});
  return j;
}

json table_json(const TableClassification& tc) {
  json j{{"covered", tc.covered}, {"passed", tc.passed}, {"rows", json::array()}};
  if (!tc.reason.empty()) j["reason"] = tc.reason;
  for (const auto& r : tc.rows)
    j["rows"].push_back({{"table", r.table},
                         {"row", r.row},
                         {"degenerate_row", r.degenerate_row},
                         {"passed", r.passed},
                         {"decisive", r.decisive},
                         {"detail", r.detail}});
  return j;
}

json growth_json(const Growth& g, int digits) {
  json j{{"class", g.str()}};
  switch (g.kind) {
    case Growth::Kind::Exponential: j["rho"] = num(g.rho, digits); break;
    case Growth::Kind::Periodic: j["order"] = g.order; break;
    case Growth::Kind::Polynomial: j["degree"] = g.degree; break;
  }
  return j;
}

json fixed_point_json(const FixedPointRecord& r, const ConstructedMap& cm, int digits) {
  json j{{"cubic_chart", r.location.to_json(digits)},
         {"vertex_chart", cm.to_vertex_chart(r.location).to_json(digits)},
         {"vertex_chart_text", cm.to_vertex_chart(r.location).str(digits)},
         {"on_cubic", r.on_cubic},
         {"real", r.location.is_real()},
         {"mu1", cnum(r.mu1, digits)},
         {"mu2", cnum(r.mu2, digits)},
         {"abs_mu1", num(abs(r.mu1), digits)},
         {"abs_mu2", num(abs(r.mu2), digits)},
         {"kind", to_string(r.kind)}};
  if (r.location.is_real()) j["index"] = real_fixed_point_index(r);
  return j;
}

struct MapSection {
  json j;
  int fix_plus = 0;
};

MapSection map_section(const OrbitData& od, int digits) {
  MarkedConfig cfg = marked_config(od);
  Verdict v = realizability(cfg);
  if (v.kind != Verdict::Kind::Realizable) throw NotRealizable("orbit data is not realizable: " + v.str(), v);
  ConstructedMap cm = construct_map(cfg);
  MapSection out;
  json& j = out.j;
  j["chart"] = "yz^2 = x^3, cusp [0,1,0], p_fix [1,1,1]";
  j["alpha"] = num(cm.alpha, digits);
  j["beta"] = num(cm.beta, digits);
  j["delta"] = num(cm.map.delta, digits);
  j["tau"] = num(cm.map.tau, digits);
  j["lsq_residual"] = num(cm.lsq_residual, 3);
  j["normalization_spread"] = num(cm.normalization_spread, 3);
  j["map_cubic_chart"] = cm.map.to_json(digits);
  j["map_vertex_chart"] = cm.vertex_map().to_json(digits);
  OrbitCheck oc = verify_orbit_data(cm.map, cm);
  j["orbit_check"] = {{"max_residual", num(oc.max_residual, 3)}, {"worst", oc.worst}};
  json marked = json::array();
  for (const auto& [l, x] : cm.marked)
    marked.push_back({{"label", l.str()},
                      {"x", num(x, digits)},
                      {"vertex_chart", cm.to_vertex_chart(cubic_point(x)).to_json(digits)}});
  j["marked_points"] = marked;
  auto pts = fixed_points(cm);
  j["fixed_points"] = json::array();
  for (const auto& r : pts) j["fixed_points"].push_back(fixed_point_json(r, cm, digits));
  j["holomorphic_lefschetz_residual"] =
      num(holomorphic_lefschetz_residual(pts, static_cast<int>(complex_fix_count(od, 1).get_si())), 3);
  out.fix_plus = fix_plus_count(pts);
  j["fix_plus"] = out.fix_plus;
  json cmp = json::array();
  int disagree = 0;
  for (const auto& c : oracle_vs_interior_signs(cm, cfg)) {
    cmp.push_back({{"label", c.label.str()}, {"oracle", c.oracle}, {"rule", c.rule}});
    if (c.oracle != c.rule) ++disagree;
  }
  j["orientation"] = {{"comparisons", cmp}, {"disagreements", disagree}};
  return out;
}

json bookkeeping_json(const IntPoly& chi, int n_max) {
  json j = json::array();
  for (int n = 1; n <= n_max; ++n) {
    CountBookkeeping b = count_bookkeeping(chi, n);
    j.push_back({{"n", n}, {"full", b.full.get_str()}, {"unit_root_only", b.unit_root_only.get_str()}, {"agree", b.agree()}});
  }
  return j;
}

json certificate_json(const CertificateReport& c) {
  json rows = json::array();
  for (const auto& r : c.rows)
    rows.push_back({{"n", r.n},
                    {"complex_count", r.complex_count.get_str()},
                    {"index_sum", r.index_sum.get_str()},
                    {"parity_ok", r.parity_ok},
                    {"pass", r.pass}});
  json j{{"fix_plus_hypothesis", c.fix_plus_hypothesis.get_str()}, {"rows", rows}, {"all_pass", c.all_pass}};
  if (!c.failure.empty()) j["failure"] = c.failure;
  return j;
}

}  // namespace

std::vector<int> certificate_n_set(const IntPoly& chi, const IntPoly& chi_R, int n_max) {
  long l = 1;
  for (const auto* p : {&chi, &chi_R})
    for (const auto& [k, m] : cyclotomic_split(*p).factors) l = std::lcm(l, static_cast<long>(k));
  std::vector<int> out;
  for (long n = l; n <= n_max; n += l) out.push_back(static_cast<int>(n));
  return out;
}

json analysis_report(const OrbitData& od, const ReportOptions& opt) {
  const int digits = opt.precision;
  json j;
  j["od"] = format_od(od);
  j["n"] = od.n;
  j["sigma"] = sigma_name(od.sigma);
  j["meta"] = {{"tool_version", kToolVersion}, {"printed_digits", digits}, {"map_working_digits", 64}};
  SpectralSummary sp = spectral_summary(od);
  j["chi"] = poly_json(sp.chi);
  j["delta"] = sp.delta ? json(sp.delta->decimal(digits)) : json();
  j["entropy"] = num(sp.entropy, digits);
  Verdict v = realizability(od);
  j["verdict"] = verdict_json(v);
  j["table"] = table_json(classify_table_row(od));
  if (v.kind != Verdict::Kind::Realizable) return j;

  MarkedConfig cfg = marked_config(od);
  json ord = json::array();
  for (const auto& grp : ordering(cfg)) {
    json g = json::array();
    for (const auto& l : grp) g.push_back(l.str());
    ord.push_back(g);
  }
  j["ordering"] = ord;
  RealSpectralSummary rs = real_spectral_summary(cfg);
  j["real"] = {{"chi_R", poly_json(rs.chi_R)},
               {"rho_R", num(rs.rho_R, digits)},
               {"growth", growth_json(rs.growth, digits)},
               {"status", rs.status.str()},
               {"shared_at", rs.status.shared_at},
               {"reciprocal", rs.reciprocal},
               {"inverse_agrees", rs.inverse_agrees},
               {"action", real_action_matrix(cfg).to_json()}};
  j["appendix"] = verify_appendix_phi(od, rs.chi_R).to_json();

  std::optional<int> map_fix_plus;
  if (opt.with_map) {
    try {
      MapSection ms = map_section(od, digits);
      map_fix_plus = ms.fix_plus;
      j["map"] = ms.j;
    } catch (const NumericFailure& e) {
      j["map"] = {{"error", e.what()}};
    }
  }
  if (opt.certify_real) {
    json c;
    std::optional<long> fp = opt.fix_plus;
    std::string source = "option";
    if (!fp && !map_fix_plus) {
      try {
        map_fix_plus = map_section(od, digits).fix_plus;
      } catch (const NumericFailure& e) {
        c["error"] = std::string("fix_plus unavailable: ") + e.what();
      }
    }
    if (!fp && map_fix_plus) {
      fp = *map_fix_plus;
      source = "explicit map";
    }
    std::vector<int> n_set = certificate_n_set(sp.chi, rs.chi_R, opt.n_max);
    c["n_set"] = n_set;
    c["bookkeeping"] = bookkeeping_json(sp.chi, opt.n_max);
    FixCountTable table = fix_count_table(sp.chi, rs.chi_R, opt.n_max);
    if (fp) {
      CertificateReport cert = all_real_certificate(sp.chi, rs.chi_R, n_set, Int(*fp));
      apply_certificate(table, cert);
      c["fix_plus_source"] = source;
      c["certificate"] = certificate_json(cert);
    }
    c["counts"] = table.to_json();
    j["certify_real"] = c;
  }
  return j;
}

json map_report(const OrbitData& od, int precision) {
  json j = map_section(od, precision).j;
  j["od"] = format_od(od);
  return j;
}

json counts_report(const OrbitData& od, int n_max) {
  json j{{"od", format_od(od)}};
  IntPoly chi = charpoly_complex(od);
  j["bookkeeping"] = bookkeeping_json(chi, n_max);
  Verdict v = realizability(od);
  if (v.kind == Verdict::Kind::Realizable) {
    IntPoly chi_R = charpoly_real(od);
    j["counts"] = fix_count_table(chi, chi_R, n_max).to_json();
    j["n_set"] = certificate_n_set(chi, chi_R, n_max);
  } else {
    json rows = json::array();
    for (int n = 1; n <= n_max; ++n) rows.push_back({{"n", n}, {"complex_count", complex_fix_count(chi, n).get_str()}});
    j["counts"] = rows;
  }
  return j;
}

json tables_report(int max_sum) {
  json rows = json::array();
  int covered = 0, passed = 0;
  for (const auto& od : canonical_orbit_data(max_sum, {SigmaKind::Id, SigmaKind::Swap12, SigmaKind::Cycle123})) {
    TableClassification tc = classify_table_row(od);
    if (!tc.covered) continue;
    ++covered;
    if (tc.passed) ++passed;
    json e = table_json(tc);
    e["od"] = format_od(od);
    rows.push_back(e);
  }
  return {{"max_sum", max_sum}, {"covered", covered}, {"passed", passed}, {"rows", rows}};
}

json figure_report(int n_lo, int n_hi, int precision) {
  json pts = json::array();
  for (const auto& p : multiplier_figure(n_lo, n_hi))
    pts.push_back({{"n", p.n}, {"delta", num(delta_33n(p.n), precision)}, {"small_modulus", num(p.small_modulus, precision)}});
  RootBracket lim = delta_infinity_33n();
  return {{"family", "3,3,n:123"}, {"points", pts}, {"delta_infinity", lim.decimal(precision)}};
}

namespace {

std::string scalar(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

void flatten(const json& v, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (v.is_object()) {
    if (v.contains("text") && v.contains("coefficients")) {
      out.emplace_back(prefix, v["text"].get<std::string>());
      return;
    }
    for (auto it = v.begin(); it != v.end(); ++it) flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (v.is_array()) {
    bool flat = std::all_of(v.begin(), v.end(), [](const json& e) { return e.is_primitive(); });
    if (flat) {
      out.emplace_back(prefix, v.dump());
      return;
    }
    for (size_t i = 0; i < v.size(); ++i) flatten(v[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out.emplace_back(prefix, scalar(v));
  }
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

}  // namespace

std::string render_csv(const json& report) {
  std::vector<std::pair<std::string, std::string>> kv;
  flatten(report, "", kv);
  std::ostringstream os;
  os << "key,value\n";
  for (const auto& [k, v] : kv) os << csv_quote(k) << ',' << csv_quote(v) << '\n';
  return os.str();
}

std::string render_text(const json& r) {
  std::ostringstream os;
  os << "orbit data  " << scalar(r["od"]) << '\n';
  os << "chi         " << r["chi"]["text"].get<std::string>() << '\n';
  os << "delta       " << (r["delta"].is_null() ? "none" : scalar(r["delta"])) << '\n';
  os << "verdict     " << scalar(r["verdict"]["kind"]);
  for (const auto& c : r["verdict"]["coincidences"]) os << "  " << scalar(c[0]) << "=" << scalar(c[1]);
  os << '\n';
  const json& t = r["table"];
  os << "table row   " << (t["covered"].get<bool>() ? (t["passed"].get<bool>() ? "pass" : "fail") : scalar(t.value("reason", json("uncovered")))) << '\n';
  for (const auto& row : t["rows"])
    os << "  table " << row["table"].get<int>() << " [" << scalar(row["row"]) << "] " << (row["passed"].get<bool>() ? "pass" : "fail")
       << (row["decisive"].get<bool>() ? "" : " (non-decisive)") << '\n';
  if (r.contains("real")) {
    const json& re = r["real"];
    os << "chi_R       " << re["chi_R"]["text"].get<std::string>() << '\n';
    os << "rho_R       " << scalar(re["rho_R"]) << '\n';
    os << "growth      " << scalar(re["growth"]["class"]) << '\n';
    os << "status      " << scalar(re["status"]);
    if (!re["shared_at"].get<std::string>().empty()) os << " (shared at " << scalar(re["shared_at"]) << ")";
    os << '\n';
    os << "reciprocal  " << scalar(re["reciprocal"]) << "   inverse agrees " << scalar(re["inverse_agrees"]) << '\n';
    os << "appendix    " << scalar(r["appendix"]["status"]) << '\n';
  }
  if (r.contains("map")) {
    const json& m = r["map"];
    if (m.contains("error")) {
      os << "map         error: " << scalar(m["error"]) << '\n';
    } else {
      os << "map         lsq residual " << scalar(m["lsq_residual"]) << ", orbit residual " << scalar(m["orbit_check"]["max_residual"])
         << ", holomorphic Lefschetz residual " << scalar(m["holomorphic_lefschetz_residual"]) << '\n';
      for (const auto& p : m["fixed_points"]) {
        os << "  fixed " << (p["on_cubic"].get<bool>() ? "C  " : "   ") << scalar(p["kind"]) << "  |mu| = " << scalar(p["abs_mu1"])
           << ", " << scalar(p["abs_mu2"]);
        if (p.contains("index")) os << "  index " << p["index"].get<int>();
        os << "  vertex chart " << scalar(p["vertex_chart_text"]) << '\n';
      }
      os << "  orientation disagreements " << m["orientation"]["disagreements"].get<int>() << " of "
         << m["orientation"]["comparisons"].size() << '\n';
    }
  }
  if (r.contains("certify_real")) {
    const json& c = r["certify_real"];
    if (c.contains("certificate")) {
      const json& cert = c["certificate"];
      os << "all-real    fix_plus " << scalar(cert["fix_plus_hypothesis"]) << " (" << scalar(c["fix_plus_source"]) << "), "
         << (cert["all_pass"].get<bool>() ? "certified" : "not certified") << " on n = " << c["n_set"].dump() << '\n';
      if (cert.contains("failure")) os << "  " << scalar(cert["failure"]) << '\n';
    } else {
      os << "all-real    no fix_plus hypothesis" << (c.contains("error") ? ": " + scalar(c["error"]) : std::string()) << '\n';
    }
    os << "  n  complex  index  fix+  fix-\n";
    for (const auto& row : c["counts"])
      os << "  " << row["n"].get<int>() << "  " << scalar(row["complex_count"]) << "  " << scalar(row["index_sum"]) << "  "
         << (row["fix_plus"].is_null() ? "-" : scalar(row["fix_plus"])) << "  "
         << (row["fix_minus"].is_null() ? "-" : scalar(row["fix_minus"])) << '\n';
  }
  return os.str();
}

}  // namespace cubicdyn
