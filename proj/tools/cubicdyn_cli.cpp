#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <sstream>

#include "cubicdyn/explicitmaps.hpp"
#include "cubicdyn/realhomology.hpp"
#include "cubicdyn/report.hpp"
#include "cubicdyn/sweep.hpp"

using namespace cubicdyn;
using nlohmann::json;

namespace {

enum class Format { Text, Json, Csv };

struct Output {
  bool json_out = false;
  bool csv_out = false;
  Format format() const { return json_out ? Format::Json : csv_out ? Format::Csv : Format::Text; }
};

void add_format(CLI::App* cmd, Output& out) {
  auto* j = cmd->add_flag("--json", out.json_out, "JSON output");
  auto* c = cmd->add_flag("--csv", out.csv_out, "CSV output");
  j->excludes(c);
}

OrbitData od_arg(const std::string& s) {
  try {
    return parse_od(s);
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError("od", e.what());
  }
}

std::string counts_csv(const json& c) {
  std::ostringstream os;
  os << "n,complex_count,index_sum,fix_plus,fix_minus,certified\n";
  for (const auto& r : c["counts"]) {
    auto s = [&](const char* k) {
      if (!r.contains(k) || r[k].is_null()) return std::string();
      return r[k].is_string() ? r[k].get<std::string>() : r[k].dump();
    };
    os << r["n"].get<int>() << ',' << s("complex_count") << ',' << s("index_sum") << ',' << s("fix_plus") << ','
       << s("fix_minus") << ',' << s("certified") << '\n';
  }
  return os.str();
}

std::string figure_csv(const json& f) {
  std::ostringstream os;
  os << "n,delta,small_modulus\n";
  for (const auto& p : f["points"])
    os << p["n"].get<int>() << ',' << p["delta"].get<std::string>() << ',' << p["small_modulus"].get<std::string>() << '\n';
  return os.str();
}

std::string tables_csv(const json& t) {
  std::ostringstream os;
  os << "od,table,row,decisive,passed,degenerate_row,detail\n";
  for (const auto& e : t["rows"])
    for (const auto& r : e["rows"])
      os << '"' << e["od"].get<std::string>() << "\"," << r["table"].get<int>() << ",\"" << r["row"].get<std::string>() << "\","
         << r["decisive"].dump() << ',' << r["passed"].dump() << ',' << r["degenerate_row"].dump() << ",\""
         << r["detail"].get<std::string>() << "\"\n";
  return os.str();
}

ProjPoint parse_point(const std::string& s) {
  std::stringstream ss(s);
  std::string tok;
  std::vector<Real> v;
  while (std::getline(ss, tok, ',')) v.emplace_back(tok);
  if (v.size() != 3) throw CLI::ValidationError("--iterate", "expected x,y,z");
  return ProjPoint::real(v[0], v[1], v[2]);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quadratic birational maps realizing orbit data: dynamics, real homology and explicit constructions"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  Output out;
  int precision = 20;
  int n_max = 20;
  int threads = 0;

  auto* analyze = app.add_subcommand("analyze", "full analysis of one orbit datum n1,n2,n3:sigma");
  std::string od_str;
  ReportOptions ropt;
  long fix_plus = -1;
  bool log2 = false;
  analyze->add_option("od", od_str, "orbit data, e.g. 1,1,8:123")->required();
  add_format(analyze, out);
  analyze->add_option("--precision", precision, "printed digits")->check(CLI::Range(4, 60));
  analyze->add_flag("--with-map", ropt.with_map, "construct the explicit map");
  analyze->add_flag("--certify-real", ropt.certify_real, "all-real periodic point certificate");
  analyze->add_option("--n-max", n_max, "largest period for counts")->check(CLI::Range(1, 400));
  analyze->add_option("--fix-plus", fix_plus, "hypothesized number of index +1 fixed points");
  analyze->add_flag("--log2", log2, "also report entropy in base 2");

  auto* sweep = app.add_subcommand("sweep", "analysis of every canonical od with n1+n2+n3 <= N");
  int max_sum = 10;
  std::string sigmas = "all";
  sweep->add_option("--max-sum,--n-max", max_sum, "largest n1+n2+n3")->check(CLI::Range(3, 60));
  sweep->add_option("--sigma", sigmas, "comma list of id, 12, 123, or all");
  sweep->add_option("--parallel", threads, "worker threads (0: serial reference)")->check(CLI::Range(0, 1024));
  sweep->add_option("--precision", precision, "printed digits")->check(CLI::Range(4, 60));
  add_format(sweep, out);

  auto* tables = app.add_subcommand("tables", "classify every od against the ordering tables");
  tables->add_option("--max-sum,--n-max", max_sum, "largest n1+n2+n3")->check(CLI::Range(3, 60));
  add_format(tables, out);

  auto* map = app.add_subcommand("map", "explicit map: construction, fixed points, iteration");
  std::string point_str;
  int steps = 10;
  map->add_option("od", od_str, "orbit data")->required();
  map->add_option("--precision", precision, "printed digits")->check(CLI::Range(4, 60));
  map->add_option("--iterate", point_str, "iterate x,y,z (vertex chart)");
  map->add_option("--steps", steps, "iteration count")->check(CLI::Range(1, 100000));
  add_format(map, out);

  auto* counts = app.add_subcommand("counts", "Lefschetz periodic-point counts");
  counts->add_option("od", od_str, "orbit data")->required();
  counts->add_option("--n-max", n_max, "largest period")->check(CLI::Range(1, 400));
  add_format(counts, out);

  auto* figure = app.add_subcommand("figure", "figure datasets");
  std::string fig_name;
  int n_lo = 4, n_hi = 30;
  figure->add_option("name", fig_name, "multiplier-vs-n")->required()->check(CLI::IsMember({"multiplier-vs-n"}));
  figure->add_option("--from", n_lo, "first n")->check(CLI::Range(4, 200));
  figure->add_option("--to", n_hi, "last n")->check(CLI::Range(4, 200));
  figure->add_option("--precision", precision, "printed digits")->check(CLI::Range(4, 60));
  add_format(figure, out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    std::string text;
    json j;
    Format fmt = out.format();
    if (analyze->parsed()) {
      OrbitData od = od_arg(od_str);
      ropt.precision = precision;
      ropt.n_max = n_max;
      if (fix_plus >= 0) ropt.fix_plus = fix_plus;
      j = analysis_report(od, ropt);
      if (log2) j["entropy_log2"] = std::to_string(std::stod(j["entropy"].get<std::string>()) / std::log(2.0));
      if (fmt == Format::Text) text = render_text(j);
      if (fmt == Format::Csv) text = render_csv(j);
    } else if (sweep->parsed()) {
      auto ods = canonical_orbit_data(max_sum, parse_sigma_list(sigmas));
      int digits = std::min(precision, 15);
      auto rows = threads > 0 ? sweep_parallel(ods, threads, digits) : sweep_serial(ods, digits);
      if (fmt == Format::Json)
        j = {{"tool_version", kToolVersion}, {"max_sum", max_sum}, {"printed_digits", digits}, {"rows", sweep_json(rows)}};
      else
        text = sweep_csv(rows);
    } else if (tables->parsed()) {
      j = tables_report(max_sum);
      if (fmt == Format::Text) text = "covered " + std::to_string(j["covered"].get<int>()) + ", passed " +
                                      std::to_string(j["passed"].get<int>()) + "\n" + tables_csv(j);
      if (fmt == Format::Csv) text = tables_csv(j);
    } else if (map->parsed()) {
      OrbitData od = od_arg(od_str);
      Verdict v = realizability(od);
      if (v.kind != Verdict::Kind::Realizable) {
        j = {{"od", format_od(od)}, {"verdict", v.str()}, {"map", nullptr}};
      } else {
        j = map_report(od, precision);
      }
      if (!point_str.empty() && v.kind == Verdict::Kind::Realizable) {
        ConstructedMap cm = construct_map(od);
        QuadMapHom f = cm.vertex_map();
        json orbit = json::array();
        try {
          for (const auto& p : iterate(f, parse_point(point_str), steps)) orbit.push_back(p.to_json(precision));
        } catch (const IndeterminacyHit& e) {
          j["iterate_stopped"] = {{"step", e.step}, {"reason", e.what()}};
        }
        j["iterate"] = orbit;
      }
      if (fmt != Format::Json) text = render_csv(j);
    } else if (counts->parsed()) {
      j = counts_report(od_arg(od_str), n_max);
      if (fmt != Format::Json) text = counts_csv(j);
    } else if (figure->parsed()) {
      if (n_lo > n_hi) throw CLI::ValidationError("--from", "must not exceed --to");
      j = figure_report(n_lo, n_hi, precision);
      if (fmt != Format::Json) text = figure_csv(j);
    }
    if (fmt == Format::Json || text.empty())
      std::cout << j.dump(2) << '\n';
    else
      std::cout << text;
    return 0;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const NotRealizable& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const NoDelta& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const NumericFailure& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return 3;
  }
}
