#include "doctest.h"

#include "cubicdyn/report.hpp"

using namespace cubicdyn;

TEST_CASE("analysis report of Coxeter data") {
  auto j = analysis_report(parse_od("1,1,8:123"));
  CHECK(j["od"] == "1,1,8:123");
  CHECK(j["verdict"]["kind"] == "realizable");
  CHECK(j["real"]["status"] == "homology_maximal");
  CHECK(j["meta"]["tool_version"] == kToolVersion);
  CHECK(j["delta"].get<std::string>().rfind("1.1762808182599175065", 0) == 0);
  CHECK_FALSE(j.contains("map"));
}

TEST_CASE("degenerate data is reported, not thrown") {
  auto j = analysis_report(parse_od("4,4,4:123"));
  CHECK(j["verdict"]["kind"] == "degenerate");
  CHECK_FALSE(j["verdict"]["coincidences"].empty());
  CHECK_FALSE(j.contains("real"));
}

TEST_CASE("map section and certificate") {
  ReportOptions o;
  o.with_map = true;
  o.certify_real = true;
  o.n_max = 40;
  auto j = analysis_report(parse_od("2,4,5:id"), o);
  CHECK(j["map"]["fixed_points"].size() == 4);
  CHECK(j["map"]["fix_plus"] == 2);
  CHECK(j["map"]["orientation"]["disagreements"] == 0);
  const auto& c = j["certify_real"];
  CHECK(c["fix_plus_source"] == "explicit map");
  CHECK(c["certificate"]["all_pass"] == true);
  CHECK(c["n_set"] == std::vector<int>{4, 8, 12, 16, 20, 24, 28, 32, 36, 40});
  CHECK(c["counts"][3]["fix_plus"] == "2");

  o.with_map = false;
  o.fix_plus = 3;
  auto k = analysis_report(parse_od("2,4,5:id"), o);
  CHECK(k["certify_real"]["fix_plus_source"] == "option");
  CHECK(k["certify_real"]["certificate"]["all_pass"] == false);
}

TEST_CASE("complex saddles for (3,3,7)") {
  ReportOptions o;
  o.with_map = true;
  auto j = analysis_report(parse_od("3,3,7:123"), o);
  int complex_saddles = 0;
  for (const auto& p : j["map"]["fixed_points"])
    if (!p["real"].get<bool>() && p["kind"] == "saddle") ++complex_saddles;
  CHECK(complex_saddles == 2);
  CHECK(j["real"]["status"] == "homology_inconclusive");
}

TEST_CASE("renderers") {
  auto j = analysis_report(parse_od("1,1,8:123"));
  std::string text = render_text(j);
  CHECK(text.find("homology_maximal") != std::string::npos);
  std::string csv = render_csv(j);
  CHECK(csv.rfind("key,value\n", 0) == 0);
  CHECK(csv.find("\nreal.status,homology_maximal\n") != std::string::npos);
}

TEST_CASE("precision controls printed digits") {
  ReportOptions o;
  o.precision = 8;
  CHECK(analysis_report(parse_od("1,1,8:123"), o)["delta"] == "1.17628081");
  o.precision = 40;
  CHECK(analysis_report(parse_od("1,1,8:123"), o)["delta"].get<std::string>().size() == 42);
}

TEST_CASE("figure and counts") {
  auto f = figure_report(4, 6, 6);
  CHECK(f["points"][0]["small_modulus"] == "0.994417");
  CHECK(f["points"][1]["small_modulus"] == "0.993212");
  auto c = counts_report(parse_od("2,4,5:id"), 4);
  CHECK(c["counts"][0]["complex_count"] == "4");
  CHECK(c["n_set"] == std::vector<int>{4});
}
