#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cubicdyn/orbitspec.hpp"

namespace cubicdyn {

inline constexpr const char* kToolVersion = "1.0.0";

struct ReportOptions {
  int precision = 20;  // printed digits; internal arithmetic is exact or 64-digit
  bool with_map = false;
  bool certify_real = false;
  int n_max = 20;
  std::optional<long> fix_plus;  // hypothesis for the all-real certificate
};

// n in [1, n_max] divisible by every cyclotomic index of chi and chi_R.
std::vector<int> certificate_n_set(const IntPoly& chi, const IntPoly& chi_R, int n_max);

// Full analysis of one orbit datum. Never throws for well-formed od; numeric
// failures of the optional sections are reported inside the JSON.
nlohmann::json analysis_report(const OrbitData& od, const ReportOptions& opt = {});

std::string render_text(const nlohmann::json& report);
std::string render_csv(const nlohmann::json& report);

// Table-row classification for every canonical od with sum <= max_sum.
nlohmann::json tables_report(int max_sum);

// Map section on its own (construction, fixed points, orientation oracle).
nlohmann::json map_report(const OrbitData& od, int precision);

nlohmann::json counts_report(const OrbitData& od, int n_max);

nlohmann::json figure_report(int n_lo, int n_hi, int precision);

}  // namespace cubicdyn
