#pragma once

#include <string>
#include <vector>

#include "cubicdyn/orbitspec.hpp"

namespace cubicdyn {

// Canonical orbit data with 3 <= n1+n2+n3 <= max_sum, sorted by OrbitData::operator<.
std::vector<OrbitData> canonical_orbit_data(int max_sum, const std::vector<SigmaKind>& kinds);
std::vector<SigmaKind> parse_sigma_list(const std::string& s);  // "id,12,123" or "all"

struct SweepRow {
  OrbitData od;
  std::string verdict;
  std::string delta;  // decimal, empty without delta
  std::string chi, chi_R;
  std::string rho_R;
  std::string growth, status;
  std::string reciprocal, inverse_agrees;  // "true"/"false", empty when not realizable
  std::string table, appendix;
  std::string error;  // per-od failure, sweep continues
};

SweepRow sweep_row(const OrbitData& od, int digits = 12);

std::vector<SweepRow> sweep_serial(const std::vector<OrbitData>& ods, int digits = 12);
// OpenMP worker pool; rows are returned in input order.
std::vector<SweepRow> sweep_parallel(const std::vector<OrbitData>& ods, int threads, int digits = 12);

std::string sweep_csv_header();
std::string sweep_csv(const std::vector<SweepRow>& rows);
nlohmann::json sweep_json(const std::vector<SweepRow>& rows);

}  // namespace cubicdyn
