#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cubicdyn/orbitspec.hpp"
#include "cubicdyn/polylab.hpp"

namespace cubicdyn {

struct NoDelta : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class PointKind { Blown, IndPlus, IndMinus, CritImage, CritPreimage, Fixed };

struct Label {
  PointKind kind = PointKind::Fixed;
  int i = 0;
  int j = 0;  // only for blown points

  static Label blown(int i, int j) { return {PointKind::Blown, i, j}; }
  static Label ind_plus(int i) { return {PointKind::IndPlus, i, 0}; }
  static Label ind_minus(int i) { return {PointKind::IndMinus, i, 0}; }
  static Label crit_image(int i) { return {PointKind::CritImage, i, 0}; }
  static Label crit_preimage(int i) { return {PointKind::CritPreimage, i, 0}; }
  static Label fixed() { return {PointKind::Fixed, 0, 0}; }

  bool operator==(const Label& o) const { return kind == o.kind && i == o.i && j == o.j; }
  std::string str() const;
};

struct CubicParams {
  RootBracket delta;
  ContextPtr ctx;
  std::array<FieldElem, 3> t;  // parameters of p_i^- in the chart where f_C(s) = delta s
};

struct MarkedPoint {
  Label label;
  FieldElem param;
  RatInterval approx;
};

struct MarkedConfig {
  OrbitData od;
  CubicParams params;
  std::vector<MarkedPoint> points;

  const MarkedPoint& at(const Label& l) const;
  FieldElem param(const Label& l) const { return at(l).param; }
  // parameter of f_C^k(p_i^+)
  FieldElem plus_iterate(int i, int k) const;
  int blown_count() const;
};

struct Coincidence {
  Label a, b;
};

struct Verdict {
  enum class Kind { Realizable, Degenerate, NoDelta } kind = Kind::NoDelta;
  std::vector<Coincidence> coincidences;
  std::string str() const;
};

std::array<FieldElem, 3> indeterminacy_parameters(const OrbitData& od, const ContextPtr& ctx);
// Throws NoDelta when the orbit data has no dynamical degree > 1.
MarkedConfig marked_config(const OrbitData& od);
Verdict realizability(const OrbitData& od);
Verdict realizability(const MarkedConfig& cfg);

// -1, 0, +1 comparing two parameters exactly.
int compare_params(const MarkedPoint& a, const MarkedPoint& b);
// Marked points sorted by parameter; inner vectors hold exactly coincident labels.
std::vector<std::vector<Label>> ordering(const MarkedConfig& cfg);

// Term f_C^k(p_i^+) of a table row.
struct ChainTerm {
  int i;
  int k;
  std::string str() const;
};

struct RowCheck {
  int table = 0;
  std::string row;
  bool degenerate_row = false;  // row says the data is not realizable
  bool passed = false;
  bool decisive = true;  // false when a more specific row also applies
  std::string detail;
};

struct TableClassification {
  bool covered = false;
  bool passed = false;  // every decisive row passed
  std::string reason;  // for uncovered or no_delta
  std::vector<RowCheck> rows;
};

TableClassification classify_table_row(const OrbitData& od);

}  // namespace cubicdyn
