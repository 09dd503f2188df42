#pragma once

#include <array>
#include <string>
#include <vector>

#include "cubicdyn/intmatrix.hpp"
#include "cubicdyn/realization.hpp"

namespace cubicdyn {

struct NotRealizable : std::runtime_error {
  Verdict verdict;
  NotRealizable(const std::string& what, Verdict v) : std::runtime_error(what), verdict(std::move(v)) {}
};

// Position of every marked point in the order along C; equal ranks mean equal parameters.
class PointRanks {
 public:
  explicit PointRanks(const MarkedConfig& cfg);
  int rank(const Label& l) const;
  bool precedes(const Label& a, const Label& b) const { return rank(a) < rank(b); }
  int count_preceding(const std::vector<Label>& pts, const Label& ref) const;

 private:
  std::vector<std::pair<Label, int>> ranks_;
};

struct LineOnCubic {
  int which = 1;
  char side = '-';
  std::array<Label, 3> intersections;
  std::vector<Label> on_line_blown;
};

std::vector<Label> blown_basis(const OrbitData& od);

// side '-' is the line e_k^- contracted onto p_k^-, side '+' the line e_k^+ through the p^+ points.
LineOnCubic line_on_cubic(int k, const MarkedConfig& cfg, char side = '-');
std::vector<int> real_line_class(const LineOnCubic& line, const MarkedConfig& cfg);

int interior_sign(int i, int j, const MarkedConfig& cfg);
int terminal_sign(int i, const MarkedConfig& cfg);
int initial_sign(int i, const MarkedConfig& cfg);

struct HomologyAction {
  std::vector<Label> basis;
  IntMatrix matrix;

  nlohmann::json to_json() const;
};

HomologyAction real_action_matrix(const MarkedConfig& cfg);
HomologyAction inverse_action_matrix(const MarkedConfig& cfg);
// Throw NotRealizable (or NoDelta) unless the data is realizable.
HomologyAction real_action_matrix(const OrbitData& od);
HomologyAction inverse_action_matrix(const OrbitData& od);

IntPoly charpoly_real(const HomologyAction& a);
IntPoly charpoly_real(const OrbitData& od);

struct Growth {
  enum class Kind { Exponential, Periodic, Polynomial } kind = Kind::Periodic;
  double rho = 1;
  long order = 0;  // periodic
  int degree = 0;  // polynomial
  std::string str() const;
};

Growth growth_class(const HomologyAction& a);
Growth growth_class(const OrbitData& od);

struct EntropyStatus {
  bool maximal = false;
  double rho_R = 1;
  double delta = 1;
  // "t" when the residual of chi_R shares delta's factor directly, "-t" when it
  // shares it after t -> -t, empty otherwise
  std::string shared_at;
  std::string str() const { return maximal ? "homology_maximal" : "homology_inconclusive"; }
};

EntropyStatus entropy_status(const OrbitData& od, const IntPoly& chi_R);
EntropyStatus entropy_status(const OrbitData& od);

// Spectral radius of an integer polynomial's roots (certified numerics).
double spectral_radius(const IntPoly& p);

struct RealSpectralSummary {
  IntPoly chi_R;
  double rho_R = 1;
  Growth growth;
  EntropyStatus status;
  bool reciprocal = false;  // reverse(chi_R) = +-chi_R
  bool inverse_agrees = false;
};

RealSpectralSummary real_spectral_summary(const MarkedConfig& cfg);

// Outcome of comparing a closed-form candidate with the matrix polynomial.
enum class PolyRelation { Equal, Negated, VariableNegated, NotPolynomial, Mismatch };
std::string to_string(PolyRelation r);
PolyRelation compare_up_to_sign(const IntPoly& predicted, const IntPoly& actual);

struct PhiCheck {
  std::string formula;  // which closed form
  std::string reading;  // labelling / parameter choice used
  PolyRelation relation = PolyRelation::Mismatch;
  IntPoly predicted;
  bool decisive = true;  // false when a more specific table row also applies
  bool match() const { return relation == PolyRelation::Equal || relation == PolyRelation::Negated; }
};

struct AppendixAudit {
  enum class Status { Match, Mismatch, Uncovered } status = Status::Uncovered;
  IntPoly chi_R;
  std::vector<PhiCheck> checks;
  std::string str() const;
  nlohmann::json to_json() const;
};

// [phi(t) - (-t)^{N+1} phi(1/t)] / (t+1) for phi = num/den; nullopt if not a polynomial.
std::optional<IntPoly> reciprocal_from_phi(const IntPoly& num, const IntPoly& den, int N);

AppendixAudit verify_appendix_phi(const OrbitData& od, const IntPoly& chi_R);
AppendixAudit verify_appendix_phi(const OrbitData& od);

// g(t) = 1 - 2t^4 + 2t^5 - t^6 + t^7 and the (3,3,n) polynomial [g(t) + (-t)^n t^7 g(1/t)] / (t+1).
IntPoly g_poly();
IntPoly phi_33n(int n);

}  // namespace cubicdyn
