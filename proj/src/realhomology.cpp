#include "cubicdyn/realhomology.hpp"

#include <algorithm>
#include <numeric>

namespace cubicdyn {

PointRanks::PointRanks(const MarkedConfig& cfg) {
  auto groups = ordering(cfg);
  for (size_t g = 0; g < groups.size(); ++g)
    for (const auto& l : groups[g]) ranks_.emplace_back(l, static_cast<int>(g));
}

int PointRanks::rank(const Label& l) const {
  for (const auto& [lab, r] : ranks_)
    if (lab == l) return r;
  throw std::out_of_range("PointRanks: unknown label " + l.str());
}

int PointRanks::count_preceding(const std::vector<Label>& pts, const Label& ref) const {
  int r = rank(ref), c = 0;
  for (const auto& p : pts)
    if (rank(p) < r) ++c;
  return c;
}

std::vector<Label> blown_basis(const OrbitData& od) {
  std::vector<Label> b;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= od.len(i); ++j) b.push_back(Label::blown(i, j));
  return b;
}

namespace {

std::array<int, 2> others(int k) {
  std::array<int, 2> o{};
  int n = 0;
  for (int i = 1; i <= 3; ++i)
    if (i != k) o[n++] = i;
  return o;
}

LineOnCubic make_line(int k, char side, const PointRanks& ranks, const OrbitData& od) {
  LineOnCubic line;
  line.which = k;
  line.side = side;
  auto [j, l] = others(k);
  if (side == '-')
    line.intersections = {Label::ind_minus(j), Label::ind_minus(l), Label::crit_image(k)};
  else
    line.intersections = {Label::ind_plus(j), Label::ind_plus(l), Label::crit_preimage(k)};
  for (const auto& b : blown_basis(od))
    for (const auto& p : line.intersections)
      if (ranks.rank(b) == ranks.rank(p)) {
        line.on_line_blown.push_back(b);
        break;
      }
  return line;
}

std::vector<int> line_class(const LineOnCubic& line, const PointRanks& ranks, const OrbitData& od) {
  std::vector<Label> inter(line.intersections.begin(), line.intersections.end());
  std::vector<int> v;
  for (const auto& b : blown_basis(od)) {
    bool on = std::find(line.on_line_blown.begin(), line.on_line_blown.end(), b) != line.on_line_blown.end();
    v.push_back(on ? 0 : (ranks.count_preceding(inter, b) % 2 == 0 ? 1 : -1));
  }
  return v;
}

int interior(int i, int j, const PointRanks& ranks) {
  std::vector<Label> special;
  for (int k = 1; k <= 3; ++k) {
    special.push_back(Label::ind_plus(k));
    special.push_back(Label::crit_preimage(k));
  }
  return ranks.count_preceding(special, Label::blown(i, j)) % 2 == 0 ? 1 : -1;
}

int terminal(int i, const PointRanks& ranks, const OrbitData& od) {
  int m = od.sigma(i);
  auto [j, l] = others(m);
  std::vector<Label> off{Label::ind_minus(m), Label::crit_image(j), Label::crit_image(l)};
  return ranks.count_preceding(off, Label::crit_image(m)) % 2 == 1 ? 1 : -1;
}

int initial(int i, const PointRanks& ranks) {
  auto [j, k] = others(i);
  std::vector<Label> off{Label::ind_plus(i), Label::crit_preimage(j), Label::crit_preimage(k)};
  return ranks.count_preceding(off, Label::crit_preimage(i)) % 2 == 1 ? 1 : -1;
}

void require_realizable(const MarkedConfig& cfg) {
  Verdict v = realizability(cfg);
  if (v.kind != Verdict::Kind::Realizable)
    throw NotRealizable(format_od(cfg.od) + " is " + v.str(), v);
}

int index_of(const OrbitData& od, int i, int j) {
  int k = 0;
  for (int a = 1; a < i; ++a) k += od.len(a);
  return k + j - 1;
}

}  // namespace

LineOnCubic line_on_cubic(int k, const MarkedConfig& cfg, char side) {
  require_realizable(cfg);
  return make_line(k, side, PointRanks(cfg), cfg.od);
}

std::vector<int> real_line_class(const LineOnCubic& line, const MarkedConfig& cfg) {
  return line_class(line, PointRanks(cfg), cfg.od);
}

int interior_sign(int i, int j, const MarkedConfig& cfg) { return interior(i, j, PointRanks(cfg)); }
int terminal_sign(int i, const MarkedConfig& cfg) { return terminal(i, PointRanks(cfg), cfg.od); }
int initial_sign(int i, const MarkedConfig& cfg) { return initial(i, PointRanks(cfg)); }

nlohmann::json HomologyAction::to_json() const {
  nlohmann::json j;
  j["basis"] = nlohmann::json::array();
  for (const auto& b : basis) j["basis"].push_back(b.str());
  j["matrix"] = nlohmann::json::array();
  for (int r = 0; r < matrix.size(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < matrix.size(); ++c) row.push_back(matrix(r, c).get_si());
    j["matrix"].push_back(row);
  }
  return j;
}

HomologyAction real_action_matrix(const MarkedConfig& cfg) {
  require_realizable(cfg);
  const OrbitData& od = cfg.od;
  PointRanks ranks(cfg);
  HomologyAction a{blown_basis(od), IntMatrix(od.total())};
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j < od.len(i); ++j) a.matrix(index_of(od, i, j + 1), index_of(od, i, j)) = interior(i, j, ranks);
    int col = index_of(od, i, od.len(i));
    int s = terminal(i, ranks, od);
    auto v = line_class(make_line(od.sigma(i), '-', ranks, od), ranks, od);
    for (size_t r = 0; r < v.size(); ++r) a.matrix(static_cast<int>(r), col) = s * v[r];
  }
  return a;
}

HomologyAction inverse_action_matrix(const MarkedConfig& cfg) {
  require_realizable(cfg);
  const OrbitData& od = cfg.od;
  PointRanks ranks(cfg);
  HomologyAction a{blown_basis(od), IntMatrix(od.total())};
  for (int i = 1; i <= 3; ++i) {
    for (int j = 2; j <= od.len(i); ++j)
      a.matrix(index_of(od, i, j - 1), index_of(od, i, j)) = interior(i, j - 1, ranks);
    int col = index_of(od, i, 1);
    int s = initial(i, ranks);
    auto v = line_class(make_line(i, '+', ranks, od), ranks, od);
    for (size_t r = 0; r < v.size(); ++r) a.matrix(static_cast<int>(r), col) = s * v[r];
  }
  return a;
}

HomologyAction real_action_matrix(const OrbitData& od) { return real_action_matrix(marked_config(od)); }
HomologyAction inverse_action_matrix(const OrbitData& od) { return inverse_action_matrix(marked_config(od)); }

IntPoly charpoly_real(const HomologyAction& a) { return charpoly(a.matrix); }
IntPoly charpoly_real(const OrbitData& od) { return charpoly_real(real_action_matrix(od)); }

std::string Growth::str() const {
  switch (kind) {
    case Kind::Exponential: return "exponential";
    case Kind::Periodic: return "periodic(" + std::to_string(order) + ")";
    case Kind::Polynomial: return "polynomial(" + std::to_string(degree) + ")";
  }
  return "?";
}

double spectral_radius(const IntPoly& p) {
  IntPoly q = squarefree_part(cyclotomic_split(p).residual);
  if (q.degree() < 1) return 1.0;
  double r = 1.0;
  for (const auto& root : all_complex_roots(q, 20).roots) r = std::max(r, std::abs(root.z));
  return r;
}

Growth growth_class(const HomologyAction& a) {
  Growth g;
  IntPoly chi = charpoly_real(a);
  CyclotomicSplit cs = cyclotomic_split(chi);
  if (cs.residual.degree() >= 1) {
    g.kind = Growth::Kind::Exponential;
    g.rho = spectral_radius(chi);
    return g;
  }
  long cap = 1;
  for (const auto& [k, m] : cs.factors) cap = std::lcm(cap, static_cast<long>(k));
  IntMatrix power = a.matrix.pow(cap);
  if (power.is_identity()) {
    long order = cap;
    for (long p = 2; p <= cap; ++p) {
      if (cap % p) continue;
      bool prime = true;
      for (long q = 2; q * q <= p; ++q)
        if (p % q == 0) prime = false;
      if (!prime) continue;
      while (order % p == 0 && a.matrix.pow(order / p).is_identity()) order /= p;
    }
    g.kind = Growth::Kind::Periodic;
    g.order = order;
    return g;
  }
  IntMatrix nil = power - IntMatrix::identity(a.matrix.size());
  IntMatrix acc = nil;
  for (int s = 1; s <= a.matrix.size(); ++s) {
    if (acc.max_abs() == 0) {
      g.kind = Growth::Kind::Polynomial;
      g.degree = s - 1;
      return g;
    }
    acc = acc * nil;
  }
  throw std::logic_error("growth_class: unipotent part expected after cyclotomic order " + std::to_string(cap));
}

Growth growth_class(const OrbitData& od) { return growth_class(real_action_matrix(od)); }

EntropyStatus entropy_status(const OrbitData& od, const IntPoly& chi_R) {
  EntropyStatus st;
  auto delta = dynamical_degree(od);
  st.rho_R = spectral_radius(chi_R);
  if (!delta) return st;
  st.delta = delta->approx;
  ContextPtr ctx = delta_context(od, *delta);
  IntPoly res = cyclotomic_split(chi_R).residual;
  if (res.degree() >= 1) {
    if (bracket_root_of(ctx->root, res))
      st.shared_at = "t";
    else if (bracket_root_of(ctx->root, res.negated_variable()))
      st.shared_at = "-t";
  }
  st.maximal = !st.shared_at.empty();
  return st;
}

EntropyStatus entropy_status(const OrbitData& od) { return entropy_status(od, charpoly_real(od)); }

RealSpectralSummary real_spectral_summary(const MarkedConfig& cfg) {
  RealSpectralSummary s;
  HomologyAction fwd = real_action_matrix(cfg);
  HomologyAction inv = inverse_action_matrix(cfg);
  s.chi_R = charpoly_real(fwd);
  s.reciprocal = reciprocal_sign(s.chi_R) != 0;
  s.inverse_agrees = charpoly_real(inv) == s.chi_R;
  s.growth = growth_class(fwd);
  s.status = entropy_status(cfg.od, s.chi_R);
  s.rho_R = s.status.rho_R;
  return s;
}

std::string to_string(PolyRelation r) {
  switch (r) {
    case PolyRelation::Equal: return "equal";
    case PolyRelation::Negated: return "equal_up_to_sign";
    case PolyRelation::VariableNegated: return "equal_after_t_to_minus_t";
    case PolyRelation::NotPolynomial: return "not_polynomial";
    case PolyRelation::Mismatch: return "mismatch";
  }
  return "?";
}

PolyRelation compare_up_to_sign(const IntPoly& predicted, const IntPoly& actual) {
  if (predicted == actual) return PolyRelation::Equal;
  if (predicted == -actual) return PolyRelation::Negated;
  IntPoly flipped = actual.negated_variable();
  if (predicted == flipped || predicted == -flipped) return PolyRelation::VariableNegated;
  return PolyRelation::Mismatch;
}

IntPoly g_poly() { return int_poly({1, 0, 0, 0, -2, 2, -1, 1}); }

IntPoly phi_33n(int n) {
  IntPoly g = g_poly();
  IntPoly s = IntPoly::monomial(Int(n % 2 ? -1 : 1), n) * reverse(g);
  auto q = exact_div(g + s, int_poly({1, 1}));
  if (!q) throw std::logic_error("phi_33n: not divisible by t+1");
  return *q;
}

}  // namespace cubicdyn
