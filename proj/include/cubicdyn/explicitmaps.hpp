#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubicdyn/mpreal.hpp"
#include "cubicdyn/realization.hpp"

namespace cubicdyn {

using RMat3 = std::array<std::array<Real, 3>, 3>;

RMat3 mat_mul(const RMat3& a, const RMat3& b);
RMat3 mat_inverse(const RMat3& a);  // throws NumericFailure when singular

struct ProjPoint {
  std::array<Cplx, 3> x;

  ProjPoint() = default;
  ProjPoint(Cplx a, Cplx b, Cplx c) : x{a, b, c} {}
  static ProjPoint real(const Real& a, const Real& b, const Real& c) { return ProjPoint(Cplx(a), Cplx(b), Cplx(c)); }

  // Scaled so the largest coordinate is 1.
  ProjPoint normalized() const;
  bool is_real(double tol = 1e-20) const;
  // (x/z, y/z); nullopt on the line at infinity
  std::optional<std::array<Cplx, 2>> affine(double tol = 1e-40) const;
  ProjPoint transformed(const RMat3& a) const;
  std::string str(int digits = 8) const;
  nlohmann::json to_json(int digits = 20) const;
};

// Sine of the angle between representatives; 0 iff the points agree.
double proj_distance(const ProjPoint& p, const ProjPoint& q);

// Point gamma(x) = [x, x^3, 1] on the cubic yz^2 = x^3.
ProjPoint cubic_point(const Real& x);
Real cubic_residual(const ProjPoint& p);  // |yz^2 - x^3| on the normalized point

struct QuadMapHom {
  // monomial order x^2, y^2, z^2, xy, xz, yz
  std::array<std::array<Real, 6>, 3> coef{};
  Real delta = 1, tau = 0;  // restriction to C: x -> delta x + tau (cubic chart only)
  bool cubic_chart = false;  // true when C = {yz^2 = x^3} in these coordinates

  template <class T>
  std::array<T, 3> eval(const std::array<T, 3>& v) const {
    std::array<T, 3> out;
    const std::array<T, 6> m{v[0] * v[0], v[1] * v[1], v[2] * v[2], v[0] * v[1], v[0] * v[2], v[1] * v[2]};
    for (int r = 0; r < 3; ++r) {
      T acc(0);
      for (int k = 0; k < 6; ++k) acc += T(coef[r][k]) * m[k];
      out[r] = acc;
    }
    return out;
  }
  ProjPoint operator()(const ProjPoint& p) const;
  // d f_r / d v_c of the homogeneous forms
  std::array<std::array<Cplx, 3>, 3> jacobian(const ProjPoint& p) const;
  // A o f o A^{-1}
  QuadMapHom conjugate(const RMat3& a) const;
  nlohmann::json to_json(int digits = 40) const;
};

QuadMapHom standard_involution();  // J = [yz, xz, xy]
QuadMapHom compose(const RMat3& l, const QuadMapHom& f);  // l o f
QuadMapHom precompose(const QuadMapHom& f, const RMat3& a);  // f o a

struct ConstructionFailure : NumericFailure {
  double residual;
  ConstructionFailure(const std::string& what, double r) : NumericFailure(what), residual(r) {}
};

struct ConstructedMap {
  OrbitData od;
  QuadMapHom map;  // cubic chart
  Real alpha, beta;  // x = alpha s + beta for configuration parameter s
  double lsq_residual = 0;  // relative residual of the coefficient system
  double normalization_spread = 0;  // spread of the three collinearity sums
  RMat3 to_vertex{};  // p_i^+ -> e_i, cusp -> [1,1,1]
  std::vector<std::pair<Label, Real>> marked;  // x-coordinates of the marked points

  Real x_of(const Label& l) const;
  ProjPoint point(const Label& l) const { return cubic_point(x_of(l)); }
  QuadMapHom vertex_map() const { return map.conjugate(to_vertex); }
  ProjPoint to_vertex_chart(const ProjPoint& p) const { return p.transformed(to_vertex); }
  // (-1)^(number of p_k^+, f_C^{-1}(p_k^-) left of x)
  int parity_rule(const Real& x) const;
};

// Throws ConstructionFailure when the least-squares residual exceeds tol.
ConstructedMap construct_map(const MarkedConfig& cfg, double tol = 1e-30);
ConstructedMap construct_map(const OrbitData& od, double tol = 1e-30);

struct IndeterminacyHit : NumericFailure {
  int step;
  IndeterminacyHit(const std::string& what, int s) : NumericFailure(what), step(s) {}
};

// p, f(p), ..., f^n(p); throws IndeterminacyHit when all three forms vanish.
std::vector<ProjPoint> iterate(const QuadMapHom& f, const ProjPoint& p, int n, double tol = 1e-40);

struct OrbitCheck {
  double max_residual = 0;
  std::string worst;  // which incidence attains it
};

// Checks f(p_{i,j}) = p_{i,j+1}, f^{n_i-1}(p_i^-) = p_sigma(i)^+ and that e_i^+ is contracted to p_i^-.
OrbitCheck verify_orbit_data(const QuadMapHom& f, const ConstructedMap& cm);

enum class FixedKind { Saddle, Attracting, Repelling, Marginal };
std::string to_string(FixedKind k);
FixedKind classify(const Cplx& mu1, const Cplx& mu2, double tol = 1e-9);

struct FixedPointRecord {
  ProjPoint location;
  bool on_cubic = false;
  Cplx mu1, mu2;  // |mu1| <= |mu2|
  FixedKind kind = FixedKind::Marginal;
};

// Eigenvalues of Df in an affine chart where p has its largest coordinate.
std::pair<Cplx, Cplx> multipliers(const QuadMapHom& f, const ProjPoint& p);

// All fixed points outside the indeterminacy set, each polished and classified.
std::vector<FixedPointRecord> fixed_points(const QuadMapHom& f);
// Also checks the count against 2 + tr f_* on H2; throws NumericFailure on mismatch.
std::vector<FixedPointRecord> fixed_points(const ConstructedMap& cm);

// sign det(I - Df) at a real fixed point: +1 or -1 (saddles with positive multipliers give -1)
int real_fixed_point_index(const FixedPointRecord& r);
// Number of real fixed points of index +1.
int fix_plus_count(const std::vector<FixedPointRecord>& pts);

double holomorphic_lefschetz_residual(const std::vector<FixedPointRecord>& pts, int expected_count);

// Orientation of f_R at a real point of the cubic chart, from the signed area of
// three mapped samples on a small loop: +1 preserving, -1 reversing.
int orientation_oracle(const ConstructedMap& cm, const Real& x);

struct OracleComparison {
  Label label;
  int oracle = 0;
  int rule = 0;
};

// Every blown point where f is defined (p_{i,j}, j < n_i).
std::vector<OracleComparison> oracle_vs_interior_signs(const ConstructedMap& cm, const MarkedConfig& cfg);

// Printed normal form for (3,3,n): entries as polynomials in delta.
RMat3 matrix_L_33n(const Real& delta);
// B1^2 - 4 B0 B2 for the quadratic carrying the two non-real fixed points.
Real discriminant_33n(const Real& delta);
// Roots of t^2 + (1 + zeta - eta i) t + delta, sorted by modulus.
std::pair<Cplx, Cplx> multipliers_33n_closed(const Real& delta);
Real delta_33n(int n);
// h(t) = t^7 - t^6 + 2t^4 - 2t^3 + 2t - 1; the limit of delta is the largest root of t^7 h(1/t).
IntPoly h_poly();
RootBracket delta_infinity_33n();

struct FigurePoint {
  int n;
  double small_modulus;
};
std::vector<FigurePoint> multiplier_figure(int n_lo = 4, int n_hi = 30);

}  // namespace cubicdyn
