#include "cubicdyn/explicitmaps.hpp"

#include <algorithm>
#include <sstream>

#include "cubicdyn/lefschetz.hpp"
#include "cubicdyn/realhomology.hpp"

namespace cubicdyn {

namespace {

constexpr int kBits = 240;

Real to_real(const FieldElem& x) {
  RatInterval iv = nf_interval(x, kBits);
  return rat_to<Real>(Rat((iv.lo + iv.hi) / 2));
}

double to_d(const Real& x) { return static_cast<double>(x); }

Cplx csqrt(const Cplx& z) {
  Real r = abs(z);
  Real re = sqrt((r + z.real()) / 2);
  Real im = sqrt(std::max(Real(0), (r - z.real()) / 2));
  if (z.imag() < 0) im = -im;
  return Cplx(re, im);
}

using RPoly = std::vector<Real>;

RPoly padd(const RPoly& a, const RPoly& b) {
  RPoly r(std::max(a.size(), b.size()), Real(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

RPoly pmul(const RPoly& a, const RPoly& b) {
  if (a.empty() || b.empty()) return {};
  RPoly r(a.size() + b.size() - 1, Real(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

RPoly pscale(const RPoly& a, const Real& s) {
  RPoly r = a;
  for (auto& c : r) c *= s;
  return r;
}

Real coeff(const RPoly& p, size_t k) { return k < p.size() ? p[k] : Real(0); }

// Least squares for a k x 3 system by modified Gram-Schmidt.
std::array<Real, 3> lsq3(const std::vector<std::array<Real, 3>>& a, const std::vector<Real>& b, Real& resid) {
  const size_t m = a.size();
  std::array<std::vector<Real>, 3> q;
  RMat3 r{};
  for (int c = 0; c < 3; ++c) {
    q[c].resize(m);
    for (size_t i = 0; i < m; ++i) q[c][i] = a[i][c];
  }
  for (int c = 0; c < 3; ++c) {
    for (int p = 0; p < c; ++p) {
      Real dot(0);
      for (size_t i = 0; i < m; ++i) dot += q[p][i] * q[c][i];
      r[p][c] = dot;
      for (size_t i = 0; i < m; ++i) q[c][i] -= dot * q[p][i];
    }
    Real nrm(0);
    for (size_t i = 0; i < m; ++i) nrm += q[c][i] * q[c][i];
    nrm = sqrt(nrm);
    if (nrm == 0) throw NumericFailure("lsq3: rank deficient system");
    r[c][c] = nrm;
    for (size_t i = 0; i < m; ++i) q[c][i] /= nrm;
  }
  std::array<Real, 3> qb{};
  for (int c = 0; c < 3; ++c)
    for (size_t i = 0; i < m; ++i) qb[c] += q[c][i] * b[i];
  std::array<Real, 3> x{};
  for (int c = 2; c >= 0; --c) {
    Real s = qb[c];
    for (int p = c + 1; p < 3; ++p) s -= r[c][p] * x[p];
    x[c] = s / r[c][c];
  }
  Real rn(0), bn(0);
  for (size_t i = 0; i < m; ++i) {
    Real v = -b[i];
    for (int c = 0; c < 3; ++c) v += a[i][c] * x[c];
    rn += v * v;
    bn += b[i] * b[i];
  }
  resid = sqrt(rn) / std::max(Real(1), sqrt(bn));
  return x;
}

using Sym = std::array<std::array<Real, 3>, 3>;

Sym to_sym(const std::array<Real, 6>& c) {
  Real h(0.5);
  return {{{c[0], h * c[3], h * c[4]}, {h * c[3], c[1], h * c[5]}, {h * c[4], h * c[5], c[2]}}};
}

std::array<Real, 6> from_sym(const Sym& s) {
  return {s[0][0], s[1][1], s[2][2], s[0][1] + s[1][0], s[0][2] + s[2][0], s[1][2] + s[2][1]};
}

RMat3 transpose(const RMat3& a) {
  RMat3 t{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t[i][j] = a[j][i];
  return t;
}

// Complex polynomial roots (ascending coefficients) by Aberth iteration.
std::vector<Cplx> poly_roots(std::vector<Cplx> a) {
  while (!a.empty() && a.back() == Cplx(0)) a.pop_back();
  int n = static_cast<int>(a.size()) - 1;
  if (n < 1) return {};
  std::vector<Cplx> da(n);
  for (int i = 1; i <= n; ++i) da[i - 1] = a[i] * Cplx(Real(i));
  auto horner = [](const std::vector<Cplx>& co, const Cplx& x) {
    Cplx acc(0);
    for (int i = static_cast<int>(co.size()) - 1; i >= 0; --i) acc = acc * x + co[i];
    return acc;
  };
  Real r(0);
  for (int i = 0; i < n; ++i) {
    if (a[i] == Cplx(0)) continue;
    Real v = pow(Real(abs(a[i] / a[n])), Real(1) / Real(n - i));
    r = std::max(r, v);
  }
  if (r == 0) r = 1;
  std::vector<Cplx> z(n);
  const Real pi = boost::math::constants::pi<Real>();
  for (int k = 0; k < n; ++k) {
    Real ang = 2 * pi * k / n + Real(0.4);
    z[k] = Cplx(r * cos(ang), r * sin(ang));
  }
  const Real tol = pow(Real(10), -Real(std::numeric_limits<Real>::digits10 - 6));
  for (int it = 0; it < 5000; ++it) {
    Real worst(0);
    for (int k = 0; k < n; ++k) {
      Cplx pv = horner(a, z[k]);
      if (pv == Cplx(0)) continue;
      Cplx ratio = pv / horner(da, z[k]);
      Cplx s(0);
      for (int j = 0; j < n; ++j)
        if (j != k) s += Cplx(1) / (z[k] - z[j]);
      Cplx w = ratio / (Cplx(1) - ratio * s);
      z[k] -= w;
      worst = std::max(worst, Real(abs(w) / (1 + abs(z[k]))));
    }
    if (worst < tol) break;
  }
  return z;
}

// Bivariate polynomial in (x, y), coefficient [i][j] of x^i y^j, total degree <= 3.
using Biv = std::array<std::array<Real, 4>, 4>;

Biv affine_form(const std::array<Real, 6>& c) {
  Biv b{};
  b[2][0] = c[0];
  b[0][2] = c[1];
  b[0][0] = c[2];
  b[1][1] = c[3];
  b[1][0] = c[4];
  b[0][1] = c[5];
  return b;
}

Biv times_var(const Biv& p, int var) {
  Biv r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (p[i][j] == 0) continue;
      if (var == 0) r[i + 1][j] = p[i][j];
      else r[i][j + 1] = p[i][j];
    }
  return r;
}

Biv bsub(const Biv& a, const Biv& b) {
  Biv r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i][j] = a[i][j] - b[i][j];
  return r;
}

Cplx beval(const Biv& p, const Cplx& x, const Cplx& y) {
  Cplx acc(0);
  for (int i = 3; i >= 0; --i) {
    Cplx row(0);
    for (int j = 3; j >= 0; --j) row = row * y + Cplx(p[i][j]);
    acc = acc * x + row;
  }
  return acc;
}

Cplx bdiff(const Biv& p, int var, const Cplx& x, const Cplx& y) {
  Cplx acc(0);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (p[i][j] == 0) continue;
      if (var == 0 && i > 0) acc += Cplx(p[i][j] * i) * pow(x, i - 1) * pow(y, j);
      if (var == 1 && j > 0) acc += Cplx(p[i][j] * j) * pow(x, i) * pow(y, j - 1);
    }
  return acc;
}

// coefficient of y^j as a polynomial in x
RPoly ycoef(const Biv& p, int j) {
  RPoly r(4);
  for (int i = 0; i < 4; ++i) r[i] = p[i][j];
  return r;
}

RPoly det_poly(const std::vector<std::vector<RPoly>>& m) {
  size_t n = m.size();
  if (n == 1) return m[0][0];
  RPoly acc;
  for (size_t c = 0; c < n; ++c) {
    bool zero = std::all_of(m[0][c].begin(), m[0][c].end(), [](const Real& v) { return v == 0; });
    if (zero) continue;
    std::vector<std::vector<RPoly>> minor;
    for (size_t r = 1; r < n; ++r) {
      std::vector<RPoly> row;
      for (size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    RPoly term = pmul(m[0][c], det_poly(minor));
    acc = padd(acc, c % 2 ? pscale(term, Real(-1)) : term);
  }
  return acc;
}

int formal_degree(const Biv& p) {
  for (int j = 3; j >= 0; --j)
    for (int i = 0; i < 4; ++i)
      if (p[i][j] != 0) return j;
  return -1;
}

Real coef_scale(const QuadMapHom& f) {
  Real s(0);
  for (const auto& row : f.coef)
    for (const auto& c : row) s = std::max(s, Real(abs(c)));
  return s;
}

bool indeterminate(const QuadMapHom& f, const ProjPoint& p, const Real& rel) {
  ProjPoint n = p.normalized();
  auto v = f.eval(n.x);
  Real m(0);
  for (const auto& c : v) m = std::max(m, Real(abs(c)));
  return m < rel * coef_scale(f);
}

}  // namespace

RMat3 mat_mul(const RMat3& a, const RMat3& b) {
  RMat3 c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

RMat3 mat_inverse(const RMat3& a) {
  Real det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
             a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  if (det == 0) throw NumericFailure("mat_inverse: singular matrix");
  RMat3 inv{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      inv[i][j] = (a[r0][c0] * a[r1][c1] - a[r0][c1] * a[r1][c0]) / det;
    }
  return inv;
}

ProjPoint ProjPoint::normalized() const {
  int k = 0;
  for (int i = 1; i < 3; ++i)
    if (abs(x[i]) > abs(x[k])) k = i;
  if (x[k] == Cplx(0)) throw std::invalid_argument("ProjPoint: all coordinates zero");
  Cplx s = x[k];
  return ProjPoint(x[0] / s, x[1] / s, x[2] / s);
}

bool ProjPoint::is_real(double tol) const {
  ProjPoint n = normalized();
  for (const auto& c : n.x)
    if (abs(c.imag()) > tol) return false;
  return true;
}

std::optional<std::array<Cplx, 2>> ProjPoint::affine(double tol) const {
  ProjPoint n = normalized();
  if (abs(n.x[2]) < tol) return std::nullopt;
  return std::array<Cplx, 2>{n.x[0] / n.x[2], n.x[1] / n.x[2]};
}

ProjPoint ProjPoint::transformed(const RMat3& a) const {
  ProjPoint r;
  for (int i = 0; i < 3; ++i) {
    Cplx acc(0);
    for (int j = 0; j < 3; ++j) acc += Cplx(a[i][j]) * x[j];
    r.x[i] = acc;
  }
  return r;
}

namespace {

std::string fmt(const Real& v, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << v;
  return os.str();
}

std::string fmt_c(const Cplx& z, int digits, double tol) {
  if (abs(z.imag()) <= tol) return fmt(z.real(), digits);
  std::string im = fmt(abs(z.imag()), digits);
  return fmt(z.real(), digits) + (z.imag() < 0 ? "-" : "+") + im + "i";
}

}  // namespace

std::string ProjPoint::str(int digits) const {
  // affine representative when possible, as in [x, y, 1]
  ProjPoint n = normalized();
  if (abs(n.x[2]) > 1e-30) n = ProjPoint(n.x[0] / n.x[2], n.x[1] / n.x[2], Cplx(1));
  return "[" + fmt_c(n.x[0], digits, 1e-30) + ", " + fmt_c(n.x[1], digits, 1e-30) + ", " + fmt_c(n.x[2], digits, 1e-30) +
         "]";
}

nlohmann::json ProjPoint::to_json(int digits) const {
  ProjPoint n = normalized();
  nlohmann::json j = nlohmann::json::array();
  for (const auto& c : n.x) j.push_back({{"re", fmt(c.real(), digits)}, {"im", fmt(c.imag(), digits)}});
  return j;
}

double proj_distance(const ProjPoint& p, const ProjPoint& q) {
  ProjPoint a = p.normalized(), b = q.normalized();
  Real num(0), na(0), nb(0);
  for (int i = 0; i < 3; ++i) {
    na += norm(a.x[i]);
    nb += norm(b.x[i]);
    for (int j = i + 1; j < 3; ++j) num += norm(a.x[i] * b.x[j] - a.x[j] * b.x[i]);
  }
  return to_d(sqrt(num / (na * nb)));
}

ProjPoint cubic_point(const Real& x) { return ProjPoint::real(x, x * x * x, Real(1)); }

Real cubic_residual(const ProjPoint& p) {
  ProjPoint n = p.normalized();
  return abs(n.x[1] * n.x[2] * n.x[2] - n.x[0] * n.x[0] * n.x[0]);
}

ProjPoint QuadMapHom::operator()(const ProjPoint& p) const {
  auto v = eval(p.x);
  return ProjPoint(v[0], v[1], v[2]);
}

std::array<std::array<Cplx, 3>, 3> QuadMapHom::jacobian(const ProjPoint& p) const {
  std::array<std::array<Cplx, 3>, 3> j{};
  for (int r = 0; r < 3; ++r) {
    Sym s = to_sym(coef[r]);
    for (int c = 0; c < 3; ++c) {
      Cplx acc(0);
      for (int k = 0; k < 3; ++k) acc += Cplx(s[c][k]) * p.x[k];
      j[r][c] = Cplx(2) * acc;
    }
  }
  return j;
}

QuadMapHom precompose(const QuadMapHom& f, const RMat3& a) {
  QuadMapHom g = f;
  RMat3 at = transpose(a);
  for (int r = 0; r < 3; ++r) g.coef[r] = from_sym(mat_mul(at, mat_mul(to_sym(f.coef[r]), a)));
  g.cubic_chart = false;
  return g;
}

QuadMapHom compose(const RMat3& l, const QuadMapHom& f) {
  QuadMapHom g = f;
  for (int r = 0; r < 3; ++r)
    for (int k = 0; k < 6; ++k) {
      Real acc(0);
      for (int c = 0; c < 3; ++c) acc += l[r][c] * f.coef[c][k];
      g.coef[r][k] = acc;
    }
  g.cubic_chart = false;
  return g;
}

QuadMapHom QuadMapHom::conjugate(const RMat3& a) const { return compose(a, precompose(*this, mat_inverse(a))); }

nlohmann::json QuadMapHom::to_json(int digits) const {
  nlohmann::json j;
  j["monomials"] = {"x^2", "y^2", "z^2", "xy", "xz", "yz"};
  j["forms"] = nlohmann::json::array();
  for (const auto& row : coef) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& c : row) r.push_back(fmt(c, digits));
    j["forms"].push_back(r);
  }
  j["delta"] = fmt(delta, digits);
  j["tau"] = fmt(tau, digits);
  j["chart"] = cubic_chart ? "cubic yz^2=x^3" : "other";
  return j;
}

QuadMapHom standard_involution() {
  QuadMapHom j;
  j.coef[0][5] = 1;
  j.coef[1][4] = 1;
  j.coef[2][3] = 1;
  return j;
}

Real ConstructedMap::x_of(const Label& l) const {
  for (const auto& [lab, x] : marked)
    if (lab == l) return x;
  throw std::out_of_range("ConstructedMap: unknown label " + l.str());
}

int ConstructedMap::parity_rule(const Real& x) const {
  int c = 0;
  for (int k = 1; k <= 3; ++k) {
    if (x_of(Label::ind_plus(k)) < x) ++c;
    if (x_of(Label::crit_preimage(k)) < x) ++c;
  }
  return c % 2 == 0 ? 1 : -1;
}

ConstructedMap construct_map(const MarkedConfig& cfg, double tol) {
  Verdict v = realizability(cfg);
  if (v.kind != Verdict::Kind::Realizable) throw NotRealizable(format_od(cfg.od) + " is " + v.str(), v);
  ConstructedMap cm;
  cm.od = cfg.od;
  const Real d = to_real(FieldElem::generator(cfg.params.ctx));
  auto s = [&](const Label& l) { return to_real(cfg.param(l)); };

  std::array<Real, 3> sums;
  for (int i = 1; i <= 3; ++i) {
    int j = i == 1 ? 2 : 1, k = i == 3 ? 2 : 3;
    sums[i - 1] = s(Label::ind_plus(j)) + s(Label::ind_plus(k)) + s(Label::crit_preimage(i));
  }
  Real spread(0);
  for (int i = 1; i < 3; ++i) spread = std::max(spread, Real(abs(sums[i] - sums[0])));
  cm.normalization_spread = to_d(spread / std::max(Real(1), Real(abs(sums[0]))));
  if (abs(sums[0]) < Real(1e-30)) {
    cm.alpha = 1;
    cm.beta = 0;
  } else {
    cm.beta = 1;
    cm.alpha = -3 * cm.beta / sums[0];
  }
  for (const auto& p : cfg.points) cm.marked.emplace_back(p.label, cm.alpha * to_real(p.param) + cm.beta);

  std::array<Real, 3> xp;
  RMat3 P{};
  for (int i = 0; i < 3; ++i) {
    xp[i] = cm.x_of(Label::ind_plus(i + 1));
    P[0][i] = xp[i];
    P[1][i] = xp[i] * xp[i] * xp[i];
    P[2][i] = 1;
  }
  RMat3 A0 = mat_inverse(P);

  // conic net through p_i^+ restricted to C: Q = J(A0 gamma(x))
  const std::array<RPoly, 3> gam{RPoly{0, 1}, RPoly{0, 0, 0, 1}, RPoly{1}};
  std::array<RPoly, 3> w;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) w[r] = padd(w[r], pscale(gam[c], A0[r][c]));
  std::array<RPoly, 3> Q{pmul(w[1], w[2]), pmul(w[0], w[2]), pmul(w[0], w[1])};

  const Real tau = cm.beta * (1 - d);
  RPoly cx{1};
  for (int i = 0; i < 3; ++i) cx = pmul(cx, RPoly{-xp[i], 1});
  RPoly X{tau, d};
  std::array<RPoly, 3> rhs{pmul(cx, X), pmul(cx, pmul(X, pmul(X, X))), cx};

  RMat3 M{};
  Real worst(0);
  for (int r = 0; r < 3; ++r) {
    std::vector<std::array<Real, 3>> a(7);
    std::vector<Real> b(7);
    for (size_t k = 0; k < 7; ++k) {
      for (int c = 0; c < 3; ++c) a[k][c] = coeff(Q[c], k);
      b[k] = coeff(rhs[r], k);
    }
    Real res;
    auto row = lsq3(a, b, res);
    worst = std::max(worst, res);
    for (int c = 0; c < 3; ++c) M[r][c] = row[c];
  }
  cm.lsq_residual = to_d(worst);
  if (!(cm.lsq_residual <= tol))
    throw ConstructionFailure(format_od(cfg.od) + ": coefficient system residual " + fmt(worst, 6), cm.lsq_residual);

  cm.map = compose(M, precompose(standard_involution(), A0));
  cm.map.delta = d;
  cm.map.tau = tau;
  cm.map.cubic_chart = true;

  // p_i^+ -> e_i and cusp -> [1,1,1]: rows of A0 scaled by A0 * cusp
  for (int r = 0; r < 3; ++r) {
    Real c = A0[r][1];
    if (c == 0) throw NumericFailure("construct_map: cusp on a side of the p^+ triangle");
    for (int k = 0; k < 3; ++k) cm.to_vertex[r][k] = A0[r][k] / c;
  }
  return cm;
}

ConstructedMap construct_map(const OrbitData& od, double tol) { return construct_map(marked_config(od), tol); }

std::vector<ProjPoint> iterate(const QuadMapHom& f, const ProjPoint& p, int n, double tol) {
  std::vector<ProjPoint> out{p.normalized()};
  for (int step = 1; step <= n; ++step) {
    if (indeterminate(f, out.back(), Real(tol)))
      throw IndeterminacyHit("iterate: indeterminate point at step " + std::to_string(step), step);
    out.push_back(f(out.back()).normalized());
  }
  return out;
}

OrbitCheck verify_orbit_data(const QuadMapHom& f, const ConstructedMap& cm) {
  OrbitCheck oc;
  auto note = [&](double r, const std::string& what) {
    if (r > oc.max_residual || oc.worst.empty()) {
      oc.max_residual = std::max(oc.max_residual, r);
      if (r >= oc.max_residual) oc.worst = what;
    }
  };
  const OrbitData& od = cm.od;
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j < od.len(i); ++j) {
      ProjPoint img = f(cm.point(Label::blown(i, j)));
      note(proj_distance(img, cm.point(Label::blown(i, j + 1))), "f(p_" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
    auto traj = iterate(f, cm.point(Label::ind_minus(i)), od.len(i) - 1);
    note(proj_distance(traj.back(), cm.point(Label::ind_plus(od.sigma(i)))),
         "f^" + std::to_string(od.len(i) - 1) + "(p_" + std::to_string(i) + "^-)");
    // a generic point of the line through the other two p^+ is sent to p_i^-
    int j = i == 1 ? 2 : 1, k = i == 3 ? 2 : 3;
    ProjPoint a = cm.point(Label::ind_plus(j)), b = cm.point(Label::ind_plus(k));
    ProjPoint mid(a.x[0] + Cplx(Real(0.37)) * b.x[0], a.x[1] + Cplx(Real(0.37)) * b.x[1],
                  a.x[2] + Cplx(Real(0.37)) * b.x[2]);
    note(proj_distance(f(mid), cm.point(Label::ind_minus(i))), "e_" + std::to_string(i) + "^+ contracted");
  }
  return oc;
}

std::string to_string(FixedKind k) {
  switch (k) {
    case FixedKind::Saddle: return "saddle";
    case FixedKind::Attracting: return "attracting";
    case FixedKind::Repelling: return "repelling";
    case FixedKind::Marginal: return "marginal";
  }
  return "?";
}

FixedKind classify(const Cplx& mu1, const Cplx& mu2, double tol) {
  double a = to_d(abs(mu1)), b = to_d(abs(mu2));
  if (a > b) std::swap(a, b);
  if (std::abs(a - 1) < tol || std::abs(b - 1) < tol) return FixedKind::Marginal;
  if (b < 1) return FixedKind::Attracting;
  if (a > 1) return FixedKind::Repelling;
  return FixedKind::Saddle;
}

std::pair<Cplx, Cplx> multipliers(const QuadMapHom& f, const ProjPoint& p) {
  ProjPoint n = p.normalized();
  int k = 0;
  for (int i = 1; i < 3; ++i)
    if (abs(n.x[i]) > abs(n.x[k])) k = i;
  std::array<int, 2> idx{};
  for (int i = 0, m = 0; i < 3; ++i)
    if (i != k) idx[m++] = i;
  auto v = f.eval(n.x);
  auto jac = f.jacobian(n);
  Cplx fk = v[k];
  if (abs(fk) < Real(1e-40)) throw NumericFailure("multipliers: point is not fixed in its chart");
  std::array<std::array<Cplx, 2>, 2> J{};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      J[a][b] = (jac[idx[a]][idx[b]] * fk - v[idx[a]] * jac[k][idx[b]]) / (fk * fk);
  Cplx tr = J[0][0] + J[1][1], det = J[0][0] * J[1][1] - J[0][1] * J[1][0];
  Cplx disc = csqrt(tr * tr - Cplx(4) * det);
  Cplx m1 = (tr + disc) / Cplx(2), m2 = (tr - disc) / Cplx(2);
  if (abs(m1) > abs(m2)) std::swap(m1, m2);
  return {m1, m2};
}

namespace {

// 2D Newton on g1 = f1 - x f3, g2 = f2 - y f3 in the affine chart z = 1.
bool polish_affine(const Biv& g1, const Biv& g2, Cplx& x, Cplx& y) {
  const Real tol = pow(Real(10), -Real(std::numeric_limits<Real>::digits10 - 8));
  for (int it = 0; it < 200; ++it) {
    Cplx a = beval(g1, x, y), b = beval(g2, x, y);
    Cplx j11 = bdiff(g1, 0, x, y), j12 = bdiff(g1, 1, x, y), j21 = bdiff(g2, 0, x, y), j22 = bdiff(g2, 1, x, y);
    Cplx det = j11 * j22 - j12 * j21;
    if (det == Cplx(0)) return false;
    Cplx dx = (a * j22 - b * j12) / det, dy = (j11 * b - j21 * a) / det;
    x -= dx;
    y -= dy;
    if (abs(dx) + abs(dy) < tol * (1 + abs(x) + abs(y))) return true;
  }
  return false;
}

void add_unique(std::vector<ProjPoint>& pts, const ProjPoint& p) {
  for (const auto& q : pts)
    if (proj_distance(p, q) < 1e-20) return;
  pts.push_back(p);
}

}  // namespace

std::vector<FixedPointRecord> fixed_points(const QuadMapHom& f) {
  const Real rel("1e-30");
  std::vector<ProjPoint> found;

  // affine chart z = 1
  Biv F1 = affine_form(f.coef[0]), F2 = affine_form(f.coef[1]), F3 = affine_form(f.coef[2]);
  Biv g1 = bsub(F1, times_var(F3, 0)), g2 = bsub(F2, times_var(F3, 1));
  int m = formal_degree(g1), k = formal_degree(g2);
  if (m >= 0 && k >= 0 && m + k > 0) {
    int size = m + k;
    std::vector<std::vector<RPoly>> syl(size, std::vector<RPoly>(size, RPoly{0}));
    for (int r = 0; r < k; ++r)
      for (int j = 0; j <= m; ++j) syl[r][r + j] = ycoef(g1, m - j);
    for (int r = 0; r < m; ++r)
      for (int j = 0; j <= k; ++j) syl[k + r][r + j] = ycoef(g2, k - j);
    RPoly res = det_poly(syl);
    Real big(0);
    for (const auto& c : res) big = std::max(big, Real(abs(c)));
    if (big == 0) throw NumericFailure("fixed_points: resultant vanishes identically (curve of fixed points)");
    std::vector<Cplx> rc;
    for (const auto& c : res) rc.push_back(abs(c) < big * Real("1e-50") ? Cplx(0) : Cplx(c));
    for (const auto& x0 : poly_roots(rc)) {
      std::vector<Cplx> cand;
      for (const Biv* g : {&g1, &g2}) {
        std::vector<Cplx> yc(4);
        for (int j = 0; j <= 3; ++j) {
          Cplx acc(0);
          for (int i = 3; i >= 0; --i) acc = acc * x0 + Cplx((*g)[i][j]);
          yc[j] = acc;
        }
        for (const auto& y : poly_roots(yc)) cand.push_back(y);
      }
      for (auto y0 : cand) {
        Cplx x = x0, y = y0;
        if (!polish_affine(g1, g2, x, y)) continue;
        ProjPoint p(x, y, Cplx(1));
        if (indeterminate(f, p, rel)) continue;
        add_unique(found, p);
      }
    }
  }

  // line at infinity: f3(a, b, 0) = 0 and a f2 - b f1 = 0
  {
    std::vector<ProjPoint> cands;
    std::vector<Cplx> q{Cplx(f.coef[2][1]), Cplx(f.coef[2][3]), Cplx(f.coef[2][0])};  // in a with b = 1
    Real qs = std::max({Real(abs(f.coef[2][0])), Real(abs(f.coef[2][1])), Real(abs(f.coef[2][3]))});
    if (qs < rel * coef_scale(f)) {
      // f3 vanishes on z = 0: solve a f2(a,1,0) - f1(a,1,0) = 0
      std::vector<Cplx> c(4, Cplx(0));
      c[0] -= Cplx(f.coef[0][1]);
      c[1] -= Cplx(f.coef[0][3]);
      c[2] -= Cplx(f.coef[0][0]);
      c[1] += Cplx(f.coef[1][1]);
      c[2] += Cplx(f.coef[1][3]);
      c[3] += Cplx(f.coef[1][0]);
      for (const auto& a : poly_roots(c)) cands.emplace_back(a, Cplx(1), Cplx(0));
    } else {
      for (auto& c : q)
        if (abs(c) < qs * Real("1e-50")) c = Cplx(0);
      for (const auto& a : poly_roots(q)) cands.emplace_back(a, Cplx(1), Cplx(0));
    }
    cands.emplace_back(Cplx(1), Cplx(0), Cplx(0));
    for (const auto& p : cands) {
      if (indeterminate(f, p, rel)) continue;
      auto v = f.eval(p.normalized().x);
      ProjPoint img(v[0], v[1], v[2]);
      if (proj_distance(img, p) < 1e-25) add_unique(found, p);
    }
  }

  std::vector<FixedPointRecord> out;
  for (const auto& p : found) {
    FixedPointRecord r;
    r.location = p.normalized();
    r.on_cubic = f.cubic_chart && cubic_residual(p) < Real("1e-25");
    std::tie(r.mu1, r.mu2) = multipliers(f, p);
    r.kind = classify(r.mu1, r.mu2);
    out.push_back(r);
  }
  std::sort(out.begin(), out.end(), [](const FixedPointRecord& a, const FixedPointRecord& b) {
    ProjPoint pa = a.location, pb = b.location;
    for (int i = 0; i < 3; ++i) {
      if (pa.x[i].real() != pb.x[i].real()) return pa.x[i].real() < pb.x[i].real();
      if (pa.x[i].imag() != pb.x[i].imag()) return pa.x[i].imag() < pb.x[i].imag();
    }
    return false;
  });
  return out;
}

std::vector<FixedPointRecord> fixed_points(const ConstructedMap& cm) {
  auto pts = fixed_points(cm.map);
  Int expected = complex_fix_count(cm.od, 1);
  if (Int(static_cast<long>(pts.size())) != expected)
    throw NumericFailure(format_od(cm.od) + ": found " + std::to_string(pts.size()) + " fixed points, Lefschetz count " +
                         expected.get_str());
  return pts;
}

int real_fixed_point_index(const FixedPointRecord& r) {
  if (!r.location.is_real()) throw std::invalid_argument("real_fixed_point_index: point is not real");
  Real v = ((Cplx(1) - r.mu1) * (Cplx(1) - r.mu2)).real();
  if (v == 0) throw NumericFailure("real_fixed_point_index: degenerate fixed point");
  return v > 0 ? 1 : -1;
}

int fix_plus_count(const std::vector<FixedPointRecord>& pts) {
  int c = 0;
  for (const auto& p : pts)
    if (p.location.is_real() && real_fixed_point_index(p) > 0) ++c;
  return c;
}

double holomorphic_lefschetz_residual(const std::vector<FixedPointRecord>& pts, int expected_count) {
  std::vector<std::pair<std::complex<double>, std::complex<double>>> mus;
  for (const auto& p : pts)
    mus.emplace_back(std::complex<double>(to_d(p.mu1.real()), to_d(p.mu1.imag())),
                     std::complex<double>(to_d(p.mu2.real()), to_d(p.mu2.imag())));
  return holomorphic_lefschetz_check(mus, expected_count);
}

int orientation_oracle(const ConstructedMap& cm, const Real& x) {
  const Real y = x * x * x;
  Real dist("1e300");
  std::vector<std::array<Real, 2>> plus;
  for (int k = 1; k <= 3; ++k) {
    for (const auto& l : {Label::ind_plus(k), Label::crit_preimage(k)}) {
      Real s = cm.x_of(l);
      dist = std::min(dist, Real(sqrt((s - x) * (s - x) + (s * s * s - y) * (s * s * s - y))));
    }
    Real s = cm.x_of(Label::ind_plus(k));
    plus.push_back({s, s * s * s});
  }
  // contracted lines through pairs of p^+
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) {
      Real dx = plus[b][0] - plus[a][0], dy = plus[b][1] - plus[a][1];
      Real cross = abs(dx * (y - plus[a][1]) - dy * (x - plus[a][0]));
      dist = std::min(dist, Real(cross / sqrt(dx * dx + dy * dy)));
    }
  Real r = std::min(Real("1e-3"), dist / 4);
  if (r < Real("1e-40")) throw NumericFailure("orientation_oracle: point too close to a critical set");
  const Real pi = boost::math::constants::pi<Real>();
  // signed image area over r^2; shrink until the linear part dominates
  auto scaled_area = [&](const Real& rad) {
    std::array<std::array<Real, 2>, 3> img{};
    for (int m = 0; m < 3; ++m) {
      Real ang = 2 * pi * m / 3;
      auto v = cm.map.eval(std::array<Real, 3>{x + rad * cos(ang), y + rad * sin(ang), Real(1)});
      if (abs(v[2]) < Real("1e-40") * (abs(v[0]) + abs(v[1])))
        throw NumericFailure("orientation_oracle: image leaves the affine chart");
      img[m] = {v[0] / v[2], v[1] / v[2]};
    }
    Real area = (img[1][0] - img[0][0]) * (img[2][1] - img[0][1]) - (img[2][0] - img[0][0]) * (img[1][1] - img[0][1]);
    return area / (rad * rad);
  };
  Real prev = scaled_area(r);
  for (int shrink = 0; shrink < 40; ++shrink) {
    r /= 8;
    Real cur = scaled_area(r);
    if (cur != 0 && (cur > 0) == (prev > 0) && abs(cur - prev) < abs(cur) / 100) return cur > 0 ? 1 : -1;
    prev = cur;
  }
  throw NumericFailure("orientation_oracle: loop orientation does not stabilize");
}

std::vector<OracleComparison> oracle_vs_interior_signs(const ConstructedMap& cm, const MarkedConfig& cfg) {
  std::vector<OracleComparison> out;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j < cm.od.len(i); ++j) {
      OracleComparison c;
      c.label = Label::blown(i, j);
      c.oracle = orientation_oracle(cm, cm.x_of(c.label));
      c.rule = interior_sign(i, j, cfg);
      out.push_back(c);
    }
  return out;
}

RMat3 matrix_L_33n(const Real& d) {
  auto p = [&](std::initializer_list<int> cs) {
    Real acc(0), pw(1);
    for (int c : cs) {
      acc += c * pw;
      pw *= d;
    }
    return acc;
  };
  Real d3 = pow(d, 3), d4 = pow(d, 4), d7 = pow(d, 7);
  RMat3 L{};
  L[0][0] = -d4 * p({1, -1, 1}) * p({1, -1, 0, 1}) * p({1, 0, -1, 0, 1});
  L[0][1] = p({1, 1}) * pow(p({1, -1, 0, 1}), 2) * p({1, -1, 0, 1, -1, 1});
  L[0][2] = p({1, -1, 1}) * p({1, 0, -1, 1}) * p({1, 0, -1, 0, 1}) * p({-1, 1, 0, -1, 1, -1, -1, 1});
  L[1][0] = -d4 * p({1, -1, 0, 1}) * p({1, 0, -1, 1}) * p({1, 0, -1, 1, 0, -1, 1});
  L[1][1] = p({1, 0, 0, 0, 0, 1}) * p({1, -1, 0, 1, -1, 1}) * p({1, -1, 0, 2, -1, -1, 1});
  L[1][2] = p({1, 0, -1, 0, 1}) * p({1, -1, 1, 0, -1, 1}) * p({-1, 1, 0, -2, 2, 0, -2, 1});
  L[2][0] = -d7 * pow(p({1, 0, -1, 1}), 2);
  L[2][1] = d3 * p({1, -1, 0, 1}) * p({1, 0, 0, 0, 0, 1});
  L[2][2] = d3 * p({1, 0, -1, 1}) * p({1, -1, 1, 0, -1, 1}) * p({-1, 0, 1, -1, -1, 1});
  return L;
}

Real discriminant_33n(const Real& d) {
  auto p = [&](std::initializer_list<int> cs) {
    Real acc(0), pw(1);
    for (int c : cs) {
      acc += c * pw;
      pw *= d;
    }
    return acc;
  };
  Real B0 = pow(d, 6) * p({1, -1, 0, 1}) * p({1, 0, -1, 1});
  Real B1 = -pow(d, 3) * p({2, -3, -2, 10, -7, -7, 16, -7, -7, 10, -2, -3, 2});
  Real B2 = pow(p({1, 0, -1, 0, 1}), 2) * p({1, -1, 1, 0, -1, 1}) * p({1, -1, 0, 1, -1, 1});
  return B1 * B1 - 4 * B0 * B2;
}

std::pair<Cplx, Cplx> multipliers_33n_closed(const Real& d) {
  auto p = [&](std::initializer_list<int> cs) {
    Real acc(0), pw(1);
    for (int c : cs) {
      acc += c * pw;
      pw *= d;
    }
    return acc;
  };
  Real Ds = 2 * p({1, 0, -1, 0, 1}) * p({1, -1, 1, 0, -1, 1}) * p({1, -1, 0, 1, -1, 1});
  Real zeta = (d - 1) * p({1, -1, 0, 0, 0, 1, 2, -5, 2, 5, -8, 4, 2, -3, 1}) / Ds;
  Cplx rad = csqrt(Cplx(p({1, 0, 0, 1, 0, 0, 1}) * p({3, -4, -4, 11, -4, -4, 3})));
  Cplx eta = Cplx((d - 1) * p({1, -1, 0, 1, -1, 1, 0, -1, 1}) / Ds) * rad;
  Cplx b = Cplx(1 + zeta) - eta * Cplx(0, 1);
  Cplx disc = csqrt(b * b - Cplx(4 * d));
  Cplx m1 = (-b + disc) / Cplx(2), m2 = (-b - disc) / Cplx(2);
  if (abs(m1) > abs(m2)) std::swap(m1, m2);
  return {m1, m2};
}

Real delta_33n(int n) {
  auto br = dynamical_degree(parse_od("3,3," + std::to_string(n) + ":123"), 30);
  if (!br) throw NoDelta("delta_33n: no dynamical degree above 1");
  RootBracket r = refine(*br, kBits);
  return rat_to<Real>(Rat((r.lo + r.hi) / 2));
}

IntPoly h_poly() { return int_poly({-1, 2, 0, -2, 2, 0, -1, 1}); }

RootBracket delta_infinity_33n() {
  auto r = largest_real_root(reverse(h_poly()), 30);
  if (!r) throw std::logic_error("delta_infinity_33n: no real root");
  return *r;
}

std::vector<FigurePoint> multiplier_figure(int n_lo, int n_hi) {
  std::vector<FigurePoint> out;
  for (int n = n_lo; n <= n_hi; ++n) out.push_back({n, to_d(abs(multipliers_33n_closed(delta_33n(n)).first))});
  return out;
}

}  // namespace cubicdyn
