#include "cubicdyn/polylab.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "cubicdyn/mpreal.hpp"

namespace cubicdyn {

IntPoly int_poly(std::initializer_list<long> coeffs) { return IntPoly(coeffs); }

RatPoly to_rat(const IntPoly& p) {
  std::vector<Rat> v(p.c.begin(), p.c.end());
  return RatPoly(std::move(v));
}

IntPoly primitive_part(const RatPoly& p) {
  if (p.is_zero()) return IntPoly();
  Int den = 1;
  for (const auto& a : p.c) {
    Int d = a.get_den();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<Int> v;
  v.reserve(p.c.size());
  for (const auto& a : p.c) {
    Rat s = a * den;
    v.push_back(s.get_num());
  }
  return primitive_part(IntPoly(std::move(v)));
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  Int g = 0;
  for (const auto& a : p.c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
  if (p.lead() < 0) g = -g;
  IntPoly r = p;
  for (auto& a : r.c) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
  return r;
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  RatPoly r = a;
  int db = b.degree();
  if (a.degree() < db) return {RatPoly(), r};
  std::vector<Rat> q(a.degree() - db + 1, Rat(0));
  Rat lb = b.lead();
  for (int k = r.degree(); k >= db && !r.is_zero(); k = r.degree()) {
    Rat f = r.c[k] / lb;
    q[k - db] = f;
    for (int i = 0; i <= db; ++i) r.c[k - db + i] -= f * b.c[i];
    r.c[k] = 0;
    r.trim();
  }
  return {RatPoly(std::move(q)), r};
}

std::optional<IntPoly> exact_div(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.is_zero()) return IntPoly();
  if (a.degree() < b.degree()) return std::nullopt;
  IntPoly r = a;
  int db = b.degree();
  std::vector<Int> q(a.degree() - db + 1, Int(0));
  const Int& lb = b.lead();
  for (int k = r.degree(); k >= db && !r.is_zero(); k = r.degree()) {
    if (!mpz_divisible_p(r.c[k].get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    Int f;
    mpz_divexact(f.get_mpz_t(), r.c[k].get_mpz_t(), lb.get_mpz_t());
    q[k - db] = f;
    for (int i = 0; i <= db; ++i) r.c[k - db + i] -= f * b.c[i];
    r.trim();
  }
  if (!r.is_zero()) return std::nullopt;
  return IntPoly(std::move(q));
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a, y = b;
  while (!y.is_zero()) {
    RatPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return x.scaled(Rat(1) / x.lead());
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  IntPoly x = primitive_part(a), y = primitive_part(b);
  while (!y.is_zero()) {
    IntPoly r = primitive_part(divmod(to_rat(x), to_rat(y)).second);
    x = std::move(y);
    y = std::move(r);
  }
  return primitive_part(x);
}

IntPoly squarefree_part(const IntPoly& p) {
  if (p.degree() <= 0) return primitive_part(p);
  IntPoly g = gcd(p, p.derivative());
  auto q = divmod(to_rat(p), to_rat(g)).first;
  return primitive_part(q);
}

IntPoly reverse(const IntPoly& p) {
  IntPoly r = p;
  std::reverse(r.c.begin(), r.c.end());
  r.trim();
  return r;
}

bool is_reciprocal(const IntPoly& p) {
  std::vector<Int> r(p.c.rbegin(), p.c.rend());
  return r == p.c;
}

int reciprocal_sign(const IntPoly& p) {
  IntPoly r = reverse(p);
  if (r == p) return 1;
  if (r == -p) return -1;
  return 0;
}

IntPoly positive_lead(const IntPoly& p) { return p.lead() < 0 ? -p : p; }

int sign_at(const IntPoly& p, const Rat& x) {
  Rat v = p.eval(Rat(x));
  return sgn(v);
}

namespace {

int sign_at_bound(const IntPoly& p, const Bound& b) {
  if (p.is_zero()) return 0;
  if (b.inf == 0) return sign_at(p, b.value);
  int s = sgn(p.lead());
  if (b.inf < 0 && (p.degree() % 2 == 1)) s = -s;
  return s;
}

int sign_changes(const std::vector<IntPoly>& seq, const Bound& b) {
  int changes = 0, last = 0;
  for (const auto& q : seq) {
    int s = sign_at_bound(q, b);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

namespace {

// content removed, sign kept
IntPoly signed_primitive(const RatPoly& p) {
  IntPoly q = primitive_part(p);
  return p.lead() < 0 ? -q : q;
}

}  // namespace

std::vector<IntPoly> sturm_sequence(const IntPoly& p) {
  std::vector<IntPoly> seq;
  IntPoly a = signed_primitive(to_rat(p));
  IntPoly b = signed_primitive(to_rat(a.derivative()));
  seq.push_back(a);
  if (b.is_zero()) return seq;
  seq.push_back(b);
  while (true) {
    RatPoly r = divmod(to_rat(seq[seq.size() - 2]), to_rat(seq.back())).second;
    if (r.is_zero()) break;
    seq.push_back(-signed_primitive(r));
  }
  return seq;
}

int sturm_count(const std::vector<IntPoly>& seq, const Bound& a, const Bound& b) {
  return sign_changes(seq, a) - sign_changes(seq, b);
}

int sturm_count(const IntPoly& p, const Bound& a, const Bound& b) {
  if (p.is_zero()) throw std::invalid_argument("sturm_count: zero polynomial");
  return sturm_count(sturm_sequence(squarefree_part(p)), a, b);
}

namespace {

Rat cauchy_bound(const IntPoly& p) {
  Rat m = 0;
  Rat lead = abs(p.lead());
  for (int i = 0; i < p.degree(); ++i) {
    Rat v = abs(p.c[i]) / lead;
    if (v > m) m = v;
  }
  Rat b = m + 1;
  // round up to an integer keeps the bisection dyadic
  Int up = b.get_num() / b.get_den() + 1;
  return Rat(up);
}

Rat midpoint_off_roots(const IntPoly& p, const Rat& lo, const Rat& hi) {
  Rat mid = (lo + hi) / 2;
  int k = 3;
  while (sign_at(p, mid) == 0) {
    mid = lo + (hi - lo) * Rat(k, 2 * k + 1);
    ++k;
  }
  return mid;
}

}  // namespace

RootBracket finish_bracket(RootBracket b) {
  b.approx = Rat((b.lo + b.hi) / 2).get_d();
  b.err = Rat((b.hi - b.lo) / 2).get_d();
  return b;
}

RootBracket refine(const RootBracket& b, int bits) {
  RootBracket r = b;
  Rat target(1);
  target /= Rat(Int(1) << bits);
  int slo = sign_at(r.poly, r.lo);
  while (r.hi - r.lo >= target) {
    Rat mid = (r.lo + r.hi) / 2;
    int s = sign_at(r.poly, mid);
    if (s == 0 || s != slo) {
      r.hi = mid;
    } else {
      r.lo = mid;
    }
  }
  return finish_bracket(r);
}

std::string RootBracket::decimal(int digits) const {
  RootBracket f = refine(*this, static_cast<int>(digits * 3.33) + 8);
  Rat mid = (f.lo + f.hi) / 2;
  return rat_to_decimal(mid, digits);
}

static std::vector<RootBracket> isolate(const IntPoly& p, int digits, bool largest_only) {
  std::vector<RootBracket> out;
  if (p.degree() < 1) return out;
  IntPoly q = squarefree_part(p);
  auto seq = sturm_sequence(q);
  Rat B = cauchy_bound(q);
  Bound lo_b(-B), hi_b(B);
  int total = sturm_count(seq, lo_b, hi_b);
  if (total == 0) return out;
  int bits = static_cast<int>(std::ceil(digits * 3.33)) + 4;
  // recursive bisection over (lo, hi]
  std::vector<std::pair<Rat, Rat>> stack{{-B, B}};
  std::vector<std::pair<Rat, Rat>> found;
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    int n = sturm_count(seq, Bound(lo), Bound(hi));
    if (n == 0) continue;
    if (n == 1) {
      found.emplace_back(lo, hi);
      if (largest_only) break;
      continue;
    }
    Rat mid = midpoint_off_roots(q, lo, hi);
    // push the lower half first so the upper half is processed first
    stack.emplace_back(lo, mid);
    stack.emplace_back(mid, hi);
  }
  for (auto& [lo, hi] : found) {
    RootBracket b;
    b.poly = q;
    b.lo = lo;
    b.hi = hi;
    if (sign_at(q, b.lo) == 0) throw NumericFailure("bracket endpoint is a root");
    out.push_back(refine(b, bits));
  }
  std::sort(out.begin(), out.end(), [](const RootBracket& a, const RootBracket& b) {
    return a.lo < b.lo;
  });
  return out;
}

std::optional<RootBracket> largest_real_root(const IntPoly& p, int digits) {
  if (p.degree() < 1) throw std::invalid_argument("largest_real_root: constant polynomial");
  auto roots = isolate(p, digits, true);
  if (roots.empty()) return std::nullopt;
  return roots.back();
}

std::vector<RootBracket> real_roots(const IntPoly& p, int digits) {
  return isolate(p, digits, false);
}

bool bracket_root_of(const RootBracket& b, const IntPoly& q) {
  if (q.is_zero()) return true;
  if (q.degree() == 0) return false;
  IntPoly g = gcd(b.poly, q);
  if (g.degree() < 1) return false;
  return sturm_count(sturm_sequence(squarefree_part(g)), Bound(b.lo), Bound(b.hi)) == 1;
}

int euler_phi(int k) {
  int result = k, n = k;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

static int moebius(int n) {
  int m = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      m = -m;
    }
  }
  if (n > 1) m = -m;
  return m;
}

IntPoly cyclotomic(int k) {
  static std::mutex mu;
  static std::map<int, IntPoly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
  }
  IntPoly num = IntPoly::constant(Int(1)), den = IntPoly::constant(Int(1));
  for (int d = 1; d <= k; ++d) {
    if (k % d) continue;
    int mu_v = moebius(k / d);
    if (mu_v == 0) continue;
    IntPoly f = IntPoly::monomial(Int(1), d) - IntPoly::constant(Int(1));
    if (mu_v > 0) num = num * f;
    else den = den * f;
  }
  auto q = exact_div(num, den);
  if (!q) throw std::logic_error("cyclotomic: inexact quotient");
  IntPoly r = positive_lead(*q);
  std::lock_guard<std::mutex> lock(mu);
  cache[k] = r;
  return r;
}

IntPoly CyclotomicSplit::reassemble() const {
  IntPoly r = residual;
  for (const auto& [k, m] : factors) r = r * cyclotomic(k).pow(m);
  return r;
}

CyclotomicSplit cyclotomic_split(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("cyclotomic_split: zero polynomial");
  CyclotomicSplit out;
  out.residual = p;
  int deg = p.degree();
  long kmax = 3L * deg * deg + 1;
  for (int k = 1; k <= kmax && out.residual.degree() > 0; ++k) {
    if (euler_phi(k) > out.residual.degree()) continue;
    IntPoly phi = cyclotomic(k);
    while (out.residual.degree() >= phi.degree()) {
      auto q = exact_div(out.residual, phi);
      if (!q) break;
      out.residual = *q;
      out.factors[k] += 1;
    }
  }
  return out;
}

std::vector<Int> power_sums(const IntPoly& p, int n_max) {
  if (p.degree() < 1) throw std::invalid_argument("power_sums: constant polynomial");
  if (abs(p.lead()) != 1) throw std::invalid_argument("power_sums: polynomial is not monic");
  IntPoly m = p.lead() < 0 ? -p : p;
  int d = m.degree();
  // a[i] = coefficient of t^{d-i}
  auto a = [&](int i) -> Int { return (i <= d) ? m.c[d - i] : Int(0); };
  std::vector<Int> P(n_max + 1);
  P[0] = d;
  for (int k = 1; k <= n_max; ++k) {
    Int s = 0;
    for (int i = 1; i < k && i <= d; ++i) s += a(i) * P[k - i];
    if (k <= d) s += Int(k) * a(k);
    P[k] = -s;
  }
  return P;
}

// ---- complex roots -------------------------------------------------------

namespace {

template <class Real>
struct RootRun {
  using C = std::complex<Real>;
  std::vector<C> z;
  std::vector<Real> rad;
  bool ok = false;
};

template <class Real>
RootRun<Real> aberth(const IntPoly& p, int digits) {
  using C = std::complex<Real>;
  int n = p.degree();
  std::vector<Real> a(n + 1);
  for (int i = 0; i <= n; ++i) a[i] = Real(p.c[i].get_str().c_str());
  std::vector<Real> da(n);
  for (int i = 1; i <= n; ++i) da[i - 1] = a[i] * i;

  auto horner = [&](const std::vector<Real>& co, const C& x) {
    C acc(0);
    for (int i = static_cast<int>(co.size()) - 1; i >= 0; --i) acc = acc * x + C(co[i]);
    return acc;
  };

  // initial guesses on a circle of radius from the Fujiwara-type bound
  Real r(0);
  for (int i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    Real v = pow(abs(a[i] / a[n]), Real(1) / Real(n - i));
    if (v > r) r = v;
  }
  if (r == 0) r = 1;
  RootRun<Real> run;
  run.z.resize(n);
  const Real pi = boost::math::constants::pi<Real>();
  for (int k = 0; k < n; ++k) {
    Real ang = 2 * pi * k / n + Real(0.4);
    run.z[k] = C(r * cos(ang), r * sin(ang));
  }
  Real tol = pow(Real(10), -Real(digits - 4));
  for (int it = 0; it < 2000; ++it) {
    Real worst(0);
    for (int k = 0; k < n; ++k) {
      C pv = horner(a, run.z[k]);
      C dv = horner(da, run.z[k]);
      if (pv == C(0)) continue;
      C ratio = pv / dv;
      C s(0);
      for (int j = 0; j < n; ++j)
        if (j != k) s += C(1) / (run.z[k] - run.z[j]);
      C w = ratio / (C(1) - ratio * s);
      run.z[k] -= w;
      Real aw = abs(w) / (1 + abs(run.z[k]));
      if (aw > worst) worst = aw;
    }
    if (worst < tol) break;
  }
  // inclusion disks |z - z_k| <= n |W_k| (Weierstrass corrections) with a rounding allowance
  Real eps = pow(Real(10), -Real(std::numeric_limits<Real>::digits10 - 2));
  run.rad.resize(n);
  for (int k = 0; k < n; ++k) {
    C pv = horner(a, run.z[k]);
    Real absz = abs(run.z[k]);
    Real bound(0);
    for (int i = n; i >= 0; --i) bound = bound * absz + abs(a[i]);
    C denom(a[n]);
    for (int j = 0; j < n; ++j)
      if (j != k) denom *= (run.z[k] - run.z[j]);
    Real ad = abs(denom);
    if (ad == 0) return run;
    run.rad[k] = Real(n) * (abs(pv) + eps * bound * (2 * n + 2)) / ad;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (abs(run.z[i] - run.z[j]) <= run.rad[i] + run.rad[j]) return run;
  run.ok = true;
  return run;
}

template <class Real>
bool try_roots(const IntPoly& p, int digits, RootSet& out) {
  auto run = aberth<Real>(p, std::min(digits, std::numeric_limits<Real>::digits10 - 4));
  if (!run.ok) return false;
  out.roots.clear();
  for (size_t k = 0; k < run.z.size(); ++k) {
    CertifiedRoot cr;
    cr.z = {static_cast<double>(run.z[k].real()), static_cast<double>(run.z[k].imag())};
    cr.radius = static_cast<double>(run.rad[k]);
    int d = std::min(digits, std::numeric_limits<Real>::digits10 - 4);
    cr.re = run.z[k].real().str(d);
    cr.im = run.z[k].imag().str(d);
    out.roots.push_back(cr);
  }
  out.digits_used = std::numeric_limits<Real>::digits10;
  std::sort(out.roots.begin(), out.roots.end(), [](const CertifiedRoot& x, const CertifiedRoot& y) {
    if (x.z.real() != y.z.real()) return x.z.real() < y.z.real();
    return x.z.imag() < y.z.imag();
  });
  return true;
}

}  // namespace

RootSet all_complex_roots(const IntPoly& p, int digits) {
  if (p.degree() < 1) throw std::invalid_argument("all_complex_roots: constant polynomial");
  RootSet out;
  if (digits <= 26 && try_roots<Float32>(p, digits, out)) return out;
  if (digits <= 56 && try_roots<Float64>(p, digits, out)) return out;
  if (digits <= 116 && try_roots<Float128>(p, digits, out)) return out;
  if (try_roots<Float256>(p, digits, out)) return out;
  throw NumericFailure("all_complex_roots: inclusion disks overlap at maximal precision");
}

// ---- number context -----------------------------------------------------

NumberContext::NumberContext(IntPoly m, RootBracket r) : modulus(std::move(m)), root(std::move(r)) {}

RootBracket NumberContext::refined(int bits) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = cache_.find(bits);
  if (it != cache_.end()) return it->second;
  RootBracket start = root;
  // start from the finest cached bracket below the request
  for (auto& [b, br] : cache_)
    if (b < bits && br.width() < start.width()) start = br;
  RootBracket r = refine(start, bits);
  cache_[bits] = r;
  return r;
}

ContextPtr make_context(const IntPoly& modulus, const RootBracket& root) {
  IntPoly m = squarefree_part(modulus);
  RootBracket r = root;
  if (r.poly != m) {
    if (!bracket_root_of(root, m)) throw std::invalid_argument("make_context: root is not a root of the modulus");
    r.poly = m;
  }
  if (sturm_count(sturm_sequence(m), Bound(r.lo), Bound(r.hi)) != 1)
    throw std::invalid_argument("make_context: bracket does not isolate a root of the modulus");
  return std::make_shared<const NumberContext>(m, r);
}

static RatPoly reduce(const RatPoly& a, const IntPoly& m) {
  if (a.degree() < m.degree()) return a;
  return divmod(a, to_rat(m)).second;
}

FieldElem::FieldElem(RatPoly r, ContextPtr c) : rep(reduce(r, c->modulus)), ctx(std::move(c)) {}

FieldElem FieldElem::from_rat(const Rat& a, ContextPtr c) {
  return FieldElem(RatPoly::constant(a), std::move(c));
}

FieldElem FieldElem::generator(ContextPtr c) { return FieldElem(RatPoly::x(), std::move(c)); }

FieldElem FieldElem::operator-() const { return FieldElem(-rep, ctx); }
FieldElem operator+(const FieldElem& a, const FieldElem& b) { return FieldElem(a.rep + b.rep, a.ctx); }
FieldElem operator-(const FieldElem& a, const FieldElem& b) { return FieldElem(a.rep - b.rep, a.ctx); }
FieldElem operator*(const FieldElem& a, const FieldElem& b) { return FieldElem(a.rep * b.rep, a.ctx); }
FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * b.inverse(); }

namespace {

// returns (g, u) with u*a = g mod m
std::pair<RatPoly, RatPoly> half_ext_gcd(const RatPoly& a, const RatPoly& m) {
  RatPoly r0 = m, r1 = a, s0, s1 = RatPoly::constant(Rat(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    RatPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  return {r0, s0};
}

}  // namespace

FieldElem FieldElem::inverse() const {
  RatPoly m = to_rat(ctx->modulus);
  auto [g, u] = half_ext_gcd(rep, m);
  if (g.degree() == 0) return FieldElem(u.scaled(Rat(1) / g.lead()), ctx);
  IntPoly gi = primitive_part(g);
  if (g.is_zero() || bracket_root_of(ctx->root, gi))
    throw std::domain_error("FieldElem: division by zero");
  // the root lives on the cofactor; invert there
  RatPoly m2 = divmod(m, g).first;
  auto [g2, u2] = half_ext_gcd(divmod(rep, m2).second, m2);
  if (g2.degree() != 0) throw std::logic_error("FieldElem: cofactor inversion failed");
  return FieldElem(u2.scaled(Rat(1) / g2.lead()), ctx);
}

FieldElem FieldElem::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElem r = from_rat(Rat(1), ctx), b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

RatInterval eval_interval(const RatPoly& p, const Rat& lo, const Rat& hi) {
  RatInterval acc{Rat(0), Rat(0)};
  for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) {
    Rat c1 = acc.lo * lo, c2 = acc.lo * hi, c3 = acc.hi * lo, c4 = acc.hi * hi;
    Rat mn = std::min({c1, c2, c3, c4}), mx = std::max({c1, c2, c3, c4});
    acc.lo = mn + *it;
    acc.hi = mx + *it;
  }
  return acc;
}

RatInterval nf_interval(const FieldElem& x, int bits) {
  RootBracket b = x.ctx->refined(bits);
  return eval_interval(x.rep, b.lo, b.hi);
}

bool nf_is_zero(const FieldElem& x) {
  if (x.rep.is_zero()) return true;
  return bracket_root_of(x.ctx->root, primitive_part(x.rep));
}

int nf_sign(const FieldElem& x) {
  if (x.rep.is_zero()) return 0;
  bool zero_checked = false;
  for (int bits = 64; bits <= 1 << 14; bits *= 2) {
    RatInterval iv = nf_interval(x, bits);
    if (iv.lo > 0) return 1;
    if (iv.hi < 0) return -1;
    if (!zero_checked) {
      if (nf_is_zero(x)) return 0;
      zero_checked = true;
    }
  }
  throw NumericFailure("nf_sign: refinement limit reached");
}

double nf_approx(const FieldElem& x) { return nf_interval(x, 64).mid(); }

nlohmann::json to_json(const IntPoly& p) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& a : p.c) j.push_back(a.get_str());
  return j;
}

IntPoly int_poly_from_json(const nlohmann::json& j) {
  std::vector<Int> v;
  for (const auto& e : j) {
    if (e.is_string()) v.emplace_back(e.get<std::string>());
    else if (e.is_number_integer()) v.emplace_back(e.get<long>());
    else throw std::invalid_argument("polynomial coefficient must be a decimal string");
  }
  return IntPoly(std::move(v));
}

nlohmann::json to_json(const RatPoly& p) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& a : p.c) j.push_back(a.get_str());
  return j;
}

std::string to_string(const IntPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const Int& a = p.c[k];
    if (a == 0) continue;
    Int m = abs(a);
    if (first) {
      if (a < 0) os << "-";
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    first = false;
    if (m != 1 || k == 0) os << m.get_str();
    if (k >= 1) os << var;
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

std::string to_string(const Rat& r) { return r.get_str(); }

std::string rat_to_decimal(const Rat& r, int digits) {
  Int scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Rat s = abs(r) * scale;
  Int q = s.get_num() / s.get_den();
  std::string d = q.get_str();
  if (static_cast<int>(d.size()) <= digits) d = std::string(digits + 1 - d.size(), '0') + d;
  std::string out = (r < 0 ? "-" : "") + d.substr(0, d.size() - digits);
  if (digits > 0) out += "." + d.substr(d.size() - digits);
  return out;
}

}  // namespace cubicdyn
