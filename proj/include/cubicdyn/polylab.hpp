#pragma once

#include <gmpxx.h>

#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace cubicdyn {

using Int = mpz_class;
using Rat = mpq_class;

// Raised when a numeric procedure cannot reach a certified answer.
struct NumericFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class R>
class Poly {
 public:
  std::vector<R> c;  // ascending degree, no trailing zeros

  Poly() = default;
  explicit Poly(std::vector<R> coeffs) : c(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<long> coeffs) {
    for (long v : coeffs) c.emplace_back(v);
    trim();
  }

  static Poly constant(const R& a) { return Poly(std::vector<R>{a}); }
  static Poly monomial(const R& a, int k) {
    std::vector<R> v(k + 1, R(0));
    v[k] = a;
    return Poly(std::move(v));
  }
  static Poly x() { return monomial(R(1), 1); }

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  R lead() const { return c.empty() ? R(0) : c.back(); }
  R coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c.size())) ? c[k] : R(0);
  }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& a : r.c) a = -a;
    return r;
  }
  Poly& operator+=(const Poly& o) {
    if (o.c.size() > c.size()) c.resize(o.c.size(), R(0));
    for (size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c.size() > c.size()) c.resize(o.c.size(), R(0));
    for (size_t i = 0; i < o.c.size(); ++i) c[i] -= o.c[i];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<R> r(a.c.size() + b.c.size() - 1, R(0));
    for (size_t i = 0; i < a.c.size(); ++i) {
      if (a.c[i] == 0) continue;
      for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
    }
    return Poly(std::move(r));
  }
  Poly scaled(const R& s) const {
    Poly r = *this;
    for (auto& a : r.c) a *= s;
    r.trim();
    return r;
  }
  bool operator==(const Poly& o) const { return c == o.c; }
  bool operator!=(const Poly& o) const { return c != o.c; }

  template <class V>
  V eval(const V& x) const {
    V acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + V(*it);
    return acc;
  }

  Poly derivative() const {
    if (c.size() <= 1) return Poly();
    std::vector<R> r(c.size() - 1);
    for (size_t i = 1; i < c.size(); ++i) r[i - 1] = c[i] * R(static_cast<long>(i));
    return Poly(std::move(r));
  }

  // p(-t)
  Poly negated_variable() const {
    Poly r = *this;
    for (size_t i = 1; i < r.c.size(); i += 2) r.c[i] = -r.c[i];
    return r;
  }

  Poly pow(int e) const {
    Poly r = constant(R(1)), b = *this;
    while (e > 0) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }
};

using IntPoly = Poly<Int>;
using RatPoly = Poly<Rat>;

IntPoly int_poly(std::initializer_list<long> coeffs);
RatPoly to_rat(const IntPoly& p);
// Clears denominators and content; leading coefficient made positive.
IntPoly primitive_part(const RatPoly& p);
IntPoly primitive_part(const IntPoly& p);

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
// Exact quotient in Z[t], or nullopt when b does not divide a over Z.
std::optional<IntPoly> exact_div(const IntPoly& a, const IntPoly& b);
RatPoly gcd(const RatPoly& a, const RatPoly& b);  // monic, or zero
IntPoly gcd(const IntPoly& a, const IntPoly& b);  // primitive, lead > 0
IntPoly squarefree_part(const IntPoly& p);

IntPoly reverse(const IntPoly& p);
bool is_reciprocal(const IntPoly& p);
// +1 if reverse(p) = p, -1 if reverse(p) = -p, 0 otherwise
int reciprocal_sign(const IntPoly& p);
// Normalizes sign so the leading coefficient is positive.
IntPoly positive_lead(const IntPoly& p);

int sign_at(const IntPoly& p, const Rat& x);

// A point of the extended real line for Sturm counting.
struct Bound {
  Rat value;
  int inf = 0;  // -1, 0, +1
  Bound() = default;
  Bound(const Rat& v) : value(v) {}
  Bound(long v) : value(v) {}
  static Bound plus_infinity() { Bound b; b.inf = 1; return b; }
  static Bound minus_infinity() { Bound b; b.inf = -1; return b; }
};

std::vector<IntPoly> sturm_sequence(const IntPoly& p);
// Number of distinct real roots in (a, b]. The squarefree part is taken internally.
int sturm_count(const IntPoly& p, const Bound& a, const Bound& b);
int sturm_count(const std::vector<IntPoly>& seq, const Bound& a, const Bound& b);

struct RootBracket {
  IntPoly poly;  // squarefree
  Rat lo, hi;    // exactly one root of poly in (lo, hi], poly(lo) != 0
  double approx = 0;
  double err = 0;

  Rat width() const { return hi - lo; }
  std::string decimal(int digits) const;
};

// Shrinks the bracket by bisection until hi - lo < 2^-bits.
RootBracket refine(const RootBracket& b, int bits);
std::optional<RootBracket> largest_real_root(const IntPoly& p, int digits = 20);
std::vector<RootBracket> real_roots(const IntPoly& p, int digits = 20);
RootBracket finish_bracket(RootBracket b);
// true when the root of b is also a root of q (exact)
bool bracket_root_of(const RootBracket& b, const IntPoly& q);

IntPoly cyclotomic(int k);
int euler_phi(int k);

struct CyclotomicSplit {
  std::map<int, int> factors;  // k -> multiplicity of Phi_k
  IntPoly residual;

  IntPoly reassemble() const;
};

CyclotomicSplit cyclotomic_split(const IntPoly& p);

// P_0..P_n (P_0 = degree) via Newton's identities; p must be monic up to sign.
std::vector<Int> power_sums(const IntPoly& p, int n_max);

struct CertifiedRoot {
  std::complex<double> z;
  double radius = 0;  // inclusion disk radius
  std::string re, im;
};

struct RootSet {
  std::vector<CertifiedRoot> roots;
  int digits_used = 0;
};

// Simultaneous iteration with an inclusion-disk certificate. Throws NumericFailure
// when the disks cannot be separated at the highest precision available.
RootSet all_complex_roots(const IntPoly& p, int digits = 30);

// Elements of Q(delta) represented modulo a squarefree modulus with an isolated root.
struct NumberContext {
  IntPoly modulus;
  RootBracket root;

  NumberContext(IntPoly m, RootBracket r);
  // Bracket refined to hi - lo < 2^-bits, cached.
  RootBracket refined(int bits) const;

 private:
  mutable std::mutex mu_;
  mutable std::map<int, RootBracket> cache_;
};

using ContextPtr = std::shared_ptr<const NumberContext>;

ContextPtr make_context(const IntPoly& modulus, const RootBracket& root);

class FieldElem {
 public:
  RatPoly rep;
  ContextPtr ctx;

  FieldElem() = default;
  FieldElem(RatPoly r, ContextPtr c);
  static FieldElem from_rat(const Rat& a, ContextPtr c);
  static FieldElem generator(ContextPtr c);

  FieldElem operator-() const;
  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
  FieldElem inverse() const;
  FieldElem pow(int e) const;
};

struct RatInterval {
  Rat lo, hi;
  bool contains_zero() const { return lo <= 0 && hi >= 0; }
  double mid() const { return Rat((lo + hi) / 2).get_d(); }
};

RatInterval eval_interval(const RatPoly& p, const Rat& lo, const Rat& hi);
RatInterval nf_interval(const FieldElem& x, int bits);
bool nf_is_zero(const FieldElem& x);
// Exact sign of the value; intervals first, exact zero test when they straddle 0.
int nf_sign(const FieldElem& x);
double nf_approx(const FieldElem& x);

nlohmann::json to_json(const IntPoly& p);
IntPoly int_poly_from_json(const nlohmann::json& j);
nlohmann::json to_json(const RatPoly& p);
std::string to_string(const IntPoly& p, const std::string& var = "t");
std::string to_string(const Rat& r);

}  // namespace cubicdyn
