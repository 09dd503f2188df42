#include "cubicdyn/orbitspec.hpp"

#include <algorithm>
#include <cmath>
#include <regex>
#include <stdexcept>

namespace cubicdyn {

Permutation3 Permutation3::inverse() const {
  Permutation3 r;
  for (int i = 1; i <= 3; ++i) r.images[(*this)(i) - 1] = i;
  return r;
}

Permutation3 Permutation3::compose(const Permutation3& inner) const {
  Permutation3 r;
  for (int i = 1; i <= 3; ++i) r.images[i - 1] = (*this)(inner(i));
  return r;
}

bool Permutation3::valid() const {
  std::array<int, 3> s = images;
  std::sort(s.begin(), s.end());
  return s == std::array<int, 3>{1, 2, 3};
}

SigmaKind OrbitData::kind() const {
  if (sigma == Permutation3::id()) return SigmaKind::Id;
  if (sigma == Permutation3::swap12()) return SigmaKind::Swap12;
  if (sigma == Permutation3::cycle123()) return SigmaKind::Cycle123;
  throw std::logic_error("OrbitData: sigma is not canonical");
}

bool OrbitData::canonical_sigma() const {
  return sigma == Permutation3::id() || sigma == Permutation3::swap12() ||
         sigma == Permutation3::cycle123();
}

static int kind_rank(const OrbitData& od) {
  return od.canonical_sigma() ? static_cast<int>(od.kind()) : 3;
}

bool OrbitData::operator<(const OrbitData& o) const {
  int a = kind_rank(*this), b = kind_rank(o);
  if (a != b) return a < b;
  if (total() != o.total()) return total() < o.total();
  if (n != o.n) return n < o.n;
  return sigma.images < o.sigma.images;
}

OrbitData make_od(int n1, int n2, int n3, SigmaKind k) {
  OrbitData od;
  od.n = {n1, n2, n3};
  switch (k) {
    case SigmaKind::Id: od.sigma = Permutation3::id(); break;
    case SigmaKind::Swap12: od.sigma = Permutation3::swap12(); break;
    case SigmaKind::Cycle123: od.sigma = Permutation3::cycle123(); break;
  }
  return od;
}

std::string sigma_name(const Permutation3& p) {
  if (p == Permutation3::id()) return "id";
  // cycle notation over the moved points
  for (int i = 1; i <= 3; ++i) {
    if (p(i) == i) {
      int a = i % 3 + 1, b = a % 3 + 1;
      return std::to_string(std::min(a, b)) + std::to_string(std::max(a, b));
    }
  }
  return p(1) == 2 ? "123" : "132";
}

std::string format_od(const OrbitData& od) {
  return std::to_string(od.n[0]) + "," + std::to_string(od.n[1]) + "," + std::to_string(od.n[2]) + ":" +
         sigma_name(od.sigma);
}

OrbitData parse_od(const std::string& s) {
  static const std::regex re(R"(^\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*:\s*(id|12|13|23|123|132)\s*$)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw std::invalid_argument("malformed orbit data '" + s + "'");
  std::array<int, 3> n;
  for (int i = 0; i < 3; ++i) {
    long v = std::stol(m[i + 1].str());
    if (v < 1 || v > 10000) throw std::invalid_argument("orbit length out of range in '" + s + "'");
    n[i] = static_cast<int>(v);
  }
  std::string sg = m[4].str();
  Permutation3 p;
  if (sg == "id") p = Permutation3::id();
  else if (sg == "12") p = {{2, 1, 3}};
  else if (sg == "13") p = {{3, 2, 1}};
  else if (sg == "23") p = {{1, 3, 2}};
  else if (sg == "123") p = {{2, 3, 1}};
  else p = {{3, 1, 2}};
  return canonicalize(n, p).od;
}

Canonical canonicalize(const std::array<int, 3>& lengths, const Permutation3& sigma) {
  if (!sigma.valid()) throw std::invalid_argument("canonicalize: not a permutation");
  std::array<int, 3> pi{1, 2, 3};
  std::optional<Canonical> best;
  do {
    Permutation3 rel{pi};
    // conjugated permutation: rel o sigma o rel^{-1}
    Permutation3 s2 = rel.compose(sigma).compose(rel.inverse());
    OrbitData od;
    od.sigma = s2;
    for (int i = 1; i <= 3; ++i) od.n[rel(i) - 1] = lengths[i - 1];
    if (!od.canonical_sigma()) continue;
    if (!best || od.n < best->od.n) best = Canonical{od, pi};
  } while (std::next_permutation(pi.begin(), pi.end()));
  return *best;
}

namespace {

IntPoly tpow(int k) { return IntPoly::monomial(Int(1), k); }
IntPoly one() { return IntPoly::constant(Int(1)); }

}  // namespace

IntPoly charpoly_complex(const OrbitData& od) {
  const int n1 = od.n1(), n2 = od.n2(), n3 = od.n3(), N = od.total();
  IntPoly t = tpow(1);
  switch (od.kind()) {
    case SigmaKind::Cycle123:
      return t - tpow(N) + (t - one()) * (tpow(n1) + one()) * (tpow(n2) + one()) * (tpow(n3) + one());
    case SigmaKind::Id:
      return (t - one()) * (tpow(N) - tpow(n1) - tpow(n2) - tpow(n3) + IntPoly::constant(Int(2))) -
             (tpow(n1) - one()) * (tpow(n2) - one()) * (tpow(n3) - one());
    case SigmaKind::Swap12:
      return (t - one()) * (tpow(n3) * (tpow(n1) + one()) * (tpow(n2) + one()) - tpow(n1) - tpow(n2) -
                            IntPoly::constant(Int(2))) -
             (tpow(n1 + n2) - one()) * (tpow(n3) - one());
  }
  throw std::logic_error("charpoly_complex: unreachable");
}

IntMatrix h2_action(const OrbitData& od) {
  const int N = od.total();
  IntMatrix m(N + 1);
  // index 0 = L, then E_{1,1..n1}, E_{2,..}, E_{3,..}
  std::array<int, 3> start{1, 1 + od.n1(), 1 + od.n1() + od.n2()};
  auto e = [&](int i, int j) { return start[i - 1] + j - 1; };
  m(0, 0) = 2;
  for (int i = 1; i <= 3; ++i) m(e(i, 1), 0) = -1;
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j < od.len(i); ++j) m(e(i, j + 1), e(i, j)) = 1;
    int col = e(i, od.len(i));
    int k = od.sigma(i);
    m(0, col) = 1;
    for (int l = 1; l <= 3; ++l)
      if (l != k) m(e(l, 1), col) -= 1;
  }
  return m;
}

std::optional<RootBracket> dynamical_degree(const OrbitData& od, int digits) {
  IntPoly chi = charpoly_complex(od);
  IntPoly q = squarefree_part(chi);
  if (sturm_count(q, Bound(1), Bound::plus_infinity()) == 0) return std::nullopt;
  auto r = largest_real_root(q, digits);
  if (!r) return std::nullopt;
  // the isolated root exceeds 1; make the bracket show it
  int bits = static_cast<int>(digits * 3.33) + 4;
  while (r->lo < 1) {
    bits += 16;
    *r = refine(*r, bits);
  }
  return r;
}

double entropy(const OrbitData& od) {
  auto d = dynamical_degree(od, 20);
  return d ? std::log(d->approx) : 0.0;
}

SpectralSummary spectral_summary(const OrbitData& od) {
  SpectralSummary s;
  s.chi = charpoly_complex(od);
  s.delta = dynamical_degree(od);
  s.entropy = s.delta ? std::log(s.delta->approx) : 0.0;
  s.degree_check = s.chi.degree() - (od.total() + 1);
  return s;
}

ContextPtr delta_context(const OrbitData& od, const RootBracket& delta) {
  CyclotomicSplit cs = cyclotomic_split(charpoly_complex(od));
  IntPoly m = squarefree_part(cs.residual);
  return make_context(m, delta);
}

}  // namespace cubicdyn
