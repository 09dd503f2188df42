#include "cubicdyn/intmatrix.hpp"

namespace cubicdyn {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  int n = x.n_;
  IntMatrix r(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const Int& v = x(i, k);
      if (v == 0) continue;
      for (int j = 0; j < n; ++j)
        if (y(k, j) != 0) r(i, j) += v * y(k, j);
    }
  return r;
}

IntMatrix operator-(const IntMatrix& x, const IntMatrix& y) {
  IntMatrix r = x;
  for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= y.a_[i];
  return r;
}

IntMatrix IntMatrix::pow(long e) const {
  IntMatrix r = identity(n_), b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Int IntMatrix::trace() const {
  Int s = 0;
  for (int i = 0; i < n_; ++i) s += (*this)(i, i);
  return s;
}

bool IntMatrix::is_identity() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

Int IntMatrix::max_abs() const {
  Int m = 0;
  for (const auto& v : a_)
    if (abs(v) > m) m = abs(v);
  return m;
}

IntPoly charpoly(const IntMatrix& a) {
  int n = a.size();
  // c_n = 1, M_0 = 0; M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k
  std::vector<Int> c(n + 1, Int(0));
  c[n] = 1;
  IntMatrix m(n);
  for (int k = 1; k <= n; ++k) {
    IntMatrix am = a * m;
    for (int i = 0; i < n; ++i) am(i, i) += c[n - k + 1];
    m = am;
    Int tr = (a * m).trace();
    Int q;
    mpz_divexact_ui(q.get_mpz_t(), tr.get_mpz_t(), static_cast<unsigned long>(k));
    c[n - k] = -q;
  }
  return IntPoly(std::move(c));
}

Int determinant(const IntMatrix& a) {
  IntPoly p = charpoly(a);
  Int d = p.coeff(0);
  return (a.size() % 2 == 0) ? d : Int(-d);
}

int rank(const IntMatrix& a) {
  int n = a.size();
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = a(i, j);
  int r = 0;
  for (int col = 0; col < n && r < n; ++col) {
    int piv = -1;
    for (int i = r; i < n; ++i)
      if (m[i][col] != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(m[piv], m[r]);
    for (int i = r + 1; i < n; ++i) {
      if (m[i][col] == 0) continue;
      Rat f = m[i][col] / m[r][col];
      for (int j = col; j < n; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace cubicdyn
