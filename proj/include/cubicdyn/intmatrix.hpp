#pragma once

#include <vector>

#include "cubicdyn/polylab.hpp"

namespace cubicdyn {

// Square integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, Int(0)) {}

  static IntMatrix identity(int n);

  int size() const { return n_; }
  Int& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
  const Int& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
  friend IntMatrix operator-(const IntMatrix& x, const IntMatrix& y);
  bool operator==(const IntMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }

  IntMatrix pow(long e) const;
  Int trace() const;
  bool is_identity() const;
  Int max_abs() const;

 private:
  int n_ = 0;
  std::vector<Int> a_;
};

// det(t I - A), monic, exact (Faddeev-LeVerrier over Z).
IntPoly charpoly(const IntMatrix& a);
Int determinant(const IntMatrix& a);
int rank(const IntMatrix& a);

}  // namespace cubicdyn
