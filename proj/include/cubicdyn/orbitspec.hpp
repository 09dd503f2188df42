#pragma once

#include <array>
#include <optional>
#include <string>

#include "cubicdyn/intmatrix.hpp"
#include "cubicdyn/polylab.hpp"

namespace cubicdyn {

struct Permutation3 {
  std::array<int, 3> images{1, 2, 3};  // images of 1, 2, 3

  int operator()(int i) const { return images[i - 1]; }
  Permutation3 inverse() const;
  Permutation3 compose(const Permutation3& inner) const;  // this o inner
  bool valid() const;
  bool operator==(const Permutation3& o) const { return images == o.images; }
  bool operator!=(const Permutation3& o) const { return images != o.images; }

  static Permutation3 id() { return {{1, 2, 3}}; }
  static Permutation3 swap12() { return {{2, 1, 3}}; }
  static Permutation3 cycle123() { return {{2, 3, 1}}; }
};

enum class SigmaKind { Id, Swap12, Cycle123 };

struct OrbitData {
  std::array<int, 3> n{1, 1, 1};
  Permutation3 sigma;

  int n1() const { return n[0]; }
  int n2() const { return n[1]; }
  int n3() const { return n[2]; }
  int total() const { return n[0] + n[1] + n[2]; }
  int len(int i) const { return n[i - 1]; }
  SigmaKind kind() const;  // requires canonical sigma
  bool canonical_sigma() const;
  bool operator==(const OrbitData& o) const { return n == o.n && sigma == o.sigma; }
  bool operator<(const OrbitData& o) const;
};

OrbitData make_od(int n1, int n2, int n3, SigmaKind k);

// "n1,n2,n3:sigma" with sigma in {id, 12, 123}
std::string format_od(const OrbitData& od);
// Throws std::invalid_argument on malformed input. Accepts any sigma written as
// "id", "12", "13", "23", "123", "132"; the result is canonicalized.
OrbitData parse_od(const std::string& s);
std::string sigma_name(const Permutation3& p);

struct Canonical {
  OrbitData od;
  std::array<int, 3> relabel;  // old index i goes to relabel[i-1]
};

Canonical canonicalize(const std::array<int, 3>& lengths, const Permutation3& sigma);

IntPoly charpoly_complex(const OrbitData& od);
// Action on H2 of the blowup in the basis L, E_{i,j} (independent check of charpoly_complex).
IntMatrix h2_action(const OrbitData& od);

std::optional<RootBracket> dynamical_degree(const OrbitData& od, int digits = 30);
double entropy(const OrbitData& od);

struct SpectralSummary {
  IntPoly chi;
  std::optional<RootBracket> delta;
  double entropy = 0;
  int degree_check = 0;  // deg chi - (N+1), zero when consistent
};

SpectralSummary spectral_summary(const OrbitData& od);

// Number context Q(delta): modulus is the squarefree cyclotomic-free residual of chi.
ContextPtr delta_context(const OrbitData& od, const RootBracket& delta);

}  // namespace cubicdyn
