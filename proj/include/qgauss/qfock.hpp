#pragma once

#include <map>
#include <vector>

#include "qgauss/linalg.hpp"
#include "qgauss/qpoly.hpp"
#include "qgauss/rational.hpp"

namespace qgauss {

// One-particle space: coordinates relative to a basis with Gram matrix `inner`
// (symmetric, positive definite), plus a truncation degree for Fock computations.
class FockConfig {
 public:
  FockConfig(RationalMatrix inner, int max_degree);
  static FockConfig orthonormal(int dim, int max_degree);

  int dim() const { return static_cast<int>(inner_.rows()); }
  int max_degree() const { return max_degree_; }
  const RationalMatrix& inner() const { return inner_; }
  FockConfig with_max_degree(int d) const { return FockConfig(inner_, d); }

  Rational inner_product(const HVector& a, const HVector& b) const;
  // <a, e_b> for a basis vector e_b.
  Rational inner_with_basis(const HVector& a, int b) const;

 private:
  RationalMatrix inner_;
  int max_degree_;
};

// Simple tensor e_{w_1} (x) ... (x) e_{w_k} of basis vectors.
using FockWord = std::vector<int>;

// Finite combination of simple tensors with q-polynomial coefficients.
class FockVector {
 public:
  static FockVector vacuum();
  void add(const FockWord& w, const QPoly& c);
  const std::map<FockWord, QPoly>& terms() const { return terms_; }
  QPoly vacuum_coefficient() const;
  int max_degree() const;

 private:
  std::map<FockWord, QPoly> terms_;
};

// sum over permutations pi of q^{inv(pi)} prod_i <e_{u_i}, e_{v_pi(i)}>; zero for unequal lengths.
QPoly q_inner(const FockWord& u, const FockWord& v, const FockConfig& cfg);

// Field operator l+(h) + l-(h); throws TruncationExceeded if creation leaves the
// truncated space.
FockVector apply_field(const HVector& h, const FockVector& v, const FockConfig& cfg);

// <s(h_1) ... s(h_m) Omega, Omega>. Requires m <= 2 * max_degree.
QPoly vacuum_moment(const std::vector<HVector>& word, const FockConfig& cfg);

struct PsdReport {
  bool psd = false;
  double min_eigenvalue = 0.0;
  std::size_t size = 0;
};

// Gram matrix of all degree-k simple tensors at q0, checked for min eigenvalue >= -tol.
// SizeGuard if dim^k exceeds 4096.
PsdReport gram_psd_check(int degree, const FockConfig& cfg, const Rational& q0, double tol = 1e-10);

}  // namespace qgauss
