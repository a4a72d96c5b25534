#pragma once

#include <cstdint>
#include <vector>

#include "qgauss/linalg.hpp"
#include "qgauss/moments.hpp"

namespace qgauss {

// Symmetric +-1 matrix on indices a = (copy j, color t), flattened as a = j * colors + t
// with 0-based j and t; diagonal +1.
class SignMatrix {
 public:
  SignMatrix(int copies, int colors);
  int copies() const { return copies_; }
  int colors() const { return colors_; }
  int size() const { return copies_ * colors_; }
  int index(int j, int t) const { return j * colors_ + t; }
  int operator()(int a, int b) const { return data_[static_cast<std::size_t>(a * size() + b)]; }
  void set(int a, int b, int value);
  SignMatrix restricted(int n) const;  // first n indices, as a single-color matrix

 private:
  int copies_;
  int colors_;
  std::vector<std::int8_t> data_;
};

// Entries independent per unordered pair with P(eps = +1) = (1 + Q_{t,s}) / 2, so that
// E eps_{(j,t),(k,s)} = Q_{t,s}.
SignMatrix sample_epsilon(const RationalMatrix& q_matrix, int copies, std::uint64_t seed);

// v_a = Z^{z_a} X^{e_a}: X in tensor slot a, Z in slots b < a with eps_{ba} = -1.
// Products stay in the signed Pauli form sign * Z^z X^f, so up to 64 indices are exact.
struct PauliWord {
  int sign = 1;
  std::uint64_t z = 0;
  std::uint64_t f = 0;
  PauliWord operator*(const PauliWord& o) const;
  // Normalized trace of the 2^n x 2^n matrix.
  int trace() const { return (z == 0 && f == 0) ? sign : 0; }
};

class SymmetryRep {
 public:
  explicit SymmetryRep(const SignMatrix& eps);
  int size() const { return n_; }
  const PauliWord& v(int a) const { return v_[static_cast<std::size_t>(a)]; }
  // Explicit 2^n x 2^n matrix (n <= 10), entries in {-1, 0, 1}.
  std::vector<std::int8_t> dense(int a) const;
  // v_a^2 = 1 and v_a v_b = eps_ab v_b v_a, checked on dense integer matrices (n <= 10).
  bool verify_dense(const SignMatrix& eps) const;

 private:
  int n_;
  std::vector<PauliWord> v_;
};

SymmetryRep build_symmetries(const SignMatrix& eps);

struct MCEstimate {
  double mean = 0.0;
  double stderr_ = 0.0;
  std::size_t samples = 0;
  double target = 0.0;
  double z = 0.0;
  int n = 0;
  std::uint64_t seed = 0;
};

struct MCOptions {
  int copies = 8;
  std::size_t samples = 2000;
  std::uint64_t seed = 42;
  int jobs = 1;
  // When set, the letters' coefficients enter through tau_D(pi_{j_1}(x_1) ...).
  const CopiesBackend* backend = nullptr;
};

// Monte Carlo estimate of tau(u(t_1,h_1) ... u(t_m,h_m)) at finite n with colors from the
// letters; target is q_matrix_moment. Per-sample streams are keyed by (seed, index) and
// the reduction runs in index order, so the result does not depend on jobs.
MCEstimate mc_moment(const GeneratorWord& word, const RationalMatrix& q_matrix, const FockConfig& cfg,
                     const MCOptions& options);

// Exact expectation of the same finite-n model (Isserlis for the gaussians, independent
// signs for the symmetries), used to quantify the finite-n bias.
Rational matrix_model_expectation(const GeneratorWord& word, const RationalMatrix& q_matrix, const FockConfig& cfg,
                                  int copies, const CopiesBackend* backend = nullptr);

}  // namespace qgauss
