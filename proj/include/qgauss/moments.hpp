#pragma once

#include <vector>

#include "qgauss/copies.hpp"
#include "qgauss/linalg.hpp"
#include "qgauss/partitions.hpp"
#include "qgauss/qfock.hpp"
#include "qgauss/qpoly.hpp"

namespace qgauss {

// One factor s(x, h) of a word: x in A (carried on copy 1 of D), h in the one-particle
// space, and a color used only by the multi-parameter formula.
struct Letter {
  Element coeff;
  HVector vec;
  int color = 0;
};
using GeneratorWord = std::vector<Letter>;

// Checks vector dimensions and that every coefficient lies in A.
void validate_word(const GeneratorWord& word, const CopiesBackend& backend, const FockConfig& cfg);

// Contribution of one pair partition with an explicit copy index per position:
// q^cr * prod <h_l, h_r> * tau(pi_{j_1}(x_1) ... pi_{j_m}(x_m)).
QPoly pair_term(const Partition12& sigma, const GeneratorWord& word, const std::vector<int>& copies,
                const CopiesBackend& backend, const FockConfig& cfg);

// Canonical copy assignment: the t-th pair (by left leg) gets copy t, 1-based.
std::vector<int> canonical_copies(const Partition12& sigma);

// tau(s(x_1,h_1) ... s(x_m,h_m)) as a polynomial in q, summed over pair partitions.
QPoly moment(const GeneratorWord& word, const CopiesBackend& backend, const FockConfig& cfg,
             const Limits& limits = Limits::from_env());

// Exact moment of u_n(x,h) = n^{-1/2} sum_j s(e_j (x) h) (x) pi_j(x) at finite n, grouping
// index tuples by their coincidence pattern.
QPoly finite_n_moment(const GeneratorWord& word, const CopiesBackend& backend, int n, const FockConfig& cfg,
                      const Limits& limits = Limits::from_env());

// Multi-parameter moment: each crossing of pairs opened at positions a < c contributes
// Q[t_a][t_c]; pairs must join equal colors.
Rational q_matrix_moment(const GeneratorWord& word, const RationalMatrix& q_matrix, const CopiesBackend& backend,
                         const FockConfig& cfg, const Limits& limits = Limits::from_env());
void validate_q_matrix(const RationalMatrix& q_matrix);

// x_sigma = f_sigma * W_sigma with f_sigma = q^wick_crossing_number prod <h_l, h_r> and coefficient
// F_sigma = E_{1..s}(pi_phi(1)(x_1) ... pi_phi(m)(x_m)) in A_{1..s}.
struct WickWord {
  Partition12 sigma;
  GeneratorWord letters;
  QPoly f;
  Element F;

  int degree() const { return sigma.num_singletons(); }
  std::vector<HVector> singleton_vectors() const;
};

// F_sigma alone, for coefficients without vectors.
Element reduced_coefficient(const Partition12& sigma, const std::vector<Element>& coeffs, const CopiesBackend& backend);

WickWord reduce(const Partition12& sigma, const GeneratorWord& word, const CopiesBackend& backend,
                const FockConfig& cfg);

// x_sigma(x_1,h_1,...)^* = x_{reversed sigma}(x_m^*, h_m, ..., x_1^*, h_1).
WickWord adjoint(const WickWord& w, const CopiesBackend& backend, const FockConfig& cfg);

// <x_1, x_2> = tau(x_2^* x_1) through the reduced form:
// f_1 f_2 sum_gamma q^inv(gamma) prod_i <h_i, k_gamma(i)> tau(alpha(F_2)^* F_1),
// where alpha moves copy gamma(i) of F_2 to copy i. Zero for unequal degrees.
QPoly wick_inner_product(const WickWord& w1, const WickWord& w2, const CopiesBackend& backend,
                         const FockConfig& cfg);

// tau(x_sigma) = [sigma is a pair partition] * f_sigma * tau(pi_j(x_1) ... pi_j(x_m)).
QPoly wick_trace(const Partition12& sigma, const GeneratorWord& word, const CopiesBackend& backend,
                 const FockConfig& cfg);

struct ConvolutionTerm {
  Partition12 gamma;
  GeneratorWord letters;
};

// x_{w1} x_{w2} = sum over joins gamma of x_gamma on the concatenated letters.
std::vector<ConvolutionTerm> convolution_expand(const WickWord& w1, const WickWord& w2,
                                                const Limits& limits = Limits::from_env());

// tau(x_2^* x_1) through the product expansion and the single-partition moment formula;
// independent of reduce() and of the copy relabeling.
QPoly wick_trace_pairing(const WickWord& w1, const WickWord& w2, const CopiesBackend& backend, const FockConfig& cfg,
                         const Limits& limits = Limits::from_env());

}  // namespace qgauss
