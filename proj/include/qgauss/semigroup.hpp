#pragma once

#include <map>
#include <vector>

#include "qgauss/moments.hpp"

namespace qgauss {

// Finite rational combination of Wick words, stored by degree (singleton count).
class WickSpanElement {
 public:
  struct Term {
    Rational coeff;
    WickWord word;
  };

  void add(const Rational& coeff, WickWord word);
  const std::map<int, std::vector<Term>>& components() const { return graded_; }
  std::vector<int> degrees() const;
  bool is_zero() const;

  // Scales every coefficient of degree s by factor(s).
  template <typename F>
  WickSpanElement graded_map(F factor) const {
    WickSpanElement out;
    for (const auto& [s, terms] : graded_) {
      const Rational c = factor(s);
      if (sgn(c) == 0) continue;
      for (const auto& t : terms) out.add(c * t.coeff, t.word);
    }
    return out;
  }

  friend WickSpanElement operator+(const WickSpanElement& a, const WickSpanElement& b);
  friend WickSpanElement operator*(const Rational& c, const WickSpanElement& a);
  friend WickSpanElement operator-(const WickSpanElement& a, const WickSpanElement& b);

 private:
  std::map<int, std::vector<Term>> graded_;
};

// T_t with c = e^{-t} in (0, 1]: the degree-s component is multiplied by c^s.
WickSpanElement apply_Tt(const WickSpanElement& x, const Rational& c);
// Degree-k component multiplied by k.
WickSpanElement number_operator(const WickSpanElement& x);

// t = -ln c, for reporting.
double time_from_factor(const Rational& c);

// <x, y> = tau(y* x), summed over components of equal degree.
QPoly span_inner(const WickSpanElement& x, const WickSpanElement& y, const CopiesBackend& backend,
                 const FockConfig& cfg);

// ||T_c x - x||^2 at q0 for each c, computed through span_inner.
std::vector<Rational> contraction_defects(const WickSpanElement& x, const std::vector<Rational>& cs,
                                          const Rational& q0, const CopiesBackend& backend, const FockConfig& cfg);

// Largest |(c^s - 1)/t + s| over the occurring degrees s and the given c = e^{-t}: the
// finite-difference quotient of T_t against -N, in double precision.
double generator_deviation(const WickSpanElement& x, const std::vector<Rational>& cs);

// Certification of (E_M o alpha_theta)(x) = c^s x for a Wick word x on H (+) 0: for each
// test word y on H (+) 0, tau(y* alpha_theta(x)) on H (+) H must equal c^s tau(y* x).
// The second summand carries the Gram matrix (1 - c^2) G so that the rotated vector
// (c h, sin(theta) h) has rational coordinates (c h, h).
struct AlphaCertificate {
  Rational c;
  int degree = 0;
  std::size_t pairings = 0;
  bool verified = true;
  std::vector<QPoly> rotated;   // tau(y* alpha_theta(x)) per test word
  std::vector<QPoly> expected;  // c^s tau(y* x) per test word
};

AlphaCertificate certify_alpha_theta(const WickWord& x, const std::vector<WickWord>& tests, const Rational& c,
                                     const CopiesBackend& backend, const FockConfig& cfg);

// Certification of T_t by pairing: <T_c x, y> through wick_inner_product equals
// c^s tau(y* x) computed through wick_trace_pairing.
struct SemigroupCertificate {
  Rational c;
  int degree = 0;
  std::size_t pairings = 0;
  bool verified = true;
};

SemigroupCertificate certify_Tt(const WickWord& x, const std::vector<WickWord>& tests, const Rational& c,
                                const CopiesBackend& backend, const FockConfig& cfg);

}  // namespace qgauss
