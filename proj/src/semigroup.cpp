#include "qgauss/semigroup.hpp"

#include <algorithm>
#include <cmath>

#include "qgauss/errors.hpp"

namespace qgauss {

void WickSpanElement::add(const Rational& coeff, WickWord word) {
  if (sgn(coeff) == 0) return;
  const int s = word.degree();
  graded_[s].push_back({coeff, std::move(word)});
}

std::vector<int> WickSpanElement::degrees() const {
  std::vector<int> out;
  for (const auto& [s, terms] : graded_)
    if (!terms.empty()) out.push_back(s);
  return out;
}

bool WickSpanElement::is_zero() const { return degrees().empty(); }

WickSpanElement operator+(const WickSpanElement& a, const WickSpanElement& b) {
  WickSpanElement out = a;
  for (const auto& [s, terms] : b.graded_)
    for (const auto& t : terms) out.add(t.coeff, t.word);
  return out;
}

WickSpanElement operator*(const Rational& c, const WickSpanElement& a) {
  return a.graded_map([&](int) { return c; });
}

WickSpanElement operator-(const WickSpanElement& a, const WickSpanElement& b) { return a + Rational(-1) * b; }

WickSpanElement apply_Tt(const WickSpanElement& x, const Rational& c) {
  if (c <= 0 || c > 1) throw InvalidArgument("contraction factor c = e^{-t} must lie in (0, 1]");
  return x.graded_map([&](int s) { return pow(c, static_cast<unsigned>(s)); });
}

WickSpanElement number_operator(const WickSpanElement& x) {
  return x.graded_map([](int s) { return Rational(s); });
}

double time_from_factor(const Rational& c) {
  if (c <= 0 || c > 1) throw InvalidArgument("contraction factor c = e^{-t} must lie in (0, 1]");
  return -std::log1p(to_double(c - 1));
}

QPoly span_inner(const WickSpanElement& x, const WickSpanElement& y, const CopiesBackend& backend,
                 const FockConfig& cfg) {
  QPoly acc;
  for (const auto& [s, xs] : x.components()) {
    auto it = y.components().find(s);
    if (it == y.components().end()) continue;
    for (const auto& tx : xs)
      for (const auto& ty : it->second) acc += wick_inner_product(tx.word, ty.word, backend, cfg) * (tx.coeff * ty.coeff);
  }
  return acc;
}

std::vector<Rational> contraction_defects(const WickSpanElement& x, const std::vector<Rational>& cs,
                                          const Rational& q0, const CopiesBackend& backend, const FockConfig& cfg) {
  std::vector<Rational> out;
  out.reserve(cs.size());
  for (const auto& c : cs) {
    const WickSpanElement d = apply_Tt(x, c) - x;
    out.push_back(span_inner(d, d, backend, cfg).eval(q0));
  }
  return out;
}

double generator_deviation(const WickSpanElement& x, const std::vector<Rational>& cs) {
  double worst = 0.0;
  for (int s : x.degrees()) {
    for (const auto& c : cs) {
      const double t = time_from_factor(c);
      if (t == 0.0) continue;
      const double quotient = to_double(pow(c, static_cast<unsigned>(s)) - 1) / t;
      worst = std::max(worst, std::abs(quotient + s));
    }
  }
  return worst;
}

namespace {

WickWord lift(const WickWord& w, const Rational& first_scale, bool second_copy) {
  WickWord out = w;
  for (auto& l : out.letters) {
    HVector v(l.vec.size() * 2);
    for (std::size_t i = 0; i < l.vec.size(); ++i) {
      v[i] = first_scale * l.vec[i];
      if (second_copy) v[l.vec.size() + i] = l.vec[i];
    }
    l.vec = std::move(v);
  }
  return out;
}

}  // namespace

AlphaCertificate certify_alpha_theta(const WickWord& x, const std::vector<WickWord>& tests, const Rational& c,
                                     const CopiesBackend& backend, const FockConfig& cfg) {
  if (c < -1 || c > 1) throw InvalidArgument("cos(theta) must lie in [-1, 1]");
  const bool rotates = c != 1 && c != -1;
  const std::size_t d = static_cast<std::size_t>(cfg.dim());
  const Rational second = rotates ? Rational(1 - c * c) : Rational(1);
  RationalMatrix g(2 * d, 2 * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      g(i, j) = cfg.inner()(i, j);
      g(d + i, d + j) = second * cfg.inner()(i, j);
    }
  }
  const FockConfig doubled(g, cfg.max_degree());

  AlphaCertificate cert;
  cert.c = c;
  cert.degree = x.degree();
  const WickWord rotated = lift(x, c, rotates);
  const Rational factor = pow(c, static_cast<unsigned>(x.degree()));
  for (const auto& y : tests) {
    const QPoly lhs = wick_trace_pairing(rotated, lift(y, Rational(1), false), backend, doubled);
    const QPoly rhs = wick_trace_pairing(x, y, backend, cfg) * factor;
    ++cert.pairings;
    cert.verified = cert.verified && lhs == rhs;
    cert.rotated.push_back(lhs);
    cert.expected.push_back(rhs);
  }
  return cert;
}

SemigroupCertificate certify_Tt(const WickWord& x, const std::vector<WickWord>& tests, const Rational& c,
                                const CopiesBackend& backend, const FockConfig& cfg) {
  SemigroupCertificate cert;
  cert.c = c;
  cert.degree = x.degree();
  WickSpanElement span;
  span.add(Rational(1), x);
  const WickSpanElement tx = apply_Tt(span, c);
  const Rational factor = pow(c, static_cast<unsigned>(x.degree()));
  for (const auto& y : tests) {
    WickSpanElement ys;
    ys.add(Rational(1), y);
    const QPoly lhs = span_inner(tx, ys, backend, cfg);
    const QPoly rhs = wick_trace_pairing(x, y, backend, cfg) * factor;
    ++cert.pairings;
    cert.verified = cert.verified && lhs == rhs;
  }
  return cert;
}

}  // namespace qgauss
