#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "qgauss/rational.hpp"

namespace qgauss {

// Polynomial in the deformation parameter q with exact rational coefficients.
// coefficients()[k] multiplies q^k; trailing zeros are always stripped, so the
// zero polynomial has no coefficients and equality is structural.
class QPoly {
 public:
  QPoly() = default;
  QPoly(const Rational& constant);  // NOLINT: implicit lift of scalars is intended
  QPoly(long constant) : QPoly(Rational(constant)) {}
  explicit QPoly(std::vector<Rational> coefficients);

  static QPoly monomial(const Rational& c, unsigned power);
  static QPoly q() { return monomial(Rational(1), 1); }

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

  Rational eval(const Rational& q0) const;
  double eval(double q0) const;

  // Multiplication by q^k.
  QPoly shifted(unsigned k) const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  QPoly& operator*=(const Rational& c);

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(QPoly a, const QPoly& b) { return a *= b; }
  friend QPoly operator*(QPoly a, const Rational& c) { return a *= c; }
  friend QPoly operator*(const Rational& c, QPoly a) { return a *= c; }
  friend QPoly operator-(QPoly a) { return a *= Rational(-1); }
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

  // Human-readable form such as "2 + q - 1/2*q^3".
  std::string to_string() const;

 private:
  void strip();
  std::vector<Rational> coeffs_;
};

QPoly qpoly_pow_q(unsigned k);

// Serialized as a list of "num/den" strings indexed by power; the zero polynomial
// is written as ["0"].
nlohmann::json to_json(const QPoly& p);
QPoly qpoly_from_json(const nlohmann::json& j);

}  // namespace qgauss
