#include "qgauss/qpoly.hpp"

#include "qgauss/errors.hpp"

namespace qgauss {

QPoly::QPoly(const Rational& constant) {
  if (sgn(constant) != 0) coeffs_.push_back(constant);
}

QPoly::QPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { strip(); }

QPoly QPoly::monomial(const Rational& c, unsigned power) {
  std::vector<Rational> v(power + 1);
  v[power] = c;
  return QPoly(std::move(v));
}

QPoly qpoly_pow_q(unsigned k) { return QPoly::monomial(Rational(1), k); }

void QPoly::strip() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational QPoly::eval(const Rational& q0) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= q0;
    acc += *it;
  }
  return acc;
}

double QPoly::eval(double q0) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q0 + it->get_d();
  return acc;
}

QPoly QPoly::shifted(unsigned k) const {
  if (is_zero()) return {};
  QPoly out;
  out.coeffs_.assign(k, Rational(0));
  out.coeffs_.insert(out.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return out;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  strip();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  strip();
  return *this;
}

QPoly& QPoly::operator*=(const QPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  strip();
  return *this;
}

QPoly& QPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    const bool negative = sgn(c) < 0;
    const Rational mag = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit = mag == 1;
    if (k == 0) {
      out += qgauss::to_string(mag);
    } else {
      if (!unit) out += qgauss::to_string(mag) + "*";
      out += k == 1 ? "q" : "q^" + std::to_string(k);
    }
  }
  return out;
}

nlohmann::json to_json(const QPoly& p) {
  nlohmann::json j = nlohmann::json::array();
  if (p.is_zero()) {
    j.push_back("0");
    return j;
  }
  for (const auto& c : p.coefficients()) j.push_back(to_string(c));
  return j;
}

QPoly qpoly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw InvalidArgument("qpoly must be a JSON array of rational strings");
  std::vector<Rational> coeffs;
  for (const auto& e : j) {
    if (e.is_string()) {
      coeffs.push_back(parse_rational(e.get<std::string>()));
    } else if (e.is_number_integer()) {
      coeffs.emplace_back(e.get<long>());
    } else {
      throw InvalidArgument("qpoly coefficient must be a rational string");
    }
  }
  return QPoly(std::move(coeffs));
}

}  // namespace qgauss
