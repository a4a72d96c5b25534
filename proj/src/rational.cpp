#include "qgauss/rational.hpp"

#include <cctype>

#include "qgauss/errors.hpp"

namespace qgauss {

namespace {

bool is_integer_literal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  const auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num.front() == '+') num.erase(0, 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-') {
    throw InvalidArgument("not a rational literal: '" + std::string(text) + "'");
  }
  Integer d(den);
  if (d == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
  Rational r(Integer(num), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_str();
}

double to_double(const Rational& r) { return r.get_d(); }

Rational pow(const Rational& base, unsigned exponent) {
  Rational result(1);
  Rational b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    b *= b;
    exponent >>= 1U;
  }
  return result;
}

HVector parse_vector(const std::vector<std::string>& entries) {
  HVector v;
  v.reserve(entries.size());
  for (const auto& e : entries) v.push_back(parse_rational(e));
  return v;
}

}  // namespace qgauss
