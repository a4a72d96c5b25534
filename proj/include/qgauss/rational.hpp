#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace qgauss {

using Integer = mpz_class;
using Rational = mpq_class;

// Accepts "p", "p/q" and a leading sign; the result is canonical.
Rational parse_rational(std::string_view text);

// "p" for integers, otherwise "p/q" in lowest terms.
std::string to_string(const Rational& r);

double to_double(const Rational& r);

Rational pow(const Rational& base, unsigned exponent);

// Coordinates of a vector in the one-particle space, relative to its basis.
using HVector = std::vector<Rational>;

HVector parse_vector(const std::vector<std::string>& entries);

}  // namespace qgauss
