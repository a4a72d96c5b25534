#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qgauss/rational.hpp"

namespace qgauss {

// Packed byte encoding of a basis element of the ambient algebra D. The owning
// backend defines the layout (tensor slots, permutation images, reduced letters).
using BasisKey = std::string;

// Finite rational combination of basis keys, sorted by key with no zero coefficients.
class Element {
 public:
  using Term = std::pair<BasisKey, Rational>;

  Element() = default;
  explicit Element(std::vector<Term> terms);
  static Element basis(BasisKey key, const Rational& c = Rational(1));

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const BasisKey& key) const;

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Rational& c);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Rational& c, Element a) { return a *= c; }
  friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }
  friend bool operator<(const Element& a, const Element& b) { return a.terms_ < b.terms_; }

 private:
  std::vector<Term> terms_;
};

}  // namespace qgauss
