#include "qgauss/element.hpp"

#include <algorithm>

namespace qgauss {

Element::Element(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().first == t.first) {
      terms_.back().second += t.second;
    } else {
      terms_.push_back(std::move(t));
    }
  }
  std::erase_if(terms_, [](const Term& t) { return sgn(t.second) == 0; });
}

Element Element::basis(BasisKey key, const Rational& c) {
  Element e;
  if (sgn(c) != 0) e.terms_.emplace_back(std::move(key), c);
  return e;
}

Rational Element::coefficient(const BasisKey& key) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                             [](const Term& t, const BasisKey& k) { return t.first < k; });
  return it != terms_.end() && it->first == key ? it->second : Rational(0);
}

Element& Element::operator+=(const Element& o) {
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
      merged.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
      merged.push_back(o.terms_[j++]);
    } else {
      Rational s = terms_[i].second + o.terms_[j].second;
      if (sgn(s) != 0) merged.emplace_back(std::move(terms_[i].first), std::move(s));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  Element neg = o;
  neg *= Rational(-1);
  return *this += neg;
}

Element& Element::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.second *= c;
  }
  return *this;
}

}  // namespace qgauss
