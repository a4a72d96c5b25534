#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "qgauss/copies.hpp"
#include "qgauss/errors.hpp"

namespace qgauss {

namespace {

BasisKey key_from(const std::vector<int>& values) {
  BasisKey k(values.size(), '\0');
  for (std::size_t i = 0; i < values.size(); ++i) k[i] = static_cast<char>(values[i]);
  return k;
}

int byte_at(const BasisKey& k, std::size_t i) { return static_cast<unsigned char>(k[i]); }
int signed_at(const BasisKey& k, std::size_t i) { return static_cast<signed char>(k[i]); }

std::string trim(const std::string& s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(trim(cur));
  return out;
}

// Expands a list of per-slot sparse factors into keyed terms.
Element expand_slots(const std::vector<AlgebraElement>& slots, const Rational& scale) {
  std::vector<std::pair<std::vector<int>, Rational>> partial{{{}, scale}};
  for (const auto& s : slots) {
    std::vector<std::pair<std::vector<int>, Rational>> next;
    for (const auto& [prefix, c] : partial) {
      for (const auto& [i, a] : s.terms()) {
        auto p = prefix;
        p.push_back(i);
        next.emplace_back(std::move(p), c * a);
      }
    }
    partial = std::move(next);
    if (partial.empty()) return {};
  }
  std::vector<Element::Term> terms;
  for (auto& [p, c] : partial) terms.emplace_back(key_from(p), std::move(c));
  return Element(std::move(terms));
}

}  // namespace

// ---------------------------------------------------------------- tensor

TensorBackend::TensorBackend(FiniteTracialAlgebra b, FiniteTracialAlgebra c, int window)
    : CopiesBackend(window), b_(std::move(b)), c_(std::move(c)) {
  if (b_.dim() > 255 || c_.dim() > 255) throw SizeGuard("tensor backend factors are limited to 255 basis elements");
  std::vector<Element> s{unit()};
  for (int i = 0; i < c_.dim(); ++i) {
    if (i != c_.unit_index()) s.push_back(a_basis_element(b_.unit_index(), i));
  }
  generators_ = std::move(s);
}

Element TensorBackend::unit() const {
  std::vector<int> k(static_cast<std::size_t>(window_) + 1, c_.unit_index());
  k[0] = b_.unit_index();
  return Element::basis(key_from(k));
}

Element TensorBackend::a_basis_element(int b_index, int c_index) const {
  std::vector<int> k(static_cast<std::size_t>(window_) + 1, c_.unit_index());
  k[0] = b_index;
  k[1] = c_index;
  return Element::basis(key_from(k));
}

std::vector<Element> TensorBackend::b_basis() const {
  std::vector<Element> out;
  for (int i = 0; i < b_.dim(); ++i) out.push_back(a_basis_element(i, c_.unit_index()));
  return out;
}

Element TensorBackend::basis_multiply(const BasisKey& a, const BasisKey& b) const {
  std::vector<AlgebraElement> slots;
  slots.reserve(a.size());
  slots.push_back(b_.basis_product(byte_at(a, 0), byte_at(b, 0)));
  for (std::size_t k = 1; k < a.size(); ++k) slots.push_back(c_.basis_product(byte_at(a, k), byte_at(b, k)));
  return expand_slots(slots, Rational(1));
}

Element TensorBackend::basis_star(const BasisKey& a) const {
  std::vector<AlgebraElement> slots;
  slots.push_back(b_.basis_star(byte_at(a, 0)));
  for (std::size_t k = 1; k < a.size(); ++k) slots.push_back(c_.basis_star(byte_at(a, k)));
  return expand_slots(slots, Rational(1));
}

Rational TensorBackend::basis_trace(const BasisKey& a) const {
  Rational t = b_.basis_trace(byte_at(a, 0));
  for (std::size_t k = 1; k < a.size() && sgn(t) != 0; ++k) t *= c_.basis_trace(byte_at(a, k));
  return t;
}

bool TensorBackend::basis_in_copies(const BasisKey& a, CopySet copies) const {
  for (int c = 1; c <= window_; ++c) {
    if (!(copies & copy_bit(c)) && byte_at(a, static_cast<std::size_t>(c)) != c_.unit_index()) return false;
  }
  return true;
}

Element TensorBackend::basis_expect(CopySet copies, const BasisKey& a) const {
  BasisKey out = a;
  Rational scale(1);
  for (int c = 1; c <= window_; ++c) {
    if (copies & copy_bit(c)) continue;
    const int idx = byte_at(a, static_cast<std::size_t>(c));
    if (idx == c_.unit_index()) continue;
    scale *= c_.basis_trace(idx);
    if (sgn(scale) == 0) return {};
    out[static_cast<std::size_t>(c)] = static_cast<char>(c_.unit_index());
  }
  return Element::basis(std::move(out), scale);
}

BasisKey TensorBackend::basis_relabel(const std::vector<int>& images, const BasisKey& a) const {
  BasisKey out = a;
  for (int c = 1; c <= window_; ++c) out[static_cast<std::size_t>(images[c - 1])] = a[static_cast<std::size_t>(c)];
  return out;
}

std::string TensorBackend::label(const BasisKey& key) const {
  std::string out = b_.label(byte_at(key, 0)) + "|";
  for (int c = 1; c <= window_; ++c) {
    if (c > 1) out += ",";
    out += c_.label(byte_at(key, static_cast<std::size_t>(c)));
  }
  return out;
}

Element TensorBackend::parse_basis(const std::string& text) const {
  const std::string s = trim(text);
  if (s == "1") return unit();
  std::string b_part = b_.label(b_.unit_index());
  std::string c_part = s;
  if (const auto bar = s.find('|'); bar != std::string::npos) {
    b_part = trim(s.substr(0, bar));
    c_part = s.substr(bar + 1);
  }
  const int bi = b_.index_of(b_part);
  if (bi < 0) throw InvalidArgument("unknown B label '" + b_part + "'");
  const auto slots = split(c_part, ',');
  if (slots.size() != 1 && static_cast<int>(slots.size()) != window_) {
    throw InvalidArgument("tensor label needs one C label or one per copy: '" + s + "'");
  }
  std::vector<int> k(static_cast<std::size_t>(window_) + 1, c_.unit_index());
  k[0] = bi;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    const int ci = c_.index_of(slots[i]);
    if (ci < 0) throw InvalidArgument("unknown C label '" + slots[i] + "'");
    k[i + 1] = ci;
  }
  return Element::basis(key_from(k));
}

// ---------------------------------------------------------------- permutations

PermGroupBackend::PermGroupBackend(int d, int window) : CopiesBackend(window), d_(d) {
  if (d < 0) throw InvalidArgument("perm backend needs d >= 0");
  if (points() > 64) throw SizeGuard("perm backend is limited to 64 points");
  generators_ = {unit(), transposition(0, 1)};
}

Element PermGroupBackend::unit() const {
  std::vector<int> id(static_cast<std::size_t>(points()));
  std::iota(id.begin(), id.end(), 0);
  return Element::basis(key_from(id));
}

Element PermGroupBackend::group_element(const std::vector<int>& images) const {
  if (static_cast<int>(images.size()) != points()) throw InvalidArgument("permutation has the wrong number of points");
  std::vector<int> k(images.size());
  std::vector<bool> hit(images.size(), false);
  for (std::size_t i = 0; i < images.size(); ++i) {
    const int v = images[i] + d_;
    if (v < 0 || v >= points() || hit[v]) throw InvalidArgument("not a permutation of the window points");
    hit[v] = true;
    k[i] = v;
  }
  return Element::basis(key_from(k));
}

Element PermGroupBackend::transposition(int a, int b) const {
  if (a < -d_ || a > window_ || b < -d_ || b > window_ || a == b) throw InvalidArgument("transposition out of range");
  std::vector<int> id(static_cast<std::size_t>(points()));
  std::iota(id.begin(), id.end(), 0);
  std::swap(id[a + d_], id[b + d_]);
  return Element::basis(key_from(id));
}

std::vector<Element> PermGroupBackend::b_basis() const {
  std::vector<int> head(static_cast<std::size_t>(d_) + 1);
  std::iota(head.begin(), head.end(), 0);
  std::vector<Element> out;
  do {
    std::vector<int> k(static_cast<std::size_t>(points()));
    std::iota(k.begin(), k.end(), 0);
    std::copy(head.begin(), head.end(), k.begin());
    out.push_back(Element::basis(key_from(k)));
  } while (std::next_permutation(head.begin(), head.end()));
  std::sort(out.begin(), out.end());
  return out;
}

Element PermGroupBackend::basis_multiply(const BasisKey& a, const BasisKey& b) const {
  BasisKey c(a.size(), '\0');
  for (std::size_t x = 0; x < a.size(); ++x) c[x] = a[static_cast<std::size_t>(byte_at(b, x))];
  return Element::basis(std::move(c));
}

Element PermGroupBackend::basis_star(const BasisKey& a) const {
  BasisKey c(a.size(), '\0');
  for (std::size_t x = 0; x < a.size(); ++x) c[static_cast<std::size_t>(byte_at(a, x))] = static_cast<char>(x);
  return Element::basis(std::move(c));
}

Rational PermGroupBackend::basis_trace(const BasisKey& a) const {
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (byte_at(a, x) != static_cast<int>(x)) return Rational(0);
  }
  return Rational(1);
}

bool PermGroupBackend::basis_in_copies(const BasisKey& a, CopySet copies) const {
  for (int c = 1; c <= window_; ++c) {
    if (copies & copy_bit(c)) continue;
    const auto p = static_cast<std::size_t>(c + d_);
    if (byte_at(a, p) != static_cast<int>(p)) return false;
  }
  return true;
}

BasisKey PermGroupBackend::basis_relabel(const std::vector<int>& images, const BasisKey& a) const {
  std::vector<int> sigma(a.size());
  std::iota(sigma.begin(), sigma.end(), 0);
  for (int c = 1; c <= window_; ++c) sigma[static_cast<std::size_t>(c + d_)] = images[c - 1] + d_;
  // (sigma g sigma^-1)(sigma(x)) = sigma(g(x))
  BasisKey out(a.size(), '\0');
  for (std::size_t x = 0; x < a.size(); ++x) {
    out[static_cast<std::size_t>(sigma[x])] = static_cast<char>(sigma[static_cast<std::size_t>(byte_at(a, x))]);
  }
  return out;
}

std::string PermGroupBackend::label(const BasisKey& key) const {
  std::string out;
  std::vector<bool> seen(key.size(), false);
  for (std::size_t x = 0; x < key.size(); ++x) {
    if (seen[x] || byte_at(key, x) == static_cast<int>(x)) continue;
    out += "(";
    std::size_t y = x;
    bool first = true;
    while (!seen[y]) {
      seen[y] = true;
      if (!first) out += " ";
      first = false;
      out += std::to_string(static_cast<int>(y) - d_);
      y = static_cast<std::size_t>(byte_at(key, y));
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

Element PermGroupBackend::parse_basis(const std::string& text) const {
  const std::string s = trim(text);
  if (s == "1" || s == "e") return unit();
  Element acc = unit();
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[pos]))) {
      ++pos;
      continue;
    }
    if (s[pos] != '(') throw InvalidArgument("expected '(' in cycle notation: '" + s + "'");
    const auto close = s.find(')', pos);
    if (close == std::string::npos) throw InvalidArgument("unbalanced cycle: '" + s + "'");
    std::istringstream in(s.substr(pos + 1, close - pos - 1));
    std::vector<int> cyc;
    int v = 0;
    while (in >> v) cyc.push_back(v);
    if (!in.eof()) throw InvalidArgument("bad cycle entry in '" + s + "'");
    std::vector<int> images(static_cast<std::size_t>(points()));
    std::iota(images.begin(), images.end(), -d_);
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const int from = cyc[i];
      const int to = cyc[(i + 1) % cyc.size()];
      if (from < -d_ || from > window_ || to < -d_ || to > window_) {
        throw InvalidArgument("cycle point outside [-d, window]: '" + s + "'");
      }
      images[static_cast<std::size_t>(from + d_)] = to;
    }
    acc = multiply(acc, group_element(images));
    pos = close + 1;
  }
  return acc;
}

FiniteTracialAlgebra PermGroupBackend::as_group_algebra() const {
  if (points() > 9) throw SizeGuard("explicit group algebra limited to 9 points");
  return FiniteTracialAlgebra::group_algebra(symmetric_group(points(), -d_));
}

AlgebraElement PermGroupBackend::to_group_algebra(const Element& x) const {
  std::vector<AlgebraElement::Term> terms;
  for (const auto& [k, c] : x.terms()) {
    std::vector<int> perm(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) perm[i] = byte_at(k, i);
    terms.emplace_back(static_cast<int>(permutation_rank(perm)), c);
  }
  return AlgebraElement(std::move(terms));
}

Element PermGroupBackend::from_group_algebra(const AlgebraElement& x) const {
  std::vector<Element::Term> terms;
  for (const auto& [i, c] : x.terms()) terms.emplace_back(key_from(permutation_unrank(i, points())), c);
  return Element(std::move(terms));
}

std::vector<int> PermGroupBackend::subalgebra_generators(CopySet copies) const {
  std::vector<int> pts;
  for (int p = -d_; p <= 0; ++p) pts.push_back(p);
  for (int c = 1; c <= window_; ++c) {
    if (copies & copy_bit(c)) pts.push_back(c);
  }
  std::vector<int> gens;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    std::vector<int> perm(static_cast<std::size_t>(points()));
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[static_cast<std::size_t>(pts[i] + d_)], perm[static_cast<std::size_t>(pts[i + 1] + d_)]);
    gens.push_back(static_cast<int>(permutation_rank(perm)));
  }
  return gens;
}

Element BrokenPermBackend::pi(int j, const Element& a) const {
  Element base = PermGroupBackend::pi(j, a);
  if (j != 2 || d() < 1) return base;
  const Element t = transposition(0, 2);
  return multiply(multiply(t, base), t);
}

// ---------------------------------------------------------------- free group

FreeHaarBackend::FreeHaarBackend(int window) : CopiesBackend(window) {
  if (window > 127) throw SizeGuard("free backend is limited to 127 letters");
  generators_ = {unit(), word({1}), word({-1})};
}

Element FreeHaarBackend::unit() const { return Element::basis(BasisKey()); }

Element FreeHaarBackend::word(const std::vector<int>& letters) const {
  Element acc = unit();
  for (int l : letters) {
    if (l == 0 || l > window_ || -l > window_) throw InvalidArgument("letter outside the window");
    acc = multiply(acc, Element::basis(BasisKey(1, static_cast<char>(l))));
  }
  return acc;
}

std::vector<Element> FreeHaarBackend::b_basis() const { return {unit()}; }

Element FreeHaarBackend::basis_multiply(const BasisKey& a, const BasisKey& b) const {
  BasisKey out = a;
  for (std::size_t i = 0; i < b.size(); ++i) {
    const int l = signed_at(b, i);
    if (!out.empty() && signed_at(out, out.size() - 1) == -l) {
      out.pop_back();
    } else {
      out.push_back(b[i]);
    }
  }
  return Element::basis(std::move(out));
}

Element FreeHaarBackend::basis_star(const BasisKey& a) const {
  BasisKey out(a.rbegin(), a.rend());
  for (auto& ch : out) ch = static_cast<char>(-static_cast<signed char>(ch));
  return Element::basis(std::move(out));
}

Rational FreeHaarBackend::basis_trace(const BasisKey& a) const { return Rational(a.empty() ? 1 : 0); }

bool FreeHaarBackend::basis_in_copies(const BasisKey& a, CopySet copies) const {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(copies & copy_bit(std::abs(signed_at(a, i))))) return false;
  }
  return true;
}

BasisKey FreeHaarBackend::basis_relabel(const std::vector<int>& images, const BasisKey& a) const {
  BasisKey out = a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int l = signed_at(a, i);
    const int img = images[static_cast<std::size_t>(std::abs(l) - 1)];
    out[i] = static_cast<char>(l > 0 ? img : -img);
  }
  return out;
}

std::string FreeHaarBackend::label(const BasisKey& key) const {
  if (key.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < key.size()) {
    const int l = signed_at(key, i);
    std::size_t j = i;
    while (j < key.size() && signed_at(key, j) == l) ++j;
    const int power = static_cast<int>(j - i) * (l > 0 ? 1 : -1);
    if (!out.empty()) out += " ";
    out += "u" + std::to_string(std::abs(l));
    if (power != 1) out += "^" + std::to_string(power);
    i = j;
  }
  return out;
}

Element FreeHaarBackend::parse_basis(const std::string& text) const {
  const std::string s = trim(text);
  if (s == "1" || s == "e") return unit();
  std::istringstream in(s);
  std::string tok;
  std::vector<int> letters;
  while (in >> tok) {
    if (tok.empty() || tok[0] != 'u') throw InvalidArgument("free word tokens look like u2^-1: '" + s + "'");
    std::string rest = tok.substr(1);
    bool inverse = false;
    if (!rest.empty() && rest.back() == '*') {
      inverse = true;
      rest.pop_back();
    }
    int letter = 1;
    int power = 1;
    const auto caret = rest.find('^');
    const std::string idx = rest.substr(0, caret);
    try {
      if (!idx.empty()) letter = std::stoi(idx);
      if (caret != std::string::npos) power = std::stoi(rest.substr(caret + 1));
    } catch (const std::exception&) {
      throw InvalidArgument("bad free word token '" + tok + "'");
    }
    if (inverse) power = -power;
    for (int r = 0; r < std::abs(power); ++r) letters.push_back(power > 0 ? letter : -letter);
  }
  return word(letters);
}

}  // namespace qgauss
