#include "qgauss/copies.hpp"

#include <algorithm>

#include "qgauss/errors.hpp"

namespace qgauss {

CopySet copy_range(int first, int last) {
  CopySet s = 0;
  for (int c = first; c <= last; ++c) s |= copy_bit(c);
  return s;
}

std::string copy_set_to_string(CopySet s) {
  std::string out = "{";
  bool first = true;
  for (int c = 1; c <= 64; ++c) {
    if (!(s & copy_bit(c))) continue;
    if (!first) out += ",";
    first = false;
    out += std::to_string(c);
  }
  return out + "}";
}

CopiesBackend::CopiesBackend(int window) : window_(window) {
  if (window < 1 || window > 60) throw InvalidArgument("window must lie in 1..60");
}

void CopiesBackend::require_window(int needed, const std::string& what) const {
  if (needed > window_) {
    throw WindowExceeded(what + " (window " + std::to_string(window_) + ", needed " + std::to_string(needed) + ")");
  }
}

Element CopiesBackend::multiply(const Element& x, const Element& y) const {
  if (x.is_zero() || y.is_zero()) return {};
  std::vector<Element::Term> acc;
  acc.reserve(x.size() * y.size());
  for (const auto& [ka, a] : x.terms()) {
    for (const auto& [kb, b] : y.terms()) {
      const Rational ab = a * b;
      for (const auto prod = basis_multiply(ka, kb); const auto& [k, c] : prod.terms()) acc.emplace_back(k, ab * c);
    }
  }
  return Element(std::move(acc));
}

Element CopiesBackend::product(const std::vector<Element>& factors) const {
  Element acc = unit();
  for (const auto& f : factors) {
    acc = multiply(acc, f);
    if (acc.is_zero()) break;
  }
  return acc;
}

Element CopiesBackend::star(const Element& x) const {
  std::vector<Element::Term> acc;
  for (const auto& [k, a] : x.terms())
    for (const auto adj = basis_star(k); const auto& [ks, c] : adj.terms()) acc.emplace_back(ks, a * c);
  return Element(std::move(acc));
}

Rational CopiesBackend::trace(const Element& x) const {
  Rational t(0);
  for (const auto& [k, a] : x.terms()) {
    Rational tk = basis_trace(k);
    if (sgn(tk) != 0) t += a * tk;
  }
  return t;
}

Rational CopiesBackend::inner(const Element& x, const Element& y) const { return trace(multiply(star(y), x)); }

Element CopiesBackend::basis_expect(CopySet copies, const BasisKey& a) const {
  return basis_in_copies(a, copies) ? Element::basis(a) : Element();
}

Element CopiesBackend::expect(CopySet copies, const Element& x) const {
  std::vector<Element::Term> acc;
  for (const auto& [k, a] : x.terms())
    for (const auto proj = basis_expect(copies, k); const auto& [ke, c] : proj.terms()) acc.emplace_back(ke, a * c);
  return Element(std::move(acc));
}

Element CopiesBackend::relabel(const std::vector<int>& images, const Element& x) const {
  if (static_cast<int>(images.size()) != window_) throw InvalidArgument("relabeling must cover the whole window");
  std::vector<bool> hit(static_cast<std::size_t>(window_), false);
  for (int v : images) {
    if (v < 1 || v > window_ || hit[v - 1]) throw InvalidArgument("relabeling is not a permutation of the window");
    hit[v - 1] = true;
  }
  std::vector<Element::Term> acc;
  acc.reserve(x.size());
  for (const auto& [k, a] : x.terms()) acc.emplace_back(basis_relabel(images, k), a);
  return Element(std::move(acc));
}

Element CopiesBackend::pi(int j, const Element& a) const {
  if (j < 1) throw InvalidArgument("copy indices start at 1");
  require_window(j, "copy index outside the window");
  if (j == 1) return a;
  std::vector<int> images(static_cast<std::size_t>(window_));
  for (int c = 1; c <= window_; ++c) images[c - 1] = c;
  images[0] = j;
  images[j - 1] = 1;
  return relabel(images, a);
}

bool CopiesBackend::in_copies(const Element& x, CopySet copies) const {
  return std::all_of(x.terms().begin(), x.terms().end(),
                     [&](const Element::Term& t) { return basis_in_copies(t.first, copies); });
}

void CopiesBackend::set_generators(std::vector<Element> s) {
  for (const auto& x : s) {
    if (!in_A(x)) throw InvalidArgument("generator " + describe(x) + " does not lie in A");
  }
  generators_ = std::move(s);
}

std::string CopiesBackend::describe(const Element& x) const {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [k, a] : x.terms()) {
    if (!out.empty()) out += " + ";
    if (a != 1) out += "(" + to_string(a) + ")*";
    out += label(k);
  }
  return out;
}

bool AxiomReport::all_passed() const {
  return std::all_of(results.begin(), results.end(), [](const AxiomResult& r) { return r.passed; });
}

}  // namespace qgauss
