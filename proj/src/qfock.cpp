#include "qgauss/qfock.hpp"

#include <algorithm>

#include "qgauss/errors.hpp"

namespace qgauss {

FockConfig::FockConfig(RationalMatrix inner, int max_degree) : inner_(std::move(inner)), max_degree_(max_degree) {
  if (inner_.rows() == 0 || !inner_.is_symmetric()) {
    throw InvalidArgument("inner matrix must be square, nonempty and symmetric");
  }
  if (!leading_minors_positive(inner_)) throw InvalidArgument("inner matrix is not positive definite");
  if (max_degree_ < 0) throw InvalidArgument("negative truncation degree");
}

FockConfig FockConfig::orthonormal(int dim, int max_degree) {
  return FockConfig(RationalMatrix::identity(static_cast<std::size_t>(dim)), max_degree);
}

Rational FockConfig::inner_product(const HVector& a, const HVector& b) const {
  if (a.size() != inner_.rows() || b.size() != inner_.rows()) {
    throw InvalidArgument("vector dimension does not match the one-particle space");
  }
  Rational acc(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (sgn(b[j]) != 0 && sgn(inner_(i, j)) != 0) acc += a[i] * inner_(i, j) * b[j];
    }
  }
  return acc;
}

Rational FockConfig::inner_with_basis(const HVector& a, int b) const {
  if (a.size() != inner_.rows()) throw InvalidArgument("vector dimension does not match the one-particle space");
  Rational acc(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0) acc += a[i] * inner_(i, static_cast<std::size_t>(b));
  }
  return acc;
}

FockVector FockVector::vacuum() {
  FockVector v;
  v.terms_.emplace(FockWord{}, QPoly(Rational(1)));
  return v;
}

void FockVector::add(const FockWord& w, const QPoly& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

QPoly FockVector::vacuum_coefficient() const {
  auto it = terms_.find(FockWord{});
  return it == terms_.end() ? QPoly() : it->second;
}

int FockVector::max_degree() const {
  int d = -1;
  for (const auto& [w, c] : terms_) d = std::max(d, static_cast<int>(w.size()));
  return d;
}

QPoly q_inner(const FockWord& u, const FockWord& v, const FockConfig& cfg) {
  const std::size_t k = u.size();
  if (v.size() != k) return {};
  if (k == 0) return QPoly(Rational(1));
  if (k > 20) throw SizeGuard("q_inner degree too large");
  // f[mask] = sum over bijections of the remaining rows onto the columns outside mask.
  // Row i = popcount(mask) picks an unused column j; its inversion contribution is the
  // number of unused columns below j.
  const std::size_t full = (std::size_t{1} << k) - 1;
  std::vector<QPoly> f(full + 1);
  f[full] = QPoly(Rational(1));
  for (std::size_t mask = full; mask-- > 0;) {
    const int row = __builtin_popcountll(mask);
    QPoly acc;
    int unused_below = 0;
    for (std::size_t j = 0; j < k; ++j) {
      if (mask & (std::size_t{1} << j)) continue;
      const Rational& g = cfg.inner()(static_cast<std::size_t>(u[row]), static_cast<std::size_t>(v[j]));
      if (sgn(g) != 0 && !f[mask | (std::size_t{1} << j)].is_zero()) {
        acc += f[mask | (std::size_t{1} << j)].shifted(static_cast<unsigned>(unused_below)) * g;
      }
      ++unused_below;
    }
    f[mask] = std::move(acc);
  }
  return f[0];
}

namespace {

// Applies l+(h) + l-(h), dropping every component whose degree exceeds keep_degree.
FockVector apply_field_pruned(const HVector& h, const FockVector& v, const FockConfig& cfg, int keep_degree) {
  if (static_cast<int>(h.size()) != cfg.dim()) throw InvalidArgument("vector dimension does not match the one-particle space");
  std::vector<Rational> h_dot(static_cast<std::size_t>(cfg.dim()));
  for (int b = 0; b < cfg.dim(); ++b) h_dot[b] = cfg.inner_with_basis(h, b);
  FockVector out;
  for (const auto& [w, c] : v.terms()) {
    if (static_cast<int>(w.size()) + 1 <= keep_degree) {
      for (int b = 0; b < cfg.dim(); ++b) {
        if (sgn(h[b]) == 0) continue;
        FockWord nw;
        nw.reserve(w.size() + 1);
        nw.push_back(b);
        nw.insert(nw.end(), w.begin(), w.end());
        out.add(nw, c * h[b]);
      }
    }
    if (!w.empty() && static_cast<int>(w.size()) - 1 <= keep_degree) {
      for (std::size_t i = 0; i < w.size(); ++i) {
        const Rational& g = h_dot[static_cast<std::size_t>(w[i])];
        if (sgn(g) == 0) continue;
        FockWord nw;
        nw.reserve(w.size() - 1);
        nw.insert(nw.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
        nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 1, w.end());
        out.add(nw, c.shifted(static_cast<unsigned>(i)) * g);
      }
    }
  }
  return out;
}

}  // namespace

FockVector apply_field(const HVector& h, const FockVector& v, const FockConfig& cfg) {
  const bool creates = std::any_of(h.begin(), h.end(), [](const Rational& x) { return sgn(x) != 0; });
  if (creates && v.max_degree() + 1 > cfg.max_degree()) {
    throw TruncationExceeded("creation would exceed max_degree " + std::to_string(cfg.max_degree()));
  }
  return apply_field_pruned(h, v, cfg, cfg.max_degree());
}

QPoly vacuum_moment(const std::vector<HVector>& word, const FockConfig& cfg) {
  const int m = static_cast<int>(word.size());
  if (m > 2 * cfg.max_degree()) {
    throw TruncationExceeded("a word of length " + std::to_string(m) + " needs max_degree >= " +
                             std::to_string((m + 1) / 2));
  }
  if (m % 2 != 0) return {};
  FockVector v = FockVector::vacuum();
  // After applying position i (right to left) only i operators remain, so any
  // component of degree above min(i, m - i) can no longer reach the vacuum.
  for (int i = m - 1; i >= 0; --i) {
    v = apply_field_pruned(word[static_cast<std::size_t>(i)], v, cfg, std::min(i, cfg.max_degree()));
    if (v.terms().empty()) return {};
  }
  return v.vacuum_coefficient();
}

PsdReport gram_psd_check(int degree, const FockConfig& cfg, const Rational& q0, double tol) {
  if (degree < 0) throw InvalidArgument("negative degree");
  std::size_t count = 1;
  for (int i = 0; i < degree; ++i) {
    count *= static_cast<std::size_t>(cfg.dim());
    if (count > 4096) throw SizeGuard("dim^k exceeds 4096");
  }
  std::vector<FockWord> words;
  words.reserve(count);
  for (std::size_t idx = 0; idx < count; ++idx) {
    FockWord w(static_cast<std::size_t>(degree));
    std::size_t r = idx;
    for (int i = degree - 1; i >= 0; --i) {
      w[i] = static_cast<int>(r % static_cast<std::size_t>(cfg.dim()));
      r /= static_cast<std::size_t>(cfg.dim());
    }
    words.push_back(std::move(w));
  }
  RationalMatrix g(count, count);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i; j < count; ++j) {
      g(i, j) = q_inner(words[i], words[j], cfg).eval(q0);
      g(j, i) = g(i, j);
    }
  }
  PsdReport r;
  r.size = count;
  r.min_eigenvalue = min_eigenvalue(g);
  r.psd = r.min_eigenvalue >= -tol;
  return r;
}

}  // namespace qgauss
