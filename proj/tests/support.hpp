#pragma once

#include <cstddef>
#include <vector>

#include "qgauss/copies.hpp"
#include "qgauss/linalg.hpp"
#include "qgauss/moments.hpp"
#include "qgauss/partitions.hpp"
#include "qgauss/qfock.hpp"
#include "qgauss/qpoly.hpp"

namespace qgauss::testing {

// Non-orthonormal positive definite Gram matrices for dims 1..3.
inline RationalMatrix skewed_inner(int dim) {
  if (dim == 1) return RationalMatrix::identity(1);
  if (dim == 2) return RationalMatrix::from_rows({{Rational(1), Rational(1, 2)}, {Rational(1, 2), Rational(1)}});
  return RationalMatrix::from_rows({{Rational(2), Rational(1), Rational(0)},
                                    {Rational(1), Rational(2), Rational(1, 2)},
                                    {Rational(0), Rational(1, 2), Rational(1)}});
}

inline HVector unit_vector(int dim, int i) {
  HVector e(static_cast<std::size_t>(dim));
  e[static_cast<std::size_t>(i)] = 1;
  return e;
}

// Basis vectors plus one mixed vector with alternating signs.
inline std::vector<HVector> vector_pool(int dim) {
  std::vector<HVector> pool;
  for (int i = 0; i < dim; ++i) pool.push_back(unit_vector(dim, i));
  HVector mixed(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) mixed[static_cast<std::size_t>(i)] = Rational(i % 2 == 0 ? 1 : -1, i + 1);
  pool.push_back(mixed);
  return pool;
}

inline GeneratorWord pure_word(const CopiesBackend& backend, const std::vector<HVector>& vecs) {
  GeneratorWord w;
  for (const auto& v : vecs) w.push_back({backend.unit(), v, 0});
  return w;
}

inline GeneratorWord repeated_word(const CopiesBackend& backend, int m, const HVector& h = HVector{1}) {
  return pure_word(backend, std::vector<HVector>(static_cast<std::size_t>(m), h));
}

inline GeneratorWord coeff_word(const std::vector<Element>& coeffs, const HVector& h) {
  GeneratorWord w;
  for (const auto& c : coeffs) w.push_back({c, h, 0});
  return w;
}

// Independent pair-partition enumerator: match position 0 with every later position and recurse.
inline void brute_pairings(std::vector<int> open, std::vector<std::pair<int, int>>& cur,
                           std::vector<std::vector<std::pair<int, int>>>& out) {
  if (open.empty()) {
    out.push_back(cur);
    return;
  }
  const int first = open.front();
  for (std::size_t i = 1; i < open.size(); ++i) {
    std::vector<int> rest;
    for (std::size_t j = 1; j < open.size(); ++j)
      if (j != i) rest.push_back(open[j]);
    cur.emplace_back(first, open[i]);
    brute_pairings(rest, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<std::pair<int, int>>> brute_pair_partitions(int m) {
  std::vector<std::vector<std::pair<int, int>>> out;
  if (m % 2 != 0) return out;
  std::vector<int> open(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) open[static_cast<std::size_t>(i)] = i;
  std::vector<std::pair<int, int>> cur;
  brute_pairings(open, cur, out);
  return out;
}

inline int brute_crossings(const std::vector<std::pair<int, int>>& pairs) {
  int c = 0;
  for (const auto& [a, b] : pairs)
    for (const auto& [x, y] : pairs)
      if (a < x && x < b && b < y) ++c;
  return c;
}

// Vacuum moment of s(h)^m for a unit vector by Jacobi-matrix path counting:
// up-steps weigh 1, a down-step from level n weighs [n]_q = 1 + q + ... + q^{n-1}.
inline QPoly jacobi_moment(int m) {
  std::vector<QPoly> level(static_cast<std::size_t>(m + 2));
  level[0] = QPoly(1);
  for (int step = 0; step < m; ++step) {
    std::vector<QPoly> next(level.size());
    for (std::size_t n = 0; n < level.size(); ++n) {
      if (level[n].is_zero()) continue;
      if (n + 1 < level.size()) next[n + 1] += level[n];
      if (n > 0) {
        QPoly bracket;
        for (std::size_t k = 0; k < n; ++k) bracket += QPoly::monomial(Rational(1), static_cast<unsigned>(k));
        next[n - 1] += level[n] * bracket;
      }
    }
    level = std::move(next);
  }
  return level[0];
}

inline RationalMatrix eval_matrix(const std::vector<std::vector<QPoly>>& g, const Rational& q) {
  RationalMatrix out(g.size(), g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) out(i, j) = g[i][j].eval(q);
  return out;
}

}  // namespace qgauss::testing
