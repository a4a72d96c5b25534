#include "qgauss/moments.hpp"

#include <algorithm>
#include <map>

#include "qgauss/errors.hpp"

namespace qgauss {

namespace {

// pi_c(x_i) for c = 1..copies, indexed [c-1][i].
std::vector<std::vector<Element>> copy_table(const GeneratorWord& word, int copies, const CopiesBackend& backend) {
  std::vector<std::vector<Element>> table(static_cast<std::size_t>(copies));
  for (int c = 1; c <= copies; ++c) {
    table[c - 1].reserve(word.size());
    for (const auto& l : word) table[c - 1].push_back(backend.pi(c, l.coeff));
  }
  return table;
}

Rational pair_inner(const Partition12& sigma, const GeneratorWord& word, const FockConfig& cfg) {
  Rational acc(1);
  for (const auto& p : sigma.pairs()) {
    acc *= cfg.inner_product(word[p.left].vec, word[p.right].vec);
    if (sgn(acc) == 0) break;
  }
  return acc;
}

Rational trace_of_assignment(const GeneratorWord& word, const std::vector<int>& copies,
                             const std::vector<std::vector<Element>>& table, const CopiesBackend& backend) {
  Element acc = backend.unit();
  for (std::size_t i = 0; i < word.size(); ++i) {
    acc = backend.multiply(acc, table[copies[i] - 1][i]);
    if (acc.is_zero()) return Rational(0);
  }
  return backend.trace(acc);
}

int max_copy(const std::vector<int>& copies) {
  return copies.empty() ? 0 : *std::max_element(copies.begin(), copies.end());
}

GeneratorWord adjoint_letters(const GeneratorWord& word, const CopiesBackend& backend) {
  GeneratorWord out(word.rbegin(), word.rend());
  for (auto& l : out) l.coeff = backend.star(l.coeff);
  return out;
}

}  // namespace

void validate_word(const GeneratorWord& word, const CopiesBackend& backend, const FockConfig& cfg) {
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (static_cast<int>(word[i].vec.size()) != cfg.dim()) {
      throw InvalidArgument("letter " + std::to_string(i + 1) + ": vector has dimension " +
                            std::to_string(word[i].vec.size()) + ", expected dim_H = " + std::to_string(cfg.dim()));
    }
    if (!backend.in_A(word[i].coeff)) {
      throw InvalidArgument("letter " + std::to_string(i + 1) + ": coefficient " + backend.describe(word[i].coeff) +
                            " does not lie in A");
    }
  }
}

std::vector<int> canonical_copies(const Partition12& sigma) {
  std::vector<int> copies(static_cast<std::size_t>(sigma.size()), 0);
  int next = 1;
  for (const auto& p : sigma.pairs()) {
    copies[p.left] = next;
    copies[p.right] = next;
    ++next;
  }
  for (int s : sigma.singletons()) copies[s] = next++;
  return copies;
}

QPoly pair_term(const Partition12& sigma, const GeneratorWord& word, const std::vector<int>& copies,
                const CopiesBackend& backend, const FockConfig& cfg) {
  if (sigma.size() != static_cast<int>(word.size()) || copies.size() != word.size()) {
    throw InvalidArgument("partition, word and copy assignment must have equal length");
  }
  if (!sigma.is_pair_partition()) throw InvalidArgument("pair_term needs a pair partition");
  for (int c : copies) {
    if (c < 1) throw InvalidArgument("copy indices start at 1");
  }
  backend.require_window(max_copy(copies), "window < s+p");
  const Rational inner = pair_inner(sigma, word, cfg);
  if (sgn(inner) == 0) return QPoly();
  const auto table = copy_table(word, max_copy(copies), backend);
  const Rational t = trace_of_assignment(word, copies, table, backend);
  return QPoly::monomial(inner * t, static_cast<unsigned>(crossing_number(sigma)));
}

QPoly moment(const GeneratorWord& word, const CopiesBackend& backend, const FockConfig& cfg, const Limits& limits) {
  validate_word(word, backend, cfg);
  const int m = static_cast<int>(word.size());
  if (m > limits.max_ground_set) {
    throw CapExceeded("word length " + std::to_string(m) + " exceeds the enumeration cap " +
                      std::to_string(limits.max_ground_set));
  }
  if (m % 2 == 1) return QPoly();
  const int p = m / 2;
  backend.require_window(p, "window < s+p");
  const auto table = copy_table(word, p, backend);
  QPoly acc;
  for (const auto& sigma : enumerate_pair_partitions(m, limits)) {
    const Rational inner = pair_inner(sigma, word, cfg);
    if (sgn(inner) == 0) continue;
    const Rational t = trace_of_assignment(word, canonical_copies(sigma), table, backend);
    if (sgn(t) == 0) continue;
    acc += QPoly::monomial(inner * t, static_cast<unsigned>(crossing_number(sigma)));
  }
  return acc;
}

QPoly finite_n_moment(const GeneratorWord& word, const CopiesBackend& backend, int n, const FockConfig& cfg,
                      const Limits& limits) {
  if (n < 1) throw InvalidArgument("n must be a positive integer");
  validate_word(word, backend, cfg);
  const int m = static_cast<int>(word.size());
  if (m > limits.max_ground_set) {
    throw CapExceeded("word length " + std::to_string(m) + " exceeds the enumeration cap " +
                      std::to_string(limits.max_ground_set));
  }
  if (2 * cfg.max_degree() < m) {
    throw TruncationExceeded("max_degree " + std::to_string(cfg.max_degree()) + " < m/2 for a word of length " +
                             std::to_string(m));
  }
  if (m % 2 == 1) return QPoly();
  const int max_blocks = std::min(n, m / 2);
  backend.require_window(max_blocks, "window < min(n, m/2)");
  const auto table = copy_table(word, max_blocks, backend);
  const int dh = cfg.dim();

  // ell^2_b (x) H with e_c (x) e_i at coordinate c*dh + i.
  std::map<int, FockConfig> doubled;
  auto config_for = [&](int b) -> const FockConfig& {
    auto it = doubled.find(b);
    if (it != doubled.end()) return it->second;
    RationalMatrix g(static_cast<std::size_t>(b * dh), static_cast<std::size_t>(b * dh));
    for (int c = 0; c < b; ++c)
      for (int i = 0; i < dh; ++i)
        for (int j = 0; j < dh; ++j) g(c * dh + i, c * dh + j) = cfg.inner()(i, j);
    return doubled.emplace(b, FockConfig(g, m / 2)).first->second;
  };

  Rational denom(1);
  for (int i = 0; i < m / 2; ++i) denom *= n;

  QPoly acc;
  for (const auto& labels : enumerate_set_partitions(m, limits)) {
    const int b = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
    if (b > n) continue;
    std::vector<int> sizes(static_cast<std::size_t>(b), 0);
    for (int l : labels) ++sizes[l];
    if (std::any_of(sizes.begin(), sizes.end(), [](int s) { return s < 2; })) continue;

    Rational falling(1);
    for (int i = 0; i < b; ++i) falling *= n - i;

    std::vector<int> copies(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) copies[i] = labels[i] + 1;
    const Rational t = trace_of_assignment(word, copies, table, backend);
    if (sgn(t) == 0) continue;

    const FockConfig& big = config_for(b);
    std::vector<HVector> vecs;
    vecs.reserve(word.size());
    for (std::size_t i = 0; i < word.size(); ++i) {
      HVector v(static_cast<std::size_t>(b * dh));
      for (int k = 0; k < dh; ++k) v[labels[i] * dh + k] = word[i].vec[k];
      vecs.push_back(std::move(v));
    }
    acc += vacuum_moment(vecs, big) * (falling * t / denom);
  }
  return acc;
}

void validate_q_matrix(const RationalMatrix& q_matrix) {
  if (q_matrix.rows() == 0 || q_matrix.rows() != q_matrix.cols()) throw InvalidArgument("Q-matrix must be square");
  if (!q_matrix.is_symmetric()) throw InvalidArgument("Q-matrix must be symmetric");
  for (std::size_t i = 0; i < q_matrix.rows(); ++i)
    for (std::size_t j = 0; j < q_matrix.cols(); ++j)
      if (q_matrix(i, j) < -1 || q_matrix(i, j) > 1) throw InvalidArgument("Q-matrix entries must lie in [-1, 1]");
}

Rational q_matrix_moment(const GeneratorWord& word, const RationalMatrix& q_matrix, const CopiesBackend& backend,
                         const FockConfig& cfg, const Limits& limits) {
  validate_q_matrix(q_matrix);
  validate_word(word, backend, cfg);
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i].color < 0 || word[i].color >= static_cast<int>(q_matrix.rows())) {
      throw InvalidArgument("letter " + std::to_string(i + 1) + ": color outside the Q-matrix dimension " +
                            std::to_string(q_matrix.rows()));
    }
  }
  const int m = static_cast<int>(word.size());
  if (m > limits.max_ground_set) {
    throw CapExceeded("word length " + std::to_string(m) + " exceeds the enumeration cap " +
                      std::to_string(limits.max_ground_set));
  }
  if (m % 2 == 1) return Rational(0);
  backend.require_window(m / 2, "window < s+p");
  const auto table = copy_table(word, m / 2, backend);
  Rational acc(0);
  for (const auto& sigma : enumerate_pair_partitions(m, limits)) {
    const auto& pairs = sigma.pairs();
    if (std::any_of(pairs.begin(), pairs.end(),
                    [&](const Pair& p) { return word[p.left].color != word[p.right].color; })) {
      continue;
    }
    Rational weight = pair_inner(sigma, word, cfg);
    for (std::size_t a = 0; a < pairs.size() && sgn(weight) != 0; ++a) {
      for (std::size_t c = 0; c < pairs.size(); ++c) {
        if (pairs[a].left < pairs[c].left && pairs[c].left < pairs[a].right && pairs[a].right < pairs[c].right) {
          weight *= q_matrix(word[pairs[a].left].color, word[pairs[c].left].color);
        }
      }
    }
    if (sgn(weight) == 0) continue;
    acc += weight * trace_of_assignment(word, canonical_copies(sigma), table, backend);
  }
  return acc;
}

std::vector<HVector> WickWord::singleton_vectors() const {
  std::vector<HVector> out;
  for (int s : sigma.singletons()) out.push_back(letters[s].vec);
  return out;
}

Element reduced_coefficient(const Partition12& sigma, const std::vector<Element>& coeffs,
                            const CopiesBackend& backend) {
  if (sigma.size() != static_cast<int>(coeffs.size())) throw InvalidArgument("partition and word differ in length");
  const int s = sigma.num_singletons();
  backend.require_window(s + sigma.num_pairs(), "window < s+p");
  const auto phi = encoding_map(sigma);
  Element acc = backend.unit();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    acc = backend.multiply(acc, backend.pi(phi[i] + 1, coeffs[i]));
    if (acc.is_zero()) break;
  }
  return backend.expect(copy_range(1, s), acc);
}

WickWord reduce(const Partition12& sigma, const GeneratorWord& word, const CopiesBackend& backend,
                const FockConfig& cfg) {
  if (sigma.size() != static_cast<int>(word.size())) throw InvalidArgument("partition and word differ in length");
  validate_word(word, backend, cfg);
  std::vector<Element> coeffs;
  coeffs.reserve(word.size());
  for (const auto& l : word) coeffs.push_back(l.coeff);
  WickWord w;
  w.sigma = sigma;
  w.letters = word;
  w.f = QPoly::monomial(pair_inner(sigma, word, cfg), static_cast<unsigned>(wick_crossing_number(sigma)));
  w.F = reduced_coefficient(sigma, coeffs, backend);
  return w;
}

WickWord adjoint(const WickWord& w, const CopiesBackend& backend, const FockConfig& cfg) {
  return reduce(w.sigma.reversed(), adjoint_letters(w.letters, backend), backend, cfg);
}

QPoly wick_inner_product(const WickWord& w1, const WickWord& w2, const CopiesBackend& backend,
                         const FockConfig& cfg) {
  const int k = w1.degree();
  if (k != w2.degree()) return QPoly();
  backend.require_window(k, "window < k");
  const auto h1 = w1.singleton_vectors();
  const auto h2 = w2.singleton_vectors();
  const QPoly scale = w1.f * w2.f;
  if (scale.is_zero()) return QPoly();
  QPoly acc;
  for (const auto& gamma : all_permutations(k)) {
    Rational weight(1);
    for (int i = 0; i < k && sgn(weight) != 0; ++i) weight *= cfg.inner_product(h1[i], h2[gamma[i]]);
    if (sgn(weight) == 0) continue;
    std::vector<int> images(static_cast<std::size_t>(backend.window()));
    for (int c = 1; c <= backend.window(); ++c) images[c - 1] = c;
    for (int i = 0; i < k; ++i) images[gamma[i]] = i + 1;
    const Rational t = backend.inner(w1.F, backend.relabel(images, w2.F));
    if (sgn(t) == 0) continue;
    acc += QPoly::monomial(weight * t, static_cast<unsigned>(inversions(gamma)));
  }
  return acc * scale;
}

QPoly wick_trace(const Partition12& sigma, const GeneratorWord& word, const CopiesBackend& backend,
                 const FockConfig& cfg) {
  if (sigma.size() != static_cast<int>(word.size())) throw InvalidArgument("partition and word differ in length");
  if (!sigma.is_pair_partition()) return QPoly();
  return pair_term(sigma, word, canonical_copies(sigma), backend, cfg);
}

std::vector<ConvolutionTerm> convolution_expand(const WickWord& w1, const WickWord& w2, const Limits& limits) {
  GeneratorWord letters = w1.letters;
  letters.insert(letters.end(), w2.letters.begin(), w2.letters.end());
  std::vector<ConvolutionTerm> out;
  for (auto& gamma : convolution_joins(w1.sigma, w2.sigma, limits)) out.push_back({std::move(gamma), letters});
  return out;
}

QPoly wick_trace_pairing(const WickWord& w1, const WickWord& w2, const CopiesBackend& backend, const FockConfig& cfg,
                         const Limits& limits) {
  WickWord left;
  left.sigma = w2.sigma.reversed();
  left.letters = adjoint_letters(w2.letters, backend);
  QPoly acc;
  for (const auto& term : convolution_expand(left, w1, limits)) {
    if (term.gamma.is_pair_partition()) acc += wick_trace(term.gamma, term.letters, backend, cfg);
  }
  return acc;
}

}  // namespace qgauss
