#include "qgauss/matmodel.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <random>
#include <thread>

#include "qgauss/errors.hpp"

namespace qgauss {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632BE59BD9B4E019ULL));
}

constexpr int kMaxIndices = 64;
constexpr int kDenseCap = 10;

void fill_epsilon(SignMatrix& eps, const RationalMatrix& q_matrix, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  for (int a = 0; a < eps.size(); ++a) {
    for (int b = a + 1; b < eps.size(); ++b) {
      const double q = to_double(q_matrix(a % eps.colors(), b % eps.colors()));
      const double p_plus = (1.0 + q) / 2.0;
      eps.set(a, b, uniform(rng) < p_plus ? 1 : -1);
    }
  }
}

void check_index_cap(int copies, int colors) {
  if (copies < 1) throw InvalidArgument("number of copies must be positive");
  if (copies * colors > kMaxIndices) {
    throw SizeGuard("copies x colors = " + std::to_string(copies * colors) + " exceeds the index cap " +
                    std::to_string(kMaxIndices));
  }
}

// Index tuples (copy per position) in which every (copy, color) index occurs an even
// number of times; other tuples have zero trace.
std::vector<std::vector<int>> even_tuples(const std::vector<int>& colors, int copies, int num_colors) {
  const int m = static_cast<int>(colors.size());
  std::vector<std::vector<int>> out;
  std::vector<int> tuple(static_cast<std::size_t>(m));
  std::vector<int> count(static_cast<std::size_t>(copies * num_colors), 0);
  int odd = 0;
  auto rec = [&](auto&& self, int i) -> void {
    if (odd > m - i) return;
    if (i == m) {
      out.push_back(tuple);
      return;
    }
    for (int j = 0; j < copies; ++j) {
      const int a = j * num_colors + colors[i];
      tuple[i] = j;
      odd += (count[a] % 2 == 0) ? 1 : -1;
      ++count[a];
      self(self, i + 1);
      --count[a];
      odd -= (count[a] % 2 == 0) ? 1 : -1;
    }
  };
  rec(rec, 0);
  return out;
}

int num_colors_of(const GeneratorWord& word, const RationalMatrix& q_matrix) {
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i].color < 0 || word[i].color >= static_cast<int>(q_matrix.rows())) {
      throw InvalidArgument("letter " + std::to_string(i + 1) + ": color outside the Q-matrix dimension " +
                            std::to_string(q_matrix.rows()));
    }
  }
  return static_cast<int>(q_matrix.rows());
}

std::vector<double> tuple_traces(const GeneratorWord& word, const std::vector<std::vector<int>>& tuples,
                                 const CopiesBackend* backend, int copies) {
  std::vector<double> out(tuples.size(), 1.0);
  if (backend == nullptr) return out;
  backend->require_window(copies, "window < n");
  for (std::size_t k = 0; k < tuples.size(); ++k) {
    Element acc = backend->unit();
    for (std::size_t i = 0; i < word.size(); ++i) acc = backend->multiply(acc, backend->pi(tuples[k][i] + 1, word[i].coeff));
    out[k] = to_double(backend->trace(acc));
  }
  return out;
}

}  // namespace

SignMatrix::SignMatrix(int copies, int colors)
    : copies_(copies), colors_(colors), data_(static_cast<std::size_t>(copies * colors * copies * colors), 1) {
  if (copies < 1 || colors < 1) throw InvalidArgument("sign matrix needs at least one copy and one color");
}

void SignMatrix::set(int a, int b, int value) {
  if (value != 1 && value != -1) throw InvalidArgument("sign matrix entries are +1 or -1");
  if (a == b) throw InvalidArgument("the diagonal of a sign matrix is fixed to +1");
  data_[static_cast<std::size_t>(a * size() + b)] = static_cast<std::int8_t>(value);
  data_[static_cast<std::size_t>(b * size() + a)] = static_cast<std::int8_t>(value);
}

SignMatrix SignMatrix::restricted(int n) const {
  if (n < 1 || n > size()) throw InvalidArgument("restriction size out of range");
  SignMatrix out(n, 1);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) out.set(a, b, (*this)(a, b));
  return out;
}

SignMatrix sample_epsilon(const RationalMatrix& q_matrix, int copies, std::uint64_t seed) {
  validate_q_matrix(q_matrix);
  const int colors = static_cast<int>(q_matrix.rows());
  check_index_cap(copies, colors);
  SignMatrix eps(copies, colors);
  std::mt19937_64 rng(stream_seed(seed, 0));
  fill_epsilon(eps, q_matrix, rng);
  return eps;
}

PauliWord PauliWord::operator*(const PauliWord& o) const {
  // (Z^z1 X^f1)(Z^z2 X^f2) = (-1)^{|f1 & z2|} Z^{z1 ^ z2} X^{f1 ^ f2}
  PauliWord r;
  r.sign = sign * o.sign * ((std::popcount(f & o.z) % 2) ? -1 : 1);
  r.z = z ^ o.z;
  r.f = f ^ o.f;
  return r;
}

SymmetryRep::SymmetryRep(const SignMatrix& eps) : n_(eps.size()) {
  if (n_ > kMaxIndices) throw SizeGuard("symmetry representation is limited to 64 indices");
  v_.resize(static_cast<std::size_t>(n_));
  for (int a = 0; a < n_; ++a) {
    PauliWord w;
    w.f = std::uint64_t{1} << a;
    for (int b = 0; b < a; ++b)
      if (eps(b, a) == -1) w.z |= std::uint64_t{1} << b;
    v_[static_cast<std::size_t>(a)] = w;
  }
}

std::vector<std::int8_t> SymmetryRep::dense(int a) const {
  if (n_ > kDenseCap) throw SizeGuard("dense symmetries are limited to n <= 10 (2^n <= 1024)");
  const std::size_t dim = std::size_t{1} << n_;
  std::vector<std::int8_t> m(dim * dim, 0);
  const PauliWord& w = v(a);
  // Column x maps to row x ^ f with sign (-1)^{|z & (x ^ f)|} * sign.
  for (std::size_t x = 0; x < dim; ++x) {
    const std::size_t y = x ^ w.f;
    const int s = w.sign * ((std::popcount(static_cast<std::uint64_t>(y) & w.z) % 2) ? -1 : 1);
    m[y * dim + x] = static_cast<std::int8_t>(s);
  }
  return m;
}

bool SymmetryRep::verify_dense(const SignMatrix& eps) const {
  const std::size_t dim = std::size_t{1} << n_;
  std::vector<std::vector<std::int8_t>> mats;
  for (int a = 0; a < n_; ++a) mats.push_back(dense(a));
  auto mul = [&](const std::vector<std::int8_t>& x, const std::vector<std::int8_t>& y) {
    std::vector<int> r(dim * dim, 0);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t k = 0; k < dim; ++k) {
        if (x[i * dim + k] == 0) continue;
        for (std::size_t j = 0; j < dim; ++j) r[i * dim + j] += x[i * dim + k] * y[k * dim + j];
      }
    return r;
  };
  for (int a = 0; a < n_; ++a) {
    const auto sq = mul(mats[a], mats[a]);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        if (sq[i * dim + j] != (i == j ? 1 : 0)) return false;
    for (int b = a + 1; b < n_; ++b) {
      const auto ab = mul(mats[a], mats[b]);
      const auto ba = mul(mats[b], mats[a]);
      for (std::size_t i = 0; i < dim * dim; ++i)
        if (ab[i] != eps(a, b) * ba[i]) return false;
    }
  }
  return true;
}

SymmetryRep build_symmetries(const SignMatrix& eps) { return SymmetryRep(eps); }

MCEstimate mc_moment(const GeneratorWord& word, const RationalMatrix& q_matrix, const FockConfig& cfg,
                     const MCOptions& options) {
  validate_q_matrix(q_matrix);
  const int colors = num_colors_of(word, q_matrix);
  check_index_cap(options.copies, colors);
  if (word.size() > 8) throw SizeGuard("matrix-model words are limited to length 8");
  if (options.samples < 2) throw InvalidArgument("at least two samples are needed for a standard error");
  for (const auto& l : word)
    if (static_cast<int>(l.vec.size()) != cfg.dim()) throw InvalidArgument("vector dimension differs from dim_H");

  const int n = options.copies;
  const int m = static_cast<int>(word.size());
  const int d = cfg.dim();
  std::vector<int> letter_colors;
  for (const auto& l : word) letter_colors.push_back(l.color);
  const auto tuples = even_tuples(letter_colors, n, colors);
  const auto traces = tuple_traces(word, tuples, options.backend, n);

  Eigen::MatrixXd gram(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) gram(i, j) = to_double(cfg.inner()(i, j));
  const Eigen::MatrixXd chol = Eigen::LLT<Eigen::MatrixXd>(gram).matrixL();
  std::vector<Eigen::VectorXd> hv;
  for (const auto& l : word) {
    Eigen::VectorXd v(d);
    for (int i = 0; i < d; ++i) v(i) = to_double(l.vec[i]);
    // g(h) = h^T L z for z standard normal has covariance h^T G h'.
    hv.push_back(chol.transpose() * v);
  }
  const double norm = std::pow(static_cast<double>(n), -0.5 * m);

  std::vector<double> values(options.samples);
  auto run = [&](std::size_t begin, std::size_t end) {
    SignMatrix eps(n, colors);
    std::vector<double> g(static_cast<std::size_t>(n * m));
    for (std::size_t s = begin; s < end; ++s) {
      std::mt19937_64 rng(stream_seed(options.seed, s));
      fill_epsilon(eps, q_matrix, rng);
      const SymmetryRep rep(eps);
      std::normal_distribution<double> normal(0.0, 1.0);
      Eigen::VectorXd z(d);
      for (int j = 0; j < n; ++j) {
        for (int i = 0; i < d; ++i) z(i) = normal(rng);
        for (int i = 0; i < m; ++i) g[static_cast<std::size_t>(j * m + i)] = hv[i].dot(z);
      }
      double acc = 0.0;
      for (std::size_t k = 0; k < tuples.size(); ++k) {
        PauliWord p;
        double w = traces[k];
        for (int i = 0; i < m; ++i) {
          const int j = tuples[k][i];
          p = p * rep.v(j * colors + letter_colors[i]);
          w *= g[static_cast<std::size_t>(j * m + i)];
        }
        acc += w * p.trace();
      }
      values[s] = acc * norm;
    }
  };
  const int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    run(0, options.samples);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (options.samples + jobs - 1) / jobs;
    for (int t = 0; t < jobs; ++t) {
      const std::size_t b = std::min(options.samples, chunk * t);
      const std::size_t e = std::min(options.samples, b + chunk);
      if (b < e) pool.emplace_back(run, b, e);
    }
    for (auto& th : pool) th.join();
  }

  MCEstimate est;
  est.samples = options.samples;
  est.n = n;
  est.seed = options.seed;
  double sum = 0.0;
  for (double v : values) sum += v;
  est.mean = sum / static_cast<double>(values.size());
  double ss = 0.0;
  for (double v : values) ss += (v - est.mean) * (v - est.mean);
  est.stderr_ = std::sqrt(ss / static_cast<double>(values.size() - 1) / static_cast<double>(values.size()));

  if (options.backend != nullptr) {
    est.target = to_double(q_matrix_moment(word, q_matrix, *options.backend, cfg));
  } else {
    const FreeHaarBackend pure(std::max(1, m / 2));
    GeneratorWord unit_word = word;
    for (auto& l : unit_word) l.coeff = pure.unit();
    est.target = to_double(q_matrix_moment(unit_word, q_matrix, pure, cfg));
  }
  if (est.stderr_ > 0) {
    est.z = (est.mean - est.target) / est.stderr_;
  } else {
    est.z = est.mean == est.target ? 0.0 : HUGE_VAL;
  }
  return est;
}

Rational matrix_model_expectation(const GeneratorWord& word, const RationalMatrix& q_matrix, const FockConfig& cfg,
                                  int copies, const CopiesBackend* backend) {
  validate_q_matrix(q_matrix);
  const int colors = num_colors_of(word, q_matrix);
  check_index_cap(copies, colors);
  const int m = static_cast<int>(word.size());
  if (m % 2 == 1) return Rational(0);
  if (backend != nullptr) backend->require_window(copies, "window < n");
  std::vector<int> letter_colors;
  for (const auto& l : word) letter_colors.push_back(l.color);

  Rational acc(0);
  for (const auto& tuple : even_tuples(letter_colors, copies, colors)) {
    // Gaussian part: independent across copies, Isserlis within a copy.
    Rational gauss(1);
    for (int j = 0; j < copies && sgn(gauss) != 0; ++j) {
      std::vector<int> pos;
      for (int i = 0; i < m; ++i)
        if (tuple[i] == j) pos.push_back(i);
      if (pos.empty()) continue;
      Rational part(0);
      for (const auto& p : enumerate_pair_partitions(static_cast<int>(pos.size()))) {
        Rational term(1);
        for (const auto& pr : p.pairs()) term *= cfg.inner_product(word[pos[pr.left]].vec, word[pos[pr.right]].vec);
        part += term;
      }
      gauss *= part;
    }
    if (sgn(gauss) == 0) continue;
    // Sign part: sorting the word with v_a v_b = eps_ab v_b v_a swaps each unordered pair
    // {a, b} as often as it is out of order; E eps = Q for distinct indices.
    std::map<std::pair<int, int>, int> swaps;
    for (int i = 0; i < m; ++i) {
      for (int k = i + 1; k < m; ++k) {
        const int a = tuple[i] * colors + letter_colors[i];
        const int b = tuple[k] * colors + letter_colors[k];
        if (a > b) ++swaps[{b, a}];
      }
    }
    Rational sign(1);
    for (const auto& [ab, count] : swaps)
      if (count % 2 == 1) sign *= q_matrix(ab.first % colors, ab.second % colors);
    if (sgn(sign) == 0) continue;
    Rational tau(1);
    if (backend != nullptr) {
      Element x = backend->unit();
      for (int i = 0; i < m; ++i) x = backend->multiply(x, backend->pi(tuple[i] + 1, word[i].coeff));
      tau = backend->trace(x);
    }
    acc += gauss * sign * tau;
  }
  Rational denom(1);
  for (int i = 0; i < m / 2; ++i) denom *= copies;
  return acc / denom;
}

}  // namespace qgauss
