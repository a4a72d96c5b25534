#include "qgauss/algebra.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>

#include "qgauss/errors.hpp"
#include "qgauss/linalg.hpp"

namespace qgauss {

// ---------------------------------------------------------------- AlgebraElement

AlgebraElement::AlgebraElement(std::vector<Term> terms) {
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

AlgebraElement AlgebraElement::basis(int i, const Rational& c) {
  AlgebraElement e;
  if (sgn(c) != 0) e.terms_.emplace_back(i, c);
  return e;
}

Rational AlgebraElement::coefficient(int i) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), i, [](const Term& t, int k) { return t.first < k; });
  return it != terms_.end() && it->first == i ? it->second : Rational(0);
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
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
      if (sgn(s) != 0) merged.emplace_back(terms_[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  AlgebraElement neg = o;
  neg *= Rational(-1);
  return *this += neg;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.second *= c;
  }
  return *this;
}

// ---------------------------------------------------------------- groups

namespace {

class CayleyGroup final : public GroupLaw {
 public:
  CayleyGroup(std::vector<std::vector<int>> table, std::vector<std::string> labels)
      : table_(std::move(table)), labels_(std::move(labels)) {
    const int n = static_cast<int>(table_.size());
    if (n == 0) throw InvalidGroup("empty Cayley table");
    for (const auto& row : table_) {
      if (static_cast<int>(row.size()) != n) throw InvalidGroup("Cayley table is not square");
      for (int v : row) {
        if (v < 0 || v >= n) throw InvalidGroup("Cayley table entry out of range");
      }
    }
    identity_ = -1;
    for (int e = 0; e < n && identity_ < 0; ++e) {
      bool ok = true;
      for (int a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
      if (ok) identity_ = e;
    }
    if (identity_ < 0) throw InvalidGroup("no two-sided identity");
    inverse_.assign(static_cast<std::size_t>(n), -1);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (table_[a][b] == identity_ && table_[b][a] == identity_) {
          inverse_[a] = b;
          break;
        }
      }
      if (inverse_[a] < 0) throw InvalidGroup("element " + std::to_string(a) + " has no inverse");
    }
    const auto check = [&](int a, int b, int c) {
      if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
        throw InvalidGroup("associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                           std::to_string(c) + ")");
      }
    };
    if (n <= 64) {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c) check(a, b, c);
    } else {
      std::mt19937_64 rng(0x5eedULL);
      std::uniform_int_distribution<int> pick(0, n - 1);
      for (int t = 0; t < 200000; ++t) check(pick(rng), pick(rng), pick(rng));
    }
    if (labels_.empty()) {
      for (int a = 0; a < n; ++a) labels_.push_back(a == identity_ ? "e" : "g" + std::to_string(a));
    }
    if (static_cast<int>(labels_.size()) != n) throw InvalidGroup("label count does not match the group order");
  }
  int order() const override { return static_cast<int>(table_.size()); }
  int identity() const override { return identity_; }
  int mul(int a, int b) const override { return table_[a][b]; }
  int inv(int a) const override { return inverse_[a]; }
  std::string label(int a) const override { return labels_[a]; }

 private:
  std::vector<std::vector<int>> table_;
  std::vector<std::string> labels_;
  std::vector<int> inverse_;
  int identity_ = 0;
};

class CyclicGroup final : public GroupLaw {
 public:
  explicit CyclicGroup(int n) : n_(n) {
    if (n <= 0) throw InvalidGroup("cyclic group order must be positive");
  }
  int order() const override { return n_; }
  int identity() const override { return 0; }
  int mul(int a, int b) const override { return (a + b) % n_; }
  int inv(int a) const override { return (n_ - a) % n_; }
  std::string label(int a) const override {
    if (a == 0) return "e";
    if (a == 1) return "g";
    return "g^" + std::to_string(a);
  }

 private:
  int n_;
};

long factorial(int n) {
  long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

class SymmetricGroup final : public GroupLaw {
 public:
  SymmetricGroup(int n, int offset) : n_(n), offset_(offset), order_(factorial(n)) {
    if (n <= 0 || n > 12) throw InvalidGroup("symmetric group degree must lie in 1..12");
    if (order_ <= 40320) {
      cache_.reserve(static_cast<std::size_t>(order_));
      for (long r = 0; r < order_; ++r) cache_.push_back(permutation_unrank(r, n_));
    }
  }
  int order() const override { return static_cast<int>(order_); }
  int identity() const override { return 0; }
  int mul(int a, int b) const override {
    const auto pa = perm(a);
    const auto pb = perm(b);
    std::vector<int> c(static_cast<std::size_t>(n_));
    for (int x = 0; x < n_; ++x) c[x] = pa[pb[x]];
    return static_cast<int>(permutation_rank(c));
  }
  int inv(int a) const override {
    const auto pa = perm(a);
    std::vector<int> c(static_cast<std::size_t>(n_));
    for (int x = 0; x < n_; ++x) c[pa[x]] = x;
    return static_cast<int>(permutation_rank(c));
  }
  std::string label(int a) const override {
    const auto p = perm(a);
    std::string out;
    std::vector<bool> seen(static_cast<std::size_t>(n_), false);
    for (int x = 0; x < n_; ++x) {
      if (seen[x] || p[x] == x) continue;
      out += "(";
      int y = x;
      bool first = true;
      while (!seen[y]) {
        seen[y] = true;
        if (!first) out += " ";
        first = false;
        out += std::to_string(y + offset_);
        y = p[y];
      }
      out += ")";
    }
    return out.empty() ? "e" : out;
  }

 private:
  std::vector<int> perm(int a) const {
    if (!cache_.empty()) return cache_[static_cast<std::size_t>(a)];
    return permutation_unrank(a, n_);
  }
  int n_;
  int offset_;
  long order_;
  std::vector<std::vector<int>> cache_;
};

class DirectProduct final : public GroupLaw {
 public:
  DirectProduct(std::shared_ptr<const GroupLaw> a, std::shared_ptr<const GroupLaw> b)
      : a_(std::move(a)), b_(std::move(b)) {}
  int order() const override { return a_->order() * b_->order(); }
  int identity() const override { return a_->identity() * b_->order() + b_->identity(); }
  int mul(int x, int y) const override {
    const int n = b_->order();
    return a_->mul(x / n, y / n) * n + b_->mul(x % n, y % n);
  }
  int inv(int x) const override {
    const int n = b_->order();
    return a_->inv(x / n) * n + b_->inv(x % n);
  }
  std::string label(int x) const override {
    const int n = b_->order();
    return "(" + a_->label(x / n) + "," + b_->label(x % n) + ")";
  }

 private:
  std::shared_ptr<const GroupLaw> a_;
  std::shared_ptr<const GroupLaw> b_;
};

}  // namespace

long permutation_rank(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  long rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j) {
      if (perm[j] < perm[i]) ++smaller;
    }
    rank = rank * (n - i) + smaller;
  }
  return rank;
}

std::vector<int> permutation_unrank(long rank, int n) {
  std::vector<int> digits(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    const int base = n - i;
    digits[i] = static_cast<int>(rank % base);
    rank /= base;
  }
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pool[i] = i;
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    out[i] = pool[digits[i]];
    pool.erase(pool.begin() + digits[i]);
  }
  return out;
}

std::shared_ptr<const GroupLaw> cayley_group(std::vector<std::vector<int>> table, std::vector<std::string> labels) {
  return std::make_shared<CayleyGroup>(std::move(table), std::move(labels));
}
std::shared_ptr<const GroupLaw> cyclic_group(int n) { return std::make_shared<CyclicGroup>(n); }
std::shared_ptr<const GroupLaw> symmetric_group(int n, int label_offset) {
  return std::make_shared<SymmetricGroup>(n, label_offset);
}
std::shared_ptr<const GroupLaw> direct_product(std::shared_ptr<const GroupLaw> a, std::shared_ptr<const GroupLaw> b) {
  return std::make_shared<DirectProduct>(std::move(a), std::move(b));
}

// ---------------------------------------------------------------- FiniteTracialAlgebra

FiniteTracialAlgebra FiniteTracialAlgebra::from_structure(std::vector<std::string> labels,
                                                          std::vector<AlgebraElement> table,
                                                          std::vector<AlgebraElement> involution,
                                                          std::vector<Rational> trace, int unit) {
  FiniteTracialAlgebra a;
  a.dim_ = static_cast<int>(labels.size());
  const auto d = static_cast<std::size_t>(a.dim_);
  if (a.dim_ == 0) throw InvalidAlgebra("empty basis");
  if (table.size() != d * d || involution.size() != d || trace.size() != d) {
    throw InvalidAlgebra("structure data does not match the basis size");
  }
  if (unit < 0 || unit >= a.dim_) throw InvalidAlgebra("unit index out of range");
  for (const auto& e : table)
    for (const auto& [i, c] : e.terms())
      if (i < 0 || i >= a.dim_) throw InvalidAlgebra("structure constant index out of range");
  a.labels_ = std::move(labels);
  a.table_ = std::move(table);
  a.involution_ = std::move(involution);
  a.trace_ = std::move(trace);
  a.unit_ = unit;
  a.validate();
  return a;
}

FiniteTracialAlgebra FiniteTracialAlgebra::group_algebra(std::shared_ptr<const GroupLaw> group) {
  FiniteTracialAlgebra a;
  a.dim_ = group->order();
  a.unit_ = group->identity();
  a.labels_.reserve(static_cast<std::size_t>(a.dim_));
  a.trace_.assign(static_cast<std::size_t>(a.dim_), Rational(0));
  a.trace_[static_cast<std::size_t>(a.unit_)] = 1;
  for (int g = 0; g < a.dim_; ++g) a.labels_.push_back(group->label(g));
  a.group_ = std::move(group);
  return a;
}

FiniteTracialAlgebra FiniteTracialAlgebra::scalars() { return group_algebra(cyclic_group(1)); }

int FiniteTracialAlgebra::index_of(const std::string& label) const {
  for (int i = 0; i < dim_; ++i) {
    if (labels_[i] == label) return i;
  }
  return -1;
}

AlgebraElement FiniteTracialAlgebra::basis_product(int i, int j) const {
  if (group_) return AlgebraElement::basis(group_->mul(i, j));
  return table_[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(j)];
}

AlgebraElement FiniteTracialAlgebra::basis_star(int i) const {
  if (group_) return AlgebraElement::basis(group_->inv(i));
  return involution_[static_cast<std::size_t>(i)];
}

AlgebraElement FiniteTracialAlgebra::multiply(const AlgebraElement& x, const AlgebraElement& y) const {
  std::vector<AlgebraElement::Term> acc;
  for (const auto& [i, a] : x.terms()) {
    for (const auto& [j, b] : y.terms()) {
      Rational ab = a * b;
      for (const auto prod = basis_product(i, j); const auto& [k, c] : prod.terms()) acc.emplace_back(k, ab * c);
    }
  }
  return AlgebraElement(std::move(acc));
}

AlgebraElement FiniteTracialAlgebra::star(const AlgebraElement& x) const {
  std::vector<AlgebraElement::Term> acc;
  // Coefficients are real, so conjugation acts only on the basis.
  for (const auto& [i, a] : x.terms())
    for (const auto adj = basis_star(i); const auto& [k, c] : adj.terms()) acc.emplace_back(k, a * c);
  return AlgebraElement(std::move(acc));
}

Rational FiniteTracialAlgebra::trace(const AlgebraElement& x) const {
  Rational t(0);
  for (const auto& [i, a] : x.terms()) {
    const Rational& ti = trace_[static_cast<std::size_t>(i)];
    if (sgn(ti) != 0) t += a * ti;
  }
  return t;
}

Rational FiniteTracialAlgebra::basis_inner(int i, int j) const {
  if (group_) return Rational(i == j ? 1 : 0);
  Rational t(0);
  for (const auto adj = basis_star(j); const auto& [js, c] : adj.terms())
    for (const auto prod = basis_product(js, i); const auto& [k, d] : prod.terms()) {
      const Rational& tk = trace_[static_cast<std::size_t>(k)];
      if (sgn(tk) != 0) t += c * d * tk;
    }
  return t;
}

Rational FiniteTracialAlgebra::inner(const AlgebraElement& x, const AlgebraElement& y) const {
  return trace(multiply(star(y), x));
}

void FiniteTracialAlgebra::validate() const {
  const auto fail = [](const std::string& what) { throw InvalidAlgebra(what); };
  if (trace_[static_cast<std::size_t>(unit_)] != 1) fail("trace of the unit is not 1");
  for (int i = 0; i < dim_; ++i) {
    const auto b = AlgebraElement::basis(i);
    if (basis_product(unit_, i) != b || basis_product(i, unit_) != b) {
      fail("unit does not act trivially on basis element " + labels_[i]);
    }
    if (star(basis_star(i)) != b) fail("involution is not involutive at " + labels_[i]);
    if (trace(basis_star(i)) != trace_[i]) fail("trace is not real at " + labels_[i]);
  }
  std::mt19937_64 rng(0xa16eb7aULL);
  std::uniform_int_distribution<int> pick(0, dim_ - 1);
  const auto assoc = [&](int i, int j, int k) {
    const auto bi = AlgebraElement::basis(i);
    const auto bj = AlgebraElement::basis(j);
    const auto bk = AlgebraElement::basis(k);
    if (multiply(multiply(bi, bj), bk) != multiply(bi, multiply(bj, bk))) {
      fail("associativity fails at (" + labels_[i] + "," + labels_[j] + "," + labels_[k] + ")");
    }
  };
  const auto pairwise = [&](int i, int j) {
    const auto bi = AlgebraElement::basis(i);
    const auto bj = AlgebraElement::basis(j);
    if (trace(multiply(bi, bj)) != trace(multiply(bj, bi))) {
      fail("trace is not tracial at (" + labels_[i] + "," + labels_[j] + ")");
    }
    if (star(multiply(bi, bj)) != multiply(star(bj), star(bi))) {
      fail("involution is not anti-multiplicative at (" + labels_[i] + "," + labels_[j] + ")");
    }
  };
  if (dim_ <= 24) {
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j)
        for (int k = 0; k < dim_; ++k) assoc(i, j, k);
  } else {
    for (int t = 0; t < 4000; ++t) assoc(pick(rng), pick(rng), pick(rng));
  }
  if (dim_ <= 200) {
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) pairwise(i, j);
  } else {
    for (int t = 0; t < 20000; ++t) pairwise(pick(rng), pick(rng));
  }
  // Faithfulness on random small elements: tau(x* x) > 0 for x != 0.
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int t = 0; t < 64; ++t) {
    std::vector<AlgebraElement::Term> terms;
    for (int r = 0; r < std::min(dim_, 6); ++r) terms.emplace_back(pick(rng), Rational(coeff(rng)));
    AlgebraElement x(std::move(terms));
    if (x.is_zero()) continue;
    if (sgn(inner(x, x)) <= 0) fail("trace is not faithful and positive on a sampled element");
  }
}

FiniteTracialAlgebra tensor_algebra(const FiniteTracialAlgebra& a, const FiniteTracialAlgebra& b) {
  if (a.is_group_algebra() && b.is_group_algebra()) {
    return FiniteTracialAlgebra::group_algebra(direct_product(a.group_ptr(), b.group_ptr()));
  }
  const int da = a.dim();
  const int db = b.dim();
  const long dim = static_cast<long>(da) * db;
  if (dim > 256) throw SizeGuard("tensor product dimension exceeds 256");
  std::vector<std::string> labels;
  std::vector<AlgebraElement> table;
  std::vector<AlgebraElement> involution;
  std::vector<Rational> trace;
  const auto join = [&](const AlgebraElement& x, const AlgebraElement& y) {
    std::vector<AlgebraElement::Term> acc;
    for (const auto& [i, c] : x.terms())
      for (const auto& [j, d] : y.terms()) acc.emplace_back(tensor_index(b, i, j), c * d);
    return AlgebraElement(std::move(acc));
  };
  for (int i = 0; i < da; ++i) {
    for (int j = 0; j < db; ++j) {
      labels.push_back("(" + a.label(i) + "," + b.label(j) + ")");
      involution.push_back(join(a.basis_star(i), b.basis_star(j)));
      trace.push_back(a.basis_trace(i) * b.basis_trace(j));
    }
  }
  for (int x = 0; x < dim; ++x) {
    for (int y = 0; y < dim; ++y) {
      table.push_back(join(a.basis_product(x / db, y / db), b.basis_product(x % db, y % db)));
    }
  }
  return FiniteTracialAlgebra::from_structure(std::move(labels), std::move(table), std::move(involution),
                                              std::move(trace), tensor_index(b, a.unit_index(), b.unit_index()));
}

// ---------------------------------------------------------------- subalgebras

bool SubalgebraSpec::contains(int i) const {
  return i >= 0 && static_cast<std::size_t>(i) < member_.size() && member_[static_cast<std::size_t>(i)];
}

SubalgebraSpec SubalgebraSpec::explicit_basis(const FiniteTracialAlgebra& alg, std::vector<int> indices) {
  SubalgebraSpec s;
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  s.member_.assign(static_cast<std::size_t>(alg.dim()), false);
  for (int i : indices) {
    if (i < 0 || i >= alg.dim()) throw InvalidArgument("subalgebra index out of range");
    s.member_[i] = true;
  }
  s.indices_ = std::move(indices);
  if (!s.contains(alg.unit_index())) throw InvalidArgument("subalgebra must contain the unit");
  for (int i : s.indices_) {
    for (const auto adj = alg.basis_star(i); const auto& [k, c] : adj.terms())
      if (!s.contains(k)) throw InvalidArgument("subalgebra is not closed under the involution");
    for (int j : s.indices_)
      for (const auto prod = alg.basis_product(i, j); const auto& [k, c] : prod.terms())
        if (!s.contains(k)) {
          throw InvalidArgument("subalgebra is not closed under products: " + alg.label(i) + " * " + alg.label(j));
        }
  }
  return s;
}

SubalgebraSpec SubalgebraSpec::generated(const FiniteTracialAlgebra& alg, const std::vector<int>& generators) {
  std::vector<bool> member(static_cast<std::size_t>(alg.dim()), false);
  std::vector<int> found;
  std::deque<int> queue;
  const auto add = [&](int k) {
    if (!member[k]) {
      member[k] = true;
      found.push_back(k);
      queue.push_back(k);
    }
  };
  add(alg.unit_index());
  std::vector<int> gens;
  for (int g : generators) {
    if (g < 0 || g >= alg.dim()) throw InvalidArgument("generator index out of range");
    gens.push_back(g);
    for (const auto adj = alg.basis_star(g); const auto& [k, c] : adj.terms()) gens.push_back(k);
  }
  for (int g : gens) add(g);
  if (alg.is_group_algebra()) {
    // Finite group: closure under right multiplication by generators is the subgroup.
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      for (int g : gens) add(alg.group()->mul(x, g));
    }
  } else {
    bool grew = true;
    while (grew) {
      grew = false;
      const std::vector<int> snapshot = found;
      for (int i : snapshot) {
        for (const auto adj = alg.basis_star(i); const auto& [k, c] : adj.terms()) {
          if (!member[k]) grew = true;
          add(k);
        }
        for (int j : snapshot)
          for (const auto prod = alg.basis_product(i, j); const auto& [k, c] : prod.terms()) {
            if (!member[k]) grew = true;
            add(k);
          }
      }
    }
  }
  SubalgebraSpec s;
  std::sort(found.begin(), found.end());
  s.indices_ = std::move(found);
  s.member_ = std::move(member);
  return s;
}

AlgebraElement conditional_expectation(const FiniteTracialAlgebra& alg, const AlgebraElement& x,
                                       const SubalgebraSpec& sub) {
  const auto& idx = sub.indices();
  // Right-hand side r_i = tau(b_i* x).
  std::map<int, Rational> rhs;
  for (int i : idx) {
    Rational r(0);
    for (const auto& [k, c] : x.terms()) {
      Rational gi = alg.basis_inner(k, i);
      if (sgn(gi) != 0) r += c * gi;
    }
    if (sgn(r) != 0) rhs.emplace(i, std::move(r));
  }
  if (rhs.empty()) return {};
  const auto g = [&](int i, int j) { return alg.basis_inner(j, i); };
  std::set<int> block;
  std::deque<int> queue;
  for (const auto& [i, r] : rhs) {
    block.insert(i);
    queue.push_back(i);
  }
  while (!queue.empty()) {
    const int i = queue.front();
    queue.pop_front();
    for (int j : idx) {
      if (block.count(j) || sgn(g(i, j)) == 0) continue;
      block.insert(j);
      queue.push_back(j);
    }
  }
  const std::vector<int> nodes(block.begin(), block.end());
  RationalMatrix m(nodes.size(), nodes.size());
  std::vector<Rational> b(nodes.size());
  for (std::size_t a = 0; a < nodes.size(); ++a) {
    for (std::size_t c = 0; c < nodes.size(); ++c) m(a, c) = g(nodes[a], nodes[c]);
    auto it = rhs.find(nodes[a]);
    if (it != rhs.end()) b[a] = it->second;
  }
  const auto coeffs = solve(m, b);
  std::vector<AlgebraElement::Term> terms;
  for (std::size_t a = 0; a < nodes.size(); ++a) terms.emplace_back(nodes[a], coeffs[a]);
  return AlgebraElement(std::move(terms));
}

AlgebraElement subgroup_expectation(const FiniteTracialAlgebra& alg, const AlgebraElement& x,
                                    const SubalgebraSpec& sub) {
  if (!alg.is_group_algebra()) throw InvalidArgument("subgroup shortcut requires a group algebra");
  std::vector<AlgebraElement::Term> terms;
  for (const auto& t : x.terms()) {
    if (sub.contains(t.first)) terms.push_back(t);
  }
  return AlgebraElement(std::move(terms));
}

}  // namespace qgauss
