#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qgauss/rational.hpp"

namespace qgauss {

// Sparse rational combination of basis indices, sorted by index with no zero entries.
class AlgebraElement {
 public:
  using Term = std::pair<int, Rational>;

  AlgebraElement() = default;
  explicit AlgebraElement(std::vector<Term> terms);
  static AlgebraElement basis(int i, const Rational& c = Rational(1));

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(int i) const;

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const Rational& c);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const Rational& c, AlgebraElement a) { return a *= c; }
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) { return a.terms_ == b.terms_; }

 private:
  std::vector<Term> terms_;
};

// Multiplication law of a finite group on {0..order-1}.
class GroupLaw {
 public:
  virtual ~GroupLaw() = default;
  virtual int order() const = 0;
  virtual int identity() const = 0;
  virtual int mul(int a, int b) const = 0;
  virtual int inv(int a) const = 0;
  virtual std::string label(int a) const = 0;
};

// Explicit multiplication table; validated on construction (InvalidGroup on failure).
std::shared_ptr<const GroupLaw> cayley_group(std::vector<std::vector<int>> table,
                                             std::vector<std::string> labels = {});
std::shared_ptr<const GroupLaw> cyclic_group(int n);
// Permutations of {0..n-1} indexed by Lehmer rank; products are computed on demand,
// so no Cayley table is stored. (gh)(x) = g(h(x)).
std::shared_ptr<const GroupLaw> symmetric_group(int n, int label_offset = 1);
std::shared_ptr<const GroupLaw> direct_product(std::shared_ptr<const GroupLaw> a, std::shared_ptr<const GroupLaw> b);

// Lehmer rank of a permutation of {0..n-1} and its inverse map.
long permutation_rank(const std::vector<int>& perm);
std::vector<int> permutation_unrank(long rank, int n);

// Finite-dimensional *-algebra with a faithful normalized trace, given on a basis.
// Products come either from a sparse structure table or from a group law.
class FiniteTracialAlgebra {
 public:
  // table[i * dim + j] is the product of basis i and basis j.
  static FiniteTracialAlgebra from_structure(std::vector<std::string> labels, std::vector<AlgebraElement> table,
                                             std::vector<AlgebraElement> involution, std::vector<Rational> trace,
                                             int unit);
  static FiniteTracialAlgebra group_algebra(std::shared_ptr<const GroupLaw> group);
  static FiniteTracialAlgebra scalars();

  int dim() const { return dim_; }
  int unit_index() const { return unit_; }
  const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
  int index_of(const std::string& label) const;  // -1 if absent
  bool is_group_algebra() const { return group_ != nullptr; }
  const GroupLaw* group() const { return group_.get(); }
  const std::shared_ptr<const GroupLaw>& group_ptr() const { return group_; }

  AlgebraElement unit() const { return AlgebraElement::basis(unit_); }
  AlgebraElement basis_product(int i, int j) const;
  AlgebraElement basis_star(int i) const;
  const Rational& basis_trace(int i) const { return trace_[static_cast<std::size_t>(i)]; }
  // tau(b_j* b_i)
  Rational basis_inner(int i, int j) const;

  AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) const;
  AlgebraElement star(const AlgebraElement& x) const;
  Rational trace(const AlgebraElement& x) const;
  // tau(y* x)
  Rational inner(const AlgebraElement& x, const AlgebraElement& y) const;

  // Exhaustive below the stated sizes, deterministic samples above them.
  // Throws InvalidAlgebra with a witness on the first violation.
  void validate() const;

 private:
  int dim_ = 0;
  int unit_ = 0;
  std::vector<std::string> labels_;
  std::vector<Rational> trace_;
  std::vector<AlgebraElement> involution_;
  std::vector<AlgebraElement> table_;
  std::shared_ptr<const GroupLaw> group_;
};

FiniteTracialAlgebra tensor_algebra(const FiniteTracialAlgebra& a, const FiniteTracialAlgebra& b);

// Basis index of x (x) y inside tensor_algebra(a, b).
inline int tensor_index(const FiniteTracialAlgebra& b, int i, int j) { return i * b.dim() + j; }

// A *-subalgebra spanned by a subset of basis elements containing the unit.
class SubalgebraSpec {
 public:
  // Verifies unit membership and closure under product and adjoint.
  static SubalgebraSpec explicit_basis(const FiniteTracialAlgebra& alg, std::vector<int> indices);
  // Smallest basis subset containing the unit and the generators that is closed under
  // product supports and adjoints.
  static SubalgebraSpec generated(const FiniteTracialAlgebra& alg, const std::vector<int>& generators);

  const std::vector<int>& indices() const { return indices_; }
  bool contains(int i) const;
  std::size_t size() const { return indices_.size(); }

 private:
  std::vector<int> indices_;
  std::vector<bool> member_;
};

// tau-orthogonal projection onto span(sub), by an exact Gram solve restricted to the
// connected block of the Gram graph reached from the support of the right-hand side.
AlgebraElement conditional_expectation(const FiniteTracialAlgebra& alg, const AlgebraElement& x,
                                       const SubalgebraSpec& sub);

// Group algebras only: keeps the coefficients on subgroup elements.
AlgebraElement subgroup_expectation(const FiniteTracialAlgebra& alg, const AlgebraElement& x,
                                    const SubalgebraSpec& sub);

}  // namespace qgauss
