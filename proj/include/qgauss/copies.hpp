#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qgauss/algebra.hpp"
#include "qgauss/element.hpp"
#include "qgauss/rational.hpp"

namespace qgauss {

// Set of copy indices; bit c-1 stands for copy c.
using CopySet = std::uint64_t;

inline CopySet copy_bit(int c) { return CopySet{1} << (c - 1); }
// Copies first..last inclusive; empty when last < first.
CopySet copy_range(int first, int last);
std::string copy_set_to_string(CopySet s);

// A realization of B subset A subset D with exchangeable copies pi_j : A -> D, explicit on a
// finite window of copies 1..window. Elements of A are carried as elements of D
// supported on copy 1, so pi_1 is the identity and pi_j is the relabeling by the
// transposition (1 j).
class CopiesBackend {
 public:
  explicit CopiesBackend(int window);
  virtual ~CopiesBackend() = default;

  virtual std::string kind() const = 0;
  int window() const { return window_; }

  virtual Element unit() const = 0;
  Element multiply(const Element& x, const Element& y) const;
  Element product(const std::vector<Element>& factors) const;
  Element star(const Element& x) const;
  Rational trace(const Element& x) const;
  // tau(y* x)
  Rational inner(const Element& x, const Element& y) const;

  // Conditional expectation onto A_I; the empty set gives E_B.
  Element expect(CopySet copies, const Element& x) const;
  // alpha_sigma for a permutation of the window: images[c-1] is the new index of copy c.
  Element relabel(const std::vector<int>& images, const Element& x) const;
  virtual Element pi(int j, const Element& a) const;

  bool in_copies(const Element& x, CopySet copies) const;
  bool in_A(const Element& x) const { return in_copies(x, copy_bit(1)); }

  // The self-adjoint generating set S of A, containing 1.
  const std::vector<Element>& generators() const { return generators_; }
  void set_generators(std::vector<Element> s);
  virtual std::vector<Element> b_basis() const = 0;

  virtual std::string label(const BasisKey& key) const = 0;
  std::string describe(const Element& x) const;
  // Parses one basis label in the backend's notation; "1" is always the unit.
  virtual Element parse_basis(const std::string& label) const = 0;

  void require_window(int needed, const std::string& what) const;

 protected:
  virtual Element basis_multiply(const BasisKey& a, const BasisKey& b) const = 0;
  virtual Element basis_star(const BasisKey& a) const = 0;
  virtual Rational basis_trace(const BasisKey& a) const = 0;
  virtual bool basis_in_copies(const BasisKey& a, CopySet copies) const = 0;
  // Default: kept when it lies in A_I, dropped otherwise (monomial backends).
  virtual Element basis_expect(CopySet copies, const BasisKey& a) const;
  virtual BasisKey basis_relabel(const std::vector<int>& images, const BasisKey& a) const = 0;

  int window_;
  std::vector<Element> generators_;
};

// D = B (x) C^{(x) window}; pi_j places the C factor in slot j and E_{A_I} traces out the
// slots outside I.
class TensorBackend : public CopiesBackend {
 public:
  TensorBackend(FiniteTracialAlgebra b, FiniteTracialAlgebra c, int window);

  std::string kind() const override { return "tensor"; }
  Element unit() const override;
  std::vector<Element> b_basis() const override;
  std::string label(const BasisKey& key) const override;
  Element parse_basis(const std::string& label) const override;

  const FiniteTracialAlgebra& b_algebra() const { return b_; }
  const FiniteTracialAlgebra& c_algebra() const { return c_; }
  Element a_basis_element(int b_index, int c_index) const;

 protected:
  Element basis_multiply(const BasisKey& a, const BasisKey& b) const override;
  Element basis_star(const BasisKey& a) const override;
  Rational basis_trace(const BasisKey& a) const override;
  bool basis_in_copies(const BasisKey& a, CopySet copies) const override;
  Element basis_expect(CopySet copies, const BasisKey& a) const override;
  BasisKey basis_relabel(const std::vector<int>& images, const BasisKey& a) const override;

 private:
  FiniteTracialAlgebra b_;
  FiniteTracialAlgebra c_;
};

// D = group algebra of the permutations of the points [-d, window]. B is generated by the
// permutations of [-d, 0], A by those of [-d, 1]; pi_j conjugates by (1 j), so
// pi_j(u_(0 1)) = u_(0 j). A_I is the group algebra of permutations of [-d, 0] union I.
class PermGroupBackend : public CopiesBackend {
 public:
  PermGroupBackend(int d, int window);

  std::string kind() const override { return "perm_group"; }
  int d() const { return d_; }
  int points() const { return d_ + window_ + 1; }
  Element unit() const override;
  std::vector<Element> b_basis() const override;
  std::string label(const BasisKey& key) const override;
  Element parse_basis(const std::string& label) const override;

  // u_g for a permutation given by images of the points -d..window (listed in that order).
  Element group_element(const std::vector<int>& images) const;
  Element transposition(int a, int b) const;

  // The same algebra as an explicit group algebra, for the generic oracle.
  FiniteTracialAlgebra as_group_algebra() const;
  AlgebraElement to_group_algebra(const Element& x) const;
  Element from_group_algebra(const AlgebraElement& x) const;
  // Basis indices (in as_group_algebra) of transpositions generating A_I.
  std::vector<int> subalgebra_generators(CopySet copies) const;

 protected:
  Element basis_multiply(const BasisKey& a, const BasisKey& b) const override;
  Element basis_star(const BasisKey& a) const override;
  Rational basis_trace(const BasisKey& a) const override;
  bool basis_in_copies(const BasisKey& a, CopySet copies) const override;
  BasisKey basis_relabel(const std::vector<int>& images, const BasisKey& a) const override;

 private:
  int d_;
};

// D = group algebra of the free group on letters 1..window, B = C, A = L(Z) on letter 1.
// tau(w) = 1 iff w reduces to the empty word; E_I keeps words whose letters lie in I.
class FreeHaarBackend : public CopiesBackend {
 public:
  explicit FreeHaarBackend(int window);

  std::string kind() const override { return "free_haar"; }
  Element unit() const override;
  std::vector<Element> b_basis() const override;
  std::string label(const BasisKey& key) const override;
  Element parse_basis(const std::string& label) const override;

  // Reduced word given as signed letters (+j for u_j, -j for its inverse).
  Element word(const std::vector<int>& letters) const;

 protected:
  Element basis_multiply(const BasisKey& a, const BasisKey& b) const override;
  Element basis_star(const BasisKey& a) const override;
  Rational basis_trace(const BasisKey& a) const override;
  bool basis_in_copies(const BasisKey& a, CopySet copies) const override;
  BasisKey basis_relabel(const std::vector<int>& images, const BasisKey& a) const override;
};

// Negative control: a permutation backend whose second copy map also moves B, so the
// first axiom must fail.
class BrokenPermBackend final : public PermGroupBackend {
 public:
  using PermGroupBackend::PermGroupBackend;
  std::string kind() const override { return "perm_group_broken"; }
  Element pi(int j, const Element& a) const override;
};

struct AxiomResult {
  int axiom = 0;
  bool checked = false;
  bool passed = false;
  std::size_t cases = 0;
  std::string witness;
  std::string note;
};

struct AxiomReport {
  std::string backend;
  int window = 0;
  std::vector<AxiomResult> results;
  bool all_passed() const;
};

struct AxiomBudget {
  int max_word_length = 4;      // exchangeability words
  int max_test_length = 3;      // words used in the bimodularity and intersection checks
  int index_universe = 3;       // I, J range over subsets of {1..index_universe}
};

// Axioms (1)-(4) by exhaustive enumeration at window scale; axiom (5) holds by
// construction on the explicit window and is recorded as such.
AxiomReport axiom_check(const CopiesBackend& backend, const AxiomBudget& budget = {});

}  // namespace qgauss
