#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgauss/copies.hpp"
#include "qgauss/errors.hpp"

using namespace qgauss;

TEST_CASE("copy sets") {
  CHECK(copy_range(1, 3) == 0b111);
  CHECK(copy_range(2, 1) == 0);
  CHECK(copy_bit(2) == 0b10);
}

TEST_CASE("permutation backend: copies conjugate by (1 j)") {
  const PermGroupBackend perm(1, 4);
  const Element u = perm.transposition(0, 1);
  CHECK(perm.pi(1, u) == u);
  CHECK(perm.pi(3, u) == perm.transposition(0, 3));
  CHECK(perm.pi(2, perm.transposition(-1, 0)) == perm.transposition(-1, 0));
  CHECK(perm.trace(perm.multiply(u, u)) == 1);
  CHECK(perm.trace(u) == 0);
  CHECK(perm.in_A(u));
  CHECK_FALSE(perm.in_A(perm.transposition(0, 2)));
  CHECK(perm.b_basis().size() == 2);
  CHECK(perm.parse_basis("(0 1)") == u);
  CHECK(perm.parse_basis("1") == perm.unit());
  // E_{A_{2}} keeps only permutations of [-1, 0] union {2}.
  CHECK(perm.expect(copy_bit(2), perm.transposition(0, 2)) == perm.transposition(0, 2));
  CHECK(perm.expect(copy_bit(2), u).is_zero());
  CHECK(perm.expect(0, perm.transposition(-1, 0)) == perm.transposition(-1, 0));
}

TEST_CASE("free Haar backend: letters and reduced words") {
  const FreeHaarBackend fh(3);
  const Element u1 = fh.word({1});
  CHECK(fh.pi(2, u1) == fh.word({2}));
  CHECK(fh.multiply(u1, fh.word({-1})) == fh.unit());
  CHECK(fh.trace(fh.word({1, 2, -2, -1})) == 1);
  CHECK(fh.trace(fh.word({1, 2})) == 0);
  CHECK(fh.expect(copy_bit(1), fh.word({1, 2})).is_zero());
  CHECK(fh.expect(copy_range(1, 2), fh.word({1, 2})) == fh.word({1, 2}));
  CHECK(fh.star(fh.word({1, 2})) == fh.word({-2, -1}));
  CHECK(fh.parse_basis("u1 u2^-1") == fh.word({1, -2}));
  CHECK(fh.generators().size() == 3);
}

TEST_CASE("tensor backend: trace-out of the slots outside I") {
  const auto z2 = FiniteTracialAlgebra::group_algebra(cyclic_group(2));
  const TensorBackend t(FiniteTracialAlgebra::scalars(), z2, 3);
  const int u = 1 - z2.unit_index();
  const Element a = t.a_basis_element(0, u);
  CHECK(t.in_A(a));
  const Element a2 = t.pi(2, a);
  CHECK(t.in_copies(a2, copy_bit(2)));
  CHECK(t.expect(copy_bit(1), t.multiply(a, a2)).is_zero());
  CHECK(t.expect(copy_range(1, 2), t.multiply(a, a2)) == t.multiply(a, a2));
  CHECK(t.multiply(a, a) == t.unit());
}

TEST_CASE("relabeling moves copies") {
  const PermGroupBackend perm(0, 3);
  const Element x = perm.transposition(0, 1);
  CHECK(perm.relabel({3, 2, 1}, x) == perm.transposition(0, 3));
  CHECK(perm.relabel({1, 2, 3}, x) == x);
}

TEST_CASE("window requirement names the precondition") {
  const FreeHaarBackend fh(2);
  CHECK_NOTHROW(fh.require_window(2, "window < k"));
  try {
    fh.require_window(3, "window < k");
    FAIL("expected WindowExceeded");
  } catch (const WindowExceeded& e) {
    CHECK(std::string(e.what()).find("window < k (window 2, needed 3)") != std::string::npos);
  }
  CHECK_THROWS_AS(fh.pi(3, fh.word({1})), WindowExceeded);
}

TEST_CASE("generators must lie in A") {
  PermGroupBackend perm(1, 3);
  CHECK_THROWS_AS(perm.set_generators({perm.unit(), perm.transposition(0, 2)}), InvalidArgument);
  CHECK_NOTHROW(perm.set_generators({perm.unit(), perm.transposition(-1, 1)}));
}

TEST_CASE("axioms hold on the shipped backends") {
  const auto z2 = FiniteTracialAlgebra::group_algebra(cyclic_group(2));
  CHECK(axiom_check(TensorBackend(z2, z2, 3)).all_passed());
  CHECK(axiom_check(PermGroupBackend(1, 3)).all_passed());
  CHECK(axiom_check(PermGroupBackend(0, 3)).all_passed());
  CHECK(axiom_check(FreeHaarBackend(3)).all_passed());
}

TEST_CASE("the broken control fails the first axiom with a witness") {
  const AxiomReport r = axiom_check(BrokenPermBackend(1, 3));
  CHECK_FALSE(r.all_passed());
  bool found = false;
  for (const auto& a : r.results) {
    if (a.axiom != 1) continue;
    found = true;
    CHECK_FALSE(a.passed);
    CHECK_FALSE(a.witness.empty());
  }
  CHECK(found);
}
