#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "qgauss/algebra.hpp"
#include "qgauss/errors.hpp"

using namespace qgauss;

TEST_CASE("cyclic group algebra Z2") {
  const auto z2 = FiniteTracialAlgebra::group_algebra(cyclic_group(2));
  CHECK(z2.dim() == 2);
  const int u = 1 - z2.unit_index();
  CHECK(z2.basis_trace(u) == 0);
  CHECK(z2.multiply(AlgebraElement::basis(u), AlgebraElement::basis(u)) == z2.unit());
  z2.validate();
}

TEST_CASE("symmetric group algebra S3") {
  const auto s3 = FiniteTracialAlgebra::group_algebra(symmetric_group(3));
  CHECK(s3.dim() == 6);
  const int t = static_cast<int>(permutation_rank({1, 0, 2}));
  const auto x = AlgebraElement::basis(t);
  CHECK(s3.trace(s3.multiply(x, x)) == 1);
  CHECK(s3.trace(x) == 0);
  s3.validate();
}

TEST_CASE("permutation ranks round trip") {
  for (long r = 0; r < 120; ++r) CHECK(permutation_rank(permutation_unrank(r, 5)) == r);
  CHECK(permutation_rank({0, 1, 2, 3}) == 0);
}

TEST_CASE("invalid group tables are rejected") {
  CHECK_THROWS_AS(cayley_group({{0, 1}, {1, 1}}), InvalidGroup);
  CHECK_THROWS_AS(cayley_group({{0, 1}, {0, 1}}), InvalidGroup);
  CHECK_NOTHROW(cayley_group({{0, 1}, {1, 0}}, {"e", "a"}));
}

TEST_CASE("inconsistent structure data is rejected") {
  // Basis {1, p} with p^2 = p: the commutative algebra C (+) C.
  const std::vector<std::string> labels{"1", "p"};
  const auto one = AlgebraElement::basis(0);
  const auto p = AlgebraElement::basis(1);
  const std::vector<AlgebraElement> table{one, p, p, p};
  const std::vector<AlgebraElement> inv{one, p};
  CHECK_NOTHROW(FiniteTracialAlgebra::from_structure(labels, table, inv, {Rational(1), Rational(1, 2)}, 0).validate());
  CHECK_THROWS_AS(FiniteTracialAlgebra::from_structure(labels, table, inv, {Rational(2), Rational(1, 2)}, 0).validate(),
                  InvalidAlgebra);
  const std::vector<AlgebraElement> bad_unit{one, one, p, p};
  CHECK_THROWS_AS(FiniteTracialAlgebra::from_structure(labels, bad_unit, inv, {Rational(1), Rational(1, 2)}, 0).validate(),
                  InvalidAlgebra);
  CHECK_THROWS_AS(FiniteTracialAlgebra::from_structure(labels, table, inv, {Rational(1), Rational(1, 2)}, 5),
                  InvalidAlgebra);
}

TEST_CASE("tensor products") {
  const auto z2 = FiniteTracialAlgebra::group_algebra(cyclic_group(2));
  const auto t = tensor_algebra(z2, z2);
  CHECK(t.dim() == 4);
  const int u = 1 - z2.unit_index();
  CHECK(t.basis_trace(tensor_index(z2, u, u)) == 0);
  CHECK(t.basis_trace(tensor_index(z2, z2.unit_index(), z2.unit_index())) == 1);
  t.validate();
}

TEST_CASE("conditional expectations") {
  const auto s4 = FiniteTracialAlgebra::group_algebra(symmetric_group(4));
  const int a = static_cast<int>(permutation_rank({1, 0, 2, 3}));
  const int b = static_cast<int>(permutation_rank({0, 2, 1, 3}));
  const auto h = SubalgebraSpec::generated(s4, {a, b});
  CHECK(h.size() == 6);
  const auto in = AlgebraElement::basis(a, Rational(2, 3)) + AlgebraElement::basis(b);
  CHECK(conditional_expectation(s4, in, h) == in);
  const int outside = static_cast<int>(permutation_rank({3, 1, 2, 0}));
  CHECK(conditional_expectation(s4, AlgebraElement::basis(outside), h).is_zero());

  std::mt19937 rng(7);
  std::uniform_int_distribution<int> idx(0, 23);
  std::uniform_int_distribution<int> val(-5, 5);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<AlgebraElement::Term> terms;
    for (int k = 0; k < 6; ++k) terms.emplace_back(idx(rng), Rational(val(rng), 1 + trial % 4));
    std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    terms.erase(std::unique(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return x.first == y.first; }),
                terms.end());
    std::erase_if(terms, [](const auto& t) { return sgn(t.second) == 0; });
    const AlgebraElement x(terms);
    CHECK(conditional_expectation(s4, x, h) == subgroup_expectation(s4, x, h));
  }
}

TEST_CASE("trace-out on a tensor product") {
  const auto z2 = FiniteTracialAlgebra::group_algebra(cyclic_group(2));
  const auto z3 = FiniteTracialAlgebra::group_algebra(cyclic_group(3));
  const auto t = tensor_algebra(z2, z3);
  std::vector<int> first;
  for (int i = 0; i < z2.dim(); ++i) first.push_back(tensor_index(z3, i, z3.unit_index()));
  const auto sub = SubalgebraSpec::explicit_basis(t, first);
  const int u = 1 - z2.unit_index();
  const int v = (z3.unit_index() + 1) % 3;
  // E(u (x) (1 + v)) = u * tau(1 + v) = u.
  const auto x = AlgebraElement::basis(tensor_index(z3, u, z3.unit_index())) + AlgebraElement::basis(tensor_index(z3, u, v));
  CHECK(conditional_expectation(t, x, sub) == AlgebraElement::basis(tensor_index(z3, u, z3.unit_index())));
  CHECK_THROWS_AS(SubalgebraSpec::explicit_basis(t, {tensor_index(z3, u, v)}), InvalidArgument);
}
