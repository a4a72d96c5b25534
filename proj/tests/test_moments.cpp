#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgauss/errors.hpp"
#include "qgauss/moments.hpp"
#include "support.hpp"

using namespace qgauss;
using testing::coeff_word;
using testing::pure_word;
using testing::repeated_word;
using testing::skewed_inner;
using testing::unit_vector;

namespace {
QPoly poly(std::initializer_list<Rational> c) { return QPoly(std::vector<Rational>(c)); }
}  // namespace

TEST_CASE("pure moments") {
  const FreeHaarBackend fh(4);
  const FockConfig cfg = FockConfig::orthonormal(1, 4);
  CHECK(moment(repeated_word(fh, 2), fh, cfg) == QPoly(1));
  CHECK(moment(repeated_word(fh, 4), fh, cfg) == poly({2, 1}));
  CHECK(moment(repeated_word(fh, 3), fh, cfg).is_zero());
  CHECK(moment(repeated_word(fh, 0), fh, cfg) == QPoly(1));
  for (int m = 0; m <= 8; m += 2) CHECK(moment(repeated_word(fh, m), fh, cfg) == testing::jacobi_moment(m));
}

TEST_CASE("pure moments agree with the Fock-space oracle on mixed vectors") {
  const FreeHaarBackend fh(3);
  const FockConfig cfg(skewed_inner(3), 3);
  const auto pool = testing::vector_pool(3);
  for (std::size_t a = 0; a < pool.size(); ++a)
    for (std::size_t b = 0; b < pool.size(); ++b)
      for (std::size_t c = 0; c < pool.size(); ++c) {
        const std::vector<HVector> v{pool[a], pool[b], pool[c], pool[(a + b) % pool.size()]};
        CHECK(moment(pure_word(fh, v), fh, cfg) == vacuum_moment(v, cfg));
      }
}

TEST_CASE("moments with coefficients on the permutation backend") {
  const PermGroupBackend perm(1, 4);
  const FockConfig cfg = FockConfig::orthonormal(1, 4);
  const Element u = perm.transposition(0, 1);
  CHECK(moment(coeff_word({u, u}, HVector{1}), perm, cfg) == QPoly(1));
  // Pairings {12}{34} and {14}{23} give tau = 1; the crossing one gives tau((0 1)(0 2)(0 1)(0 2)) = 0.
  CHECK(moment(coeff_word({u, u, u, u}, HVector{1}), perm, cfg) == QPoly(2));
  const Element v = perm.transposition(-1, 0);
  // v lies in B, so every copy map fixes it and tau(v v) = 1.
  CHECK(moment(coeff_word({v, v}, HVector{1}), perm, cfg) == QPoly(1));
}

TEST_CASE("copy index assignments do not change pair terms") {
  const PermGroupBackend perm(1, 4);
  const FockConfig cfg(skewed_inner(2), 3);
  const Element u = perm.transposition(0, 1);
  const Element w = perm.transposition(-1, 1);
  const GeneratorWord word{{u, unit_vector(2, 0)}, {w, unit_vector(2, 1)}, {u, unit_vector(2, 1)}, {w, unit_vector(2, 0)}};
  const auto sigma = Partition12::from_blocks(4, {{0, 2}, {1, 3}});
  const QPoly ref = pair_term(sigma, word, canonical_copies(sigma), perm, cfg);
  CHECK(pair_term(sigma, word, {3, 2, 3, 2}, perm, cfg) == ref);
  CHECK(pair_term(sigma, word, {4, 1, 4, 1}, perm, cfg) == ref);
}

TEST_CASE("finite-n moments") {
  const FreeHaarBackend fh(8);
  const FockConfig cfg = FockConfig::orthonormal(1, 4);
  CHECK(finite_n_moment(repeated_word(fh, 2), fh, 1, cfg) == moment(repeated_word(fh, 2), fh, cfg));
  for (int n : {1, 2, 4, 8}) CHECK(finite_n_moment(repeated_word(fh, 3), fh, n, cfg).is_zero());
  // With x = 1 the finite-n generator is itself a q-gaussian of a unit vector.
  for (int n : {1, 2, 4, 8}) CHECK(finite_n_moment(repeated_word(fh, 4), fh, n, cfg) == poly({2, 1}));
}

TEST_CASE("finite-n moments with a nontrivial coefficient converge like 1/n") {
  const PermGroupBackend perm(1, 4);
  const FockConfig cfg = FockConfig::orthonormal(1, 4);
  const Element u = perm.transposition(0, 1);
  const auto word = coeff_word({u, u, u, u}, HVector{1});
  // Only the single-block pattern sees the crossing pairing with tau(u^4) = 1: 2 + q/n.
  for (int n : {1, 2, 4, 8}) CHECK(finite_n_moment(word, perm, n, cfg) == poly({2, Rational(1, n)}));
  CHECK_THROWS_AS(finite_n_moment(word, perm, 4, FockConfig::orthonormal(1, 1)), TruncationExceeded);
}

TEST_CASE("multi-parameter moments") {
  const FreeHaarBackend fh(4);
  const FockConfig cfg(skewed_inner(2), 4);
  const auto pool = testing::vector_pool(2);
  const GeneratorWord w = pure_word(fh, {pool[0], pool[2], pool[1], pool[0]});
  const QPoly p = moment(w, fh, cfg);
  for (const Rational& q0 : {Rational(-1, 2), Rational(0), Rational(3, 4)}) {
    RationalMatrix q(1, 1);
    q(0, 0) = q0;
    CHECK(q_matrix_moment(w, q, fh, cfg) == p.eval(q0));
  }
  // Colors (1,2,1,2): only the crossing pairing joins equal colors, weighted by Q_12.
  GeneratorWord colored = repeated_word(fh, 4);
  for (int i = 0; i < 4; ++i) colored[static_cast<std::size_t>(i)].color = i % 2;
  const auto q2 = RationalMatrix::from_rows({{Rational(1, 3), Rational(1, 2)}, {Rational(1, 2), Rational(-1, 5)}});
  CHECK(q_matrix_moment(colored, q2, fh, FockConfig::orthonormal(1, 4)) == Rational(1, 2));
  // A zero entry at every crossing leaves the non-crossing sum: Catalan numbers.
  RationalMatrix zero(1, 1);
  CHECK(q_matrix_moment(repeated_word(fh, 6), zero, fh, FockConfig::orthonormal(1, 4)) == 5);
  CHECK_THROWS_AS(validate_q_matrix(RationalMatrix::from_rows({{Rational(0), Rational(1)}, {Rational(0), Rational(0)}})),
                  InvalidArgument);
  CHECK_THROWS_AS(validate_q_matrix(RationalMatrix::from_rows({{Rational(2)}})), InvalidArgument);
}

TEST_CASE("reduced forms") {
  const PermGroupBackend perm(1, 4);
  const FockConfig cfg = FockConfig::orthonormal(1, 4);
  const Element u = perm.transposition(0, 1);
  const auto all_single = Partition12::from_blocks(3, {{0}, {1}, {2}});
  const WickWord w = reduce(all_single, coeff_word({u, u, u}, HVector{1}), perm, cfg);
  CHECK(w.f == QPoly(1));
  CHECK(w.F == perm.product({perm.pi(1, u), perm.pi(2, u), perm.pi(3, u)}));

  const FreeHaarBackend fh(2);
  const FockConfig cfg2(skewed_inner(2), 2);
  const WickWord pair = reduce(Partition12::from_blocks(2, {{0, 1}}), pure_word(fh, {unit_vector(2, 0), unit_vector(2, 1)}), fh, cfg2);
  CHECK(pair.f == QPoly(Rational(1, 2)));
  CHECK(pair.F == fh.unit());
  CHECK(pair.degree() == 0);

  // A pair enclosing two singletons picks up one crossing per enclosed singleton.
  const FockConfig one = FockConfig::orthonormal(1, 4);
  const FreeHaarBackend fh3(3);
  const WickWord nested = reduce(Partition12::from_blocks(4, {{0, 3}, {1}, {2}}), repeated_word(fh3, 4), fh3, one);
  CHECK(nested.f == QPoly::monomial(Rational(1), 2));
}

TEST_CASE("structural reduced coefficient agrees with the generic projection") {
  const PermGroupBackend perm(1, 4);
  const Element u = perm.transposition(0, 1);
  const Element c = perm.parse_basis("(-1 0 1)");
  const auto alg = perm.as_group_algebra();
  auto generic = [&](const Partition12& sigma, const std::vector<Element>& xs) {
    const auto phi = encoding_map(sigma);
    std::vector<Element> factors;
    for (std::size_t i = 0; i < xs.size(); ++i) factors.push_back(perm.pi(phi[i] + 1, xs[i]));
    const auto sub = SubalgebraSpec::generated(alg, perm.subalgebra_generators(copy_range(1, sigma.num_singletons())));
    return perm.from_group_algebra(conditional_expectation(alg, perm.to_group_algebra(perm.product(factors)), sub));
  };
  // (0 3)(0 1)(0 2)(0 3) moves 3, so the projection onto copies {1,2} vanishes.
  const auto sigma = Partition12::from_blocks(4, {{0, 3}, {1}, {2}});
  CHECK(reduced_coefficient(sigma, {u, u, u, u}, perm).is_zero());
  CHECK(generic(sigma, {u, u, u, u}).is_zero());
  std::size_t nonzero = 0;
  for (const auto& p : enumerate_pair_singleton(4)) {
    for (const auto& xs : {std::vector<Element>{u, u, u, u}, std::vector<Element>{c, u, perm.star(c), u},
                           std::vector<Element>{u + c, u, c, perm.unit()}}) {
      const Element f = reduced_coefficient(p, xs, perm);
      CHECK(f == generic(p, xs));
      if (!f.is_zero()) ++nonzero;
    }
  }
  CHECK(nonzero > 10);
}

TEST_CASE("Wick inner products") {
  const FreeHaarBackend fh(3);
  const FockConfig cfg(skewed_inner(2), 3);
  const auto h = unit_vector(2, 0);
  const auto k = unit_vector(2, 1);
  const auto s1 = Partition12::from_blocks(1, {{0}});
  const WickWord wh = reduce(s1, pure_word(fh, {h}), fh, cfg);
  const WickWord wk = reduce(s1, pure_word(fh, {k}), fh, cfg);
  CHECK(wick_inner_product(wh, wk, fh, cfg) == QPoly(Rational(1, 2)));
  const FockConfig one = FockConfig::orthonormal(1, 3);
  const auto s2 = Partition12::from_blocks(2, {{0}, {1}});
  const WickWord w2 = reduce(s2, repeated_word(fh, 2), fh, one);
  CHECK(wick_inner_product(w2, w2, fh, one) == poly({1, 1}));
  const WickWord w1 = reduce(s1, repeated_word(fh, 1), fh, one);
  CHECK(wick_inner_product(w1, w2, fh, one).is_zero());
  CHECK_THROWS_AS(wick_inner_product(reduce(Partition12::from_blocks(3, {{0}, {1}, {2}}), repeated_word(fh, 3), fh, one),
                                     reduce(Partition12::from_blocks(3, {{0}, {1}, {2}}), repeated_word(fh, 3), fh, one),
                                     FreeHaarBackend(2), one),
                  WindowExceeded);
}

TEST_CASE("product expansion of Wick words") {
  const FreeHaarBackend fh(4);
  const FockConfig one = FockConfig::orthonormal(1, 4);
  const auto s1 = Partition12::from_blocks(1, {{0}});
  const WickWord w1 = reduce(s1, repeated_word(fh, 1), fh, one);
  CHECK(convolution_expand(w1, w1).size() == 2);
  const WickWord scalar = reduce(Partition12::from_blocks(2, {{0, 1}}), repeated_word(fh, 2), fh, one);
  const auto terms = convolution_expand(w1, scalar);
  REQUIRE(terms.size() == 1);
  CHECK(terms[0].gamma.to_string() == "{{1},{2,3}}");
}

TEST_CASE("inner products through reduction agree with trace pairings") {
  const PermGroupBackend perm(1, 6);
  const FockConfig cfg(skewed_inner(2), 4);
  const auto pool = testing::vector_pool(2);
  const Element coeffs[] = {perm.transposition(0, 1), perm.unit(), perm.transposition(-1, 1)};
  std::vector<WickWord> family;
  int shift = 0;
  for (int m = 1; m <= 4; ++m) {
    for (const auto& sigma : enumerate_pair_singleton(m)) {
      if (sigma.num_singletons() > 2) continue;
      GeneratorWord word;
      for (int i = 0; i < m; ++i) word.push_back({coeffs[(i + shift) % 3], pool[(i + shift) % pool.size()], 0});
      family.push_back(reduce(sigma, word, perm, cfg));
      ++shift;
    }
  }
  REQUIRE(family.size() >= 6);
  for (const auto& a : family)
    for (const auto& b : family) CHECK(wick_inner_product(a, b, perm, cfg) == wick_trace_pairing(a, b, perm, cfg));
}

TEST_CASE("adjoints") {
  const PermGroupBackend perm(1, 4);
  const FockConfig cfg(skewed_inner(2), 4);
  const Element c = perm.parse_basis("(-1 0 1)");
  const GeneratorWord word{{c, unit_vector(2, 0)}, {perm.transposition(0, 1), unit_vector(2, 1)}, {c, unit_vector(2, 1)}};
  const auto sigma = Partition12::from_blocks(3, {{0, 2}, {1}});
  const WickWord w = reduce(sigma, word, perm, cfg);
  const WickWord a = adjoint(w, perm, cfg);
  CHECK(a.sigma == sigma.reversed());
  CHECK(a.letters.front().coeff == perm.star(word.back().coeff));
  const WickWord back = adjoint(a, perm, cfg);
  CHECK(back.F == w.F);
  CHECK(back.f == w.f);
  const auto even = Partition12::from_blocks(4, {{0, 2}, {1, 3}});
  const GeneratorWord ew{{c, unit_vector(2, 0)}, {c, unit_vector(2, 1)}, {perm.star(c), unit_vector(2, 0)}, {perm.star(c), unit_vector(2, 1)}};
  const WickWord we = reduce(even, ew, perm, cfg);
  CHECK(wick_trace(we.sigma, we.letters, perm, cfg) == wick_trace(adjoint(we, perm, cfg).sigma, adjoint(we, perm, cfg).letters, perm, cfg));
}

TEST_CASE("invalid words are rejected with named preconditions") {
  const PermGroupBackend perm(1, 1);
  const FockConfig cfg = FockConfig::orthonormal(1, 4);
  CHECK_THROWS_AS(moment(coeff_word({perm.unit(), perm.unit(), perm.unit(), perm.unit()}, HVector{1}), perm, cfg),
                  WindowExceeded);
  const PermGroupBackend wide(1, 3);
  CHECK_THROWS_AS(validate_word(coeff_word({wide.transposition(0, 2)}, HVector{1}), wide, cfg), InvalidArgument);
  CHECK_THROWS_AS(validate_word(coeff_word({wide.unit()}, HVector{1, 0}), wide, cfg), InvalidArgument);
  Limits tight;
  tight.max_ground_set = 4;
  CHECK_THROWS_AS(moment(repeated_word(FreeHaarBackend(4), 6), FreeHaarBackend(4), cfg, tight), CapExceeded);
}
