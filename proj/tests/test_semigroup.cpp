#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qgauss/errors.hpp"
#include "qgauss/semigroup.hpp"
#include "support.hpp"

using namespace qgauss;
using testing::skewed_inner;
using testing::unit_vector;

namespace {

struct Fixture {
  PermGroupBackend perm{1, 6};
  FockConfig cfg{skewed_inner(2), 4};

  WickWord word(const std::vector<std::vector<int>>& blocks, int m, int shift = 0) const {
    const Element coeffs[] = {perm.transposition(0, 1), perm.unit(), perm.transposition(-1, 1)};
    const auto pool = testing::vector_pool(2);
    GeneratorWord w;
    for (int i = 0; i < m; ++i) w.push_back({coeffs[(i + shift) % 3], pool[(i + 2 * shift) % pool.size()], 0});
    return reduce(Partition12::from_blocks(m, blocks), w, perm, cfg);
  }
};

}  // namespace

TEST_CASE("T_t scales each degree by c^s") {
  const Fixture fx;
  WickSpanElement x;
  x.add(Rational(2), fx.word({{0}, {1}}, 2));
  x.add(Rational(1), fx.word({{0}, {1, 2}}, 3));
  const WickSpanElement same = apply_Tt(x, Rational(1));
  CHECK(span_inner(same - x, same - x, fx.perm, fx.cfg).is_zero());
  const WickSpanElement half = apply_Tt(x, Rational(1, 2));
  CHECK(half.components().at(2).front().coeff == Rational(1, 2));
  CHECK(half.components().at(1).front().coeff == Rational(1, 2));
  CHECK_THROWS_AS(apply_Tt(x, Rational(0)), InvalidArgument);
  CHECK_THROWS_AS(apply_Tt(x, Rational(3, 2)), InvalidArgument);
}

TEST_CASE("number operator") {
  const Fixture fx;
  WickSpanElement zero;
  zero.add(Rational(1), fx.word({{0, 1}}, 2));
  CHECK(number_operator(zero).is_zero());
  WickSpanElement three;
  three.add(Rational(1), fx.word({{0}, {1}, {2}}, 3));
  CHECK(number_operator(three).components().at(3).front().coeff == 3);
}

TEST_CASE("T_t certificates on degrees 0..3") {
  const Fixture fx;
  const std::vector<WickWord> words{fx.word({{0, 1}}, 2), fx.word({{0}}, 1), fx.word({{0}, {1, 2}}, 3, 1),
                                    fx.word({{0}, {1}}, 2), fx.word({{0, 2}, {1}, {3}}, 4, 2),
                                    fx.word({{0}, {1}, {2}}, 3)};
  for (const auto& x : words) {
    std::vector<WickWord> tests;
    for (const auto& y : words)
      if (y.degree() == x.degree()) tests.push_back(y);
    for (const Rational& c : {Rational(1), Rational(3, 5), Rational(1, 2)}) {
      const auto tc = certify_Tt(x, tests, c, fx.perm, fx.cfg);
      CHECK(tc.verified);
      CHECK(tc.pairings == tests.size());
      const auto ac = certify_alpha_theta(x, tests, c, fx.perm, fx.cfg);
      CHECK(ac.verified);
    }
  }
}

TEST_CASE("a wrong eigenfactor is detected") {
  const Fixture fx;
  const WickWord x = fx.word({{0}, {1}}, 2);
  WickSpanElement xs;
  xs.add(Rational(1), x);
  const Rational c(1, 2);
  const QPoly lhs = span_inner(apply_Tt(xs, c), xs, fx.perm, fx.cfg);
  const QPoly pairing = wick_trace_pairing(x, x, fx.perm, fx.cfg);
  REQUIRE_FALSE(pairing.is_zero());
  CHECK(lhs == pairing * Rational(1, 4));
  CHECK(lhs != pairing * Rational(1, 2));
  const auto rotated = certify_alpha_theta(x, {x}, Rational(3, 5), fx.perm, fx.cfg);
  REQUIRE(rotated.rotated.size() == 1);
  CHECK(rotated.rotated[0] == rotated.expected[0]);
  CHECK(rotated.rotated[0] != pairing * Rational(3, 5));
}

TEST_CASE("alpha_theta at theta = 0 is the identity") {
  const Fixture fx;
  const WickWord x = fx.word({{0}, {1, 2}}, 3);
  const auto ac = certify_alpha_theta(x, {x}, Rational(1), fx.perm, fx.cfg);
  CHECK(ac.verified);
  CHECK(ac.rotated[0] == wick_trace_pairing(x, x, fx.perm, fx.cfg));
}

TEST_CASE("contraction defects grow as c decreases") {
  const Fixture fx;
  WickSpanElement x;
  x.add(Rational(1), fx.word({{0}}, 1));
  x.add(Rational(-1, 2), fx.word({{0}, {1}}, 2));
  x.add(Rational(1, 3), fx.word({{0}, {1}, {2}}, 3));
  const auto d = contraction_defects(x, {Rational(1), Rational(3, 4), Rational(1, 2)}, Rational(1, 2), fx.perm, fx.cfg);
  CHECK(d[0] == 0);
  CHECK(d[0] <= d[1]);
  CHECK(d[1] <= d[2]);
}

TEST_CASE("the generator is minus the number operator") {
  const Fixture fx;
  WickSpanElement x;
  x.add(Rational(1), fx.word({{0}}, 1));
  x.add(Rational(1), fx.word({{0}, {1}, {2}}, 3));
  CHECK(generator_deviation(x, {Rational(99999999, 100000000)}) < 1e-6);
  CHECK(generator_deviation(x, {Rational(1, 2)}) > 0.1);
  CHECK(time_from_factor(Rational(1)) == 0.0);
  CHECK(time_from_factor(Rational(1, 2)) == doctest::Approx(std::log(2.0)));
}
