#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgauss/errors.hpp"
#include "qgauss/linalg.hpp"
#include "qgauss/qpoly.hpp"
#include "qgauss/rational.hpp"

using namespace qgauss;

namespace {
QPoly poly(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return QPoly(v);
}
}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(to_string(parse_rational("4/2")) == "2");
  CHECK(to_string(Rational(-1, 3)) == "-1/3");
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational("abc"), InvalidArgument);
  CHECK(pow(Rational(3, 5), 2) == Rational(9, 25));
}

TEST_CASE("qpoly arithmetic") {
  CHECK(poly({1, 1}) + poly({1, -1}) == QPoly(2));
  CHECK(poly({1, 1}) * poly({1, 1, 1}) == poly({1, 2, 2, 1}));
  CHECK(poly({1, 1}) * Rational(3, 2) == QPoly(std::vector<Rational>{Rational(3, 2), Rational(3, 2)}));
  CHECK((poly({0, 1}) - QPoly::q()).is_zero());
  CHECK(QPoly().degree() == -1);
  CHECK(poly({1, 0, 0}).degree() == 0);
  CHECK(poly({2, 1}).shifted(2) == poly({0, 0, 2, 1}));
}

TEST_CASE("qpoly evaluation") {
  const QPoly p = poly({2, 1});
  CHECK(p.eval(Rational(0)) == 2);
  CHECK(p.eval(Rational(1)) == 3);
  CHECK(p.eval(Rational(-1)) == 1);
  CHECK(p.eval(Rational(1, 2)) == Rational(5, 2));
  CHECK(p.eval(0.5) == doctest::Approx(2.5));
}

TEST_CASE("qpoly serialization") {
  const QPoly p(std::vector<Rational>{Rational(2), Rational(0), Rational(-1, 2)});
  CHECK(to_json(p) == nlohmann::json::array({"2", "0", "-1/2"}));
  CHECK(qpoly_from_json(to_json(p)) == p);
  CHECK(to_json(QPoly()) == nlohmann::json::array({"0"}));
  CHECK(qpoly_from_json(nlohmann::json::array({"0"})).is_zero());
  CHECK(p.to_string() == "2 - 1/2*q^2");
  CHECK(poly({2, 1}).to_string() == "2 + q");
}

TEST_CASE("exact rank and determinant") {
  // Hilbert matrix is nonsingular; its determinant for n = 3 is 1/2160.
  RationalMatrix h(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) h(i, j) = Rational(1, static_cast<long>(i + j + 1));
  CHECK(exact_rank(h) == 3);
  CHECK(determinant(h) == Rational(1, 2160));
  CHECK(leading_minors_positive(h));
  const auto sing = RationalMatrix::from_rows({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}});
  CHECK(exact_rank(sing) == 1);
  CHECK(determinant(sing) == 0);
  CHECK_THROWS_AS(solve(sing, {Rational(1), Rational(1)}), SingularSystem);
}

TEST_CASE("exact solve and eigenvalues") {
  const auto a = RationalMatrix::from_rows({{Rational(2), Rational(1)}, {Rational(1), Rational(3)}});
  const auto x = solve(a, {Rational(3), Rational(5)});
  CHECK(x[0] == Rational(4, 5));
  CHECK(x[1] == Rational(7, 5));
  CHECK(a.apply(x) == std::vector<Rational>{Rational(3), Rational(5)});
  // Eigenvalues of [[2,1],[1,3]] are (5 -+ sqrt 5)/2.
  CHECK(min_eigenvalue(a) == doctest::Approx((5.0 - std::sqrt(5.0)) / 2.0));
  CHECK(a.is_symmetric());
}
