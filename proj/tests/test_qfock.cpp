#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgauss/errors.hpp"
#include "qgauss/qfock.hpp"
#include "support.hpp"

using namespace qgauss;
using testing::skewed_inner;
using testing::unit_vector;

TEST_CASE("q inner products of simple tensors") {
  const FockConfig cfg = FockConfig::orthonormal(2, 4);
  CHECK(q_inner({0}, {0}, cfg) == QPoly(1));
  CHECK(q_inner({0, 0}, {0, 0}, cfg) == QPoly(std::vector<Rational>{1, 1}));
  CHECK(q_inner({0, 0, 0}, {0, 0, 0}, cfg) == QPoly(std::vector<Rational>{1, 2, 2, 1}));
  CHECK(q_inner({0, 1}, {1, 0}, cfg) == QPoly::q());
  CHECK(q_inner({0, 1}, {0, 1}, cfg) == QPoly(1));
  CHECK(q_inner({0}, {0, 0}, cfg).is_zero());
}

TEST_CASE("q inner product with a skewed Gram matrix, by permutation sum") {
  const FockConfig cfg(skewed_inner(3), 4);
  const FockWord u{0, 1, 2};
  const FockWord v{2, 0, 1};
  QPoly expect;
  for (const auto& perm : all_permutations(3)) {
    Rational w(1);
    for (int i = 0; i < 3; ++i) w *= cfg.inner()(u[i], v[perm[i]]);
    expect += QPoly::monomial(w, static_cast<unsigned>(inversions(perm)));
  }
  CHECK(q_inner(u, v, cfg) == expect);
}

TEST_CASE("field operator on small vectors") {
  const FockConfig cfg = FockConfig::orthonormal(1, 3);
  const HVector h{1};
  const FockVector one = apply_field(h, FockVector::vacuum(), cfg);
  REQUIRE(one.terms().size() == 1);
  CHECK(one.terms().begin()->first == FockWord{0});
  const FockVector two = apply_field(h, one, cfg);
  CHECK(two.vacuum_coefficient() == QPoly(1));
  CHECK(two.terms().at(FockWord{0, 0}) == QPoly(1));
  CHECK(two.max_degree() == 2);
}

TEST_CASE("field operator refuses to leave the truncated space") {
  const FockConfig cfg = FockConfig::orthonormal(1, 1);
  const FockVector one = apply_field(HVector{1}, FockVector::vacuum(), cfg);
  CHECK_THROWS_AS(apply_field(HVector{1}, one, cfg), TruncationExceeded);
}

TEST_CASE("vacuum moments") {
  const FockConfig cfg = FockConfig::orthonormal(2, 4);
  const HVector e1 = unit_vector(2, 0);
  const HVector e2 = unit_vector(2, 1);
  CHECK(vacuum_moment({e1, e2}, cfg).is_zero());
  CHECK(vacuum_moment({e1, e1}, cfg) == QPoly(1));
  CHECK(vacuum_moment({e1, e1, e1, e1}, cfg) == QPoly(std::vector<Rational>{2, 1}));
  CHECK(vacuum_moment({e1, e1, e1}, cfg).is_zero());
  // <s(e1)s(e2)s(e1)s(e2)> picks only the crossing pairing.
  CHECK(vacuum_moment({e1, e2, e1, e2}, cfg) == QPoly::q());
  CHECK(vacuum_moment({e1, e2, e2, e1}, cfg) == QPoly(1));
}

TEST_CASE("single-variable moments match Jacobi path counting") {
  const FockConfig cfg = FockConfig::orthonormal(1, 6);
  for (int m = 0; m <= 12; ++m) CHECK(vacuum_moment(std::vector<HVector>(static_cast<std::size_t>(m), HVector{1}), cfg) == testing::jacobi_moment(m));
}

TEST_CASE("Fock Gram positivity") {
  const FockConfig cfg(skewed_inner(2), 4);
  CHECK(gram_psd_check(2, cfg, Rational(1, 2)).psd);
  CHECK(gram_psd_check(3, cfg, Rational(-1, 2)).psd);
  const PsdReport one = gram_psd_check(1, cfg, Rational(0));
  CHECK(one.psd);
  CHECK(one.size == 2);
  // At q = -1 the antisymmetric Fock space kills e1 (x) e1, so the Gram matrix is singular but PSD.
  const PsdReport fermi = gram_psd_check(2, FockConfig::orthonormal(1, 2), Rational(-1));
  CHECK(fermi.psd);
  CHECK(fermi.min_eigenvalue == doctest::Approx(0.0));
}

TEST_CASE("invalid configurations are rejected") {
  CHECK_THROWS_AS(FockConfig(RationalMatrix::from_rows({{Rational(1), Rational(2)}, {Rational(2), Rational(1)}}), 2),
                  InvalidArgument);
  CHECK_THROWS_AS(FockConfig(RationalMatrix::from_rows({{Rational(1), Rational(0)}, {Rational(1), Rational(1)}}), 2),
                  InvalidArgument);
}
