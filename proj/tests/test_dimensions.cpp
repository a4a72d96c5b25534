#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgauss/dimensions.hpp"

using namespace qgauss;

TEST_CASE("degree zero is B") {
  const FreeHaarBackend fh(4);
  const SpanReport r = span_Dk(fh, 0, 4);
  CHECK(r.dim_scalar == 1);
  CHECK(r.dim_b == 1);
  const PermGroupBackend perm(1, 4);
  const SpanReport p = span_Dk(perm, 0, 4);
  CHECK(p.dim_scalar == 2);
  CHECK(p.dim_over_b == 1);
}

TEST_CASE("free Haar degree one stays within 4") {
  const FreeHaarBackend fh(4);
  const SpanReport r = span_Dk(fh, 1, 3);
  REQUIRE(r.bound.has_value());
  CHECK(*r.bound == 4);
  CHECK(r.dim_scalar <= 4);
  CHECK(r.within_bound());
  // m = 1 already gives F = x for x in S = {1, u, u*}; longer words add nothing new.
  CHECK(r.dim_scalar == 3);
}

TEST_CASE("permutation degree one stays within (d+1)^k over B") {
  const PermGroupBackend perm(1, 4);
  const SpanReport r = span_Dk(perm, 1, 3);
  REQUIRE(r.bound.has_value());
  CHECK(*r.bound == 2);
  CHECK(r.dim_over_b <= 2);
  CHECK(r.within_bound());
}

TEST_CASE("degree one with d = 0 spans the copy algebra") {
  // D_1 lies in A = C[S_{0,1}], which has dimension 2, and contains 1 and u_(0 1).
  const PermGroupBackend perm(0, 4);
  CHECK(span_Dk(perm, 1, 3).dim_scalar == 2);
}

TEST_CASE("tensor example grows at most like 2^k") {
  const auto z2 = FiniteTracialAlgebra::group_algebra(cyclic_group(2));
  const TensorBackend t(FiniteTracialAlgebra::scalars(), z2, 5);
  const GrowthReport g = growth_report(t, 3, 2);
  for (const auto& row : g.rows) {
    CHECK(row.within_bound);
    CHECK(row.dim_scalar <= (std::size_t{1} << row.k));
  }
}

TEST_CASE("free Haar growth rows respect 4^k and stabilize") {
  const FreeHaarBackend fh(6);
  const GrowthReport g = growth_report(fh, 3, 4);
  REQUIRE(g.rows.size() == 4);
  for (const auto& row : g.rows) {
    CHECK(row.within_bound);
    REQUIRE(row.bound.has_value());
    CHECK(*row.bound == Integer(1) << (2 * row.k));
    CHECK(row.stabilized_at_m <= row.k + 4);
    for (std::size_t i = 1; i < row.dims_by_max_m.size(); ++i)
      CHECK(row.dims_by_max_m[i - 1].second <= row.dims_by_max_m[i].second);
  }
  CHECK(g.rows[0].dim_scalar == 1);
  const std::string csv = growth_csv(g);
  CHECK(csv.rfind("k,dim,dim_over_b,bound,stabilized_at_m\n", 0) == 0);
}

TEST_CASE("L2 bound multiplies by dim(H)^k") {
  const FreeHaarBackend fh(4);
  const SpanReport r = span_Dk(fh, 1, 3);
  CHECK(L2k_dimension_bound(r, 1) == static_cast<long>(r.dim_scalar));
  CHECK(L2k_dimension_bound(r, 2) == static_cast<long>(2 * r.dim_scalar));
  CHECK(L2k_dimension_bound(r, 2) <= 8);
  CHECK(L2k_dimension_bound(span_Dk(fh, 0, 4), 3) == 1);
}
