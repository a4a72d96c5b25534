#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qgauss/copies.hpp"
#include "qgauss/partitions.hpp"

namespace qgauss {

struct SpanOptions {
  // Letters are b s b' with b, b' from this set and s from S; empty means {1}.
  std::vector<Element> sandwich;
  // Also include F b for every basis element b of B.
  bool right_b_closure = true;
  Limits limits = Limits::from_env();
};

struct SpanReport {
  std::string backend;
  int k = 0;
  int max_m = 0;
  std::size_t generators_considered = 0;  // (m, sigma, word) triples
  std::vector<Element> vectors;           // distinct F_sigma (and F_sigma b), up to scalars
  std::size_t dim_scalar = 0;
  std::size_t dim_b = 1;
  // dim_scalar / dim(B): a spanning-count surrogate for the dimension over B.
  Rational dim_over_b;
  std::optional<Integer> bound;
  std::string bound_kind;
  bool within_bound() const;
};

// Span of the reduced coefficients F_sigma over sigma in P_{1,2}(m) with k singletons,
// m <= max_m, and words over S (possibly B-sandwiched). The rank is the exact rank of
// the tau-Gram matrix of an independent subset selected by exact elimination.
SpanReport span_Dk(const CopiesBackend& backend, int k, int max_m, const SpanOptions& options = {});

// Declared bound for the shipped examples: 4^k for free_haar, (d+1)^k for perm_group
// (compared with dim_scalar / dim(B)), dim(C)^k for tensor (also over B).
std::optional<Integer> declared_bound(const CopiesBackend& backend, int k, std::string* kind = nullptr);

struct GrowthRow {
  int k = 0;
  std::vector<std::pair<int, std::size_t>> dims_by_max_m;  // (max_m, dim_scalar)
  std::size_t dim_scalar = 0;                              // at the largest max_m
  Rational dim_over_b;
  std::optional<Integer> bound;
  // Smallest max_m from which the dimension no longer changes within the tested range.
  int stabilized_at_m = 0;
  bool within_bound = true;
};

struct GrowthReport {
  std::string backend;
  std::string bound_kind;
  std::vector<GrowthRow> rows;
  // Least-squares slope of log(dim_over_b) against k over rows with k >= 1, and exp(slope).
  double fit_slope = 0.0;
  double growth_base = 0.0;
};

// For each k <= k_max, dims at max_m = k, k+2, ..., k+extra.
GrowthReport growth_report(const CopiesBackend& backend, int k_max, int extra = 4, const SpanOptions& options = {});

// dim_scalar(D_k) * dim_H^k.
Integer L2k_dimension_bound(const SpanReport& report, int dim_h);

std::string growth_csv(const GrowthReport& report);

}  // namespace qgauss
