#include "qgauss/dimensions.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "qgauss/errors.hpp"
#include "qgauss/linalg.hpp"
#include "qgauss/moments.hpp"

namespace qgauss {

namespace {

// Scales x so that its first coefficient is 1.
Element normalized(const Element& x) {
  if (x.is_zero()) return x;
  Rational inv = 1 / x.terms().front().second;
  return inv * x;
}

std::vector<Element> letter_set(const CopiesBackend& backend, const SpanOptions& options) {
  std::vector<Element> sandwich = options.sandwich.empty() ? std::vector<Element>{backend.unit()} : options.sandwich;
  std::set<Element> letters;
  for (const auto& s : backend.generators())
    for (const auto& b1 : sandwich)
      for (const auto& b2 : sandwich) {
        Element x = backend.multiply(backend.multiply(b1, s), b2);
        if (!x.is_zero()) letters.insert(std::move(x));
      }
  return {letters.begin(), letters.end()};
}

// Incremental row echelon form over sparse rows keyed by basis key.
class Echelon {
 public:
  // True if x is independent of the rows so far (and then it is added).
  bool add(const Element& x) {
    std::map<BasisKey, Rational> row;
    for (const auto& [k, c] : x.terms()) row.emplace(k, c);
    for (const auto& [pivot, prow] : rows_) {
      auto it = row.find(pivot);
      if (it == row.end()) continue;
      const Rational factor = it->second;
      for (const auto& [k, c] : prow) {
        Rational& v = row[k];
        v -= factor * c;
        if (sgn(v) == 0) row.erase(k);
      }
    }
    if (row.empty()) return false;
    const BasisKey pivot = row.begin()->first;
    const Rational lead = row.begin()->second;
    for (auto& [k, c] : row) c /= lead;
    for (auto& [other_pivot, prow] : rows_) {
      auto it = prow.find(pivot);
      if (it == prow.end()) continue;
      const Rational factor = it->second;
      for (const auto& [k, c] : row) {
        Rational& v = prow[k];
        v -= factor * c;
        if (sgn(v) == 0) prow.erase(k);
      }
    }
    rows_.emplace(pivot, std::move(row));
    return true;
  }

 private:
  std::map<BasisKey, std::map<BasisKey, Rational>> rows_;
};

}  // namespace

bool SpanReport::within_bound() const {
  if (!bound) return true;
  return dim_over_b <= Rational(*bound);
}

std::optional<Integer> declared_bound(const CopiesBackend& backend, int k, std::string* kind) {
  auto power = [](long base, int e) {
    Integer r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
  };
  const std::string id = backend.kind();
  if (id == "free_haar") {
    if (kind) *kind = "4^k";
    return power(4, k);
  }
  if (id == "perm_group") {
    const auto& perm = static_cast<const PermGroupBackend&>(backend);
    if (kind) *kind = "(d+1)^k";
    return power(perm.d() + 1, k);
  }
  if (id == "tensor") {
    const auto& t = static_cast<const TensorBackend&>(backend);
    if (kind) *kind = "dim(C)^k";
    return power(t.c_algebra().dim(), k);
  }
  if (kind) *kind = "none";
  return std::nullopt;
}

SpanReport span_Dk(const CopiesBackend& backend, int k, int max_m, const SpanOptions& options) {
  if (k < 0) throw InvalidArgument("k must be nonnegative");
  if (max_m < k) throw InvalidArgument("max_m must be at least k");
  if (max_m > options.limits.max_ground_set) {
    throw CapExceeded("max_m " + std::to_string(max_m) + " exceeds the enumeration cap " +
                      std::to_string(options.limits.max_ground_set));
  }
  backend.require_window(k + (max_m - k) / 2, "window < s+p");

  SpanReport report;
  report.backend = backend.kind();
  report.k = k;
  report.max_m = max_m;
  const auto b_basis = backend.b_basis();
  report.dim_b = b_basis.size();
  const auto letters = letter_set(backend, options);

  std::set<Element> seen;
  auto collect = [&](const Element& f) {
    if (f.is_zero()) return;
    if (!options.right_b_closure) {
      seen.insert(normalized(f));
      return;
    }
    for (const auto& b : b_basis) {
      Element fb = backend.multiply(f, b);
      if (!fb.is_zero()) seen.insert(normalized(fb));
    }
  };

  for (int m = std::max(k, 0); m <= max_m; m += 2) {
    const auto partitions = enumerate_with_singletons(m, k, options.limits);
    std::size_t words = 1;
    for (int i = 0; i < m; ++i) words *= letters.size();
    std::vector<std::size_t> digits(static_cast<std::size_t>(m), 0);
    std::vector<Element> coeffs(static_cast<std::size_t>(m));
    for (std::size_t w = 0; w < words; ++w) {
      std::size_t rem = w;
      for (int i = m - 1; i >= 0; --i) {
        coeffs[i] = letters[rem % letters.size()];
        rem /= letters.size();
      }
      for (const auto& sigma : partitions) {
        ++report.generators_considered;
        collect(reduced_coefficient(sigma, coeffs, backend));
      }
    }
  }

  Echelon echelon;
  for (const auto& v : seen) {
    if (echelon.add(v)) report.vectors.push_back(v);
  }
  const std::size_t n = report.vectors.size();
  RationalMatrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gram(i, j) = backend.inner(report.vectors[i], report.vectors[j]);
  report.dim_scalar = exact_rank(gram);
  report.dim_over_b = Rational(static_cast<long>(report.dim_scalar), static_cast<long>(report.dim_b));
  report.dim_over_b.canonicalize();
  report.bound = declared_bound(backend, k, &report.bound_kind);
  return report;
}

GrowthReport growth_report(const CopiesBackend& backend, int k_max, int extra, const SpanOptions& options) {
  if (k_max < 0 || extra < 0) throw InvalidArgument("k_max and extra must be nonnegative");
  GrowthReport out;
  out.backend = backend.kind();
  declared_bound(backend, 0, &out.bound_kind);
  for (int k = 0; k <= k_max; ++k) {
    GrowthRow row;
    row.k = k;
    SpanReport last;
    for (int m = k; m <= k + extra; m += 2) {
      last = span_Dk(backend, k, m, options);
      row.dims_by_max_m.emplace_back(m, last.dim_scalar);
    }
    row.dim_scalar = last.dim_scalar;
    row.dim_over_b = last.dim_over_b;
    row.bound = last.bound;
    row.within_bound = last.within_bound();
    row.stabilized_at_m = row.dims_by_max_m.back().first;
    for (auto it = row.dims_by_max_m.rbegin(); it != row.dims_by_max_m.rend(); ++it) {
      if (it->second != row.dim_scalar) break;
      row.stabilized_at_m = it->first;
    }
    out.rows.push_back(std::move(row));
  }
  std::vector<std::pair<double, double>> pts;
  for (const auto& r : out.rows) {
    const double v = to_double(r.dim_over_b);
    if (r.k >= 1 && v > 0) pts.emplace_back(r.k, std::log(v));
  }
  if (pts.size() >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [x, y] : pts) {
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const double np = static_cast<double>(pts.size());
    out.fit_slope = (np * sxy - sx * sy) / (np * sxx - sx * sx);
    out.growth_base = std::exp(out.fit_slope);
  }
  return out;
}

Integer L2k_dimension_bound(const SpanReport& report, int dim_h) {
  if (dim_h < 1) throw InvalidArgument("dim_H must be positive");
  Integer r = static_cast<unsigned long>(report.dim_scalar);
  for (int i = 0; i < report.k; ++i) r *= dim_h;
  return r;
}

std::string growth_csv(const GrowthReport& report) {
  std::ostringstream os;
  os << "k,dim,dim_over_b,bound,stabilized_at_m\n";
  for (const auto& r : report.rows) {
    os << r.k << ',' << r.dim_scalar << ',' << to_string(r.dim_over_b) << ','
       << (r.bound ? r.bound->get_str() : std::string("")) << ',' << r.stabilized_at_m << '\n';
  }
  return os.str();
}

}  // namespace qgauss
