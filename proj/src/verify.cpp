#include "qgauss/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include "qgauss/copies.hpp"
#include "qgauss/errors.hpp"
#include "qgauss/matmodel.hpp"
#include "qgauss/moments.hpp"
#include "qgauss/qfock.hpp"
#include "qgauss/semigroup.hpp"

namespace qgauss {

namespace {

RationalMatrix skewed_inner(int dim) {
  if (dim == 1) return RationalMatrix::identity(1);
  if (dim == 2) return RationalMatrix::from_rows({{Rational(1), Rational(1, 2)}, {Rational(1, 2), Rational(1)}});
  return RationalMatrix::from_rows({{Rational(2), Rational(1), Rational(0)},
                                    {Rational(1), Rational(2), Rational(1, 2)},
                                    {Rational(0), Rational(1, 2), Rational(1)}});
}

std::vector<HVector> vector_pool(int dim) {
  std::vector<HVector> pool;
  for (int i = 0; i < dim; ++i) {
    HVector e(static_cast<std::size_t>(dim));
    e[i] = 1;
    pool.push_back(e);
  }
  HVector mixed(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) mixed[i] = Rational(i % 2 == 0 ? 1 : -1, i + 1);
  pool.push_back(mixed);
  return pool;
}

GeneratorWord pure_word(const CopiesBackend& backend, const std::vector<HVector>& vecs) {
  GeneratorWord w;
  for (const auto& v : vecs) w.push_back({backend.unit(), v, 0});
  return w;
}

void oracle_suite(std::vector<CheckResult>& out) {
  const FreeHaarBackend pure(6);
  for (int dim = 1; dim <= 3; ++dim) {
    const FockConfig cfg(skewed_inner(dim), 3);
    const auto pool = vector_pool(dim);
    std::size_t words = 0;
    std::string witness;
    for (int m = 0; m <= 6 && witness.empty(); ++m) {
      std::size_t total = 1;
      for (int i = 0; i < m; ++i) total *= pool.size();
      for (std::size_t w = 0; w < total && witness.empty(); ++w) {
        std::vector<HVector> vecs;
        for (std::size_t i = 0, rem = w; i < static_cast<std::size_t>(m); ++i, rem /= pool.size())
          vecs.push_back(pool[rem % pool.size()]);
        ++words;
        const QPoly a = moment(pure_word(pure, vecs), pure, cfg);
        const QPoly b = vacuum_moment(vecs, cfg);
        if (a != b) witness = "m=" + std::to_string(m) + " word #" + std::to_string(w) + ": " + a.to_string() + " vs " + b.to_string();
      }
    }
    out.push_back({"oracle", "moment_vs_fock_dim" + std::to_string(dim), witness.empty(),
                   witness.empty() ? std::to_string(words) + " words" : witness});
  }

  const FockConfig one = FockConfig::orthonormal(1, 6);
  const long catalan[] = {1, 1, 2, 5, 14, 42};
  const long dfact[] = {1, 1, 3, 15, 105, 945};
  bool ok = true;
  std::ostringstream detail;
  for (int k = 0; k <= 5; ++k) {
    const QPoly p = moment(pure_word(pure, std::vector<HVector>(static_cast<std::size_t>(2 * k), HVector{1})), pure, one);
    const bool row = p.eval(Rational(0)) == catalan[k] && p.eval(Rational(1)) == dfact[k];
    ok = ok && row;
    detail << "k=" << k << ":" << p.to_string() << (row ? "" : " MISMATCH") << "; ";
  }
  out.push_back({"oracle", "q_hermite_values", ok, detail.str()});

  const PermGroupBackend perm(1, 4);
  const FockConfig cfg2(skewed_inner(2), 3);
  const auto pool2 = vector_pool(2);
  const Element u = perm.transposition(0, 1);
  bool invariant = true;
  std::string witness;
  std::size_t cases = 0;
  for (int m = 2; m <= 6 && invariant; m += 2) {
    for (const auto& sigma : enumerate_pair_partitions(m)) {
      GeneratorWord word;
      for (int i = 0; i < m; ++i) word.push_back({(i % 3 == 0) ? perm.unit() : u, pool2[i % pool2.size()], 0});
      const QPoly ref = pair_term(sigma, word, canonical_copies(sigma), perm, cfg2);
      const int p = m / 2;
      // Every injective assignment of copies 1..4 to the pairs.
      for (int mask = 0; mask < (1 << 4); ++mask) {
        if (std::popcount(static_cast<unsigned>(mask)) != p) continue;
        std::vector<int> chosen;
        for (int c = 0; c < 4; ++c)
          if (mask & (1 << c)) chosen.push_back(c + 1);
        do {
          std::vector<int> copies(static_cast<std::size_t>(m));
          for (int t = 0; t < p; ++t) {
            copies[sigma.pairs()[t].left] = chosen[t];
            copies[sigma.pairs()[t].right] = chosen[t];
          }
          ++cases;
          if (pair_term(sigma, word, copies, perm, cfg2) != ref) {
            invariant = false;
            witness = sigma.to_string();
          }
        } while (std::next_permutation(chosen.begin(), chosen.end()));
      }
    }
  }
  out.push_back({"oracle", "index_assignment_invariance", invariant,
                 invariant ? std::to_string(cases) + " assignments" : "differs at " + witness});

  const GeneratorWord odd = pure_word(pure, {HVector{1}, HVector{1}, HVector{1}});
  bool zero = true;
  for (int n : {1, 2, 4, 8}) zero = zero && finite_n_moment(odd, pure, n, one).is_zero();
  out.push_back({"oracle", "finite_n_odd_words_vanish", zero, "n in {1,2,4,8}"});
}

void axiom_suite(std::vector<CheckResult>& out) {
  auto record = [&](const CopiesBackend& b, const std::string& name, bool expect_pass) {
    const AxiomReport r = axiom_check(b);
    std::ostringstream d;
    for (const auto& a : r.results) {
      d << "(" << a.axiom << ") " << (a.passed ? "pass" : "FAIL") << " [" << a.cases << "]";
      if (!a.witness.empty()) d << " " << a.witness;
      d << "; ";
    }
    out.push_back({"axioms", name, r.all_passed() == expect_pass, d.str()});
  };
  record(TensorBackend(FiniteTracialAlgebra::scalars(), FiniteTracialAlgebra::group_algebra(cyclic_group(2)), 3),
         "tensor_C_Z2", true);
  record(TensorBackend(FiniteTracialAlgebra::group_algebra(cyclic_group(2)),
                       FiniteTracialAlgebra::group_algebra(cyclic_group(3)), 3),
         "tensor_Z2_Z3", true);
  for (int d = 0; d <= 2; ++d) record(PermGroupBackend(d, 4), "perm_group_d" + std::to_string(d), true);
  record(FreeHaarBackend(4), "free_haar", true);
  record(BrokenPermBackend(1, 3), "broken_control_fails", false);
}

// Wick words of degree s on the perm backend (d = 1): up to `count` words with m = s and
// m = s + 2 letters.
std::vector<WickWord> wick_family(const PermGroupBackend& perm, const FockConfig& cfg, int s, std::size_t count) {
  const auto pool = vector_pool(cfg.dim());
  const Element coeffs[] = {perm.transposition(0, 1), perm.unit(), perm.transposition(-1, 1)};
  std::vector<WickWord> out;
  int shift = 0;
  for (int m = s; m <= s + 2 && out.size() < count; m += 2) {
    if (m == 0) continue;
    for (const auto& sigma : enumerate_with_singletons(m, s)) {
      if (out.size() >= count) break;
      GeneratorWord word;
      for (int i = 0; i < m; ++i) word.push_back({coeffs[(i + shift) % 3], pool[(i + 2 * shift) % pool.size()], 0});
      out.push_back(reduce(sigma, word, perm, cfg));
      ++shift;
    }
  }
  return out;
}

void semigroup_suite(std::vector<CheckResult>& out) {
  const PermGroupBackend perm(1, 6);
  const FockConfig cfg(skewed_inner(2), 4);
  const std::vector<Rational> cs{Rational(1), Rational(3, 5), Rational(1, 2)};
  for (int s = 0; s <= 3; ++s) {
    const auto family = wick_family(perm, cfg, s, 4);
    for (const auto& c : cs) {
      bool t_ok = true;
      bool a_ok = true;
      std::size_t pairings = 0;
      for (const auto& x : family) {
        const auto tc = certify_Tt(x, family, c, perm, cfg);
        const auto ac = certify_alpha_theta(x, family, c, perm, cfg);
        t_ok = t_ok && tc.verified;
        a_ok = a_ok && ac.verified;
        pairings += tc.pairings + ac.pairings;
      }
      const std::string tag = "s=" + std::to_string(s) + " c=" + to_string(c);
      out.push_back({"semigroup", "Tt_eigenfactor " + tag, t_ok, std::to_string(pairings) + " pairings"});
      out.push_back({"semigroup", "alpha_theta_eigenfactor " + tag, a_ok, std::to_string(pairings) + " pairings"});
    }
  }

  WickSpanElement x;
  int k = 1;
  for (int s = 1; s <= 3; ++s)
    for (const auto& w : wick_family(perm, cfg, s, 2)) x.add(Rational(k++, 3), w);
  const auto defects = contraction_defects(x, {Rational(1), Rational(3, 4), Rational(1, 2), Rational(1, 4)},
                                           Rational(1, 2), perm, cfg);
  bool mono = true;
  for (std::size_t i = 1; i < defects.size(); ++i) mono = mono && defects[i - 1] <= defects[i];
  out.push_back({"semigroup", "contraction_defect_monotone", mono, ""});

  const double dev = generator_deviation(x, {Rational(99999999, 100000000)});
  out.push_back({"semigroup", "generator_is_minus_N", dev < 1e-6, "max deviation " + std::to_string(dev)});

  WickSpanElement y;
  for (const auto& w : wick_family(perm, cfg, 2, 3)) y.add(Rational(1), w);
  for (const auto& w : wick_family(perm, cfg, 1, 2)) y.add(Rational(-2), w);
  const Rational c(1, 2);
  const bool self_adjoint = span_inner(apply_Tt(x, c), y, perm, cfg) == span_inner(x, apply_Tt(y, c), perm, cfg);
  out.push_back({"semigroup", "Tt_self_adjoint", self_adjoint, ""});
}

void matmodel_suite(std::vector<CheckResult>& out, const VerifyOptions& options) {
  bool reps = true;
  for (int trial = 0; trial < 50 && reps; ++trial) {
    const int n = 2 + trial % 5;
    RationalMatrix q(1, 1);
    q(0, 0) = Rational(trial % 3 - 1, 2);
    const SignMatrix eps = sample_epsilon(q, n, options.seed + static_cast<std::uint64_t>(trial));
    reps = build_symmetries(eps).verify_dense(eps);
  }
  out.push_back({"matmodel", "symmetry_relations", reps, "50 draws, n <= 6"});

  const FockConfig cfg = FockConfig::orthonormal(1, 4);
  const FreeHaarBackend pure(4);
  struct Case {
    std::string name;
    Rational q;
    int length;
  };
  const std::vector<Case> cases{{"s^2 Q=1/2", Rational(1, 2), 2}, {"s^4 Q=-1", Rational(-1), 4},
                                {"s^4 Q=0", Rational(0), 4},     {"s^4 Q=1/2", Rational(1, 2), 4},
                                {"s^4 Q=1", Rational(1), 4}};
  MCOptions mc;
  mc.copies = 8;
  mc.samples = options.mc_samples;
  mc.seed = options.seed;
  mc.jobs = options.jobs;
  for (const auto& c : cases) {
    RationalMatrix q(1, 1);
    q(0, 0) = c.q;
    const GeneratorWord w = pure_word(pure, std::vector<HVector>(static_cast<std::size_t>(c.length), HVector{1}));
    const MCEstimate est = mc_moment(w, q, cfg, mc);
    const double exact_n = to_double(matrix_model_expectation(w, q, cfg, mc.copies));
    const double z_n = (est.mean - exact_n) / est.stderr_;
    std::ostringstream d;
    d << "mean " << est.mean << " stderr " << est.stderr_ << " finite-n expectation " << exact_n << " z " << z_n
      << " | limit " << est.target << " z " << est.z;
    out.push_back({"matmodel", c.name, std::abs(z_n) <= 3.0, d.str()});
  }
  RationalMatrix q2 = RationalMatrix::from_rows({{Rational(0), Rational(1, 2)}, {Rational(1, 2), Rational(0)}});
  GeneratorWord colored = pure_word(pure, std::vector<HVector>(4, HVector{1}));
  for (int i = 0; i < 4; ++i) colored[i].color = i % 2;
  const MCEstimate est = mc_moment(colored, q2, cfg, mc);
  const double exact_n = to_double(matrix_model_expectation(colored, q2, cfg, mc.copies));
  const double z_n = (est.mean - exact_n) / est.stderr_;
  std::ostringstream d;
  d << "mean " << est.mean << " stderr " << est.stderr_ << " finite-n expectation " << exact_n << " z " << z_n
    << " | limit " << est.target << " z " << est.z;
  out.push_back({"matmodel", "colors (1,2,1,2) Q12=1/2", std::abs(z_n) <= 3.0, d.str()});
}

}  // namespace

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& options) {
  std::vector<CheckResult> out;
  const bool all = suite == "all";
  if (!all && suite != "oracle" && suite != "axioms" && suite != "semigroup" && suite != "matmodel") {
    throw InvalidArgument("unknown suite '" + suite + "' (oracle, axioms, semigroup, matmodel, all)");
  }
  if (all || suite == "oracle") oracle_suite(out);
  if (all || suite == "axioms") axiom_suite(out);
  if (all || suite == "semigroup") semigroup_suite(out);
  if (all || suite == "matmodel") matmodel_suite(out, options);
  return out;
}

}  // namespace qgauss
