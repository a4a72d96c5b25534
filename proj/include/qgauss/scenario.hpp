#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qgauss/copies.hpp"
#include "qgauss/dimensions.hpp"
#include "qgauss/linalg.hpp"
#include "qgauss/moments.hpp"
#include "qgauss/qfock.hpp"

namespace qgauss {

// A batch job read from a JSON document; the schema is documented in README.md.
struct Scenario {
  std::shared_ptr<CopiesBackend> backend;
  std::optional<FockConfig> fock;
  std::vector<GeneratorWord> words;
  // Partition per word for Wick-word commands; all singletons when absent.
  std::vector<Partition12> partitions;
  std::vector<Rational> c_values;
  std::vector<Rational> q_values;
  std::optional<RationalMatrix> q_matrix;
  std::vector<int> finite_n;
  Limits limits = Limits::from_env();
  std::uint64_t seed = 42;

  int dims_k_max = 2;
  int dims_extra = 4;
  int dims_dim_h = 1;
  SpanOptions span;

  int mc_copies = 8;
  std::size_t mc_samples = 2000;
};

// "scalars", {"cyclic": n}, {"symmetric_group": n}, {"tensor": [a, b]},
// {"cayley": [[...]], "labels": [...]}.
FiniteTracialAlgebra parse_algebra(const nlohmann::json& j);

// {"kind": "free_haar" | "perm_group" | "tensor", "window": W, "d": d, "B": .., "C": .., "S": [..]}
std::shared_ptr<CopiesBackend> make_backend(const nlohmann::json& j);

// A basis label string, or a list of {"coeff": "p/q", "basis": label}.
Element parse_element(const CopiesBackend& backend, const nlohmann::json& j);

// List of {"coeff": element, "vector": [..], "color": c}; colors are 1-based in JSON.
GeneratorWord parse_word(const CopiesBackend& backend, const nlohmann::json& j, int dim_h);

RationalMatrix parse_matrix(const nlohmann::json& j);

Scenario load_scenario(const nlohmann::json& j);
Scenario load_scenario_file(const std::string& path);

}  // namespace qgauss
