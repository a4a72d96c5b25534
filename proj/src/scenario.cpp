#include "qgauss/scenario.hpp"

#include <algorithm>
#include <fstream>

#include "qgauss/errors.hpp"

namespace qgauss {

namespace {

using nlohmann::json;

Rational rational_from_json(const json& j, const std::string& where) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw InvalidArgument(where + ": rationals are written as \"p/q\" strings or integers");
}

int int_field(const json& j, const char* key, int fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number_integer()) throw InvalidArgument(std::string("'") + key + "' must be an integer");
  return j.at(key).get<int>();
}

}  // namespace

FiniteTracialAlgebra parse_algebra(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "scalars") return FiniteTracialAlgebra::scalars();
    throw InvalidArgument("unknown algebra '" + j.get<std::string>() + "'");
  }
  if (!j.is_object()) throw InvalidArgument("algebra must be a name or an object");
  if (j.contains("cyclic")) return FiniteTracialAlgebra::group_algebra(cyclic_group(j.at("cyclic").get<int>()));
  if (j.contains("symmetric_group")) {
    const int n = j.at("symmetric_group").get<int>();
    if (n < 1 || n > 8) throw InvalidArgument("symmetric_group needs 1 <= n <= 8");
    return FiniteTracialAlgebra::group_algebra(symmetric_group(n));
  }
  if (j.contains("tensor")) {
    const auto& parts = j.at("tensor");
    if (!parts.is_array() || parts.size() != 2) throw InvalidArgument("tensor algebra needs two factors");
    return tensor_algebra(parse_algebra(parts[0]), parse_algebra(parts[1]));
  }
  if (j.contains("cayley")) {
    auto table = j.at("cayley").get<std::vector<std::vector<int>>>();
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return FiniteTracialAlgebra::group_algebra(cayley_group(std::move(table), std::move(labels)));
  }
  throw InvalidArgument("algebra object needs one of cyclic, symmetric_group, tensor, cayley");
}

std::shared_ptr<CopiesBackend> make_backend(const json& j) {
  if (!j.is_object() || !j.contains("kind")) throw InvalidArgument("backend needs a 'kind'");
  const std::string kind = j.at("kind").get<std::string>();
  const int window = int_field(j, "window", 4);
  std::shared_ptr<CopiesBackend> backend;
  if (kind == "free_haar") {
    backend = std::make_shared<FreeHaarBackend>(window);
  } else if (kind == "perm_group") {
    backend = std::make_shared<PermGroupBackend>(int_field(j, "d", 1), window);
  } else if (kind == "tensor") {
    const FiniteTracialAlgebra b = j.contains("B") ? parse_algebra(j.at("B")) : FiniteTracialAlgebra::scalars();
    if (!j.contains("C")) throw InvalidArgument("tensor backend needs 'C'");
    backend = std::make_shared<TensorBackend>(b, parse_algebra(j.at("C")), window);
  } else {
    throw InvalidArgument("unknown backend kind '" + kind + "' (free_haar, perm_group, tensor)");
  }
  if (j.contains("S")) {
    std::vector<Element> s;
    for (const auto& e : j.at("S")) s.push_back(parse_element(*backend, e));
    if (std::find(s.begin(), s.end(), backend->unit()) == s.end()) s.insert(s.begin(), backend->unit());
    backend->set_generators(std::move(s));
  }
  return backend;
}

Element parse_element(const CopiesBackend& backend, const json& j) {
  if (j.is_string()) return backend.parse_basis(j.get<std::string>());
  if (j.is_array()) {
    Element acc;
    for (const auto& t : j) {
      if (!t.is_object() || !t.contains("basis")) throw InvalidArgument("element terms look like {coeff, basis}");
      const Rational c = t.contains("coeff") ? rational_from_json(t.at("coeff"), "coeff") : Rational(1);
      acc += c * backend.parse_basis(t.at("basis").get<std::string>());
    }
    return acc;
  }
  throw InvalidArgument("element must be a basis label or a list of {coeff, basis}");
}

GeneratorWord parse_word(const CopiesBackend& backend, const json& j, int dim_h) {
  if (!j.is_array()) throw InvalidArgument("a word is a list of letters");
  GeneratorWord word;
  for (const auto& l : j) {
    Letter letter;
    letter.coeff = l.contains("coeff") ? parse_element(backend, l.at("coeff")) : backend.unit();
    if (l.contains("vector")) {
      for (const auto& v : l.at("vector")) letter.vec.push_back(rational_from_json(v, "vector"));
    } else {
      letter.vec.assign(static_cast<std::size_t>(dim_h), Rational(0));
      letter.vec[0] = 1;
    }
    letter.color = int_field(l, "color", 1) - 1;
    word.push_back(std::move(letter));
  }
  return word;
}

RationalMatrix parse_matrix(const json& j) {
  if (!j.is_array() || j.empty()) throw InvalidArgument("matrix must be a nonempty list of rows");
  std::vector<std::vector<Rational>> rows;
  for (const auto& r : j) {
    std::vector<Rational> row;
    for (const auto& v : r) row.push_back(rational_from_json(v, "matrix entry"));
    if (!rows.empty() && row.size() != rows.front().size()) throw InvalidArgument("matrix rows differ in length");
    rows.push_back(std::move(row));
  }
  return RationalMatrix::from_rows(rows);
}

Scenario load_scenario(const json& j) {
  Scenario sc;
  if (j.contains("caps")) sc.limits.max_ground_set = int_field(j.at("caps"), "max_ground_set", sc.limits.max_ground_set);
  sc.backend = make_backend(j.contains("backend") ? j.at("backend") : json{{"kind", "free_haar"}});

  const json fock = j.contains("fock") ? j.at("fock") : json::object();
  const int dim = int_field(fock, "dim", 1);
  RationalMatrix inner = fock.contains("inner") ? parse_matrix(fock.at("inner")) : RationalMatrix::identity(dim);
  if (static_cast<int>(inner.rows()) != dim) throw InvalidArgument("fock.inner does not match fock.dim");
  sc.fock.emplace(inner, int_field(fock, "max_degree", 6));

  if (j.contains("words"))
    for (const auto& w : j.at("words")) sc.words.push_back(parse_word(*sc.backend, w, dim));
  if (j.contains("partitions")) {
    const auto& parts = j.at("partitions");
    if (!parts.is_array() || parts.size() != sc.words.size()) {
      throw InvalidArgument("'partitions' needs one block list per word");
    }
    for (std::size_t w = 0; w < parts.size(); ++w) {
      auto blocks = parts[w].get<std::vector<std::vector<int>>>();
      for (auto& b : blocks)
        for (int& x : b) --x;
      sc.partitions.push_back(Partition12::from_blocks(static_cast<int>(sc.words[w].size()), blocks));
    }
  } else {
    for (const auto& w : sc.words) sc.partitions.emplace_back(static_cast<int>(w.size()), std::vector<Pair>{});
  }
  if (j.contains("c"))
    for (const auto& c : j.at("c")) sc.c_values.push_back(rational_from_json(c, "c"));
  if (j.contains("q"))
    for (const auto& q : j.at("q")) sc.q_values.push_back(rational_from_json(q, "q"));
  if (j.contains("q_matrix")) sc.q_matrix = parse_matrix(j.at("q_matrix"));
  if (j.contains("n")) sc.finite_n = j.at("n").get<std::vector<int>>();
  if (j.contains("seed")) sc.seed = j.at("seed").get<std::uint64_t>();

  if (j.contains("dims")) {
    const auto& d = j.at("dims");
    sc.dims_k_max = int_field(d, "k_max", sc.dims_k_max);
    sc.dims_extra = int_field(d, "extra", sc.dims_extra);
    sc.dims_dim_h = int_field(d, "dim_h", dim);
    if (d.contains("sandwich"))
      for (const auto& e : d.at("sandwich")) sc.span.sandwich.push_back(parse_element(*sc.backend, e));
    if (d.contains("right_b_closure")) sc.span.right_b_closure = d.at("right_b_closure").get<bool>();
  } else {
    sc.dims_dim_h = dim;
  }
  sc.span.limits = sc.limits;
  if (j.contains("mc")) {
    sc.mc_copies = int_field(j.at("mc"), "copies", sc.mc_copies);
    sc.mc_samples = static_cast<std::size_t>(int_field(j.at("mc"), "samples", static_cast<int>(sc.mc_samples)));
  }
  return sc;
}

Scenario load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open scenario file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InvalidArgument("scenario '" + path + "' is not valid JSON: " + e.what());
  }
  return load_scenario(j);
}

}  // namespace qgauss
