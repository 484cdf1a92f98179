#include "hopfcert/io.hpp"

#include <fstream>
#include <sstream>

#include "hopfcert/error.hpp"

namespace hopfcert::io {

namespace {

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing key '") + key + "'");
  return j.at(key);
}

std::size_t to_index(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw InvalidInput(std::string("expected index for ") + what);
  return j.get<std::size_t>();
}

}  // namespace

json field_to_json(const Field& f) { return {{"p", f.characteristic()}, {"k", f.degree()}, {"modulus", f.modulus()}}; }

Field field_from_json(const json& j) {
  const auto& p = require(j, "p");
  if (!p.is_number_integer()) throw InvalidInput("field p must be an integer");
  std::uint64_t k = 1;
  if (j.contains("k")) {
    if (!j.at("k").is_number_integer() || j.at("k").get<long long>() < 1) throw InvalidInput("field k must be >= 1");
    k = j.at("k").get<std::uint64_t>();
  }
  if (p.get<long long>() < 2) throw InvalidInput("field p must be a prime");
  Field f = Field::create(p.get<std::uint64_t>(), k);
  if (j.contains("modulus")) {
    const auto& m = j.at("modulus");
    if (!m.is_array()) throw InvalidInput("modulus must be an integer array");
    std::vector<std::uint32_t> coeffs;
    for (const auto& c : m) {
      if (!c.is_number_integer()) throw InvalidInput("modulus must be an integer array");
      coeffs.push_back(c.get<std::uint32_t>());
    }
    if (coeffs != f.modulus()) throw InvalidInput("modulus differs from the canonical modulus of " + f.name());
  }
  return f;
}

json elem_to_json(const Field& f, Elem e) { return f.digits(e); }

Elem elem_from_json(const Field& f, const json& j) {
  if (j.is_number_integer()) {
    const auto v = j.get<long long>();
    if (v < 0 || static_cast<std::uint64_t>(v) >= f.characteristic())
      throw InvalidInput("integer field element must lie in [0, p)");
    return f.from_int(v);
  }
  if (!j.is_array() || j.size() != f.degree()) throw InvalidInput("field element must be an array of k integers");
  std::vector<std::uint32_t> digits;
  for (const auto& c : j) {
    if (!c.is_number_integer() || c.get<long long>() < 0 || c.get<std::uint64_t>() >= f.characteristic())
      throw InvalidInput("field element coefficient out of range");
    digits.push_back(c.get<std::uint32_t>());
  }
  return f.from_digits(digits);
}

json vec_to_json(const Field& f, const Vec& v) {
  json out = json::array();
  for (auto e : v) out.push_back(elem_to_json(f, e));
  return out;
}

Vec vec_from_json(const Field& f, const json& j, std::size_t expected_len) {
  if (!j.is_array() || j.size() != expected_len)
    throw InvalidInput("expected a vector of length " + std::to_string(expected_len));
  Vec v;
  v.reserve(expected_len);
  for (const auto& e : j) v.push_back(elem_from_json(f, e));
  return v;
}

json matrix_to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vec_to_json(m.field(), m.row_vec(r)));
  return out;
}

Matrix matrix_from_json(const Field& f, const json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) throw InvalidInput("expected a matrix with " + std::to_string(rows) + " rows");
  std::vector<Vec> r;
  for (const auto& row : j) r.push_back(vec_from_json(f, row, cols));
  return Matrix::from_rows(f, r, cols);
}

json algebra_to_json(const AlgebraData& a) {
  json sc = json::array();
  for (const auto& s : a.structconst) sc.push_back({s.i, s.j, s.k, elem_to_json(a.field, s.coeff)});
  return {{"field", field_to_json(a.field)},
          {"dim", a.dim},
          {"labels", a.labels},
          {"structconst", sc},
          {"unit", vec_to_json(a.field, a.unit)}};
}

AlgebraData algebra_from_json(const json& j) {
  AlgebraData a;
  a.field = field_from_json(require(j, "field"));
  a.dim = to_index(require(j, "dim"), "dim");
  if (j.contains("labels")) {
    const auto& l = j.at("labels");
    if (!l.is_array()) throw InvalidInput("labels must be an array of strings");
    for (const auto& s : l) {
      if (!s.is_string()) throw InvalidInput("labels must be an array of strings");
      a.labels.push_back(s.get<std::string>());
    }
  } else {
    for (std::size_t i = 0; i < a.dim; ++i) a.labels.push_back("b" + std::to_string(i));
  }
  const auto& sc = require(j, "structconst");
  if (!sc.is_array()) throw InvalidInput("structconst must be an array");
  for (const auto& e : sc) {
    if (!e.is_array() || e.size() != 4) throw InvalidInput("structconst entries are [i, j, k, coeff]");
    a.structconst.push_back(
        {to_index(e[0], "i"), to_index(e[1], "j"), to_index(e[2], "k"), elem_from_json(a.field, e[3])});
  }
  a.unit = vec_from_json(a.field, require(j, "unit"), a.dim);
  return a;
}

json hopf_to_json(const HopfData& h) {
  json out = algebra_to_json(h.algebra);
  const Field& f = h.algebra.field;
  json cop = json::array();
  for (const auto& row : h.coproduct) cop.push_back(vec_to_json(f, row));
  json anti = json::array();
  for (const auto& row : h.antipode) anti.push_back(vec_to_json(f, row));
  out["coproduct"] = cop;
  out["counit"] = vec_to_json(f, h.counit);
  out["antipode"] = anti;
  out["metadata"] = h.metadata;
  return out;
}

HopfData hopf_from_json(const json& j) {
  HopfData h;
  h.algebra = algebra_from_json(j);
  const std::size_t n = h.algebra.dim;
  const Field& f = h.algebra.field;
  const auto& cop = require(j, "coproduct");
  if (!cop.is_array() || cop.size() != n) throw InvalidInput("coproduct must have one row per basis element");
  for (const auto& row : cop) h.coproduct.push_back(vec_from_json(f, row, n * n));
  h.counit = vec_from_json(f, require(j, "counit"), n);
  const auto& anti = require(j, "antipode");
  if (!anti.is_array() || anti.size() != n) throw InvalidInput("antipode must have one row per basis element");
  for (const auto& row : anti) h.antipode.push_back(vec_from_json(f, row, n));
  if (j.contains("metadata")) {
    if (!j.at("metadata").is_object()) throw InvalidInput("metadata must be an object");
    for (const auto& [k, v] : j.at("metadata").items())
      h.metadata[k] = v.is_string() ? v.get<std::string>() : v.dump();
  }
  return h;
}

json module_to_json(const Module& m) {
  json act = json::array();
  for (const auto& a : m.actions()) act.push_back(matrix_to_json(a));
  return {{"dim", m.dim()}, {"action", act}};
}

Module module_from_json(AlgebraPtr algebra, const json& j) {
  const std::size_t d = to_index(require(j, "dim"), "dim");
  const auto& act = require(j, "action");
  if (!act.is_array() || act.size() != algebra->dim())
    throw InvalidInput("module needs one action matrix per algebra basis element");
  std::vector<Matrix> mats;
  for (const auto& m : act) mats.push_back(matrix_from_json(algebra->field(), m, d, d));
  return Module::validate(std::move(algebra), std::move(mats));
}

json subspace_to_json(const Subspace& s) {
  json v = json::array();
  for (const auto& b : s.basis()) v.push_back(vec_to_json(s.field(), b));
  return {{"vectors", v}};
}

Subspace subspace_from_json(const Hopf& h, const json& j) {
  const std::size_t n = h.dim();
  const Field& f = h.field();
  if (j.is_string()) {
    if (j == "unit") return Subspace::span(f, n, {h.algebra().unit()});
    if (j == "all") return Subspace::whole(f, n);
    throw InvalidInput("subspace keyword must be 'unit' or 'all'");
  }
  if (!j.is_object()) throw InvalidInput("subspace must be 'unit', 'all', {labels} or {vectors}");
  Subspace s(f, n);
  if (j.contains("labels")) {
    const auto& labels = h.labels();
    for (const auto& l : j.at("labels")) {
      if (!l.is_string()) throw InvalidInput("labels must be strings");
      const auto it = std::find(labels.begin(), labels.end(), l.get<std::string>());
      if (it == labels.end()) throw InvalidInput("unknown basis label '" + l.get<std::string>() + "'");
      s.insert(unit_vector(n, static_cast<std::size_t>(it - labels.begin())));
    }
    return s;
  }
  if (j.contains("vectors")) {
    if (!j.at("vectors").is_array()) throw InvalidInput("vectors must be an array");
    for (const auto& v : j.at("vectors")) s.insert(vec_from_json(f, v, n));
    return s;
  }
  throw InvalidInput("subspace object needs 'labels' or 'vectors'");
}

std::vector<Subspace> series_from_json(const Hopf& h, const json& j) {
  const auto& chain = require(j, "chain");
  if (!chain.is_array() || chain.empty()) throw InvalidInput("chain must be a nonempty array");
  std::vector<Subspace> out;
  for (const auto& s : chain) out.push_back(subspace_from_json(h, s));
  return out;
}

GroupTable group_from_json(const json& j) {
  if (j.is_string()) return builtin_group(j.get<std::string>());
  const auto& mult = require(j, "mult");
  if (!mult.is_array()) throw InvalidInput("mult must be an n x n index table");
  std::vector<std::vector<std::size_t>> t;
  for (const auto& row : mult) {
    if (!row.is_array()) throw InvalidInput("mult must be an n x n index table");
    std::vector<std::size_t> r;
    for (const auto& e : row) r.push_back(to_index(e, "mult entry"));
    t.push_back(std::move(r));
  }
  if (j.contains("order") && to_index(j.at("order"), "order") != t.size())
    throw InvalidInput("order does not match the table size");
  std::vector<std::string> labels;
  if (j.contains("labels"))
    for (const auto& l : j.at("labels")) labels.push_back(l.get<std::string>());
  return GroupTable::from_table(std::move(t), std::move(labels), j.value("name", ""));
}

json group_to_json(const GroupTable& g) {
  return {{"order", g.order()}, {"mult", g.table()}, {"labels", g.labels()}, {"name", g.name()}};
}

Subgroup subgroup_from_json(const GroupTable& g, const json& j) {
  if (j.is_string()) {
    if (j == "commutator") return commutator_subgroup(g);
    if (j == "all") return generated_subgroup(g, [&] {
        std::vector<std::size_t> all(g.order());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        return all;
      }());
    if (j == "trivial") return generated_subgroup(g, {});
    throw InvalidInput("subgroup keyword must be 'commutator', 'all' or 'trivial'");
  }
  auto indices = [&](const json& arr) {
    std::vector<std::size_t> out;
    if (!arr.is_array()) throw InvalidInput("subgroup element lists must be arrays");
    for (const auto& e : arr) out.push_back(e.is_string() ? g.index_of(e.get<std::string>()) : to_index(e, "element"));
    return out;
  };
  if (j.is_object() && j.contains("generators")) return generated_subgroup(g, indices(j.at("generators")));
  if (j.is_object() && j.contains("elements")) return make_subgroup(g, indices(j.at("elements")));
  throw InvalidInput("subgroup must be 'commutator', {generators} or {elements}");
}

json witness_to_json(const Field& f, const IrreducibilityWitness& w) {
  json out = {{"kind", to_string(w.kind)}, {"attempts", w.attempts}};
  if (!w.element.empty()) out["element"] = vec_to_json(f, w.element);
  if (!w.factor.empty()) out["factor"] = vec_to_json(f, w.factor);
  if (!w.null_vector.empty()) out["null_vector"] = vec_to_json(f, w.null_vector);
  if (!w.dual_vector.empty()) out["dual_vector"] = vec_to_json(f, w.dual_vector);
  if (w.submodule) out["submodule"] = subspace_to_json(*w.submodule)["vectors"];
  return out;
}

json composition_to_json(const CompositionSeries& s) {
  json factors = json::array();
  for (const auto& f : s.factors) {
    json m = module_to_json(f.module);
    factors.push_back({{"label", f.label},
                       {"dim", f.dim()},
                       {"multiplicity", f.multiplicity},
                       {"action", m["action"]},
                       {"witness", witness_to_json(f.module.field(), f.witness)}});
  }
  return {{"module_dim", s.module_dim}, {"factors", factors}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidInput("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write '" + path + "'");
  out << text;
}

}  // namespace hopfcert::io
