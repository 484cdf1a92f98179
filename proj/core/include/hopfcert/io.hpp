#pragma once

// JSON encodings. Field elements are arrays of k integers (coefficients over the prime
// field, constant term first); plain integers are accepted on input as prime-field values.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hopfcert/groups.hpp"
#include "hopfcert/hopf.hpp"
#include "hopfcert/rep.hpp"

namespace hopfcert::io {

using json = nlohmann::json;

json field_to_json(const Field& f);
/// {p, k} with an optional modulus, which must match the canonical one.
Field field_from_json(const json& j);

json elem_to_json(const Field& f, Elem e);
Elem elem_from_json(const Field& f, const json& j);
json vec_to_json(const Field& f, const Vec& v);
Vec vec_from_json(const Field& f, const json& j, std::size_t expected_len);
/// Rows of elements.
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Field& f, const json& j, std::size_t rows, std::size_t cols);

json algebra_to_json(const AlgebraData& a);
AlgebraData algebra_from_json(const json& j);
json hopf_to_json(const HopfData& h);
HopfData hopf_from_json(const json& j);

/// {dim, action: [matrix per algebra basis element]}
json module_to_json(const Module& m);
Module module_from_json(AlgebraPtr algebra, const json& j);

json subspace_to_json(const Subspace& s);
/// "unit", "all", {"labels": [...]}, or {"vectors": [[elements]...]}.
Subspace subspace_from_json(const Hopf& h, const json& j);
/// {"chain": [subspace, ...]}
std::vector<Subspace> series_from_json(const Hopf& h, const json& j);

/// A builtin name or {order, mult, labels}.
GroupTable group_from_json(const json& j);
json group_to_json(const GroupTable& g);
/// {"generators": [labels]}, {"elements": [labels]}, or "commutator".
Subgroup subgroup_from_json(const GroupTable& g, const json& j);

json witness_to_json(const Field& f, const IrreducibilityWitness& w);
json composition_to_json(const CompositionSeries& s);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace hopfcert::io
