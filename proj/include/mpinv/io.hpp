#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"
#include "mpinv/block_operator.hpp"
#include "mpinv/decomposition.hpp"
#include "mpinv/gram_form.hpp"
#include "mpinv/linalg.hpp"
#include "mpinv/matrix.hpp"
#include "mpinv/solver.hpp"
#include "mpinv/sparse_vector.hpp"

// JSON file formats. Scalars are always exact strings ("1/2", "1/2-1/3*i");
// on input plain JSON integers are accepted too. Every reader takes a
// `where` path used to name the offending field in ParseError messages.
namespace mpinv::io {

using Json = nlohmann::ordered_json;

Json to_json(const Scalar& s);
Json to_json(const SparseVector& v);       // [[index, "scalar"], ...]
Json to_json(const Matrix& m);             // [["a", "b"], ["c", "d"]]
Json to_json(const Subspace& s);           // list of vectors
Json to_json(const BlockSubspaces& d);

/// Complete documents carrying a "kind" field.
Json matrix_document(const Matrix& m);
Json operator_document(const BlockOperator& op);
Json vector_document(const SparseVector& v);
Json decomposition_document(const InvariantDecomposition& d);
Json gram_document(const GramForm& g);
Json solve_report_document(const SolveReport& r);
Json penrose_document(const PenroseReport& r);

Scalar scalar_from_json(const Json& j, const std::string& where);
SparseVector vector_from_json(const Json& j, const std::string& where);
Matrix matrix_from_json(const Json& j, const std::string& where);

/// Accepts a full document or, where noted, a bare payload.
Matrix read_matrix(const Json& doc);             // kind "matrix"
BlockOperator read_operator(const Json& doc);    // kind "block_operator"
SparseVector read_vector(const Json& doc);       // kind "vector" or bare list
GramForm read_gram(const Json& doc);             // kind "gram" or bare matrix
/// kind "decomposition" or a bare list of parts; each part a list of vectors.
InvariantDecomposition read_decomposition(const Json& doc, std::size_t ambient_dim);

std::string kind_of(const Json& doc);

Json parse(std::string_view text, const std::string& source);
Json read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const Json& doc);
/// Canonical serialization: two-space indent, trailing newline.
std::string dump(const Json& doc);

}  // namespace mpinv::io
