#include "mpinv/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "mpinv/error.hpp"

namespace mpinv::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

const Json& field(const Json& doc, const char* name, const std::string& where) {
  if (!doc.is_object()) fail(where, "expected an object");
  auto it = doc.find(name);
  if (it == doc.end()) fail(where, std::string("missing field \"") + name + "\"");
  return *it;
}

std::string at(const std::string& where, std::size_t k) {
  return where + "[" + std::to_string(k) + "]";
}

std::size_t vector_bound(const SparseVector& v) { return v.max_index(); }

}  // namespace

Json to_json(const Scalar& s) { return s.to_string(); }

Json to_json(const SparseVector& v) {
  Json arr = Json::array();
  for (const auto& [index, value] : v.entries()) arr.push_back(Json::array({index, value.to_string()}));
  return arr;
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const Subspace& s) {
  Json arr = Json::array();
  for (const auto& v : s.vectors()) arr.push_back(to_json(v));
  return arr;
}

Json to_json(const BlockSubspaces& d) {
  Json head = Json::array();
  for (const auto& s : d.head) head.push_back(to_json(s));
  return Json{{"head", std::move(head)},
              {"tail_pattern", to_json(d.tail)},
              {"tail_start", d.head_dim + 1},
              {"tail_period", d.tail.ambient_dim()}};
}

Json matrix_document(const Matrix& m) { return Json{{"kind", "matrix"}, {"matrix", to_json(m)}}; }

Json operator_document(const BlockOperator& op) {
  Json head = Json::array();
  for (const auto& b : op.head_blocks()) head.push_back(to_json(b));
  return Json{{"kind", "block_operator"},
              {"head_blocks", std::move(head)},
              {"tail_block", to_json(op.tail_block())}};
}

Json vector_document(const SparseVector& v) {
  return Json{{"kind", "vector"}, {"entries", to_json(v)}};
}

Json decomposition_document(const InvariantDecomposition& d) {
  Json parts = Json::array();
  for (const auto& p : d.parts()) parts.push_back(to_json(p));
  return Json{{"kind", "decomposition"}, {"ambient_dim", d.ambient_dim()}, {"parts", parts}};
}

Json gram_document(const GramForm& g) {
  return Json{{"kind", "gram"}, {"matrix", to_json(g.matrix())}};
}

Json solve_report_document(const SolveReport& r) {
  return Json{{"kind", "solve_report"},
              {"consistent", r.consistent},
              {"min_solution", to_json(r.min_solution)},
              {"residual_norm_sq", r.residual_norm_sq.get_str()},
              {"kernel", to_json(r.kernel)}};
}

Json penrose_document(const PenroseReport& r) {
  return Json{{"kind", "penrose_report"},
              {"axa", r.axa},
              {"xax", r.xax},
              {"ax_selfadjoint", r.ax_selfadjoint},
              {"xa_selfadjoint", r.xa_selfadjoint},
              {"reflexive", r.reflexive()},
              {"moore_penrose", r.all()}};
}

Scalar scalar_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (!j.is_string()) fail(where, "expected a scalar string");
  try {
    return Scalar::parse(j.get<std::string>());
  } catch (const ParseError& e) {
    fail(where, e.what());
  }
}

SparseVector vector_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected a list of [index, scalar] pairs");
  std::vector<SparseVector::Entry> entries;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const Json& pair = j[k];
    if (!pair.is_array() || pair.size() != 2) fail(at(where, k), "expected [index, scalar]");
    if (!pair[0].is_number_unsigned() || pair[0].get<std::size_t>() == 0) {
      fail(at(where, k) + "[0]", "index must be a positive integer");
    }
    const auto index = pair[0].get<std::size_t>();
    if (!entries.empty() && entries.back().first >= index) {
      fail(at(where, k) + "[0]", "indices must be strictly increasing");
    }
    entries.emplace_back(index, scalar_from_json(pair[1], at(where, k) + "[1]"));
  }
  return SparseVector(std::move(entries));
}

Matrix matrix_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) fail(where, "expected a non-empty array of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty()) fail(at(where, 0), "expected a non-empty row");
  const std::size_t cols = j[0].size();
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) {
      fail(at(where, r), "row length differs from " + std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_from_json(j[r][c], at(at(where, r), c));
  }
  return m;
}

std::string kind_of(const Json& doc) {
  if (!doc.is_object()) return "";
  auto it = doc.find("kind");
  return (it != doc.end() && it->is_string()) ? it->get<std::string>() : "";
}

namespace {

void expect_kind(const Json& doc, const char* kind) {
  const std::string k = kind_of(doc);
  if (k != kind) {
    fail("kind", std::string("expected \"") + kind + "\", found \"" + k + "\"");
  }
}

}  // namespace

Matrix read_matrix(const Json& doc) {
  expect_kind(doc, "matrix");
  return matrix_from_json(field(doc, "matrix", "document"), "matrix");
}

BlockOperator read_operator(const Json& doc) {
  expect_kind(doc, "block_operator");
  const Json& head = field(doc, "head_blocks", "document");
  if (!head.is_array()) fail("head_blocks", "expected a list of matrices");
  std::vector<Matrix> blocks;
  for (std::size_t k = 0; k < head.size(); ++k) {
    blocks.push_back(matrix_from_json(head[k], at("head_blocks", k)));
    if (!blocks.back().is_square()) fail(at("head_blocks", k), "block is not square");
  }
  Matrix tail = matrix_from_json(field(doc, "tail_block", "document"), "tail_block");
  if (!tail.is_square()) fail("tail_block", "block is not square");
  return {std::move(blocks), std::move(tail)};
}

SparseVector read_vector(const Json& doc) {
  if (doc.is_array()) return vector_from_json(doc, "vector");
  expect_kind(doc, "vector");
  return vector_from_json(field(doc, "entries", "document"), "entries");
}

GramForm read_gram(const Json& doc) {
  const Matrix m = doc.is_array() ? matrix_from_json(doc, "gram")
                                  : (expect_kind(doc, "gram"),
                                     matrix_from_json(field(doc, "matrix", "document"), "matrix"));
  return GramForm(m);
}

InvariantDecomposition read_decomposition(const Json& doc, std::size_t ambient_dim) {
  const Json* parts = &doc;
  std::string where = "parts";
  if (!doc.is_array()) {
    expect_kind(doc, "decomposition");
    parts = &field(doc, "parts", "document");
    auto it = doc.find("ambient_dim");
    if (it != doc.end() && (!it->is_number_unsigned() || it->get<std::size_t>() != ambient_dim)) {
      fail("ambient_dim", "does not match the operator dimension " + std::to_string(ambient_dim));
    }
  }
  if (!parts->is_array() || parts->empty()) fail(where, "expected a non-empty list of parts");
  std::vector<Subspace> subspaces;
  for (std::size_t p = 0; p < parts->size(); ++p) {
    const Json& part = (*parts)[p];
    if (!part.is_array() || part.empty()) fail(at(where, p), "expected a non-empty list of vectors");
    Matrix basis(ambient_dim, part.size());
    for (std::size_t k = 0; k < part.size(); ++k) {
      const auto v = vector_from_json(part[k], at(at(where, p), k));
      if (vector_bound(v) > ambient_dim) {
        fail(at(at(where, p), k), "index exceeds ambient dimension " + std::to_string(ambient_dim));
      }
      basis.set_column(k, v.to_dense(ambient_dim));
    }
    if (rank(basis) != basis.cols()) fail(at(where, p), "part vectors are linearly dependent");
    subspaces.push_back(Subspace::from_basis(std::move(basis)));
  }
  return InvariantDecomposition(std::move(subspaces));
}

Json parse(std::string_view text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // nlohmann reports "at line L, column C" in what().
    throw ParseError(source + ": " + e.what());
  }
}

Json read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path.string());
}

void write_file(const std::filesystem::path& path, const Json& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError(path.string() + ": cannot write file");
  out << dump(doc);
  if (!out) throw ParseError(path.string() + ": write failed");
}

namespace {

bool is_flat(const Json& j) {
  return std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
}

// Arrays of scalars and sparse-vector entry lists stay on one line so that
// matrix rows and vectors read naturally.
bool is_inline(const Json& j) {
  if (!j.is_array()) return j.is_primitive();
  if (is_flat(j)) return true;
  return std::all_of(j.begin(), j.end(),
                     [](const Json& e) { return e.is_array() && e.size() <= 2 && is_flat(e); });
}

void write(std::ostream& os, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  if (is_inline(j)) {
    os << j.dump();
  } else if (j.is_array()) {
    os << "[\n";
    for (std::size_t k = 0; k < j.size(); ++k) {
      os << inner;
      write(os, j[k], indent + 1);
      os << (k + 1 < j.size() ? ",\n" : "\n");
    }
    os << pad << ']';
  } else if (j.empty()) {
    os << "{}";
  } else {
    os << "{\n";
    std::size_t k = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++k) {
      os << inner << Json(it.key()).dump() << ": ";
      write(os, it.value(), indent + 1);
      os << (k + 1 < j.size() ? ",\n" : "\n");
    }
    os << pad << '}';
  }
}

}  // namespace

std::string dump(const Json& doc) {
  std::ostringstream os;
  write(os, doc, 0);
  os << '\n';
  return os.str();
}

}  // namespace mpinv::io
