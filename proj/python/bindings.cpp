#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mpinv/error.hpp"
#include "mpinv/io.hpp"
#include "mpinv/linalg.hpp"
#include "mpinv/solver.hpp"

namespace py = pybind11;
using namespace mpinv;

namespace {

// Scalars cross the boundary as exact strings; anything whose str() parses is accepted.
Scalar to_scalar(const py::handle& h) { return Scalar::parse(py::str(h).cast<std::string>()); }

Matrix to_matrix(const py::handle& rows) {
  std::vector<std::vector<Scalar>> data;
  for (const auto& row : rows) {
    std::vector<Scalar> r;
    for (const auto& x : row) r.push_back(to_scalar(x));
    data.push_back(std::move(r));
  }
  const std::size_t cols = data.empty() ? 0 : data[0].size();
  Matrix m(data.size(), cols);
  for (std::size_t r = 0; r < data.size(); ++r) {
    if (data[r].size() != cols) throw DimensionError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = data[r][c];
  }
  return m;
}

py::list from_matrix(const Matrix& m) {
  py::list rows;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    py::list row;
    for (std::size_t c = 0; c < m.cols(); ++c) row.append(m(r, c).to_string());
    rows.append(row);
  }
  return rows;
}

SparseVector to_vector(const py::handle& h) {
  std::vector<SparseVector::Entry> entries;
  if (py::isinstance<py::dict>(h)) {
    for (const auto& [k, v] : h.cast<py::dict>()) entries.emplace_back(k.cast<std::size_t>(), to_scalar(v));
  } else {
    for (const auto& pair : h) {
      const auto t = pair.cast<py::sequence>();
      entries.emplace_back(t[0].cast<std::size_t>(), to_scalar(t[1]));
    }
  }
  return SparseVector(std::move(entries));
}

py::dict from_vector(const SparseVector& v) {
  py::dict d;
  for (const auto& [i, s] : v.entries()) d[py::int_(i)] = s.to_string();
  return d;
}

GramForm gram_or_identity(const py::object& g, std::size_t dim) {
  return g.is_none() ? GramForm::identity(dim) : GramForm(to_matrix(g));
}

InvariantDecomposition to_decomposition(const py::handle& parts, std::size_t n) {
  std::vector<Subspace> subspaces;
  for (const auto& part : parts) {
    std::vector<SparseVector> vs;
    for (const auto& v : part) vs.push_back(to_vector(v));
    Matrix basis(n, vs.size());
    for (std::size_t k = 0; k < vs.size(); ++k) {
      if (vs[k].max_index() > n) throw DimensionError("part vector exceeds the ambient dimension");
      basis.set_column(k, vs[k].to_dense(n));
    }
    subspaces.push_back(Subspace::from_basis(std::move(basis)));
  }
  return InvariantDecomposition(std::move(subspaces));
}

py::dict penrose_dict(const PenroseReport& r) {
  py::dict d;
  d["axa"] = r.axa;
  d["xax"] = r.xax;
  d["ax_selfadjoint"] = r.ax_selfadjoint;
  d["xa_selfadjoint"] = r.xa_selfadjoint;
  d["reflexive"] = r.reflexive();
  d["moore_penrose"] = r.all();
  return d;
}

py::list subspace_list(const std::vector<SparseVector>& vs) {
  py::list out;
  for (const auto& v : vs) out.append(from_vector(v));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Moore-Penrose inverses over Gaussian rationals";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<Error>(m, "Error", PyExc_ArithmeticError);

  m.def("parse_scalar", [](const std::string& s) { return Scalar::parse(s).to_string(); });
  m.def("rank", [](const py::object& a) { return rank(to_matrix(a)); });
  m.def("mp_inverse", [](const py::object& a) { return from_matrix(mp_inverse(to_matrix(a))); });
  m.def(
      "mp_inverse_geometric",
      [](const py::object& a, const py::object& gv, const py::object& gw) {
        const Matrix am = to_matrix(a);
        return from_matrix(
            mp_inverse_geometric(am, gram_or_identity(gv, am.cols()), gram_or_identity(gw, am.rows())));
      },
      py::arg("a"), py::arg("gram_domain") = py::none(), py::arg("gram_codomain") = py::none());
  m.def(
      "verify_penrose",
      [](const py::object& a, const py::object& x, const py::object& gv, const py::object& gw) {
        const Matrix am = to_matrix(a);
        return penrose_dict(verify_penrose(am, to_matrix(x), gram_or_identity(gv, am.cols()),
                                           gram_or_identity(gw, am.rows())));
      },
      py::arg("a"), py::arg("x"), py::arg("gram_domain") = py::none(),
      py::arg("gram_codomain") = py::none());
  m.def(
      "blockwise_rgi",
      [](const py::object& a, const py::object& parts, const py::object& g) {
        const Matrix am = to_matrix(a);
        return from_matrix(blockwise_rgi(am, to_decomposition(parts, am.rows()),
                                         gram_or_identity(g, am.rows())));
      },
      py::arg("a"), py::arg("parts"), py::arg("gram") = py::none());
  m.def(
      "char_conditions",
      [](const py::object& a, const py::object& parts, const py::object& g) {
        const Matrix am = to_matrix(a);
        const auto c = char_conditions(am, to_decomposition(parts, am.rows()),
                                       gram_or_identity(g, am.rows()));
        return py::make_tuple(c.image_condition, c.kernel_condition);
      },
      py::arg("a"), py::arg("parts"), py::arg("gram") = py::none());

  py::class_<BlockOperator>(m, "BlockOperator")
      .def(py::init([](const py::object& head, const py::object& tail) {
             std::vector<Matrix> blocks;
             for (const auto& b : head) blocks.push_back(to_matrix(b));
             return BlockOperator(std::move(blocks), to_matrix(tail));
           }),
           py::arg("head_blocks"), py::arg("tail_block"))
      .def_static("from_json",
                  [](const std::string& text) { return io::read_operator(io::parse(text, "operator")); })
      .def("to_json", [](const BlockOperator& op) { return io::dump(io::operator_document(op)); })
      .def_property_readonly("head_blocks",
                             [](const BlockOperator& op) {
                               py::list out;
                               for (const auto& b : op.head_blocks()) out.append(from_matrix(b));
                               return out;
                             })
      .def_property_readonly("tail_block",
                             [](const BlockOperator& op) { return from_matrix(op.tail_block()); })
      .def("apply", [](const BlockOperator& op, const py::object& x) {
        return from_vector(apply(op, to_vector(x)));
      })
      .def("pinv", [](const BlockOperator& op) { return mp_inverse(op); })
      .def("compose", [](const BlockOperator& a, const BlockOperator& b) { return compose(a, b); })
      .def("truncate", [](const BlockOperator& op, std::size_t k) { return from_matrix(truncate(op, k)); })
      .def("is_finite_potent", &is_finite_potent)
      .def("solve",
           [](const BlockOperator& op, const py::object& w) {
             const SolveReport r = solve(op, to_vector(w));
             py::dict d;
             d["consistent"] = r.consistent;
             d["min_solution"] = from_vector(r.min_solution);
             d["residual_norm_sq"] = r.residual_norm_sq.get_str();
             d["kernel_head"] = subspace_list(r.kernel.head_vectors());
             d["kernel_tail_pattern"] = subspace_list(r.kernel.tail_vectors(0));
             return d;
           })
      .def("__eq__", [](const BlockOperator& a, const BlockOperator& b) { return a == b; });
}
