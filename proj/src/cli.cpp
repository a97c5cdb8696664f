#include "mpinv/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "mpinv/error.hpp"
#include "mpinv/io.hpp"

namespace mpinv::cli {

namespace {

using io::Json;

enum class Format { kText, kMachine };

struct Options {
  std::string out_path;
  std::string format;
  std::vector<std::string> inputs;
  std::string gram_path;
  std::string gram_codomain_path;
  std::size_t tail_copies = 0;
};

Format resolve_format(const Options& opt, Format fallback) {
  if (opt.format.empty()) return fallback;
  return opt.format == "machine" ? Format::kMachine : Format::kText;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string vector_text(const SparseVector& v) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [index, value] : v.entries()) {
    os << (first ? "" : ", ") << index << ": " << value;
    first = false;
  }
  os << '}';
  return os.str();
}

std::string span_text(const std::vector<SparseVector>& vs) {
  std::string s = "<";
  for (std::size_t k = 0; k < vs.size(); ++k) s += (k ? ", " : "") + vector_text(vs[k]);
  return s + ">";
}

std::string matrix_text(const Matrix& m, const std::string& indent = "  ") {
  std::vector<std::size_t> width(m.cols(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      width[c] = std::max(width[c], m(r, c).to_string().size());
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << indent;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const std::string s = m(r, c).to_string();
      os << (c ? "  " : "") << std::string(width[c] - s.size(), ' ') << s;
    }
    os << '\n';
  }
  return os.str();
}

std::string operator_text(const BlockOperator& op) {
  std::ostringstream os;
  os << "block_operator: " << op.head_blocks().size() << " head block(s), tail size "
     << op.tail_size() << '\n';
  for (std::size_t j = 0; j < op.head_blocks().size(); ++j) {
    const auto& b = op.head_blocks()[j];
    os << "head block " << j + 1 << " (coordinates " << op.block_offset(j) + 1 << ".."
       << op.block_offset(j) + b.rows() << "):\n"
       << matrix_text(b);
  }
  os << "tail block (coordinates " << op.head_dim() + 1 << ".. repeating every "
     << op.tail_size() << "):\n"
     << matrix_text(op.tail_block());
  return os.str();
}

std::string penrose_text(const PenroseReport& r) {
  std::ostringstream os;
  os << "AXA=A: " << yes_no(r.axa) << '\n'
     << "XAX=X: " << yes_no(r.xax) << '\n'
     << "(AX)*=AX: " << yes_no(r.ax_selfadjoint) << '\n'
     << "(XA)*=XA: " << yes_no(r.xa_selfadjoint) << '\n'
     << "reflexive: " << yes_no(r.reflexive()) << '\n'
     << "moore_penrose: " << yes_no(r.all()) << '\n';
  return os.str();
}

std::string kernel_text(const BlockSubspaces& k) {
  std::ostringstream os;
  os << "kernel head: " << span_text(k.head_vectors()) << '\n'
     << "kernel tail pattern (first copy at coordinate " << k.head_dim + 1 << ", period "
     << k.tail.ambient_dim() << "): " << span_text(k.tail_vectors(0)) << '\n';
  return os.str();
}

class Emitter {
 public:
  Emitter(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

  void emit(const std::string& text) {
    if (opt_.out_path.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(opt_.out_path, std::ios::binary);
    if (!f) throw ParseError(opt_.out_path + ": cannot write file");
    f << text;
  }

 private:
  const Options& opt_;
  std::ostream& out_;
};

// A matrix or a block operator, as named by the file's "kind".
struct Operand {
  std::optional<Matrix> matrix;
  std::optional<BlockOperator> op;
};

Operand read_operand(const std::string& path) {
  const Json doc = io::read_file(path);
  const std::string kind = io::kind_of(doc);
  if (kind == "matrix") return {io::read_matrix(doc), std::nullopt};
  if (kind == "block_operator") return {std::nullopt, io::read_operator(doc)};
  throw ParseError(path + ": kind: expected \"matrix\" or \"block_operator\", found \"" + kind +
                   "\"");
}

int cmd_pinv(const Options& opt, std::ostream& out) {
  const Operand in = read_operand(opt.inputs.at(0));
  const Format fmt = resolve_format(opt, Format::kMachine);
  Emitter em(opt, out);
  if (in.matrix) {
    const Matrix x = mp_inverse(*in.matrix);
    em.emit(fmt == Format::kMachine ? io::dump(io::matrix_document(x)) : matrix_text(x));
  } else {
    const BlockOperator x = mp_inverse(*in.op);
    em.emit(fmt == Format::kMachine ? io::dump(io::operator_document(x)) : operator_text(x));
  }
  return kOk;
}

int cmd_apply(const Options& opt, std::ostream& out) {
  const Operand in = read_operand(opt.inputs.at(0));
  const SparseVector x = io::read_vector(io::read_file(opt.inputs.at(1)));
  SparseVector y;
  if (in.op) {
    y = apply(*in.op, x);
  } else {
    const Matrix& a = *in.matrix;
    if (x.max_index() > a.cols()) throw DimensionError("vector index exceeds matrix columns");
    y = SparseVector::from_dense(a * std::span<const Scalar>(x.to_dense(a.cols())));
  }
  Emitter em(opt, out);
  em.emit(resolve_format(opt, Format::kMachine) == Format::kMachine
              ? io::dump(io::vector_document(y))
              : vector_text(y) + "\n");
  return kOk;
}

int cmd_solve(const Options& opt, std::ostream& out) {
  std::optional<BlockOperator> op;
  SparseVector rhs;
  if (opt.inputs.size() == 1) {
    const std::filesystem::path sys_path = opt.inputs[0];
    const Json sys = io::read_file(sys_path);
    if (io::kind_of(sys) != "system") {
      throw ParseError(sys_path.string() + ": kind: expected \"system\" when no rhs is given");
    }
    auto it = sys.find("operator");
    if (it == sys.end() || !it->is_string()) throw ParseError("system: missing field \"operator\"");
    auto rhs_it = sys.find("rhs");
    if (rhs_it == sys.end()) throw ParseError("system: missing field \"rhs\"");
    const auto op_path = sys_path.parent_path() / it->get<std::string>();
    op = io::read_operator(io::read_file(op_path));
    rhs = io::vector_from_json(*rhs_it, "rhs");
  } else {
    const Operand in = read_operand(opt.inputs.at(0));
    if (!in.op) throw Error("solve expects a block_operator file");
    op = *in.op;
    rhs = io::read_vector(io::read_file(opt.inputs.at(1)));
  }
  const SolveReport rep = solve(*op, rhs);
  Emitter em(opt, out);
  if (resolve_format(opt, Format::kText) == Format::kMachine) {
    em.emit(io::dump(io::solve_report_document(rep)));
  } else {
    std::ostringstream os;
    os << "consistent: " << yes_no(rep.consistent) << '\n'
       << "min_solution: " << vector_text(rep.min_solution) << '\n'
       << "residual_norm_sq: " << rep.residual_norm_sq.get_str() << '\n'
       << kernel_text(rep.kernel);
    em.emit(os.str());
  }
  return kOk;
}

GramForm gram_or_identity(const std::string& path, std::size_t dim) {
  if (path.empty()) return GramForm::identity(dim);
  GramForm g = io::read_gram(io::read_file(path));
  if (g.dim() != dim) throw DimensionError("Gram form dimension differs from the operand");
  return g;
}

int cmd_check(const Options& opt, std::ostream& out) {
  const Operand in = read_operand(opt.inputs.at(0));
  const Matrix a = in.matrix ? *in.matrix : truncate(*in.op, opt.tail_copies);
  if (!a.is_square()) throw DimensionError("check expects an endomorphism (square matrix)");
  const InvariantDecomposition d = io::read_decomposition(io::read_file(opt.inputs.at(1)), a.rows());
  const GramForm g = gram_or_identity(opt.gram_path, a.rows());

  const bool invariant = check_invariance(a, d);
  std::optional<CharConditions> cond;
  std::optional<bool> equal;
  if (invariant) {
    cond = char_conditions(a, d, g);
    equal = blockwise_rgi(a, d, g) == mp_inverse_geometric(a, g, g);
  }
  Emitter em(opt, out);
  if (resolve_format(opt, Format::kText) == Format::kMachine) {
    Json j{{"kind", "check_report"}, {"invariant", invariant}};
    j["image_condition"] = cond ? Json(cond->image_condition) : Json();
    j["kernel_condition"] = cond ? Json(cond->kernel_condition) : Json();
    j["blockwise_equals_mp_inverse"] = equal ? Json(*equal) : Json();
    em.emit(io::dump(j));
  } else {
    auto show = [](const std::optional<bool>& b) { return b ? yes_no(*b) : std::string("n/a"); };
    std::ostringstream os;
    os << "invariant: " << yes_no(invariant) << '\n'
       << "image_condition: " << show(cond ? std::optional(cond->image_condition) : std::nullopt)
       << '\n'
       << "kernel_condition: "
       << show(cond ? std::optional(cond->kernel_condition) : std::nullopt) << '\n'
       << "blockwise_equals_mp_inverse: " << show(equal) << '\n';
    em.emit(os.str());
  }
  return kOk;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  const Operand a = read_operand(opt.inputs.at(0));
  const Operand x = read_operand(opt.inputs.at(1));
  PenroseReport rep;
  if (a.matrix && x.matrix) {
    const GramForm gv = gram_or_identity(opt.gram_path, a.matrix->cols());
    const GramForm gw = gram_or_identity(
        opt.gram_codomain_path.empty() ? opt.gram_path : opt.gram_codomain_path,
        a.matrix->rows());
    rep = verify_penrose(*a.matrix, *x.matrix, gv, gw);
  } else if (a.op && x.op) {
    if (!a.op->same_geometry(*x.op)) throw GeometryError("verify: block geometries differ");
    rep = {true, true, true, true};
    const std::size_t blocks = a.op->head_blocks().size() + 1;
    for (std::size_t b = 0; b < blocks; ++b) {
      const auto r = verify_penrose(a.op->block_matrix(b), x.op->block_matrix(b));
      rep.axa = rep.axa && r.axa;
      rep.xax = rep.xax && r.xax;
      rep.ax_selfadjoint = rep.ax_selfadjoint && r.ax_selfadjoint;
      rep.xa_selfadjoint = rep.xa_selfadjoint && r.xa_selfadjoint;
    }
  } else {
    throw Error("verify: both files must be matrices or both block operators");
  }
  Emitter em(opt, out);
  em.emit(resolve_format(opt, Format::kText) == Format::kMachine
              ? io::dump(io::penrose_document(rep))
              : penrose_text(rep));
  return kOk;
}

int cmd_potent(const Options& opt, std::ostream& out) {
  const Operand in = read_operand(opt.inputs.at(0));
  if (!in.op) throw Error("potent expects a block_operator file");
  const bool potent = is_finite_potent(*in.op);
  Emitter em(opt, out);
  em.emit(resolve_format(opt, Format::kText) == Format::kMachine
              ? io::dump(Json{{"kind", "potency_report"}, {"finite_potent", potent}})
              : "finite_potent: " + yes_no(potent) + "\n");
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Moore-Penrose inverses of matrices and block operators", "mpinv"};
  app.require_subcommand(1, 1);

  Options opt;
  auto add_common = [&opt](CLI::App* sub) {
    sub->add_option("--out", opt.out_path, "Write the result to this path");
    sub->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "machine"}));
  };

  auto* pinv = app.add_subcommand("pinv", "Moore-Penrose inverse of a matrix or block operator");
  pinv->add_option("input", opt.inputs, "Matrix or operator file")->required()->expected(1);
  add_common(pinv);

  auto* apply_cmd = app.add_subcommand("apply", "Apply an operator to a vector");
  apply_cmd->add_option("files", opt.inputs, "Operator file, vector file")->required()->expected(2);
  add_common(apply_cmd);

  auto* solve_cmd = app.add_subcommand("solve", "Minimal least-norm solution of op(x) = w");
  solve_cmd->add_option("files", opt.inputs, "Operator file and rhs file, or one system file")
      ->required()
      ->expected(1, 2);
  add_common(solve_cmd);

  auto* check = app.add_subcommand("check", "Test an invariant decomposition against the map");
  check->add_option("files", opt.inputs, "Matrix/operator file, decomposition file")
      ->required()
      ->expected(2);
  check->add_option("--gram", opt.gram_path, "Gram form file (default: identity)");
  check->add_option("--tail-copies", opt.tail_copies,
                    "Tail copies kept when truncating a block operator");
  add_common(check);

  auto* verify = app.add_subcommand("verify", "Check the Penrose identities for A and X");
  verify->add_option("files", opt.inputs, "A file, X file")->required()->expected(2);
  verify->add_option("--gram", opt.gram_path, "Domain Gram form (default: identity)");
  verify->add_option("--gram-codomain", opt.gram_codomain_path,
                     "Codomain Gram form (default: same as --gram)");
  add_common(verify);

  auto* potent = app.add_subcommand("potent", "Decide finite potency of a block operator");
  potent->add_option("input", opt.inputs, "Operator file")->required()->expected(1);
  add_common(potent);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseFailure;
  }

  try {
    if (pinv->parsed()) return cmd_pinv(opt, out);
    if (apply_cmd->parsed()) return cmd_apply(opt, out);
    if (solve_cmd->parsed()) return cmd_solve(opt, out);
    if (check->parsed()) return cmd_check(opt, out);
    if (verify->parsed()) return cmd_verify(opt, out);
    if (potent->parsed()) return cmd_potent(opt, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kSemanticFailure;
  }
  return kSemanticFailure;
}

}  // namespace mpinv::cli
