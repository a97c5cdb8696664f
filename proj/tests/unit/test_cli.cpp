#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "mpinv/cli.hpp"
#include "mpinv/io.hpp"
#include "support/fixtures.hpp"

using namespace mpinv;

namespace {

const std::filesystem::path kFixtures = MPINV_FIXTURE_DIR;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fx(const char* name) { return (kFixtures / name).string(); }

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "mpinv_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

void write(const std::filesystem::path& p, const std::string& text) {
  std::ofstream(p, std::ios::binary) << text;
}

}  // namespace

TEST_CASE("pinv") {
  const auto r = run({"pinv", fx("counterexample_matrix.json")});
  CHECK(r.code == 0);
  CHECK(io::read_matrix(io::parse(r.out, "out")) == mpinv::testing::counterexample_mp_inverse());

  const auto text = run({"pinv", fx("counterexample_matrix.json"), "--format", "text"});
  CHECK(text.code == 0);
  CHECK(text.out.find("1/6") != std::string::npos);

  const auto op = run({"pinv", fx("phi_operator.json")});
  CHECK(op.code == 0);
  CHECK(io::read_operator(io::parse(op.out, "out")) == mp_inverse(mpinv::testing::phi()));
}

TEST_CASE("pinv applied twice returns the input") {
  for (const char* name : {"phi_operator.json", "counterexample_matrix.json", "complex_matrix.json"}) {
    const auto once = scratch(std::string("once_") + name);
    REQUIRE(run({"pinv", fx(name), "--out", once.string()}).code == 0);
    const auto twice = run({"pinv", once.string()});
    REQUIRE(twice.code == 0);
    const auto original = io::read_file(fx(name));
    CHECK(io::dump(io::parse(twice.out, "out")) == io::dump(original));
  }
}

TEST_CASE("apply") {
  const auto r = run({"apply", fx("phi_operator.json"), fx("vector_v1.json"), "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out == "{2: 1, 5: 1, 7: 1}\n");
  const auto m = run({"apply", fx("counterexample_matrix.json"), fx("rhs_v4.json")});
  CHECK(m.code == 0);
  CHECK(io::read_vector(io::parse(m.out, "out")) ==
        mpinv::testing::e(1) + mpinv::testing::e(2) + mpinv::testing::e(3));
  CHECK(run({"apply", fx("counterexample_matrix.json"), fx("rhs_v8.json")}).code == 1);
}

TEST_CASE("solve") {
  const auto r = run({"solve", fx("phi_operator.json"), fx("rhs_v4.json")});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "consistent: yes\n"
        "min_solution: {3: 1}\n"
        "residual_norm_sq: 0\n"
        "kernel head: <{7: 1}>\n"
        "kernel tail pattern (first copy at coordinate 11, period 5): <{12: 1}>\n");
  CHECK(run({"solve", fx("system_v4.json")}).out == r.out);

  const auto bad = run({"solve", fx("phi_operator.json"), fx("rhs_v8.json"), "--format", "machine"});
  CHECK(bad.code == 0);
  const auto doc = io::parse(bad.out, "out");
  CHECK(doc["consistent"] == false);
  CHECK(doc["residual_norm_sq"] == "1");
  CHECK(run({"solve", fx("counterexample_matrix.json"), fx("rhs_v4.json")}).code == 1);
}

TEST_CASE("check") {
  const auto c = run({"check", fx("counterexample_matrix.json"), fx("counterexample_decomposition.json")});
  CHECK(c.code == 0);
  CHECK(c.out ==
        "invariant: yes\nimage_condition: no\nkernel_condition: no\n"
        "blockwise_equals_mp_inverse: no\n");
  const auto s = run({"check", fx("counterexample_matrix.json"), fx("counterexample_single_part.json")});
  CHECK(s.out.find("blockwise_equals_mp_inverse: yes") != std::string::npos);
  const auto phi = run({"check", fx("phi_operator.json"), fx("phi_orthogonal_decomposition.json"),
                        "--tail-copies", "1"});
  CHECK(phi.code == 0);
  CHECK(phi.out ==
        "invariant: yes\nimage_condition: yes\nkernel_condition: yes\n"
        "blockwise_equals_mp_inverse: yes\n");

  const auto shift = scratch("shift.json");
  write(shift, R"({"kind":"matrix","matrix":[["0","1"],["0","0"]]})");
  const auto coords = scratch("coords.json");
  write(coords, R"([[[[1,"1"]]],[[[2,"1"]]]])");
  const auto n = run({"check", shift.string(), coords.string()});
  CHECK(n.code == 0);
  CHECK(n.out.find("invariant: no\nimage_condition: n/a") == 0);
}

TEST_CASE("verify and potent") {
  const auto v = run({"verify", fx("counterexample_matrix.json"), fx("counterexample_blockwise_rgi.json")});
  CHECK(v.code == 0);
  CHECK(v.out ==
        "AXA=A: yes\nXAX=X: yes\n(AX)*=AX: no\n(XA)*=XA: no\nreflexive: yes\nmoore_penrose: no\n");
  const auto m = run({"verify", fx("counterexample_matrix.json"), fx("counterexample_mp_inverse.json"),
                      "--format", "machine"});
  CHECK(io::parse(m.out, "out")["moore_penrose"] == true);

  CHECK(run({"potent", fx("phi_operator.json")}).out == "finite_potent: yes\n");
  const auto inv = scratch("phi_inv.json");
  REQUIRE(run({"pinv", fx("phi_operator.json"), "--out", inv.string()}).code == 0);
  CHECK(run({"potent", inv.string()}).out == "finite_potent: no\n");
  CHECK(run({"verify", fx("phi_operator.json"), inv.string()}).out.find("moore_penrose: yes") !=
        std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"pinv"}).code == 2);
  CHECK(run({"pinv", fx("does_not_exist.json")}).code == 2);
  CHECK(run({"pinv", fx("rhs_v4.json")}).code == 2);
  CHECK(run({"pinv", fx("counterexample_matrix.json"), "--format", "xml"}).code == 2);
  CHECK(run({"--help"}).code == 0);

  const auto broken = scratch("broken.json");
  write(broken, "{\"kind\": \"matrix\", \"matrix\": [[\"1\", \"1/0\"]]}");
  const auto r = run({"pinv", broken.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("matrix[0][1]") != std::string::npos);

  CHECK(run({"potent", fx("counterexample_matrix.json")}).code == 1);
  CHECK(run({"verify", fx("phi_operator.json"), fx("counterexample_matrix.json")}).code == 1);
}
