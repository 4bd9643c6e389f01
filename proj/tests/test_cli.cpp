#include <doctest.h>

#include "cli.hpp"
#include "liesq/json_io.hpp"
#include "liesq/matrixrep.hpp"

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using nlohmann::json;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = liesq::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path write_fixture(const std::string& name,
                                    const liesq::MatrixRep& r) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream f(path);
  f << liesq::save_matrix_rep(r);
  return path;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("weight arithmetic subcommands") {
  auto r = run({"dim", "e6", "1,0,0,0,0,0"});
  CHECK(r.code == 0);
  CHECK(r.out == "27\n");

  r = run({"decompose", "su2", "1", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "(0) x1, (2) x1\n");

  r = run({"square", "--sym", "C3", "1,0,0"});
  CHECK(r.out == "(2,0,0) x1\n");

  r = run({"square", "--alt", "B2", "1,0"});
  CHECK(r.out == "(0,2) x1\n");

  r = run({"dual", "su4", "1,0,0"});
  CHECK(r.out == "(0,0,1)\n");

  r = run({"classify", "su6", "0,0,1,0,0"});
  CHECK(r.out == "symplectic\n");

  r = run({"chains", "B3", "1,0,0", "0,0,1"});
  CHECK(r.out == "1 2 3\n");

  r = run({"parts", "F4", "1,0,0,1", "--delete", "1"});
  CHECK(r.out == "sp(3) (1,0,0)\n");
}

TEST_CASE("JSON output mode") {
  auto r = run({"--output", "json", "dim", "g2", "0,1"});
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j.at("dim") == 14);

  r = run({"decompose", "--output", "json", "su2", "1", "1"});
  j = json::parse(r.out);
  CHECK(j.at("algebra") == "su(2)");
  CHECK(j.at("total_dim") == 4);
  CHECK(j.at("two_norm") == 2);
  CHECK(j.at("terms").size() == 2);
}

TEST_CASE("error handling and exit codes") {
  auto r = run({"frobnicate"});
  CHECK(r.code == 64);

  r = run({"dim", "su3"});
  CHECK(r.code == 64);

  r = run({"dim", "su3", "1,2,3"});  // wrong weight length
  CHECK(r.code == 70);
  CHECK(r.err.find("error") != std::string::npos);

  r = run({"dim", "so4", "1,1"});  // not a simple compact type
  CHECK(r.code == 64);
}

TEST_CASE("table scans match the golden files") {
  struct Case {
    std::vector<std::string> args;
    const char* golden;
  };
  std::vector<Case> cases = {
      {{"tables", "--kind", "alt", "--max-rank", "8", "--max-sum", "3"},
       "tables_alt_r8_s3.txt"},
      {{"tables", "--kind", "sym", "--max-rank", "8", "--max-sum", "3"},
       "tables_sym_r8_s3.txt"},
      {{"tables", "--kind", "alt", "--max-rank", "8", "--max-sum", "3",
        "--non-self-dual"},
       "tables_alt_nsd_r8_s3.txt"},
      {{"tables", "--kind", "sym", "--max-rank", "8", "--max-sum", "3",
        "--non-self-dual"},
       "tables_sym_nsd_r8_s3.txt"},
  };
  for (const auto& c : cases) {
    CAPTURE(c.golden);
    auto r = run(c.args);
    CHECK(r.code == 0);
    CHECK(r.out == slurp(std::filesystem::path(GOLDEN_DIR) / c.golden));
  }
}

TEST_CASE("decision subcommands on generator files") {
  using namespace liesq;
  auto su3 = standard_generators(ClassicalFamily::su, 3);
  auto full = write_fixture("liesq_test_su3.json", su3);

  MatrixRep pair;
  pair.dim = 3;
  pair.exact = {su3.exact[0], su3.exact[4] + su3.exact[7]};
  auto gen_pair = write_fixture("liesq_test_su3_pair.json", pair);

  MatrixRep diag;
  diag.dim = 3;
  GQMatrix a(3, 3), b(3, 3);
  a(0, 0) = GQ(0, 1); a(1, 1) = GQ(0, 1); a(2, 2) = GQ(0, -2);
  b(0, 0) = GQ(0, 2); b(1, 1) = GQ(0, -1); b(2, 2) = GQ(0, -1);
  diag.exact = {a, b};
  auto diag_path = write_fixture("liesq_test_su3_diag.json", diag);

  auto r = run({"decide", "su", "--dim", "3", "--input", full.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("full") != std::string::npos);

  r = run({"decide", "su", "--dim", "3", "--input", gen_pair.string()});
  CHECK(r.code == 0);

  r = run({"--output", "json", "decide", "su", "--dim", "3", "--input",
           diag_path.string()});
  CHECK(r.code == 1);
  auto j = json::parse(r.out);
  CHECK(j.at("verdict") == "proper");
  CHECK(j.at("computed_dim") == 15);

  r = run({"decide", "equal", "--input", gen_pair.string(), "--parent",
           full.string()});
  CHECK(r.code == 0);

  r = run({"commutant", "--input", full.string(), "--square"});
  CHECK(r.code == 0);
  CHECK(r.out.find("2") != std::string::npos);

  r = run({"closure", "--input", gen_pair.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("8") != std::string::npos);

  r = run({"profile", "--input", full.string()});
  CHECK(r.code == 0);

  r = run({"decide", "su", "--dim", "3", "--input", "/nonexistent.json"});
  CHECK(r.code == 70);

  std::filesystem::remove(full);
  std::filesystem::remove(gen_pair);
  std::filesystem::remove(diag_path);
}

TEST_CASE("property sweep subcommands") {
  for (const char* kind : {"cz", "kw", "malcev-fs", "ptranspose"}) {
    CAPTURE(kind);
    auto r = run({"check", kind, "--max-rank", "2", "--max-sum", "2"});
    CHECK(r.code == 0);
  }
}

TEST_SUITE_END();
