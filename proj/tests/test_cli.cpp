#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "bipoisson/bracket_io.hpp"
#include "bipoisson/cli.hpp"
#include "bipoisson/sl3.hpp"
#include "bipoisson/tensor_io.hpp"

using namespace bipoisson;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("bipoisson-cli-" + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string operator/(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("argument errors exit with 2") {
    CHECK(run({}).code == cli::kBadInput);
    CHECK(run({"frobnicate"}).code == cli::kBadInput);
    CHECK(run({"check-fp4", "--c", "x.json"}).code == cli::kBadInput);
    CHECK(run({"check-fp4", "--c", "/nonexistent/c.json", "--b", "/nonexistent/b.json"}).code == cli::kBadInput);
    CHECK(run({"build", "--case", "a9", "--lambda", "1", "--out", "/nonexistent/t.json"}).code == cli::kBadInput);
    CHECK(run({"build", "--case", "a1", "--lambda", "0", "--out", "/nonexistent/t.json"}).code == cli::kBadInput);
    CHECK(run({"selftest", "--jobs", "0"}).code == cli::kBadInput);
    CHECK(run({"selftest", "--format", "xml"}).code == cli::kBadInput);
  }

  TEST_CASE("catalog") {
    Result list = run({"catalog", "list"});
    CHECK(list.code == cli::kPass);
    CHECK(list.out.find("a4 [t]") != std::string::npos);
    CHECK(list.out.find("rmatrix-example") != std::string::npos);
    Result ex = run({"catalog", "export", "a4", "--param", "t=1/2"});
    REQUIRE(ex.code == cli::kPass);
    auto doc = nlohmann::json::parse(ex.out);
    sl3::Pair a4 = sl3::normal_form(sl3::NormalForm::A4, {Polynomial(Rational(1, 2)), std::nullopt});
    CHECK(tensor_from_json(doc["c"]) == a4.c);
    CHECK(tensor_from_json(doc["b"]) == a4.b);
    CHECK(run({"catalog", "export", "zz"}).code == cli::kBadInput);
    CHECK(run({"catalog", "export", "basis-a1"}).code == cli::kBadInput);
    // c3 is the normal form; the basis tensor of that name is basis-c3.
    auto c3 = nlohmann::json::parse(run({"catalog", "export", "c3", "--param", "t=1", "--param", "a=1"}).out);
    CHECK(c3.contains("b"));
    auto basis = nlohmann::json::parse(run({"catalog", "export", "basis-c3"}).out);
    CHECK(tensor_from_json(basis["c"]) == sl3::basis_c(3));
    CHECK_FALSE(basis.contains("b"));
    auto c7 = nlohmann::json::parse(run({"catalog", "export", "c7"}).out);
    CHECK(tensor_from_json(c7["c"]) == sl3::basis_c(7));
    CHECK(run({"catalog", "export", "a4", "--param", "q=1"}).code == cli::kBadInput);
  }

  TEST_CASE("check-fp4") {
    TempDir dir;
    REQUIRE(run({"catalog", "export", "c3", "--out-prefix", dir / "c3"}).code == cli::kPass);
    Result ok = run({"check-fp4", "--c", dir / "c3.c.json", "--b", dir / "c3.b.json"});
    CHECK(ok.code == cli::kPass);
    CHECK(ok.out.find("0 nonzero residual entries") != std::string::npos);

    write_json_file(dir / "zero.json", tensor_to_json(Tensor4(3)));
    Result zero = run({"check-fp4", "--c", dir / "zero.json", "--b", dir / "zero.json"});
    CHECK(zero.code == cli::kPass);
    CHECK(zero.out.find("0 nonzero residual entries") != std::string::npos);

    auto listed = sl3::listed_normal_form(sl3::NormalForm::C1, sl3::Params::symbolic());
    write_json_file(dir / "c1.c.json", tensor_to_json(listed->c));
    write_json_file(dir / "c1.b.json", tensor_to_json(listed->b));
    Result bad = run({"--format", "json", "check-fp4", "--c", dir / "c1.c.json", "--b", dir / "c1.b.json"});
    CHECK(bad.code == cli::kFail);
    auto doc = nlohmann::json::parse(bad.out);
    CHECK(doc["status"] == "fail");
    CHECK(doc["reports"][2]["note"] == "48 nonzero residual entries");

    std::ofstream(dir / "broken.json") << "{\"N\": 3, \"entries\": [";
    CHECK(run({"check-fp4", "--c", dir / "broken.json", "--b", dir / "zero.json"}).code == cli::kBadInput);
  }

  TEST_CASE("build and verify") {
    TempDir dir;
    REQUIRE(run({"build", "--case", "a1", "--lambda", "1/3", "--out", dir / "a1.json"}).code == cli::kPass);
    BracketTable t = load_table(dir / "a1.json");
    CHECK_FALSE(t.is_restricted());
    CHECK(*t.lambda() == Rational(1, 3));
    Result all = run({"verify", "--table", dir / "a1.json", "--all", "--case", "a1"});
    CHECK(all.code == cli::kPass);
    CHECK(all.out.find("s0-flow") != std::string::npos);
    REQUIRE(run({"build", "--case", "c3", "--param", "t=2", "--param", "a=1/2", "--lambda", "1/3", "--out",
                 dir / "c3.json"})
                .code == cli::kPass);
    CHECK(run({"verify", "--table", dir / "c3.json", "--s0flow", "--case", "c3", "--param", "t=2", "--param", "a=1/2"})
              .code == cli::kPass);
    CHECK(run({"verify", "--table", dir / "c3.json", "--s0flow", "--s0flow-form", "opposite", "--case", "c3", "--param",
               "t=2", "--param", "a=1/2"})
              .code == cli::kFail);
    CHECK(run({"verify", "--table", dir / "a1.json", "--s0flow"}).code == cli::kBadInput);

    REQUIRE(run({"build", "--case", "a4", "--param", "t=1", "--lambda", "1", "--out", dir / "a4.json", "--restrict"})
                .code == cli::kPass);
    CHECK(load_table(dir / "a4.json").is_restricted());
    CHECK(run({"verify", "--table", dir / "a4.json", "--jacobi"}).code == cli::kFail);
    CHECK(run({"verify", "--table", dir / "a4.json", "--schouten"}).code == cli::kPass);
    CHECK(run({"verify", "--table", dir / "a4.json", "--casimir"}).code == cli::kBadInput);
  }

  TEST_CASE("corrupted table fails with a witness") {
    TempDir dir;
    REQUIRE(run({"build", "--case", "a1", "--lambda", "1/3", "--out", dir / "t.json", "--restrict"}).code ==
            cli::kPass);
    BracketTable t = load_table(dir / "t.json");
    t.set(VarId::coord(1, 2), VarId::coord(2, 1), t.at(VarId::coord(1, 2), VarId::coord(2, 1)) +
                                                       Polynomial::variable(VarId::coord(1, 3)) *
                                                           Polynomial::variable(VarId::coord(1, 3)));
    write_json_file(dir / "bad.json", table_to_json(t));
    Result r = run({"--format", "json", "verify", "--table", dir / "bad.json", "--jacobi"});
    CHECK(r.code == cli::kFail);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["reports"][0]["status"] == "fail");
    CHECK(doc["reports"][0].contains("witness"));
  }

  TEST_CASE("outputs are byte-identical across runs and thread counts") {
    TempDir dir;
    REQUIRE(run({"build", "--case", "c3", "--lambda", "1/3", "--out", dir / "one.json"}).code == cli::kPass);
    REQUIRE(run({"--jobs", "4", "build", "--case", "c3", "--lambda", "1/3", "--out", dir / "four.json"}).code ==
            cli::kPass);
    CHECK(slurp(dir / "one.json") == slurp(dir / "four.json"));
    Result v1 = run({"--format", "json", "verify", "--table", dir / "one.json", "--case", "c3"});
    Result v4 = run({"verify", "--table", dir / "one.json", "--case", "c3", "--jobs", "4", "--format", "json"});
    CHECK(v1.code == cli::kPass);
    CHECK(v1.out == v4.out);
    REQUIRE(run({"build", "--case", "c3", "--lambda", "1", "--out", dir / "l1.json"}).code == cli::kPass);
    Result f1 = run({"verify", "--table", dir / "l1.json"});
    Result f3 = run({"verify", "--table", dir / "l1.json", "--jobs", "3"});
    CHECK(f1.code == cli::kFail);
    CHECK(f1.out == f3.out);
  }

  TEST_CASE("gauge") {
    TempDir dir;
    REQUIRE(run({"catalog", "export", "a1", "--out-prefix", dir / "a1"}).code == cli::kPass);
    MatrixX x(3);
    x.at(1, 2) = 1;
    write_json_file(dir / "x.json", matrix_to_json(x));
    Result r = run({"--format", "json", "gauge", "--c", dir / "a1.c.json", "--b", dir / "a1.b.json", "--x",
                    dir / "x.json", "--out-prefix", dir / "g"});
    CHECK(r.code == cli::kPass);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["fp4_residual_entries_before"] == 0);
    CHECK(fs::exists(dir / "g.c.json"));
    MatrixX traced = MatrixX::identity(3);
    write_json_file(dir / "bad_x.json", matrix_to_json(traced));
    CHECK(run({"gauge", "--c", dir / "a1.c.json", "--b", dir / "a1.b.json", "--x", dir / "bad_x.json", "--out-prefix",
               dir / "g"})
              .code == cli::kBadInput);
  }

  TEST_CASE("selftest") {
    Result r = run({"selftest"});
    CHECK(r.code == cli::kPass);
    CHECK(r.out.find("selftest: PASS") != std::string::npos);
  }
}
