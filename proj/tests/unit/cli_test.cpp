#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "antilinear/error.hpp"
#include "antilinear/io.hpp"
#include "commands.hpp"

namespace antispec {
namespace {

namespace fs = std::filesystem;
using antilinear::io::Json;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("antispec_test_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string put(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  static Json load(const std::string& p) { return antilinear::io::parse(slurp(p)); }

  int exec(const std::string& args) const {
    const std::string cmd = std::string(ANTISPEC_BINARY) + " " + args + " > " + path("stdout.txt") + " 2> " +
                            path("stderr.txt");
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  fs::path dir_;
};

TEST(ParseOmega, Forms) {
  EXPECT_EQ(parse_omega("2"), Complex(2.0, 0.0));
  EXPECT_EQ(parse_omega("1,-0.5"), Complex(1.0, -0.5));
  EXPECT_EQ(parse_omega("0,3"), Complex(0.0, 3.0));
  EXPECT_THROW(parse_omega("abc"), antilinear::ValidationError);
  EXPECT_THROW(parse_omega("1,"), antilinear::ValidationError);
  EXPECT_THROW(parse_omega("1x"), antilinear::ValidationError);
}

TEST(CheckConfig, Caps) {
  RunConfig c;
  c.command = "example";
  EXPECT_NO_THROW(check_config(c));
  c.size = kMaxSize + 1;
  EXPECT_THROW(check_config(c), antilinear::ValidationError);
  c.size = 10;
  c.quadrature = kMaxQuadrature + 1;
  EXPECT_THROW(check_config(c), antilinear::ValidationError);
  c.quadrature = 100;
  c.command = "extract";
  EXPECT_THROW(check_config(c), antilinear::ValidationError);
  c.input = "same.json";
  c.output = "same.json";
  EXPECT_THROW(check_config(c), antilinear::ValidationError);
  c.command = "bogus";
  EXPECT_THROW(check_config(c), antilinear::ValidationError);
}

TEST_F(CliTest, ExtractSwap) {
  const auto in = put("op.json", R"({"matrix": [[0, 1], [1, 0]]})");
  ASSERT_EQ(exec("extract --input " + in + " --output " + path("data.json")), kSuccess);
  const Json d = load(path("data.json"));
  EXPECT_EQ(d["nodes"], Json::parse("[1.0]"));
  EXPECT_EQ(d["weights"].size(), 1u);
  EXPECT_NEAR(d["weights"][0].get<double>(), 1.0, 1e-14);
  EXPECT_NEAR(std::abs(d["phases"][0][0].get<double>()) + std::abs(d["phases"][0][1].get<double>()), 0.0, 1e-14);
  EXPECT_EQ(slurp(path("data_classes.csv")).substr(0, 24), "s,w,re_psi,im_psi,class\n");
}

TEST_F(CliTest, ExtractScalar) {
  const auto in = put("op.json", R"({"matrix": [[[0, 1]]]})");
  ASSERT_EQ(exec("extract -i " + in + " -o " + path("data.json")), kSuccess);
  const Json d = load(path("data.json"));
  EXPECT_EQ(d["nodes"][0].get<double>(), 1.0);
  EXPECT_EQ(d["phases"][0], Json::parse("[0.0, 1.0]"));
}

TEST_F(CliTest, ExitCodes) {
  const auto bad = put("bad.json", "{\"matrix\": [[0, 1]");
  EXPECT_EQ(exec("extract --input " + bad + " --output " + path("o.json")), kValidationFailure);
  const auto asym = put("asym.json", R"({"matrix": [[0, 1], [2, 0]]})");
  EXPECT_EQ(exec("extract --input " + asym), kValidationFailure);
  const auto noncyclic = put("id.json", R"({"matrix": [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
      "cyclic": [0.5773502691896257, 0.5773502691896257, 0.5773502691896258]})");
  EXPECT_EQ(exec("extract --input " + noncyclic), kNumericFailure);
  EXPECT_EQ(exec("extract --input " + path("missing.json")), kIoFailure);
  const auto ok = put("ok.json", R"({"matrix": [[1]]})");
  EXPECT_EQ(exec("extract --input " + ok + " --output " + path("no/such/dir/out.json")), kIoFailure);
  EXPECT_EQ(exec("extract --input " + ok + " --output " + ok), kValidationFailure);
  EXPECT_EQ(exec("example --size 6000"), kValidationFailure);
  EXPECT_EQ(exec("example --quadrature 200000"), kValidationFailure);
  EXPECT_EQ(exec("example --omega nope"), kValidationFailure);
  EXPECT_EQ(exec("frobnicate"), kValidationFailure);
  EXPECT_EQ(exec("--help"), kSuccess);
}

TEST_F(CliTest, TridiagFromData) {
  const auto zero = put("zero.json", R"({"nodes": [1], "weights": [1], "phases": [[0, 0]]})");
  ASSERT_EQ(exec("tridiag --input " + zero + " --output " + path("j.json")), kSuccess);
  const Json j = load(path("j.json"));
  EXPECT_EQ(j["a"], Json::parse("[1.0]"));
  EXPECT_EQ(j["b"], Json::parse("[[0.0, 0.0], [0.0, 0.0]]"));
  EXPECT_EQ(j["count"], 2);
  EXPECT_EQ(j["stop"], "degenerate-form");

  const auto s1 = put("s1.json", R"({"nodes": [2.5], "weights": [1], "phases": [1]})");
  ASSERT_EQ(exec("tridiag --input " + s1 + " --output " + path("k.json")), kSuccess);
  const Json k = load(path("k.json"));
  EXPECT_EQ(k["b"], Json::parse("[[2.5, 0.0]]"));
  EXPECT_EQ(k["count"], 1);
}

TEST_F(CliTest, TridiagFromOperatorCrossChecks) {
  const auto in = put("op.json", R"({"matrix": [[[0.5, 1], 1.2, 0], [1.2, [0, -1], 0.7], [0, 0.7, 2]]})");
  ASSERT_EQ(exec("tridiag --input " + in + " --output " + path("j.json")), kSuccess);
  const Json j = load(path("j.json"));
  EXPECT_EQ(j["method"], "lanczos");
  EXPECT_EQ(j["count"], 3);
  EXPECT_EQ(j["gram_schmidt_check"]["count"], 3);
  EXPECT_LE(j["gram_schmidt_check"]["max_deviation"].get<double>(), 1e-8);
  EXPECT_NEAR(j["a"][0].get<double>(), 1.2, 1e-12);
  EXPECT_NEAR(j["b"][0][1].get<double>(), 1.0, 1e-12);
}

TEST_F(CliTest, ModelAndRoundtrip) {
  const auto in = put("d.json", R"({"nodes": [0.5, 1.5], "weights": [0.4, 0.6], "phases": [[0.2, 0.1], [0, 1]]})");
  ASSERT_EQ(exec("model --input " + in + " --output " + path("m.json")), kSuccess);
  const Json m = load(path("m.json"));
  EXPECT_EQ(m["layout"]["blocks"].size(), 2u);
  EXPECT_EQ(m["operator"]["matrix"].size(), 3u);
  EXPECT_TRUE(m["report"]["cyclic"].get<bool>());
  EXPECT_LE(m["report"]["symmetry"].get<double>(), 1e-12);

  std::ofstream(path("op.json")) << antilinear::io::dump(m["operator"]);
  ASSERT_EQ(exec("roundtrip --input " + path("op.json") + " --output " + path("r.json")), kSuccess);
  const Json r = load(path("r.json"));
  EXPECT_EQ(r["lanczos_count"], 3);
  EXPECT_EQ(r["gram_schmidt_count"], 3);
  EXPECT_LE(r["max_deviation_gram_schmidt"].get<double>(), 1e-8);
  EXPECT_LE(r["max_deviation_model"].get<double>(), 1e-8);
}

TEST_F(CliTest, ExampleOmegaTwo) {
  ASSERT_EQ(exec("example --omega 2 --quadrature 4000 --coeffs 20 --size 500 --output " + path("e.json")),
            kSuccess);
  const Json e = load(path("e.json"));
  EXPECT_LE(e["errors"]["a"].get<double>(), 1e-5);
  EXPECT_LE(e["errors"]["b0"].get<double>(), 1e-5);
  EXPECT_LE(e["errors"]["b"].get<double>(), 1e-5);
  EXPECT_EQ(e["atom"]["location"].get<double>(), 2.5);
  EXPECT_EQ(e["atom"]["weight"].get<double>(), 0.75);
  EXPECT_TRUE(fs::exists(path("e_density.csv")));
  EXPECT_TRUE(fs::exists(path("e_phase.csv")));
  EXPECT_EQ(slurp(path("e_coefficients.csv")).substr(0, 20), "n,a,re_b,im_b,error\n");
}

TEST_F(CliTest, ExampleFreeCase) {
  ASSERT_EQ(exec("example --omega 0 --quadrature 1000 --coeffs 10 --size 100 --output " + path("e.json")),
            kSuccess);
  const Json e = load(path("e.json"));
  EXPECT_TRUE(e["atom"].is_null());
  for (const auto& a : e["coefficients"]["a"]) EXPECT_NEAR(a.get<double>(), 1.0, 1e-6);
  for (const auto& b : e["coefficients"]["b"]) EXPECT_LE(std::hypot(b[0].get<double>(), b[1].get<double>()), 1e-6);
}

TEST_F(CliTest, Polys) {
  const auto params = put("p.json", R"({"a": [1, 1], "b": [[2, 0], 0]})");
  ASSERT_EQ(exec("polys --input " + params + " --output " + path("q.json")), kSuccess);
  const Json q = load(path("q.json"));
  EXPECT_EQ(q["count"], 3);
  EXPECT_EQ(q["polynomials"][1], Json::parse("[[-2.0, 0.0], [1.0, 0.0]]"));
  EXPECT_EQ(q["polynomials"][2], Json::parse("[[-1.0, 0.0], [-2.0, 0.0], [1.0, 0.0]]"));

  const auto data = put("d.json", R"({"nodes": [1], "weights": [1], "phases": [0]})");
  ASSERT_EQ(exec("polys --input " + data + " --output " + path("g.json")), kSuccess);
  EXPECT_LE(load(path("g.json"))["orthonormality_residual"].get<double>(), 1e-12);
}

TEST_F(CliTest, DeterministicBytes) {
  const auto in = put("d.json", R"({"nodes": [0.5, 1.5, 2], "weights": [0.3, 0.3, 0.4], "phases": [0.1, [0, 1], 0.9]})");
  ASSERT_EQ(exec("model --input " + in + " --output " + path("a.json")), kSuccess);
  ASSERT_EQ(exec("model --input " + in + " --output " + path("b.json")), kSuccess);
  EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));
  ASSERT_EQ(exec("example --omega 1,1 --quadrature 500 --size 50 --output " + path("x.json")), kSuccess);
  ASSERT_EQ(exec("example --omega 1,1 --quadrature 500 --size 50 --output " + path("y.json")), kSuccess);
  EXPECT_EQ(slurp(path("x.json")), slurp(path("y.json")));
}

TEST_F(CliTest, CsvFormat) {
  const auto in = put("op.json", R"({"matrix": [[0, 1], [1, 0]]})");
  ASSERT_EQ(exec("extract --format csv --input " + in + " --output " + path("d.csv")), kSuccess);
  EXPECT_EQ(slurp(path("d.csv")), "s,w,re_psi,im_psi,class\n1.0,1.0,0.0,0.0,S2\n");
}

TEST(RunInProcess, StdoutWhenNoOutput) {
  RunConfig c;
  c.command = "example";
  c.quadrature = 200;
  c.coeffs = 3;
  c.size = 20;
  std::ostringstream out, err;
  EXPECT_EQ(run(c, out, err), kSuccess);
  EXPECT_NE(out.str().find("\"coefficients\""), std::string::npos);
  EXPECT_TRUE(err.str().empty());
}

}  // namespace
}  // namespace antispec
