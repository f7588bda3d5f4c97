#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>
#include <sys/wait.h>

#include "gitkit/serialize.hpp"
#include "gitkit_cli/app.hpp"

namespace fs = std::filesystem;
using gitkit::Json;

namespace {

const std::string kExample = std::string(GITKIT_PROBLEMS_DIR) + "/conifold.json";

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "gitkit");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Result r;
  r.code = gitkit::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

fs::path write_temp(const std::string& name, const std::string& text) {
  auto dir = fs::temp_directory_path() / "gitkit_cli_test";
  fs::create_directories(dir);
  auto path = dir / name;
  std::ofstream(path) << text;
  return path;
}

std::string error_kind(const Result& r) { return Json::parse(r.err)["error"].get<std::string>(); }

}  // namespace

TEST(Cli, HilbertOfExample) {
  auto r = run({"hilbert", kExample});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = Json::parse(r.out);
  EXPECT_NE(j.dump().find("[1,1,-1]"), std::string::npos);
}

TEST(Cli, GitFanHasTenRows) {
  auto r = run({"git-fan", "-i", kExample});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["table"].size(), 10u);
}

TEST(Cli, DowngradeCommands) {
  auto fan = run({"downgrade", "git-fan", kExample});
  ASSERT_EQ(fan.code, 0) << fan.err;
  EXPECT_EQ(Json::parse(fan.out)["table"].size(), 4u);
  auto pp = run({"downgrade", "ppdiv", kExample});
  ASSERT_EQ(pp.code, 0) << pp.err;
  auto j = Json::parse(pp.out);
  EXPECT_EQ(j["ppdivisor"]["coefficients"]["rho_0"]["vertices"].dump(), "[[1,0]]");
  EXPECT_EQ(j["ppdivisor"]["coefficients"]["rho_1"]["vertices"].dump(), "[[0,1]]");
}

TEST(Cli, VerifyUsesBoxFromInput) {
  auto r = run({"verify", kExample});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["fibers"].size(), 49u);
  EXPECT_TRUE(j["passed"].get<bool>());
  auto small = run({"verify", kExample, "--box", "2"});
  EXPECT_EQ(Json::parse(small.out)["fibers"].size(), 9u);
}

TEST(Cli, MalformedJsonIsInvalidInput) {
  auto path = write_temp("broken.json", "{ \"rank\": 3, ");
  auto r = run({"hilbert", path.string()});
  EXPECT_EQ(r.code, gitkit::cli::kExitInvalidInput);
  EXPECT_EQ(error_kind(r), "invalid-input");
}

TEST(Cli, MissingFieldIsInvalidInput) {
  auto path = write_temp("missing.json", R"({"rank": 2})");
  EXPECT_EQ(run({"hilbert", path.string()}).code, gitkit::cli::kExitInvalidInput);
}

TEST(Cli, NonSaturatedEmbeddingIsUnsupported) {
  auto path = write_temp("doubled.json",
                         R"({"rank": 2, "cone_rays": [[1,0],[0,1]], "subtorus_embedding": [[2],[0]]})");
  auto r = run({"downgrade", "git-fan", path.string()});
  EXPECT_EQ(r.code, gitkit::cli::kExitUnsupported);
  EXPECT_EQ(error_kind(r), "not-saturated");
}

TEST(Cli, RankNineIsUnsupported) {
  std::string rays = "[";
  for (int k = 0; k < 9; ++k) {
    rays += k ? ",[" : "[";
    for (int c = 0; c < 9; ++c) rays += std::string(c ? "," : "") + (c == k ? "1" : "0");
    rays += "]";
  }
  rays += "]";
  auto path = write_temp("rank9.json", R"({"rank": 9, "cone_rays": )" + rays + "}");
  EXPECT_EQ(run({"hilbert", path.string()}).code, gitkit::cli::kExitUnsupported);
}

TEST(Cli, UnknownCommandIsInvalidInput) {
  EXPECT_EQ(run({"frobnicate"}).code, gitkit::cli::kExitInvalidInput);
  EXPECT_EQ(run({"verify", kExample, "--box", "0"}).code, gitkit::cli::kExitInvalidInput);
}

TEST(Cli, RenderSvg) {
  auto r = run({"render-svg", kExample});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("<svg", 0), 0u);
  std::string rays = "[[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]";
  auto path = write_temp("rank4.json", R"({"rank": 4, "cone_rays": )" + rays + "}");
  auto drawn = run({"render-svg", path.string()});
  EXPECT_EQ(drawn.code, gitkit::cli::kExitUnsupported);
  EXPECT_EQ(error_kind(drawn), "not-drawable");
}

TEST(Cli, MarkdownFormat) {
  auto r = run({"git-fan", kExample, "--format", "md"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("| "), std::string::npos);
  EXPECT_EQ(r.out.find("{\""), std::string::npos);
}

TEST(Cli, OutputIsDeterministic) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"git-fan", kExample}, std::vector<std::string>{"downgrade", "ppdiv", kExample},
        std::vector<std::string>{"verify", kExample}}) {
    EXPECT_EQ(run(args).out, run(args).out);
  }
}

TEST(Cli, Selfcheck) {
  auto r = run({"selfcheck"});
  ASSERT_EQ(r.code, 0) << r.out << r.err;
}

TEST(Cli, BinaryExitCodes) {
  auto out = fs::temp_directory_path() / "gitkit_cli_test" / "fan.json";
  fs::create_directories(out.parent_path());
  std::string ok = std::string(GITKIT_BINARY) + " git-fan " + kExample + " -o " + out.string();
  int status = std::system(ok.c_str());
  ASSERT_TRUE(WIFEXITED(status));
  EXPECT_EQ(WEXITSTATUS(status), 0);
  std::ifstream in(out);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(Json::parse(text.str())["table"].size(), 10u);

  auto broken = write_temp("broken2.json", "[");
  std::string bad = std::string(GITKIT_BINARY) + " hilbert " + broken.string() + " 2>/dev/null";
  status = std::system(bad.c_str());
  ASSERT_TRUE(WIFEXITED(status));
  EXPECT_EQ(WEXITSTATUS(status), 2);
}
