#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"

using namespace pdg;
using namespace pdg::cli;
namespace fs = std::filesystem;

namespace {

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("pdg_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  // exit status of the real binary
  int run(const std::string& args) {
    const std::string cmd = std::string(PDG_CLI_PATH) + " " + args + " > " + (dir_ / "stdout").string() +
                            " 2> " + (dir_ / "stderr").string();
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  std::string slurp(const std::string& name) { return read_file((dir_ / name).string()); }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, DistValues) {
  const std::string x = write("x.json", R"({"points": [[0,10],[1,9]]})");
  const std::string y = write("y.json", R"({"points": [[1,11],[2,10]]})");
  RunConfig cfg;
  cfg.p = 1.0;
  cfg.q = 1.0;
  std::ostringstream out;
  ASSERT_EQ(cmd_dist(x, y, cfg, out), kOk);
  const Json j = Json::parse(out.str());
  EXPECT_EQ(j["value"].get<double>(), 4.0);
  EXPECT_EQ(j["regime"], "counterexample");
  EXPECT_EQ(j["pairs"].size(), 2u);

  cfg.p = kInfinity;
  cfg.q = 2.0;
  std::ostringstream inf;
  const std::string one = write("one.json", R"({"points": [[0,4]]})");
  const std::string none = write("none.json", R"({"points": []})");
  cmd_dist(one, none, cfg, inf);
  const Json k = Json::parse(inf.str());
  EXPECT_NEAR(k["value"].get<double>(), 4.0 / std::sqrt(2.0), 1e-12);
  EXPECT_TRUE(k["pairs"][0]["y"].is_null());
  EXPECT_EQ(k["p"], "inf");
}

TEST_F(CliTest, GeodesicFeedsCertify) {
  const std::string x = write("x.json", R"({"points": [[0,4]]})");
  const std::string y = write("y.json", R"({"points": []})");
  RunConfig cfg;
  cfg.grid = 3;
  std::ostringstream geo;
  ASSERT_EQ(cmd_geodesic(x, y, cfg, geo), kOk);
  const SampledCurve c = io::parse_curve(geo.str());
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c.frames[0], make_diagram({{0, 4}}));
  EXPECT_EQ(c.frames[1], make_diagram({{1, 3}}));
  EXPECT_TRUE(c.frames[2].empty());

  const std::string curve = write("curve.json", geo.str());
  std::ostringstream cert;
  ASSERT_EQ(cmd_certify(curve, cfg, cert), kOk);
  EXPECT_TRUE(Json::parse(cert.str())["ok"].get<bool>());

  std::ostringstream cls;
  ASSERT_EQ(cmd_classify(curve, cfg, cls), kOk);
  const Json j = Json::parse(cls.str());
  EXPECT_EQ(j["kind"], "convex-combination");
  EXPECT_TRUE(j["deviant_time"].is_null());
}

TEST_F(CliTest, GalleryAndClassify) {
  RunConfig cfg;
  cfg.p = 1.0;
  cfg.q = 1.0;
  cfg.grid = 9;
  std::ostringstream g;
  ASSERT_EQ(cmd_gallery("corner_one", gallery::Params{}, cfg, g), kOk);
  const std::string curve = write("corner.json", g.str());
  std::ostringstream cls;
  cmd_classify(curve, cfg, cls);
  const Json j = Json::parse(cls.str());
  EXPECT_EQ(j["kind"], "deviant");
  EXPECT_EQ(j["optimal_bijections"], 2);
  EXPECT_TRUE(j["deviant_time"].is_number());
}

TEST_F(CliTest, VerifySuitesPass) {
  RunConfig cfg;
  cfg.seed = 3;
  for (const char* suite : {"metric", "ot", "inequalities", "gallery"}) {
    std::ostringstream out, err;
    EXPECT_EQ(cmd_verify(suite, cfg, out, err), kOk) << suite << ": " << err.str();
    EXPECT_TRUE(Json::parse(out.str())["pass"].get<bool>());
  }
  cfg.format = Format::Csv;
  std::ostringstream csv, err;
  cmd_verify("gallery", cfg, csv, err);
  EXPECT_EQ(csv.str().rfind("name,params,measured,expected,pass\n", 0), 0u);
}

TEST_F(CliTest, BinaryExitCodes) {
  const std::string x = write("x.json", R"({"points": [[0,10],[1,9]]})");
  const std::string y = write("y.json", R"({"points": [[1,11],[2,10]]})");
  const std::string bad = write("bad.json", R"({"points": [[0,10],[1,]]})");
  const std::string below = write("below.json", R"({"points": [[3,1]]})");
  std::string big = R"({"points": [)";
  for (int i = 0; i < 6; ++i) big += (i ? "," : "") + std::string("[") + std::to_string(i) + "," + std::to_string(i + 3) + "]";
  big += "]}";
  const std::string large = write("large.json", big);
  const std::string curve = write("big_curve.json", R"({"times": [0, 1], "frames": [)" + big + "," + big + "]}");

  EXPECT_EQ(run("--p 1 --q 1 dist " + x + " " + y), kOk);
  EXPECT_EQ(Json::parse(slurp("stdout"))["value"].get<double>(), 4.0);
  EXPECT_EQ(run("--p 1 --q 1 --out " + (dir_ / "o.json").string() + " dist " + x + " " + y), kOk);
  EXPECT_EQ(Json::parse(slurp("o.json"))["value"].get<double>(), 4.0);

  EXPECT_EQ(run("dist " + bad + " " + y), kInputError);
  EXPECT_NE(slurp("stderr").find("line 1"), std::string::npos);
  EXPECT_EQ(run("dist " + below + " " + y), kInputError);
  EXPECT_EQ(run("--p 0.5 dist " + x + " " + y), kInputError);
  EXPECT_EQ(run("--p foo dist " + x + " " + y), kInputError);
  EXPECT_EQ(run("--format csv dist " + x + " " + y), kInputError);
  EXPECT_EQ(run("dist " + x), kInputError);
  EXPECT_EQ(run("frobnicate"), kInputError);
  EXPECT_EQ(run("dist " + x + " " + (dir_ / "missing.json").string()), kInputError);
  EXPECT_EQ(run("gallery mu_infty --k 9"), kInputError);
  EXPECT_EQ(run("classify " + curve), kResourceGuard);
  EXPECT_EQ(run("dist " + large + " " + large), kOk);
  EXPECT_EQ(run("--format csv verify inequalities"), kOk);
  EXPECT_EQ(run("verify nothing"), kInputError);
}
