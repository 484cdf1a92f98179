#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

namespace fs = std::filesystem;

namespace {

const std::string kCli = HOPFCERT_CLI;
const std::string kData = HOPFCERT_DATA_DIR;

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("hopfcert_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string data(const std::string& name) { return kData + "/" + name; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct CliRun {
  int code;
  std::string out;
};

CliRun run(const std::string& args) {
  const fs::path out = scratch() / "stdout.txt";
  const std::string cmd = kCli + " " + args + " > " + out.string() + " 2> " + (scratch() / "stderr.txt").string();
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out)};
}

fs::path write(const std::string& name, const std::string& text) {
  const fs::path p = scratch() / name;
  std::ofstream(p) << text;
  return p;
}

}  // namespace

TEST(Cli, FrobeniusPassesOnKS3) {
  const CliRun r = run("frobenius-check " + data("kS3_gf7.recipe.json") + " " + data("kS3.series.json") + " --oracle");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("\"dimension divides dim H\""), std::string::npos);
}

TEST(Cli, FrobeniusFailsOnKS3InCharacteristicThree) {
  const CliRun r = run("frobenius-check " + data("kS3_gf3.recipe.json") + " " + data("kS3.series.json"));
  EXPECT_EQ(r.code, 1) << r.out;
  EXPECT_NE(r.out.find("nilpotent_ideal"), std::string::npos);
}

TEST(Cli, CliffordAndLiesOver) {
  EXPECT_EQ(run("clifford-report " + data("kS3_gf7.recipe.json") + " " + data("kC3_in_kS3.json")).code, 0);
  EXPECT_EQ(run("lies-over " + data("kS3_gf7.recipe.json") + " " + data("kC3_in_kS3.json")).code, 0);
  const fs::path c2 = write("c2.json", R"({"subalgebra": {"labels": ["123", "213"]}})");
  EXPECT_EQ(run("clifford-report " + data("kS3_gf7.recipe.json") + " " + c2.string()).code, 3);
}

TEST(Cli, SeriesOnBicrossproductAndDual) {
  EXPECT_EQ(run("series-check " + data("bicross_S3_gf7.recipe.json") + " " + data("bicross_S3.series.json")).code, 0);
  EXPECT_EQ(run("frobenius-check " + data("dual_S3_gf2.recipe.json") + " " + data("dual_S3.series.json")).code, 0);
  EXPECT_EQ(run("series-check " + data("kS3_gf7.recipe.json") + " " + data("dual_S3.series.json")).code, 1);
}

TEST(Cli, BuildThenCheckHopf) {
  const fs::path out = scratch() / "kS3.json";
  ASSERT_EQ(run("build " + data("kS3_gf7.recipe.json") + " --out " + out.string()).code, 0);
  EXPECT_EQ(run("check-hopf " + out.string()).code, 0);
  EXPECT_EQ(run("frobenius-check " + out.string() + " " + data("kS3.series.json")).code, 0);
  EXPECT_EQ(run("build " + data("smash_C3_S3_gf7.recipe.json")).code, 0);
  // A well-formed file with a broken axiom.
  nlohmann::json j = nlohmann::json::parse(slurp(out));
  j["counit"][0] = 0;
  const fs::path broken = write("broken.json", j.dump());
  EXPECT_EQ(run("check-hopf " + broken.string()).code, 1);
}

TEST(Cli, MalformedInputExitsTwo) {
  EXPECT_EQ(run("check-hopf " + write("bad.json", "{not json").string()).code, 2);
  EXPECT_EQ(run("check-hopf " + (scratch() / "missing.json").string()).code, 2);
  EXPECT_EQ(run("frobenius-check " + data("kS3_gf7.recipe.json") + " " + write("s.json", R"({"chain": []})").string()).code, 2);
  EXPECT_EQ(run("build " + write("r.json", R"({"construct": "tensor"})").string()).code, 2);
  EXPECT_EQ(run("series-check " + data("kS3_gf7.recipe.json") + " " +
                write("l.json", R"({"chain": ["unit", {"labels": ["nope"]}, "all"]})").string())
                .code,
            2);
}

TEST(Cli, OutputIsByteIdenticalAcrossRunsAndThreads) {
  const std::string args = "frobenius-check " + data("kS3_gf7.recipe.json") + " " + data("kS3.series.json") + " --seed 42";
  const CliRun a = run(args + " --threads 1");
  const CliRun b = run(args + " --threads 4");
  const CliRun c = run(args + " --threads 4");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(b.out, c.out);
  const CliRun text = run(args + " --format text");
  EXPECT_NE(text.out.find("exit 0"), std::string::npos);
  EXPECT_EQ(run(args + " --format yaml").code, 2);
}

TEST(Cli, FieldOverride) {
  EXPECT_EQ(run("frobenius-check " + data("kS3_gf7.recipe.json") + " " + data("kS3.series.json") + " --field 3").code, 1);
  EXPECT_EQ(run("frobenius-check " + data("kS3_gf7.recipe.json") + " " + data("kS3.series.json") + " --field 5").code, 0);
}
