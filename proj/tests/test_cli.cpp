#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

#include <json.hpp>

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run(const std::string& args) {
  const std::string command = std::string(MACDONALD_CLI) + " " + args + " 2>&1";
  CliResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return result;
  std::array<char, 4096> buffer{};
  while (std::size_t got = std::fread(buffer.data(), 1, buffer.size(), pipe)) result.out.append(buffer.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

TEST(Cli, ComputePrintsJson) {
  const CliResult r = run("compute G --alpha 0,1 --variant r");
  ASSERT_EQ(r.exit_code, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["family"], "G");
  EXPECT_EQ(j["index"], nlohmann::json::array({0, 1}));
  EXPECT_EQ(j["poly"]["n"], 2);
}

TEST(Cli, ComputePretty) {
  const CliResult r = run("compute G --alpha 0,1 --variant qt --pretty");
  ASSERT_EQ(r.exit_code, 0) << r.out;
  EXPECT_NE(r.out.find("x2"), std::string::npos) << r.out;
}

TEST(Cli, CheckPassesAndFailsWithCodes) {
  const CliResult ok = run("check eigen-r --n 2 --deg 2");
  EXPECT_EQ(ok.exit_code, 0) << ok.out;
  EXPECT_EQ(ok.out.rfind("PASS eigen-r", 0), 0U) << ok.out;
  const CliResult unknown = run("check no-such-check");
  EXPECT_EQ(unknown.exit_code, 2) << unknown.out;
  const CliResult bad_flag = run("check eigen-r --n notanumber");
  EXPECT_EQ(bad_flag.exit_code, 2) << bad_flag.out;
}

TEST(Cli, BadSpecializationExitsWithThree) {
  const CliResult r = run("check eval-qt --q 1");
  EXPECT_EQ(r.exit_code, 3) << r.out;
  EXPECT_NE(r.out.find("(1,0)"), std::string::npos) << r.out;
}

TEST(Cli, ListChecks) {
  const CliResult r = run("list-checks --json");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out).size(), 35U);
  const CliResult filtered = run("list-checks --filter oko");
  EXPECT_NE(filtered.out.find("oko-qt"), std::string::npos);
  EXPECT_EQ(filtered.out.find("eigen"), std::string::npos);
}

TEST(Cli, CacheDirectoryIsFilledAndCleared) {
  const auto dir = std::filesystem::temp_directory_path() / "macdonald_cli_cache_test";
  std::filesystem::remove_all(dir);
  const CliResult r = run("compute G --alpha 1,1 --variant r --cache-dir " + dir.string());
  ASSERT_EQ(r.exit_code, 0) << r.out;
  EXPECT_FALSE(std::filesystem::is_empty(dir));
  const CliResult again = run("compute G --alpha 1,1 --variant r --cache-dir " + dir.string());
  EXPECT_EQ(again.out, r.out);
  const CliResult cleared = run("cache --clear --cache-dir " + dir.string());
  EXPECT_EQ(cleared.exit_code, 0) << cleared.out;
  EXPECT_TRUE(std::filesystem::is_empty(dir));
  std::filesystem::remove_all(dir);
}

}  // namespace
