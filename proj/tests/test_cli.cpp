#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#ifndef CHIRAL_CLI_PATH
#error "CHIRAL_CLI_PATH must point at the chiral binary"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

// Runs the CLI with stderr folded into stdout.
RunResult run(const std::string& args) {
  const std::string cmd = std::string(CHIRAL_CLI_PATH) + " " + args + " 2>&1";
  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.output.append(buf.data(), n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t nl = text.find('\n', pos);
    if (nl == std::string::npos) nl = text.size();
    out.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  return out;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("enumerate right as csv emits 83 data rows ending at generation 8") {
  const RunResult r = run("enumerate --direction right --format csv");
  CHECK(r.exit_code == 0);
  const auto rows = lines(r.output);
  REQUIRE(rows.size() == 84);
  CHECK(rows[0] == "generation,prime");
  CHECK(rows[1] == "1,2");
  CHECK(rows[83] == "8,73939133");
}

TEST_CASE("enumerate left truncated to two generations") {
  const RunResult r = run("enumerate --direction left --max-gen 2 --format json");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  REQUIRE(j["generations"].size() == 2);
  CHECK(j["generations"][1]["primes"].size() == 11);
  CHECK_FALSE(j.contains("termination"));
}

TEST_CASE("full left enumeration reports the unique maximal prime") {
  const RunResult r = run("enumerate --direction left");
  CHECK(r.exit_code == 0);
  const auto rows = lines(r.output);
  REQUIRE_FALSE(rows.empty());
  CHECK(rows.back() == "maximal set: 357686312646216567629137");
}

TEST_CASE("figure-data right as csv has 8 rows with peak 16 at generation 4") {
  const RunResult r = run("figure-data --direction right --format csv");
  CHECK(r.exit_code == 0);
  const auto rows = lines(r.output);
  REQUIRE(rows.size() == 9);
  CHECK(rows[0] == "generation,count");
  CHECK(rows[4] == "4,16");
  CHECK(rows[8] == "8,5");
}

TEST_CASE("figure-data left ends with (24,1)") {
  const RunResult r = run("figure-data --direction left --format csv");
  CHECK(r.exit_code == 0);
  const auto rows = lines(r.output);
  REQUIRE(rows.size() == 25);
  CHECK(rows[20] == "20,6");
  CHECK(rows[21] == "21,5");
  CHECK(rows[22] == "22,4");
  CHECK(rows[23] == "23,3");
  CHECK(rows[24] == "24,1");
}

TEST_CASE("chain output matches the 24-entry sequence") {
  const RunResult r = run("chain 357686312646216567629137 --direction left");
  CHECK(r.exit_code == 0);
  const auto rows = lines(r.output);
  REQUIRE(rows.size() == 24);
  CHECK(rows[0] == "7");
  CHECK(rows[1] == "37");
  CHECK(rows[2] == "137");
  CHECK(rows[3] == "9137");
  CHECK(rows[23] == "357686312646216567629137");
}

TEST_CASE("stats reports the even run") {
  const RunResult r = run("stats 357686312646216567629137");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "longest even run: 26462 (length 5)"));
  CHECK(contains(r.output, "odd digits:  12"));
}

TEST_CASE("verify exit codes") {
  CHECK(run("verify 23").exit_code == 0);

  const RunResult composite = run("verify 25");
  CHECK(composite.exit_code == 1);
  CHECK(contains(composite.output, "divisor 5"));

  const RunResult big = run("verify \"1(0^41)357686312646216567629137\" --anomalous-chain");
  CHECK(big.exit_code == 0);
  CHECK(contains(big.output, "probable_prime"));
  CHECK(contains(big.output, "anomalously left-truncatable: yes"));
}

TEST_CASE("verify accepts block form and emits the full decimal value") {
  const RunResult r = run("verify --blocks 13,9 --gaps 5 --format json");
  CHECK((r.exit_code == 0 || r.exit_code == 1));
  const auto j = nlohmann::json::parse(r.output);
  CHECK(j["value"] == "13000009");
  CHECK(j["digits"] == 8);
  CHECK(j["blocks"] == nlohmann::json::array({"13", "9"}));
}

TEST_CASE("gap-search finds the listed gaps for 1..7") {
  const RunResult r = run("gap-search --prefix 1 --suffix 7 --max-gap 60 --format csv");
  CHECK(r.exit_code == 0);
  const auto rows = lines(r.output);
  REQUIRE(rows.size() == 7);
  CHECK(rows[0] == "k,digits,kind");
  CHECK(rows[1] == "1,3,prime");
  CHECK(rows[6] == "59,61,probable_prime");
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("enumerate").exit_code == 2);                    // missing --direction
  CHECK(run("enumerate --direction sideways").exit_code == 2);
  CHECK(run("verify").exit_code == 2);                       // nothing to verify
  CHECK(run("frobnicate").exit_code == 2);                   // unknown subcommand
  CHECK(run("enumerate --direction right --bogus").exit_code == 2);
  CHECK(run("band-search --min-block-len 1 --max-gap 5").exit_code == 2);

  const RunResult bad = run("chain 12x34 --direction left");
  CHECK(bad.exit_code == 2);
  CHECK(contains(bad.output, "12x34"));  // names the offending token
}

TEST_CASE("cache write failure exits with 3") {
  CHECK(run("enumerate --direction right --cache /nonexistent-dir/deep/cache.json").exit_code ==
        3);
}

TEST_CASE("cache round trip through the CLI") {
  const auto dir = std::filesystem::temp_directory_path() / "chiral_cli_cache_test";
  std::filesystem::create_directories(dir);
  const std::string cache = (dir / "right.json").string();

  const RunResult first = run("enumerate --direction right --format csv --cache " + cache);
  CHECK(first.exit_code == 0);
  CHECK(std::filesystem::exists(cache));
  const RunResult second = run("enumerate --direction right --format csv --cache " + cache);
  CHECK(second.exit_code == 0);
  CHECK(first.output == second.output);
  std::filesystem::remove_all(dir);
}

TEST_CASE("machine output is byte-identical across thread counts") {
  const RunResult t1 = run("enumerate --direction right --format json --threads 1");
  const RunResult t4 = run("enumerate --direction right --format json --threads 4");
  CHECK(t1.exit_code == 0);
  CHECK(t1.output == t4.output);

  const RunResult g1 = run("gap-search --prefix 1 --suffix 3 --max-gap 40 --format json --seed 5 --threads 1");
  const RunResult g2 = run("gap-search --prefix 1 --suffix 3 --max-gap 40 --format json --seed 5 --threads 3");
  CHECK(g1.exit_code == 0);
  CHECK(g1.output == g2.output);
}

TEST_CASE("band-search json stream is reproducible") {
  const std::string args =
      "band-search --bands 2 --min-block-len 2 --max-block-len 2 --max-gap 3 "
      "--budget 10000 --format json --seed 11";
  const RunResult a = run(args + " --threads 1");
  const RunResult b = run(args + " --threads 2");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  const auto rows = lines(a.output);
  REQUIRE_FALSE(rows.empty());
  const auto summary = nlohmann::json::parse(rows.back());
  CHECK(summary["examined"] == 11 * 11 * 3);
}

TEST_CASE("compact gap syntax is accepted wherever a number is") {
  const RunResult r = run("stats \"13(0^5)9\" --format json");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  CHECK(j["subject"] == "13000009");
  CHECK(j["per_digit_counts"]["0"] == 5);
}
