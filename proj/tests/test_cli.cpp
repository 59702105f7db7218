#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = zlab::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t lines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

}  // namespace

TEST_CASE("cli list") {
  const auto count = run({"list", "--count"});
  CHECK(count.code == 0);
  CHECK(count.out.find("total: 155") != std::string::npos);
  CHECK(count.out.find("42: 70") != std::string::npos);

  const auto alt = run({"list", "--filter", "32*"});
  CHECK(lines(alt.out) == 3);
  CHECK(alt.out.find("LALT\tx -> (x -> y) ≈ (x -> x) -> y\n") != std::string::npos);
  CHECK(alt.out.find("FLEX") != std::string::npos);
  CHECK(alt.out.find("RALT") != std::string::npos);
  CHECK(lines(run({"list", "--filter", "44*"}).out) == 10);
  CHECK(lines(run({"list"}).out) == 155);

  const auto j = nlohmann::json::parse(run({"list", "--count", "--format", "json"}).out);
  CHECK(j["total"] == 155);
  CHECK(j["counts"]["43"] == 60);

  CHECK(run({"list", "--max-len", "5"}).code == zlab::cli::kUsage);
  CHECK(run({"list", "--filter", "99*"}).code == zlab::cli::kNotFound);
  CHECK(run({"frobnicate"}).code == zlab::cli::kUsage);
  CHECK(run({}).code == zlab::cli::kUsage);
}

TEST_CASE("cli check") {
  const auto all = run({"check", "2_s", "--all-waids"});
  CHECK(all.code == 0);
  CHECK(all.out.find("2_s: 155/155 pass") != std::string::npos);

  CHECK(run({"check", "A3", "--variety", "S"}).code == 0);
  const auto lemmas = run({"check", "T1", "--lemmas"});
  CHECK(lemmas.code == 0);
  CHECK(lemmas.out.find(" 0 fail") != std::string::npos);

  const auto fail = run({"check", "2_b", "--identity", "43A23"});
  CHECK(fail.code == zlab::cli::kCheckFailed);
  CHECK(fail.out.find("FAIL 43A23") != std::string::npos);

  CHECK(run({"check", "2_b", "--identity", "x -> y = y -> x"}).code == zlab::cli::kCheckFailed);
  CHECK(run({"check", "2_s", "--identity", "x -> y = y -> x"}).code == 0);
  CHECK(run({"check", "2_s"}).code == zlab::cli::kUsage);
  CHECK(run({"check", "nothere", "--variety", "S"}).code == zlab::cli::kUsage);
  CHECK(run({"check", "2_s", "--variety", "NOPE"}).code == zlab::cli::kUsage);
  CHECK(run({"check", "2_s", "--identity", "x -> = y"}).code == zlab::cli::kUsage);

  const auto path = std::filesystem::temp_directory_path() / "zlab_cli_bad.json";
  {
    std::ofstream f(path);
    f << R"({"table": [[0, 5], [1, 1]]})";
  }
  CHECK(run({"check", path.string(), "--variety", "S"}).code == zlab::cli::kData);
  std::filesystem::remove(path);

  const auto j = nlohmann::json::parse(run({"check", "2_b", "--identity", "43A23", "--format", "json"}).out);
  CHECK(j[0]["checks"][0]["holds"] == false);
  CHECK(j[0]["checks"][0]["witness"].size() == 3);
}

TEST_CASE("cli find") {
  const auto two = run({"find", "--size", "2", "--satisfy", "S", "--format", "json"});
  CHECK(two.code == 0);
  const auto j = nlohmann::json::parse(two.out);
  CHECK(j["count"] == 2);
  CHECK(j["models"][0]["name"] == "2_s");
  CHECK(j["models"][1]["name"] == "2_b");

  const auto sep = run({"find", "--max-size", "2", "--satisfy", "43A12", "--fail", "43A23", "--first"});
  CHECK(sep.code == 0);
  CHECK(sep.out.find("2_b (size 2)") != std::string::npos);

  CHECK(run({"find", "--max-size", "3", "--satisfy", "43A12", "--fail", "42C12"}).code ==
        zlab::cli::kNotFound);
  CHECK(run({"find", "--size", "5", "--satisfy", "S"}).code == zlab::cli::kUsage);
  CHECK(run({"find", "--size", "2", "--satisfy", "S,42A12", "--no-iso"}).code == 0);
  CHECK(run({"find", "--size", "2", "--satisfy", "S", "--fail", "S"}).code == zlab::cli::kUsage);
}

TEST_CASE("cli size cap override") {
  ::setenv("ZLAB_MAX_SIZE", "1", 1);
  CHECK(run({"find", "--size", "2", "--satisfy", "S"}).code == zlab::cli::kUsage);
  ::setenv("ZLAB_MAX_SIZE", "junk", 1);
  CHECK(run({"find", "--size", "1", "--satisfy", "S"}).code == zlab::cli::kUsage);
  ::unsetenv("ZLAB_MAX_SIZE");
  CHECK(run({"find", "--size", "2", "--satisfy", "S"}).code == 0);
}

TEST_CASE("cli classify and hasse") {
  const auto full = run({"classify", "--max-size", "4"});
  CHECK(full.code == 0);
  CHECK(full.out.find("6 blocks, diff: none") != std::string::npos);

  const auto catalog4 = run({"classify", "--models", "2_s", "2_b", "A3", "A4", "--format", "json"});
  CHECK(catalog4.code == 0);
  const auto j = nlohmann::json::parse(catalog4.out);
  CHECK(j["block_count"] == 6);
  CHECK(j["diff"].empty());

  CHECK(run({"classify", "--max-size", "2"}).code == zlab::cli::kClassificationDiff);
  CHECK(run({"classify", "--models", "T1", "--filter", "43A12"}).code == 0);
  CHECK(run({"classify", "--max-size", "2", "--models", "A3"}).code == zlab::cli::kUsage);

  const auto dot = std::filesystem::temp_directory_path() / "zlab_cli_hasse.dot";
  const auto h = run({"hasse", "--with-landmarks", "--dot", dot.string()});
  CHECK(h.code == 0);
  CHECK(h.out.find("8 nodes, 10 edges") != std::string::npos);
  std::ifstream f(dot);
  std::stringstream text;
  text << f.rdbuf();
  CHECK(text.str() == run({"hasse", "--with-landmarks", "--format", "dot", "--threads", "1"}).out);
  std::filesystem::remove(dot);
}

TEST_CASE("cli catalog") {
  const auto c = run({"catalog"});
  CHECK(c.code == 0);
  CHECK(c.out.find("2_b (size 2)\n  1 1\n  0 1\n") != std::string::npos);
  const auto j = nlohmann::json::parse(run({"catalog", "A3", "--format", "json"}).out);
  CHECK(j.size() == 1);
  CHECK(j[0]["table"][2] == nlohmann::json::array({0, 1, 2}));
  CHECK(run({"catalog", "A9"}).code == zlab::cli::kUsage);
}
