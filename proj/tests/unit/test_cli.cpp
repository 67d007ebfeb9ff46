#include <doctest.h>

#include "cli.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "ratcat");
  std::ostringstream out;
  std::ostringstream err;
  const int code = ratcat::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<nlohmann::json> jsonl(const std::string& text) {
  std::vector<nlohmann::json> rows;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) rows.push_back(nlohmann::json::parse(line));
  return rows;
}

}  // namespace

TEST_CASE("count") {
  const auto r = run({"count", "3", "3", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["c_gen"] == "10");
  CHECK(j["gcd"] == "3");
  CHECK(j["block_length"] == "2");
  CHECK(j["words"] == "20");
  CHECK(j["dyck_count"] == "5");
  CHECK(j["necklace_count"] == "4");
  CHECK(j["marked_count"] == "10");

  const auto one = nlohmann::json::parse(run({"count", "1", "1", "--format", "json"}).out);
  CHECK(one["c_gen"] == "1");
  CHECK(one["dyck_count"] == "1");
  CHECK(one["necklace_count"] == "1");
  CHECK(one["marked_count"] == "1");
  CHECK(one["words"] == "2");

  const auto r23 = nlohmann::json::parse(run({"count", "2", "3", "--format", "json"}).out);
  CHECK(r23["c_gen"] == "2");
  CHECK(r23["dyck_count"] == "2");

  const auto text = run({"count", "3", "3"});
  CHECK(text.out.find("c_gen: 10\n") != std::string::npos);

  const auto guarded = run({"count", "20", "20", "--limit", "1000"});
  CHECK(guarded.code == ratcat::cli::kTooLarge);
  CHECK(guarded.err.find("--limit") != std::string::npos);

  const auto formula = run({"count", "40", "40", "--formula-only", "--format", "json"});
  REQUIRE(formula.code == 0);
  // 40 * binom(80,40) / 80, evaluated independently
  CHECK(nlohmann::json::parse(formula.out)["c_gen"] == "53753604366668088230810");

  CHECK(run({"count", "0", "3"}).code == ratcat::cli::kUsage);
  CHECK(run({"count", "3"}).code == ratcat::cli::kUsage);
}

TEST_CASE("qcat") {
  const auto j = nlohmann::json::parse(run({"qcat", "2", "2", "--format", "json"}).out);
  CHECK(j["coefficients"] == nlohmann::json::array({"1", "1", "1"}));
  CHECK(j["value_at_1"] == "3");
  CHECK(nlohmann::json::parse(run({"qcat", "1", "1", "--format", "json"}).out)["coefficients"] ==
        nlohmann::json::array({"1"}));
  const auto text = run({"qcat", "3", "3"});
  CHECK(text.out.find("value_at_1: 10") != std::string::npos);
}

TEST_CASE("paths") {
  const auto rows = jsonl(run({"paths", "3", "3"}).out);
  REQUIRE(rows.size() == 5);
  std::vector<std::string> weights;
  for (const auto& r : rows) weights.push_back(r["w_p"]);
  CHECK(weights == std::vector<std::string>{"3", "3", "3/2", "3/2", "1"});
  CHECK(rows[4]["word"] == "URURUR");
  CHECK(rows[4]["a"] == "3");
  CHECK(rows[4]["anchors"][0]["x"] == "1");

  const auto r23 = jsonl(run({"paths", "2", "3"}).out);
  REQUIRE(r23.size() == 2);
  CHECK(r23[0]["word"] == "UURRR");
  CHECK(r23[1]["word"] == "URURR");
  CHECK(jsonl(run({"paths", "1", "1"}).out).size() == 1);
  CHECK(run({"paths", "12", "12", "--limit", "10"}).code == ratcat::cli::kTooLarge);
}

TEST_CASE("necklaces") {
  const auto rows = jsonl(run({"necklaces", "3", "3"}).out);
  REQUIRE(rows.size() == 4);
  std::vector<std::string> wn;
  for (const auto& r : rows) wn.push_back(r["w_n"]);
  CHECK(wn == std::vector<std::string>{"3", "3", "3", "1"});
  CHECK(rows[2]["canonical"] == "UURRUR");
  CHECK(rows[2]["blocks"] == nlohmann::json::array({"UU", "RR", "UR"}));
  CHECK(rows[2]["distinguishable"] == nlohmann::json::array({"0", "1", "2"}));
  CHECK(rows[3]["orbit_size"] == "2");
  CHECK(rows[3]["r"] == "3");
  CHECK(rows[3]["period"] == "2");

  CHECK(jsonl(run({"necklaces", "2", "2"}).out).size() == 2);
  CHECK(jsonl(run({"necklaces", "1", "1"}).out).size() == 1);
  CHECK(jsonl(run({"necklaces", "3", "3", "--marked"}).out).size() == 10);
  CHECK(run({"necklaces", "5", "4", "--algorithm", "fkm"}).out ==
        run({"necklaces", "5", "4"}).out);
}

TEST_CASE("verify") {
  const auto r = run({"verify", "--max-sum", "6"});
  CHECK(r.code == 0);
  const auto rows = jsonl(r.out);
  REQUIRE(rows.size() == 15 * 6 + 1);
  CHECK(rows.back()["summary"]["pass"] == true);
  bool saw33 = false;
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    CHECK(rows[i]["pass"] == true);
    if (rows[i]["m"] == "3" && rows[i]["n"] == "3") saw33 = true;
  }
  CHECK(saw33);
  CHECK(run({"verify", "--max-sum", "6"}).out == r.out);

  const auto single = jsonl(run({"verify", "--max-sum", "2", "--checks", "1"}).out);
  REQUIRE(single.size() == 2);
  CHECK(single[0]["m"] == "1");

  const auto text = run({"verify", "--max-sum", "4", "--format", "text", "--checks", "2,3"});
  CHECK(text.code == 0);
  CHECK(text.out.find("ALL PASS") != std::string::npos);

  CHECK(run({"verify", "--max-sum", "1"}).code == ratcat::cli::kUsage);
  CHECK(run({"verify", "--checks", "theorem9"}).code == ratcat::cli::kUsage);

  const auto partial = run({"verify", "--max-sum", "10", "--time-budget-ms", "0"});
  CHECK(partial.code == ratcat::cli::kChecksFailed);
  CHECK(jsonl(partial.out).back()["summary"]["complete"] == false);
}

TEST_CASE("render") {
  const auto path = run({"render", "path", "UR", "1", "1"});
  REQUIRE(path.code == 0);
  CHECK(path.out.find("class=\"anchor\"") != std::string::npos);

  CHECK(run({"render", "path", "()(())"}).out == run({"render", "path", "URUURR", "3", "3"}).out);
  CHECK(run({"render", "path", "RU"}).code == ratcat::cli::kUsage);
  CHECK(run({"render", "path", "UR", "2", "2"}).code == ratcat::cli::kUsage);

  const auto neck = run({"render", "necklace", "UURRUR", "--mark", "2"});
  REQUIRE(neck.code == 0);
  CHECK(neck.out.find("data-block=\"2\"") != std::string::npos);
  CHECK(run({"render", "necklace", "URURUR", "--mark", "1"}).code == ratcat::cli::kUsage);

  const auto dir = std::filesystem::temp_directory_path() / "ratcat_cli_test";
  std::filesystem::create_directories(dir);
  const auto file = dir / "fig.svg";
  std::filesystem::remove(file);
  const auto gallery = run({"render", "gallery", "3", "3", "-o", file.string()});
  REQUIRE(gallery.code == 0);
  CHECK(gallery.out.empty());
  std::ifstream in(file);
  const std::string written((std::istreambuf_iterator<char>(in)), {});
  CHECK(written == run({"render", "gallery", "3", "3"}).out);
  CHECK_FALSE(std::filesystem::exists(dir / "fig.svg.tmp"));

  CHECK(run({"render", "gallery", "3", "3", "-o", (dir / "missing" / "x.svg").string()}).code ==
        ratcat::cli::kIoError);
  CHECK(run({"render", "gallery", "7", "7", "--max-necklaces", "5"}).code ==
        ratcat::cli::kTooLarge);
}

TEST_CASE("table") {
  const auto r = run({"table", "--max-sum", "10"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("m,n,c_gen\n1,1,1\n", 0) == 0);
  CHECK(r.out.find("\n3,3,10\n") != std::string::npos);
  CHECK(r.out.find("\n4,6,42\n") != std::string::npos);
  // rows sorted by (m+n, m)
  CHECK(r.out.find("\n1,2,") < r.out.find("\n2,1,"));
  CHECK(r.out.find("\n9,1,") > r.out.find("\n1,9,"));
}
