#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <map>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "caspol/cli.hpp"
#include "caspol/specfun.hpp"
#include "caspol/units.hpp"
#include "oracles.hpp"

using caspol::test::rel_diff;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = caspol::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

// Rows of a CSV without quoted fields, header included.
std::vector<std::vector<std::string>> csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  for (const std::string& line : split(text, '\n')) rows.push_back(split(line, ','));
  return rows;
}

std::size_t column(const std::vector<std::string>& header, const std::string& name) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  FAIL("missing column " << name);
  return 0;
}

std::filesystem::path scratch(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("caspol_test_" + name);
}

}  // namespace

TEST_CASE("potential at the midplane") {
  const Result r = run({"potential", "--geometry", "cc", "--a", "1", "--alpha", "1", "--beta", "0", "--z", "0.5"});
  REQUIRE(r.code == 0);
  const auto rows = csv(r.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == std::vector<std::string>{"z", "V_E", "V_M", "V_total", "force_z", "regime"});
  const double pi3 = caspol::kPi * caspol::kPi * caspol::kPi;
  CHECK(rel_diff(std::stod(rows[1][column(rows[0], "V_total")]), -11.0 * pi3 / 90.0) < 1e-12);
  CHECK(rows[1].back() == "exact");
}

TEST_CASE("empty atom gives zeros") {
  const Result r = run({"potential", "--geometry", "cc", "--a", "1", "--alpha", "0", "--beta", "0", "--z", "0.3"});
  REQUIRE(r.code == 0);
  const auto rows = csv(r.out);
  for (const char* name : {"V_E", "V_M", "V_total", "force_z"}) CHECK(std::stod(rows[1][column(rows[0], name)]) == 0.0);
}

TEST_CASE("repulsion near the permeable wall") {
  const Result r = run({"potential", "--geometry", "cp", "--a", "1", "--alpha", "1", "--beta", "0", "--z", "0.99",
                        "--guard-mode", "reject"});
  REQUIRE(r.code == 0);
  const auto rows = csv(r.out);
  CHECK(std::stod(rows[1][column(rows[0], "V_total")]) > 0.0);
}

TEST_CASE("exit codes") {
  CHECK(run({"potential", "--geometry", "cc", "--a", "1", "--alpha", "1", "--z", "1e-8"}).code == 2);
  const Result outside = run({"potential", "--geometry", "cc", "--a", "1", "--alpha", "1", "--z", "1.5"});
  CHECK(outside.code == 2);
  CHECK(outside.err.find("OutOfDomain") != std::string::npos);
  const Result guard = run({"potential", "--geometry", "cc", "--a", "1", "--alpha", "1", "--z", "1e-8"});
  CHECK(guard.err.find("TooCloseToWall") != std::string::npos);
  CHECK(run({"potential", "--geometry", "cc", "--a", "1"}).code == 1);
  CHECK(run({"potential", "--geometry", "xx", "--a", "1", "--z", "0.5"}).code == 1);
  CHECK(run({"potential", "--geometry", "cc", "--a", "nan", "--z", "0.5"}).code == 1);
  CHECK(run({"potential", "--geometry", "cc", "--a", "1", "--z", "0.5", "--units", "cgs"}).code == 1);
  CHECK(run({"sweep", "--geometry", "cc", "--a", "1", "--z-min", "0.1", "--z-max", "0.9", "--z-count", "5",
             "--quantities", "energy"})
            .code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"potential", "--geometry", "cc", "--a", "-1", "--z", "0.5"}).code == 2);
  CHECK(run({"limits", "--alpha", "1", "--z", "1", "--a-values", "20,10"}).code == 2);
}

TEST_CASE("correlator table") {
  const Result r = run({"correlators", "--geometry", "cp", "--a", "1", "--z-min", "0.2", "--z-max", "0.8", "--z-count",
                        "100"});
  REQUIRE(r.code == 0);
  const auto rows = csv(r.out);
  REQUIRE(rows.size() == 101);
  const auto& h = rows[0];
  const double sum0 = std::stod(rows[1][column(h, "trace_EE_plus_trace_BB")]);
  CHECK(sum0 > 0.0);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i][column(h, "EE_xx")] == rows[i][column(h, "EE_yy")]);
    CHECK(rows[i][column(h, "EE_xz")] == "0");
    CHECK(std::stod(rows[i][column(h, "EB_xy")]) == 0.0);
    CHECK(rel_diff(std::stod(rows[i][column(h, "trace_EE_plus_trace_BB")]), sum0) < 1e-12);
  }

  const Result quarter = run({"correlators", "--geometry", "cp", "--a", "1", "--z", "0.25"});
  const Result three = run({"correlators", "--geometry", "cp", "--a", "1", "--z", "0.75"});
  const auto q = csv(quarter.out);
  const auto t = csv(three.out);
  CHECK(q[1][column(q[0], "EE_zz")] != t[1][column(t[0], "EE_zz")]);
}

TEST_CASE("sweep output") {
  const std::vector<std::string> args = {"sweep", "--geometry", "cc", "--a", "1", "--alpha", "1", "--z-min", "0.1",
                                         "--z-max", "0.9", "--z-count", "101"};
  const Result r = run(args);
  REQUIRE(r.code == 0);
  CHECK(split(r.out, '\n').size() == 102);
  CHECK(csv(r.out)[0] == std::vector<std::string>{"z", "V", "force", "regime"});

  SUBCASE("reruns are byte identical, also across threads") {
    CHECK(run(args).out == r.out);
    std::vector<std::string> threaded = args;
    threaded.insert(threaded.end(), {"--threads", "4"});
    CHECK(run(threaded).out == r.out);
  }

  SUBCASE("limit reference column") {
    std::vector<std::string> with = args;
    with.push_back("--emit-limit-reference");
    const auto rows = csv(run(with).out);
    CHECK(rows[0] == std::vector<std::string>{"z", "V", "force", "V_wall", "regime"});
  }

  SUBCASE("json carries the same numbers") {
    std::vector<std::string> json_args = args;
    json_args.insert(json_args.end(), {"--format", "json"});
    const Result j = run(json_args);
    REQUIRE(j.code == 0);
    const auto doc = nlohmann::json::parse(j.out);
    const auto rows = csv(r.out);
    REQUIRE(doc.size() == rows.size() - 1);
    for (std::size_t i = 0; i < doc.size(); ++i) {
      CHECK(doc[i]["z"].get<double>() == std::stod(rows[i + 1][0]));
      CHECK(doc[i]["V"].get<double>() == std::stod(rows[i + 1][1]));
      CHECK(doc[i]["force"].get<double>() == std::stod(rows[i + 1][2]));
      CHECK(doc[i]["regime"].get<std::string>() == rows[i + 1][3]);
    }
  }

  SUBCASE("SI output divides back to natural units") {
    std::vector<std::string> si = args;
    si.insert(si.end(), {"--units", "si"});
    const auto natural = csv(r.out);
    const auto scaled = csv(run(si).out);
    REQUIRE(scaled.size() == natural.size());
    for (std::size_t i = 1; i < natural.size(); ++i) {
      CHECK(scaled[i][0] == natural[i][0]);
      CHECK(rel_diff(std::stod(scaled[i][1]) / caspol::kHbarC, std::stod(natural[i][1])) < 1e-12);
    }
  }
}

TEST_CASE("output file") {
  const auto path = scratch("sweep.csv");
  const Result r = run({"sweep", "--geometry", "cp", "--a", "2", "--alpha", "1", "--beta", "0.5", "--z-min", "0.1",
                        "--z-max", "1.9", "--z-count", "7", "--out", path.string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path, std::ios::binary);
  std::stringstream content;
  content << in.rdbuf();
  CHECK(split(content.str(), '\n').size() == 8);
  CHECK(content.str().find('\r') == std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("config file") {
  const auto path = scratch("config.txt");
  {
    std::ofstream cfg(path);
    cfg << "# midplane run\n"
        << "geometry = cc\n"
        << "--a = 1\n"
        << "alpha = 1\n"
        << "z = 0.25   # overridden below\n";
  }
  const Result r = run({"potential", "--config", path.string(), "--z", "0.5"});
  REQUIRE(r.code == 0);
  CHECK(csv(r.out)[1][0] == "0.5");

  {
    std::ofstream cfg(path);
    cfg << "geometry = cc\nspeed = 3\n";
  }
  CHECK(run({"potential", "--config", path.string(), "--a", "1", "--z", "0.5"}).code == 1);
  CHECK(run({"potential", "--config", (path.string() + ".missing"), "--a", "1", "--z", "0.5"}).code == 1);
  std::filesystem::remove(path);

  const auto raw = caspol::cli::parse_config_text("a=2\n--emit-limit-reference\n\n  format = \"json\" \n");
  CHECK(raw.at("a") == "2");
  CHECK(raw.at("emit-limit-reference") == "true");
  CHECK(raw.at("format") == "json");
  CHECK_THROWS_AS(static_cast<void>(caspol::cli::parse_config_text("= 3\n")), caspol::cli::ConfigError);
}

TEST_CASE("limits table") {
  const Result r = run({"limits", "--wall", "conducting", "--alpha", "1", "--z", "1", "--a-values", "10,20,40,80"});
  REQUIRE(r.code == 0);
  const auto rows = csv(r.out);
  REQUIRE(rows.size() == 5);
  CHECK(rows[0] == std::vector<std::string>{"a", "V_exact", "V_limit", "rel_error", "status"});
  for (std::size_t i = 2; i < rows.size(); ++i) CHECK(std::stod(rows[i][3]) < std::stod(rows[i - 1][3]));
  CHECK(r.err.find("exponent") != std::string::npos);

  const auto flat = csv(run({"limits", "--alpha", "1", "--beta", "1", "--z", "1", "--a-values", "10,20"}).out);
  CHECK(flat[1][3].empty());
  CHECK(flat[1][4] == "limit degenerate");
}

TEST_CASE("verify") {
  const Result text = run({"verify", "--level", "quick"});
  CHECK(text.code == 0);
  CHECK(text.out.find("FAIL") == std::string::npos);

  const Result j = run({"verify", "--level", "quick", "--format", "json"});
  REQUIRE(j.code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["pass"].get<bool>());
  std::map<std::string, int> seen;
  for (const auto& c : doc["checks"]) ++seen[c["name"].get<std::string>()];
  for (const auto& [name, count] : seen) {
    CAPTURE(name);
    CHECK(count == 1);
  }
  CHECK(seen.count("F_expansion_near_0") == 1);
  CHECK(run({"verify", "--level", "medium"}).code == 1);
}
