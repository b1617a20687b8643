#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "cli_app.hpp"
#include "doctest.h"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "cyclespec");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cyclespec_cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("exit codes") {
  CHECK(run({"sum", "--kind", "cosecant", "--m", "5", "--beta", "1/2", "--n", "1"}).code == 0);
  CHECK(run({"sum", "--kind", "cosecant", "--m", "5", "--beta", "2", "--n", "1"}).code == 2);
  CHECK(run({"sum", "--kind", "nope", "--m", "5", "--beta", "1/2", "--n", "1"}).code == 2);
  CHECK(run({"sum", "--m", "5"}).code == 2);
  CHECK(run({"sum", "--kind", "cosecant", "--m", "5", "--beta", "1/2", "--alpha", "1/2", "--n", "1"}).code == 2);
  CHECK(run({"lvalue", "--char", "5:2", "--n", "1", "--precision-bits", "20"}).code == 2);
  CHECK(run({"lvalue", "--char", "5:x", "--n", "1"}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  const Run bad = run({"lvalue", "--m", "5", "--char", "2", "--n", "2"});
  CHECK(bad.code == 3);
  CHECK(bad.err.find("verification failed") != std::string::npos);
  CHECK_FALSE(bad.out.empty());
}

TEST_CASE("text output") {
  const Run r = run({"sum", "--kind", "cosecant", "--m", "5", "--r", "0", "--beta", "1/2", "--n", "1"});
  CHECK(r.out.rfind("# sum ", 0) == 0);
  CHECK(r.out.find("precision_bits=128") != std::string::npos);
  CHECK(r.out.find("value") != std::string::npos);
}

TEST_CASE("reruns are byte-identical") {
  const std::vector<std::string> args = {"table", "--kind", "secant", "--m", "3:9", "--r", "all", "--alpha",
                                         "0.2", "--n", "1:3", "--threads", "4", "--format", "csv"};
  const Run a = run(args);
  const Run b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const Run c = run({"resolvent", "--m", "5", "--beta", "0.3", "--x", "2", "--s", "1+0.5i", "--format", "json"});
  CHECK(c.out == run({"resolvent", "--m", "5", "--beta", "0.3", "--x", "2", "--s", "1+0.5i", "--format", "json"}).out);
}

TEST_CASE("json output reruns from its own job echo") {
  const std::vector<std::vector<std::string>> jobs = {
      {"sum", "--kind", "cosecant", "--m", "7", "--r", "2", "--beta", "0.3", "--n", "3", "--method", "both"},
      {"lvalue", "--char", "13:2", "--n", "3", "--route", "all"},
      {"heat", "--m", "5", "--beta", "1/4", "--t", "2", "--x", "1", "--method", "both"},
      {"resolvent", "--m", "6", "--beta", "1/3", "--x", "2", "--s", "1+i", "--laplace-horizon", "60"},
      {"poles", "--m", "6", "--beta", "0"},
      {"characters", "--m", "8"},
  };
  for (auto args : jobs) {
    args.push_back("--format");
    args.push_back("json");
    const Run first = run(args);
    REQUIRE(first.code == 0);
    const nlohmann::json doc = nlohmann::json::parse(first.out);
    CHECK(doc["status"] == "ok");
    CHECK(doc["rows"].is_array());
    std::vector<std::string> again = {doc["job"]["command"].get<std::string>()};
    for (const auto& [k, v] : doc["job"]["parameters"].items()) {
      std::string key = k;
      for (char& ch : key) ch = ch == '_' ? '-' : ch;
      again.push_back("--" + key);
      again.push_back(v.get<std::string>());
    }
    again.push_back("--precision-bits");
    again.push_back(std::to_string(doc["job"]["precision_bits"].get<long>()));
    again.push_back("--format");
    again.push_back(doc["job"]["format"].get<std::string>());
    CHECK(run(again).out == first.out);
  }
}

TEST_CASE("json value encoding") {
  const Run r = run({"sum", "--kind", "cosecant", "--m", "5", "--beta", "1/2", "--n", "1", "--format", "json"});
  const nlohmann::json doc = nlohmann::json::parse(r.out);
  const auto& row = doc["rows"][0];
  CHECK(row["m"] == 5);
  CHECK(row["value"]["re"] == "5");
  CHECK(row["value"]["im"] == "0");
  CHECK(row["value"]["exact"] == "5");
}

TEST_CASE("csv quoting") {
  const Run r = run({"sum", "--kind", "cosecant", "--m", "7", "--r", "2", "--beta", "0.3", "--n", "1",
                     "--format", "csv"});
  std::istringstream lines(r.out);
  std::string header;
  std::string row;
  std::getline(lines, header);
  std::getline(lines, row);
  CHECK(header.find("value,value_exact") != std::string::npos);
  CHECK(row.find(",\"") != std::string::npos);
  CHECK(row.find("i\"") != std::string::npos);
}

TEST_CASE("output file") {
  const std::filesystem::path path = std::filesystem::temp_directory_path() / "cyclespec_cli_test.csv";
  std::filesystem::remove(path);
  const Run r = run({"poles", "--m", "4", "--format", "csv", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream body;
  body << in.rdbuf();
  CHECK(body.str() == run({"poles", "--m", "4", "--format", "csv"}).out);
  std::filesystem::remove(path);
}

TEST_CASE("verify reports failing criteria with exit 3") {
  const Run r = run({"verify", "--suite", "acceptance", "--max-m", "6"});
  CHECK(r.code == 3);
  CHECK(r.out.find("PASS 1 ") != std::string::npos);
  CHECK(r.out.find("FAIL 9 ") != std::string::npos);
  CHECK(run({"verify", "--suite", "everything"}).code == 2);
}

}
