#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = tfreud::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) {
    if (!l.empty() && l.back() == '\r') l.pop_back();
    v.push_back(l);
  }
  return v;
}

std::vector<std::string> fields(const std::string& line) {
  std::vector<std::string> v;
  std::istringstream is(line);
  for (std::string f; std::getline(is, f, ',');) v.push_back(f);
  return v;
}

}  // namespace

TEST_CASE("moments csv") {
  const auto r = run({"moments", "--z", "1", "--nmax", "10", "--format", "csv"});
  REQUIRE(r.code == 0);
  CHECK(r.err.empty());
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 12);
  CHECK(ls[0] == "z,n,u_2n,recurrence_residual");
  CHECK(r.out.find("\r\n") != std::string::npos);
  for (std::size_t i = 1; i < ls.size(); ++i) {
    const auto f = fields(ls[i]);
    REQUIRE(f.size() == 4);
    CHECK(std::stod(f[3]) < 1e-25);
    CHECK((f[2].find("e+") != std::string::npos || f[2].find("e-") != std::string::npos));
  }
}

TEST_CASE("config errors exit 2") {
  CHECK(run({"moments", "--z", "0"}).code == 2);
  CHECK(run({"moments", "--z", "abc"}).code == 2);
  CHECK(run({"moments", "--nmax", "-3"}).code == 2);
  CHECK(run({"moments", "--format", "xml"}).code == 2);
  CHECK(run({"moments", "--z-grid", "1:0.5:3"}).code == 2);
  CHECK(run({"moments", "--z", "1", "--z-grid", "0.5:1:3"}).code == 2);
  CHECK(run({"gamma", "--route", "other"}).code == 2);
  CHECK(run({"table", "--which", "4"}).code == 2);
  CHECK(run({"table"}).code == 2);
  CHECK(run({"nosuch"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"moments", "--prec", "10"}).code == 2);
  const auto e = run({"moments", "--z", "0"});
  CHECK(e.out.empty());
  CHECK(e.err.find("positive") != std::string::npos);
}

TEST_CASE("json output follows the schema") {
  const auto r = run({"gamma", "--z", "1", "--nmax", "5", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["meta"]["z"] == "1");
  CHECK(doc["meta"]["nmax"] == 5);
  CHECK(doc["meta"]["precision_bits"] == 256);
  CHECK(doc["meta"]["version"].is_string());
  REQUIRE(doc["rows"].size() == 6);
  const auto& row0 = doc["rows"][0];
  CHECK(row0["n"] == 0);
  CHECK(row0["gamma"].get<std::string>().rfind("0.0", 0) == 0);
  CHECK(std::stod(row0["gamma"].get<std::string>()) == 0);
  CHECK(row0["h"].is_string());
  // round trip
  CHECK(nlohmann::json::parse(doc.dump()) == doc);
}

TEST_CASE("gamma on both routes agrees") {
  const auto r = run({"gamma", "--z", "1", "--nmax", "20", "--route", "both"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 22);
  for (std::size_t i = 1; i < ls.size(); ++i) CHECK(std::stod(fields(ls[i]).back()) < 1e-25);
}

TEST_CASE("low-precision Laguerre-Freud route reports the failing index") {
  const auto r = run({"gamma", "--z", "1", "--nmax", "60", "--route", "lf", "--prec", "64"});
  CHECK(r.code == 3);
  CHECK(r.err.find("positivity loss at index") != std::string::npos);
  CHECK(lines(r.out).size() > 5);
}

TEST_CASE("z grid") {
  const auto r = run({"zeros", "--z-grid", "0.5:1.5:3", "--n", "4"});
  REQUIRE(r.code == 0);
  CHECK(lines(r.out).size() == 13);
}

TEST_CASE("tables") {
  const auto t1 = run({"table", "--which", "1"});
  REQUIRE(t1.code == 0);
  const auto l1 = lines(t1.out);
  REQUIRE(l1.size() == 9);
  int mismatches = 0;
  for (std::size_t i = 1; i < l1.size(); ++i) mismatches += fields(l1[i]).back() == "MISMATCH";
  CHECK(mismatches == 2);

  const auto t3 = run({"table", "--which", "3"});
  REQUIRE(t3.code == 0);
  const auto l3 = lines(t3.out);
  REQUIRE(l3.size() == 18);
  CHECK(fields(l3[16]).back() == "DISCREPANT");
  CHECK(fields(l3[17]).back() == "DISCREPANT");
  CHECK(fields(l3[1]).back() == "OK");
}

TEST_CASE("dynamics defaults to gnuplot columns") {
  const auto r = run({"dynamics", "--n", "5", "--k", "5", "--z0", "0.2", "--z1", "1.5", "--steps", "32"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 34);
  CHECK(ls[0] == "# z x");
  std::istringstream last(ls.back());
  double z = 0, x = 0;
  last >> z >> x;
  CHECK(z == doctest::Approx(1.5));
  CHECK(x == doctest::Approx(1.1584658).epsilon(1e-5));
  CHECK(run({"dynamics", "--k", "9"}).code == 2);
}

TEST_CASE("verify exits 0 at z = 1") {
  const auto r = run({"verify", "--z", "1", "--nmax", "15", "--seed", "7"});
  CHECK(r.code == 0);
  CHECK(r.out.find(",FAIL,") == std::string::npos);
  CHECK(r.out.find(",NOTE,") != std::string::npos);
}

TEST_CASE("verify fails when the tolerance cannot be met") {
  const auto r = run({"verify", "--z", "1", "--nmax", "6", "--samples", "5", "--tol-identity", "1e-90"});
  CHECK(r.code == 1);
}

TEST_CASE("identical runs are byte-identical, also through --out") {
  const std::vector<std::string> args{"verify", "--z", "0.5", "--nmax", "8", "--seed", "3", "--samples", "10"};
  CHECK(run(args).out == run(args).out);

  const auto dir = std::filesystem::temp_directory_path();
  const auto p1 = (dir / "tfreud_cli_a.json").string();
  const auto p2 = (dir / "tfreud_cli_b.json").string();
  const auto a = run({"zeros", "--z", "1.2", "--n", "7", "--format", "json", "--out", p1});
  const auto b = run({"zeros", "--z", "1.2", "--n", "7", "--format", "json", "--out", p2});
  CHECK(a.code == 0);
  CHECK(a.out.empty());
  auto slurp = [](const std::string& p) {
    std::ifstream f(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(f), {});
  };
  const auto fa = slurp(p1);
  CHECK(!fa.empty());
  CHECK(fa == slurp(p2));
  std::filesystem::remove(p1);
  std::filesystem::remove(p2);
  CHECK(run({"moments", "--out", "/nonexistent/dir/x.csv"}).code == 2);
}

TEST_CASE("digits follow the tolerance") {
  const auto r = run({"moments", "--z", "1", "--nmax", "2", "--tol-identity", "1e-8"});
  REQUIRE(r.code == 0);
  const auto f = fields(lines(r.out)[1]);
  CHECK(f[2] == "1.6896772e+00");
}

TEST_CASE("help and version") {
  CHECK(run({"--help"}).code == 0);
  const auto v = run({"--version"});
  CHECK(v.code == 0);
  CHECK(!v.out.empty());
}
