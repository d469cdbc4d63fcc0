#include <set>

#include <json.hpp>

#include "doctest.h"

#include "exactfield/errors.hpp"
#include "report/report.hpp"

using namespace winger;
using namespace winger::report;

namespace {

const Report &full_report()
{
  static const Report r = run_suite(Suite::All, Options{});
  return r;
}

} // namespace

TEST_CASE("suite names")
{
  CHECK(parse_suite("all") == Suite::All);
  CHECK(parse_suite("degenerations") == Suite::Degenerations);
  CHECK_THROWS_AS(parse_suite("All"), DomainError);
  CHECK_THROWS_AS(parse_suite(""), DomainError);
  for (const auto &n : suite_names())
    CHECK(suite_name(parse_suite(n)) == n);
}

TEST_CASE("full run covers every criterion once with unique ids")
{
  const auto &r = full_report();
  std::set<std::string> ids;
  for (const auto &c : r.claims) {
    CHECK(ids.insert(c.id).second);
    if (c.status == Status::Pass)
      CHECK(!c.witness.empty());
    CHECK(c.millis == 0);
  }
  REQUIRE(criterion_ids().size() == 13);
  for (const auto &id : criterion_ids())
    CHECK(ids.count(id) == 1);
  CHECK(r.failed_count() == 0);
  REQUIRE(r.find("discriminant") != nullptr);
  CHECK(r.find("discriminant")->status == Status::Skipped);
  CHECK(r.find("tuple-classes-20")->witness.rfind("20 classes", 0) == 0);
}

TEST_CASE("subcommands partition the full run")
{
  std::vector<std::string> joined;
  for (const auto &n : suite_names()) {
    if (n == "all")
      continue;
    for (const auto &c : run_suite(parse_suite(n), Options{}).claims)
      joined.push_back(c.id);
  }
  std::multiset<std::string> a(joined.begin(), joined.end());
  std::multiset<std::string> b;
  for (const auto &c : full_report().claims)
    b.insert(c.id);
  CHECK(a == b);
}

TEST_CASE("json schema")
{
  auto j = nlohmann::json::parse(full_report().to_json());
  CHECK(j["version"] == version());
  CHECK(j["convention"] == "rtl");
  REQUIRE(j["claims"].is_array());
  CHECK(j["claims"].size() == full_report().claims.size());
  for (const auto &c : j["claims"]) {
    CHECK(c.size() == 5);
    for (const char *key : {"id", "description", "status", "witness"})
      CHECK(c[key].is_string());
    CHECK(c["millis"].is_number_integer());
    std::string s = c["status"];
    CHECK((s == "pass" || s == "fail" || s == "skipped"));
  }
  std::string text = full_report().to_json();
  CHECK(text.find("\"version\"") < text.find("\"convention\""));
  CHECK(text.find("\"convention\"") < text.find("\"claims\""));
}

TEST_CASE("pencil lambda witnesses")
{
  auto r = run_suite(Suite::Pencil, Options{});
  CHECK(r.find("lambda-six-orbit")->witness.rfind("lambda = -1 ", 0) == 0);
  CHECK(r.find("lambda-ten-orbit")->witness.rfind("lambda = 27/5 ", 0) == 0);
  CHECK(r.find("lambda-fifteen-orbit")->witness.rfind("lambda = infinity ", 0) == 0);
}

TEST_CASE("corruptions make claims fail")
{
  Options o;
  o.corrupt_f = 0;
  auto r = run_suite(Suite::Pencil, o);
  CHECK(r.failed_count() > 0);
  CHECK(r.find("invariance")->status == Status::Fail);
  // the injection sweep itself works on the clean model
  CHECK(r.find("fault-injection")->status == Status::Pass);

  Options m;
  m.corrupt_matrix = MatrixCorruption{12, 4};
  auto rm = run_suite(Suite::Pencil, m);
  CHECK(rm.find("group-reconstruction")->status == Status::Fail);
  CHECK(rm.find("invariance")->status == Status::Fail);

  Options bad;
  bad.corrupt_f = 28;
  CHECK_THROWS_AS(run_suite(Suite::Covers, bad), DomainError);
  bad = Options{};
  bad.corrupt_matrix = MatrixCorruption{60, 0};
  CHECK_THROWS_AS(run_suite(Suite::Covers, bad), DomainError);
}

TEST_CASE("text report")
{
  auto r = run_suite(Suite::Homology, Options{});
  std::string t = r.to_text();
  CHECK(t.find("PASS    homology-lattice") != std::string::npos);
  CHECK(t.find("1 claims: 1 passed, 0 failed, 0 skipped") != std::string::npos);
}
