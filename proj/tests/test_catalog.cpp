#include "doctest.h"
#include "strangedual/catalog.hpp"

using namespace strangedual;
using namespace strangedual::catalog;

TEST_CASE("glob matching") {
  CHECK(glob_match("*", "anything"));
  CHECK(glob_match("det-*", "det-rule-rs"));
  CHECK(glob_match("phi-?lus-addition", "phi-plus-addition"));
  CHECK_FALSE(glob_match("det-*", "smith-forms"));
  CHECK_FALSE(glob_match("", "x"));
  CHECK(glob_match("", ""));
}

TEST_CASE("filtered catalog run stays in catalog order") {
  RunOptions opts;
  opts.filter = "det-rule-*";
  auto rep = run_catalog(opts);
  REQUIRE(rep.checks.size() == 2);
  CHECK(rep.checks[0].id == "det-rule-rs");
  CHECK(rep.checks[1].id == "det-rule-rsdagger");
  CHECK(rep.checks[0].status == "pass");
  CHECK(rep.checks[1].status == "pass");
  CHECK(rep.ok());
}

TEST_CASE("report JSON round trip") {
  RunOptions opts;
  opts.filter = "smith-forms";
  auto rep = run_catalog(opts);
  auto text = report_to_json(rep);
  auto back = report_from_json(text);
  CHECK(back == rep);
}

TEST_CASE("catalog ids are unique and kebab-case") {
  auto ids = catalog_ids();
  CHECK(ids.size() >= 30);
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) CHECK(ids[i] != ids[j]);
    for (char ch : ids[i]) CHECK((std::islower(ch) || std::isdigit(ch) || ch == '-'));
  }
}

TEST_CASE("summary counts match the tallies") {
  RunOptions opts;
  opts.filter = "verlinde-*";
  auto rep = run_catalog(opts);
  int p = 0;
  for (const auto& c : rep.checks) p += (c.status == "pass");
  CHECK(rep.passed() == p);
  CHECK(rep.failed() == 0);
}
