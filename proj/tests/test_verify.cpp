#include <doctest.h>

#include "rwise/errors.hpp"
#include "rwise/verify.hpp"

using namespace rwise;

TEST_CASE("suite names") {
  CHECK(parse_suites("all").size() == 7);
  CHECK(parse_suites("pair-floor") == std::vector<Suite>{Suite::PairFloor});
  for (Suite s : parse_suites("all")) CHECK(parse_suites(to_string(s)).front() == s);
  CHECK_THROWS_AS(parse_suites("nope"), UsageError);
}

TEST_CASE("every suite passes at small settings") {
  VerifyOptions o;
  o.max_n = 7;
  o.max_k = 4;
  o.seed = 3;
  o.samples = 10;
  for (Suite s : parse_suites("all")) {
    const SuiteResult r = run_suite(s, o);
    CHECK_MESSAGE(r.failed == 0, to_string(s), ": ", (r.first_failure ? r.first_failure->detail : std::string()));
    CHECK(r.passed > 0);
  }
}

TEST_CASE("option validation") {
  VerifyOptions o;
  o.max_n = 40;
  CHECK_THROWS_AS(run_suite(Suite::Oracle, o), UsageError);
  o.max_n = 5;
  o.max_k = 6;
  CHECK_THROWS_AS(run_suite(Suite::Oracle, o), UsageError);
}
