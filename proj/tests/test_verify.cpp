#include <doctest.h>

#include <json.hpp>

#include "ppdet/verify.hpp"

using namespace ppdet;

TEST_CASE("suite names and unknown suite") {
  auto names = suite_names();
  CHECK(names.size() == 11);
  CHECK(names.back() == "all");
  SweepOptions opts;
  CHECK_THROWS_AS(run_suite("nope", opts), std::invalid_argument);
}

TEST_CASE("small sweeps pass") {
  SweepOptions opts;
  opts.max_n = 3;
  opts.max_x = 2;
  opts.max_y = 2;
  for (const std::string name :
       {"theorem1", "thm2", "cor3", "thm8", "thm9", "thm10", "thm11", "thm12",
        "thm13"}) {
    VerificationReport rep = run_suite(name, opts);
    CAPTURE(name);
    CHECK(rep.failed() == 0);
    CHECK(rep.checked() > 0);
    CHECK(!rep.aborted);
  }
}

TEST_CASE("appendix sweep passes") {
  SweepOptions opts;
  opts.max_n = 4;
  VerificationReport rep = run_suite("appendix", opts);
  CHECK(rep.failed() == 0);
  CHECK(rep.checked() > 0);
}

TEST_CASE("reports are deterministic across schedules") {
  SweepOptions serial;
  serial.max_n = 3;
  serial.jobs = 1;
  SweepOptions parallel = serial;
  parallel.jobs = 4;
  const std::string a = render_json(run_suite("thm8", serial));
  const std::string b = render_json(run_suite("thm8", parallel));
  const std::string c = render_json(run_suite("thm8", parallel));
  CHECK(a == b);
  CHECK(b == c);
}

TEST_CASE("json round-trips to its canonical form") {
  SweepOptions opts;
  opts.max_n = 2;
  VerificationReport rep = run_suite("thm10", opts);
  const std::string out = render_json(rep);
  nlohmann::json parsed = nlohmann::json::parse(out);
  CHECK(parsed.dump() == out);
  CHECK(parsed["summary"]["failed"] == 0);
  CHECK(parsed["records"].is_array());
  CHECK(!parsed["records"].empty());
  const auto& r0 = parsed["records"][0];
  CHECK(r0.contains("identity"));
  CHECK(r0.contains("params"));
  CHECK(r0.contains("lhs"));
  CHECK(r0.contains("rhs"));
  CHECK(r0.contains("equal"));
  CHECK(r0.contains("elapsed_ms"));
  CHECK(r0["elapsed_ms"] == 0);  // timings off keeps output reproducible
}

TEST_CASE("csv rendering") {
  SweepOptions opts;
  opts.max_n = 1;
  VerificationReport rep = run_suite("thm13", opts);
  const std::string csv = render_csv(rep);
  CHECK(csv.rfind("identity,params,lhs,rhs,equal,elapsed_ms\n", 0) == 0);
  CHECK(csv.find("thm13.ct=product") != std::string::npos);
}

TEST_CASE("deadline aborts with a partial prefix") {
  SweepOptions opts;
  opts.max_n = 3;
  opts.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
  VerificationReport rep = run_suite("thm8", opts);
  CHECK(rep.aborted);
  CHECK(rep.records.empty());
}

TEST_CASE("table rendering marks failures") {
  VerificationReport rep;
  rep.suite = "demo";
  IdentityRecord bad;
  bad.identity = "demo.check";
  bad.lhs = Rational(1);
  bad.rhs = Rational(2);
  bad.equal = false;
  rep.records.push_back(bad);
  const std::string table = render_table(rep);
  CHECK(table.find("FAIL") != std::string::npos);
  CHECK(table.find("failed 1") != std::string::npos);
}
