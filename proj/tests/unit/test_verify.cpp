#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "coverlab/errors.hpp"
#include "coverlab/io.hpp"
#include "coverlab/verify.hpp"
#include "support.hpp"

using namespace coverlab;

TEST_CASE("catalog") {
  CHECK(suite_catalog().size() == 26);
  CHECK(is_known_suite("lp-cross-check"));
  CHECK_FALSE(is_known_suite("nope"));
  CHECK_THROWS_AS(run_suite("nope"), PreconditionError);
  for (const SuiteInfo& s : suite_catalog()) CHECK(s.default_nmax >= 7);
}

TEST_CASE("every suite passes on small orders") {
  for (const SuiteInfo& s : suite_catalog()) {
    SuiteOptions o;
    o.nmax = 5;
    const VerificationReport r = run_suite(s.name, o);
    INFO(s.name);
    CHECK(r.passed());
    CHECK(r.skipped == 0);
    CHECK(r.instances > 0);
  }
}

TEST_CASE("dedup does not change verdicts") {
  for (const SuiteInfo& s : suite_catalog()) {
    SuiteOptions labeled, dedup;
    labeled.nmax = dedup.nmax = 5;
    dedup.dedup = true;
    const VerificationReport a = run_suite(s.name, labeled), b = run_suite(s.name, dedup);
    INFO(s.name);
    CHECK(a.passed() == b.passed());
    CHECK(b.instances <= a.instances);
  }
}

TEST_CASE("reports are deterministic across worker counts") {
  SuiteOptions one, three;
  one.nmax = three.nmax = 6;
  one.threads = 1;
  three.threads = 3;
  for (const char* name : {"lp-cross-check", "join-formula", "family-chain"}) {
    const std::string a = report_json(run_suite(name, one)).dump();
    const std::string b = report_json(run_suite(name, three)).dump();
    CHECK(a == b);
  }
}

TEST_CASE("instance counts by order") {
  SuiteOptions o;
  o.nmax = 4;
  o.dedup = true;
  const VerificationReport r = run_suite("exchange-equivalence", o);
  std::uint64_t total = 0;
  for (const auto& [n, count] : r.instances_by_order) total += count;
  CHECK(total == r.instances);
}

TEST_CASE("single instances") {
  const InstanceOutcome lp = check_instance("lp-cross-check", support::figure2());
  CHECK(lp.applicable);
  CHECK_FALSE(lp.failure);
  const InstanceOutcome mixed = check_instance("lp-cross-check", path_graph(3));
  CHECK_FALSE(mixed.applicable);
  CHECK_THROWS_AS(check_instance("join-formula", cycle_graph(5)), PreconditionError);
}

TEST_CASE("worker count") {
  CHECK(worker_count(3) == 3);
  CHECK(worker_count(0) >= 1);
}

TEST_CASE("builtin examples") {
  std::vector<ExampleResult> details;
  const VerificationReport r = run_examples(&details);
  for (const ExampleResult& d : details) {
    INFO(d.example << ": " << d.what << " expected " << d.expected << " got " << d.actual);
    CHECK(d.ok);
  }
  CHECK(r.passed());
  CHECK(builtin_examples().size() >= 30);
}
