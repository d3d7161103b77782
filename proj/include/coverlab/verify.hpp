#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coverlab/graph.hpp"

namespace coverlab {

struct Certificate {
  SimpleGraph graph;
  std::string diagnosis;
};

struct VerificationReport {
  std::string suite;
  std::string statement;
  int nmin = 1;
  int nmax = 0;
  bool dedup = false;
  std::uint64_t scanned = 0;    // graphs generated
  std::uint64_t instances = 0;  // graphs meeting the hypothesis
  std::uint64_t skipped = 0;    // over budget
  std::vector<std::pair<int, std::uint64_t>> instances_by_order;
  std::vector<Certificate> failures;
  std::vector<Certificate> skips;

  bool passed() const { return failures.empty(); }
};

struct SuiteInfo {
  std::string name;
  std::string statement;
  int default_nmax = 7;
};

const std::vector<SuiteInfo>& suite_catalog();
bool is_known_suite(const std::string& name);

struct SuiteOptions {
  int nmax = 0;                          // 0: the suite default
  bool dedup = false;                    // one graph per isomorphism class
  std::uint64_t minor_budget = 10'000'000;
  int threads = 0;                       // 0: COVERLAB_THREADS or hardware
};

// Throws PreconditionError for an unknown suite name.
VerificationReport run_suite(const std::string& name, const SuiteOptions& options = {});

struct InstanceOutcome {
  bool applicable = false;
  bool skipped = false;
  std::optional<std::string> failure;
};

// The check of one suite on one graph. Not available for the suites that
// build their own instances (join-formula, hr-structure).
InstanceOutcome check_instance(const std::string& name, const SimpleGraph& g, const SuiteOptions& options = {});

// Worker count from COVERLAB_THREADS, else the hardware, at least 1.
int worker_count(int requested = 0);

struct Expectation {
  std::string what;
  std::string expected;
  std::string source;  // "worked example", "figure", "structural formula", "external formula", "brute force"
  std::function<std::string(const SimpleGraph&)> actual;
};

struct ExampleCase {
  std::string name;
  std::string description;
  SimpleGraph graph;
  std::vector<Expectation> expectations;
};

const std::vector<ExampleCase>& builtin_examples();

struct ExampleResult {
  std::string example;
  std::string what;
  std::string expected;
  std::string actual;
  std::string source;
  bool ok = false;
};

std::vector<ExampleResult> evaluate_example(const ExampleCase& c);
// Every expectation of every builtin example; a mismatch is a failure.
VerificationReport run_examples(std::vector<ExampleResult>* details = nullptr);

}  // namespace coverlab
