#pragma once

// Verification suites behind `eseq verify`. Each suite emits one Check per
// instance (or per family, for the large lemma sweeps) through a sink.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace eseq::cli {

enum class Suite { V2, V3, V5, Vp, Congruence, Series, Identity, Gauge, All };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view suite_name(Suite s);
/// Every suite name accepted by parse_suite, in run order ("all" last).
const std::vector<std::string>& suite_names();

struct Check {
  std::string suite;
  std::string name;
  std::string instance;
  bool pass = true;
  std::string detail;
};

struct VerifyOptions {
  std::size_t max_order = 50;
  std::uint64_t seed = 0x5eed;
  double tolerance = 1e-9;
  unsigned long trial_bound = 1'000'000;
};

/// Receives each check; returning false stops the run.
using CheckSink = std::function<bool(const Check&)>;

struct VerifySummary {
  std::size_t passed = 0;
  std::size_t failed = 0;
  bool stopped = false;
};

VerifySummary run_suite(Suite suite, const VerifyOptions& options, const CheckSink& sink);

}  // namespace eseq::cli
