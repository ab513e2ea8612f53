#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "spl/configuration.hpp"
#include "spl/graph.hpp"
#include "spl/monoid.hpp"

namespace spl {

/// Topples one unstable vertex at a time, chosen uniformly by `rng`, until
/// stable. Independent of stabilize's sweep order.
Configuration stabilize_by_schedule(const SandpileGraph& g, Configuration c, std::mt19937_64& rng);

/// Random configuration with each non-sink count in [0, 2 * out-degree].
Configuration random_configuration(const SandpileGraph& g, std::mt19937_64& rng);

enum class Check {
  Confluence,
  FiveWay,
  Archimedean,
  GroupOracle,
  ChainEquivalences,
  TwoIdempotent,
  SubmonoidEmbedding,
  DirectLimit,
  Structure,
};
inline constexpr Check kAllChecks[] = {
    Check::Confluence,     Check::FiveWay,           Check::Archimedean,
    Check::GroupOracle,    Check::ChainEquivalences, Check::TwoIdempotent,
    Check::SubmonoidEmbedding, Check::DirectLimit,   Check::Structure,
};
std::string_view to_string(Check c);

struct CheckResult {
  Check check = Check::Confluence;
  bool pass = false;
  std::string detail;  // empty on PASS
  double millis = 0;
};

struct GraphVerdict {
  std::size_t index = 0;
  std::string graph_file;  // re-runnable serialization
  std::size_t monoid_size = 0;
  std::vector<CheckResult> checks;
  bool pass() const;
};

struct VerifyReport {
  std::vector<GraphVerdict> graphs;
  bool pass() const;
  /// Per check, how many graphs passed and failed.
  std::vector<std::pair<std::size_t, std::size_t>> tally() const;
};

struct VerifyOptions {
  std::size_t jobs = 0;  // 0: hardware concurrency
  std::uint64_t cap = kDefaultElementCap;
  std::size_t confluence_samples = 8;
  std::uint64_t seed = 0;  // confluence schedules
};

/// Every check on one graph. Exceptions become FAIL entries.
GraphVerdict verify_graph(const SandpileGraph& g, std::size_t index, const VerifyOptions& opts);

/// verify_graph over a bounded worker pool; results are in input order.
VerifyReport verify_all(const std::vector<SandpileGraph>& graphs, const VerifyOptions& opts = {});

}  // namespace spl
