#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "spl/graph.hpp"

namespace spl {

/// Chip counts, one per vertex of a fixed graph. Chips on the sink are erased
/// whenever a sandpile operation touches the configuration (s = 0).
///
/// Counts are 64-bit. Toppling never increases the number of chips off the
/// sink, so no intermediate count exceeds the starting total; totals that do
/// not fit in 64 bits are rejected with Overflow.
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(std::size_t vertex_count) : counts_(vertex_count, 0) {}
  Configuration(std::initializer_list<std::uint64_t> counts) : counts_(counts) {}

  static Configuration single(std::size_t vertex_count, VertexId v, std::uint64_t chips = 1);

  std::size_t vertex_count() const { return counts_.size(); }
  std::uint64_t operator[](VertexId v) const { return counts_.at(v); }
  std::span<const std::uint64_t> counts() const { return counts_; }

  void set(VertexId v, std::uint64_t chips) { counts_.at(v) = chips; }
  void add_chips(VertexId v, std::uint64_t chips);  // Overflow
  Configuration& operator+=(const Configuration& other);

  /// Throws Overflow when the total does not fit in 64 bits.
  std::uint64_t total() const;
  VertexSet support() const;
  bool is_zero() const;

  friend bool operator==(const Configuration&, const Configuration&) = default;
  friend auto operator<=>(const Configuration&, const Configuration&) = default;

 private:
  std::vector<std::uint64_t> counts_;
};

/// A configuration with every non-sink count below the out-degree. Only
/// produced by stabilize or by StableConfiguration::check.
class StableConfiguration {
 public:
  const Configuration& config() const { return config_; }
  std::uint64_t operator[](VertexId v) const { return config_[v]; }

  /// Throws InvalidArgument unless `c` is stable for `g` with no sink chips.
  static StableConfiguration check(const SandpileGraph& g, Configuration c);

  friend bool operator==(const StableConfiguration&, const StableConfiguration&) = default;
  friend auto operator<=>(const StableConfiguration&, const StableConfiguration&) = default;

 private:
  friend StableConfiguration stabilize(const SandpileGraph&, Configuration, std::uint64_t);
  explicit StableConfiguration(Configuration c) : config_(std::move(c)) {}
  Configuration config_;
};

inline constexpr std::uint64_t kDefaultFiringBudget = 100'000'000;

bool is_stable(const SandpileGraph& g, const Configuration& c);

/// One toppling at v: out-degree(v) chips leave v, one along each out-edge;
/// chips landing on the sink vanish. Throws NotFireable.
Configuration fire(const SandpileGraph& g, const Configuration& c, VertexId v);

/// Topples until stable, sweeping vertices in canonical order and toppling a
/// vertex as many times as its current count allows. `budget` bounds the
/// number of sweep steps; exceeding it (BudgetExceeded) indicates a defect,
/// since stabilization terminates on every sandpile graph.
StableConfiguration stabilize(const SandpileGraph& g, Configuration c,
                              std::uint64_t budget = kDefaultFiringBudget);

/// stabilize(a + b). Throws GraphMismatch on size mismatch.
StableConfiguration add(const SandpileGraph& g, const StableConfiguration& a,
                        const StableConfiguration& b);

/// Equality in the sandpile monoid: equal stabilizations.
bool equals(const SandpileGraph& g, const Configuration& a, const Configuration& b);

}  // namespace spl
