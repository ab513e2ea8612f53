#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "spl/graph.hpp"

namespace spl {

struct CorpusSpec {
  std::size_t count = 0;
  std::size_t max_sites = 6;        // non-sink vertices
  std::size_t max_out_degree = 3;
  std::size_t max_parallel = 2;     // copies of one (source, range) pair
  std::uint64_t seed = 0;
  std::uint64_t monoid_cap = 100'000;
};

/// Random sandpile graphs, deterministic in the seed. Each vertex gets between
/// one and max_out_degree edges; vertices that cannot reach the sink have an
/// edge redirected to one that can, so the out-degree bound survives the
/// repair. Graphs whose out-degree product exceeds monoid_cap are redrawn.
std::vector<SandpileGraph> generate_corpus(const CorpusSpec& spec);

/// One graph of the corpus distribution.
SandpileGraph random_sandpile(std::mt19937_64& rng, const CorpusSpec& spec);

/// Graphs with exactly one cyclic component: a core cycle, optionally with
/// chords or extra loops, an acyclic region feeding into it and an acyclic
/// region below it that leads to the sink.
std::vector<SandpileGraph> generate_single_component(std::size_t count, std::uint64_t seed);

}  // namespace spl
