#include "spl/corpus.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "spl/error.hpp"

namespace spl {

namespace {

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(std::mt19937_64& rng) { return uniform(rng, 0, 1) == 1; }

// Edge list under construction; names are assigned when the graph is built.
struct Draft {
  std::size_t sites = 0;  // vertex `sites` is the sink
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::size_t parallel(std::size_t s, std::size_t r) const {
    return std::count(edges.begin(), edges.end(), std::make_pair(s, r));
  }

  SandpileGraph build() const {
    DirectedMultigraph g;
    for (std::size_t i = 0; i < sites; ++i) g.add_vertex("v" + std::to_string(i + 1));
    const VertexId sink = g.add_vertex("s");
    // Sort by source so each vertex's edges read together in the file.
    auto sorted = edges;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i < sorted.size(); ++i)
      g.add_edge("e" + std::to_string(i + 1), sorted[i].first, sorted[i].second);
    return validate_sandpile(std::move(g), sink);
  }
};

// Vertices with a path to the sink.
std::vector<bool> reaching_sink(const Draft& d) {
  std::vector<bool> ok(d.sites + 1, false);
  ok[d.sites] = true;
  for (bool grew = true; grew;) {
    grew = false;
    for (const auto& [s, r] : d.edges)
      if (ok[r] && !ok[s]) ok[s] = grew = true;
  }
  return ok;
}

}  // namespace

SandpileGraph random_sandpile(std::mt19937_64& rng, const CorpusSpec& spec) {
  if (spec.max_out_degree == 0 || spec.max_parallel == 0)
    throw Error(Errc::InvalidArgument, "corpus bounds must be positive");
  for (;;) {
    Draft d;
    d.sites = uniform(rng, std::min<std::size_t>(1, spec.max_sites), spec.max_sites);
    // Forward edges and loops make layered graphs with several cyclic
    // components; uniform targets mostly give one big component.
    const unsigned forward = std::array<unsigned, 3>{0, 60, 90}[uniform(rng, 0, 2)];
    std::uint64_t product = 1;
    for (std::size_t v = 0; v < d.sites; ++v) {
      const std::size_t deg = uniform(rng, 1, spec.max_out_degree);
      product *= deg;
      for (std::size_t i = 0; i < deg; ++i) {
        std::size_t r = uniform(rng, 0, d.sites);
        if (uniform(rng, 0, 99) < forward)
          r = uniform(rng, 0, 2) == 0 ? v : uniform(rng, v + 1, d.sites);
        for (std::size_t tries = 0; d.parallel(v, r) >= spec.max_parallel && tries <= d.sites;
             ++tries)
          r = (r + 1) % (d.sites + 1);
        d.edges.push_back({v, r});
      }
    }
    if (product > spec.monoid_cap) continue;

    // Sink-path repair: point one edge of a stranded vertex at a vertex that
    // reaches the sink. Each pass strands strictly fewer vertices.
    for (auto ok = reaching_sink(d);
         std::find(ok.begin(), ok.end(), false) != ok.end(); ok = reaching_sink(d)) {
      std::vector<std::size_t> stranded, good;
      for (std::size_t v = 0; v <= d.sites; ++v) (ok[v] ? good : stranded).push_back(v);
      const std::size_t v = stranded[uniform(rng, 0, stranded.size() - 1)];
      std::vector<std::size_t> own;
      for (std::size_t i = 0; i < d.edges.size(); ++i)
        if (d.edges[i].first == v) own.push_back(i);
      const std::size_t slot = own[uniform(rng, 0, own.size() - 1)];
      d.edges[slot].second = good[uniform(rng, 0, good.size() - 1)];
    }
    return d.build();
  }
}

std::vector<SandpileGraph> generate_corpus(const CorpusSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  std::vector<SandpileGraph> out;
  out.reserve(spec.count);
  for (std::size_t i = 0; i < spec.count; ++i) out.push_back(random_sandpile(rng, spec));
  return out;
}

std::vector<SandpileGraph> generate_single_component(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<SandpileGraph> out;
  for (std::size_t n = 0; n < count; ++n) {
    // Layout: upstream [0, up), core [up, up + k), downstream after, sink last.
    const std::size_t up = uniform(rng, 0, 2);
    const std::size_t k = uniform(rng, 1, 3);
    const std::size_t down = uniform(rng, 0, 2);
    Draft d;
    d.sites = up + k + down;
    const std::size_t core = up, below = up + k, sink = d.sites;

    for (std::size_t i = 0; i < k; ++i) d.edges.push_back({core + i, core + (i + 1) % k});
    if (coin(rng)) {  // a second cycle inside the core
      const std::size_t a = core + uniform(rng, 0, k - 1);
      d.edges.push_back({a, core + uniform(rng, 0, k - 1)});
    }
    const std::size_t exits = uniform(rng, 1, 2);
    for (std::size_t i = 0; i < exits; ++i)
      d.edges.push_back({core + uniform(rng, 0, k - 1), uniform(rng, below, sink)});
    for (std::size_t i = below; i < sink; ++i) {
      const std::size_t deg = uniform(rng, 1, 2);
      for (std::size_t j = 0; j < deg; ++j) d.edges.push_back({i, uniform(rng, i + 1, sink)});
    }
    for (std::size_t i = 0; i < up; ++i) {
      // Anything later in the layout keeps the upstream region acyclic.
      d.edges.push_back({i, uniform(rng, core, core + k - 1)});
      if (coin(rng)) d.edges.push_back({i, uniform(rng, i + 1, sink)});
    }
    out.push_back(d.build());
  }
  return out;
}

}  // namespace spl
