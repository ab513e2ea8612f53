#include "generators.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace spl::gen {

std::size_t below(std::mt19937_64& rng, std::size_t n) { return n ? rng() % n : 0; }

DirectedMultigraph multigraph(std::mt19937_64& rng, std::size_t n, std::size_t max_edges) {
  DirectedMultigraph g;
  for (std::size_t i = 0; i < n; ++i) g.add_vertex("n" + std::to_string(i));
  if (n == 0) return g;
  const std::size_t m = below(rng, max_edges + 1);
  for (std::size_t i = 0; i < m; ++i)
    g.add_edge("f" + std::to_string(i), below(rng, n), below(rng, n));
  return g;
}

SandpileGraph sandpile(std::mt19937_64& rng, std::size_t sites, std::size_t max_degree) {
  std::vector<std::vector<std::size_t>> out(sites);
  for (std::size_t v = 0; v < sites; ++v) {
    const std::size_t d = 1 + below(rng, max_degree);
    for (std::size_t i = 0; i < d; ++i) out[v].push_back(below(rng, sites + 1));
  }
  // Patch reachability: walk vertices in order, adding a sink edge where needed.
  for (;;) {
    std::vector<bool> ok(sites + 1, false);
    ok[sites] = true;
    for (bool grew = true; grew;) {
      grew = false;
      for (std::size_t v = 0; v < sites; ++v)
        if (!ok[v] && std::any_of(out[v].begin(), out[v].end(), [&](std::size_t r) { return ok[r]; }))
          ok[v] = grew = true;
    }
    const auto bad = std::find(ok.begin(), ok.end(), false);
    if (bad == ok.end()) break;
    out[bad - ok.begin()].push_back(sites);
  }
  DirectedMultigraph g;
  for (std::size_t v = 0; v < sites; ++v) g.add_vertex(std::string(1, char('a' + v)));
  const VertexId sink = g.add_vertex("z");
  std::size_t k = 0;
  for (std::size_t v = 0; v < sites; ++v)
    for (std::size_t r : out[v]) g.add_edge("e" + std::to_string(k++), v, r);
  return validate_sandpile(std::move(g), sink);
}

SandpileGraph small_sandpile(std::mt19937_64& rng, std::size_t max_sites, std::size_t max_degree) {
  return sandpile(rng, below(rng, max_sites + 1), max_degree);
}

Configuration configuration(std::mt19937_64& rng, const SandpileGraph& g, std::uint64_t max) {
  Configuration c(g.vertex_count());
  for (VertexId v : g.sites()) c.set(v, below(rng, max + 1));
  return c;
}

SandpileGraph shuffled(std::mt19937_64& rng, const SandpileGraph& g) {
  const auto& gr = g.graph();
  std::vector<VertexId> order(gr.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<VertexId> renamed(gr.vertex_count());
  DirectedMultigraph h;
  for (VertexId v : order) renamed[v] = h.add_vertex("q" + std::to_string(v));
  std::vector<EdgeId> edges(gr.edge_count());
  std::iota(edges.begin(), edges.end(), 0);
  std::shuffle(edges.begin(), edges.end(), rng);
  for (EdgeId e : edges)
    h.add_edge("t" + std::to_string(e), renamed[gr.edge(e).source], renamed[gr.edge(e).range]);
  return validate_sandpile(std::move(h), renamed[g.sink()]);
}

IntegerMatrix matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
  IntegerMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = lo + static_cast<int>(below(rng, static_cast<std::size_t>(hi - lo + 1)));
  return m;
}

}  // namespace spl::gen
