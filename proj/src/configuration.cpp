#include "spl/configuration.hpp"

#include <deque>
#include <limits>

#include "spl/error.hpp"

namespace spl {

namespace {

void require_graph(const SandpileGraph& g, const Configuration& c) {
  if (c.vertex_count() != g.vertex_count())
    throw Error(Errc::GraphMismatch, "configuration has " + std::to_string(c.vertex_count()) +
                                         " slots, graph has " +
                                         std::to_string(g.vertex_count()) + " vertices");
}

}  // namespace

Configuration Configuration::single(std::size_t vertex_count, VertexId v, std::uint64_t chips) {
  Configuration c(vertex_count);
  c.set(v, chips);
  return c;
}

void Configuration::add_chips(VertexId v, std::uint64_t chips) {
  auto& slot = counts_.at(v);
  if (slot > std::numeric_limits<std::uint64_t>::max() - chips)
    throw Error(Errc::Overflow, "chip count exceeds 64 bits");
  slot += chips;
}

Configuration& Configuration::operator+=(const Configuration& other) {
  if (other.vertex_count() != vertex_count())
    throw Error(Errc::GraphMismatch, "configurations over different vertex sets");
  for (VertexId v = 0; v < counts_.size(); ++v) add_chips(v, other.counts_[v]);
  return *this;
}

std::uint64_t Configuration::total() const {
  std::uint64_t sum = 0;
  for (auto c : counts_) {
    if (sum > std::numeric_limits<std::uint64_t>::max() - c)
      throw Error(Errc::Overflow, "total chip count exceeds 64 bits");
    sum += c;
  }
  return sum;
}

VertexSet Configuration::support() const {
  VertexSet s(counts_.size());
  for (VertexId v = 0; v < counts_.size(); ++v)
    if (counts_[v] != 0) s.insert(v);
  return s;
}

bool Configuration::is_zero() const {
  for (auto c : counts_)
    if (c != 0) return false;
  return true;
}

StableConfiguration StableConfiguration::check(const SandpileGraph& g, Configuration c) {
  require_graph(g, c);
  if (c[g.sink()] != 0 || !is_stable(g, c))
    throw Error(Errc::InvalidArgument, "configuration is not stable");
  return StableConfiguration(std::move(c));
}

bool is_stable(const SandpileGraph& g, const Configuration& c) {
  require_graph(g, c);
  for (VertexId v : g.sites())
    if (c[v] >= g.out_degree(v)) return false;
  return true;
}

Configuration fire(const SandpileGraph& g, const Configuration& c, VertexId v) {
  require_graph(g, c);
  if (v == g.sink() || c[v] < g.out_degree(v))
    throw Error(Errc::NotFireable, "vertex '" + g.graph().vertex_name(v) + "' holds " +
                                       std::to_string(v < c.vertex_count() ? c[v] : 0) +
                                       " chips");
  Configuration out = c;
  out.set(v, c[v] - g.out_degree(v));
  for (EdgeId e : g.graph().out_edges(v)) {
    const VertexId r = g.graph().edge(e).range;
    if (r != g.sink()) out.add_chips(r, 1);
  }
  out.set(g.sink(), 0);
  return out;
}

StableConfiguration stabilize(const SandpileGraph& g, Configuration c, std::uint64_t budget) {
  require_graph(g, c);
  c.set(g.sink(), 0);
  (void)c.total();  // Overflow check; the total only shrinks from here on.

  const DirectedMultigraph& graph = g.graph();
  std::deque<VertexId> queue;
  std::vector<bool> queued(g.vertex_count(), false);
  for (VertexId v : g.sites())
    if (c[v] >= g.out_degree(v)) {
      queue.push_back(v);
      queued[v] = true;
    }
  std::uint64_t steps = 0;
  while (!queue.empty()) {
    if (++steps > budget)
      throw Error(Errc::BudgetExceeded, "stabilization exceeded " + std::to_string(budget) +
                                            " steps");
    const VertexId v = queue.front();
    queue.pop_front();
    queued[v] = false;
    const std::uint64_t deg = g.out_degree(v);
    const std::uint64_t times = c[v] / deg;
    if (times == 0) continue;
    // Toppling `times` times in a row is legal: each toppling removes at most
    // deg chips from v, and c[v] >= times * deg.
    c.set(v, c[v] - times * deg);
    for (EdgeId e : graph.out_edges(v)) {
      const VertexId r = graph.edge(e).range;
      if (r == g.sink()) continue;
      c.add_chips(r, times);
      if (!queued[r] && c[r] >= g.out_degree(r)) {
        queue.push_back(r);
        queued[r] = true;
      }
    }
  }
  return StableConfiguration(std::move(c));
}

StableConfiguration add(const SandpileGraph& g, const StableConfiguration& a,
                        const StableConfiguration& b) {
  require_graph(g, a.config());
  require_graph(g, b.config());
  Configuration sum = a.config();
  sum += b.config();
  return stabilize(g, std::move(sum));
}

bool equals(const SandpileGraph& g, const Configuration& a, const Configuration& b) {
  return stabilize(g, a) == stabilize(g, b);
}

}  // namespace spl
