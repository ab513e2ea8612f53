#include "spl/graph.hpp"

#include <algorithm>
#include <deque>

#include "spl/error.hpp"

namespace spl {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::NoSink: return "NoSink";
    case Errc::MultipleSinks: return "MultipleSinks";
    case Errc::Unreachable: return "Unreachable";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::DuplicateVertex: return "DuplicateVertex";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::NotHereditary: return "NotHereditary";
    case Errc::NotSaturated: return "NotSaturated";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::NotFireable: return "NotFireable";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::GraphMismatch: return "GraphMismatch";
    case Errc::NotAGroup: return "NotAGroup";
    case Errc::WeightMismatch: return "WeightMismatch";
    case Errc::SearchCapExceeded: return "SearchCapExceeded";
    case Errc::Overflow: return "Overflow";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// VertexSet

VertexSet::VertexSet(std::size_t universe, std::initializer_list<VertexId> members)
    : bits_(universe, false) {
  for (VertexId v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  s.bits_.assign(universe, true);
  s.count_ = universe;
  return s;
}

VertexSet VertexSet::from_members(std::size_t universe, std::span<const VertexId> members) {
  VertexSet s(universe);
  for (VertexId v : members) s.insert(v);
  return s;
}

void VertexSet::insert(VertexId v) {
  if (v >= bits_.size()) throw Error(Errc::InvalidArgument, "vertex outside universe");
  if (!bits_[v]) {
    bits_[v] = true;
    ++count_;
  }
}

void VertexSet::erase(VertexId v) {
  if (v < bits_.size() && bits_[v]) {
    bits_[v] = false;
    --count_;
  }
}

std::vector<VertexId> VertexSet::members() const {
  std::vector<VertexId> out;
  out.reserve(count_);
  for (VertexId v = 0; v < bits_.size(); ++v)
    if (bits_[v]) out.push_back(v);
  return out;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  for (VertexId v = 0; v < bits_.size(); ++v)
    if (bits_[v] && !other.contains(v)) return false;
  return true;
}

VertexSet VertexSet::operator|(const VertexSet& other) const {
  VertexSet out(std::max(universe(), other.universe()));
  for (VertexId v = 0; v < out.universe(); ++v)
    if (contains(v) || other.contains(v)) out.insert(v);
  return out;
}

VertexSet VertexSet::operator&(const VertexSet& other) const {
  VertexSet out(std::max(universe(), other.universe()));
  for (VertexId v = 0; v < out.universe(); ++v)
    if (contains(v) && other.contains(v)) out.insert(v);
  return out;
}

VertexSet VertexSet::operator-(const VertexSet& other) const {
  VertexSet out(universe());
  for (VertexId v = 0; v < out.universe(); ++v)
    if (contains(v) && !other.contains(v)) out.insert(v);
  return out;
}

VertexSet VertexSet::complement() const {
  VertexSet out(universe());
  for (VertexId v = 0; v < out.universe(); ++v)
    if (!contains(v)) out.insert(v);
  return out;
}

std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  const auto am = a.members();
  const auto bm = b.members();
  return std::lexicographical_compare_three_way(am.begin(), am.end(), bm.begin(), bm.end());
}

// ---------------------------------------------------------------------------
// DirectedMultigraph

VertexId DirectedMultigraph::add_vertex(std::string name) {
  if (vertex_index_.contains(name))
    throw Error(Errc::DuplicateVertex, "vertex '" + name + "' declared twice");
  const VertexId id = vertex_names_.size();
  vertex_index_.emplace(name, id);
  vertex_names_.push_back(std::move(name));
  out_.emplace_back();
  in_.emplace_back();
  return id;
}

EdgeId DirectedMultigraph::add_edge(std::string name, VertexId source, VertexId range) {
  if (source >= vertex_count() || range >= vertex_count())
    throw Error(Errc::UnknownVertex, "edge '" + name + "' references an undeclared vertex");
  const EdgeId id = edges_.size();
  if (name.empty()) name = "e" + std::to_string(id);
  if (edge_index_.contains(name))
    throw Error(Errc::DuplicateEdge, "edge '" + name + "' declared twice");
  edge_index_.emplace(name, id);
  edges_.push_back(Edge{std::move(name), source, range});
  out_[source].push_back(id);
  in_[range].push_back(id);
  return id;
}

EdgeId DirectedMultigraph::add_edge(std::string name, std::string_view source,
                                    std::string_view range) {
  return add_edge(std::move(name), vertex(source), vertex(range));
}

std::optional<VertexId> DirectedMultigraph::find_vertex(std::string_view name) const {
  auto it = vertex_index_.find(name);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

VertexId DirectedMultigraph::vertex(std::string_view name) const {
  auto v = find_vertex(name);
  if (!v) throw Error(Errc::UnknownVertex, "no vertex named '" + std::string(name) + "'");
  return *v;
}

std::optional<EdgeId> DirectedMultigraph::find_edge(std::string_view name) const {
  auto it = edge_index_.find(name);
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

EdgeId DirectedMultigraph::edge_id(std::string_view name) const {
  auto e = find_edge(name);
  if (!e) throw Error(Errc::InvalidArgument, "no edge named '" + std::string(name) + "'");
  return *e;
}

std::vector<VertexId> DirectedMultigraph::sinks() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < vertex_count(); ++v)
    if (is_sink(v)) out.push_back(v);
  return out;
}

VertexSet DirectedMultigraph::reachable_from(const VertexSet& from) const {
  VertexSet seen(vertex_count());
  std::deque<VertexId> queue;
  for (VertexId v : from.members()) {
    seen.insert(v);
    queue.push_back(v);
  }
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (EdgeId e : out_[v]) {
      const VertexId w = edges_[e].range;
      if (!seen.contains(w)) {
        seen.insert(w);
        queue.push_back(w);
      }
    }
  }
  return seen;
}

VertexSet DirectedMultigraph::reaching(const VertexSet& to) const {
  VertexSet seen(vertex_count());
  std::deque<VertexId> queue;
  for (VertexId v : to.members()) {
    seen.insert(v);
    queue.push_back(v);
  }
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (EdgeId e : in_[v]) {
      const VertexId w = edges_[e].source;
      if (!seen.contains(w)) {
        seen.insert(w);
        queue.push_back(w);
      }
    }
  }
  return seen;
}

bool operator==(const DirectedMultigraph& a, const DirectedMultigraph& b) {
  if (a.vertex_names_ != b.vertex_names_ || a.edges_.size() != b.edges_.size()) return false;
  for (std::size_t i = 0; i < a.edges_.size(); ++i) {
    const Edge& x = a.edges_[i];
    const Edge& y = b.edges_[i];
    if (x.name != y.name || x.source != y.source || x.range != y.range) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// SandpileGraph

SandpileGraph::SandpileGraph(DirectedMultigraph g, VertexId sink)
    : graph_(std::move(g)), sink_(sink) {
  for (VertexId v = 0; v < graph_.vertex_count(); ++v)
    if (v != sink_) sites_.push_back(v);
}

SandpileGraph validate_sandpile(DirectedMultigraph g, std::optional<VertexId> sink) {
  if (g.vertex_count() == 0) throw Error(Errc::NoSink, "graph has no vertices");
  if (!sink) {
    const auto sinks = g.sinks();
    if (sinks.empty()) throw Error(Errc::NoSink, "every vertex emits an edge");
    if (sinks.size() > 1)
      throw Error(Errc::MultipleSinks, "vertices '" + g.vertex_name(sinks[0]) + "' and '" +
                                           g.vertex_name(sinks[1]) + "' are both sinks");
    sink = sinks.front();
  }
  if (*sink >= g.vertex_count()) throw Error(Errc::UnknownVertex, "sink is not a vertex");
  if (!g.is_sink(*sink))
    throw Error(Errc::NoSink, "designated sink '" + g.vertex_name(*sink) + "' emits edges");
  const VertexSet co_accessible = g.reaching(VertexSet(g.vertex_count(), {*sink}));
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!co_accessible.contains(v))
      throw Error(Errc::Unreachable, "vertex '" + g.vertex_name(v) + "' has no path to the sink");
  }
  return SandpileGraph(std::move(g), *sink);
}

// ---------------------------------------------------------------------------
// BalancedWeighting

BalancedWeighting BalancedWeighting::of(const DirectedMultigraph& g) {
  BalancedWeighting w;
  w.weight.reserve(g.edge_count());
  for (const Edge& e : g.edges()) w.weight.push_back(g.out_degree(e.source));
  return w;
}

bool BalancedWeighting::is_balanced_for(const DirectedMultigraph& g) const {
  if (weight.size() != g.edge_count()) return false;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (weight[e] != g.out_degree(g.edge(e).source)) return false;
  return true;
}

}  // namespace spl
