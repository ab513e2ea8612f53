#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace spl {

using VertexId = std::size_t;
using EdgeId = std::size_t;

/// Subset of a fixed vertex universe {0, ..., n-1}.
///
/// The ordering is the canonical one used for every enumeration in the
/// library: smaller sets first, ties broken lexicographically on the sorted
/// member list.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : bits_(universe, false) {}
  VertexSet(std::size_t universe, std::initializer_list<VertexId> members);

  static VertexSet full(std::size_t universe);
  static VertexSet from_members(std::size_t universe, std::span<const VertexId> members);

  std::size_t universe() const { return bits_.size(); }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }
  bool contains(VertexId v) const { return v < bits_.size() && bits_[v]; }

  void insert(VertexId v);
  void erase(VertexId v);

  std::vector<VertexId> members() const;
  bool is_subset_of(const VertexSet& other) const;

  VertexSet operator|(const VertexSet& other) const;
  VertexSet operator&(const VertexSet& other) const;
  VertexSet operator-(const VertexSet& other) const;
  VertexSet complement() const;

  friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.bits_ == b.bits_; }
  friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b);

 private:
  std::vector<bool> bits_;
  std::size_t count_ = 0;
};

struct Edge {
  std::string name;
  VertexId source;
  VertexId range;
};

/// Finite directed multigraph; loops and parallel edges are allowed.
/// Declaration order of vertices and edges is the canonical order.
class DirectedMultigraph {
 public:
  VertexId add_vertex(std::string name);
  EdgeId add_edge(std::string name, VertexId source, VertexId range);
  EdgeId add_edge(std::string name, std::string_view source, std::string_view range);

  std::size_t vertex_count() const { return vertex_names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::string& vertex_name(VertexId v) const { return vertex_names_.at(v); }
  std::optional<VertexId> find_vertex(std::string_view name) const;
  VertexId vertex(std::string_view name) const;  // throws UnknownVertex
  std::optional<EdgeId> find_edge(std::string_view name) const;
  EdgeId edge_id(std::string_view name) const;  // throws InvalidArgument

  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const EdgeId> out_edges(VertexId v) const { return out_.at(v); }
  std::span<const EdgeId> in_edges(VertexId v) const { return in_.at(v); }
  std::size_t out_degree(VertexId v) const { return out_.at(v).size(); }
  bool is_sink(VertexId v) const { return out_.at(v).empty(); }

  std::vector<VertexId> sinks() const;
  VertexSet all_vertices() const { return VertexSet::full(vertex_count()); }

  /// Vertices reachable from `from` (including `from` itself).
  VertexSet reachable_from(const VertexSet& from) const;
  /// Vertices that admit a path into `to` (including `to` itself).
  VertexSet reaching(const VertexSet& to) const;

  friend bool operator==(const DirectedMultigraph& a, const DirectedMultigraph& b);

 private:
  std::vector<std::string> vertex_names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<std::vector<EdgeId>> in_;
  std::map<std::string, VertexId, std::less<>> vertex_index_;
  std::map<std::string, EdgeId, std::less<>> edge_index_;
};

/// A graph with a unique sink that every vertex can reach. Instances only come
/// out of validate_sandpile, so the invariants hold for every value.
class SandpileGraph {
 public:
  const DirectedMultigraph& graph() const { return graph_; }
  VertexId sink() const { return sink_; }
  std::size_t vertex_count() const { return graph_.vertex_count(); }
  std::size_t out_degree(VertexId v) const { return graph_.out_degree(v); }

  /// Non-sink vertices in canonical order.
  const std::vector<VertexId>& sites() const { return sites_; }

  friend bool operator==(const SandpileGraph& a, const SandpileGraph& b) {
    return a.sink_ == b.sink_ && a.graph_ == b.graph_;
  }

 private:
  friend SandpileGraph validate_sandpile(DirectedMultigraph g, std::optional<VertexId> sink);
  SandpileGraph(DirectedMultigraph g, VertexId sink);

  DirectedMultigraph graph_;
  VertexId sink_;
  std::vector<VertexId> sites_;
};

/// Checks the sandpile conditions. Without an explicit sink the unique sink is
/// inferred. Throws NoSink, MultipleSinks or Unreachable.
SandpileGraph validate_sandpile(DirectedMultigraph g, std::optional<VertexId> sink = std::nullopt);

/// Edge weights. Balanced means every edge out of v weighs out-degree(v).
struct BalancedWeighting {
  std::vector<std::uint64_t> weight;  // indexed by edge id

  static BalancedWeighting of(const DirectedMultigraph& g);
  bool is_balanced_for(const DirectedMultigraph& g) const;
};

/// Maps the vertices and edges of a derived graph back into its parent.
struct GraphEmbedding {
  std::vector<VertexId> vertex_to_parent;
  std::vector<EdgeId> edge_to_parent;
};

/// Induced subgraph on `keep`, retaining edges selected by `keep_edge`.
/// Names are carried over unchanged.
template <typename EdgePredicate>
DirectedMultigraph induced_subgraph(const DirectedMultigraph& g, const VertexSet& keep,
                                    EdgePredicate keep_edge, GraphEmbedding* embedding) {
  DirectedMultigraph out;
  std::vector<VertexId> local(g.vertex_count(), 0);
  if (embedding) *embedding = {};
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!keep.contains(v)) continue;
    local[v] = out.add_vertex(g.vertex_name(v));
    if (embedding) embedding->vertex_to_parent.push_back(v);
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (!keep.contains(ed.source) || !keep.contains(ed.range) || !keep_edge(e)) continue;
    out.add_edge(ed.name, local[ed.source], local[ed.range]);
    if (embedding) embedding->edge_to_parent.push_back(e);
  }
  return out;
}

}  // namespace spl
