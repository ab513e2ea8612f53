#pragma once

#include <cstddef>
#include <vector>

#include "spl/components.hpp"
#include "spl/graph.hpp"

namespace spl {

bool is_hereditary(const DirectedMultigraph& g, const VertexSet& h);
/// Every regular vertex whose out-edges all land in `h` is itself in `h`.
bool is_saturated(const DirectedMultigraph& g, const VertexSet& h);

/// A vertex subset together with its two closure flags, recomputed from the
/// definitions at construction.
struct HereditarySet {
  VertexSet members;
  bool hereditary = false;
  bool saturated = false;

  static HereditarySet classify(const DirectedMultigraph& g, VertexSet members);

  friend bool operator==(const HereditarySet& a, const HereditarySet& b) {
    return a.members == b.members;
  }
  friend auto operator<=>(const HereditarySet& a, const HereditarySet& b) {
    return a.members <=> b.members;
  }
};

VertexSet hereditary_closure(const DirectedMultigraph& g, const VertexSet& x);

/// Smallest hereditary saturated superset of `x`: the hereditary closure, then
/// the saturation steps X_{i+1} = X_i + {regular v : r(s^-1(v)) in X_i} to a
/// fixpoint.
HereditarySet saturated_hereditary_closure(const DirectedMultigraph& g, const VertexSet& x);
inline HereditarySet saturated_hereditary_closure(const SandpileGraph& g, const VertexSet& x) {
  return saturated_hereditary_closure(g.graph(), x);
}

/// Vertices with no path to any vertex lying on a cycle.
HereditarySet sink_shadow(const SandpileGraph& g);

/// closure(C^0).
HereditarySet component_principal_closure(const DirectedMultigraph& g, const CyclicComponent& c);

enum class EnumerationRoute { BruteForce, Filters, Both };

inline constexpr std::size_t kDefaultSubsetCap = 20;

/// All nonempty hereditary saturated subsets, in canonical order.
///
/// BruteForce scans every vertex subset (CapExceeded above `subset_cap`
/// vertices); Filters closes the union of each filter's components. Both runs
/// the two and throws InvalidArgument if they disagree; above the cap it
/// falls back to the filter route alone.
std::vector<HereditarySet> enumerate_hereditary_saturated(
    const SandpileGraph& g, EnumerationRoute route = EnumerationRoute::Both,
    std::size_t subset_cap = kDefaultSubsetCap);

/// Nonempty hereditary saturated subsets of an arbitrary finite graph by
/// subset scan. Used for vertex-simplicity of quotient graphs.
std::vector<VertexSet> brute_force_hereditary_saturated(const DirectedMultigraph& g,
                                                        std::size_t subset_cap = kDefaultSubsetCap);

/// The poset {S_E} + {H_C : C a cyclic component} under inclusion, with all
/// of its down-sets containing S_E.
struct PrincipalClosures {
  std::vector<VertexSet> members;                 // index 0 is S_E, 1 + i is H_{C_i}
  std::vector<std::vector<std::size_t>> ideals;   // canonical order
};

PrincipalClosures component_poset_ideals(const SandpileGraph& g);

struct Restriction {
  SandpileGraph graph;
  GraphEmbedding into_parent;
};

/// E_H: vertices H and every edge emitted from H. H must be a nonempty
/// hereditary saturated set (NotHereditary / NotSaturated otherwise).
Restriction restriction(const SandpileGraph& g, const VertexSet& h);

struct Quotient {
  DirectedMultigraph graph;
  GraphEmbedding into_parent;
};

/// E/H: vertices outside H and the edges whose range is outside H. The result
/// generally has no sink, so it is a plain multigraph.
Quotient quotient(const DirectedMultigraph& g, const VertexSet& h);

}  // namespace spl
