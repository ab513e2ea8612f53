#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "spl/graph.hpp"

namespace spl {

/// Strongly connected components in canonical order (by smallest member).
/// Each component's members are sorted.
std::vector<std::vector<VertexId>> strongly_connected_components(const DirectedMultigraph& g);

/// Strongly connected component that contains at least one cycle. A lone
/// vertex without a loop is not one; a lone vertex with a loop is.
struct CyclicComponent {
  enum class Shape { SingleCycle, MultiCycle };

  std::size_t id = 0;
  VertexSet vertices;
  std::vector<EdgeId> representative_cycle;
  Shape shape = Shape::SingleCycle;

  bool is_single_cycle() const { return shape == Shape::SingleCycle; }
};

/// The cyclic components ordered by reachability.
///
/// Convention: C <= C' iff C' reaches C (a path runs from C' to C). This is
/// the order in which H_C is contained in H_{C'}; components near the sink
/// sit at the bottom.
class ComponentPoset {
 public:
  ComponentPoset() = default;
  ComponentPoset(std::vector<CyclicComponent> components, std::vector<std::vector<bool>> reaches,
                 std::vector<std::optional<std::size_t>> component_of);

  const std::vector<CyclicComponent>& components() const { return components_; }
  const CyclicComponent& operator[](std::size_t i) const { return components_.at(i); }
  std::size_t size() const { return components_.size(); }
  bool empty() const { return components_.empty(); }

  /// True iff a path runs from component `from` to component `to`.
  bool reaches(std::size_t from, std::size_t to) const { return reaches_.at(from).at(to); }
  bool leq(std::size_t a, std::size_t b) const { return reaches(b, a); }
  std::optional<std::size_t> component_of(VertexId v) const { return component_of_.at(v); }

  bool is_chain() const;
  /// Number of elements in a longest chain; 0 for the empty poset.
  std::size_t max_chain_length() const;
  /// Height of each component: 1 for components reaching no other component.
  std::vector<std::size_t> heights() const;

 private:
  std::vector<CyclicComponent> components_;
  std::vector<std::vector<bool>> reaches_;
  std::vector<std::optional<std::size_t>> component_of_;
};

ComponentPoset cyclic_components(const DirectedMultigraph& g);
inline ComponentPoset cyclic_components(const SandpileGraph& g) { return cyclic_components(g.graph()); }

/// Set of cyclic components closed under reachability: if C is a member and C
/// reaches C', then C' is a member.
struct Filter {
  std::vector<std::size_t> members;  // sorted component ids

  bool contains(std::size_t c) const;
  bool is_subset_of(const Filter& other) const;
  friend bool operator==(const Filter&, const Filter&) = default;
  friend std::strong_ordering operator<=>(const Filter& a, const Filter& b);
};

/// Every down-set of the finite order given by `leq` (leq[i][j] meaning
/// i <= j), including the empty one, in canonical order.
std::vector<std::vector<std::size_t>> enumerate_down_sets(const std::vector<std::vector<bool>>& leq);

std::vector<Filter> filters(const ComponentPoset& poset);
inline std::vector<Filter> filters(const SandpileGraph& g) { return filters(cyclic_components(g)); }

bool has_exit(const DirectedMultigraph& g, const CyclicComponent& c);

}  // namespace spl
