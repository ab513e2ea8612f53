#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "spl/configuration.hpp"
#include "spl/graph.hpp"

namespace spl {

using ElementId = std::uint32_t;

inline constexpr std::uint64_t kDefaultElementCap = 1'000'000;

/// SP(E) enumerated as its stable configurations.
///
/// Element ids are mixed-radix codes of the counts over the non-sink vertices,
/// first site most significant, so id order is lexicographic order of the
/// count vectors and id 0 is the zero configuration. Adding one chip is
/// tabulated (the Cayley graph on the generators); everything else is derived
/// from that table. Immutable after enumerate.
class MonoidTable {
 public:
  /// Throws CapExceeded when the out-degree product exceeds `cap`.
  static MonoidTable enumerate(const SandpileGraph& g, std::uint64_t cap = kDefaultElementCap);

  const SandpileGraph& graph() const { return *graph_; }
  std::size_t size() const { return size_; }
  const std::vector<VertexId>& sites() const { return graph_->sites(); }

  StableConfiguration element(ElementId x) const;
  ElementId index_of(const StableConfiguration& c) const;
  /// Stabilizes first.
  ElementId index_of(const Configuration& c) const;
  std::uint64_t count_at(ElementId x, std::size_t site_pos) const;

  static constexpr ElementId zero() { return 0; }
  /// The class of one chip at v; the sink gives zero.
  ElementId generator(VertexId v) const;
  ElementId add_generator(ElementId x, std::size_t site_pos) const {
    return succ_[static_cast<std::size_t>(x) * sites().size() + site_pos];
  }
  ElementId add(ElementId x, ElementId y) const;
  ElementId multiple(ElementId x, std::uint64_t k) const;

  /// x + SP(E), as a membership mask.
  std::vector<bool> reach_from(ElementId x) const;
  /// {z : z <= y}.
  std::vector<bool> below(ElementId y) const;
  /// x <= y iff y = x + w for some w.
  bool leq(ElementId x, ElementId y) const;
  /// True iff target = from + w for some w.
  bool is_accessible(ElementId target, ElementId from) const { return leq(from, target); }

  const std::vector<ElementId>& idempotents() const { return idempotents_; }
  bool is_idempotent(ElementId x) const { return add(x, x) == x; }
  ElementId e_max() const { return e_max_; }
  /// The unique idempotent among x, 2x, 3x, ...
  ElementId idempotent_power(ElementId x) const { return idempotent_power_[x]; }
  /// Sum of the idempotents below both a and b.
  ElementId idempotent_meet(ElementId a, ElementId b) const;

  /// Strongly connected components of the Cayley graph; two elements share a
  /// component iff each is accessible from the other.
  std::size_t cayley_component(ElementId x) const { return scc_[x]; }
  /// Elements accessible from every element: the unique Cayley component with
  /// no way out.
  std::vector<ElementId> recurrent_elements() const;
  /// e_max + SP(E).
  std::vector<ElementId> recurrent_via_emax() const;
  /// The maximal subgroup at an idempotent e: elements x with x <= e <= x.
  std::vector<ElementId> maximal_subgroup(ElementId e) const;
  std::vector<ElementId> units() const { return maximal_subgroup(zero()); }

 private:
  MonoidTable() = default;
  void build_cayley_components();
  void build_idempotent_powers();
  void build_predecessors();

  std::shared_ptr<const SandpileGraph> graph_;
  std::size_t size_ = 0;
  std::vector<std::uint64_t> radix_;   // out-degree per site
  std::vector<std::uint64_t> weight_;  // place value per site
  std::vector<ElementId> succ_;        // size_ * sites
  std::vector<std::uint32_t> scc_;
  std::vector<ElementId> idempotents_;
  std::vector<ElementId> idempotent_power_;
  std::vector<std::size_t> pred_offset_;
  std::vector<ElementId> pred_;
  ElementId e_max_ = 0;
};

/// A downward closed submonoid, with the hereditary saturated set that
/// produces it as SP(E_H).
struct OrderIdeal {
  std::vector<ElementId> elements;  // sorted
  VertexSet generating_set;

  bool contains(ElementId x) const;
  friend bool operator==(const OrderIdeal& a, const OrderIdeal& b) {
    return a.elements == b.elements;
  }
};

/// The sum of all elements of the submonoid generated by X; every element of
/// that submonoid lies below it.
ElementId submonoid_top(const MonoidTable& m, const std::vector<ElementId>& x);

/// {z : z <= a finite sum of members of X}. `generating_set` is the set of
/// vertices v whose generator lies in the ideal, closed with the sink.
OrderIdeal order_ideal_generated(const MonoidTable& m, const std::vector<ElementId>& x);

/// Elements supported on H; equals SP(E_H) embedded in SP(E).
std::vector<ElementId> supported_on(const MonoidTable& m, const VertexSet& h);

/// Every order-ideal, one per hereditary saturated set H, as SP(E_H).
/// Sorted by inclusion-compatible order (size, then elements).
std::vector<OrderIdeal> order_ideals(const MonoidTable& m);

/// Enumerates SP(E_H) and SP(E_H') from scratch and checks that the inclusion
/// of stable configurations is an injective monoid homomorphism. Checking
/// a + [v] for every element a and every generator [v] suffices, since both
/// sides are generated by the [v].
bool submonoid_embedding_check(const SandpileGraph& g, const VertexSet& h,
                               const VertexSet& h_prime, std::uint64_t cap = kDefaultElementCap);

struct ArchimedeanClass {
  ElementId idempotent = 0;
  std::vector<ElementId> members;  // sorted
};

/// Classes of x <= my, y <= nx, one per idempotent, ordered by idempotent id.
std::vector<ArchimedeanClass> archimedean_classes(const MonoidTable& m);

}  // namespace spl
