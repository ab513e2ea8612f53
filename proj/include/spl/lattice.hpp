#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "spl/components.hpp"
#include "spl/hereditary.hpp"
#include "spl/monoid.hpp"

namespace spl {

/// A finite lattice given by its order and by join/meet tables computed with
/// the native operations of the structure it came from.
class FiniteLattice {
 public:
  FiniteLattice() = default;
  FiniteLattice(std::string tag, std::vector<std::string> labels,
                std::vector<std::vector<bool>> leq, std::vector<std::vector<std::size_t>> join,
                std::vector<std::vector<std::size_t>> meet);

  const std::string& tag() const { return tag_; }
  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  bool leq(std::size_t a, std::size_t b) const { return leq_[a][b]; }
  std::size_t join(std::size_t a, std::size_t b) const { return join_[a][b]; }
  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a][b]; }

  /// leq is a partial order and the tables give least upper and greatest lower
  /// bounds.
  bool well_formed() const;
  bool is_chain() const;

 private:
  std::string tag_;
  std::vector<std::string> labels_;
  std::vector<std::vector<bool>> leq_;
  std::vector<std::vector<std::size_t>> join_, meet_;
};

struct LatticeIsoReport {
  std::string source_tag, target_tag;
  std::vector<std::string> source_labels, target_labels;
  std::vector<std::optional<std::size_t>> forward;  // unmapped when the image is not in the target
  std::vector<std::optional<std::size_t>> inverse;
  bool bijective = false;
  bool order_both_ways = false;
  bool join_preserving = false;
  bool meet_preserving = false;

  bool pass() const { return bijective && order_both_ways && join_preserving && meet_preserving; }
};

/// Checks a map given by `forward` between two lattices.
LatticeIsoReport check_isomorphism(const FiniteLattice& source, const FiniteLattice& target,
                                   const std::vector<std::optional<std::size_t>>& forward);

std::string format_element(const MonoidTable& m, ElementId x);
std::string format_vertex_set(const DirectedMultigraph& g, const VertexSet& s);
std::string format_component_set(const DirectedMultigraph& g, const ComponentPoset& poset,
                                 const std::vector<std::size_t>& ids);

// The five lattices, each built from its own definition.
struct IdempotentLattice {
  std::vector<ElementId> elements;
  FiniteLattice lattice;  // join x + y, meet: sum of idempotents below both
};
IdempotentLattice idempotent_lattice(const MonoidTable& m);

struct FilterLattice {
  ComponentPoset poset;
  std::vector<Filter> elements;
  FiniteLattice lattice;  // union and intersection
};
FilterLattice filter_lattice(const SandpileGraph& g);

struct HereditaryLattice {
  std::vector<VertexSet> elements;
  FiniteLattice lattice;  // closure of the union, intersection
};
HereditaryLattice hereditary_lattice(const SandpileGraph& g,
                                     EnumerationRoute route = EnumerationRoute::Both);
/// The same lattice structure over a given list of hereditary saturated sets.
HereditaryLattice hereditary_lattice_from(const SandpileGraph& g, std::vector<VertexSet> elements,
                                          std::string tag);

struct PrincipalIdealLattice {
  PrincipalClosures closures;
  FiniteLattice lattice;  // union and intersection of down-sets
};
PrincipalIdealLattice principal_ideal_lattice(const SandpileGraph& g);

struct OrderIdealLattice {
  std::vector<OrderIdeal> elements;
  FiniteLattice lattice;  // ideal generated by I + J, intersection
};
/// Enumerated without reference to hereditary sets: every order-ideal is the
/// join of the principal ones it contains, so joins of principal ideals are
/// closed to a fixpoint.
OrderIdealLattice order_ideal_lattice(const MonoidTable& m);

/// 0 -> empty; x -> cyclic components of E_H with H = closure(supp x).
LatticeIsoReport delta_map(const MonoidTable& m, const IdempotentLattice& idem,
                           const FilterLattice& fil);
/// empty -> S_E; F -> closure of the union of the C^0.
LatticeIsoReport phi_map(const SandpileGraph& g, const FilterLattice& fil,
                         const HereditaryLattice& her);
/// empty -> {S_E}; F -> {S_E} + {H_C : C in F}.
LatticeIsoReport psi_map(const FilterLattice& fil, const PrincipalIdealLattice& ideals);
/// 0 -> S_E; x -> closure(supp x).
LatticeIsoReport varsigma_map(const MonoidTable& m, const IdempotentLattice& idem,
                              const HereditaryLattice& her);
/// H -> SP(E_H), checked against the inverse I -> I n E^0.
struct OrderIdealCorrespondence {
  LatticeIsoReport report;
  bool mutually_inverse = false;
};
OrderIdealCorrespondence order_ideal_correspondence(const MonoidTable& m,
                                                    const HereditaryLattice& her,
                                                    const OrderIdealLattice& ord);

/// Convenience overloads building the lattices themselves.
LatticeIsoReport delta_map(const MonoidTable& m);
LatticeIsoReport phi_map(const SandpileGraph& g);
LatticeIsoReport psi_map(const SandpileGraph& g);
LatticeIsoReport varsigma_map(const MonoidTable& m);
OrderIdealCorrespondence order_ideal_correspondence(const MonoidTable& m);

struct FiveWayReport {
  LatticeIsoReport delta, phi, psi, varsigma;
  OrderIdealCorrespondence order_ideals;
  std::vector<std::size_t> cardinalities;  // Idem, F_E, H_E, Ideal(H^s_E), L(SP(E))
  bool varsigma_is_phi_delta = false;
  /// x -> order-ideal generated by x agrees with H -> SP(E_H) after varsigma.
  bool idempotent_square_commutes = false;

  bool pass() const;
};
FiveWayReport verify_five_way(const MonoidTable& m);

/// Exhaustive monoid isomorphism search, generator by generator. Returns
/// nullopt when no isomorphism exists; otherwise whether the hereditary
/// saturated lattices are isomorphic via the transported order-ideals.
/// Throws SearchCapExceeded above 64 elements or after `node_cap` search
/// nodes.
std::optional<bool> monoid_iso_transport(const MonoidTable& e, const MonoidTable& f,
                                         std::size_t node_cap = 1'000'000);

/// A monoid isomorphism e -> f as an element table, if one exists.
std::optional<std::vector<ElementId>> find_monoid_isomorphism(const MonoidTable& e,
                                                              const MonoidTable& f,
                                                              std::size_t node_cap = 1'000'000);

struct ChainEquivalences {
  bool idempotents = false;
  bool filters = false;
  bool components = false;
  bool hereditary = false;
  bool graded_ideals = false;
  bool vertex_ideals = false;

  bool agree() const;
};
ChainEquivalences chain_equivalences(const MonoidTable& m);

}  // namespace spl
