#pragma once

#include <vector>

#include "spl/monoid.hpp"
#include "spl/snf.hpp"

namespace spl {

/// A subset of SP(E) that is a group under the monoid addition.
struct FiniteAbelianGroup {
  std::vector<ElementId> carrier;  // sorted
  ElementId identity = 0;

  std::size_t order() const { return carrier.size(); }
  bool contains(ElementId x) const;
};

/// Checks closure, identity and inverses exhaustively, and associativity
/// exhaustively up to 64 elements (above that it is inherited from SP(E)).
/// Throws NotAGroup naming the failed axiom.
FiniteAbelianGroup make_group(const MonoidTable& m, std::vector<ElementId> carrier,
                              ElementId identity);

/// x + [x] for the class idempotent x.
FiniteAbelianGroup grothendieck_of_class(const MonoidTable& m, const ArchimedeanClass& cls);

/// G(E) = e_max + [e_max]. The carrier is compared with the terminal Cayley
/// component and with e_max + SP(E), and for tables of at most
/// `intersection_limit` elements with the intersection of all x + SP(E).
/// A disagreement throws InvalidArgument.
FiniteAbelianGroup sandpile_group(const MonoidTable& m, std::size_t intersection_limit = 1024);

/// x + [x] for each idempotent x, in idempotent order, each compared with the
/// unit group of x + SP(E).
std::vector<FiniteAbelianGroup> maximal_subgroups(const MonoidTable& m);

/// The idempotent x with closure(supp x) = H (S_E for x = 0).
ElementId idempotent_for(const MonoidTable& m, const VertexSet& h);

/// closure(supp x) for x != 0, S_E for x = 0.
VertexSet hereditary_of_idempotent(const MonoidTable& m, ElementId x);

/// G(E_H) computed on the restriction graph and carried into SP(E); compared
/// with x + [x] for the idempotent x matching H. Throws as restriction does.
FiniteAbelianGroup restricted_group(const MonoidTable& m, const VertexSet& h);

/// Transition maps y -> f + y from [e] to [f] for idempotents e <= f: each
/// lands in [f], preserves addition, and the maps compose. The group of the
/// top class maps onto the recurrent elements isomorphically.
bool direct_limit_check(const MonoidTable& m);

/// From the number of elements killed by p^k for each prime p and k. Throws
/// NotAGroup when the counts are inconsistent with an abelian group.
InvariantFactors invariant_factors(const MonoidTable& m, const FiniteAbelianGroup& gp);

}  // namespace spl
