#pragma once

// Slow reference implementations written straight from the definitions.
// None of them call into the code they are used to check.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "spl/configuration.hpp"
#include "spl/graph.hpp"
#include "spl/monoid.hpp"
#include "spl/paths.hpp"

namespace spl::oracle {

// One toppling at v, chips on the sink erased. Requires c[v] >= out-degree.
Configuration topple(const SandpileGraph& g, Configuration c, VertexId v);

// Fires a uniformly chosen unstable vertex until none is left.
Configuration random_schedule(const SandpileGraph& g, Configuration c, std::mt19937_64& rng);

// Whether a and b have a common reduct under single topplings. Everything
// reachable from a configuration has no more chips than it, so the search is
// finite; nullopt once more than `bound` states have been visited.
std::optional<bool> joint_reduct(const SandpileGraph& g, const Configuration& a,
                                 const Configuration& b, std::size_t bound = 200'000);

// Vertex subsets passing the hereditary and saturated definitions, nonempty,
// sorted.
std::vector<VertexSet> hereditary_saturated_scan(const DirectedMultigraph& g);

// Closure by iterating both definitions to a fixpoint.
VertexSet closure(const DirectedMultigraph& g, const VertexSet& x);

// x + y computed by stabilizing the chip sum, not read from the table.
ElementId sum(const MonoidTable& m, ElementId x, ElementId y);

// z <= y iff z + w = y for some w.
std::vector<std::vector<bool>> preorder(const MonoidTable& m);

// Every downward closed submonoid. A finite one is the down-set of the sum of
// its elements, so the down-sets of single elements are a complete list of
// candidates; each is kept iff it is closed under addition.
std::vector<std::vector<ElementId>> order_ideals(const MonoidTable& m);

// x ~ y iff x <= n y and y <= n x for some n >= 1.
std::vector<std::vector<ElementId>> archimedean_classes(const MonoidTable& m);

// Number of elements of each order in a subgroup given by its carrier.
std::map<std::uint64_t, std::uint64_t> element_orders(const MonoidTable& m,
                                                      const std::vector<ElementId>& carrier,
                                                      ElementId identity);
// The same for Z/d1 x ... x Z/dr.
std::map<std::uint64_t, std::uint64_t> element_orders(const std::vector<std::uint64_t>& factors);

// Cyclic components as vertex sets, by pairwise reachability.
std::vector<VertexSet> cyclic_components(const DirectedMultigraph& g);

// Every path into H by explicit enumeration, for graphs where F(H) is finite.
// nullopt when some path is longer than the vertex count (F(H) infinite).
std::optional<std::vector<Path>> entering_paths(const DirectedMultigraph& g, const VertexSet& h);

}  // namespace spl::oracle
