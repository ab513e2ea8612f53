#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "spl/components.hpp"
#include "spl/hereditary.hpp"
#include "spl/lattice.hpp"
#include "spl/monoid.hpp"
#include "spl/paths.hpp"

namespace spl {

enum class LayerKind { MatrixOverField, MatrixOverLaurent, PurelyInfiniteSimple };

std::string_view to_string(LayerKind k);

struct HedgehogSummary {
  bool finite = true;
  BigInt size = 0;          // |F(C^0)| when finite
  std::size_t listed = 0;   // entering paths materialized
  bool truncated = false;
  std::optional<bool> pis;  // is_pis_graph of the materialized hedgehog, multi-cycle only
};

/// One exit-free cyclic component of a layer quotient E/H_{i-1}. Vertex and
/// edge ids refer to the original graph.
struct LayerComponent {
  VertexSet vertices;
  std::vector<EdgeId> cycle;  // base cycle, starting at `base`
  VertexId base = 0;
  LayerKind kind = LayerKind::MatrixOverLaurent;
  /// Paths ending at the base that do not run through the whole cycle, counted
  /// in the layer quotient and in E. Single-cycle components only.
  std::optional<PathFamilyCardinality> lambda_quotient, lambda_ambient;
  /// Two cycles with different edge sets. Multi-cycle components only.
  std::optional<std::pair<std::vector<EdgeId>, std::vector<EdgeId>>> distinct_cycles;
  HedgehogSummary hedgehog;
};

struct Layer {
  std::size_t index = 0;        // i, with the layer sitting between H_{i-1} and H_i
  VertexSet added;              // H_i minus H_{i-1}
  std::vector<LayerComponent> components;
};

struct IdealChainReport {
  std::size_t t = 0;                 // longest chain of cyclic components
  std::vector<VertexSet> chain;      // H_0 = S_E, ..., H_t = E^0
  PathFamilyCardinality socle;       // paths ending at the sink
  std::vector<Layer> layers;         // layers[i - 1] for i = 1..t

  /// Strict chain from S_E to E^0 of length t, every cyclic component in
  /// exactly one layer, and finite hedgehogs in the last layer.
  bool well_formed = false;
  bool final_layer_finite = false;
};

struct StructureOptions {
  PathCountOptions paths;
  std::size_t hedgehog_listing_limit = 256;
};

/// The graded-ideal chain: H_0 = S_E and H_i the closure of H_{i-1} together
/// with the exit-free cyclic components of E/H_{i-1}.
IdealChainReport ideal_chain(const SandpileGraph& g, const StructureOptions& opts = {});

/// Exit-free cyclic components of a quotient, in the order of their smallest
/// vertex. `q` is E/H; ids in the result refer to the original graph.
std::vector<VertexSet> exit_free_components(const Quotient& q, std::size_t parent_vertices);

/// Classifies component `c` (ids local to `q.graph`) of the quotient `q` of `g`.
LayerComponent classify_layer_component(const DirectedMultigraph& g, const Quotient& q,
                                        const CyclicComponent& c,
                                        const StructureOptions& opts = {});

/// Paths ending at the sink.
PathFamilyCardinality socle_report(const SandpileGraph& g, const PathCountOptions& opts = {});

struct VertexIdealReport {
  HereditaryLattice lattice;  // vertex ideals, recorded by I n E^0
  bool matches_hereditary = false;  // identical to H_E as a lattice
  bool six_way = false;             // and every five-way map passes
};

/// Ideals of the weighted algebra generated by nonempty vertex sets, recorded
/// by their vertex sets: the ideal generated by X meets E^0 in the saturated
/// hereditary closure of X. Throws WeightMismatch when `w` is not balanced.
VertexIdealReport vertex_ideal_lattice(const MonoidTable& m, const BalancedWeighting& w);

/// The only nonempty hereditary saturated subset is the whole vertex set.
/// The empty graph is not vertex-simple.
bool vertex_simple(const DirectedMultigraph& h);

struct TwoIdempotentReport {
  bool two_idempotents = false;
  bool graph_condition = false;  // comet branch or purely infinite simple branch
  bool laurent_branch = false;
  bool pis_branch = false;
  bool vertex_simple = false;

  bool agree() const {
    return two_idempotents == graph_condition && graph_condition == vertex_simple;
  }
};

/// The three clauses evaluated independently on SP(E) and on E/S_E. A graph
/// without cycles fails all three.
TwoIdempotentReport two_idempotent_equivalence(const MonoidTable& m);

}  // namespace spl
