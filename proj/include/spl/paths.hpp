#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "spl/components.hpp"
#include "spl/graph.hpp"

namespace spl {

using BigInt = boost::multiprecision::cpp_int;

/// Edge sequence e_1 ... e_n with r(e_i) = s(e_{i+1}). A length-zero path is
/// a vertex and is stored as the vertex with an empty edge list.
struct Path {
  VertexId start = 0;
  std::vector<EdgeId> edges;

  std::size_t length() const { return edges.size(); }
  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path& a, const Path& b) {
    if (a.edges.size() != b.edges.size()) return a.edges.size() <=> b.edges.size();
    if (a.edges != b.edges) return a.edges <=> b.edges;
    return a.start <=> b.start;
  }
};

/// Edge names joined in order ("e2e1"); a trivial path prints its vertex.
std::string format_path(const DirectedMultigraph& g, const Path& p);

/// Certificate of an infinite path family: a cycle, plus a path from a vertex
/// of that cycle to the target. Pumping the cycle yields infinitely many
/// distinct qualifying paths.
struct InfiniteWitness {
  std::vector<EdgeId> cycle;
  Path connector;
};

struct PathFamilyCardinality {
  bool infinite = false;
  BigInt count = 0;                        // meaningful only when finite
  std::vector<Path> listing;               // canonical order; possibly truncated
  bool listing_truncated = false;
  std::optional<InfiniteWitness> witness;  // present iff infinite
};

struct PathCountOptions {
  bool include_trivial = true;          // vertices count as length-zero paths
  std::size_t listing_limit = 4096;
};

/// Paths ending at `target` that do not contain every edge of `forbidden`.
/// An empty `forbidden` imposes no restriction.
PathFamilyCardinality path_family_cardinality(const DirectedMultigraph& g, VertexId target,
                                              const std::vector<EdgeId>& forbidden = {},
                                              const PathCountOptions& opts = {});

/// E(H) for a hereditary H: H, one new vertex per path in F(H), and one new
/// edge from each such vertex into H.
struct HedgehogGraph {
  VertexSet base;
  std::vector<Path> entering_paths;  // F(H), canonical order
  bool finite = true;
  BigInt count = 0;                  // |F(H)| when finite
  bool truncated = false;            // entering_paths is a prefix of F(H)
  std::optional<InfiniteWitness> witness;

  /// Materialized E(H). When F(H) is infinite, only the listed paths appear.
  DirectedMultigraph graph;
  GraphEmbedding base_embedding;     // H-vertices and s^-1(H) edges into the parent
};

struct HedgehogOptions {
  std::size_t listing_limit = 4096;
};

/// F(H) = paths e_1 ... e_n with s(e_n) outside H and r(e_n) in H; all
/// vertices before r(e_n) lie outside H. Throws NotHereditary.
HedgehogGraph hedgehog(const DirectedMultigraph& g, const VertexSet& h,
                       const HedgehogOptions& opts = {});

/// An edge f with s(f) on the cycle and f not the cycle's own edge there.
bool cycle_has_exit(const DirectedMultigraph& g, const std::vector<EdgeId>& cycle);

/// Two cycles with different edge sets inside a multi-cycle component.
std::optional<std::pair<std::vector<EdgeId>, std::vector<EdgeId>>> two_distinct_cycles(
    const DirectedMultigraph& g, const CyclicComponent& c);

/// Graph criterion for purely infinite simple Leavitt path algebras: the graph
/// has a cycle, every cycle has an exit, and the only hereditary saturated
/// subsets are the empty set and the whole vertex set.
bool is_pis_graph(const DirectedMultigraph& g);

}  // namespace spl
