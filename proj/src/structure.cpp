#include "spl/structure.hpp"

#include <algorithm>
#include <cstdint>

#include "spl/error.hpp"

namespace spl {

std::string_view to_string(LayerKind k) {
  switch (k) {
    case LayerKind::MatrixOverField: return "MatrixOverField";
    case LayerKind::MatrixOverLaurent: return "MatrixOverLaurent";
    case LayerKind::PurelyInfiniteSimple: return "PurelyInfiniteSimple";
  }
  return "?";
}

PathFamilyCardinality socle_report(const SandpileGraph& g, const PathCountOptions& opts) {
  return path_family_cardinality(g.graph(), g.sink(), {}, opts);
}

std::vector<VertexSet> exit_free_components(const Quotient& q, std::size_t parent_vertices) {
  std::vector<VertexSet> out;
  const ComponentPoset local = cyclic_components(q.graph);
  for (const auto& c : local.components()) {
    if (has_exit(q.graph, c)) continue;
    VertexSet up(parent_vertices);
    for (VertexId v : c.vertices.members()) up.insert(q.into_parent.vertex_to_parent[v]);
    out.push_back(std::move(up));
  }
  return out;
}

LayerComponent classify_layer_component(const DirectedMultigraph& g, const Quotient& q,
                                        const CyclicComponent& c, const StructureOptions& opts) {
  const auto& vmap = q.into_parent.vertex_to_parent;
  const auto& emap = q.into_parent.edge_to_parent;
  LayerComponent out;
  out.vertices = VertexSet(g.vertex_count());
  for (VertexId v : c.vertices.members()) out.vertices.insert(vmap[v]);

  // Rotate the representative cycle to start at the smallest vertex.
  const VertexId base_local = c.vertices.members().front();
  std::vector<EdgeId> cycle = c.representative_cycle;
  const auto start = std::find_if(cycle.begin(), cycle.end(), [&](EdgeId e) {
    return q.graph.edge(e).source == base_local;
  });
  if (start != cycle.end()) std::rotate(cycle.begin(), start, cycle.end());
  out.base = vmap[q.graph.edge(cycle.front()).source];
  for (EdgeId e : cycle) out.cycle.push_back(emap[e]);

  if (c.is_single_cycle()) {
    out.kind = LayerKind::MatrixOverLaurent;
    out.lambda_quotient =
        path_family_cardinality(q.graph, q.graph.edge(cycle.front()).source, cycle, opts.paths);
    out.lambda_ambient = path_family_cardinality(g, out.base, out.cycle, opts.paths);
  } else {
    out.kind = LayerKind::PurelyInfiniteSimple;
    if (auto two = two_distinct_cycles(q.graph, c)) {
      std::pair<std::vector<EdgeId>, std::vector<EdgeId>> lifted;
      for (EdgeId e : two->first) lifted.first.push_back(emap[e]);
      for (EdgeId e : two->second) lifted.second.push_back(emap[e]);
      out.distinct_cycles = std::move(lifted);
    }
  }

  const HedgehogGraph hh = hedgehog(q.graph, c.vertices, {opts.hedgehog_listing_limit});
  out.hedgehog.finite = hh.finite;
  out.hedgehog.size = hh.finite ? hh.count : BigInt(0);
  out.hedgehog.listed = hh.entering_paths.size();
  out.hedgehog.truncated = hh.truncated;
  if (!c.is_single_cycle()) out.hedgehog.pis = is_pis_graph(hh.graph);
  return out;
}

IdealChainReport ideal_chain(const SandpileGraph& g, const StructureOptions& opts) {
  const DirectedMultigraph& graph = g.graph();
  const ComponentPoset poset = cyclic_components(g);
  IdealChainReport r;
  r.t = poset.max_chain_length();
  r.socle = socle_report(g, opts.paths);

  VertexSet h = sink_shadow(g).members;
  r.chain.push_back(h);
  const VertexSet everything = graph.all_vertices();
  std::vector<std::size_t> seen(poset.size(), 0);
  bool progress = true;
  while (h != everything) {
    const Quotient q = quotient(graph, h);
    Layer layer;
    layer.index = r.layers.size() + 1;
    VertexSet grown = h;
    const ComponentPoset local = cyclic_components(q.graph);
    for (const auto& c : local.components()) {
      if (has_exit(q.graph, c)) continue;
      LayerComponent lc = classify_layer_component(graph, q, c, opts);
      grown = grown | lc.vertices;
      if (auto id = poset.component_of(lc.vertices.members().front());
          id && poset[*id].vertices == lc.vertices)
        ++seen[*id];
      layer.components.push_back(std::move(lc));
    }
    if (layer.components.empty()) {
      progress = false;
      break;
    }
    const VertexSet next = saturated_hereditary_closure(graph, grown).members;
    layer.added = next - h;
    h = next;
    r.chain.push_back(h);
    r.layers.push_back(std::move(layer));
  }

  r.final_layer_finite = true;
  if (!r.layers.empty())
    for (const auto& lc : r.layers.back().components)
      r.final_layer_finite = r.final_layer_finite && lc.hedgehog.finite;

  bool strict = true;
  for (std::size_t i = 1; i < r.chain.size(); ++i)
    strict = strict && r.chain[i - 1].is_subset_of(r.chain[i]) && r.chain[i - 1] != r.chain[i];
  const bool covered = std::all_of(seen.begin(), seen.end(), [](std::size_t n) { return n == 1; });
  r.well_formed = progress && strict && r.chain.back() == everything &&
                  r.layers.size() == r.t && covered && r.final_layer_finite;
  return r;
}

namespace {

// Ideals generated by nonempty vertex sets, recorded by their vertex sets.
std::vector<VertexSet> vertex_generated_ideals(const SandpileGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<VertexSet> out;
  auto add = [&](VertexSet s) {
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
  };
  if (n <= 16) {
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      VertexSet x(n);
      for (VertexId v = 0; v < n; ++v)
        if (mask & (1u << v)) x.insert(v);
      add(saturated_hereditary_closure(g, x).members);
    }
  } else {
    // A generating set generates the join of the ideals of its vertices.
    for (VertexId v = 0; v < n; ++v) add(saturated_hereditary_closure(g, VertexSet(n, {v})).members);
    for (std::size_t i = 0; i < out.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        add(saturated_hereditary_closure(g, out[i] | out[j]).members);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

VertexIdealReport vertex_ideal_lattice(const MonoidTable& m, const BalancedWeighting& w) {
  const SandpileGraph& g = m.graph();
  if (!w.is_balanced_for(g.graph()))
    throw Error(Errc::WeightMismatch, "weighting is not balanced for the graph");
  VertexIdealReport r;
  r.lattice = hereditary_lattice_from(g, vertex_generated_ideals(g), "VertexIdeals(L(E,w))");

  const HereditaryLattice her = hereditary_lattice(g);
  std::vector<std::optional<std::size_t>> forward;
  for (const auto& h : r.lattice.elements) {
    const auto it = std::find(her.elements.begin(), her.elements.end(), h);
    forward.push_back(it == her.elements.end()
                          ? std::nullopt
                          : std::optional<std::size_t>(it - her.elements.begin()));
  }
  r.matches_hereditary = check_isomorphism(r.lattice.lattice, her.lattice, forward).pass();
  r.six_way = r.matches_hereditary && verify_five_way(m).pass();
  return r;
}

bool vertex_simple(const DirectedMultigraph& h) {
  const std::size_t n = h.vertex_count();
  if (n == 0) return false;
  // Each nonempty hereditary saturated set contains the closure of any of its
  // vertices, so it suffices that every such closure is everything.
  const VertexSet everything = h.all_vertices();
  for (VertexId v = 0; v < n; ++v)
    if (saturated_hereditary_closure(h, VertexSet(n, {v})).members != everything) return false;
  return true;
}

TwoIdempotentReport two_idempotent_equivalence(const MonoidTable& m) {
  const SandpileGraph& g = m.graph();
  TwoIdempotentReport r;
  r.two_idempotents = m.idempotents().size() == 2;

  const Quotient q = quotient(g.graph(), sink_shadow(g).members);
  if (q.graph.vertex_count() == 0) return r;  // no cycles: every clause fails

  const ComponentPoset poset = cyclic_components(q.graph);
  if (poset.size() == 1 && poset[0].is_single_cycle() && !has_exit(q.graph, poset[0])) {
    const auto& cycle = poset[0].representative_cycle;
    const VertexId base = q.graph.edge(cycle.front()).source;
    r.laurent_branch = !path_family_cardinality(q.graph, base, cycle).infinite;
  }
  r.pis_branch = is_pis_graph(q.graph);
  r.graph_condition = r.laurent_branch || r.pis_branch;
  r.vertex_simple = vertex_simple(q.graph);
  return r;
}

}  // namespace spl
