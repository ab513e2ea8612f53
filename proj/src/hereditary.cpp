#include "spl/hereditary.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>

#include "spl/error.hpp"

namespace spl {

bool is_hereditary(const DirectedMultigraph& g, const VertexSet& h) {
  for (const Edge& e : g.edges())
    if (h.contains(e.source) && !h.contains(e.range)) return false;
  return true;
}

bool is_saturated(const DirectedMultigraph& g, const VertexSet& h) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (h.contains(v) || g.is_sink(v)) continue;
    const auto outs = g.out_edges(v);
    if (std::all_of(outs.begin(), outs.end(),
                    [&](EdgeId e) { return h.contains(g.edge(e).range); }))
      return false;
  }
  return true;
}

HereditarySet HereditarySet::classify(const DirectedMultigraph& g, VertexSet members) {
  HereditarySet h;
  h.hereditary = is_hereditary(g, members);
  h.saturated = is_saturated(g, members);
  h.members = std::move(members);
  return h;
}

VertexSet hereditary_closure(const DirectedMultigraph& g, const VertexSet& x) {
  return g.reachable_from(x);
}

HereditarySet saturated_hereditary_closure(const DirectedMultigraph& g, const VertexSet& x) {
  VertexSet current = hereditary_closure(g, x);
  // Saturation of a hereditary set stays hereditary, so one fixpoint suffices.
  bool grew = true;
  while (grew) {
    grew = false;
    VertexSet next = current;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (current.contains(v) || g.is_sink(v)) continue;
      const auto outs = g.out_edges(v);
      if (std::all_of(outs.begin(), outs.end(),
                      [&](EdgeId e) { return current.contains(g.edge(e).range); })) {
        next.insert(v);
        grew = true;
      }
    }
    current = std::move(next);
  }
  return HereditarySet::classify(g, std::move(current));
}

HereditarySet sink_shadow(const SandpileGraph& g) {
  const ComponentPoset poset = cyclic_components(g);
  VertexSet on_cycles(g.vertex_count());
  for (const auto& c : poset.components()) on_cycles = on_cycles | c.vertices;
  return HereditarySet::classify(g.graph(), g.graph().reaching(on_cycles).complement());
}

HereditarySet component_principal_closure(const DirectedMultigraph& g, const CyclicComponent& c) {
  return saturated_hereditary_closure(g, c.vertices);
}

std::vector<VertexSet> brute_force_hereditary_saturated(const DirectedMultigraph& g,
                                                        std::size_t subset_cap) {
  const std::size_t n = g.vertex_count();
  if (n > subset_cap || n > 30)
    throw Error(Errc::CapExceeded, "subset scan over " + std::to_string(n) +
                                       " vertices exceeds the cap of " +
                                       std::to_string(std::min<std::size_t>(subset_cap, 30)));
  std::vector<std::uint32_t> out_mask(n, 0);
  for (const Edge& e : g.edges()) out_mask[e.source] |= (1u << e.range);
  std::vector<VertexSet> found;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    bool ok = true;
    for (std::size_t v = 0; v < n && ok; ++v) {
      const bool in = mask & (1u << v);
      const bool covered = (out_mask[v] & ~mask) == 0;
      if (in && !covered) ok = false;                        // hereditary
      if (!in && !g.is_sink(v) && covered) ok = false;       // saturated
    }
    if (!ok) continue;
    VertexSet s(n);
    for (std::size_t v = 0; v < n; ++v)
      if (mask & (1u << v)) s.insert(v);
    found.push_back(std::move(s));
  }
  std::sort(found.begin(), found.end());
  return found;
}

namespace {

std::vector<HereditarySet> via_filters(const SandpileGraph& g) {
  const ComponentPoset poset = cyclic_components(g);
  const HereditarySet shadow = sink_shadow(g);
  std::vector<HereditarySet> out;
  for (const Filter& f : filters(poset)) {
    if (f.members.empty()) {
      out.push_back(shadow);
      continue;
    }
    VertexSet u(g.vertex_count());
    for (std::size_t c : f.members) u = u | poset[c].vertices;
    out.push_back(saturated_hereditary_closure(g, u));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<HereditarySet> enumerate_hereditary_saturated(const SandpileGraph& g,
                                                          EnumerationRoute route,
                                                          std::size_t subset_cap) {
  const bool within_cap = g.vertex_count() <= subset_cap && g.vertex_count() <= 30;
  if (route == EnumerationRoute::Filters || (route == EnumerationRoute::Both && !within_cap))
    return via_filters(g);

  std::vector<HereditarySet> brute;
  for (auto& s : brute_force_hereditary_saturated(g.graph(), subset_cap))
    brute.push_back(HereditarySet::classify(g.graph(), std::move(s)));
  if (route == EnumerationRoute::BruteForce) return brute;

  auto filtered = via_filters(g);
  if (filtered != brute)
    throw Error(Errc::InvalidArgument,
                "hereditary saturated enumeration: subset scan and filter route disagree");
  return brute;
}

PrincipalClosures component_poset_ideals(const SandpileGraph& g) {
  const ComponentPoset poset = cyclic_components(g);
  PrincipalClosures out;
  out.members.push_back(sink_shadow(g).members);
  for (const auto& c : poset.components())
    out.members.push_back(component_principal_closure(g.graph(), c).members);
  const std::size_t n = out.members.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) leq[i][j] = out.members[i].is_subset_of(out.members[j]);
  for (auto& d : enumerate_down_sets(leq))
    if (!d.empty()) out.ideals.push_back(std::move(d));
  return out;
}

Restriction restriction(const SandpileGraph& g, const VertexSet& h) {
  if (h.empty()) throw Error(Errc::InvalidArgument, "restriction to the empty set");
  if (!is_hereditary(g.graph(), h)) throw Error(Errc::NotHereditary, "restriction set");
  if (!is_saturated(g.graph(), h)) throw Error(Errc::NotSaturated, "restriction set");
  GraphEmbedding emb;
  DirectedMultigraph sub = induced_subgraph(g.graph(), h, [](EdgeId) { return true; }, &emb);
  const auto local_sink = static_cast<VertexId>(
      std::find(emb.vertex_to_parent.begin(), emb.vertex_to_parent.end(), g.sink()) -
      emb.vertex_to_parent.begin());
  return Restriction{validate_sandpile(std::move(sub), local_sink), std::move(emb)};
}

Quotient quotient(const DirectedMultigraph& g, const VertexSet& h) {
  if (!is_hereditary(g, h)) throw Error(Errc::NotHereditary, "quotient set");
  Quotient q;
  q.graph = induced_subgraph(g, h.complement(), [](EdgeId) { return true; }, &q.into_parent);
  return q;
}

}  // namespace spl
