#include "spl/components.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace spl {

std::vector<std::vector<VertexId>> strongly_connected_components(const DirectedMultigraph& g) {
  // Iterative Tarjan.
  const std::size_t n = g.vertex_count();
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<VertexId> stack;
  std::vector<std::vector<VertexId>> out;
  std::size_t counter = 0;

  struct Frame {
    VertexId v;
    std::size_t next_edge;
  };
  for (VertexId root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    std::vector<Frame> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      const auto outs = g.out_edges(f.v);
      if (f.next_edge < outs.size()) {
        const VertexId w = g.edge(outs[f.next_edge++]).range;
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const VertexId v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        std::vector<VertexId> comp;
        VertexId w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

namespace {

// Shortest closed walk from `base` back to itself inside `within`; it visits
// distinct sources, so it is a cycle.
std::vector<EdgeId> shortest_cycle_through(const DirectedMultigraph& g, VertexId base,
                                           const VertexSet& within) {
  constexpr EdgeId kNone = static_cast<EdgeId>(-1);
  std::vector<EdgeId> via(g.vertex_count(), kNone);
  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<VertexId> queue{base};
  seen[base] = true;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (EdgeId e : g.out_edges(v)) {
      const VertexId w = g.edge(e).range;
      if (!within.contains(w)) continue;
      if (w == base) {
        std::vector<EdgeId> cycle{e};
        for (VertexId x = v; x != base; x = g.edge(via[x]).source) cycle.push_back(via[x]);
        std::reverse(cycle.begin(), cycle.end());
        return cycle;
      }
      if (!seen[w]) {
        seen[w] = true;
        via[w] = e;
        queue.push_back(w);
      }
    }
  }
  return {};
}

}  // namespace

ComponentPoset::ComponentPoset(std::vector<CyclicComponent> components,
                               std::vector<std::vector<bool>> reaches,
                               std::vector<std::optional<std::size_t>> component_of)
    : components_(std::move(components)),
      reaches_(std::move(reaches)),
      component_of_(std::move(component_of)) {}

bool ComponentPoset::is_chain() const {
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j)
      if (!leq(i, j) && !leq(j, i)) return false;
  return true;
}

std::vector<std::size_t> ComponentPoset::heights() const {
  // Reachability is a partial order here, so heights are well defined; a
  // component's height is one more than the largest height it reaches.
  std::vector<std::size_t> order(size());
  std::iota(order.begin(), order.end(), 0);
  auto below = [&](std::size_t i) {
    std::size_t n = 0;
    for (std::size_t j = 0; j < size(); ++j) n += (j != i && reaches(i, j));
    return n;
  };
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return below(a) < below(b); });
  std::vector<std::size_t> h(size(), 1);
  for (std::size_t i : order)
    for (std::size_t j = 0; j < size(); ++j)
      if (j != i && reaches(i, j)) h[i] = std::max(h[i], h[j] + 1);
  return h;
}

std::size_t ComponentPoset::max_chain_length() const {
  const auto h = heights();
  return h.empty() ? 0 : *std::max_element(h.begin(), h.end());
}

ComponentPoset cyclic_components(const DirectedMultigraph& g) {
  std::vector<CyclicComponent> comps;
  std::vector<std::optional<std::size_t>> component_of(g.vertex_count());
  for (const auto& scc : strongly_connected_components(g)) {
    const VertexSet members = VertexSet::from_members(g.vertex_count(), scc);
    std::size_t internal_edges = 0;
    for (VertexId v : scc)
      for (EdgeId e : g.out_edges(v)) internal_edges += members.contains(g.edge(e).range);
    if (internal_edges == 0) continue;
    CyclicComponent c;
    c.id = comps.size();
    c.vertices = members;
    c.representative_cycle = shortest_cycle_through(g, scc.front(), members);
    c.shape = internal_edges == scc.size() ? CyclicComponent::Shape::SingleCycle
                                           : CyclicComponent::Shape::MultiCycle;
    for (VertexId v : scc) component_of[v] = c.id;
    comps.push_back(std::move(c));
  }
  std::vector<std::vector<bool>> reaches(comps.size(), std::vector<bool>(comps.size(), false));
  for (const auto& c : comps) {
    const VertexSet reach = g.reachable_from(c.vertices);
    for (const auto& d : comps)
      reaches[c.id][d.id] = d.vertices.is_subset_of(reach);
  }
  return ComponentPoset(std::move(comps), std::move(reaches), std::move(component_of));
}

bool Filter::contains(std::size_t c) const {
  return std::binary_search(members.begin(), members.end(), c);
}

bool Filter::is_subset_of(const Filter& other) const {
  return std::includes(other.members.begin(), other.members.end(), members.begin(), members.end());
}

std::strong_ordering operator<=>(const Filter& a, const Filter& b) {
  if (auto c = a.members.size() <=> b.members.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.members.begin(), a.members.end(),
                                                b.members.begin(), b.members.end());
}

std::vector<std::vector<std::size_t>> enumerate_down_sets(
    const std::vector<std::vector<bool>>& leq) {
  const std::size_t n = leq.size();
  // Linear extension: fewer strict predecessors first.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto preds = [&](std::size_t i) {
    std::size_t k = 0;
    for (std::size_t j = 0; j < n; ++j) k += (j != i && leq[j][i]);
    return k;
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return preds(a) < preds(b); });

  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> in(n, false);
  auto recurse = [&](auto&& self, std::size_t k) -> void {
    if (k == n) {
      std::vector<std::size_t> s;
      for (std::size_t i = 0; i < n; ++i)
        if (in[i]) s.push_back(i);
      out.push_back(std::move(s));
      return;
    }
    const std::size_t x = order[k];
    self(self, k + 1);
    bool allowed = true;
    for (std::size_t j = 0; j < n && allowed; ++j)
      if (j != x && leq[j][x] && !in[j]) allowed = false;
    if (allowed) {
      in[x] = true;
      self(self, k + 1);
      in[x] = false;
    }
  };
  recurse(recurse, 0);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<Filter> filters(const ComponentPoset& poset) {
  std::vector<std::vector<bool>> leq(poset.size(), std::vector<bool>(poset.size()));
  for (std::size_t i = 0; i < poset.size(); ++i)
    for (std::size_t j = 0; j < poset.size(); ++j) leq[i][j] = poset.leq(i, j);
  std::vector<Filter> out;
  for (auto& s : enumerate_down_sets(leq)) out.push_back(Filter{std::move(s)});
  return out;
}

bool has_exit(const DirectedMultigraph& g, const CyclicComponent& c) {
  for (VertexId v : c.vertices.members())
    for (EdgeId e : g.out_edges(v))
      if (!c.vertices.contains(g.edge(e).range)) return true;
  return false;
}

}  // namespace spl
