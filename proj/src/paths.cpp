#include "spl/paths.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "spl/error.hpp"
#include "spl/hereditary.hpp"

namespace spl {

std::string format_path(const DirectedMultigraph& g, const Path& p) {
  if (p.edges.empty()) return g.vertex_name(p.start);
  std::string out;
  for (EdgeId e : p.edges) out += g.edge(e).name;
  return out;
}

namespace {

// Paths ending at the target are explored backwards: a state is the current
// first vertex together with the set of forbidden edges already used.
class BackwardPathSearch {
 public:
  BackwardPathSearch(const DirectedMultigraph& g, VertexId target,
                     const std::vector<EdgeId>& forbidden)
      : g_(g), forbidden_index_(g.edge_count(), kNotForbidden), restricted_(!forbidden.empty()) {
    std::size_t k = 0;
    for (EdgeId e : forbidden)
      if (forbidden_index_.at(e) == kNotForbidden) forbidden_index_[e] = k++;
    mask_width_ = k;
    start_ = intern(target, std::vector<bool>(mask_width_, false));
  }

  struct Step {
    std::size_t state;
    EdgeId edge;
  };

  // Children of a state: prepend an edge entering the current first vertex.
  std::vector<Step> children(std::size_t state) {
    std::vector<Step> out;
    const VertexId v = states_[state].first;
    for (EdgeId e : g_.in_edges(v)) {
      std::vector<bool> mask = states_[state].second;
      if (forbidden_index_[e] != kNotForbidden) mask[forbidden_index_[e]] = true;
      if (restricted_ && std::all_of(mask.begin(), mask.end(), [](bool b) { return b; }))
        continue;
      out.push_back({intern(g_.edge(e).source, std::move(mask)), e});
    }
    return out;
  }

  std::size_t start() const { return start_; }
  VertexId vertex_of(std::size_t state) const { return states_[state].first; }

 private:
  static constexpr std::size_t kNotForbidden = static_cast<std::size_t>(-1);

  std::size_t intern(VertexId v, std::vector<bool> mask) {
    auto key = std::make_pair(v, std::move(mask));
    auto it = ids_.find(key);
    if (it != ids_.end()) return it->second;
    const std::size_t id = states_.size();
    states_.push_back(key);
    ids_.emplace(std::move(key), id);
    return id;
  }

  const DirectedMultigraph& g_;
  std::vector<std::size_t> forbidden_index_;
  bool restricted_;
  std::size_t mask_width_ = 0;
  std::size_t start_ = 0;
  std::vector<std::pair<VertexId, std::vector<bool>>> states_;
  std::map<std::pair<VertexId, std::vector<bool>>, std::size_t> ids_;
};

}  // namespace

PathFamilyCardinality path_family_cardinality(const DirectedMultigraph& g, VertexId target,
                                              const std::vector<EdgeId>& forbidden,
                                              const PathCountOptions& opts) {
  if (target >= g.vertex_count()) throw Error(Errc::UnknownVertex, "path family target");
  BackwardPathSearch search(g, target, forbidden);
  PathFamilyCardinality result;

  // Cycle detection over the reachable state graph, memoizing children.
  enum class Color { White, Gray, Black };
  std::vector<Color> color;
  std::vector<std::vector<BackwardPathSearch::Step>> kids;
  auto ensure = [&](std::size_t s) {
    if (s >= color.size()) {
      color.resize(s + 1, Color::White);
      kids.resize(s + 1);
    }
  };
  std::vector<std::size_t> postorder;
  struct Frame {
    std::size_t state;
    std::size_t next;
    EdgeId via;
  };
  std::vector<Frame> stack;
  ensure(search.start());
  color[search.start()] = Color::Gray;
  kids[search.start()] = search.children(search.start());
  stack.push_back({search.start(), 0, 0});
  while (!stack.empty() && !result.infinite) {
    Frame& f = stack.back();
    if (f.next < kids[f.state].size()) {
      const auto step = kids[f.state][f.next++];
      ensure(step.state);
      if (color[step.state] == Color::White) {
        color[step.state] = Color::Gray;
        kids[step.state] = search.children(step.state);
        stack.push_back({step.state, 0, step.edge});
      } else if (color[step.state] == Color::Gray) {
        // Back edge: the stack from step.state up to here closes a cycle.
        std::size_t p = 0;
        while (stack[p].state != step.state) ++p;
        InfiniteWitness w;
        w.cycle.push_back(step.edge);
        for (std::size_t i = stack.size() - 1; i > p; --i) w.cycle.push_back(stack[i].via);
        w.connector.start = search.vertex_of(step.state);
        for (std::size_t i = p; i > 0; --i) w.connector.edges.push_back(stack[i].via);
        result.infinite = true;
        result.witness = std::move(w);
      }
      continue;
    }
    color[f.state] = Color::Black;
    postorder.push_back(f.state);
    stack.pop_back();
  }

  if (!result.infinite) {
    std::vector<BigInt> count(color.size(), 0);
    for (std::size_t s : postorder) {
      BigInt c = 1;
      for (const auto& k : kids[s]) c += count[k.state];
      count[s] = c;
    }
    result.count = count[search.start()] - (opts.include_trivial ? 0 : 1);
  }

  // Listing, shortest paths first, each level sorted canonically. A level is
  // expanded only after the previous one fit entirely, so a level holds at
  // most listing_limit * max-in-degree partial paths.
  struct Partial {
    std::size_t state;
    Path path;
  };
  std::vector<Partial> level{{search.start(), Path{target, {}}}};
  for (bool first = true; !level.empty(); first = false) {
    std::vector<Path> paths;
    for (const auto& p : level)
      if (!first || opts.include_trivial) paths.push_back(p.path);
    std::sort(paths.begin(), paths.end());
    bool full = false;
    for (auto& p : paths) {
      if (result.listing.size() >= opts.listing_limit) {
        full = true;
        break;
      }
      result.listing.push_back(std::move(p));
    }
    if (full || result.listing.size() >= opts.listing_limit) break;
    std::vector<Partial> next;
    for (const auto& p : level) {
      for (const auto& k : search.children(p.state)) {
        Path q;
        q.start = g.edge(k.edge).source;
        q.edges.reserve(p.path.edges.size() + 1);
        q.edges.push_back(k.edge);
        q.edges.insert(q.edges.end(), p.path.edges.begin(), p.path.edges.end());
        next.push_back({k.state, std::move(q)});
      }
    }
    level = std::move(next);
  }
  result.listing_truncated = result.infinite || BigInt(result.listing.size()) < result.count;
  return result;
}

HedgehogGraph hedgehog(const DirectedMultigraph& g, const VertexSet& h,
                       const HedgehogOptions& opts) {
  if (!is_hereditary(g, h)) throw Error(Errc::NotHereditary, "hedgehog base");
  const Quotient q = quotient(g, h);
  std::vector<VertexId> local(g.vertex_count(), 0);
  for (VertexId i = 0; i < q.into_parent.vertex_to_parent.size(); ++i)
    local[q.into_parent.vertex_to_parent[i]] = i;

  HedgehogGraph out;
  out.base = h;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (h.contains(ed.source) || !h.contains(ed.range)) continue;
    const auto family =
        path_family_cardinality(q.graph, local[ed.source], {}, {true, opts.listing_limit});
    auto lift = [&](const Path& p) {
      Path up;
      up.start = q.into_parent.vertex_to_parent[p.start];
      for (EdgeId x : p.edges) up.edges.push_back(q.into_parent.edge_to_parent[x]);
      return up;
    };
    for (const auto& p : family.listing) {
      Path up = lift(p);
      up.edges.push_back(e);
      out.entering_paths.push_back(std::move(up));
    }
    out.truncated = out.truncated || family.listing_truncated;
    if (!family.infinite) out.count += family.count;
    if (family.infinite) {
      out.finite = false;
      if (!out.witness) {
        InfiniteWitness w;
        for (EdgeId x : family.witness->cycle) w.cycle.push_back(q.into_parent.edge_to_parent[x]);
        w.connector = lift(family.witness->connector);
        w.connector.edges.push_back(e);
        out.witness = std::move(w);
      }
    }
  }
  std::sort(out.entering_paths.begin(), out.entering_paths.end());
  if (out.entering_paths.size() > opts.listing_limit) {
    out.entering_paths.resize(opts.listing_limit);
    out.truncated = true;
  }

  // Materialize E(H).
  out.graph = induced_subgraph(g, h, [](EdgeId) { return true; }, &out.base_embedding);
  std::vector<VertexId> base_local(g.vertex_count(), 0);
  for (VertexId i = 0; i < out.base_embedding.vertex_to_parent.size(); ++i)
    base_local[out.base_embedding.vertex_to_parent[i]] = i;
  for (const Path& p : out.entering_paths) {
    std::string name = "F(";
    for (std::size_t i = 0; i < p.edges.size(); ++i)
      name += (i ? "," : "") + g.edge(p.edges[i]).name;
    name += ")";
    const VertexId v = out.graph.add_vertex(name);
    out.graph.add_edge("bar" + name, v, base_local[g.edge(p.edges.back()).range]);
  }
  return out;
}

bool cycle_has_exit(const DirectedMultigraph& g, const std::vector<EdgeId>& cycle) {
  for (EdgeId c : cycle)
    for (EdgeId f : g.out_edges(g.edge(c).source))
      if (f != c) return true;
  return false;
}

std::optional<std::pair<std::vector<EdgeId>, std::vector<EdgeId>>> two_distinct_cycles(
    const DirectedMultigraph& g, const CyclicComponent& c) {
  if (c.is_single_cycle()) return std::nullopt;
  const auto& first = c.representative_cycle;
  for (VertexId v : c.vertices.members()) {
    for (EdgeId e : g.out_edges(v)) {
      const VertexId r = g.edge(e).range;
      if (!c.vertices.contains(r)) continue;
      if (std::find(first.begin(), first.end(), e) != first.end()) continue;
      if (r == v) return std::make_pair(first, std::vector<EdgeId>{e});
      // Shortest path r -> v inside the component closes a cycle through e.
      constexpr EdgeId kNone = static_cast<EdgeId>(-1);
      std::vector<EdgeId> via(g.vertex_count(), kNone);
      std::vector<bool> seen(g.vertex_count(), false);
      std::deque<VertexId> queue{r};
      seen[r] = true;
      while (!queue.empty() && !seen[v]) {
        const VertexId x = queue.front();
        queue.pop_front();
        for (EdgeId f : g.out_edges(x)) {
          const VertexId y = g.edge(f).range;
          if (!c.vertices.contains(y) || seen[y]) continue;
          seen[y] = true;
          via[y] = f;
          queue.push_back(y);
        }
      }
      std::vector<EdgeId> back;
      for (VertexId x = v; x != r; x = g.edge(via[x]).source) back.push_back(via[x]);
      std::vector<EdgeId> second{e};
      second.insert(second.end(), back.rbegin(), back.rend());
      return std::make_pair(first, std::move(second));
    }
  }
  return std::nullopt;
}

bool is_pis_graph(const DirectedMultigraph& g) {
  const ComponentPoset poset = cyclic_components(g);
  if (poset.empty()) return false;
  for (const auto& c : poset.components()) {
    const auto members = c.vertices.members();
    if (std::all_of(members.begin(), members.end(),
                    [&](VertexId v) { return g.out_degree(v) == 1; }))
      return false;  // a cycle without an exit
  }
  const VertexSet everything = g.all_vertices();
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (saturated_hereditary_closure(g, VertexSet(g.vertex_count(), {v})).members != everything)
      return false;
  return true;
}

}  // namespace spl
