#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "spl/components.hpp"
#include "spl/error.hpp"
#include "spl/hereditary.hpp"
#include "spl/io.hpp"
#include "spl/paths.hpp"

using namespace spl;
using spl::fixtures::load;

namespace {

VertexSet named(const DirectedMultigraph& g, std::initializer_list<const char*> vs) {
  VertexSet s(g.vertex_count());
  for (const char* v : vs) s.insert(g.vertex(v));
  return s;
}

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::InvalidArgument;
}

// Paths ending at `target` by counting walks of each length; a walk longer
// than the vertex count means a cycle reaches the target.
std::optional<std::uint64_t> count_paths_to(const DirectedMultigraph& g, VertexId target) {
  std::vector<std::uint64_t> ending(g.vertex_count(), 0);  // paths starting at v, by length
  ending[target] = 1;
  std::uint64_t total = 1;
  for (std::size_t len = 1; len <= g.vertex_count() + 1; ++len) {
    std::vector<std::uint64_t> next(g.vertex_count(), 0);
    for (const Edge& e : g.edges()) next[e.source] += ending[e.range];
    ending = next;
    std::uint64_t layer = 0;
    for (auto n : ending) layer += n;
    if (layer && len > g.vertex_count()) return std::nullopt;
    total += layer;
  }
  return total;
}

}  // namespace

TEST_CASE("validate_sandpile") {
  SUBCASE("fil-hered graph is valid") {
    const auto g = load(fixtures::kFilHered);
    CHECK(g.graph().vertex_name(g.sink()) == "s");
    CHECK(g.sites().size() == 3);
  }
  SUBCASE("lone sink") { CHECK(load(fixtures::trivial()).vertex_count() == 1); }
  SUBCASE("unreachable vertex") {
    DirectedMultigraph g;
    g.add_vertex("s");
    g.add_vertex("v");
    CHECK(code_of([&] { validate_sandpile(g); }) == Errc::MultipleSinks);
    CHECK(code_of([&] { validate_sandpile(g, 0); }) == Errc::Unreachable);
  }
  SUBCASE("no sink") {
    DirectedMultigraph g;
    g.add_vertex("v");
    g.add_edge("l", "v", "v");
    CHECK(code_of([&] { validate_sandpile(g); }) == Errc::NoSink);
  }
  SUBCASE("declared sink that emits") {
    const auto file = parse_graph("vertex v\nvertex s\nedge a v s\nedge b s v\n");
    CHECK_THROWS_AS(validate_sandpile(file.graph, file.graph.vertex("s")), Error);
  }
  SUBCASE("cycle with no way out") {
    CHECK(code_of([] { parse_sandpile("vertex a\nvertex b\nsink s\nedge x a b\nedge y b a\n"); }) ==
          Errc::Unreachable);
  }
}

TEST_CASE("cyclic components of the structure example") {
  const auto g = load(fixtures::kStructure);
  const auto& gr = g.graph();
  const auto poset = cyclic_components(g);
  REQUIRE(poset.size() == 4);
  auto id = [&](const char* v) { return *poset.component_of(gr.vertex(v)); };
  const auto c1 = id("v1"), c2 = id("v2"), c3 = id("v3"), c4 = id("v4");
  CHECK(poset.leq(c1, c2));
  CHECK(poset.leq(c2, c4));
  CHECK(poset.leq(c1, c3));
  CHECK(poset.leq(c3, c4));
  CHECK_FALSE(poset.leq(c2, c3));
  CHECK_FALSE(poset.leq(c3, c2));
  CHECK(poset.max_chain_length() == 3);
  CHECK(poset[c2].shape == CyclicComponent::Shape::MultiCycle);
  CHECK(poset[c1].is_single_cycle());
  CHECK_FALSE(poset.is_chain());
  CHECK(has_exit(gr, poset[c1]));
  CHECK_FALSE(poset.component_of(g.sink()));
  CHECK(sink_shadow(g).members == named(gr, {"s"}));
}

TEST_CASE("fil-ideal: components, closures, filters") {
  const auto g = load(fixtures::kFilIdeal);
  const auto& gr = g.graph();
  const auto poset = cyclic_components(g);
  REQUIRE(poset.size() == 2);
  const auto c1 = *poset.component_of(gr.vertex("v"));
  const auto c2 = *poset.component_of(gr.vertex("w"));
  CHECK(poset.leq(c1, c2));
  CHECK(poset.reaches(c2, c1));
  CHECK_FALSE(poset.leq(c2, c1));

  CHECK(saturated_hereditary_closure(g, named(gr, {"v"})).members == named(gr, {"v", "s", "u"}));
  CHECK(saturated_hereditary_closure(g, named(gr, {"w"})).members == gr.all_vertices());
  CHECK(saturated_hereditary_closure(g, gr.all_vertices()).members == gr.all_vertices());
  CHECK(component_principal_closure(gr, poset[c1]).members == named(gr, {"v", "s", "u"}));

  const auto fs = filters(poset);
  REQUIRE(fs.size() == 3);
  CHECK(fs[0].members.empty());
  CHECK(fs[1].members == std::vector<std::size_t>{c1});
  CHECK(fs[2].members.size() == 2);

  std::vector<VertexSet> hs;
  for (const auto& h : enumerate_hereditary_saturated(g)) hs.push_back(h.members);
  CHECK(hs == std::vector<VertexSet>{named(gr, {"s", "u"}), named(gr, {"v", "s", "u"}),
                                     gr.all_vertices()});
}

TEST_CASE("fil-hered: filters and hereditary sets") {
  const auto g = load(fixtures::kFilHered);
  const auto& gr = g.graph();
  CHECK(sink_shadow(g).members == named(gr, {"s", "u"}));
  const auto fs = filters(g);
  REQUIRE(fs.size() == 2);
  CHECK(fs[1].members.size() == 1);
  CHECK(enumerate_hereditary_saturated(g).size() == 2);

  const auto q = quotient(gr, sink_shadow(g).members);
  CHECK(q.graph.vertex_count() == 2);
  std::vector<std::string> edges;
  for (const Edge& e : q.graph.edges()) edges.push_back(e.name);
  CHECK(edges == std::vector<std::string>{"e", "f"});
}

TEST_CASE("trivial and acyclic graphs") {
  const auto g = load(fixtures::trivial());
  CHECK(cyclic_components(g).empty());
  CHECK(filters(g).size() == 1);
  CHECK(enumerate_hereditary_saturated(g).size() == 1);
  CHECK(component_poset_ideals(g).ideals.size() == 1);

  const auto a = load("vertex a\nvertex b\nsink s\nedge x a b\nedge y b s\nedge z a s\n");
  CHECK(sink_shadow(a).members == a.graph().all_vertices());
  CHECK(cyclic_components(a).empty());
}

TEST_CASE("restriction and quotient") {
  const auto g = load(fixtures::kFilIdeal);
  const auto& gr = g.graph();
  const auto r = restriction(g, named(gr, {"v", "s", "u"}));
  CHECK(r.graph.vertex_count() == 3);
  CHECK(r.graph.graph().find_edge("c1"));
  CHECK(r.graph.graph().edge_count() == 3);
  CHECK(restriction(g, gr.all_vertices()).graph == g);
  CHECK(cyclic_components(restriction(g, sink_shadow(g).members).graph).empty());
  CHECK(code_of([&] { restriction(g, named(gr, {"v"})); }) == Errc::NotHereditary);
  CHECK(code_of([&] { restriction(g, named(gr, {"s"})); }) == Errc::NotSaturated);

  const auto q0 = quotient(gr, VertexSet(gr.vertex_count()));
  CHECK(q0.graph == gr);
  CHECK(code_of([&] { quotient(gr, named(gr, {"v"})); }) == Errc::NotHereditary);

  const auto s = load(fixtures::kStructure);
  const auto qs = quotient(s.graph(), named(s.graph(), {"s"}));
  CHECK(qs.graph.vertex_count() == 4);
  CHECK(cyclic_components(qs.graph).size() == 4);
}

TEST_CASE("hedgehog and path families") {
  const auto g = load(fixtures::kHedgehog);
  const auto& gr = g.graph();
  const auto all = hedgehog(gr, gr.all_vertices());
  CHECK(all.finite);
  CHECK(all.entering_paths.empty());
  CHECK(all.graph == gr);

  // A cycle outside H that reaches H.
  const auto c = load("vertex a\nvertex b\nsink s\nedge l a a\nedge x a b\nedge y b s\n");
  const auto inf = hedgehog(c.graph(), named(c.graph(), {"b", "s"}));
  CHECK_FALSE(inf.finite);
  REQUIRE(inf.witness);
  CHECK(inf.witness->cycle == std::vector<EdgeId>{c.graph().edge_id("l")});
  CHECK_THROWS_AS(hedgehog(gr, named(gr, {"v1"})), Error);

  for (int k = 1; k <= 4; ++k) {
    const auto ek = load(fixtures::e_k(k));
    const auto f = path_family_cardinality(ek.graph(), ek.sink());
    CHECK_FALSE(f.infinite);
    CHECK(f.count == k + 1);
  }
  const auto lone = load(fixtures::trivial());
  CHECK(path_family_cardinality(lone.graph(), lone.sink()).count == 1);

  // Forbidding a cycle's own edges: finite unless another cycle reaches it.
  const auto s = load(fixtures::kStructure);
  const auto& sg = s.graph();
  const std::vector<EdgeId> c1{sg.edge_id("C1")};
  CHECK(path_family_cardinality(sg, sg.vertex("v1"), c1).infinite);
  const auto single = load("vertex a\nvertex b\nsink s\nedge l a a\nedge x b a\nedge y a s\n");
  const auto fam = path_family_cardinality(single.graph(), single.graph().vertex("a"),
                                           {single.graph().edge_id("l")});
  CHECK_FALSE(fam.infinite);
  CHECK(fam.count == 2);  // a, x
}

TEST_CASE("pis criterion") {
  DirectedMultigraph two;
  two.add_vertex("a");
  two.add_edge("l1", "a", "a");
  two.add_edge("l2", "a", "a");
  CHECK(is_pis_graph(two));
  DirectedMultigraph one;
  one.add_vertex("a");
  one.add_edge("l", "a", "a");
  CHECK_FALSE(is_pis_graph(one));
  CHECK_FALSE(is_pis_graph(DirectedMultigraph{}));
}

TEST_CASE("VertexSet order: size first, then members") {
  const VertexSet a(4, {3}), b(4, {0, 1}), c(4, {0, 2});
  CHECK(a < b);
  CHECK(b < c);
  CHECK((b | c) == VertexSet(4, {0, 1, 2}));
  CHECK((b & c) == VertexSet(4, {0}));
  CHECK((b - c) == VertexSet(4, {1}));
}

TEST_CASE("property: closures, hereditary sets and components against definitions") {
  std::mt19937_64 rng(gen::kSeed);
  for (int round = 0; round < 150; ++round) {
    const SandpileGraph g = gen::small_sandpile(rng, 7);
    const auto& gr = g.graph();
    CAPTURE(format_graph(g));

    VertexSet x(gr.vertex_count());
    for (VertexId v = 0; v < gr.vertex_count(); ++v)
      if (gen::below(rng, 3) == 0) x.insert(v);
    const HereditarySet h = saturated_hereditary_closure(g, x);
    CHECK(h.members == oracle::closure(gr, x));
    CHECK(h.hereditary);
    CHECK(h.saturated);
    CHECK(saturated_hereditary_closure(g, h.members).members == h.members);

    const auto scan = oracle::hereditary_saturated_scan(gr);
    std::vector<VertexSet> brute, via_filters;
    for (const auto& s : enumerate_hereditary_saturated(g, EnumerationRoute::BruteForce))
      brute.push_back(s.members);
    for (const auto& s : enumerate_hereditary_saturated(g, EnumerationRoute::Filters))
      via_filters.push_back(s.members);
    std::sort(via_filters.begin(), via_filters.end());
    CHECK(brute == scan);
    CHECK(via_filters == scan);
    CHECK(scan.front() == sink_shadow(g).members);

    const auto poset = cyclic_components(g);
    std::vector<VertexSet> comps;
    for (const auto& c : poset.components()) comps.push_back(c.vertices);
    auto expected = oracle::cyclic_components(gr);
    std::sort(comps.begin(), comps.end());
    std::sort(expected.begin(), expected.end());
    CHECK(comps == expected);

    CHECK(filters(poset).size() == component_poset_ideals(g).ideals.size());
    for (std::size_t a = 0; a < poset.size(); ++a)
      for (std::size_t b = 0; b < poset.size(); ++b) {
        const auto ha = component_principal_closure(gr, poset[a]).members;
        const auto hb = component_principal_closure(gr, poset[b]).members;
        CHECK(poset.leq(a, b) == ha.is_subset_of(hb));
      }
    for (const auto& c : poset.components()) {
      bool exit = false;
      for (const Edge& e : gr.edges())
        exit = exit || (c.vertices.contains(e.source) && !c.vertices.contains(e.range));
      CHECK(has_exit(gr, c) == exit);
    }
  }
}

TEST_CASE("property: hedgehog and path counts against enumeration") {
  std::mt19937_64 rng(gen::kSeed + 1);
  for (int round = 0; round < 150; ++round) {
    const SandpileGraph g = gen::small_sandpile(rng, 6);
    const auto& gr = g.graph();
    CAPTURE(format_graph(g));
    const auto hs = oracle::hereditary_saturated_scan(gr);
    const VertexSet h = hs[gen::below(rng, hs.size())];
    const auto hh = hedgehog(gr, h);
    const auto expected = oracle::entering_paths(gr, h);
    CHECK(hh.finite == expected.has_value());
    if (expected) {
      CHECK(hh.entering_paths == *expected);
      CHECK(hh.count == expected->size());
      CHECK(hh.graph.vertex_count() == h.size() + expected->size());
    }

    const VertexId target = gen::below(rng, gr.vertex_count());
    const auto fam = path_family_cardinality(gr, target);
    const auto count = count_paths_to(gr, target);
    CHECK(fam.infinite == !count.has_value());
    if (count) CHECK(fam.count == *count);
  }
}

TEST_CASE("property: pis criterion against its three clauses") {
  std::mt19937_64 rng(gen::kSeed + 2);
  for (int round = 0; round < 300; ++round) {
    const DirectedMultigraph g = gen::multigraph(rng, 1 + gen::below(rng, 4), 7);
    CAPTURE(format_graph(g));
    const auto comps = oracle::cyclic_components(g);
    bool every_cycle_exits = true;
    for (const auto& c : comps) {
      std::size_t inside = 0;
      bool leaves = false;
      for (const Edge& e : g.edges()) {
        if (!c.contains(e.source)) continue;
        if (c.contains(e.range)) ++inside;
        else leaves = true;
      }
      if (inside == c.size() && !leaves) every_cycle_exits = false;
    }
    const auto hs = oracle::hereditary_saturated_scan(g);
    const bool simple = hs.size() == 1 && hs.front() == g.all_vertices();
    CHECK(is_pis_graph(g) == (!comps.empty() && every_cycle_exits && simple));
  }
}
