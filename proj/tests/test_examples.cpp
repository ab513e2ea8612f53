// Worked example graphs and their published values.
#include <doctest.h>

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "spl/group.hpp"
#include "spl/lattice.hpp"
#include "spl/paths.hpp"
#include "spl/snf.hpp"
#include "spl/structure.hpp"

using namespace spl;
using spl::fixtures::load;

namespace {

std::vector<std::string> names(const DirectedMultigraph& g, const VertexSet& s) {
  std::vector<std::string> out;
  for (VertexId v : s.members()) out.push_back(g.vertex_name(v));
  return out;
}

VertexSet named(const DirectedMultigraph& g, std::initializer_list<const char*> vs) {
  VertexSet s(g.vertex_count());
  for (const char* v : vs) s.insert(g.vertex(v));
  return s;
}

}  // namespace

TEST_CASE("E_k: k elements, cyclic group of order k") {
  for (int k = 2; k <= 6; ++k) {
    const auto g = load(fixtures::e_k(k));
    const auto m = MonoidTable::enumerate(g);
    CHECK(m.size() == static_cast<std::size_t>(k));
    const auto gp = sandpile_group(m);
    const auto f = invariant_factors(m, gp);
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0] == k);
    CHECK(smith_normal_form(reduced_laplacian(g)).nontrivial == f);
  }
}

TEST_CASE("three loops and one exit: SP = {0, v, 2v, 3v}, 4v = 3v") {
  const auto g = load(fixtures::example2());
  const auto m = MonoidTable::enumerate(g);
  REQUIRE(m.size() == 4);
  const VertexId v = g.graph().vertex("v");
  std::vector<std::string> labels;
  for (ElementId x = 0; x < m.size(); ++x) labels.push_back(format_element(m, x));
  CHECK(labels == std::vector<std::string>{"0", "v", "2v", "3v"});
  CHECK(equals(g, Configuration::single(g.vertex_count(), v, 4),
               Configuration::single(g.vertex_count(), v, 3)));
  CHECK_FALSE(equals(g, Configuration::single(g.vertex_count(), v, 3),
                     Configuration::single(g.vertex_count(), v, 2)));
  CHECK(m.idempotents() == std::vector<ElementId>{0, 3});
  CHECK(format_matrix(reduced_laplacian(g)) == format_matrix([] {
          IntegerMatrix one(1, 1);
          one(0, 0) = 1;
          return one;
        }()));
}

TEST_CASE("n loops and k exits: n + k elements and (n + k)v = nv") {
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= 4; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      const auto g = load(fixtures::loops_and_exits(n, k));
      const auto m = MonoidTable::enumerate(g);
      CHECK(m.size() == static_cast<std::size_t>(n + k));
      const VertexId v = g.graph().vertex("v");
      const auto nv = Configuration::single(g.vertex_count(), v, n);
      const auto nkv = Configuration::single(g.vertex_count(), v, n + k);
      CHECK(equals(g, nkv, nv));
    }
}

TEST_CASE("fil-hered example: two hereditary saturated sets, two filters") {
  const auto file = parse_graph(fixtures::kFilHered);
  CHECK(file.graph.vertex_count() == 4);
  CHECK(file.graph.edge_count() == 4);
  const auto g = load(fixtures::kFilHered);
  const auto her = hereditary_lattice(g);
  const auto fil = filter_lattice(g);
  CHECK(her.elements.size() == 2);
  CHECK(fil.elements.size() == 2);
  CHECK(names(g.graph(), her.elements[0]) == std::vector<std::string>{"s", "u"});
  CHECK(her.elements[1] == g.graph().all_vertices());
  CHECK(phi_map(g, fil, her).pass());
  CHECK(order_ideals(MonoidTable::enumerate(g)).size() == 2);
}

TEST_CASE("fil-ideal example: three filters and the psi table") {
  const auto g = load(fixtures::kFilIdeal);
  const auto& gr = g.graph();
  const auto fil = filter_lattice(g);
  const auto ideals = principal_ideal_lattice(g);
  CHECK(fil.elements.size() == 3);
  CHECK(ideals.closures.ideals.size() == 3);
  CHECK(hereditary_lattice(g).elements.size() == 3);

  const VertexSet s_e = named(gr, {"s", "u"});
  const VertexSet h_c1 = named(gr, {"v", "s", "u"});
  const VertexSet h_c2 = gr.all_vertices();
  CHECK(sink_shadow(g).members == s_e);
  REQUIRE(ideals.closures.members.size() == 3);
  CHECK(ideals.closures.members[0] == s_e);

  const auto psi = psi_map(fil, ideals);
  REQUIRE(psi.pass());
  const std::size_t c1 = *fil.poset.component_of(gr.vertex("v"));
  const std::size_t c2 = *fil.poset.component_of(gr.vertex("w"));
  std::map<std::vector<std::size_t>, std::vector<VertexSet>> expected = {
      {{}, {s_e}},
      {{c1}, {s_e, h_c1}},
      {{std::min(c1, c2), std::max(c1, c2)}, {s_e, h_c1, h_c2}},
  };
  for (std::size_t i = 0; i < fil.elements.size(); ++i) {
    const auto it = expected.find(fil.elements[i].members);
    REQUIRE(it != expected.end());
    REQUIRE(psi.forward[i]);
    std::vector<VertexSet> image;
    for (std::size_t j : ideals.closures.ideals[*psi.forward[i]])
      image.push_back(ideals.closures.members[j]);
    std::sort(image.begin(), image.end());
    auto want = it->second;
    std::sort(want.begin(), want.end());
    CHECK(image == want);
  }
}

TEST_CASE("hedgehog example: F(H) = {e1, e2e1, e3e1}") {
  const auto g = load(fixtures::kHedgehog);
  const auto& gr = g.graph();
  const auto hh = hedgehog(gr, named(gr, {"v0", "v"}));
  REQUIRE(hh.finite);
  CHECK(hh.count == 3);
  std::vector<std::string> paths;
  for (const auto& p : hh.entering_paths) paths.push_back(format_path(gr, p));
  std::sort(paths.begin(), paths.end());
  CHECK(paths == std::vector<std::string>{"e1", "e2e1", "e3e1"});
  // E(H): H plus one vertex per path, s^-1(H) plus one edge per path.
  CHECK(hh.graph.vertex_count() == 2 + 3);
  CHECK(hh.graph.edge_count() == 2 + 3);
}

TEST_CASE("structure example: chain and layer tags") {
  const auto g = load(fixtures::kStructure);
  const auto& gr = g.graph();
  const auto r = ideal_chain(g);
  CHECK(r.well_formed);
  CHECK(r.t == 3);
  REQUIRE(r.chain.size() == 4);
  CHECK(r.chain[0] == named(gr, {"s"}));
  CHECK(r.chain[1] == named(gr, {"v1", "s"}));
  CHECK(r.chain[2] == named(gr, {"v3", "v2", "v1", "s"}));
  CHECK(r.chain[3] == gr.all_vertices());

  REQUIRE(r.layers.size() == 3);
  auto tags = [&](const Layer& l) {
    std::map<std::string, std::string> out;
    for (const auto& c : l.components)
      out[names(gr, c.vertices).front()] = std::string(to_string(c.kind));
    return out;
  };
  using Tags = std::map<std::string, std::string>;
  CHECK(tags(r.layers[0]) == Tags{{"v1", "MatrixOverLaurent"}});
  CHECK(tags(r.layers[1]) ==
        Tags{{"v2", "PurelyInfiniteSimple"}, {"v3", "MatrixOverLaurent"}});
  CHECK(tags(r.layers[2]) == Tags{{"v4", "MatrixOverLaurent"}});
  for (const auto& c : r.layers[1].components)
    if (c.kind == LayerKind::PurelyInfiniteSimple) CHECK(c.hedgehog.pis == std::optional<bool>(true));
}

TEST_CASE("trivial graph") {
  const auto g = load(fixtures::trivial());
  const auto m = MonoidTable::enumerate(g);
  CHECK(m.size() == 1);
  CHECK(m.idempotents().size() == 1);
  CHECK(verify_five_way(m).pass());
  const auto two = two_idempotent_equivalence(m);
  CHECK_FALSE(two.two_idempotents);
  CHECK_FALSE(two.graph_condition);
  CHECK_FALSE(two.vertex_simple);
  const auto r = ideal_chain(g);
  CHECK(r.t == 0);
  CHECK(r.well_formed);
}
