#include <doctest.h>

#include <map>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "spl/components.hpp"
#include "spl/corpus.hpp"
#include "spl/io.hpp"
#include "spl/report.hpp"
#include "spl/verify.hpp"

using namespace spl;
using spl::fixtures::load;

namespace {

std::string dump(const std::vector<SandpileGraph>& gs) {
  std::string out;
  for (const auto& g : gs) out += format_graph(g) + "--\n";
  return out;
}

}  // namespace

TEST_CASE("corpus is deterministic and respects its bounds") {
  CorpusSpec spec;
  spec.count = 10;
  spec.seed = 42;
  CHECK(dump(generate_corpus(spec)) == dump(generate_corpus(spec)));
  spec.seed = 43;
  const auto other = generate_corpus(spec);
  spec.seed = 42;
  CHECK(dump(other) != dump(generate_corpus(spec)));

  spec.count = 0;
  CHECK(generate_corpus(spec).empty());

  spec.count = 200;
  spec.max_sites = 5;
  spec.seed = 7;
  for (const auto& g : generate_corpus(spec)) {
    CAPTURE(format_graph(g));
    CHECK(g.sites().size() <= 5);
    std::uint64_t product = 1;
    std::map<std::pair<VertexId, VertexId>, int> copies;
    for (VertexId v : g.sites()) {
      CHECK(g.out_degree(v) >= 1);
      CHECK(g.out_degree(v) <= 3);
      product *= g.out_degree(v);
    }
    for (const Edge& e : g.graph().edges()) CHECK(++copies[{e.source, e.range}] <= 2);
    CHECK(product <= 243);
    CHECK(MonoidTable::enumerate(g).size() == product);
    // Graphs survive a trip through the file format.
    CHECK(parse_sandpile(format_graph(g)).graph() == g.graph());
  }
}

TEST_CASE("single component generator") {
  const auto gs = generate_single_component(50, 9);
  CHECK(gs.size() == 50);
  for (const auto& g : gs) {
    CAPTURE(format_graph(g));
    CHECK(oracle::cyclic_components(g.graph()).size() == 1);
    CHECK(cyclic_components(g).size() == 1);
  }
  CHECK(dump(gs) == dump(generate_single_component(50, 9)));
}

TEST_CASE("stabilize_by_schedule matches stabilize") {
  std::mt19937_64 rng(5);
  CorpusSpec spec;
  spec.count = 20;
  spec.seed = 5;
  for (const auto& g : generate_corpus(spec)) {
    const Configuration c = random_configuration(g, rng);
    for (VertexId v : g.sites()) CHECK(c[v] <= 2 * g.out_degree(v));
    CHECK(stabilize_by_schedule(g, c, rng) == stabilize(g, c).config());
  }
}

TEST_CASE("verify: worked examples and trivial graph pass") {
  std::vector<SandpileGraph> gs;
  for (const std::string& t : {std::string(fixtures::kFilHered), std::string(fixtures::kFilIdeal),
                               std::string(fixtures::kStructure), fixtures::example2(),
                               fixtures::trivial()})
    gs.push_back(load(t));
  const auto r = verify_all(gs);
  REQUIRE(r.graphs.size() == gs.size());
  for (const auto& v : r.graphs) {
    CAPTURE(v.index);
    CHECK(v.checks.size() == std::size(kAllChecks));
    for (const auto& c : v.checks) {
      CAPTURE(to_string(c.check));
      CAPTURE(c.detail);
      CHECK(c.pass);
    }
  }
  CHECK(r.pass());
}

TEST_CASE("verify: order-stable and deterministic JSON across job counts") {
  CorpusSpec spec;
  spec.count = 24;
  spec.seed = 11;
  spec.max_sites = 4;
  const auto gs = generate_corpus(spec);
  VerifyOptions one;
  one.jobs = 1;
  one.seed = 3;
  VerifyOptions many = one;
  many.jobs = 6;
  const auto a = verify_all(gs, one);
  const auto b = verify_all(gs, many);
  for (std::size_t i = 0; i < gs.size(); ++i) CHECK(a.graphs[i].index == i);
  CHECK(verify_report(a, false).dump() == verify_report(b, false).dump());
  CHECK(a.pass());
  const auto j = verify_report(a, false);
  CHECK(j["schema"] == 1);
}

TEST_CASE("verify: a failure carries a re-runnable graph file") {
  const std::vector<SandpileGraph> gs = {load(fixtures::kStructure)};
  VerifyOptions opts;
  opts.cap = 1;  // enumeration refuses, every check fails
  const auto r = verify_all(gs, opts);
  CHECK_FALSE(r.pass());
  const auto& v = r.graphs.at(0);
  for (const auto& c : v.checks) {
    CHECK_FALSE(c.pass);
    CHECK_FALSE(c.detail.empty());
  }
  const auto back = parse_sandpile(v.graph_file);
  CHECK(back.graph() == gs[0].graph());
  const auto j = verify_report(r, false);
  CHECK(j.dump().find("graph_file") != std::string::npos);
  CHECK(verify_all(gs).pass());
}
