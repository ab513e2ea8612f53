// One PASS/FAIL line per acceptance criterion. Exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "spl/corpus.hpp"
#include "spl/group.hpp"
#include "spl/hereditary.hpp"
#include "spl/io.hpp"
#include "spl/lattice.hpp"
#include "spl/paths.hpp"
#include "spl/snf.hpp"
#include "spl/structure.hpp"

using namespace spl;
using spl::fixtures::load;
using Clock = std::chrono::steady_clock;

namespace {

// Pinned parameters.
constexpr std::uint64_t kCorpusSeed = 20260101;
constexpr std::size_t kCorpusSize = 200;
constexpr std::size_t kCorpusSites = 6;
constexpr std::size_t kCorpusDegree = 3;
constexpr std::uint64_t kCorpusCap = 100'000;
constexpr std::size_t kConfigurations = 500;
constexpr std::size_t kSingleComponent = 50;
constexpr std::size_t kMicroGraphs = 150;
constexpr std::size_t kMicroSites = 4;
constexpr std::size_t kMicroPairsPerGraph = 4;
constexpr std::size_t kArchOracleLimit = 256;  // definitional classes up to this size
constexpr double kGoldenSeconds = 1.0;
constexpr double kFiveWaySeconds = 120.0;
constexpr double kMicroSeconds = 60.0;

struct Outcome {
  std::vector<std::string> failures;
  std::size_t checked = 0;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok && failures.size() < 5) failures.push_back(what);
    if (!ok && failures.size() == 5) failures.push_back("...");
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string where(std::size_t i, const SandpileGraph& g) {
  return "graph " + std::to_string(i) + ":\n" + format_graph(g);
}

VertexSet named(const DirectedMultigraph& g, std::initializer_list<const char*> vs) {
  VertexSet s(g.vertex_count());
  for (const char* v : vs) s.insert(g.vertex(v));
  return s;
}

std::vector<std::uint64_t> small(const InvariantFactors& f) {
  std::vector<std::uint64_t> out;
  for (const auto& d : f.factors) out.push_back(d.convert_to<std::uint64_t>());
  return out;
}

void goldens(Outcome& o) {
  for (int k = 2; k <= 6; ++k) {
    const auto m = MonoidTable::enumerate(load(fixtures::e_k(k)));
    o.expect(m.size() == static_cast<std::size_t>(k), "E_k size");
    o.expect(small(invariant_factors(m, sandpile_group(m))) == std::vector<std::uint64_t>{std::uint64_t(k)},
             "E_k factors");
  }

  {
    const auto g = load(fixtures::example2());
    const auto m = MonoidTable::enumerate(g);
    std::vector<std::string> labels;
    for (ElementId x = 0; x < m.size(); ++x) labels.push_back(format_element(m, x));
    o.expect(labels == std::vector<std::string>{"0", "v", "2v", "3v"}, "example 2 elements");
    const VertexId v = g.graph().vertex("v");
    o.expect(equals(g, Configuration::single(g.vertex_count(), v, 4),
                    Configuration::single(g.vertex_count(), v, 3)),
             "4v = 3v");
  }

  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= 4; ++k) {
      const auto g = load(fixtures::loops_and_exits(n, k));
      const VertexId v = g.graph().vertex("v");
      o.expect(MonoidTable::enumerate(g).size() == static_cast<std::size_t>(n + k), "n + k elements");
      o.expect(equals(g, Configuration::single(g.vertex_count(), v, n + k),
                      Configuration::single(g.vertex_count(), v, n)),
               "(n + k)v = nv");
    }

  {
    const auto g = load(fixtures::kFilHered);
    o.expect(hereditary_lattice(g).elements.size() == 2, "fil-hered H_E");
    o.expect(filter_lattice(g).elements.size() == 2, "fil-hered F_E");
  }

  {
    const auto g = load(fixtures::kFilIdeal);
    const auto& gr = g.graph();
    const auto fil = filter_lattice(g);
    const auto ideals = principal_ideal_lattice(g);
    o.expect(fil.elements.size() == 3 && ideals.lattice.size() == 3, "fil-ideal sizes");
    const auto psi = psi_map(fil, ideals);
    o.expect(psi.pass(), "psi is an isomorphism");
    const VertexSet s_e = named(gr, {"s", "u"}), h_c1 = named(gr, {"v", "s", "u"});
    const std::size_t c1 = *fil.poset.component_of(gr.vertex("v"));
    const std::size_t c2 = *fil.poset.component_of(gr.vertex("w"));
    std::map<std::vector<std::size_t>, std::set<VertexSet>> want = {
        {{}, {s_e}},
        {{c1}, {s_e, h_c1}},
        {{std::min(c1, c2), std::max(c1, c2)}, {s_e, h_c1, gr.all_vertices()}},
    };
    for (std::size_t i = 0; i < fil.elements.size() && psi.pass(); ++i) {
      std::set<VertexSet> image;
      for (std::size_t j : ideals.closures.ideals[*psi.forward[i]])
        image.insert(ideals.closures.members[j]);
      const auto it = want.find(fil.elements[i].members);
      o.expect(it != want.end() && it->second == image, "psi table");
    }
  }

  {
    const auto g = load(fixtures::kHedgehog);
    const auto& gr = g.graph();
    const auto hh = hedgehog(gr, named(gr, {"v0", "v"}));
    std::vector<std::string> paths;
    for (const auto& p : hh.entering_paths) paths.push_back(format_path(gr, p));
    std::sort(paths.begin(), paths.end());
    o.expect(hh.finite && paths == std::vector<std::string>{"e1", "e2e1", "e3e1"}, "F(H)");
  }

  {
    const auto g = load(fixtures::kStructure);
    const auto& gr = g.graph();
    const auto r = ideal_chain(g);
    o.expect(r.t == 3 && r.chain.size() == 4, "structure t = 3");
    if (r.chain.size() == 4) {
      o.expect(r.chain[0] == named(gr, {"s"}), "I_0");
      o.expect(r.chain[1] == named(gr, {"v1", "s"}), "I_1");
      o.expect(r.chain[2] == named(gr, {"v3", "v2", "v1", "s"}), "I_2");
      o.expect(r.chain[3] == gr.all_vertices(), "I_3");
    }
    using Tags = std::multiset<LayerKind>;
    const std::vector<Tags> want = {{LayerKind::MatrixOverLaurent},
                                    {LayerKind::PurelyInfiniteSimple, LayerKind::MatrixOverLaurent},
                                    {LayerKind::MatrixOverLaurent}};
    o.expect(r.layers.size() == 3, "three layers");
    for (std::size_t i = 0; i < std::min<std::size_t>(3, r.layers.size()); ++i) {
      Tags got;
      for (const auto& c : r.layers[i].components) got.insert(c.kind);
      o.expect(got == want[i], "layer " + std::to_string(i + 1) + " tags");
    }
    for (const auto& c : r.layers.size() > 1 ? r.layers[1].components : std::vector<LayerComponent>{})
      if (c.kind == LayerKind::PurelyInfiniteSimple)
        o.expect(c.vertices == named(gr, {"v2"}), "PIS component at v2");
  }
}

void confluence(Outcome& o, const std::vector<SandpileGraph>& corpus) {
  std::mt19937_64 rng(kCorpusSeed + 2);
  for (std::size_t i = 0; i < kConfigurations; ++i) {
    const std::size_t gi = i % corpus.size();
    const auto& g = corpus[gi];
    Configuration c(g.vertex_count());
    for (VertexId v : g.sites()) c.set(v, rng() % (3 * g.out_degree(v) + 1));
    std::mt19937_64 first(rng()), second(rng());
    const Configuration a = oracle::random_schedule(g, c, first);
    const Configuration b = oracle::random_schedule(g, c, second);
    o.expect(a == b, "schedules disagree on " + where(gi, g));
    o.expect(stabilize(g, c).config() == a, "stabilize disagrees on " + where(gi, g));
  }
}

void five_way(Outcome& o, const std::vector<SandpileGraph>& corpus,
              const std::vector<MonoidTable>& tables) {
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto r = verify_five_way(tables[i]);
    o.expect(r.delta.pass() && r.phi.pass() && r.psi.pass() && r.varsigma.pass() &&
                 r.order_ideals.report.pass() && r.order_ideals.mutually_inverse,
             "map fails on " + where(i, corpus[i]));
    o.expect(r.varsigma_is_phi_delta && r.idempotent_square_commutes,
             "square fails on " + where(i, corpus[i]));
    o.expect(r.cardinalities.size() == 5 &&
                 std::count(r.cardinalities.begin(), r.cardinalities.end(), r.cardinalities[0]) == 5,
             "cardinalities differ on " + where(i, corpus[i]));
  }
}

void archimedean(Outcome& o, const std::vector<SandpileGraph>& corpus,
                 const std::vector<MonoidTable>& tables, std::size_t& oracle_runs) {
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& m = tables[i];
    const auto classes = archimedean_classes(m);
    std::vector<int> seen(m.size(), 0);
    bool one_idem = true;
    for (const auto& c : classes) {
      std::size_t idem = 0;
      for (ElementId x : c.members) {
        ++seen[x];
        idem += m.is_idempotent(x);
      }
      one_idem = one_idem && idem == 1 && m.is_idempotent(c.idempotent);
    }
    o.expect(std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; }),
             "not a partition on " + where(i, corpus[i]));
    o.expect(one_idem && classes.size() == m.idempotents().size(),
             "idempotent count on " + where(i, corpus[i]));

    for (const auto& c : classes) {
      const auto local = grothendieck_of_class(m, c);
      const auto restricted = restricted_group(m, hereditary_of_idempotent(m, c.idempotent));
      o.expect(local.carrier == restricted.carrier, "x + [x] != G(E_H) on " + where(i, corpus[i]));
    }
    const auto gp = sandpile_group(m);
    const auto top = std::find_if(classes.begin(), classes.end(),
                                  [&](const ArchimedeanClass& c) { return c.idempotent == m.e_max(); });
    o.expect(top != classes.end() && grothendieck_of_class(m, *top).carrier == gp.carrier &&
                 gp.carrier == m.recurrent_elements(),
             "G(E) != e_max + [e_max] on " + where(i, corpus[i]));

    if (m.size() <= kArchOracleLimit) {
      ++oracle_runs;
      std::set<std::vector<ElementId>> mine;
      for (const auto& c : classes) mine.insert(c.members);
      const auto def = oracle::archimedean_classes(m);
      o.expect(mine == std::set<std::vector<ElementId>>(def.begin(), def.end()),
               "classes differ from the definition on " + where(i, corpus[i]));
    }
  }
}

void group_oracle(Outcome& o, const std::vector<SandpileGraph>& corpus,
                  const std::vector<MonoidTable>& tables) {
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto via_monoid = invariant_factors(tables[i], sandpile_group(tables[i]));
    const auto snf = smith_normal_form(reduced_laplacian(corpus[i]));
    o.expect(snf.certified, "uncertified SNF on " + where(i, corpus[i]));
    o.expect(snf.nontrivial == via_monoid, "factors differ on " + where(i, corpus[i]));
  }
}

void two_idempotents(Outcome& o, const std::vector<SandpileGraph>& corpus,
                     const std::vector<MonoidTable>& tables, std::size_t& positives) {
  auto run = [&](const MonoidTable& m, std::size_t i, const SandpileGraph& g) {
    const auto r = two_idempotent_equivalence(m);
    o.expect(r.agree(), "clauses disagree on " + where(i, g));
    positives += r.two_idempotents;
  };
  for (std::size_t i = 0; i < corpus.size(); ++i) run(tables[i], i, corpus[i]);
  const auto single = generate_single_component(kSingleComponent, kCorpusSeed + 6);
  for (std::size_t i = 0; i < single.size(); ++i) {
    o.expect(cyclic_components(single[i]).size() == 1, "not single-component: " + where(i, single[i]));
    run(MonoidTable::enumerate(single[i], kCorpusCap), i, single[i]);
  }
}

void chains(Outcome& o, const std::vector<SandpileGraph>& corpus,
            const std::vector<MonoidTable>& tables, std::size_t& chain_count) {
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto r = chain_equivalences(tables[i]);
    o.expect(r.agree(), "chain conditions disagree on " + where(i, corpus[i]));
    chain_count += r.idempotents;
  }
}

void micro(Outcome& o) {
  CorpusSpec spec;
  spec.count = kMicroGraphs;
  spec.max_sites = kMicroSites;
  spec.seed = kCorpusSeed + 8;
  const auto graphs = generate_corpus(spec);
  std::mt19937_64 rng(kCorpusSeed + 9);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto& g = graphs[i];
    const auto m = MonoidTable::enumerate(g);

    const auto brute = oracle::order_ideals(m);
    std::set<std::vector<ElementId>> from_h;
    const auto hs = enumerate_hereditary_saturated(g, EnumerationRoute::Filters);
    for (const auto& h : hs) from_h.insert(supported_on(m, h.members));
    o.expect(std::set<std::vector<ElementId>>(brute.begin(), brute.end()) == from_h,
             "order-ideals differ on " + where(i, g));

    std::set<VertexSet> scan, filter;
    for (const auto& h : oracle::hereditary_saturated_scan(g.graph())) scan.insert(h);
    for (const auto& h : hs) filter.insert(h.members);
    o.expect(scan == filter, "H_E differs on " + where(i, g));

    for (std::size_t t = 0; t < kMicroPairsPerGraph; ++t) {
      Configuration a(g.vertex_count());
      for (VertexId v : g.sites()) a.set(v, rng() % (2 * g.out_degree(v) + 1));
      Configuration b = a;
      if (t % 2 == 0) {
        // Shares a reduct with a by construction.
        for (VertexId v : g.sites())
          if (b[v] >= g.out_degree(v) && rng() % 2) b = oracle::topple(g, b, v);
      } else {
        for (VertexId v : g.sites()) b.set(v, rng() % (2 * g.out_degree(v) + 1));
      }
      const auto joint = oracle::joint_reduct(g, a, b);
      o.expect(joint.has_value(), "joint-reduct search hit its bound on " + where(i, g));
      if (joint) o.expect(equals(g, a, b) == *joint, "equals disagrees on " + where(i, g));
    }
  }
}

bool report(int n, const char* name, const Outcome& o, const std::string& extra) {
  const bool pass = o.failures.empty();
  std::printf("criterion %d %-28s %s  (%zu checks%s)\n", n, name, pass ? "PASS" : "FAIL", o.checked,
              extra.c_str());
  for (const auto& f : o.failures) std::printf("    %s\n", f.c_str());
  std::fflush(stdout);
  return pass;
}

std::string secs(double s) {
  char buf[48];
  std::snprintf(buf, sizeof buf, ", %.2f s", s);
  return buf;
}

}  // namespace

int main() {
  bool all = true;

  {
    Outcome o;
    const auto t0 = Clock::now();
    goldens(o);
    const double s = seconds_since(t0);
    o.expect(s < kGoldenSeconds, "took " + std::to_string(s) + " s");
    all &= report(1, "worked-example goldens", o, secs(s));
  }

  CorpusSpec spec;
  spec.count = kCorpusSize;
  spec.max_sites = kCorpusSites;
  spec.max_out_degree = kCorpusDegree;
  spec.monoid_cap = kCorpusCap;
  spec.seed = kCorpusSeed;
  const auto corpus = generate_corpus(spec);
  std::vector<MonoidTable> tables;
  std::size_t largest = 0;
  for (const auto& g : corpus) {
    tables.push_back(MonoidTable::enumerate(g, kCorpusCap));
    largest = std::max(largest, tables.back().size());
  }
  std::printf("corpus: %zu graphs, seed %llu, largest monoid %zu\n", corpus.size(),
              static_cast<unsigned long long>(kCorpusSeed), largest);

  {
    Outcome o;
    confluence(o, corpus);
    all &= report(2, "confluence", o, "");
  }
  {
    Outcome o;
    const auto t0 = Clock::now();
    five_way(o, corpus, tables);
    const double s = seconds_since(t0);
    o.expect(s <= kFiveWaySeconds, "took " + std::to_string(s) + " s");
    all &= report(3, "five-way lattice isomorphism", o, secs(s));
  }
  {
    Outcome o;
    std::size_t oracle_runs = 0;
    archimedean(o, corpus, tables, oracle_runs);
    all &= report(4, "archimedean classes", o,
                  ", definitional oracle on " + std::to_string(oracle_runs) + " graphs");
  }
  {
    Outcome o;
    group_oracle(o, corpus, tables);
    all &= report(5, "group: monoid vs Laplacian SNF", o, "");
  }
  {
    Outcome o;
    std::size_t positives = 0;
    two_idempotents(o, corpus, tables, positives);
    all &= report(6, "two-idempotent equivalence", o,
                  ", " + std::to_string(positives) + " with two idempotents");
  }
  {
    Outcome o;
    std::size_t chain_count = 0;
    chains(o, corpus, tables, chain_count);
    all &= report(7, "chain equivalences", o, ", " + std::to_string(chain_count) + " chains");
  }
  {
    Outcome o;
    const auto t0 = Clock::now();
    micro(o);
    const double s = seconds_since(t0);
    o.expect(s <= kMicroSeconds, "took " + std::to_string(s) + " s");
    all &= report(8, "micro-scale brute force", o, secs(s));
  }

  std::printf("%s\n", all ? "ALL PASS" : "SOME FAILED");
  return all ? 0 : 1;
}
