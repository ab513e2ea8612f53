#include "spl/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <thread>

#include "spl/error.hpp"
#include "spl/group.hpp"
#include "spl/hereditary.hpp"
#include "spl/io.hpp"
#include "spl/lattice.hpp"
#include "spl/snf.hpp"
#include "spl/structure.hpp"

namespace spl {

Configuration stabilize_by_schedule(const SandpileGraph& g, Configuration c, std::mt19937_64& rng) {
  c.set(g.sink(), 0);
  std::vector<VertexId> unstable;
  for (;;) {
    unstable.clear();
    for (VertexId v : g.sites())
      if (c[v] >= g.out_degree(v)) unstable.push_back(v);
    if (unstable.empty()) return c;
    const VertexId v =
        unstable[std::uniform_int_distribution<std::size_t>(0, unstable.size() - 1)(rng)];
    c = fire(g, c, v);
  }
}

Configuration random_configuration(const SandpileGraph& g, std::mt19937_64& rng) {
  Configuration c(g.vertex_count());
  for (VertexId v : g.sites())
    c.set(v, std::uniform_int_distribution<std::uint64_t>(0, 2 * g.out_degree(v))(rng));
  return c;
}

std::string_view to_string(Check c) {
  switch (c) {
    case Check::Confluence: return "confluence";
    case Check::FiveWay: return "five-way-lattice";
    case Check::Archimedean: return "archimedean";
    case Check::GroupOracle: return "group-snf-oracle";
    case Check::ChainEquivalences: return "chain-equivalences";
    case Check::TwoIdempotent: return "two-idempotent";
    case Check::SubmonoidEmbedding: return "submonoid-embedding";
    case Check::DirectLimit: return "direct-limit";
    case Check::Structure: return "ideal-chain";
  }
  return "?";
}

bool GraphVerdict::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

bool VerifyReport::pass() const {
  return std::all_of(graphs.begin(), graphs.end(), [](const GraphVerdict& g) { return g.pass(); });
}

std::vector<std::pair<std::size_t, std::size_t>> VerifyReport::tally() const {
  std::vector<std::pair<std::size_t, std::size_t>> out(std::size(kAllChecks));
  for (const auto& g : graphs)
    for (const auto& c : g.checks) {
      auto& slot = out[static_cast<std::size_t>(c.check)];
      (c.pass ? slot.first : slot.second)++;
    }
  return out;
}

namespace {

// Returns an empty string on success, otherwise what went wrong.
using CheckFn = std::function<std::string()>;

std::string check_confluence(const SandpileGraph& g, std::mt19937_64& rng, std::size_t samples) {
  for (std::size_t i = 0; i < samples; ++i) {
    const Configuration c = random_configuration(g, rng);
    const Configuration a = stabilize_by_schedule(g, c, rng);
    const Configuration b = stabilize_by_schedule(g, c, rng);
    if (a != b) return "two firing schedules disagree on sample " + std::to_string(i);
    if (a != stabilize(g, c).config()) return "schedule disagrees with stabilize on sample " + std::to_string(i);
  }
  return {};
}

std::string check_five_way(const MonoidTable& m) {
  const FiveWayReport r = verify_five_way(m);
  if (r.pass()) return {};
  std::string out;
  auto note = [&](bool ok, const char* what) {
    if (!ok) out += (out.empty() ? "" : ", ") + std::string(what);
  };
  note(r.delta.pass(), "delta");
  note(r.phi.pass(), "phi");
  note(r.psi.pass(), "psi");
  note(r.varsigma.pass(), "varsigma");
  note(r.order_ideals.report.pass() && r.order_ideals.mutually_inverse, "order-ideals");
  note(r.varsigma_is_phi_delta, "varsigma = phi delta");
  note(r.idempotent_square_commutes, "idempotent square");
  if (out.empty()) out = "cardinalities differ";
  return out;
}

std::string check_archimedean(const MonoidTable& m) {
  const auto classes = archimedean_classes(m);
  std::vector<int> seen(m.size(), 0);
  for (const auto& cls : classes) {
    std::size_t idem = 0;
    for (ElementId x : cls.members) {
      ++seen[x];
      if (m.is_idempotent(x)) ++idem;
    }
    if (idem != 1 || !std::binary_search(cls.members.begin(), cls.members.end(), cls.idempotent))
      return "class of " + std::to_string(cls.idempotent) + " does not hold exactly one idempotent";
    const FiniteAbelianGroup local = grothendieck_of_class(m, cls);
    const FiniteAbelianGroup lifted = restricted_group(m, hereditary_of_idempotent(m, cls.idempotent));
    if (local.carrier != lifted.carrier)
      return "x + [x] differs from G(E_H) at idempotent " + std::to_string(cls.idempotent);
  }
  if (std::any_of(seen.begin(), seen.end(), [](int n) { return n != 1; }))
    return "classes do not partition SP(E)";
  const auto it = std::find_if(classes.begin(), classes.end(),
                               [&](const ArchimedeanClass& c) { return c.idempotent == m.e_max(); });
  if (it == classes.end()) return "no class at e_max";
  if (sandpile_group(m).carrier != grothendieck_of_class(m, *it).carrier)
    return "G(E) differs from e_max + [e_max]";
  return {};
}

std::string check_group_oracle(const MonoidTable& m) {
  const InvariantFactors monoid = invariant_factors(m, sandpile_group(m));
  const SmithNormalForm snf = smith_normal_form(reduced_laplacian(m.graph()));
  if (!snf.certified) return "Smith normal form not certified";
  if (snf.nontrivial != monoid)
    return "monoid " + format_factors(monoid) + " vs Laplacian " + format_factors(snf.nontrivial);
  return {};
}

std::string check_embeddings(const SandpileGraph& g, std::uint64_t cap) {
  const auto hs = enumerate_hereditary_saturated(g);
  for (const auto& h : hs)
    for (const auto& h2 : hs)
      if (h.members.is_subset_of(h2.members) && !submonoid_embedding_check(g, h.members, h2.members, cap))
        return "SP(E_H) -> SP(E_H') fails for H = " + format_vertex_set(g.graph(), h.members) +
               ", H' = " + format_vertex_set(g.graph(), h2.members);
  return {};
}

std::string check_structure(const MonoidTable& m) {
  const IdealChainReport r = ideal_chain(m.graph());
  if (!r.well_formed) return "ideal chain is not well formed";
  const bool one_per_layer = std::all_of(r.layers.begin(), r.layers.end(),
                                         [](const Layer& l) { return l.components.size() == 1; });
  if (idempotent_lattice(m).lattice.is_chain() != one_per_layer)
    return "Idem chain condition disagrees with one component per layer";
  for (const auto& l : r.layers)
    for (const auto& c : l.components)
      if (c.kind == LayerKind::PurelyInfiniteSimple && c.hedgehog.pis == std::optional<bool>(false))
        return "purely infinite layer component with a hedgehog failing the criterion";
  return {};
}

CheckResult run(Check which, const CheckFn& fn) {
  CheckResult r;
  r.check = which;
  const auto start = std::chrono::steady_clock::now();
  try {
    r.detail = fn();
  } catch (const std::exception& e) {
    r.detail = e.what();
  }
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  r.pass = r.detail.empty();
  return r;
}

}  // namespace

GraphVerdict verify_graph(const SandpileGraph& g, std::size_t index, const VerifyOptions& opts) {
  GraphVerdict out;
  out.index = index;
  out.graph_file = format_graph(g);
  std::optional<MonoidTable> table;
  try {
    table.emplace(MonoidTable::enumerate(g, opts.cap));
  } catch (const std::exception& e) {
    for (Check c : kAllChecks) out.checks.push_back({c, false, e.what(), 0});
    return out;
  }
  const MonoidTable& m = *table;
  out.monoid_size = m.size();
  std::mt19937_64 rng(opts.seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));

  for (Check c : kAllChecks) {
    CheckFn fn;
    switch (c) {
      case Check::Confluence:
        fn = [&] { return check_confluence(g, rng, opts.confluence_samples); };
        break;
      case Check::FiveWay: fn = [&] { return check_five_way(m); }; break;
      case Check::Archimedean: fn = [&] { return check_archimedean(m); }; break;
      case Check::GroupOracle: fn = [&] { return check_group_oracle(m); }; break;
      case Check::ChainEquivalences:
        fn = [&] {
          return chain_equivalences(m).agree() ? std::string() : "the six chain conditions disagree";
        };
        break;
      case Check::TwoIdempotent:
        fn = [&] {
          return two_idempotent_equivalence(m).agree() ? std::string()
                                                       : "the three two-idempotent clauses disagree";
        };
        break;
      case Check::SubmonoidEmbedding: fn = [&] { return check_embeddings(g, opts.cap); }; break;
      case Check::DirectLimit:
        fn = [&] { return direct_limit_check(m) ? std::string() : "direct system fails"; };
        break;
      case Check::Structure: fn = [&] { return check_structure(m); }; break;
    }
    out.checks.push_back(run(c, fn));
  }
  return out;
}

VerifyReport verify_all(const std::vector<SandpileGraph>& graphs, const VerifyOptions& opts) {
  VerifyReport report;
  report.graphs.resize(graphs.size());
  std::size_t jobs = opts.jobs ? opts.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min(jobs, graphs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < graphs.size();)
      report.graphs[i] = verify_graph(graphs[i], i, opts);
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return report;
}

}  // namespace spl
