#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "spl/corpus.hpp"
#include "spl/error.hpp"
#include "spl/io.hpp"
#include "spl/report.hpp"
#include "spl/structure.hpp"
#include "spl/verify.hpp"

namespace fs = std::filesystem;
using namespace spl;

namespace {

constexpr int kExitPass = 0, kExitFail = 1, kExitUsage = 2;

struct Common {
  bool json = false;
  std::uint64_t cap = kDefaultElementCap;
};

// Plain-text view of a report: one key per line, nested values indented.
void print_text(const Json& j, std::ostream& out, int indent = 0) {
  const std::string pad(indent, ' ');
  auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  auto flat = [](const Json& v) {
    if (!v.is_array()) return false;
    for (const auto& x : v)
      if (x.is_structured()) return false;
    return true;
  };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (k == "schema") continue;
      if (!v.is_structured()) {
        out << pad << k << ": " << scalar(v) << "\n";
      } else if (flat(v)) {
        out << pad << k << ":";
        for (const auto& x : v) out << " " << scalar(x);
        out << "\n";
      } else {
        out << pad << k << ":\n";
        print_text(v, out, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_structured() && !flat(v)) {
        out << pad << "-\n";
        print_text(v, out, indent + 2);
      } else if (flat(v)) {
        out << pad << "-";
        for (const auto& x : v) out << " " << scalar(x);
        out << "\n";
      } else {
        out << pad << "- " << scalar(v) << "\n";
      }
    }
  } else {
    out << pad << scalar(j) << "\n";
  }
}

void emit(const Common& c, const Json& j) {
  if (c.json)
    std::cout << j.dump(2) << "\n";
  else
    print_text(j, std::cout);
}

SandpileGraph load_graph(const std::string& path) { return parse_sandpile(read_file(path)); }

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::InvalidArgument, "cannot write '" + path.string() + "'");
  out << text;
}

void print_verify_text(const VerifyReport& r, bool timing) {
  const auto tally = r.tally();
  for (Check c : kAllChecks) {
    const auto& [ok, bad] = tally[static_cast<std::size_t>(c)];
    std::printf("%-20s %s  pass %zu fail %zu\n", std::string(to_string(c)).c_str(),
                bad ? "FAIL" : "PASS", ok, bad);
  }
  if (timing) {
    std::vector<double> total(std::size(kAllChecks), 0.0);
    for (const auto& g : r.graphs)
      for (const auto& c : g.checks) total[static_cast<std::size_t>(c.check)] += c.millis;
    for (Check c : kAllChecks)
      std::printf("time %-15s %.1f ms\n", std::string(to_string(c)).c_str(),
                  total[static_cast<std::size_t>(c)]);
  }
  for (const auto& g : r.graphs) {
    if (g.pass()) continue;
    std::printf("graph %zu FAIL\n", g.index);
    for (const auto& c : g.checks)
      if (!c.pass) std::printf("  %s: %s\n", std::string(to_string(c.check)).c_str(), c.detail.c_str());
    std::printf("%s", g.graph_file.c_str());
  }
  std::printf("%zu graphs: %s\n", r.graphs.size(), r.pass() ? "PASS" : "FAIL");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sandpile monoids, their lattices and groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_flag("--json", common.json, "Emit JSON")->group("Global");
  app.add_option("--cap", common.cap, "Largest monoid to enumerate")
      ->envname("SPL_CAP")
      ->group("Global");
  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "Random seed")->group("Global");

  std::string file;
  auto with_file = [&](CLI::App* sub) {
    sub->add_option("graph", file, "Graph file")->required();
    return sub;
  };

  auto* validate = with_file(app.add_subcommand("validate", "Check that a file is a sandpile graph"));
  auto* monoid = with_file(app.add_subcommand("monoid", "Enumerate SP(E)"));
  auto* idem = with_file(app.add_subcommand("idempotents", "Idempotents with their hereditary sets"));
  auto* lattice = with_file(app.add_subcommand("lattice", "The five lattices and the maps between them"));
  bool lattice_verify = false;
  lattice->add_flag("--verify", lattice_verify, "Exit 1 unless every map is an isomorphism");

  auto* group = with_file(app.add_subcommand("group", "Sandpile group"));
  std::string oracle = "both";
  group->add_option("--oracle", oracle, "monoid, snf or both")
      ->check(CLI::IsMember({"monoid", "snf", "both"}));
  bool carrier = false;
  group->add_flag("--carrier", carrier, "List the group elements");

  auto* arch = with_file(app.add_subcommand("arch", "Archimedean classes and their groups"));
  auto* structure = with_file(app.add_subcommand("structure", "Graded ideal chain and layers"));
  StructureOptions sopts;
  sopts.paths.listing_limit = 64;
  structure->add_option("--list", sopts.paths.listing_limit, "Paths listed per family");

  auto* check = app.add_subcommand("check", "Single theorem checks");
  check->require_subcommand(1);
  check->fallthrough();
  auto* two_idem = with_file(check->add_subcommand("two-idem", "Two-idempotent equivalence"));

  auto* gen = app.add_subcommand("gen", "Random sandpile graphs");
  CorpusSpec spec;
  spec.count = 10;
  gen->add_option("--count", spec.count, "Number of graphs");
  gen->add_option("--max-sites", spec.max_sites, "Non-sink vertices");
  gen->add_option("--max-degree", spec.max_out_degree, "Out-degree bound");
  gen->add_option("--max-parallel", spec.max_parallel, "Parallel edge bound");
  std::string out_dir;
  gen->add_option("--out", out_dir, "Write one file per graph into this directory");

  auto* verify = app.add_subcommand("verify", "Every check on files or on a random corpus");
  std::vector<std::string> files;
  verify->add_option("graphs", files, "Graph files");
  std::size_t corpus = 0, single = 0;
  verify->add_option("--corpus", corpus, "Generate this many random graphs");
  verify->add_option("--single-component", single, "Also generate graphs with one cyclic component");
  VerifyOptions vopts;
  verify->add_option("--jobs", vopts.jobs, "Worker threads (0: all cores)");
  verify->add_option("--samples", vopts.confluence_samples, "Configurations per confluence check");
  bool timing = false;
  verify->add_flag("--timing", timing, "Report time per check");
  std::string fail_dir;
  verify->add_option("--fail-dir", fail_dir, "Write failing graphs into this directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*validate) {
      emit(common, validate_report(load_graph(file)));
      return kExitPass;
    }
    if (*monoid) {
      emit(common, monoid_report(MonoidTable::enumerate(load_graph(file), common.cap)));
      return kExitPass;
    }
    if (*idem) {
      emit(common, idempotent_report(MonoidTable::enumerate(load_graph(file), common.cap)));
      return kExitPass;
    }
    if (*lattice) {
      const Json j = lattice_report(MonoidTable::enumerate(load_graph(file), common.cap));
      emit(common, j);
      return lattice_verify && !j["pass"].get<bool>() ? kExitFail : kExitPass;
    }
    if (*group) {
      const auto g = load_graph(file);
      std::optional<MonoidTable> m;
      if (oracle != "snf") m = MonoidTable::enumerate(g, common.cap);
      const Json j = group_report(m ? &*m : nullptr, g, oracle != "monoid", carrier);
      emit(common, j);
      return j.contains("agree") && !j["agree"].get<bool>() ? kExitFail : kExitPass;
    }
    if (*arch) {
      emit(common, archimedean_report(MonoidTable::enumerate(load_graph(file), common.cap)));
      return kExitPass;
    }
    if (*structure) {
      const auto g = load_graph(file);
      sopts.hedgehog_listing_limit = sopts.paths.listing_limit;
      const auto r = ideal_chain(g, sopts);
      emit(common, structure_report(g, r));
      return r.well_formed ? kExitPass : kExitFail;
    }
    if (*two_idem) {
      const auto r = two_idempotent_equivalence(MonoidTable::enumerate(load_graph(file), common.cap));
      emit(common, two_idempotent_report(r));
      return r.agree() ? kExitPass : kExitFail;
    }
    if (*gen) {
      spec.seed = seed;
      spec.monoid_cap = common.cap;
      const auto graphs = generate_corpus(spec);
      if (!out_dir.empty()) {
        fs::create_directories(out_dir);
        char name[32];
        for (std::size_t i = 0; i < graphs.size(); ++i) {
          std::snprintf(name, sizeof name, "g%04zu.graph", i);
          write_file(fs::path(out_dir) / name, format_graph(graphs[i]));
        }
      }
      if (common.json) {
        Json j = envelope("corpus");
        j["seed"] = seed;
        Json list = Json::array();
        for (const auto& g : graphs) list.push_back(format_graph(g));
        j["graphs"] = list;
        std::cout << j.dump(2) << "\n";
      } else if (out_dir.empty()) {
        for (std::size_t i = 0; i < graphs.size(); ++i)
          std::cout << "# graph " << i << "\n" << format_graph(graphs[i]) << "\n";
      }
      return kExitPass;
    }
    if (*verify) {
      std::vector<SandpileGraph> graphs;
      for (const auto& f : files) graphs.push_back(load_graph(f));
      if (corpus) {
        CorpusSpec cs;
        cs.count = corpus;
        cs.seed = seed;
        cs.monoid_cap = common.cap;
        for (auto& g : generate_corpus(cs)) graphs.push_back(std::move(g));
      }
      if (single)
        for (auto& g : generate_single_component(single, seed)) graphs.push_back(std::move(g));
      if (graphs.empty()) throw CLI::ValidationError("verify", "no graphs given");
      vopts.cap = common.cap;
      vopts.seed = seed;
      const auto r = verify_all(graphs, vopts);
      if (!fail_dir.empty()) {
        fs::create_directories(fail_dir);
        for (const auto& g : r.graphs)
          if (!g.pass())
            write_file(fs::path(fail_dir) / ("fail" + std::to_string(g.index) + ".graph"), g.graph_file);
      }
      if (common.json)
        std::cout << verify_report(r, timing).dump(2) << "\n";
      else
        print_verify_text(r, timing);
      return r.pass() ? kExitPass : kExitFail;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
