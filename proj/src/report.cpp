#include "spl/report.hpp"

#include "spl/hereditary.hpp"
#include "spl/io.hpp"
#include "spl/paths.hpp"
#include "spl/snf.hpp"

namespace spl {

namespace {

Json vertex_names(const DirectedMultigraph& g, const VertexSet& s) {
  Json out = Json::array();
  for (VertexId v : s.members()) out.push_back(g.vertex_name(v));
  return out;
}

Json edge_names(const DirectedMultigraph& g, const std::vector<EdgeId>& es) {
  Json out = Json::array();
  for (EdgeId e : es) out.push_back(g.edge(e).name);
  return out;
}

Json element_json(const MonoidTable& m, ElementId x) {
  Json counts = Json::object();
  for (std::size_t j = 0; j < m.sites().size(); ++j)
    counts[m.graph().graph().vertex_name(m.sites()[j])] = m.count_at(x, j);
  return Json{{"id", x}, {"label", format_element(m, x)}, {"counts", counts}};
}

Json labels_of(const MonoidTable& m, const std::vector<ElementId>& xs) {
  Json out = Json::array();
  for (ElementId x : xs) out.push_back(format_element(m, x));
  return out;
}

}  // namespace

Json envelope(const char* kind) { return Json{{"schema", kSchemaVersion}, {"kind", kind}}; }

Json to_json(const BigInt& n) {
  if (n >= 0 && n <= std::numeric_limits<std::uint64_t>::max()) return n.convert_to<std::uint64_t>();
  return n.str();
}

Json to_json(const PathFamilyCardinality& c, const DirectedMultigraph& g) {
  Json out;
  out["infinite"] = c.infinite;
  if (c.infinite) {
    out["witness_cycle"] = edge_names(g, c.witness->cycle);
    out["witness_connector"] = format_path(g, c.witness->connector);
  } else {
    out["count"] = to_json(c.count);
  }
  Json listing = Json::array();
  for (const auto& p : c.listing) listing.push_back(format_path(g, p));
  out["listing"] = listing;
  out["listing_truncated"] = c.listing_truncated;
  return out;
}

Json to_json(const InvariantFactors& f) {
  Json factors = Json::array();
  for (const auto& d : f.factors) factors.push_back(to_json(d));
  return Json{{"order", to_json(f.order)}, {"invariant_factors", factors}};
}

Json to_json(const LatticeIsoReport& r) {
  Json forward = Json::array();
  for (std::size_t i = 0; i < r.forward.size(); ++i)
    forward.push_back(Json{{"from", r.source_labels[i]},
                           {"to", r.forward[i] ? Json(r.target_labels[*r.forward[i]]) : Json()}});
  return Json{{"source", r.source_tag},        {"target", r.target_tag},
              {"pass", r.pass()},              {"bijective", r.bijective},
              {"order_both_ways", r.order_both_ways}, {"join_preserving", r.join_preserving},
              {"meet_preserving", r.meet_preserving}, {"map", forward}};
}

Json to_json(const FiniteLattice& l) {
  Json elements = Json::array();
  for (std::size_t i = 0; i < l.size(); ++i) elements.push_back(l.label(i));
  Json covers = Json::array();
  for (std::size_t a = 0; a < l.size(); ++a)
    for (std::size_t b = 0; b < l.size(); ++b) {
      if (a == b || !l.leq(a, b)) continue;
      bool cover = true;
      for (std::size_t c = 0; c < l.size() && cover; ++c)
        cover = c == a || c == b || !(l.leq(a, c) && l.leq(c, b));
      if (cover) covers.push_back(Json::array({a, b}));
    }
  return Json{{"tag", l.tag()}, {"size", l.size()}, {"elements", elements},
              {"covers", covers}, {"chain", l.is_chain()}, {"well_formed", l.well_formed()}};
}

Json validate_report(const SandpileGraph& g) {
  const auto& gr = g.graph();
  Json out = envelope("validate");
  out["valid"] = true;
  out["vertices"] = gr.vertex_count();
  out["edges"] = gr.edge_count();
  out["sink"] = gr.vertex_name(g.sink());
  Json deg = Json::object();
  for (VertexId v : g.sites()) deg[gr.vertex_name(v)] = g.out_degree(v);
  out["out_degree"] = deg;
  return out;
}

Json monoid_report(const MonoidTable& m) {
  Json out = envelope("monoid");
  out["size"] = m.size();
  Json sites = Json::array();
  for (VertexId v : m.sites()) sites.push_back(m.graph().graph().vertex_name(v));
  out["sites"] = sites;
  Json elements = Json::array();
  for (ElementId x = 0; x < m.size(); ++x) elements.push_back(element_json(m, x));
  out["elements"] = elements;
  Json generators = Json::object();
  for (VertexId v : m.sites())
    generators[m.graph().graph().vertex_name(v)] = m.generator(v);
  out["generators"] = generators;
  out["idempotents"] = labels_of(m, m.idempotents());
  out["recurrent"] = labels_of(m, m.recurrent_elements());
  return out;
}

Json idempotent_report(const MonoidTable& m) {
  Json out = envelope("idempotents");
  const IdempotentLattice idem = idempotent_lattice(m);
  out["count"] = idem.elements.size();
  Json items = Json::array();
  for (ElementId e : idem.elements)
    items.push_back(Json{{"element", format_element(m, e)},
                         {"hereditary", vertex_names(m.graph().graph(), hereditary_of_idempotent(m, e))}});
  out["idempotents"] = items;
  out["e_max"] = format_element(m, m.e_max());
  out["lattice"] = to_json(idem.lattice);
  return out;
}

Json lattice_report(const MonoidTable& m) {
  const SandpileGraph& g = m.graph();
  const IdempotentLattice idem = idempotent_lattice(m);
  const FilterLattice fil = filter_lattice(g);
  const HereditaryLattice her = hereditary_lattice(g);
  const PrincipalIdealLattice ideals = principal_ideal_lattice(g);
  const OrderIdealLattice ord = order_ideal_lattice(m);
  const FiveWayReport five = verify_five_way(m);

  Json out = envelope("lattice");
  out["lattices"] = Json::array({to_json(idem.lattice), to_json(fil.lattice), to_json(her.lattice),
                                 to_json(ideals.lattice), to_json(ord.lattice)});
  out["maps"] = Json{{"delta", to_json(five.delta)},
                     {"phi", to_json(five.phi)},
                     {"psi", to_json(five.psi)},
                     {"varsigma", to_json(five.varsigma)},
                     {"order_ideals", to_json(five.order_ideals.report)}};
  out["order_ideals_mutually_inverse"] = five.order_ideals.mutually_inverse;
  out["cardinalities"] = five.cardinalities;
  out["varsigma_is_phi_delta"] = five.varsigma_is_phi_delta;
  out["idempotent_square_commutes"] = five.idempotent_square_commutes;
  out["pass"] = five.pass();
  return out;
}

Json group_report(const MonoidTable* m, const SandpileGraph& g, bool snf, bool with_carrier) {
  Json out = envelope("group");
  std::optional<InvariantFactors> via_monoid;
  if (m) {
    const FiniteAbelianGroup gp = sandpile_group(*m);
    via_monoid = invariant_factors(*m, gp);
    Json mono = to_json(*via_monoid);
    mono["identity"] = format_element(*m, gp.identity);
    if (with_carrier) mono["carrier"] = labels_of(*m, gp.carrier);
    out["monoid"] = mono;
  }
  if (snf) {
    const IntegerMatrix lap = reduced_laplacian(g);
    const SmithNormalForm f = smith_normal_form(lap);
    Json js = to_json(f.nontrivial);
    Json rows = Json::array();
    for (std::size_t i = 0; i < lap.rows(); ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < lap.cols(); ++j) row.push_back(to_json(lap(i, j)));
      rows.push_back(row);
    }
    js["laplacian"] = rows;
    js["certified"] = f.certified;
    out["snf"] = js;
    if (via_monoid) out["agree"] = *via_monoid == f.nontrivial;
  }
  return out;
}

Json archimedean_report(const MonoidTable& m) {
  Json out = envelope("arch");
  Json classes = Json::array();
  for (const auto& cls : archimedean_classes(m)) {
    const FiniteAbelianGroup gp = grothendieck_of_class(m, cls);
    const InvariantFactors f = invariant_factors(m, gp);
    classes.push_back(Json{{"idempotent", format_element(m, cls.idempotent)},
                           {"hereditary", vertex_names(m.graph().graph(),
                                                       hereditary_of_idempotent(m, cls.idempotent))},
                           {"size", cls.members.size()},
                           {"members", labels_of(m, cls.members)},
                           {"group", labels_of(m, gp.carrier)},
                           {"group_factors", to_json(f)}});
  }
  out["classes"] = classes;
  out["e_max"] = format_element(m, m.e_max());
  out["direct_limit"] = direct_limit_check(m);
  return out;
}

Json structure_report(const SandpileGraph& g, const IdealChainReport& r) {
  const auto& gr = g.graph();
  Json out = envelope("structure");
  out["field"] = "k";
  out["t"] = r.t;
  Json chain = Json::array();
  for (const auto& h : r.chain) chain.push_back(vertex_names(gr, h));
  out["chain"] = chain;
  Json socle = to_json(r.socle, gr);
  if (!r.socle.infinite) socle["matrix_over_field_size"] = to_json(r.socle.count);
  out["socle"] = socle;
  Json layers = Json::array();
  for (const auto& l : r.layers) {
    Json comps = Json::array();
    for (const auto& c : l.components) {
      Json jc{{"vertices", vertex_names(gr, c.vertices)},
              {"kind", std::string(to_string(c.kind))},
              {"base", gr.vertex_name(c.base)},
              {"cycle", edge_names(gr, c.cycle)}};
      if (c.lambda_quotient) jc["lambda_quotient"] = to_json(*c.lambda_quotient, gr);
      if (c.lambda_ambient) jc["lambda_ambient"] = to_json(*c.lambda_ambient, gr);
      if (c.distinct_cycles)
        jc["distinct_cycles"] = Json::array(
            {edge_names(gr, c.distinct_cycles->first), edge_names(gr, c.distinct_cycles->second)});
      Json hh{{"finite", c.hedgehog.finite},
              {"listed", c.hedgehog.listed},
              {"truncated", c.hedgehog.truncated}};
      if (c.hedgehog.finite) hh["size"] = to_json(c.hedgehog.size);
      if (c.hedgehog.pis) hh["pis"] = *c.hedgehog.pis;
      jc["hedgehog"] = hh;
      comps.push_back(jc);
    }
    layers.push_back(Json{{"index", l.index}, {"added", vertex_names(gr, l.added)}, {"components", comps}});
  }
  out["layers"] = layers;
  out["well_formed"] = r.well_formed;
  out["final_layer_finite"] = r.final_layer_finite;
  return out;
}

Json two_idempotent_report(const TwoIdempotentReport& r) {
  Json out = envelope("two-idem");
  out["two_idempotents"] = r.two_idempotents;
  out["graph_condition"] = r.graph_condition;
  out["laurent_branch"] = r.laurent_branch;
  out["pis_branch"] = r.pis_branch;
  out["vertex_simple"] = r.vertex_simple;
  out["agree"] = r.agree();
  return out;
}

Json verify_report(const VerifyReport& r, bool with_timing) {
  Json out = envelope("verify");
  out["pass"] = r.pass();
  Json tally = Json::object();
  const auto counts = r.tally();
  for (Check c : kAllChecks) {
    const auto& [ok, bad] = counts[static_cast<std::size_t>(c)];
    tally[std::string(to_string(c))] = Json{{"pass", ok}, {"fail", bad}};
  }
  out["checks"] = tally;
  Json graphs = Json::array();
  for (const auto& g : r.graphs) {
    Json jg{{"index", g.index}, {"monoid_size", g.monoid_size}, {"pass", g.pass()}};
    Json checks = Json::object();
    for (const auto& c : g.checks) {
      Json jc{{"pass", c.pass}};
      if (!c.pass) jc["detail"] = c.detail;
      if (with_timing) jc["millis"] = c.millis;
      checks[std::string(to_string(c.check))] = jc;
    }
    jg["checks"] = checks;
    if (!g.pass()) jg["graph_file"] = g.graph_file;
    graphs.push_back(jg);
  }
  out["graphs"] = graphs;
  return out;
}

}  // namespace spl
