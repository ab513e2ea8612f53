#include "spl/lattice.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "spl/error.hpp"
#include "spl/group.hpp"
#include "spl/structure.hpp"

namespace spl {

FiniteLattice::FiniteLattice(std::string tag, std::vector<std::string> labels,
                             std::vector<std::vector<bool>> leq,
                             std::vector<std::vector<std::size_t>> join,
                             std::vector<std::vector<std::size_t>> meet)
    : tag_(std::move(tag)),
      labels_(std::move(labels)),
      leq_(std::move(leq)),
      join_(std::move(join)),
      meet_(std::move(meet)) {}

bool FiniteLattice::well_formed() const {
  const std::size_t n = size();
  for (std::size_t a = 0; a < n; ++a) {
    if (!leq_[a][a]) return false;
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && leq_[a][b] && leq_[b][a]) return false;
      for (std::size_t c = 0; c < n; ++c)
        if (leq_[a][b] && leq_[b][c] && !leq_[a][c]) return false;
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t j = join_[a][b], m = meet_[a][b];
      if (!leq_[a][j] || !leq_[b][j] || !leq_[m][a] || !leq_[m][b]) return false;
      for (std::size_t c = 0; c < n; ++c) {
        if (leq_[a][c] && leq_[b][c] && !leq_[j][c]) return false;
        if (leq_[c][a] && leq_[c][b] && !leq_[c][m]) return false;
      }
    }
  return true;
}

bool FiniteLattice::is_chain() const {
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = 0; b < size(); ++b)
      if (!leq_[a][b] && !leq_[b][a]) return false;
  return true;
}

LatticeIsoReport check_isomorphism(const FiniteLattice& source, const FiniteLattice& target,
                                   const std::vector<std::optional<std::size_t>>& forward) {
  LatticeIsoReport r;
  r.source_tag = source.tag();
  r.target_tag = target.tag();
  for (std::size_t i = 0; i < source.size(); ++i) r.source_labels.push_back(source.label(i));
  for (std::size_t i = 0; i < target.size(); ++i) r.target_labels.push_back(target.label(i));
  r.forward = forward;
  r.inverse.assign(target.size(), std::nullopt);

  bool bijective = forward.size() == source.size() && source.size() == target.size();
  for (std::size_t i = 0; i < forward.size() && bijective; ++i) {
    if (!forward[i] || *forward[i] >= target.size() || r.inverse[*forward[i]]) {
      bijective = false;
      break;
    }
    r.inverse[*forward[i]] = i;
  }
  r.bijective = bijective;
  if (!bijective) return r;

  r.order_both_ways = r.join_preserving = r.meet_preserving = true;
  for (std::size_t a = 0; a < source.size(); ++a)
    for (std::size_t b = 0; b < source.size(); ++b) {
      const std::size_t fa = *forward[a], fb = *forward[b];
      if (source.leq(a, b) != target.leq(fa, fb)) r.order_both_ways = false;
      if (*forward[source.join(a, b)] != target.join(fa, fb)) r.join_preserving = false;
      if (*forward[source.meet(a, b)] != target.meet(fa, fb)) r.meet_preserving = false;
    }
  return r;
}

std::string format_element(const MonoidTable& m, ElementId x) {
  std::string out;
  for (std::size_t j = 0; j < m.sites().size(); ++j) {
    const auto c = m.count_at(x, j);
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (c > 1) out += std::to_string(c);
    out += m.graph().graph().vertex_name(m.sites()[j]);
  }
  return out.empty() ? "0" : out;
}

std::string format_vertex_set(const DirectedMultigraph& g, const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  for (VertexId v : s.members()) {
    out += (first ? "" : ",") + g.vertex_name(v);
    first = false;
  }
  return out + "}";
}

std::string format_component_set(const DirectedMultigraph& g, const ComponentPoset& poset,
                                 const std::vector<std::size_t>& ids) {
  std::string out = "{";
  for (std::size_t i = 0; i < ids.size(); ++i)
    out += (i ? "," : "") + format_vertex_set(g, poset[ids[i]].vertices);
  return out + "}";
}

namespace {

template <class T, class Leq, class Join, class Meet>
FiniteLattice build_lattice(std::string tag, const std::vector<T>& elements,
                            std::vector<std::string> labels, Leq leq, Join join, Meet meet) {
  const std::size_t n = elements.size();
  auto find = [&](const T& x) {
    const auto it = std::find(elements.begin(), elements.end(), x);
    if (it == elements.end())
      throw Error(Errc::InvalidArgument, tag + ": lattice operation leaves the element set");
    return static_cast<std::size_t>(it - elements.begin());
  };
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n));
  std::vector<std::vector<std::size_t>> jn(n, std::vector<std::size_t>(n));
  std::vector<std::vector<std::size_t>> mt(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      le[a][b] = leq(elements[a], elements[b]);
      if (b < a) {
        jn[a][b] = jn[b][a];
        mt[a][b] = mt[b][a];
        continue;
      }
      jn[a][b] = find(join(elements[a], elements[b]));
      mt[a][b] = find(meet(elements[a], elements[b]));
    }
  return FiniteLattice(std::move(tag), std::move(labels), std::move(le), std::move(jn),
                       std::move(mt));
}

template <class T>
std::optional<std::size_t> index_in(const std::vector<T>& xs, const T& x) {
  const auto it = std::find(xs.begin(), xs.end(), x);
  if (it == xs.end()) return std::nullopt;
  return static_cast<std::size_t>(it - xs.begin());
}

std::vector<std::size_t> set_union(const std::vector<std::size_t>& a,
                                   const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<std::size_t> set_intersection(const std::vector<std::size_t>& a,
                                          const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<ElementId> element_intersection(const std::vector<ElementId>& a,
                                            const std::vector<ElementId>& b) {
  std::vector<ElementId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

ElementId sum_of(const MonoidTable& m, const std::vector<ElementId>& xs) {
  ElementId s = MonoidTable::zero();
  for (ElementId x : xs) s = m.add(s, x);
  return s;
}

std::string ideal_label(const MonoidTable& m, const OrderIdeal& ideal) {
  if (ideal.elements.size() > 8) return "<" + std::to_string(ideal.elements.size()) + " elements>";
  std::string out = "{";
  for (std::size_t i = 0; i < ideal.elements.size(); ++i)
    out += (i ? "," : "") + format_element(m, ideal.elements[i]);
  return out + "}";
}

}  // namespace

IdempotentLattice idempotent_lattice(const MonoidTable& m) {
  IdempotentLattice out;
  out.elements = m.idempotents();
  std::vector<std::string> labels;
  for (ElementId e : out.elements) labels.push_back(format_element(m, e));
  out.lattice = build_lattice(
      "Idem(SP(E))", out.elements, std::move(labels),
      [&](ElementId a, ElementId b) { return m.add(a, b) == b; },
      [&](ElementId a, ElementId b) { return m.add(a, b); },
      [&](ElementId a, ElementId b) { return m.idempotent_meet(a, b); });
  return out;
}

FilterLattice filter_lattice(const SandpileGraph& g) {
  FilterLattice out;
  out.poset = cyclic_components(g);
  out.elements = filters(out.poset);
  std::vector<std::string> labels;
  for (const Filter& f : out.elements)
    labels.push_back(format_component_set(g.graph(), out.poset, f.members));
  out.lattice = build_lattice(
      "F_E", out.elements, std::move(labels),
      [](const Filter& a, const Filter& b) { return a.is_subset_of(b); },
      [](const Filter& a, const Filter& b) { return Filter{set_union(a.members, b.members)}; },
      [](const Filter& a, const Filter& b) {
        return Filter{set_intersection(a.members, b.members)};
      });
  return out;
}

HereditaryLattice hereditary_lattice_from(const SandpileGraph& g, std::vector<VertexSet> elements,
                                          std::string tag) {
  HereditaryLattice out;
  out.elements = std::move(elements);
  std::vector<std::string> labels;
  for (const auto& h : out.elements) labels.push_back(format_vertex_set(g.graph(), h));
  out.lattice = build_lattice(
      std::move(tag), out.elements, std::move(labels),
      [](const VertexSet& a, const VertexSet& b) { return a.is_subset_of(b); },
      [&](const VertexSet& a, const VertexSet& b) {
        return saturated_hereditary_closure(g, a | b).members;
      },
      [](const VertexSet& a, const VertexSet& b) { return a & b; });
  return out;
}

HereditaryLattice hereditary_lattice(const SandpileGraph& g, EnumerationRoute route) {
  std::vector<VertexSet> elements;
  for (auto& h : enumerate_hereditary_saturated(g, route)) elements.push_back(h.members);
  return hereditary_lattice_from(g, std::move(elements), "H_E");
}

PrincipalIdealLattice principal_ideal_lattice(const SandpileGraph& g) {
  PrincipalIdealLattice out;
  out.closures = component_poset_ideals(g);
  std::vector<std::string> labels;
  for (const auto& ideal : out.closures.ideals) {
    std::string s = "{";
    for (std::size_t i = 0; i < ideal.size(); ++i)
      s += (i ? "," : "") + format_vertex_set(g.graph(), out.closures.members[ideal[i]]);
    labels.push_back(s + "}");
  }
  out.lattice = build_lattice(
      "Ideal(H^s_E)", out.closures.ideals, std::move(labels),
      [](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
        return std::includes(b.begin(), b.end(), a.begin(), a.end());
      },
      set_union, set_intersection);
  return out;
}

OrderIdealLattice order_ideal_lattice(const MonoidTable& m) {
  OrderIdealLattice out;
  auto add_ideal = [&](OrderIdeal ideal) {
    if (std::find(out.elements.begin(), out.elements.end(), ideal) != out.elements.end())
      return false;
    out.elements.push_back(std::move(ideal));
    return true;
  };
  // Joins via the ideal generated by I + J; since both are submonoids and
  // downward closed, that is the ideal generated by the sum of all members.
  auto join = [&](const OrderIdeal& a, const OrderIdeal& b) {
    return order_ideal_generated(m, {sum_of(m, a.elements), sum_of(m, b.elements)});
  };

  // The principal ideal of x is everything below the top of the submonoid
  // generated by x; tops in one Cayley component give the same ideal.
  std::vector<OrderIdeal> principal;
  std::vector<bool> seen_component(m.size(), false);
  for (ElementId x = 0; x < m.size(); ++x) {
    const ElementId top = submonoid_top(m, {x});
    if (seen_component[m.cayley_component(top)]) continue;
    seen_component[m.cayley_component(top)] = true;
    OrderIdeal p = order_ideal_generated(m, {top});
    if (std::find(principal.begin(), principal.end(), p) == principal.end())
      principal.push_back(std::move(p));
  }
  for (const auto& p : principal) add_ideal(p);
  for (std::size_t i = 0; i < out.elements.size(); ++i)
    for (const auto& p : principal) add_ideal(join(out.elements[i], p));

  std::sort(out.elements.begin(), out.elements.end(), [](const OrderIdeal& a, const OrderIdeal& b) {
    if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
    return a.elements < b.elements;
  });
  std::vector<std::string> labels;
  for (const auto& ideal : out.elements) labels.push_back(ideal_label(m, ideal));
  out.lattice = build_lattice(
      "L(SP(E))", out.elements, std::move(labels),
      [](const OrderIdeal& a, const OrderIdeal& b) {
        return std::includes(b.elements.begin(), b.elements.end(), a.elements.begin(),
                             a.elements.end());
      },
      join,
      [&](const OrderIdeal& a, const OrderIdeal& b) {
        const auto common = element_intersection(a.elements, b.elements);
        return OrderIdeal{common, VertexSet()};
      });
  return out;
}

LatticeIsoReport delta_map(const MonoidTable& m, const IdempotentLattice& idem,
                           const FilterLattice& fil) {
  const SandpileGraph& g = m.graph();
  std::vector<std::optional<std::size_t>> forward;
  for (ElementId x : idem.elements) {
    Filter f;
    if (x != MonoidTable::zero()) {
      const Restriction r = restriction(g, hereditary_of_idempotent(m, x));
      const ComponentPoset local = cyclic_components(r.graph);
      for (const auto& c : local.components()) {
        const VertexId parent = r.into_parent.vertex_to_parent[c.vertices.members().front()];
        if (auto id = fil.poset.component_of(parent)) f.members.push_back(*id);
      }
      std::sort(f.members.begin(), f.members.end());
    }
    forward.push_back(index_in(fil.elements, f));
  }
  return check_isomorphism(idem.lattice, fil.lattice, forward);
}

LatticeIsoReport phi_map(const SandpileGraph& g, const FilterLattice& fil,
                         const HereditaryLattice& her) {
  const VertexSet shadow = sink_shadow(g).members;
  std::vector<std::optional<std::size_t>> forward;
  for (const Filter& f : fil.elements) {
    if (f.members.empty()) {
      forward.push_back(index_in(her.elements, shadow));
      continue;
    }
    VertexSet u(g.vertex_count());
    for (std::size_t c : f.members) u = u | fil.poset[c].vertices;
    forward.push_back(index_in(her.elements, saturated_hereditary_closure(g, u).members));
  }
  return check_isomorphism(fil.lattice, her.lattice, forward);
}

LatticeIsoReport psi_map(const FilterLattice& fil, const PrincipalIdealLattice& ideals) {
  std::vector<std::optional<std::size_t>> forward;
  for (const Filter& f : fil.elements) {
    std::vector<std::size_t> image{0};
    for (std::size_t c : f.members) image.push_back(1 + c);
    std::sort(image.begin(), image.end());
    forward.push_back(index_in(ideals.closures.ideals, image));
  }
  return check_isomorphism(fil.lattice, ideals.lattice, forward);
}

LatticeIsoReport varsigma_map(const MonoidTable& m, const IdempotentLattice& idem,
                              const HereditaryLattice& her) {
  std::vector<std::optional<std::size_t>> forward;
  for (ElementId x : idem.elements)
    forward.push_back(index_in(her.elements, hereditary_of_idempotent(m, x)));
  return check_isomorphism(idem.lattice, her.lattice, forward);
}

OrderIdealCorrespondence order_ideal_correspondence(const MonoidTable& m,
                                                    const HereditaryLattice& her,
                                                    const OrderIdealLattice& ord) {
  OrderIdealCorrespondence out;
  std::vector<std::optional<std::size_t>> forward;
  for (const VertexSet& h : her.elements) {
    const OrderIdeal image{supported_on(m, h), h};
    forward.push_back(index_in(ord.elements, image));
  }
  out.report = check_isomorphism(her.lattice, ord.lattice, forward);

  bool inverse = out.report.bijective;
  for (std::size_t i = 0; i < her.elements.size() && inverse; ++i)
    inverse = ord.elements[*forward[i]].generating_set == her.elements[i];
  for (const OrderIdeal& ideal : ord.elements) {
    if (!inverse) break;
    inverse = supported_on(m, ideal.generating_set) == ideal.elements;
  }
  out.mutually_inverse = inverse;
  return out;
}

LatticeIsoReport delta_map(const MonoidTable& m) {
  return delta_map(m, idempotent_lattice(m), filter_lattice(m.graph()));
}
LatticeIsoReport phi_map(const SandpileGraph& g) {
  return phi_map(g, filter_lattice(g), hereditary_lattice(g));
}
LatticeIsoReport psi_map(const SandpileGraph& g) {
  return psi_map(filter_lattice(g), principal_ideal_lattice(g));
}
LatticeIsoReport varsigma_map(const MonoidTable& m) {
  return varsigma_map(m, idempotent_lattice(m), hereditary_lattice(m.graph()));
}
OrderIdealCorrespondence order_ideal_correspondence(const MonoidTable& m) {
  return order_ideal_correspondence(m, hereditary_lattice(m.graph()), order_ideal_lattice(m));
}

bool FiveWayReport::pass() const {
  bool same_size = !cardinalities.empty();
  for (std::size_t c : cardinalities) same_size = same_size && c == cardinalities.front();
  return delta.pass() && phi.pass() && psi.pass() && varsigma.pass() && order_ideals.report.pass() &&
         order_ideals.mutually_inverse && same_size && varsigma_is_phi_delta &&
         idempotent_square_commutes;
}

FiveWayReport verify_five_way(const MonoidTable& m) {
  const SandpileGraph& g = m.graph();
  const IdempotentLattice idem = idempotent_lattice(m);
  const FilterLattice fil = filter_lattice(g);
  const HereditaryLattice her = hereditary_lattice(g);
  const PrincipalIdealLattice ideals = principal_ideal_lattice(g);
  const OrderIdealLattice ord = order_ideal_lattice(m);

  FiveWayReport r;
  r.delta = delta_map(m, idem, fil);
  r.phi = phi_map(g, fil, her);
  r.psi = psi_map(fil, ideals);
  r.varsigma = varsigma_map(m, idem, her);
  r.order_ideals = order_ideal_correspondence(m, her, ord);
  r.cardinalities = {idem.lattice.size(), fil.lattice.size(), her.lattice.size(),
                     ideals.lattice.size(), ord.lattice.size()};

  r.varsigma_is_phi_delta = r.delta.bijective && r.phi.bijective;
  for (std::size_t i = 0; i < idem.elements.size() && r.varsigma_is_phi_delta; ++i)
    r.varsigma_is_phi_delta = r.varsigma.forward[i] == r.phi.forward[*r.delta.forward[i]];

  r.idempotent_square_commutes = true;
  for (ElementId x : idem.elements) {
    const auto generated = order_ideal_generated(m, {x}).elements;
    if (generated != supported_on(m, hereditary_of_idempotent(m, x)))
      r.idempotent_square_commutes = false;
  }
  return r;
}

namespace {

struct ElementSignature {
  bool idempotent;
  std::size_t below, above, index, period;
  friend bool operator==(const ElementSignature&, const ElementSignature&) = default;
};

std::vector<ElementSignature> signatures(const MonoidTable& m) {
  std::vector<ElementSignature> out;
  for (ElementId x = 0; x < m.size(); ++x) {
    ElementSignature s{};
    s.idempotent = m.is_idempotent(x);
    const auto b = m.below(x), a = m.reach_from(x);
    s.below = static_cast<std::size_t>(std::count(b.begin(), b.end(), true));
    s.above = static_cast<std::size_t>(std::count(a.begin(), a.end(), true));
    // Index and period of the cyclic semigroup generated by x.
    std::map<ElementId, std::size_t> first_seen;
    ElementId cur = x;
    for (std::size_t k = 1;; ++k) {
      auto [it, fresh] = first_seen.emplace(cur, k);
      if (!fresh) {
        s.index = it->second;
        s.period = k - it->second;
        break;
      }
      cur = m.add(cur, x);
    }
    out.push_back(s);
  }
  return out;
}

}  // namespace

std::optional<std::vector<ElementId>> find_monoid_isomorphism(const MonoidTable& e,
                                                              const MonoidTable& f,
                                                              std::size_t node_cap) {
  constexpr std::size_t kSizeCap = 64;
  if (e.size() > kSizeCap || f.size() > kSizeCap)
    throw Error(Errc::SearchCapExceeded, "isomorphism search is limited to monoids of size " +
                                             std::to_string(kSizeCap));
  if (e.size() != f.size() || e.idempotents().size() != f.idempotents().size()) return std::nullopt;

  const auto sig_e = signatures(e), sig_f = signatures(f);
  {
    auto key = [](const ElementSignature& s) {
      return std::make_tuple(s.idempotent, s.below, s.above, s.index, s.period);
    };
    std::vector<std::tuple<bool, std::size_t, std::size_t, std::size_t, std::size_t>> ke, kf;
    for (const auto& s : sig_e) ke.push_back(key(s));
    for (const auto& s : sig_f) kf.push_back(key(s));
    std::sort(ke.begin(), ke.end());
    std::sort(kf.begin(), kf.end());
    if (ke != kf) return std::nullopt;
  }

  const std::size_t k = e.sites().size();
  constexpr ElementId kUnset = static_cast<ElementId>(-1);
  std::vector<ElementId> image(k, kUnset);
  std::size_t nodes = 0;

  // Extends the map over the submonoid generated by the first t generators;
  // empty on a clash or a collision.
  auto extend = [&](std::size_t t) -> std::optional<std::vector<ElementId>> {
    std::vector<ElementId> map(e.size(), kUnset);
    std::vector<bool> used(f.size(), false);
    map[MonoidTable::zero()] = MonoidTable::zero();
    used[MonoidTable::zero()] = true;
    std::vector<ElementId> queue{MonoidTable::zero()};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const ElementId x = queue[qi];
      for (std::size_t j = 0; j < t; ++j) {
        const ElementId y = e.add_generator(x, j);
        const ElementId val = f.add(map[x], image[j]);
        if (map[y] != kUnset) {
          if (map[y] != val) return std::nullopt;
          continue;
        }
        if (used[val]) return std::nullopt;
        map[y] = val;
        used[val] = true;
        queue.push_back(y);
      }
    }
    return map;
  };

  std::function<std::optional<std::vector<ElementId>>(std::size_t)> search =
      [&](std::size_t t) -> std::optional<std::vector<ElementId>> {
    if (++nodes > node_cap)
      throw Error(Errc::SearchCapExceeded, "isomorphism search exceeded " +
                                               std::to_string(node_cap) + " nodes");
    auto map = extend(t);
    if (!map) return std::nullopt;
    if (t == k) return map;
    const ElementId gen = e.add_generator(MonoidTable::zero(), t);
    for (ElementId y = 0; y < f.size(); ++y) {
      if (!(sig_f[y] == sig_e[gen])) continue;
      image[t] = y;
      if (auto found = search(t + 1)) return found;
    }
    image[t] = kUnset;
    return std::nullopt;
  };
  auto map = search(0);
  if (!map) return std::nullopt;
  // Every element of SP(E) is a sum of generators, so the map is total.
  for (ElementId v : *map)
    if (v == kUnset) return std::nullopt;
  return map;
}

std::optional<bool> monoid_iso_transport(const MonoidTable& e, const MonoidTable& f,
                                         std::size_t node_cap) {
  const auto iso = find_monoid_isomorphism(e, f, node_cap);
  if (!iso) return std::nullopt;

  const OrderIdealLattice ord_e = order_ideal_lattice(e), ord_f = order_ideal_lattice(f);
  const HereditaryLattice her_e = hereditary_lattice(e.graph());
  const HereditaryLattice her_f = hereditary_lattice(f.graph());
  const auto corr_e = order_ideal_correspondence(e, her_e, ord_e);
  const auto corr_f = order_ideal_correspondence(f, her_f, ord_f);
  if (!corr_e.report.pass() || !corr_f.report.pass()) return false;

  // H_E -> L(SP(E)) -> L(SP(F)) -> H_F.
  std::vector<std::optional<std::size_t>> forward;
  for (std::size_t i = 0; i < her_e.elements.size(); ++i) {
    const OrderIdeal& src = ord_e.elements[*corr_e.report.forward[i]];
    std::vector<ElementId> moved;
    for (ElementId x : src.elements) moved.push_back((*iso)[x]);
    std::sort(moved.begin(), moved.end());
    const auto it = std::find_if(ord_f.elements.begin(), ord_f.elements.end(),
                                 [&](const OrderIdeal& o) { return o.elements == moved; });
    if (it == ord_f.elements.end()) {
      forward.push_back(std::nullopt);
      continue;
    }
    forward.push_back(corr_f.report.inverse[static_cast<std::size_t>(it - ord_f.elements.begin())]);
  }
  return check_isomorphism(her_e.lattice, her_f.lattice, forward).pass();
}

bool ChainEquivalences::agree() const {
  return idempotents == filters && filters == components && components == hereditary &&
         hereditary == graded_ideals && graded_ideals == vertex_ideals;
}

ChainEquivalences chain_equivalences(const MonoidTable& m) {
  const SandpileGraph& g = m.graph();
  ChainEquivalences c;
  c.idempotents = idempotent_lattice(m).lattice.is_chain();
  const FilterLattice fil = filter_lattice(g);
  c.filters = fil.lattice.is_chain();
  c.components = fil.poset.is_chain();
  const bool small = g.vertex_count() <= kDefaultSubsetCap;
  c.hereditary =
      hereditary_lattice(g, small ? EnumerationRoute::BruteForce : EnumerationRoute::Filters)
          .lattice.is_chain();
  c.graded_ideals = hereditary_lattice(g, EnumerationRoute::Filters).lattice.is_chain();
  c.vertex_ideals = vertex_ideal_lattice(m, BalancedWeighting::of(g.graph())).lattice.lattice.is_chain();
  return c;
}

}  // namespace spl
