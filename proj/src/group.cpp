#include "spl/group.hpp"

#include <algorithm>
#include <map>

#include "spl/error.hpp"
#include "spl/hereditary.hpp"

namespace spl {

bool FiniteAbelianGroup::contains(ElementId x) const {
  return std::binary_search(carrier.begin(), carrier.end(), x);
}

namespace {

std::vector<bool> mask_of(const MonoidTable& m, const std::vector<ElementId>& xs) {
  std::vector<bool> in(m.size(), false);
  for (ElementId x : xs) in[x] = true;
  return in;
}

std::vector<ElementId> sorted_unique(std::vector<ElementId> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

std::vector<ElementId> class_of(const MonoidTable& m, ElementId idempotent) {
  std::vector<ElementId> out;
  for (ElementId x = 0; x < m.size(); ++x)
    if (m.idempotent_power(x) == idempotent) out.push_back(x);
  return out;
}

void require_same(const std::vector<ElementId>& a, const std::vector<ElementId>& b,
                  const char* what) {
  if (a != b) throw Error(Errc::InvalidArgument, std::string(what) + ": routes disagree");
}

}  // namespace

FiniteAbelianGroup make_group(const MonoidTable& m, std::vector<ElementId> carrier,
                              ElementId identity) {
  carrier = sorted_unique(std::move(carrier));
  const auto in = mask_of(m, carrier);
  if (carrier.empty() || !in[identity]) throw Error(Errc::NotAGroup, "identity not in carrier");
  for (ElementId x : carrier) {
    if (m.add(identity, x) != x) throw Error(Errc::NotAGroup, "identity law fails");
    bool has_inverse = false;
    for (ElementId y : carrier) {
      const ElementId s = m.add(x, y);
      if (!in[s]) throw Error(Errc::NotAGroup, "carrier not closed");
      has_inverse = has_inverse || s == identity;
    }
    if (!has_inverse) throw Error(Errc::NotAGroup, "element without inverse");
  }
  if (carrier.size() <= 64) {
    for (ElementId x : carrier)
      for (ElementId y : carrier)
        for (ElementId z : carrier)
          if (m.add(m.add(x, y), z) != m.add(x, m.add(y, z)))
            throw Error(Errc::NotAGroup, "associativity fails");
  }
  return FiniteAbelianGroup{std::move(carrier), identity};
}

FiniteAbelianGroup grothendieck_of_class(const MonoidTable& m, const ArchimedeanClass& cls) {
  std::vector<ElementId> carrier;
  for (ElementId y : cls.members) carrier.push_back(m.add(cls.idempotent, y));
  return make_group(m, std::move(carrier), cls.idempotent);
}

FiniteAbelianGroup sandpile_group(const MonoidTable& m, std::size_t intersection_limit) {
  const ElementId top = m.e_max();
  FiniteAbelianGroup g = grothendieck_of_class(m, {top, class_of(m, top)});
  require_same(g.carrier, m.recurrent_elements(), "sandpile group vs recurrent elements");
  require_same(g.carrier, m.recurrent_via_emax(), "sandpile group vs e_max + SP(E)");
  if (m.size() <= intersection_limit) {
    std::vector<bool> all(m.size(), true);
    for (ElementId x = 0; x < m.size(); ++x) {
      const auto r = m.reach_from(x);
      for (ElementId y = 0; y < m.size(); ++y) all[y] = all[y] && r[y];
    }
    std::vector<ElementId> meet;
    for (ElementId y = 0; y < m.size(); ++y)
      if (all[y]) meet.push_back(y);
    require_same(g.carrier, meet, "sandpile group vs intersection of translates");
  }
  return g;
}

std::vector<FiniteAbelianGroup> maximal_subgroups(const MonoidTable& m) {
  std::vector<FiniteAbelianGroup> out;
  for (const auto& cls : archimedean_classes(m)) {
    FiniteAbelianGroup g = grothendieck_of_class(m, cls);
    require_same(g.carrier, m.maximal_subgroup(cls.idempotent), "maximal subgroup");
    out.push_back(std::move(g));
  }
  return out;
}

VertexSet hereditary_of_idempotent(const MonoidTable& m, ElementId x) {
  if (x == MonoidTable::zero()) return sink_shadow(m.graph()).members;
  VertexSet support(m.graph().vertex_count());
  for (std::size_t j = 0; j < m.sites().size(); ++j)
    if (m.count_at(x, j) != 0) support.insert(m.sites()[j]);
  return saturated_hereditary_closure(m.graph(), support).members;
}

ElementId idempotent_for(const MonoidTable& m, const VertexSet& h) {
  for (ElementId e : m.idempotents())
    if (hereditary_of_idempotent(m, e) == h) return e;
  throw Error(Errc::InvalidArgument, "no idempotent matches the hereditary set");
}

FiniteAbelianGroup restricted_group(const MonoidTable& m, const VertexSet& h) {
  const Restriction r = restriction(m.graph(), h);
  const MonoidTable mh = MonoidTable::enumerate(r.graph);
  const FiniteAbelianGroup local = sandpile_group(mh);

  auto lift = [&](ElementId x) {
    const Configuration c = mh.element(x).config();
    Configuration up(m.graph().vertex_count());
    for (VertexId v = 0; v < c.vertex_count(); ++v) up.set(r.into_parent.vertex_to_parent[v], c[v]);
    return m.index_of(StableConfiguration::check(m.graph(), std::move(up)));
  };
  std::vector<ElementId> carrier;
  for (ElementId x : local.carrier) carrier.push_back(lift(x));
  FiniteAbelianGroup g = make_group(m, std::move(carrier), lift(local.identity));

  const ElementId e = idempotent_for(m, h);
  const FiniteAbelianGroup via_class = grothendieck_of_class(m, {e, class_of(m, e)});
  require_same(g.carrier, via_class.carrier, "restricted group vs x + [x]");
  if (g.identity != e) throw Error(Errc::InvalidArgument, "restricted group identity mismatch");
  return g;
}

bool direct_limit_check(const MonoidTable& m) {
  const auto classes = archimedean_classes(m);
  std::map<ElementId, const ArchimedeanClass*> by_idem;
  for (const auto& c : classes) by_idem[c.idempotent] = &c;
  const auto& idem = m.idempotents();
  auto below = [&](ElementId e, ElementId f) { return m.add(e, f) == f; };

  for (ElementId e : idem)
    for (ElementId f : idem) {
      if (!below(e, f)) continue;
      const auto& src = by_idem.at(e)->members;
      for (ElementId y : src)
        if (m.idempotent_power(m.add(f, y)) != f) return false;  // lands in [f]
      for (ElementId y1 : src)
        for (ElementId y2 : src)
          if (m.add(f, m.add(y1, y2)) != m.add(m.add(f, y1), m.add(f, y2))) return false;
      for (ElementId g : idem) {
        if (!below(f, g)) continue;
        for (ElementId y : src)
          if (m.add(g, m.add(f, y)) != m.add(g, y)) return false;
      }
    }

  // Top class group onto G(E).
  const ElementId top = m.e_max();
  for (ElementId e : idem)
    if (!below(e, top)) return false;
  const FiniteAbelianGroup top_group = grothendieck_of_class(m, *by_idem.at(top));
  const auto recurrent = m.recurrent_elements();
  if (top_group.carrier != recurrent) return false;
  for (ElementId r : recurrent)
    if (m.add(top, r) != r) return false;
  return true;
}

InvariantFactors invariant_factors(const MonoidTable& m, const FiniteAbelianGroup& gp) {
  const std::uint64_t n = gp.order();
  if (n == 0) throw Error(Errc::NotAGroup, "empty carrier");
  std::vector<std::pair<std::uint64_t, unsigned>> primes;
  std::uint64_t rest = n;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    unsigned a = 0;
    while (rest % p == 0) {
      rest /= p;
      ++a;
    }
    if (a) primes.push_back({p, a});
  }
  if (rest > 1) primes.push_back({rest, 1});

  // Per prime, the partition lambda of the p-primary part.
  std::vector<std::vector<unsigned>> lambdas;
  std::size_t rank = 0;
  for (auto [p, a] : primes) {
    std::vector<unsigned> r;  // r[k-1] = number of cyclic factors of order >= p^k
    std::uint64_t prev = 1, pk = 1;
    for (unsigned k = 1; k <= a; ++k) {
      pk *= p;
      std::uint64_t killed = 0;
      for (ElementId x : gp.carrier)
        if (m.multiple(x, pk) == gp.identity) ++killed;
      if (killed % prev != 0) throw Error(Errc::NotAGroup, "p-torsion counts do not nest");
      std::uint64_t ratio = killed / prev;
      unsigned e = 0;
      while (ratio > 1 && ratio % p == 0) {
        ratio /= p;
        ++e;
      }
      if (ratio != 1) throw Error(Errc::NotAGroup, "p-torsion count is not a power of p");
      if (!r.empty() && e > r.back()) throw Error(Errc::NotAGroup, "p-torsion ranks increase");
      r.push_back(e);
      prev = killed;
    }
    if (prev != pk)
      throw Error(Errc::NotAGroup, "Sylow subgroup has the wrong order");
    std::vector<unsigned> lambda(r.empty() ? 0 : r.front(), 0);
    for (unsigned i = 0; i < lambda.size(); ++i)
      for (unsigned rk : r)
        if (rk > i) ++lambda[i];
    rank = std::max(rank, lambda.size());
    lambdas.push_back(std::move(lambda));
  }

  InvariantFactors out;
  out.factors.assign(rank, 1);
  for (std::size_t pi = 0; pi < primes.size(); ++pi) {
    const auto& lambda = lambdas[pi];  // descending exponents
    for (std::size_t i = 0; i < lambda.size(); ++i)
      for (unsigned t = 0; t < lambda[i]; ++t) out.factors[rank - 1 - i] *= primes[pi].first;
  }
  out.order = n;
  return out;
}

}  // namespace spl
