#include "spl/monoid.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>

#include "spl/error.hpp"
#include "spl/hereditary.hpp"

namespace spl {

MonoidTable MonoidTable::enumerate(const SandpileGraph& g, std::uint64_t cap) {
  MonoidTable m;
  m.graph_ = std::make_shared<const SandpileGraph>(g);
  const auto& sites = g.sites();
  const std::size_t k = sites.size();

  std::uint64_t product = 1;
  bool over = false;
  for (VertexId v : sites) {
    const std::uint64_t d = g.out_degree(v);
    if (product > std::numeric_limits<std::uint64_t>::max() / d) {
      over = true;
      break;
    }
    product *= d;
  }
  const std::uint64_t hard_limit = std::numeric_limits<ElementId>::max();
  if (over || product > cap || product > hard_limit)
    throw Error(Errc::CapExceeded,
                "SP(E) has " + (over ? std::string("more than 2^64") : std::to_string(product)) +
                    " elements, cap is " + std::to_string(std::min(cap, hard_limit)));
  m.size_ = static_cast<std::size_t>(product);

  m.radix_.resize(k);
  m.weight_.resize(k);
  std::uint64_t w = 1;
  for (std::size_t j = k; j-- > 0;) {
    m.radix_[j] = g.out_degree(sites[j]);
    m.weight_[j] = w;
    w *= m.radix_[j];
  }

  m.succ_.resize(m.size_ * k);
  Configuration c(g.vertex_count());
  for (std::size_t x = 0; x < m.size_; ++x) {
    for (std::size_t j = 0; j < k; ++j) c.set(sites[j], (x / m.weight_[j]) % m.radix_[j]);
    for (std::size_t j = 0; j < k; ++j) {
      if (c[sites[j]] + 1 < m.radix_[j]) {
        m.succ_[x * k + j] = static_cast<ElementId>(x + m.weight_[j]);
        continue;
      }
      Configuration d = c;
      d.add_chips(sites[j], 1);
      m.succ_[x * k + j] = m.index_of(stabilize(g, std::move(d)));
    }
  }

  m.build_predecessors();
  m.build_cayley_components();
  for (ElementId x = 0; x < m.size_; ++x)
    if (m.is_idempotent(x)) m.idempotents_.push_back(x);
  m.e_max_ = zero();
  for (ElementId e : m.idempotents_) m.e_max_ = m.add(m.e_max_, e);
  m.build_idempotent_powers();
  return m;
}

StableConfiguration MonoidTable::element(ElementId x) const {
  if (x >= size_) throw Error(Errc::InvalidArgument, "element id out of range");
  Configuration c(graph_->vertex_count());
  for (std::size_t j = 0; j < sites().size(); ++j) c.set(sites()[j], count_at(x, j));
  return StableConfiguration::check(*graph_, std::move(c));
}

std::uint64_t MonoidTable::count_at(ElementId x, std::size_t site_pos) const {
  return (x / weight_[site_pos]) % radix_[site_pos];
}

ElementId MonoidTable::index_of(const StableConfiguration& c) const {
  if (c.config().vertex_count() != graph_->vertex_count())
    throw Error(Errc::GraphMismatch, "configuration from another graph");
  std::uint64_t x = 0;
  for (std::size_t j = 0; j < sites().size(); ++j) x += c[sites()[j]] * weight_[j];
  return static_cast<ElementId>(x);
}

ElementId MonoidTable::index_of(const Configuration& c) const {
  return index_of(stabilize(*graph_, c));
}

ElementId MonoidTable::generator(VertexId v) const {
  if (v >= graph_->vertex_count()) throw Error(Errc::UnknownVertex, "generator vertex");
  if (v == graph_->sink()) return zero();
  const auto it = std::find(sites().begin(), sites().end(), v);
  return add_generator(zero(), static_cast<std::size_t>(it - sites().begin()));
}

ElementId MonoidTable::add(ElementId x, ElementId y) const {
  ElementId r = x;
  for (std::size_t j = 0; j < sites().size(); ++j)
    for (std::uint64_t t = count_at(y, j); t > 0; --t) r = add_generator(r, j);
  return r;
}

ElementId MonoidTable::multiple(ElementId x, std::uint64_t k) const {
  ElementId result = zero();
  ElementId base = x;
  while (k > 0) {
    if (k & 1) result = add(result, base);
    k >>= 1;
    if (k > 0) base = add(base, base);
  }
  return result;
}

std::vector<bool> MonoidTable::reach_from(ElementId x) const {
  std::vector<bool> seen(size_, false);
  std::vector<ElementId> stack{x};
  seen[x] = true;
  const std::size_t k = sites().size();
  while (!stack.empty()) {
    const ElementId y = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < k; ++j) {
      const ElementId z = add_generator(y, j);
      if (!seen[z]) {
        seen[z] = true;
        stack.push_back(z);
      }
    }
  }
  return seen;
}

void MonoidTable::build_predecessors() {
  // Reverse Cayley edges in compressed rows.
  const std::size_t k = sites().size();
  pred_offset_.assign(size_ + 1, 0);
  for (std::size_t i = 0; i < succ_.size(); ++i) ++pred_offset_[succ_[i] + 1];
  for (std::size_t x = 0; x < size_; ++x) pred_offset_[x + 1] += pred_offset_[x];
  pred_.resize(succ_.size());
  std::vector<std::size_t> fill(pred_offset_.begin(), pred_offset_.end() - 1);
  for (ElementId x = 0; x < size_; ++x)
    for (std::size_t j = 0; j < k; ++j) pred_[fill[add_generator(x, j)]++] = x;
}

std::vector<bool> MonoidTable::below(ElementId y) const {
  std::vector<bool> seen(size_, false);
  std::vector<ElementId> stack{y};
  seen[y] = true;
  while (!stack.empty()) {
    const ElementId z = stack.back();
    stack.pop_back();
    for (std::size_t i = pred_offset_[z]; i < pred_offset_[z + 1]; ++i)
      if (const ElementId p = pred_[i]; !seen[p]) {
        seen[p] = true;
        stack.push_back(p);
      }
  }
  return seen;
}

bool MonoidTable::leq(ElementId x, ElementId y) const {
  if (x == y) return true;
  if (scc_[x] == scc_[y]) return true;
  return reach_from(x)[y];
}

ElementId MonoidTable::idempotent_meet(ElementId a, ElementId b) const {
  const auto below_a = below(a);
  const auto below_b = below(b);
  ElementId r = zero();
  for (ElementId e : idempotents_)
    if (below_a[e] && below_b[e]) r = add(r, e);
  return r;
}

void MonoidTable::build_cayley_components() {
  // Iterative Tarjan over the Cayley graph.
  constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
  const std::size_t k = sites().size();
  std::vector<std::uint32_t> index(size_, kUnset), low(size_, 0);
  std::vector<bool> on_stack(size_, false);
  std::vector<ElementId> tarjan_stack;
  scc_.assign(size_, kUnset);
  std::uint32_t next_index = 0, next_component = 0;
  struct Frame {
    ElementId v;
    std::size_t child;
  };
  std::vector<Frame> call;
  for (ElementId root = 0; root < size_; ++root) {
    if (index[root] != kUnset) continue;
    call.push_back({root, 0});
    index[root] = low[root] = next_index++;
    tarjan_stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.child < k) {
        const ElementId w = add_generator(f.v, f.child++);
        if (index[w] == kUnset) {
          index[w] = low[w] = next_index++;
          tarjan_stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const ElementId v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        ElementId w;
        do {
          w = tarjan_stack.back();
          tarjan_stack.pop_back();
          on_stack[w] = false;
          scc_[w] = next_component;
        } while (w != v);
        ++next_component;
      }
    }
  }
}

void MonoidTable::build_idempotent_powers() {
  // x and kx share an archimedean class, so the first idempotent or already
  // resolved element met along x, 2x, 3x, ... settles every element passed.
  constexpr ElementId kUnset = std::numeric_limits<ElementId>::max();
  idempotent_power_.assign(size_, kUnset);
  std::vector<ElementId> walk;
  for (ElementId x = 0; x < size_; ++x) {
    if (idempotent_power_[x] != kUnset) continue;
    walk.clear();
    ElementId cur = x;
    ElementId e = kUnset;
    for (std::size_t steps = 0; steps <= size_; ++steps) {
      if (idempotent_power_[cur] != kUnset) {
        e = idempotent_power_[cur];
        break;
      }
      walk.push_back(cur);
      if (is_idempotent(cur)) {
        e = cur;
        break;
      }
      cur = add(cur, x);
    }
    if (e == kUnset) throw Error(Errc::InvalidArgument, "no idempotent among the multiples");
    for (ElementId y : walk) idempotent_power_[y] = e;
  }
}

std::vector<ElementId> MonoidTable::recurrent_elements() const {
  const std::size_t k = sites().size();
  const std::uint32_t components =
      size_ == 0 ? 0 : *std::max_element(scc_.begin(), scc_.end()) + 1;
  std::vector<bool> has_exit(components, false);
  for (ElementId x = 0; x < size_; ++x)
    for (std::size_t j = 0; j < k; ++j)
      if (scc_[add_generator(x, j)] != scc_[x]) has_exit[scc_[x]] = true;
  std::vector<std::uint32_t> terminal;
  for (std::uint32_t c = 0; c < components; ++c)
    if (!has_exit[c]) terminal.push_back(c);
  if (terminal.size() != 1)
    throw Error(Errc::InvalidArgument, "Cayley graph has " + std::to_string(terminal.size()) +
                                           " terminal components");
  std::vector<ElementId> out;
  for (ElementId x = 0; x < size_; ++x)
    if (scc_[x] == terminal.front()) out.push_back(x);
  return out;
}

std::vector<ElementId> MonoidTable::recurrent_via_emax() const {
  const auto mask = reach_from(e_max_);
  std::vector<ElementId> out;
  for (ElementId x = 0; x < size_; ++x)
    if (mask[x]) out.push_back(x);
  return out;
}

std::vector<ElementId> MonoidTable::maximal_subgroup(ElementId e) const {
  if (!is_idempotent(e)) throw Error(Errc::InvalidArgument, "maximal subgroup at a non-idempotent");
  std::vector<ElementId> out;
  for (ElementId x = 0; x < size_; ++x)
    if (scc_[x] == scc_[e]) out.push_back(x);
  return out;
}

bool OrderIdeal::contains(ElementId x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

namespace {

VertexSet generator_support(const MonoidTable& m, const std::vector<bool>& in) {
  const SandpileGraph& g = m.graph();
  VertexSet h(g.vertex_count(), {g.sink()});
  for (std::size_t j = 0; j < m.sites().size(); ++j)
    if (in[m.add_generator(MonoidTable::zero(), j)]) h.insert(m.sites()[j]);
  return h;
}

}  // namespace

ElementId submonoid_top(const MonoidTable& m, const std::vector<ElementId>& x) {
  // Submonoid generated by X.
  std::vector<bool> sums(m.size(), false);
  std::vector<ElementId> stack{MonoidTable::zero()};
  sums[MonoidTable::zero()] = true;
  while (!stack.empty()) {
    const ElementId s = stack.back();
    stack.pop_back();
    for (ElementId g : x) {
      const ElementId t = m.add(s, g);
      if (!sums[t]) {
        sums[t] = true;
        stack.push_back(t);
      }
    }
  }
  ElementId total = MonoidTable::zero();
  for (ElementId s = 0; s < m.size(); ++s)
    if (sums[s]) total = m.add(total, s);
  return total;
}

OrderIdeal order_ideal_generated(const MonoidTable& m, const std::vector<ElementId>& x) {
  // Every finite sum of members of X lies below the total of all such sums,
  // so the ideal is the set below that single element.
  const std::vector<bool> in = m.below(submonoid_top(m, x));
  OrderIdeal out;
  for (ElementId z = 0; z < m.size(); ++z)
    if (in[z]) out.elements.push_back(z);
  out.generating_set = generator_support(m, in);
  return out;
}

std::vector<ElementId> supported_on(const MonoidTable& m, const VertexSet& h) {
  std::vector<ElementId> out;
  for (ElementId x = 0; x < m.size(); ++x) {
    bool ok = true;
    for (std::size_t j = 0; j < m.sites().size() && ok; ++j)
      if (!h.contains(m.sites()[j]) && m.count_at(x, j) != 0) ok = false;
    if (ok) out.push_back(x);
  }
  return out;
}

std::vector<OrderIdeal> order_ideals(const MonoidTable& m) {
  std::vector<OrderIdeal> out;
  for (const auto& h : enumerate_hereditary_saturated(m.graph(), EnumerationRoute::Filters))
    out.push_back({supported_on(m, h.members), h.members});
  std::sort(out.begin(), out.end(), [](const OrderIdeal& a, const OrderIdeal& b) {
    if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
    return a.elements < b.elements;
  });
  return out;
}

bool submonoid_embedding_check(const SandpileGraph& g, const VertexSet& h,
                               const VertexSet& h_prime, std::uint64_t cap) {
  if (!h.is_subset_of(h_prime))
    throw Error(Errc::InvalidArgument, "embedding check needs H inside H'");
  const Restriction small = restriction(g, h);
  const Restriction big = restriction(g, h_prime);
  const MonoidTable ms = MonoidTable::enumerate(small.graph, cap);
  const MonoidTable mb = MonoidTable::enumerate(big.graph, cap);

  std::vector<VertexId> big_local(g.vertex_count(), 0);
  for (VertexId i = 0; i < big.into_parent.vertex_to_parent.size(); ++i)
    big_local[big.into_parent.vertex_to_parent[i]] = i;
  std::vector<VertexId> small_to_big(small.graph.vertex_count());
  for (VertexId i = 0; i < small_to_big.size(); ++i)
    small_to_big[i] = big_local[small.into_parent.vertex_to_parent[i]];

  std::vector<ElementId> image(ms.size());
  std::vector<bool> hit(mb.size(), false);
  for (ElementId a = 0; a < ms.size(); ++a) {
    const Configuration src = ms.element(a).config();
    Configuration dst(big.graph.vertex_count());
    for (VertexId v = 0; v < src.vertex_count(); ++v) dst.set(small_to_big[v], src[v]);
    if (!is_stable(big.graph, dst)) return false;
    image[a] = mb.index_of(StableConfiguration::check(big.graph, std::move(dst)));
    if (hit[image[a]]) return false;  // not injective
    hit[image[a]] = true;
  }
  if (image[MonoidTable::zero()] != MonoidTable::zero()) return false;
  for (std::size_t j = 0; j < ms.sites().size(); ++j) {
    const VertexId v = small_to_big[ms.sites()[j]];
    const ElementId gen = mb.generator(v);
    for (ElementId a = 0; a < ms.size(); ++a)
      if (image[ms.add_generator(a, j)] != mb.add(image[a], gen)) return false;
  }
  return true;
}

std::vector<ArchimedeanClass> archimedean_classes(const MonoidTable& m) {
  std::map<ElementId, std::vector<ElementId>> by_idempotent;
  for (ElementId x = 0; x < m.size(); ++x) by_idempotent[m.idempotent_power(x)].push_back(x);
  std::vector<ArchimedeanClass> out;
  for (auto& [e, members] : by_idempotent) out.push_back({e, std::move(members)});
  return out;
}

}  // namespace spl
