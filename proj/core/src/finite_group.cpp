// SPDX-License-Identifier: Apache-2.0

#include "equisolid/finite_group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace equisolid {

namespace {

constexpr Index kUnset = static_cast<Index>(-1);

std::vector<std::size_t> prime_factors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

void check_search_order(const FiniteGroup& g) {
  if (g.order() > kMaxSearchOrder)
    fail("unsupported order " + std::to_string(g.order()) + " (limit " +
         std::to_string(kMaxSearchOrder) + ")");
}

}  // namespace

FiniteGroup::FiniteGroup() : n_(1), table_{0}, inv_{0} {}

FiniteGroup::FiniteGroup(std::size_t order, std::vector<Index> table, std::vector<Index> generators)
    : n_(order), table_(std::move(table)), gens_(std::move(generators)) {
  if (n_ == 0) fail("a group needs at least one element");
  if (table_.size() != n_ * n_) fail("Cayley table has the wrong size");
  std::vector<char> seen(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (table_[i] != i || table_[i * n_] != i) fail("element 0 is not neutral");
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n_; ++j) {
      Index x = table_[i * n_ + j];
      if (x >= n_ || seen[x]) fail("Cayley table row is not a permutation");
      seen[x] = 1;
    }
  }
  inv_.assign(n_, 0);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (table_[i * n_ + j] == 0) {
        inv_[i] = static_cast<Index>(j);
        break;
      }
  for (Index g : gens_)
    if (g >= n_) fail("generator index out of range");
}

Index FiniteGroup::pow(Index a, long e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  Index r = 0;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    e >>= 1;
    if (e) a = mul(a, a);
  }
  return r;
}

std::size_t FiniteGroup::element_order(Index a) const {
  std::size_t k = 1;
  Index x = a;
  while (x != 0) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (table_[i * n_ + j] != table_[j * n_ + i]) return false;
  return true;
}

bool FiniteGroup::is_associative() const {
  for (Index a = 0; a < n_; ++a)
    for (Index b = 0; b < n_; ++b)
      for (Index c = 0; c < n_; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
  return true;
}

std::vector<std::size_t> element_orders(const FiniteGroup& g) {
  std::vector<std::size_t> out(g.order());
  for (Index i = 0; i < g.order(); ++i) out[i] = g.element_order(i);
  return out;
}

std::vector<std::vector<Index>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<char> done(g.order(), 0);
  std::vector<std::vector<Index>> classes;
  for (Index x = 0; x < g.order(); ++x) {
    if (done[x]) continue;
    std::vector<Index> cls;
    for (Index y = 0; y < g.order(); ++y) {
      Index c = g.mul(g.mul(y, x), g.inv(y));
      if (!done[c]) {
        done[c] = 1;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

Subgroup center(const FiniteGroup& g) {
  Subgroup z;
  for (Index x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Index y = 0; y < g.order() && central; ++y) central = g.mul(x, y) == g.mul(y, x);
    if (central) z.push_back(x);
  }
  return z;
}

Subgroup subgroup_closure(const FiniteGroup& g, const std::vector<Index>& gens) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Index> queue{0};
  seen[0] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (Index s : gens) {
      Index y = g.mul(queue[i], s);
      if (!seen[y]) {
        seen[y] = 1;
        queue.push_back(y);
      }
    }
  std::sort(queue.begin(), queue.end());
  return queue;
}

bool is_subgroup(const FiniteGroup& g, const Subgroup& s) {
  if (s.empty() || s[0] != 0) return false;
  if (!std::is_sorted(s.begin(), s.end())) return false;
  for (Index a : s) {
    if (a >= g.order()) return false;
    for (Index b : s)
      if (!std::binary_search(s.begin(), s.end(), g.mul(a, g.inv(b)))) return false;
  }
  return true;
}

bool is_normal(const FiniteGroup& g, const Subgroup& s) {
  for (Index x : s)
    for (Index y = 0; y < g.order(); ++y)
      if (!std::binary_search(s.begin(), s.end(), g.mul(g.mul(y, x), g.inv(y)))) return false;
  return true;
}

Subgroup derived_subgroup(const FiniteGroup& g) {
  std::vector<Index> comms;
  std::vector<char> seen(g.order(), 0);
  for (Index a = 0; a < g.order(); ++a)
    for (Index b = 0; b < g.order(); ++b) {
      Index c = g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
      if (!seen[c]) {
        seen[c] = 1;
        comms.push_back(c);
      }
    }
  return subgroup_closure(g, comms);
}

std::vector<Index> small_generating_set(const FiniteGroup& g, const Subgroup& s) {
  std::vector<Index> cand(s.begin(), s.end());
  std::vector<std::size_t> ord(g.order(), 0);
  for (Index x : cand) ord[x] = g.element_order(x);
  std::stable_sort(cand.begin(), cand.end(),
                   [&](Index a, Index b) { return ord[a] > ord[b]; });
  std::vector<Index> gens;
  Subgroup cur{0};
  for (Index x : cand) {
    if (cur.size() == s.size()) break;
    if (std::binary_search(cur.begin(), cur.end(), x)) continue;
    gens.push_back(x);
    cur = subgroup_closure(g, gens);
  }
  return gens;
}

std::vector<Index> small_generating_set(const FiniteGroup& g) {
  Subgroup all(g.order());
  std::iota(all.begin(), all.end(), 0);
  return small_generating_set(g, all);
}

FiniteGroup induced(const FiniteGroup& g, const Subgroup& s) {
  if (!is_subgroup(g, s)) fail("element list is not a subgroup");
  std::vector<Index> pos(g.order(), kUnset);
  for (std::size_t k = 0; k < s.size(); ++k) pos[s[k]] = static_cast<Index>(k);
  const std::size_t m = s.size();
  std::vector<Index> table(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) table[i * m + j] = pos[g.mul(s[i], s[j])];
  std::vector<Index> gens;
  for (Index x : small_generating_set(g, s)) gens.push_back(pos[x]);
  return FiniteGroup(m, std::move(table), std::move(gens));
}

Quotient quotient(const FiniteGroup& g, const Subgroup& normal) {
  if (!is_subgroup(g, normal) || !is_normal(g, normal)) fail("quotient by a non-normal subgroup");
  std::vector<Index> map(g.order(), kUnset);
  std::vector<Index> reps;
  for (Index x = 0; x < g.order(); ++x) {
    if (map[x] != kUnset) continue;
    const Index c = static_cast<Index>(reps.size());
    reps.push_back(x);
    for (Index n : normal) map[g.mul(x, n)] = c;
  }
  const std::size_t m = reps.size();
  std::vector<Index> table(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) table[i * m + j] = map[g.mul(reps[i], reps[j])];
  std::vector<Index> gens;
  for (Index x : g.generators())
    if (map[x] != 0 && std::find(gens.begin(), gens.end(), map[x]) == gens.end())
      gens.push_back(map[x]);
  return {FiniteGroup(m, std::move(table), std::move(gens)), std::move(map)};
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t a = g.order(), b = h.order(), n = a * b;
  std::vector<Index> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Index p = g.mul(static_cast<Index>(x / b), static_cast<Index>(y / b));
      Index q = h.mul(static_cast<Index>(x % b), static_cast<Index>(y % b));
      table[x * n + y] = static_cast<Index>(p * b + q);
    }
  std::vector<Index> gens;
  for (Index x : g.generators()) gens.push_back(static_cast<Index>(x * b));
  for (Index y : h.generators()) gens.push_back(y);
  return FiniteGroup(n, std::move(table), std::move(gens));
}

std::vector<std::size_t> abelian_invariants(const FiniteGroup& g) {
  Quotient q = quotient(g, derived_subgroup(g));
  const FiniteGroup& a = q.group;
  const std::size_t n = a.order();
  std::vector<std::vector<std::size_t>> parts;  // per prime: exponents, descending
  std::vector<std::size_t> primes = prime_factors(n);
  std::size_t longest = 0;
  for (std::size_t p : primes) {
    // s_k = log_p #{x : x^(p^k) = 1}
    std::vector<std::size_t> s{0};
    std::size_t pk = 1;
    for (;;) {
      pk *= p;
      std::size_t cnt = 0;
      for (Index x = 0; x < n; ++x)
        if (a.pow(x, static_cast<long>(pk)) == 0) ++cnt;
      std::size_t e = 0;
      while (cnt > 1) {
        cnt /= p;
        ++e;
      }
      if (e == s.back()) break;
      s.push_back(e);
    }
    // number of cyclic factors with exponent >= k is s_k - s_{k-1}
    std::vector<std::size_t> exps;
    for (std::size_t k = 1; k < s.size(); ++k) {
      std::size_t at_least_k = s[k] - s[k - 1];
      std::size_t at_least_next = (k + 1 < s.size()) ? s[k + 1] - s[k] : 0;
      for (std::size_t c = at_least_next; c < at_least_k; ++c) exps.push_back(k);
    }
    std::sort(exps.rbegin(), exps.rend());
    longest = std::max(longest, exps.size());
    std::vector<std::size_t> powers;
    for (std::size_t e : exps) {
      std::size_t v = 1;
      for (std::size_t i = 0; i < e; ++i) v *= p;
      powers.push_back(v);
    }
    parts.push_back(std::move(powers));
  }
  std::vector<std::size_t> out(longest, 1);
  for (const auto& powers : parts)
    for (std::size_t i = 0; i < powers.size(); ++i) out[i] *= powers[i];
  std::reverse(out.begin(), out.end());
  return out;
}

std::string Fingerprint::str() const {
  std::ostringstream os;
  os << "order " << order << "; element orders {";
  bool first = true;
  for (auto [o, c] : order_histogram) {
    os << (first ? "" : ", ") << o << ":" << c;
    first = false;
  }
  os << "}; classes [";
  for (std::size_t i = 0; i < class_sizes.size(); ++i) os << (i ? "," : "") << class_sizes[i];
  os << "]; center " << center_order << "; derived series [";
  for (std::size_t i = 0; i < derived_series.size(); ++i)
    os << (i ? "," : "") << derived_series[i];
  os << "]; abelianization [";
  for (std::size_t i = 0; i < abelianization.size(); ++i)
    os << (i ? "," : "") << abelianization[i];
  os << "]; exponent " << exponent;
  return os.str();
}

Fingerprint fingerprint(const FiniteGroup& g) {
  Fingerprint f;
  f.order = g.order();
  f.exponent = 1;
  for (std::size_t o : element_orders(g)) {
    ++f.order_histogram[o];
    f.exponent = std::lcm(f.exponent, o);
  }
  for (const auto& c : conjugacy_classes(g)) f.class_sizes.push_back(c.size());
  std::sort(f.class_sizes.begin(), f.class_sizes.end());
  f.center_order = center(g).size();
  FiniteGroup cur = g;
  f.derived_series.push_back(cur.order());
  for (;;) {
    Subgroup d = derived_subgroup(cur);
    if (d.size() == cur.order()) break;
    f.derived_series.push_back(d.size());
    if (d.size() == 1) break;
    cur = induced(cur, d);
  }
  f.abelianization = abelian_invariants(g);
  return f;
}

namespace {

struct ClassData {
  std::vector<std::size_t> order;
  std::vector<std::size_t> class_size;
};

ClassData class_data(const FiniteGroup& g) {
  ClassData d;
  d.order = element_orders(g);
  d.class_size.assign(g.order(), 0);
  for (const auto& c : conjugacy_classes(g))
    for (Index x : c) d.class_size[x] = c.size();
  return d;
}

// Extends the partial assignment of the first `count` generators along the
// subgroup they generate; false on inconsistency or non-injectivity.
bool consistent(const FiniteGroup& g, const FiniteGroup& h, const std::vector<Index>& gens,
                const std::vector<Index>& img, std::size_t count, std::vector<Index>& map) {
  std::fill(map.begin(), map.end(), kUnset);
  std::vector<char> used(h.order(), 0);
  map[0] = 0;
  used[0] = 1;
  std::vector<Index> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Index x = queue[i];
    for (std::size_t j = 0; j < count; ++j) {
      const Index y = g.mul(x, gens[j]);
      const Index hy = h.mul(map[x], img[j]);
      if (map[y] == kUnset) {
        if (used[hy]) return false;
        used[hy] = 1;
        map[y] = hy;
        queue.push_back(y);
      } else if (map[y] != hy) {
        return false;
      }
    }
  }
  return true;
}

bool search(const FiniteGroup& g, const FiniteGroup& h, const std::vector<Index>& gens,
            const std::vector<std::vector<Index>>& cand, std::vector<Index>& img,
            std::size_t depth, std::vector<Index>& map) {
  if (depth == gens.size()) return consistent(g, h, gens, img, depth, map);
  for (Index c : cand[depth]) {
    img[depth] = c;
    if (!consistent(g, h, gens, img, depth + 1, map)) continue;
    if (search(g, h, gens, cand, img, depth + 1, map)) return true;
  }
  return false;
}

}  // namespace

std::optional<std::vector<Index>> find_isomorphism(const FiniteGroup& g, const FiniteGroup& h) {
  check_search_order(g);
  check_search_order(h);
  if (g.order() != h.order()) return std::nullopt;
  if (fingerprint(g) != fingerprint(h)) return std::nullopt;
  const std::vector<Index> gens = small_generating_set(g);
  if (gens.empty()) return std::vector<Index>{0};
  const ClassData dg = class_data(g), dh = class_data(h);
  std::vector<std::vector<Index>> cand(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (Index y = 0; y < h.order(); ++y)
      if (dh.order[y] == dg.order[gens[i]] && dh.class_size[y] == dg.class_size[gens[i]])
        cand[i].push_back(y);
  std::vector<Index> img(gens.size());
  std::vector<Index> map(g.order());
  if (!search(g, h, gens, cand, img, 0, map)) return std::nullopt;
  return map;
}

bool is_isomorphic(const FiniteGroup& g, const FiniteGroup& h) {
  return find_isomorphism(g, h).has_value();
}

namespace {

using Bits = std::vector<std::uint64_t>;

Bits to_bits(const Subgroup& s, std::size_t n) {
  Bits b((n + 63) / 64, 0);
  for (Index x : s) b[x / 64] |= std::uint64_t{1} << (x % 64);
  return b;
}

bool has_bit(const Bits& b, Index x) { return (b[x / 64] >> (x % 64)) & 1u; }

}  // namespace

std::vector<Subgroup> subgroups_up_to(const FiniteGroup& g, const SubgroupFilter& filter) {
  check_search_order(g);
  const std::size_t n = g.order();
  struct Found {
    Subgroup elems;
    std::vector<Index> gens;
  };
  std::vector<Found> all;
  std::set<Bits> seen;
  auto add = [&](std::vector<Index> gens) {
    Subgroup s = subgroup_closure(g, gens);
    Bits b = to_bits(s, n);
    if (!seen.insert(b).second) return;
    all.push_back({std::move(s), std::move(gens)});
  };
  add({});
  for (std::size_t i = 0; i < all.size(); ++i) {
    const Bits cur = to_bits(all[i].elems, n);
    for (Index x = 1; x < n; ++x) {
      if (has_bit(cur, x)) continue;
      std::vector<Index> gens = all[i].gens;
      gens.push_back(x);
      add(std::move(gens));
    }
  }
  std::vector<Subgroup> out;
  for (auto& f : all) {
    if (filter.order && f.elems.size() != *filter.order) continue;
    if (filter.index && f.elems.size() * *filter.index != n) continue;
    out.push_back(std::move(f.elems));
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

// ---- homomorphisms ----

bool GroupHom::is_surjective() const { return image().size() == codomain->order(); }

Subgroup GroupHom::kernel() const {
  Subgroup k;
  for (Index x = 0; x < domain->order(); ++x)
    if (images[x] == 0) k.push_back(x);
  return k;
}

Subgroup GroupHom::image() const {
  Subgroup s(images.begin(), images.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

GroupHom make_hom(GroupPtr domain, GroupPtr codomain, const std::vector<Index>& gen_images) {
  const auto& gens = domain->generators();
  if (gen_images.size() != gens.size()) fail("one image per generator is required");
  for (Index y : gen_images)
    if (y >= codomain->order()) fail("generator image out of range");
  std::vector<Index> images(domain->order(), kUnset);
  images[0] = 0;
  std::vector<Index> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Index x = queue[i];
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const Index y = domain->mul(x, gens[j]);
      const Index iy = codomain->mul(images[x], gen_images[j]);
      if (images[y] == kUnset) {
        images[y] = iy;
        queue.push_back(y);
      } else if (images[y] != iy) {
        fail("generator images do not define a homomorphism");
      }
    }
  }
  if (queue.size() != domain->order()) fail("domain generators do not generate the group");
  return {std::move(domain), std::move(codomain), std::move(images)};
}

EmbeddedGroup subgroup_of_product(const FiniteGroup& h1, const FiniteGroup& h2,
                                  const std::vector<std::pair<Index, Index>>& gens) {
  using P = std::pair<Index, Index>;
  auto cg = close_group<P>(
      P{0, 0}, gens,
      [&](const P& a, const P& b) { return P{h1.mul(a.first, b.first), h2.mul(a.second, b.second)}; },
      [](const P& a) { return (static_cast<std::size_t>(a.first) << 32) ^ a.second; },
      [](const P& a, const P& b) { return a == b; }, h1.order() * h2.order());
  return {std::move(cg.group), std::move(cg.elements)};
}

GoursatData goursat_decompose(const EmbeddedGroup& r, const FiniteGroup& h1,
                              const FiniteGroup& h2) {
  GoursatData out;
  for (const auto& [a, b] : r.pairs) {
    if (a >= h1.order() || b >= h2.order()) fail("pair outside H x H'");
    out.image1.push_back(a);
    out.image2.push_back(b);
  }
  for (Subgroup* s : {&out.image1, &out.image2}) {
    std::sort(s->begin(), s->end());
    s->erase(std::unique(s->begin(), s->end()), s->end());
  }
  out.h1 = std::make_shared<FiniteGroup>(induced(h1, out.image1));
  out.h2 = std::make_shared<FiniteGroup>(induced(h2, out.image2));
  std::vector<Index> pos1(h1.order(), kUnset), pos2(h2.order(), kUnset);
  for (std::size_t k = 0; k < out.image1.size(); ++k) pos1[out.image1[k]] = static_cast<Index>(k);
  for (std::size_t k = 0; k < out.image2.size(); ++k) pos2[out.image2[k]] = static_cast<Index>(k);
  Subgroup n1;
  for (const auto& [a, b] : r.pairs)
    if (b == 0) n1.push_back(pos1[a]);
  std::sort(n1.begin(), n1.end());
  Quotient q = quotient(*out.h1, n1);
  out.d = std::make_shared<FiniteGroup>(std::move(q.group));
  out.phi = GroupHom{out.h1, out.d, std::move(q.map)};
  std::vector<Index> psi(out.h2->order(), kUnset);
  for (const auto& [a, b] : r.pairs) {
    const Index v = out.phi(pos1[a]);
    Index& slot = psi[pos2[b]];
    if (slot == kUnset)
      slot = v;
    else if (slot != v)
      fail("internal: second Goursat map is not well defined");
  }
  out.psi = GroupHom{out.h2, out.d, std::move(psi)};
  for (Index x = 0; x < out.h2->order(); ++x)
    for (Index y = 0; y < out.h2->order(); ++y)
      if (out.psi(out.h2->mul(x, y)) != out.d->mul(out.psi(x), out.psi(y)))
        fail("internal: second Goursat map is not a homomorphism");
  return out;
}

EmbeddedGroup fibre_product(const GroupHom& phi, const GroupHom& psi) {
  if (phi.codomain->order() != psi.codomain->order() ||
      phi.codomain->table() != psi.codomain->table())
    fail("fibre product needs a common codomain");
  if (!phi.is_surjective()) fail("fibre product: first morphism is not surjective");
  if (!psi.is_surjective()) fail("fibre product: second morphism is not surjective");
  const FiniteGroup& a = *phi.domain;
  const FiniteGroup& b = *psi.domain;
  std::vector<std::pair<Index, Index>> pairs;
  std::vector<Index> pos(a.order() * b.order(), kUnset);
  for (Index x = 0; x < a.order(); ++x)
    for (Index y = 0; y < b.order(); ++y)
      if (phi(x) == psi(y)) {
        pos[static_cast<std::size_t>(x) * b.order() + y] = static_cast<Index>(pairs.size());
        pairs.emplace_back(x, y);
      }
  const std::size_t m = pairs.size();
  std::vector<Index> table(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Index x = a.mul(pairs[i].first, pairs[j].first);
      Index y = b.mul(pairs[i].second, pairs[j].second);
      table[i * m + j] = pos[static_cast<std::size_t>(x) * b.order() + y];
    }
  FiniteGroup tmp(m, table, {});
  std::vector<Index> gens = small_generating_set(tmp);
  return {FiniteGroup(m, std::move(table), std::move(gens)), std::move(pairs)};
}

std::vector<std::pair<Index, Index>> reembed(const GoursatData& data, const EmbeddedGroup& r) {
  std::vector<std::pair<Index, Index>> out;
  out.reserve(r.pairs.size());
  for (const auto& [a, b] : r.pairs) out.emplace_back(data.image1[a], data.image2[b]);
  return out;
}

EmbeddedGroup split_subgroup_witness(const GroupHom& phi, const GroupHom& psi,
                                     const Subgroup& normal, const Subgroup& complement) {
  if (phi.domain->table() != psi.domain->table()) fail("phi and psi must share their domain");
  const FiniteGroup& h = *phi.domain;
  if (!is_subgroup(h, normal)) fail("hypothesis failed: N is not a subgroup");
  if (!is_subgroup(h, complement)) fail("hypothesis failed: D is not a subgroup");
  if (!is_normal(h, normal)) fail("hypothesis failed: N is not normal in H");
  std::vector<Index> meet;
  std::set_intersection(normal.begin(), normal.end(), complement.begin(), complement.end(),
                        std::back_inserter(meet));
  if (meet.size() != 1) fail("hypothesis failed: N and D intersect nontrivially");
  if (normal.size() * complement.size() != h.order())
    fail("hypothesis failed: |N||D| differs from |H|");
  if (!phi.is_surjective()) fail("hypothesis failed: phi is not surjective");
  if (!psi.is_surjective()) fail("hypothesis failed: psi is not surjective");
  if (phi.kernel() != normal) fail("hypothesis failed: ker phi differs from N");
  if (psi.kernel() != normal) fail("hypothesis failed: ker psi differs from N");
  // psi restricted to D is a bijection onto the codomain
  std::vector<Index> section(psi.codomain->order(), kUnset);
  for (Index d : complement) section[psi(d)] = d;
  std::vector<std::pair<Index, Index>> gens;
  for (Index n : small_generating_set(h, normal)) gens.emplace_back(n, 0);
  for (Index d : small_generating_set(h, complement)) gens.emplace_back(d, section[phi(d)]);
  EmbeddedGroup out = subgroup_of_product(h, h, gens);
  std::vector<char> hit(h.order(), 0);
  for (const auto& [a, b] : out.pairs) {
    if (phi(a) != psi(b)) fail("internal: witness leaves the fibre product");
    if (hit[a]) fail("projection to the first factor is not injective");
    hit[a] = 1;
  }
  if (out.pairs.size() != h.order()) fail("projection to the first factor is not surjective");
  return out;
}

}  // namespace equisolid
