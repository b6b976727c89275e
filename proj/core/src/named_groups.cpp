// SPDX-License-Identifier: Apache-2.0
//
// Reference models and identification by isomorphism.

#include <algorithm>
#include <array>
#include <mutex>
#include <numeric>

#include "equisolid/finite_group.hpp"

namespace equisolid {

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) fail("cyclic group of order 0");
  std::vector<Index> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = static_cast<Index>((i + j) % n);
  std::vector<Index> gens;
  if (n > 1) gens.push_back(1);
  return FiniteGroup(n, std::move(table), std::move(gens));
}

FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& k,
                               const std::vector<std::vector<Index>>& action) {
  const auto& kg = k.generators();
  if (action.size() != kg.size()) fail("one automorphism per generator of K is required");
  const std::size_t nn = n.order(), nk = k.order();
  // phi[x] = automorphism attached to x in K
  std::vector<std::vector<Index>> phi(nk);
  std::vector<Index> ident(nn);
  std::iota(ident.begin(), ident.end(), 0);
  phi[0] = ident;
  std::vector<Index> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Index x = queue[i];
    for (std::size_t j = 0; j < kg.size(); ++j) {
      const Index y = k.mul(x, kg[j]);
      if (!phi[y].empty()) continue;
      phi[y].resize(nn);
      for (Index a = 0; a < nn; ++a) phi[y][a] = phi[x][action[j][a]];
      queue.push_back(y);
    }
  }
  const std::size_t m = nn * nk;
  std::vector<Index> table(m * m);
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v) {
      const Index n1 = static_cast<Index>(u / nk), k1 = static_cast<Index>(u % nk);
      const Index n2 = static_cast<Index>(v / nk), k2 = static_cast<Index>(v % nk);
      const Index a = n.mul(n1, phi[k1][n2]);
      const Index b = k.mul(k1, k2);
      table[u * m + v] = static_cast<Index>(a * nk + b);
    }
  std::vector<Index> gens;
  for (Index g : n.generators()) gens.push_back(static_cast<Index>(g * nk));
  for (Index g : kg) gens.push_back(g);
  return FiniteGroup(m, std::move(table), std::move(gens));
}

FiniteGroup dihedral_group(std::size_t m) {
  FiniteGroup rot = cyclic_group(m);
  std::vector<Index> neg(m);
  for (std::size_t a = 0; a < m; ++a) neg[a] = static_cast<Index>((m - a) % m);
  return semidirect_product(rot, cyclic_group(2), {neg});
}

ConcreteGroup<std::vector<int>> permutation_group(const std::vector<std::vector<int>>& gens,
                                                  std::size_t cap) {
  if (gens.empty()) fail("permutation group needs a generator");
  const std::size_t n = gens[0].size();
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  for (const auto& g : gens) {
    if (g.size() != n) fail("permutations of different degrees");
    std::vector<int> s = g;
    std::sort(s.begin(), s.end());
    if (s != id) fail("not a permutation");
  }
  return close_group<std::vector<int>>(
      id, gens,
      [](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> c(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
        return c;
      },
      [](const std::vector<int>& a) {
        std::size_t h = 0;
        for (int x : a) h = h * 131 + static_cast<std::size_t>(x);
        return h;
      },
      [](const std::vector<int>& a, const std::vector<int>& b) { return a == b; }, cap);
}

FiniteGroup symmetric_group(int n) {
  if (n < 1) fail("symmetric group degree must be positive");
  if (n == 1) return FiniteGroup();
  std::vector<int> swap(n), cycle(n);
  std::iota(swap.begin(), swap.end(), 0);
  std::swap(swap[0], swap[1]);
  for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  return permutation_group({swap, cycle}, 100000).group;
}

FiniteGroup alternating_group(int n) {
  if (n < 3) return FiniteGroup();
  std::vector<std::vector<int>> gens;
  for (int i = 2; i < n; ++i) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    p[0] = 1;
    p[1] = i;
    p[i] = 0;
    gens.push_back(p);
  }
  return permutation_group(gens, 100000).group;
}

FiniteGroup quaternion_group() {
  // element = 2*unit + sign bit; units 1, i, j, k
  static const std::array<std::array<int, 4>, 4> unit = {{
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}};
  static const std::array<std::array<int, 4>, 4> sign = {{
      {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}}};
  auto mul = [](const int& a, const int& b) {
    const int u = a / 2, v = b / 2;
    const int s = (a % 2) ^ (b % 2) ^ sign[u][v];
    return unit[u][v] * 2 + s;
  };
  return close_group<int>(
             0, {2, 4}, mul, [](const int& a) { return static_cast<std::size_t>(a); },
             [](const int& a, const int& b) { return a == b; })
      .group;
}

namespace {

// (Z2)^k with elements as bit masks.
FiniteGroup elementary_abelian_2(int k) {
  const std::size_t n = std::size_t{1} << k;
  std::vector<Index> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = static_cast<Index>(i ^ j);
  std::vector<Index> gens;
  for (int b = 0; b < k; ++b) gens.push_back(static_cast<Index>(1u << b));
  return FiniteGroup(n, std::move(table), std::move(gens));
}

// Linear map on bit masks: column c of the matrix is images[c].
std::vector<Index> linear_map_2(int k, const std::vector<Index>& images) {
  std::vector<Index> out(std::size_t{1} << k);
  for (Index v = 0; v < out.size(); ++v) {
    Index r = 0;
    for (int b = 0; b < k; ++b)
      if (v & (1u << b)) r ^= images[b];
    out[v] = r;
  }
  return out;
}

struct Reference {
  std::string name;
  FiniteGroup group;
  Fingerprint fp;
};

const std::vector<Reference>& references() {
  static const std::vector<Reference> refs = [] {
    std::vector<std::pair<std::string, FiniteGroup>> raw;
    raw.emplace_back("S3", symmetric_group(3));
    raw.emplace_back("Q8", quaternion_group());
    raw.emplace_back("A4", alternating_group(4));
    raw.emplace_back("S4", symmetric_group(4));
    raw.emplace_back("A5", alternating_group(5));
    raw.emplace_back("S5", symmetric_group(5));
    {
      std::vector<Index> times2(5);
      for (Index a = 0; a < 5; ++a) times2[a] = (2 * a) % 5;
      raw.emplace_back("F5", semidirect_product(cyclic_group(5), cyclic_group(4), {times2}));
    }
    raw.emplace_back("Z2^2:Z4", semidirect_product(elementary_abelian_2(2), cyclic_group(4),
                                                   {linear_map_2(2, {2, 1})}));
    raw.emplace_back("Z2^4:Z2", semidirect_product(elementary_abelian_2(4), cyclic_group(2),
                                                   {linear_map_2(4, {4, 8, 1, 2})}));
    // unipotent Jordan block: e0 -> e0, e1 -> e0 + e1, e2 -> e1 + e2
    raw.emplace_back("Z2^3:Z4", semidirect_product(elementary_abelian_2(3), cyclic_group(4),
                                                   {linear_map_2(3, {1, 3, 6})}));
    raw.emplace_back("Z2xD4", direct_product(cyclic_group(2), dihedral_group(4)));
    raw.emplace_back("A4xZ2", direct_product(alternating_group(4), cyclic_group(2)));
    raw.emplace_back("S4xZ2", direct_product(symmetric_group(4), cyclic_group(2)));
    std::vector<Reference> out;
    for (auto& [name, g] : raw) {
      Fingerprint fp = fingerprint(g);
      out.push_back({name, std::move(g), std::move(fp)});
    }
    return out;
  }();
  return refs;
}

std::string abelian_name(const std::vector<std::size_t>& inv) {
  if (inv.empty()) return "1";
  std::string s;
  std::size_t i = inv.size();
  while (i > 0) {
    std::size_t j = i;
    while (j > 0 && inv[j - 1] == inv[i - 1]) --j;
    const std::size_t count = i - j;
    if (!s.empty()) s += "x";
    s += "Z" + std::to_string(inv[i - 1]);
    if (count > 1) s += "^" + std::to_string(count);
    i = j;
  }
  return s;
}

}  // namespace

Identification identify_named(const FiniteGroup& g) {
  Identification id;
  id.fingerprint = fingerprint(g);
  if (g.is_abelian()) {
    id.name = abelian_name(id.fingerprint.abelianization);
    id.recognized = true;
    return id;
  }
  if (g.order() > kMaxSearchOrder) {
    id.name = "unrecognized";
    return id;
  }
  if (g.order() % 2 == 0 && g.order() >= 8) {
    FiniteGroup d = dihedral_group(g.order() / 2);
    if (is_isomorphic(g, d)) {
      id.name = "D" + std::to_string(g.order() / 2);
      id.recognized = true;
      return id;
    }
  }
  for (const auto& ref : references()) {
    if (ref.fp != id.fingerprint) continue;
    if (is_isomorphic(g, ref.group)) {
      id.name = ref.name;
      id.recognized = true;
      return id;
    }
  }
  id.name = "unrecognized";
  return id;
}

}  // namespace equisolid
