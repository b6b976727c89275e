// SPDX-License-Identifier: Apache-2.0
//
// Finite groups given by Cayley tables, and the algorithms used on them.

#ifndef EQUISOLID_FINITE_GROUP_HPP_
#define EQUISOLID_FINITE_GROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "equisolid/error.hpp"

namespace equisolid {

using Index = std::uint32_t;

/// An abstract finite group: the identity is element 0.
class FiniteGroup {
 public:
  FiniteGroup();  // trivial group
  /// Validates the table (latin square, neutral 0) and computes inverses.
  FiniteGroup(std::size_t order, std::vector<Index> table, std::vector<Index> generators);

  std::size_t order() const { return n_; }
  Index mul(Index a, Index b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  Index inv(Index a) const { return inv_[a]; }
  Index pow(Index a, long e) const;
  const std::vector<Index>& generators() const { return gens_; }
  const std::vector<Index>& table() const { return table_; }

  std::size_t element_order(Index a) const;
  bool is_abelian() const;
  /// Exhaustive associativity check (cubic; meant for tests on small groups).
  bool is_associative() const;

 private:
  std::size_t n_;
  std::vector<Index> table_;
  std::vector<Index> inv_;
  std::vector<Index> gens_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Sorted list of element indices forming a subgroup.
using Subgroup = std::vector<Index>;

/// A closure together with the concrete elements behind each index.
template <class T>
struct ConcreteGroup {
  FiniteGroup group;
  std::vector<T> elements;
  std::function<std::size_t(const T&)> hasher;
  std::function<bool(const T&, const T&)> equal;
  std::unordered_multimap<std::size_t, Index> lookup;

  std::size_t order() const { return elements.size(); }
  std::optional<Index> find(const T& x) const {
    auto [lo, hi] = lookup.equal_range(hasher(x));
    for (auto it = lo; it != hi; ++it)
      if (equal(elements[it->second], x)) return it->second;
    return std::nullopt;
  }
};

/// Breadth-first closure of the generators under right multiplication,
/// generators taken in input order. Throws CapExceeded past the cap.
template <class T, class Mul, class Hash, class Eq>
ConcreteGroup<T> close_group(const T& identity, const std::vector<T>& generators, Mul mul,
                             Hash hash, Eq eq, std::size_t cap = 1024) {
  ConcreteGroup<T> out;
  out.hasher = hash;
  out.equal = eq;
  std::vector<Index> parent{0};
  std::vector<Index> via{0};
  std::vector<std::vector<Index>> right;  // right[i][j] = index of e_i * g_j
  out.elements.push_back(identity);
  out.lookup.emplace(hash(identity), 0);
  const std::size_t ng = generators.size();
  for (std::size_t i = 0; i < out.elements.size(); ++i) {
    right.emplace_back(ng);
    for (std::size_t j = 0; j < ng; ++j) {
      T x = mul(out.elements[i], generators[j]);
      auto found = out.find(x);
      if (found) {
        right[i][j] = *found;
        continue;
      }
      if (out.elements.size() >= cap) throw CapExceeded(cap);
      const Index k = static_cast<Index>(out.elements.size());
      out.lookup.emplace(hash(x), k);
      out.elements.push_back(std::move(x));
      parent.push_back(static_cast<Index>(i));
      via.push_back(static_cast<Index>(j));
      right[i][j] = k;
    }
  }
  const std::size_t n = out.elements.size();
  std::vector<Index> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    table[i * n] = static_cast<Index>(i);
    for (std::size_t k = 1; k < n; ++k)
      table[i * n + k] = right[table[i * n + parent[k]]][via[k]];
  }
  std::vector<Index> gens;
  for (std::size_t j = 0; j < ng; ++j) gens.push_back(right[0][j]);
  out.group = FiniteGroup(n, std::move(table), std::move(gens));
  return out;
}

// ---- structure ----

std::vector<std::size_t> element_orders(const FiniteGroup& g);
std::vector<std::vector<Index>> conjugacy_classes(const FiniteGroup& g);
Subgroup center(const FiniteGroup& g);
Subgroup subgroup_closure(const FiniteGroup& g, const std::vector<Index>& gens);
bool is_subgroup(const FiniteGroup& g, const Subgroup& s);
bool is_normal(const FiniteGroup& g, const Subgroup& s);
Subgroup derived_subgroup(const FiniteGroup& g);
/// Greedy generating set (high-order elements first) of a subgroup.
std::vector<Index> small_generating_set(const FiniteGroup& g, const Subgroup& s);
std::vector<Index> small_generating_set(const FiniteGroup& g);

/// The subgroup as a group in its own right; new index k is s[k].
FiniteGroup induced(const FiniteGroup& g, const Subgroup& s);

struct Quotient {
  FiniteGroup group;
  std::vector<Index> map;  // element of G -> coset index
};
Quotient quotient(const FiniteGroup& g, const Subgroup& normal);

/// Element (a, b) has index a * |H| + b.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

/// Invariant factors of the abelianization, ascending, each dividing the next.
std::vector<std::size_t> abelian_invariants(const FiniteGroup& g);

// ---- fingerprints and isomorphism ----

struct Fingerprint {
  std::size_t order = 1;
  std::map<std::size_t, std::size_t> order_histogram;
  std::vector<std::size_t> class_sizes;
  std::size_t center_order = 1;
  std::vector<std::size_t> derived_series;
  std::vector<std::size_t> abelianization;
  std::size_t exponent = 1;

  friend bool operator==(const Fingerprint& a, const Fingerprint& b) {
    return a.order == b.order && a.order_histogram == b.order_histogram &&
           a.class_sizes == b.class_sizes && a.center_order == b.center_order &&
           a.derived_series == b.derived_series && a.abelianization == b.abelianization &&
           a.exponent == b.exponent;
  }
  friend bool operator!=(const Fingerprint& a, const Fingerprint& b) { return !(a == b); }
  std::string str() const;
};

Fingerprint fingerprint(const FiniteGroup& g);

constexpr std::size_t kMaxSearchOrder = 512;

/// An isomorphism g -> h as an element map, if one exists.
std::optional<std::vector<Index>> find_isomorphism(const FiniteGroup& g, const FiniteGroup& h);
bool is_isomorphic(const FiniteGroup& g, const FiniteGroup& h);

struct Identification {
  std::string name;  // "unrecognized" when no model matches
  bool recognized = false;
  Fingerprint fingerprint;
};

Identification identify_named(const FiniteGroup& g);

struct SubgroupFilter {
  std::optional<std::size_t> order;
  std::optional<std::size_t> index;
};

/// Every subgroup, sorted by order then by element list.
std::vector<Subgroup> subgroups_up_to(const FiniteGroup& g, const SubgroupFilter& filter = {});

// ---- reference models ----

FiniteGroup cyclic_group(std::size_t n);
FiniteGroup dihedral_group(std::size_t m);  // order 2m
FiniteGroup symmetric_group(int n);
FiniteGroup alternating_group(int n);
FiniteGroup quaternion_group();
/// Permutation group on {0..n-1}; permutations act on the left, p[i] = image of i.
ConcreteGroup<std::vector<int>> permutation_group(const std::vector<std::vector<int>>& gens,
                                                  std::size_t cap = 1024);
/// N x| K where action[j] is the automorphism of N (as an index map) by
/// which the j-th generator of K acts.
FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& k,
                               const std::vector<std::vector<Index>>& action);

// ---- homomorphisms, Goursat data ----

struct GroupHom {
  GroupPtr domain;
  GroupPtr codomain;
  std::vector<Index> images;

  Index operator()(Index x) const { return images[x]; }
  bool is_surjective() const;
  Subgroup kernel() const;
  Subgroup image() const;
};

/// Extends generator images to a homomorphism; throws if inconsistent.
GroupHom make_hom(GroupPtr domain, GroupPtr codomain, const std::vector<Index>& gen_images);

/// A subgroup of H x H' with its elements listed as pairs; group index k is pairs[k].
struct EmbeddedGroup {
  FiniteGroup group;
  std::vector<std::pair<Index, Index>> pairs;
};

EmbeddedGroup subgroup_of_product(const FiniteGroup& h1, const FiniteGroup& h2,
                                  const std::vector<std::pair<Index, Index>>& gens);

struct GoursatData {
  Subgroup image1;  // p1(R) inside H
  Subgroup image2;  // p2(R) inside H'
  GroupPtr h1;      // image1 as a group
  GroupPtr h2;
  GroupPtr d;
  GroupHom phi;  // h1 -> d
  GroupHom psi;  // h2 -> d
};

GoursatData goursat_decompose(const EmbeddedGroup& r, const FiniteGroup& h1,
                              const FiniteGroup& h2);

/// {(a, b) : phi(a) = psi(b)}; throws on a non-surjective morphism.
EmbeddedGroup fibre_product(const GroupHom& phi, const GroupHom& psi);

/// Rewrites pairs given in the restricted groups of a decomposition back into H x H'.
std::vector<std::pair<Index, Index>> reembed(const GoursatData& data, const EmbeddedGroup& r);

/// A copy of H inside H x_D H built from a split extension H = N x| D.
EmbeddedGroup split_subgroup_witness(const GroupHom& phi, const GroupHom& psi,
                                     const Subgroup& normal, const Subgroup& complement);

}  // namespace equisolid

#endif  // EQUISOLID_FINITE_GROUP_HPP_
