#pragma once

// Subgroups of a FiniteGroup and their conjugacy classes.

#include <algorithm>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "dichot/bitset.hpp"
#include "dichot/errors.hpp"
#include "dichot/group.hpp"

namespace dichot {

inline constexpr std::size_t kDefaultSubgroupCap = 200000;

struct Subgroup {
  Bitset members;
  std::size_t order = 0;
  std::vector<ElementIndex> generators;

  bool contains(ElementIndex g) const { return members.test(g); }
};

struct SubgroupClass {
  Subgroup representative;         // lex-smallest conjugate
  std::vector<Bitset> conjugates;  // distinct, sorted by lex_less
  std::size_t normalizer_order = 0;

  std::size_t size() const { return conjugates.size(); }
};

/// Conjugacy classes of subgroups ordered by descending order, ties broken by
/// the canonical representative's membership set.
struct SubgroupClassTraversal {
  std::vector<SubgroupClass> classes;

  SubgroupClassTraversal() = default;
  explicit SubgroupClassTraversal(std::vector<SubgroupClass> cls) : classes(std::move(cls)) {
    for (std::size_t i = 0; i < classes.size(); ++i)
      for (const auto& c : classes[i].conjugates) lookup_.emplace(c, i);
  }

  std::size_t size() const { return classes.size(); }
  const SubgroupClass& operator[](std::size_t i) const { return classes[i]; }
  std::size_t total_subgroups() const {
    std::size_t t = 0;
    for (const auto& c : classes) t += c.size();
    return t;
  }
  std::size_t trivial_index() const { return classes.size() - 1; }

  /// Class index of an arbitrary subgroup of the group, or size() if absent.
  std::size_t class_of(const Bitset& members) const {
    auto it = lookup_.find(members);
    return it == lookup_.end() ? classes.size() : it->second;
  }

 private:
  std::unordered_map<Bitset, std::size_t, BitsetHash> lookup_;
};

/// Smallest subgroup containing the given elements.
inline Subgroup closure(const FiniteGroup& G, std::span<const ElementIndex> generators) {
  Subgroup h;
  h.members = Bitset(G.order());
  std::vector<ElementIndex> elems{G.identity()};
  h.members.set(G.identity());
  for (auto g : generators)
    if (!h.members.test(g)) h.generators.push_back(g);
  // finite group: closing under right multiplication by generators suffices
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (auto s : h.generators) {
      const ElementIndex y = G.mul(elems[head], s);
      if (!h.members.test(y)) {
        h.members.set(y);
        elems.push_back(y);
      }
    }
  }
  h.order = elems.size();
  return h;
}

inline Subgroup join(const FiniteGroup& G, const Subgroup& h, ElementIndex g) {
  std::vector<ElementIndex> gens = h.generators;
  gens.push_back(g);
  return closure(G, gens);
}

inline Bitset conjugate(const FiniteGroup& G, const Bitset& members, ElementIndex s) {
  Bitset out(G.order());
  for (auto h : members.elements()) out.set(G.conj(s, h));
  return out;
}

namespace detail {

/// One representative generator per cyclic subgroup, in element order.
inline std::vector<Subgroup> cyclic_subgroups(const FiniteGroup& G) {
  std::vector<Subgroup> out;
  std::unordered_set<Bitset, BitsetHash> seen;
  for (ElementIndex g = 0; g < G.order(); ++g) {
    const ElementIndex one[] = {g};
    Subgroup c = closure(G, one);
    if (seen.insert(c.members).second) out.push_back(std::move(c));
  }
  return out;
}

inline SubgroupClass make_class(const FiniteGroup& G, const Subgroup& h) {
  std::unordered_map<Bitset, ElementIndex, BitsetHash> conj;
  for (ElementIndex s = 0; s < G.order(); ++s) conj.try_emplace(conjugate(G, h.members, s), s);
  SubgroupClass cls;
  for (auto& [bits, s] : conj) cls.conjugates.push_back(bits);
  std::sort(cls.conjugates.begin(), cls.conjugates.end(),
            [](const Bitset& a, const Bitset& b) { return lex_less(a, b); });
  const ElementIndex to_canonical = conj.at(cls.conjugates.front());
  cls.representative.members = cls.conjugates.front();
  cls.representative.order = h.order;
  for (auto g : h.generators) cls.representative.generators.push_back(G.conj(to_canonical, g));
  ensure(G.order() % cls.size() == 0, "class size does not divide |G|");
  cls.normalizer_order = G.order() / cls.size();
  return cls;
}

inline void sort_traversal(std::vector<SubgroupClass>& classes) {
  std::sort(classes.begin(), classes.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
    if (a.representative.order != b.representative.order)
      return a.representative.order > b.representative.order;
    return lex_less(a.representative.members, b.representative.members);
  });
}

}  // namespace detail

/// Every subgroup of G exactly once: cyclic subgroups are extended by single
/// elements until no new subgroup appears.
inline std::vector<Subgroup> all_subgroups(const FiniteGroup& G,
                                           std::size_t group_limit = kDefaultGroupLimit,
                                           std::size_t subgroup_cap = kDefaultSubgroupCap) {
  if (G.order() > group_limit)
    throw ResourceError("group order " + std::to_string(G.order()) + " exceeds limit " +
                        std::to_string(group_limit));
  std::vector<Subgroup> found;
  std::unordered_set<Bitset, BitsetHash> seen;
  const auto cyclic = detail::cyclic_subgroups(G);
  for (const auto& c : cyclic) {
    seen.insert(c.members);
    found.push_back(c);
  }
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (const auto& c : cyclic) {
      const ElementIndex g = c.generators.empty() ? G.identity() : c.generators.front();
      if (found[head].contains(g)) continue;
      Subgroup k = join(G, found[head], g);
      if (seen.insert(k.members).second) {
        if (found.size() >= subgroup_cap)
          throw ResourceError("subgroup count exceeds cap " + std::to_string(subgroup_cap));
        found.push_back(std::move(k));
      }
    }
  }
  return found;
}

/// Groups a complete subgroup list into conjugacy classes.
inline SubgroupClassTraversal conjugacy_classes(const FiniteGroup& G,
                                                std::span<const Subgroup> subgroups) {
  std::unordered_set<Bitset, BitsetHash> assigned;
  std::vector<SubgroupClass> classes;
  for (const auto& h : subgroups) {
    if (assigned.contains(h.members)) continue;
    auto cls = detail::make_class(G, h);
    for (const auto& c : cls.conjugates) assigned.insert(c);
    classes.push_back(std::move(cls));
  }
  ensure(assigned.size() == subgroups.size(), "subgroup list is not closed under conjugation");
  detail::sort_traversal(classes);
  return SubgroupClassTraversal(std::move(classes));
}

/// Same traversal as conjugacy_classes(G, all_subgroups(G)), found by extending
/// only one representative per class.  Every subgroup K > 1 is <H, g> for a
/// maximal subgroup H < K, and conjugating lets H be a stored representative.
inline SubgroupClassTraversal subgroup_traversal(const FiniteGroup& G,
                                                 std::size_t group_limit = kDefaultGroupLimit,
                                                 std::size_t subgroup_cap = kDefaultSubgroupCap) {
  if (G.order() > group_limit)
    throw ResourceError("group order " + std::to_string(G.order()) + " exceeds limit " +
                        std::to_string(group_limit));
  const auto cyclic = detail::cyclic_subgroups(G);
  std::unordered_set<Bitset, BitsetHash> known;
  std::vector<SubgroupClass> classes;
  std::size_t total = 0;
  auto add = [&](const Subgroup& h) {
    auto cls = detail::make_class(G, h);
    total += cls.size();
    if (total > subgroup_cap)
      throw ResourceError("subgroup count exceeds cap " + std::to_string(subgroup_cap));
    for (const auto& c : cls.conjugates) known.insert(c);
    classes.push_back(std::move(cls));
  };
  add(cyclic.front());  // identity comes first: the trivial subgroup
  for (std::size_t head = 0; head < classes.size(); ++head) {
    const Subgroup rep = classes[head].representative;
    for (const auto& c : cyclic) {
      if (c.members.is_subset_of(rep.members)) continue;
      Subgroup k = join(G, rep, c.generators.front());
      if (!known.contains(k.members)) add(k);
    }
  }
  detail::sort_traversal(classes);
  return SubgroupClassTraversal(std::move(classes));
}

}  // namespace dichot
