#pragma once

// Finite groups stored by dense index with a full multiplication table, each
// element carrying a permutation of the domain {0..m-1} and a permutation of
// the two colors (identity or swap).

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dichot/affine.hpp"
#include "dichot/errors.hpp"

namespace dichot {

using ElementIndex = std::uint32_t;
using Permutation = std::vector<std::uint32_t>;

struct Generator {
  Permutation perm;
  bool swap = false;
};

enum class GroupKind { Affine, AffineSwap, Explicit };

struct GroupSpec {
  GroupKind kind = GroupKind::Affine;
  Residue n = 1;                    // affine kinds
  std::size_t domain_size = 0;      // explicit kind
  std::vector<Generator> generators;  // explicit kind

  static GroupSpec affine(Residue n) { return {GroupKind::Affine, n, 0, {}}; }
  static GroupSpec affine_swap(Residue n) { return {GroupKind::AffineSwap, n, 0, {}}; }
  static GroupSpec explicit_group(std::size_t m, std::vector<Generator> gens) {
    return {GroupKind::Explicit, 0, m, std::move(gens)};
  }
};

inline constexpr std::size_t kDefaultGroupLimit = 2048;

class FiniteGroup {
 public:
  std::size_t order() const { return labels_.size(); }
  std::size_t domain_size() const { return domain_size_; }
  ElementIndex identity() const { return 0; }

  ElementIndex mul(ElementIndex a, ElementIndex b) const { return table_[a * order() + b]; }
  ElementIndex inv(ElementIndex a) const { return inverse_[a]; }
  ElementIndex conj(ElementIndex s, ElementIndex h) const { return mul(mul(s, h), inv(s)); }

  std::span<const std::uint32_t> domain_action(ElementIndex a) const {
    return {perms_.data() + static_cast<std::size_t>(a) * domain_size_, domain_size_};
  }
  bool swaps_colors(ElementIndex a) const { return swap_[a] != 0; }
  const std::string& label(ElementIndex a) const { return labels_[a]; }

  /// Affine part of an element, present for the affine kinds only.
  const std::optional<AffineElement>& affine(ElementIndex a) const { return affine_[a]; }
  Residue modulus() const { return modulus_; }
  GroupKind kind() const { return kind_; }

  std::optional<ElementIndex> find(const std::string& label) const {
    for (ElementIndex i = 0; i < order(); ++i)
      if (labels_[i] == label) return i;
    return std::nullopt;
  }

  /// Element acting as `aff` on the domain with the given color action.
  std::optional<ElementIndex> find_affine(const AffineElement& aff, bool swap = false) const {
    for (ElementIndex i = 0; i < order(); ++i)
      if (affine_[i] && *affine_[i] == aff && swaps_colors(i) == swap) return i;
    return std::nullopt;
  }

  bool is_abelian() const {
    for (ElementIndex a = 0; a < order(); ++a)
      for (ElementIndex b = 0; b < a; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  std::size_t element_order(ElementIndex a) const {
    std::size_t k = 1;
    for (ElementIndex x = a; x != identity(); x = mul(x, a)) ++k;
    return k;
  }

 private:
  struct Raw {
    Permutation perm;
    bool swap;
    std::string label;
    std::optional<AffineElement> affine;
  };

  static Permutation compose(const Permutation& a, const Permutation& b) {
    Permutation out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
    return out;
  }

  /// Builds the tables from a list of elements closed under composition; the
  /// first element must be the identity.
  static FiniteGroup from_elements(std::vector<Raw> raw, std::size_t m, GroupKind kind,
                                   Residue modulus) {
    FiniteGroup g;
    g.kind_ = kind;
    g.modulus_ = modulus;
    g.domain_size_ = m;
    const std::size_t n = raw.size();
    std::map<std::pair<Permutation, bool>, ElementIndex> index;
    for (ElementIndex i = 0; i < n; ++i) {
      if (!index.emplace(std::pair(raw[i].perm, raw[i].swap), i).second)
        throw InvariantError("group element listed twice: " + raw[i].label);
    }
    g.table_.resize(n * n);
    g.inverse_.resize(n);
    for (ElementIndex a = 0; a < n; ++a) {
      for (ElementIndex b = 0; b < n; ++b) {
        auto it = index.find({compose(raw[a].perm, raw[b].perm), raw[a].swap != raw[b].swap});
        ensure(it != index.end(), "element list is not closed under composition");
        g.table_[a * n + b] = it->second;
        if (it->second == 0) g.inverse_[a] = b;
      }
    }
    g.perms_.reserve(n * m);
    for (auto& r : raw) {
      g.perms_.insert(g.perms_.end(), r.perm.begin(), r.perm.end());
      g.swap_.push_back(r.swap ? 1 : 0);
      g.labels_.push_back(std::move(r.label));
      g.affine_.push_back(r.affine);
    }
    return g;
  }

  static Permutation affine_perm(const AffineElement& a) {
    Permutation p(static_cast<std::size_t>(a.modulus));
    for (Residue x = 0; x < a.modulus; ++x) p[x] = static_cast<std::uint32_t>(aff_apply(a, x));
    return p;
  }

  friend FiniteGroup build_group(const GroupSpec& spec, std::size_t limit);

  GroupKind kind_ = GroupKind::Explicit;
  Residue modulus_ = 0;
  std::size_t domain_size_ = 0;
  std::vector<ElementIndex> table_;
  std::vector<ElementIndex> inverse_;
  std::vector<std::uint32_t> perms_;
  std::vector<std::uint8_t> swap_;
  std::vector<std::string> labels_;
  std::vector<std::optional<AffineElement>> affine_;
};

inline bool is_permutation(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  for (auto x : p) {
    if (x >= p.size() || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

/// Aff(Z_n), Aff(Z_n) x C2, or the closure of explicit permutation generators.
/// Affine elements are indexed unit-major (see affine_elements); in the swap
/// kind the swapping copy follows the plain copy, so index 0 is the identity.
inline FiniteGroup build_group(const GroupSpec& spec, std::size_t limit = kDefaultGroupLimit) {
  using Raw = FiniteGroup::Raw;
  std::vector<Raw> raw;
  switch (spec.kind) {
    case GroupKind::Affine:
    case GroupKind::AffineSwap: {
      if (spec.n < 1) throw std::invalid_argument("affine group needs n >= 1");
      const bool with_swap = spec.kind == GroupKind::AffineSwap;
      const auto elems = affine_elements(spec.n);
      if (elems.size() * (with_swap ? 2 : 1) > limit)
        throw ResourceError("group order exceeds limit " + std::to_string(limit));
      for (int s = 0; s < (with_swap ? 2 : 1); ++s)
        for (const auto& a : elems) {
          std::string label = s ? "(" + aff_label(a) + ", swap)" : aff_label(a);
          raw.push_back({FiniteGroup::affine_perm(a), s == 1, std::move(label), a});
        }
      return FiniteGroup::from_elements(std::move(raw), static_cast<std::size_t>(spec.n), spec.kind,
                                        spec.n);
    }
    case GroupKind::Explicit: {
      const std::size_t m = spec.domain_size;
      for (const auto& g : spec.generators)
        if (g.perm.size() != m || !is_permutation(g.perm))
          throw std::invalid_argument("explicit group: generator is not a permutation of {0.." +
                                      std::to_string(m == 0 ? 0 : m - 1) + "}");
      Permutation id(m);
      for (std::uint32_t i = 0; i < m; ++i) id[i] = i;
      std::map<std::pair<Permutation, bool>, std::size_t> seen;
      raw.push_back({id, false, "e", std::nullopt});
      seen[{id, false}] = 0;
      // breadth-first closure; labels are shortest words in generator letters
      for (std::size_t head = 0; head < raw.size(); ++head) {
        for (std::size_t k = 0; k < spec.generators.size(); ++k) {
          const auto& gen = spec.generators[k];
          Permutation p = FiniteGroup::compose(raw[head].perm, gen.perm);
          const bool sw = raw[head].swap != gen.swap;
          if (seen.contains({p, sw})) continue;
          if (raw.size() >= limit)
            throw ResourceError("group order exceeds limit " + std::to_string(limit));
          std::string word = raw[head].label == "e" ? "" : raw[head].label;
          word += k < 26 ? std::string(1, static_cast<char>('a' + k)) : "g" + std::to_string(k);
          seen[{p, sw}] = raw.size();
          raw.push_back({std::move(p), sw, std::move(word), std::nullopt});
        }
      }
      return FiniteGroup::from_elements(std::move(raw), m, GroupKind::Explicit, 0);
    }
  }
  throw std::invalid_argument("unknown group kind");
}

}  // namespace dichot
