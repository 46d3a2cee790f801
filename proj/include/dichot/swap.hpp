#pragma once

// Double action of Aff(Z_n) x C2: (s, t) moves cells by s and colors by t, so a
// coloring f is fixed by H when f(s x) = t(f(x)) for every (s, t) in H.
//
// Fixed colorings of a subgroup H, per domain orbit B of H:
//   - H swap-free: f is constant on B, factor 1 + x^|B|;
//   - H mixed (kernel K of index 2): f(b) may be chosen freely iff the point
//     stabilizer H_b lies in K, and then half of B is black, factor 2 x^(|B|/2);
//     otherwise no coloring is fixed.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "dichot/affine.hpp"
#include "dichot/errors.hpp"
#include "dichot/inventory.hpp"
#include "dichot/lattice.hpp"
#include "dichot/marks.hpp"
#include "dichot/polarity.hpp"

namespace dichot {

enum class SwapKind { SwapFree, Mixed };

struct SwapClassInfo {
  std::size_t class_index = 0;
  SwapKind kind = SwapKind::SwapFree;
  Bitset kernel;  // elements of H acting trivially on the colors
};

inline SwapClassInfo swap_class_info(const FiniteGroup& G, const Subgroup& H,
                                     std::size_t class_index = 0) {
  SwapClassInfo info{class_index, SwapKind::SwapFree, Bitset(G.order())};
  std::size_t kernel_size = 0;
  for (auto h : H.members.elements()) {
    if (G.swaps_colors(h)) {
      info.kind = SwapKind::Mixed;
    } else {
      info.kernel.set(h);
      ++kernel_size;
    }
  }
  if (info.kind == SwapKind::Mixed)
    ensure(2 * kernel_size == H.order, "color kernel of a mixed subgroup must have index 2");
  return info;
}

inline Polynomial fixed_weight_polynomial(const FiniteGroup& G, const Subgroup& H) {
  const auto info = swap_class_info(G, H);
  const auto part = orbits(H, G);
  Polynomial p = Polynomial::constant(1);
  if (info.kind == SwapKind::SwapFree) {
    for (const auto& o : part.orbits) p = p * one_plus_x_pow(o.size());
    return p;
  }
  const auto elems = H.members.elements();
  for (const auto& o : part.orbits) {
    const auto b = o.front();
    for (auto h : elems)
      if (G.domain_action(h)[b] == b && G.swaps_colors(h)) return {};
    ensure(o.size() % 2 == 0, "mixed subgroup has an admissible orbit of odd size");
    p = p * Polynomial::monomial(2, o.size() / 2);
  }
  return p;
}

/// Everything the double-action pipeline produces for Aff(Z_n) x C2.
struct ExtendedInventory {
  Residue n = 0;
  FiniteGroup group;
  SubgroupClassTraversal traversal;
  MarksMatrix marks;
  std::vector<Polynomial> fixed;      // per class: fixed colorings
  std::vector<Polynomial> inventory;  // per class: exact-stabilizer inventory
  std::vector<SwapClassInfo> info;
};

/// Q_ext = B_ext * fixed.  The weight x^black is not invariant under the
/// color swap, so a swap-free orbit pairing b and n-b black cells is split as
/// (x^b + x^(n-b)) / 2; mixed classes are integral and supported on x^(n/2).
inline void check_extended_inventory(const ExtendedInventory& ext) {
  const auto k = static_cast<std::size_t>(ext.n / 2);
  for (std::size_t i = 0; i < ext.inventory.size(); ++i) {
    const auto& q = ext.inventory[i];
    const std::string where = "extended class " + std::to_string(i) + ": ";
    ensure((q * Rational(2)).has_integer_coeffs() && q.is_nonnegative(),
           where + "inventory is not a nonnegative half-integer polynomial: " + q.to_string());
    ensure(q.coeff(k).get_den() == 1, where + "middle coefficient is not an integer");
    ensure(q.is_palindromic(static_cast<std::size_t>(ext.n)), where + "inventory not palindromic");
    if (ext.info[i].kind == SwapKind::Mixed)
      ensure(q == Polynomial::monomial(q.coeff(k), k),
             where + "mixed class supported outside the middle degree: " + q.to_string());
  }
}

inline ExtendedInventory extended_inventory(Residue n, std::size_t group_limit = kDefaultGroupLimit) {
  require_even(n, "extended_inventory");
  ExtendedInventory ext;
  ext.n = n;
  ext.group = build_group(GroupSpec::affine_swap(n), group_limit);
  ext.traversal = subgroup_traversal(ext.group, group_limit);
  ext.marks = table_of_marks(ext.group, ext.traversal);
  const std::size_t N = ext.traversal.size();
  ext.fixed.resize(N);
  ext.info.resize(N);
  parallel_for(N, [&](std::size_t i) {
    ext.fixed[i] = fixed_weight_polynomial(ext.group, ext.traversal[i].representative);
    ext.info[i] = swap_class_info(ext.group, ext.traversal[i].representative, i);
  });
  ext.inventory = solve_lower(ext.marks, ext.fixed);
  check_extended_inventory(ext);
  return ext;
}

/// Affine part of the color-swapping generator of an order-2 class <(s, swap)>,
/// or nullopt when the class is not of that form.
inline std::optional<AffineElement> swap_involution(const FiniteGroup& G, const Subgroup& H) {
  if (H.order != 2) return std::nullopt;
  for (auto h : H.members.elements())
    if (h != G.identity() && G.swaps_colors(h)) return G.affine(h);
  return std::nullopt;
}

inline StrongCountReport strong_counts(const ExtendedInventory& ext) {
  StrongCountReport r;
  r.n = ext.n;
  const auto k = static_cast<std::size_t>(ext.n / 2);
  for (std::size_t i = 0; i < ext.traversal.size(); ++i) {
    const auto sigma = swap_involution(ext.group, ext.traversal[i].representative);
    if (!sigma || *sigma == AffineElement::identity(ext.n)) continue;
    const auto& q = ext.inventory[i];
    ensure(q == Polynomial::monomial(q.coeff(k), k),
           "strong class inventory supported outside the middle degree");
    const Integer count = q.coeff(k).get_num();
    if (count == 0) continue;
    r.entries.push_back({polarity_class(*sigma), count, i});
    r.total += count;
  }
  std::sort(r.entries.begin(), r.entries.end(), [](const PolarityCount& a, const PolarityCount& b) {
    return a.polarity.representative < b.polarity.representative;
  });
  return r;
}

inline StrongCountReport strong_counts(Residue n) { return strong_counts(extended_inventory(n)); }

}  // namespace dichot
