#pragma once

// Slow, literal reference implementations used only by the tests.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

#include "dichot/group.hpp"
#include "dichot/lattice.hpp"
#include "dichot/marks.hpp"
#include "dichot/polynomial.hpp"

namespace dichot::testing {

/// M_ij = (1/|G_j|) * #{s in G : s G_i s^-1 subset of G_j}, straight from the definition.
inline std::vector<std::vector<Rational>> literal_marks(const FiniteGroup& G,
                                                        const SubgroupClassTraversal& T) {
  const std::size_t N = T.size();
  std::vector<std::vector<Rational>> M(N, std::vector<Rational>(N, 0));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      std::int64_t hits = 0;
      for (ElementIndex s = 0; s < G.order(); ++s)
        if (conjugate(G, T[i].representative.members, s).is_subset_of(T[j].representative.members))
          ++hits;
      M[i][j] = Rational(hits, static_cast<long>(T[j].representative.order));
      M[i][j].canonicalize();
    }
  return M;
}

/// Looks for a permutation p, constant on blocks of equal subgroup order, with
/// ours[p[i]][p[j]] == theirs[i][j] for all i, j.
template <typename A, typename B>
bool equal_up_to_block_permutation(const std::vector<std::size_t>& orders, const A& ours,
                                   const B& theirs) {
  const std::size_t N = orders.size();
  std::vector<std::size_t> p(N);
  std::iota(p.begin(), p.end(), 0);
  // blocks are contiguous since both sides are sorted by descending order
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t i = 0; i < N;) {
    std::size_t j = i;
    while (j < N && orders[j] == orders[i]) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }
  auto matches = [&] {
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j)
        if (ours(p[i], p[j]) != theirs(i, j)) return false;
    return true;
  };
  // odometer over the per-block permutations
  auto rec = [&](auto&& self, std::size_t b) -> bool {
    if (b == blocks.size()) return matches();
    auto [lo, hi] = blocks[b];
    std::sort(p.begin() + lo, p.begin() + hi);
    do {
      if (self(self, b + 1)) return true;
    } while (std::next_permutation(p.begin() + lo, p.begin() + hi));
    return false;
  };
  return rec(rec, 0);
}

/// Sum of x^popcount over colorings f of the domain with f(s x) = t(f(x)) for all (s, t) in H.
inline Polynomial brute_fixed_weight(const FiniteGroup& G, const Subgroup& H) {
  const std::size_t m = G.domain_size();
  const std::uint64_t full = (std::uint64_t{1} << m) - 1;
  std::vector<Rational> coeffs(m + 1, 0);
  const auto elems = H.members.elements();
  for (std::uint64_t f = 0; f <= full; ++f) {
    bool fixed = true;
    for (auto h : elems) {
      const auto perm = G.domain_action(h);
      std::uint64_t img = 0;
      for (std::size_t x = 0; x < m; ++x)
        if ((f >> x) & 1U) img |= std::uint64_t{1} << perm[x];
      if (img != (G.swaps_colors(h) ? full & ~f : f)) {
        fixed = false;
        break;
      }
    }
    if (fixed) coeffs[static_cast<std::size_t>(std::popcount(f))] += 1;
  }
  return Polynomial(std::move(coeffs));
}

inline Polynomial poly(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return Polynomial(std::move(v));
}

}  // namespace dichot::testing
