#pragma once

// Classical Polya-Redfield counting for bicolorings of Z_n under Aff(Z_n).

#include <map>
#include <vector>

#include "dichot/errors.hpp"
#include "dichot/group.hpp"
#include "dichot/inventory.hpp"
#include "dichot/polynomial.hpp"

namespace dichot {

struct CycleIndexTerm {
  std::vector<std::size_t> cycles;  // cycles[d] = number of d-cycles, d = 0..m
  std::size_t multiplicity = 0;

  std::size_t cycle_count() const {
    std::size_t c = 0;
    for (auto k : cycles) c += k;
    return c;
  }
  bool all_even() const {
    for (std::size_t d = 1; d < cycles.size(); d += 2)
      if (cycles[d]) return false;
    return true;
  }
};

inline std::vector<std::size_t> cycle_type(std::span<const std::uint32_t> perm) {
  std::vector<std::size_t> cycles(perm.size() + 1, 0);
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t x = 0; x < perm.size(); ++x) {
    if (seen[x]) continue;
    std::size_t len = 0;
    for (std::size_t y = x; !seen[y]; y = perm[y]) {
      seen[y] = true;
      ++len;
    }
    ++cycles[len];
  }
  return cycles;
}

/// Cycle types of the domain action, aggregated; ordered by cycle-type vector.
inline std::vector<CycleIndexTerm> cycle_index(const FiniteGroup& G) {
  std::map<std::vector<std::size_t>, std::size_t> agg;
  for (ElementIndex g = 0; g < G.order(); ++g) ++agg[cycle_type(G.domain_action(g))];
  std::vector<CycleIndexTerm> out;
  for (auto& [type, mult] : agg) out.push_back({type, mult});
  return out;
}

/// p(x): bicolor patterns graded by black cells.
inline Polynomial pattern_inventory(const FiniteGroup& G) {
  Polynomial p;
  for (const auto& term : cycle_index(G)) {
    OrbitIndexMonomial mono{term.cycles};
    p.add_scaled(Rational(term.multiplicity), bicolor_substitute(mono));
  }
  p *= Rational(1, static_cast<long>(G.order()));
  ensure(p.has_integer_coeffs(), "pattern inventory has non-integer coefficients");
  return p;
}

/// |D| = [x^(n/2)] p(x) for Aff(Z_n).
inline Integer dichotomy_count(Residue n) {
  require_even(n, "dichotomy_count");
  const auto p = pattern_inventory(build_group(GroupSpec::affine(n)));
  return p.coeff(static_cast<std::size_t>(n / 2)).get_num();
}

/// (1/|G|) sum over elements whose cycles all have even length of 2^(#cycles).
inline Integer self_complementary_by_cycles(const FiniteGroup& G) {
  Integer total = 0;
  for (const auto& term : cycle_index(G)) {
    if (!term.all_even()) continue;
    Integer pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), 2, term.cycle_count());
    total += pw * term.multiplicity;
  }
  ensure(total % G.order() == 0, "even-cycle sum not divisible by |G|");
  return total / G.order();
}

/// |S| = |p(-1)|, checked against the even-cycle Burnside sum.
inline Integer self_complementary_count(Residue n) {
  require_even(n, "self_complementary_count");
  const auto G = build_group(GroupSpec::affine(n));
  const Integer by_sieve = sieve_value(pattern_inventory(G));
  ensure(by_sieve == self_complementary_by_cycles(G), "|p(-1)| disagrees with even-cycle count");
  return by_sieve;
}

struct PieReport {
  Residue n = 0;
  Integer D, S, R_total, R_dich, bound, sieve;
};

/// D, S and the rigid counts for Aff(Z_n); bound = S + R_dich - D.
inline PieReport pie_report(Residue n) {
  require_even(n, "pie_report");
  const auto G = build_group(GroupSpec::affine(n));
  const auto T = subgroup_traversal(G);
  const auto M = table_of_marks(G, T);
  const auto p = pattern_inventory(G);
  const auto Q = inventory_by_substitution(G, T, M);
  Polynomial sum;
  for (const auto& q : Q) sum += q;
  ensure(sum == p, "sum of exact-stabilizer inventories differs from p(x)");
  const auto& rigid = Q.back();
  const auto k = static_cast<std::size_t>(n / 2);
  PieReport r;
  r.n = n;
  r.D = p.coeff(k).get_num();
  r.S = sieve_value(p);
  ensure(r.S == self_complementary_by_cycles(G), "|p(-1)| disagrees with even-cycle count");
  r.R_total = rigid.eval(1).get_num();
  r.R_dich = rigid.coeff(k).get_num();
  r.bound = r.S + r.R_dich - r.D;
  r.sieve = sieve_value(rigid);
  return r;
}

}  // namespace dichot
