#pragma once

// Exact-stabilizer pattern inventories for two colors under a single action.
//
// For every subgroup class G_i the orbit index monomial P_i = prod_d z_d^q(d)
// records how many domain orbits of each size G_i has.  Substituting
// z_d = 1 + x^d gives the generating function of colorings fixed by G_i, and
// Q = B * P (B the inverse table of marks) grades the patterns whose
// stabilizer is conjugate to G_i by their number of black cells.

#include <cstdlib>
#include <numeric>
#include <string>
#include <vector>

#include "dichot/errors.hpp"
#include "dichot/group.hpp"
#include "dichot/lattice.hpp"
#include "dichot/marks.hpp"
#include "dichot/polynomial.hpp"

namespace dichot {

struct OrbitPartition {
  std::vector<std::vector<std::uint32_t>> orbits;  // each sorted; ordered by least element

  std::vector<std::size_t> sizes() const {
    std::vector<std::size_t> out;
    for (const auto& o : orbits) out.push_back(o.size());
    return out;
  }
};

/// q[d] = number of orbits of cardinality d, for d = 0..m (q[0] is always 0).
struct OrbitIndexMonomial {
  std::vector<std::size_t> q;

  std::size_t domain_size() const {
    std::size_t m = 0;
    for (std::size_t d = 0; d < q.size(); ++d) m += d * q[d];
    return m;
  }
  std::size_t exponent(std::size_t d) const { return d < q.size() ? q[d] : 0; }
  bool operator==(const OrbitIndexMonomial&) const = default;

  /// "z_1^2*z_2^2"; "1" for the empty domain.
  std::string to_string() const {
    std::string out;
    for (std::size_t d = 1; d < q.size(); ++d) {
      if (q[d] == 0) continue;
      if (!out.empty()) out += "*";
      out += "z_" + std::to_string(d);
      if (q[d] > 1) out += "^" + std::to_string(q[d]);
    }
    return out.empty() ? "1" : out;
  }
};

/// Orbits of the subgroup's domain action on {0..m-1}.
inline OrbitPartition orbits(const Subgroup& H, const FiniteGroup& G) {
  const std::size_t m = G.domain_size();
  const auto elems = H.members.elements();
  std::vector<bool> seen(m, false);
  OrbitPartition part;
  for (std::uint32_t x = 0; x < m; ++x) {
    if (seen[x]) continue;
    std::vector<std::uint32_t> orbit;
    for (auto h : elems) {
      const auto y = G.domain_action(h)[x];
      if (!seen[y]) {
        seen[y] = true;
        orbit.push_back(y);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    part.orbits.push_back(std::move(orbit));
  }
  return part;
}

inline OrbitIndexMonomial orbit_index_monomial(const Subgroup& H, const FiniteGroup& G) {
  OrbitIndexMonomial mono;
  mono.q.assign(G.domain_size() + 1, 0);
  for (const auto& o : orbits(H, G).orbits) ++mono.q[o.size()];
  return mono;
}

/// P(1 + x, 1 + x^2, ...): colorings fixed by the subgroup, graded by black cells.
inline Polynomial bicolor_substitute(const OrbitIndexMonomial& mono) {
  Polynomial p = Polynomial::constant(1);
  for (std::size_t d = 1; d < mono.q.size(); ++d)
    if (mono.q[d]) p = p * pow(one_plus_x_pow(d), mono.q[d]);
  return p;
}

inline std::vector<OrbitIndexMonomial> orbit_index_monomials(const FiniteGroup& G,
                                                             const SubgroupClassTraversal& T) {
  std::vector<OrbitIndexMonomial> out(T.size());
  parallel_for(T.size(), [&](std::size_t i) { out[i] = orbit_index_monomial(T[i].representative, G); });
  return out;
}

inline std::vector<Polynomial> fixed_coloring_vector(const FiniteGroup& G,
                                                     const SubgroupClassTraversal& T) {
  std::vector<Polynomial> out;
  for (const auto& mono : orbit_index_monomials(G, T)) out.push_back(bicolor_substitute(mono));
  return out;
}

inline void check_final_inventory(const std::vector<Polynomial>& Q) {
  for (std::size_t i = 0; i < Q.size(); ++i)
    ensure(Q[i].has_integer_coeffs() && Q[i].is_nonnegative(),
           "inventory of class " + std::to_string(i) + " is not a nonnegative integer polynomial: " +
               Q[i].to_string());
}

/// Q_i = sum_j b_ij P_j(1 + x, ..., 1 + x^m), one polynomial per class.
inline std::vector<Polynomial> inventory_vector(const FiniteGroup& G,
                                                const SubgroupClassTraversal& T,
                                                const InverseMarks& B) {
  ensure(B.size() == T.size(), "inventory_vector: B does not match the traversal");
  const auto P = fixed_coloring_vector(G, T);
  std::vector<Polynomial> Q(T.size());
  for (std::size_t i = 0; i < T.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) Q[i].add_scaled(B.at(i, j), P[j]);
  check_final_inventory(Q);
  return Q;
}

/// Same vector obtained by solving M * Q = P, which avoids forming B.
inline std::vector<Polynomial> inventory_by_substitution(const FiniteGroup& G,
                                                         const SubgroupClassTraversal& T,
                                                         const MarksMatrix& M) {
  auto Q = solve_lower(M, fixed_coloring_vector(G, T));
  check_final_inventory(Q);
  return Q;
}

/// Inventory of the trivial-stabilizer class: the rigid patterns.
inline Polynomial rigid_inventory(const FiniteGroup& G, const SubgroupClassTraversal& T,
                                  const MarksMatrix& M) {
  return inventory_by_substitution(G, T, M).back();
}

inline Polynomial rigid_inventory(const FiniteGroup& G) {
  const auto T = subgroup_traversal(G);
  return rigid_inventory(G, T, table_of_marks(G, T));
}

/// |Q(-1)|
inline Integer sieve_value(const Polynomial& Q) {
  const Rational v = abs(Q.eval(-1));
  ensure(v.get_den() == 1, "sieve_value: non-integer value");
  return v.get_num();
}

}  // namespace dichot
