#include <gtest/gtest.h>

#include <algorithm>

#include "dichot/inventory.hpp"
#include "dichot/oracle.hpp"
#include "dichot/polya.hpp"
#include "dichot/swap.hpp"
#include "support.hpp"

using namespace dichot;
using namespace dichot::testing;

namespace {

std::vector<std::string> sorted_strings(const std::vector<Polynomial>& v) {
  std::vector<std::string> s;
  for (const auto& p : v) s.push_back(p.to_string());
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

TEST(Inventory, AffineSixMultiset) {
  const auto G = build_group(GroupSpec::affine(6));
  const auto T = subgroup_traversal(G);
  const auto Q = inventory_by_substitution(G, T, table_of_marks(G, T));
  const std::vector<Polynomial> want{poly({1, 0, 0, 0, 0, 0, 1}), poly({0, 0, 0, 1}), poly({0, 0, 0, 1}),
                                     poly({0, 0, 1, 0, 1}), poly({0, 0, 1, 0, 1}),
                                     poly({0, 1, 1, 1, 1, 1}), Polynomial(), Polynomial(), Polynomial(),
                                     Polynomial()};
  EXPECT_EQ(sorted_strings(Q), sorted_strings(want));
  EXPECT_EQ(Q.front(), poly({1, 0, 0, 0, 0, 0, 1}));
  EXPECT_EQ(Q.back(), poly({0, 0, 0, 1}));
  // the class with P = z_2 z_4 has |Q(-1)| = 2
  for (std::size_t i = 0; i < T.size(); ++i) {
    if (orbit_index_monomial(T[i].representative, G).to_string() == "z_2*z_4") {
      EXPECT_EQ(sieve_value(Q[i]), 2);
    }
  }
}

TEST(Inventory, OrbitsAndMonomials) {
  const auto G = build_group(GroupSpec::affine(6));
  const auto T = subgroup_traversal(G);
  EXPECT_EQ(orbit_index_monomial(T[0].representative, G).to_string(), "z_6");
  EXPECT_EQ(orbit_index_monomial(T.classes.back().representative, G).to_string(), "z_1^6");
  EXPECT_EQ(bicolor_substitute(orbit_index_monomial(T.classes.back().representative, G)),
            pow(poly({1, 1}), 6));
  for (const auto& c : T.classes) {
    std::size_t total = 0;
    for (auto s : orbits(c.representative, G).sizes()) total += s;
    EXPECT_EQ(total, 6u);
  }
}

TEST(Inventory, SumsToPatternInventory) {
  for (Residue n = 2; n <= 24; n += 2) {
    const auto G = build_group(GroupSpec::affine(n));
    const auto T = subgroup_traversal(G);
    const auto Q = inventory_by_substitution(G, T, table_of_marks(G, T));
    Polynomial sum;
    for (const auto& x : Q) sum += x;
    EXPECT_EQ(sum, pattern_inventory(G)) << n;
  }
}

TEST(Inventory, CensusEqualsInventoryOddAndEven) {
  for (Residue n : {3, 5, 7, 9, 10, 12}) {
    const auto G = build_group(GroupSpec::affine(n));
    const auto T = subgroup_traversal(G);
    const auto Q = inventory_by_substitution(G, T, table_of_marks(G, T));
    const auto census = stabilizer_census(G, T);
    for (std::size_t i = 0; i < T.size(); ++i)
      for (std::size_t s = 0; s <= static_cast<std::size_t>(n); ++s)
        EXPECT_EQ(Rational(census[i][s]), Q[i].coeff(s)) << n << " class " << i << " size " << s;
  }
}

TEST(Inventory, SieveValues) {
  EXPECT_EQ(sieve_value(poly({0, 0, 0, 1})), 1);
  EXPECT_EQ(sieve_value(poly({0, 1, 0, 1})), 2);
  EXPECT_EQ(sieve_value(Polynomial()), 0);
}

TEST(Polya, CountsAndFormulas) {
  EXPECT_EQ(dichotomy_count(12), 34);
  EXPECT_EQ(self_complementary_count(12), 18);
  EXPECT_EQ(dichotomy_count(50), Integer("126410742103"));
  EXPECT_EQ(self_complementary_count(50), 872893);
  EXPECT_EQ(cycle_type(std::vector<std::uint32_t>{1, 0, 3, 4, 2}), (std::vector<std::size_t>{0, 0, 1, 1, 0, 0}));
  std::size_t mult = 0;
  for (const auto& t : cycle_index(build_group(GroupSpec::affine(6)))) mult += t.multiplicity;
  EXPECT_EQ(mult, 12u);
  EXPECT_THROW(dichotomy_count(7), std::invalid_argument);
}

TEST(Polya, PieReport) {
  const auto r6 = pie_report(6);
  EXPECT_EQ(r6.D, 3);
  EXPECT_EQ(r6.S, 3);
  EXPECT_EQ(r6.R_dich, 1);
  EXPECT_EQ(r6.R_total, 1);
  EXPECT_EQ(r6.bound, 1);
  EXPECT_EQ(r6.sieve, 1);
  const auto r10 = pie_report(10);
  EXPECT_EQ(r10.R_total, 15);
  EXPECT_EQ(r10.R_dich, 5);
  EXPECT_EQ(r10.bound, 3);
}

TEST(Swap, FixedWeightMatchesBruteForce) {
  for (Residue n : {2, 4, 6}) {
    const auto G = build_group(GroupSpec::affine_swap(n));
    for (const auto& H : all_subgroups(G))
      ASSERT_EQ(fixed_weight_polynomial(G, H), brute_fixed_weight(G, H)) << n;
  }
}

TEST(Swap, HalfIntegralSwapFreeClass) {
  const auto ext = extended_inventory(2);
  bool saw_half = false;
  for (const auto& q : ext.inventory)
    if (q == poly({1, 0, 1}) * Rational(1, 2)) saw_half = true;
  EXPECT_TRUE(saw_half);
}

TEST(Swap, ClassInfoAndInvolution) {
  const auto ext = extended_inventory(6);
  std::size_t mixed = 0;
  for (std::size_t i = 0; i < ext.traversal.size(); ++i) {
    const auto& H = ext.traversal[i].representative;
    if (ext.info[i].kind == SwapKind::Mixed) {
      ++mixed;
      EXPECT_EQ(2 * ext.info[i].kernel.count(), H.order);
    } else {
      EXPECT_EQ(ext.info[i].kernel, H.members);
    }
  }
  EXPECT_GT(mixed, 0u);
  EXPECT_EQ(ext.traversal.size(), 32u);
}

TEST(Swap, StrongCounts) {
  const auto r6 = strong_counts(6);
  ASSERT_EQ(r6.entries.size(), 1u);
  EXPECT_TRUE(r6.entries[0].polarity.contains(AffineElement(5, 5, 6)));
  EXPECT_EQ(r6.total, 1);
  const auto r8 = strong_counts(8);
  ASSERT_EQ(r8.entries.size(), 1u);
  EXPECT_TRUE(r8.entries[0].polarity.contains(parse_aff_label("e^5.-1", 8)));
  EXPECT_EQ(r8.entries[0].polarity.signed_label, "e^1.-1");
  EXPECT_EQ(strong_counts(12).sorted_counts(), (std::vector<Integer>{2, 4}));
  EXPECT_EQ(strong_counts(4).total, 0);
  EXPECT_TRUE(strong_counts(4).entries.empty());
  EXPECT_EQ(strong_counts(2).total, 1);
}
