#include <gtest/gtest.h>

#include <set>

#include "dichot/inventory.hpp"
#include "dichot/io.hpp"
#include "dichot/lattice.hpp"
#include "dichot/marks.hpp"
#include "support.hpp"

using namespace dichot;
using namespace dichot::testing;

namespace {

FiniteGroup klein() {
  return build_group(load_group_spec(std::filesystem::path(DICHOT_FIXTURE_DIR) / "klein.json"));
}

std::vector<std::size_t> orders(const SubgroupClassTraversal& T) {
  std::vector<std::size_t> o;
  for (const auto& c : T.classes) o.push_back(c.representative.order);
  return o;
}

Rational q(long a, long b = 1) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

}  // namespace

TEST(Lattice, ClassCounts) {
  const std::vector<std::pair<Residue, std::size_t>> aff{{2, 2}, {4, 8}, {6, 10}, {8, 34}};
  for (auto [n, N] : aff) EXPECT_EQ(subgroup_traversal(build_group(GroupSpec::affine(n))).size(), N) << n;
  const std::vector<std::tuple<Residue, std::size_t, std::size_t>> ext{
      {2, 5, 5}, {4, 35, 27}, {6, 54, 32}, {8, 265, 149}};
  for (auto [n, subs, N] : ext) {
    const auto T = subgroup_traversal(build_group(GroupSpec::affine_swap(n)));
    EXPECT_EQ(T.total_subgroups(), subs) << n;
    EXPECT_EQ(T.size(), N) << n;
  }
  EXPECT_EQ(subgroup_traversal(klein()).size(), 5u);
}

TEST(Lattice, TraversalAgreesWithFullEnumeration) {
  for (const auto& spec : {GroupSpec::affine(6), GroupSpec::affine(8), GroupSpec::affine(12),
                           GroupSpec::affine_swap(6), GroupSpec::affine(9)}) {
    const auto G = build_group(spec);
    const auto fast = subgroup_traversal(G);
    const auto slow = conjugacy_classes(G, all_subgroups(G));
    ASSERT_EQ(fast.size(), slow.size());
    for (std::size_t i = 0; i < fast.size(); ++i) {
      EXPECT_EQ(fast[i].representative.members, slow[i].representative.members);
      EXPECT_EQ(fast[i].conjugates, slow[i].conjugates);
      EXPECT_EQ(fast[i].normalizer_order * fast[i].size(), G.order());
    }
  }
}

TEST(Lattice, OrderingAndLookup) {
  const auto G = build_group(GroupSpec::affine(10));
  const auto T = subgroup_traversal(G);
  EXPECT_EQ(T[0].representative.order, G.order());
  EXPECT_EQ(T[T.trivial_index()].representative.order, 1u);
  for (std::size_t i = 1; i < T.size(); ++i)
    EXPECT_GE(T[i - 1].representative.order, T[i].representative.order);
  for (std::size_t i = 0; i < T.size(); ++i)
    for (const auto& c : T[i].conjugates) EXPECT_EQ(T.class_of(c), i);
  Bitset not_a_subgroup(G.order());
  not_a_subgroup.set(1);
  EXPECT_EQ(T.class_of(not_a_subgroup), T.size());
}

TEST(Marks, MatchesLiteralDefinition) {
  std::vector<FiniteGroup> groups{klein()};
  for (Residue n : {2, 3, 4, 5, 6, 8}) groups.push_back(build_group(GroupSpec::affine(n)));
  for (Residue n : {2, 4}) groups.push_back(build_group(GroupSpec::affine_swap(n)));
  for (const auto& G : groups) {
    ASSERT_LE(G.order(), 64u);
    const auto T = subgroup_traversal(G);
    const auto M = table_of_marks(G, T);
    const auto L = literal_marks(G, T);
    for (std::size_t i = 0; i < T.size(); ++i)
      for (std::size_t j = 0; j < T.size(); ++j) {
        ASSERT_EQ(L[i][j], (j <= i ? Rational(M.at(i, j)) : Rational(0))) << i << "," << j;
      }
  }
}

TEST(Marks, InverseIdentitiesAndThreads) {
  for (Residue n : {6, 10, 12, 16}) {
    const auto G = build_group(GroupSpec::affine(n));
    const auto T = subgroup_traversal(G);
    const auto M = table_of_marks(G, T, 1);
    EXPECT_EQ(M, table_of_marks(G, T, 4));
    const auto B = invert_marks(M);
    EXPECT_TRUE(is_inverse(M, B));
    EXPECT_TRUE(denominators_divide(B, G.order()));
    for (std::size_t i = 0; i < T.size(); ++i) EXPECT_EQ(M.at(i, 0), 1);
    EXPECT_EQ(M.at(T.size() - 1, T.size() - 1), static_cast<std::int64_t>(G.order()));
  }
}

TEST(Marks, KleinWorkedExample) {
  const auto G = klein();
  const auto T = subgroup_traversal(G);
  const auto M = table_of_marks(G, T);
  const std::vector<std::vector<std::int64_t>> MV{
      {1}, {1, 2}, {1, 0, 2}, {1, 0, 0, 2}, {1, 2, 2, 2, 4}};
  for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(M.row(i), MV[i]);
  const auto B = invert_marks(M);
  const std::vector<std::vector<Rational>> BV{{q(1)},
                                              {q(-1, 2), q(1, 2)},
                                              {q(-1, 2), q(0), q(1, 2)},
                                              {q(-1, 2), q(0), q(0), q(1, 2)},
                                              {q(1, 2), q(-1, 4), q(-1, 4), q(-1, 4), q(1, 4)}};
  for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(B.row(i), BV[i]);
  const auto Q = inventory_vector(G, T, B);
  EXPECT_EQ(Q, (std::vector<Polynomial>{poly({1, 0, 0, 0, 1}), poly({0, 0, 1}), poly({0, 0, 1}),
                                        poly({0, 0, 1}), poly({0, 1, 0, 1})}));
  EXPECT_EQ(orbit_index_monomial(T[0].representative, G).to_string(), "z_4");
  EXPECT_EQ(orbit_index_monomial(T[4].representative, G).to_string(), "z_1^4");
}

TEST(Marks, AffineSixWorkedExample) {
  const auto G = build_group(GroupSpec::affine(6));
  const auto T = subgroup_traversal(G);
  ASSERT_EQ(T.size(), 10u);
  const auto M = table_of_marks(G, T);
  const auto B = invert_marks(M);
  const std::vector<std::vector<long>> Mp{
      {1, 0, 0, 0, 0, 0, 0, 0, 0, 0}, {1, 2, 0, 0, 0, 0, 0, 0, 0, 0}, {1, 0, 2, 0, 0, 0, 0, 0, 0, 0},
      {1, 0, 0, 2, 0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 1, 0, 0, 0, 0, 0}, {1, 2, 2, 2, 0, 4, 0, 0, 0, 0},
      {1, 2, 0, 0, 1, 0, 2, 0, 0, 0}, {1, 0, 2, 0, 1, 0, 0, 2, 0, 0}, {1, 0, 0, 2, 3, 0, 0, 0, 6, 0},
      {1, 2, 2, 2, 3, 4, 6, 6, 6, 12}};
  const auto o = orders(T);
  EXPECT_EQ(o, (std::vector<std::size_t>{12, 6, 6, 6, 4, 3, 2, 2, 2, 1}));
  auto ours_m = [&](std::size_t i, std::size_t j) { return j <= i ? M.at(i, j) : 0; };
  auto theirs_m = [&](std::size_t i, std::size_t j) { return static_cast<std::int64_t>(Mp[i][j]); };
  EXPECT_TRUE(equal_up_to_block_permutation(o, ours_m, theirs_m));
  // the reference M is lower triangular in its own order, so it can be inverted directly
  MarksMatrix ref(10);
  for (std::size_t i = 0; i < 10; ++i)
    for (std::size_t j = 0; j <= i; ++j) ref.ref(i, j) = Mp[i][j];
  const auto ref_inv = invert_marks(ref);
  auto ours_b = [&](std::size_t i, std::size_t j) { return j <= i ? B.at(i, j) : Rational(0); };
  auto theirs_b = [&](std::size_t i, std::size_t j) { return j <= i ? ref_inv.at(i, j) : Rational(0); };
  EXPECT_TRUE(equal_up_to_block_permutation(o, ours_b, theirs_b));
}

TEST(Marks, SolveLowerMatchesInverse) {
  const auto G = build_group(GroupSpec::affine(12));
  const auto T = subgroup_traversal(G);
  const auto M = table_of_marks(G, T);
  EXPECT_EQ(inventory_vector(G, T, invert_marks(M)), inventory_by_substitution(G, T, M));
}
