#include <gtest/gtest.h>

#include "dichot/affine.hpp"
#include "dichot/group.hpp"
#include "dichot/polynomial.hpp"
#include "support.hpp"

using namespace dichot;
using dichot::testing::poly;

TEST(Affine, UnitsAndInverse) {
  EXPECT_EQ(units_of(8), (std::vector<Residue>{1, 3, 5, 7}));
  EXPECT_EQ(units_of(1), (std::vector<Residue>{0}));
  EXPECT_EQ(euler_phi(12), 4);
  EXPECT_EQ(inverse_unit(5, 12), 5);
  EXPECT_EQ(inverse_unit(3, 10), 7);
  EXPECT_THROW(inverse_unit(2, 8), std::invalid_argument);
}

TEST(Affine, ApplyComposeInverse) {
  const AffineElement a(5, 7, 8);  // x -> 7x + 5
  EXPECT_EQ(aff_apply(a, 0), 5);
  EXPECT_EQ(aff_apply(a, 1), 4);
  for (const auto& b : affine_elements(8)) {
    EXPECT_EQ(aff_compose(b, aff_inverse(b)), AffineElement::identity(8));
    for (Residue x = 0; x < 8; ++x) EXPECT_EQ(aff_apply(aff_compose(a, b), x), aff_apply(a, aff_apply(b, x)));
  }
  EXPECT_THROW(aff_compose(AffineElement(0, 1, 6), AffineElement(0, 1, 8)), std::invalid_argument);
  EXPECT_THROW(AffineElement(0, 2, 6), std::invalid_argument);
}

TEST(Affine, LabelsRoundTripAndNormalize) {
  EXPECT_EQ(aff_label(AffineElement(5, 7, 8)), "e^5.7");
  EXPECT_EQ(aff_signed_label(AffineElement(5, 7, 8)), "e^5.-1");
  EXPECT_EQ(parse_aff_label("e^5.-1", 8), AffineElement(5, 7, 8));
  EXPECT_EQ(parse_aff_label("e^-3.5", 8), AffineElement(5, 5, 8));
  for (const auto& a : affine_elements(10)) EXPECT_EQ(parse_aff_label(aff_label(a), 10), a);
  for (const char* bad : {"", "e^1", "x^1.1", "e^1.2", "e^a.1", "e^1.1z"})
    EXPECT_THROW(parse_aff_label(bad, 8), std::invalid_argument) << bad;
}

TEST(Affine, ClassRepresentativeIsInvariantAndMinimal) {
  const Residue n = 12;
  for (const auto& a : affine_elements(n)) {
    const auto rep = affine_class_representative(a);
    EXPECT_LE(rep, a);
    for (const auto& t : affine_elements(n))
      EXPECT_EQ(affine_class_representative(aff_compose(aff_compose(t, a), aff_inverse(t))), rep);
  }
  // the polarity 7x + 5 of Z_8 is conjugate to 7x + 1
  EXPECT_EQ(affine_class_representative(AffineElement(5, 7, 8)), AffineElement(1, 7, 8));
}

TEST(Affine, RequireEven) {
  EXPECT_NO_THROW(require_even(2, "t"));
  EXPECT_THROW(require_even(7, "t"), std::invalid_argument);
  EXPECT_THROW(require_even(0, "t"), std::invalid_argument);
}

void expect_group_axioms(const FiniteGroup& G) {
  const auto n = G.order();
  for (ElementIndex a = 0; a < n; ++a) {
    EXPECT_EQ(G.mul(a, G.identity()), a);
    EXPECT_EQ(G.mul(G.identity(), a), a);
    EXPECT_EQ(G.mul(a, G.inv(a)), G.identity());
    for (ElementIndex b = 0; b < n; ++b) {
      // the product acts as the composition of the actions
      const auto ab = G.domain_action(G.mul(a, b));
      const auto pa = G.domain_action(a), pb = G.domain_action(b);
      for (std::size_t x = 0; x < G.domain_size(); ++x) ASSERT_EQ(ab[x], pa[pb[x]]);
      ASSERT_EQ(G.swaps_colors(G.mul(a, b)), G.swaps_colors(a) != G.swaps_colors(b));
      for (ElementIndex c = 0; c < n; c += 3) ASSERT_EQ(G.mul(G.mul(a, b), c), G.mul(a, G.mul(b, c)));
    }
  }
}

TEST(Group, AffineAxiomsAndOrders) {
  for (Residue n : {1, 2, 3, 4, 6, 8, 9, 12}) {
    const auto G = build_group(GroupSpec::affine(n));
    EXPECT_EQ(G.order(), static_cast<std::size_t>(n * euler_phi(n))) << n;
    expect_group_axioms(G);
  }
  const auto G = build_group(GroupSpec::affine(6));
  EXPECT_FALSE(G.is_abelian());
  EXPECT_EQ(G.label(G.identity()), "e^0.1");
  EXPECT_EQ(G.element_order(*G.find("e^1.1")), 6u);
  EXPECT_EQ(G.element_order(*G.find("e^0.5")), 2u);
}

TEST(Group, AffineSwapAxioms) {
  for (Residue n : {2, 4, 6}) {
    const auto G = build_group(GroupSpec::affine_swap(n));
    EXPECT_EQ(G.order(), static_cast<std::size_t>(2 * n * euler_phi(n)));
    expect_group_axioms(G);
    std::size_t swaps = 0;
    for (ElementIndex g = 0; g < G.order(); ++g) swaps += G.swaps_colors(g);
    EXPECT_EQ(2 * swaps, G.order());
  }
  const auto G = build_group(GroupSpec::affine_swap(8));
  const auto s = G.find_affine(AffineElement(5, 7, 8), true);
  ASSERT_TRUE(s);
  EXPECT_EQ(G.label(*s), "(e^5.7, swap)");
}

TEST(Group, KleinExplicit) {
  const auto G = build_group(GroupSpec::explicit_group(4, {{{1, 0, 3, 2}, false}, {{3, 2, 1, 0}, false}}));
  EXPECT_EQ(G.order(), 4u);
  EXPECT_TRUE(G.is_abelian());
  expect_group_axioms(G);
  for (ElementIndex g = 1; g < 4; ++g) EXPECT_EQ(G.element_order(g), 2u);
}

TEST(Group, Errors) {
  EXPECT_THROW(build_group(GroupSpec::explicit_group(3, {{{0, 0, 1}, false}})), std::invalid_argument);
  EXPECT_THROW(build_group(GroupSpec::explicit_group(3, {{{0, 1}, false}})), std::invalid_argument);
  EXPECT_THROW(build_group(GroupSpec::affine(30), 100), ResourceError);
  // S_6 exceeds a small limit
  EXPECT_THROW(build_group(GroupSpec::explicit_group(6, {{{1, 2, 3, 4, 5, 0}, false}, {{1, 0, 2, 3, 4, 5}, false}}), 500),
               ResourceError);
}

TEST(Polynomial, ArithmeticAndPredicates) {
  const auto a = poly({1, 0, 1});  // 1 + x^2
  EXPECT_EQ(a.to_string(), "x^2 + 1");
  EXPECT_EQ(one_plus_x_pow(2), a);
  EXPECT_EQ(pow(poly({1, 1}), 3), poly({1, 3, 3, 1}));
  EXPECT_EQ(a * a, poly({1, 0, 2, 0, 1}));
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ((a - a).degree(), -1);
  EXPECT_EQ(a.eval(-1), 2);
  EXPECT_TRUE(a.is_palindromic(2));
  EXPECT_FALSE(poly({1, 1}).is_palindromic(2));
  const auto half = a * Rational(1, 2);
  EXPECT_FALSE(half.has_integer_coeffs());
  EXPECT_TRUE((half * Rational(2)).has_integer_coeffs());
  EXPECT_FALSE(poly({1, -1}).is_nonnegative());
  EXPECT_EQ(Polynomial().to_string(), "0");
}
