#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"

using namespace fiberforge;

namespace {

void expect_groebner(const GroebnerBasis& gb) {
  for (std::size_t a = 0; a < gb.elements.size(); ++a) {
    const Polynomial& f = gb.elements[a];
    EXPECT_EQ(f.leading_coefficient(), 1);
    for (std::size_t b = a + 1; b < gb.elements.size(); ++b) {
      EXPECT_TRUE(normal_form(detail::s_polynomial(f, gb.elements[b]), gb).is_zero());
    }
    // Reduced: no term of f is divisible by another leading monomial.
    for (std::size_t b = 0; b < gb.elements.size(); ++b) {
      if (a == b) continue;
      for (const auto& t : f.terms()) EXPECT_FALSE(gb.elements[b].leading_monomial().divides(t.mono));
    }
  }
}

Polynomial x(const RingPtr& r, int i) { return Polynomial::variable(r, VariableId::x(i)); }

}  // namespace

TEST(Buchberger, RandomIdealsSatisfyTheCriterion) {
  std::mt19937 rng(23);
  const RingPtr r = ring_R(3);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(oracle::random_poly(r, rng, 3, 2));
    const GroebnerBasis gb = buchberger(gens, r);
    expect_groebner(gb);
    for (const auto& g : gens) EXPECT_TRUE(in_ideal(g, gb));
  }
}

TEST(Buchberger, ReducedBasisIsIndependentOfInputOrder) {
  std::mt19937 rng(29);
  auto gens = lambda_polynomials(4);
  const GroebnerBasis gb = buchberger(gens, ring_W(4));
  expect_groebner(gb);
  for (int trial = 0; trial < 3; ++trial) {
    std::shuffle(gens.begin(), gens.end(), rng);
    for (auto& g : gens) g *= Rational(-3, 2);
    EXPECT_EQ(buchberger(gens, ring_W(4)).elements, gb.elements);
  }
}

TEST(Buchberger, TextbookExample) {
  // x2^2 - x1, x2 x1 - 1 under grevlex x2 > x1.
  const RingPtr r = ring_R(2);
  const GroebnerBasis gb = buchberger({x(r, 2).pow(2) - x(r, 1), x(r, 2) * x(r, 1) - Polynomial::constant(r, 1)}, r);
  expect_groebner(gb);
  EXPECT_TRUE(in_ideal(x(r, 1).pow(3) - Polynomial::constant(r, 1), gb));
  EXPECT_FALSE(in_ideal(x(r, 1) - Polynomial::constant(r, 1), gb));
  EXPECT_TRUE(buchberger({Polynomial(r)}, r).elements.empty());
  EXPECT_EQ(buchberger({Polynomial::constant(r, 5), x(r, 1)}, r).elements,
            std::vector<Polynomial>{Polynomial::constant(r, 1)});
}

TEST(Truncation, NeedsHomogeneousInputAndLimitsQueries) {
  const RingPtr r = ring_R(2);
  EXPECT_FF_ERROR(buchberger({x(r, 2).pow(2) - x(r, 1)}, r, 3), TruncationNeedsHomogeneous);
  const GroebnerBasis gb = buchberger({x(r, 1) * x(r, 2), x(r, 2).pow(2) - x(r, 1).pow(2)}, r, 3);
  EXPECT_EQ(gb.truncation, 3);
  EXPECT_TRUE(in_ideal(x(r, 1).pow(3), gb));
  EXPECT_FF_ERROR(normal_form(x(r, 1).pow(4), gb), BeyondTruncation);
}

TEST(Truncation, AgreesWithFullBasisBelowTheCutoff) {
  const auto gens = lambda_polynomials(5);
  const RingPtr w = ring_W(5);
  const GroebnerBasis full = buchberger(gens, w);
  const GroebnerBasis cut = buchberger(gens, w, 3);
  std::vector<Polynomial> low;
  for (const auto& g : full.elements) {
    if (g.degree() <= 3) low.push_back(g);
  }
  EXPECT_EQ(cut.elements, low);
}

TEST(Kernel, VeroneseConic) {
  const auto kernel = kernel_of_hom(phi_U(2));
  const RingPtr u = ring_U(2);
  auto v = [&](int i, int j) { return Polynomial::variable(u, VariableId::u(i, j, 2)); };
  ASSERT_EQ(kernel.size(), 1u);
  EXPECT_EQ(kernel[0], v(1, 2).pow(2) - v(1, 1) * v(2, 2));
}

TEST(Kernel, VeroneseOfThePlaneIsTheMinorIdeal) {
  const auto kernel = kernel_of_hom(phi_U(3));
  EXPECT_TRUE(ideal_equal(kernel, i2n_generators(3), ring_U(3)));
  EXPECT_EQ(hf_exact(kernel, 2), 6u);
}

TEST(Kernel, FiberOfTheQuadricsAtDimensionFour) {
  const auto kernel = kernel_of_hom(phi_W(4));
  const Homomorphism phi = phi_W(4);
  for (const auto& g : kernel) EXPECT_TRUE(phi(g).is_zero());
  EXPECT_TRUE(ideal_equal(kernel, lambda_polynomials(4), ring_W(4)));
  EXPECT_FALSE(ideal_equal(kernel, lambda_polynomials(4, LambdaPart::L0), ring_W(4)));
}

TEST(Kernel, BudgetIsEnforced) {
  try {
    kernel_of_hom(phi_W(6), Budget::seconds(0));
    ADD_FAILURE() << "expected a budget overrun";
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
    EXPECT_EQ(e.stage(), "kernel_of_hom");
  }
}

TEST(Kernel, PartialMapIsRejected) {
  const RingPtr r = ring_R(2);
  const Homomorphism partial(ring_U(2), r, {{VariableId::u(1, 1, 2), x(r, 1)}});
  EXPECT_FF_ERROR(kernel_of_hom(partial), PartialHomomorphism);
}
