#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"

using namespace fiberforge;

TEST(Quadrics, ImagesOfTheMaps) {
  const RingPtr r = ring_R(4);
  auto x = [&](int i) { return Polynomial::variable(r, VariableId::x(i)); };
  EXPECT_EQ(quadric(2, 3, 4), x(2) * x(3));
  EXPECT_EQ(quadric(3, 2, 4), x(2) * x(3));
  EXPECT_EQ(quadric(2, 2, 4), x(2) * x(2) - x(4) * x(4));
  EXPECT_FF_ERROR(quadric(4, 4, 4), BadIndex);
  const RingPtr w = ring_W(4);
  EXPECT_EQ(phi_W(4)(Polynomial::variable(w, VariableId::w(1, 1, 4))), x(1) * x(1) - x(4) * x(4));
  const RingPtr u = ring_U(4);
  EXPECT_EQ(epsilon(Polynomial::variable(w, VariableId::w(2, 2, 4)), 4),
            Polynomial::variable(u, VariableId::u(2, 2, 4)) - Polynomial::variable(u, VariableId::u(4, 4, 4)));
  EXPECT_EQ(phi_U(4)(Polynomial::variable(u, VariableId::u(4, 4, 4))), x(4) * x(4));
}

TEST(Quadrics, EpsilonFactorsThePhiMaps) {
  // phi_U(epsilon(f)) = phi_W(f) on random polynomials.
  std::mt19937 rng(41);
  for (int d = 4; d <= 5; ++d) {
    for (int trial = 0; trial < 20; ++trial) {
      const Polynomial f = oracle::random_poly(ring_W(d), rng, 4, 1);
      EXPECT_EQ(phi_U(d)(epsilon(f, d)), phi_W(d)(f));
    }
  }
}

TEST(Lambda, GeneratorsLieInTheKernel) {
  for (int d = 4; d <= 6; ++d) {
    const Homomorphism phi = phi_W(d);
    const auto& gb = i2n_basis(d);
    for (const auto& g : generators_lambda(d)) {
      EXPECT_TRUE(phi(g.value).is_zero()) << g.provenance;
      EXPECT_TRUE(check_criterion_c(g.value, gb)) << g.provenance;
      EXPECT_EQ(g.leading, g.value.leading_monomial());
      EXPECT_TRUE(g.value.is_homogeneous());
      EXPECT_EQ(g.value.degree(), 2);
    }
  }
}

TEST(Lambda, CriterionDetectsNonMembers) {
  const int d = 4;
  const auto& gb = i2n_basis(d);
  const RingPtr w = ring_W(d);
  std::mt19937 rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    const Polynomial f = oracle::random_poly(w, rng, 3, 1);
    EXPECT_EQ(check_criterion_c(f, gb), phi_W(d)(f).is_zero());
  }
  EXPECT_TRUE(check_criterion_c(Polynomial(w), gb));
}

TEST(Lambda, PartsAreDisjointAndCoverAll) {
  for (int d = 4; d <= 6; ++d) {
    std::set<std::string> all;
    for (const auto& g : lambda_polynomials(d)) all.insert(format_polynomial(g.monic()));
    std::set<std::string> parts;
    for (auto p : {LambdaPart::L0, LambdaPart::L1, LambdaPart::L2}) {
      for (const auto& g : lambda_polynomials(d, p)) parts.insert(format_polynomial(g.monic()));
    }
    EXPECT_EQ(all, parts);
    for (const auto& g : generators_lambda(d)) EXPECT_TRUE(g.part >= 0 && g.part <= 2);
  }
  EXPECT_FF_ERROR(generators_lambda(3), DimensionTooSmall);
}

TEST(Lambda, ZeroCornerMattersForTheFiber) {
  // Lambda_0 alone misses the degree-two part of the kernel.
  EXPECT_LT(hf_exact(lambda_polynomials(4, LambdaPart::L0), 2), hf_exact(lambda_polynomials(4), 2));
  EXPECT_EQ(static_cast<long long>(hf_exact(lambda_polynomials(4), 2)), hf_closed(HFKind::IX2, 4, 2));
}

TEST(MinorIdeal, GeneratorsOverU) {
  EXPECT_EQ(i2n_generators(3).size(), 6u);
  EXPECT_EQ(i2n_generators(4).size(), 21u);
  EXPECT_EQ(hf_exact(i2n_generators(4), 2), 20u);
  for (const auto& g : i2n_generators(4)) EXPECT_TRUE(in_ideal(g, i2n_basis(4)));
}

TEST(Catalogue, EntriesLieInTheKernel) {
  for (int d = 4; d <= 6; ++d) {
    const Homomorphism phi = phi_W(d);
    for (const auto& e : full_catalogue(d)) EXPECT_TRUE(phi(e.value).is_zero()) << e.label();
  }
}

TEST(Catalogue, DisagreementsAreAllDocumented) {
  for (int d = 4; d <= 6; ++d) {
    for (const auto& line : catalogue_errata_report(d)) {
      EXPECT_TRUE(line.documented) << line.entry.label();
      EXPECT_TRUE(line.witness_ok) << line.entry.label();
    }
    for (const auto& e : full_catalogue(d)) {
      if (!needs_erratum(e)) EXPECT_EQ(e.leading(), e.claimed_leading) << e.label();
    }
  }
}

TEST(Catalogue, KnownErratumWitness) {
  const int d = 5;
  const auto e = named_generator("f1", {3, 4}, d);
  const auto& erratum = catalogue_errata().at("f1");
  const Polynomial wit = erratum.witness(e.params, d);
  EXPECT_EQ(wit.leading_monomial(), e.claimed_leading);
  EXPECT_TRUE(phi_W(d)(wit).is_zero());
}

TEST(Catalogue, ParameterChecks) {
  EXPECT_FF_ERROR(named_generator("f1", {3}, 5), BadParams);
  EXPECT_FF_ERROR(named_generator("f1", {2, 4}, 5), BadParams);
  EXPECT_FF_ERROR(named_generator("nope", {3, 4}, 5), BadParams);
  EXPECT_FF_ERROR(named_generator("f1", {3, 4}, 3), DimensionTooSmall);
  EXPECT_EQ(basic_catalogue_keys().size(), 11u);
  EXPECT_EQ(family_catalogue_keys().size(), 16u);
}
