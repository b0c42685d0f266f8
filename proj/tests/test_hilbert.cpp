#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"

using namespace fiberforge;

namespace {

/// A random homogeneous polynomial of degree k.
Polynomial random_form(const RingPtr& r, std::mt19937& rng, int k, int terms) {
  const auto basis = monomials_of_degree(*r, k);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<int> coeff(-4, 4);
  Polynomial f(r);
  for (int t = 0; t < terms; ++t) f += Polynomial::term(r, coeff(rng), basis[pick(rng)]);
  return f;
}

/// dim W_k minus the rank of the images of the degree-k monomials in R.
long long kernel_dim_by_images(int d, int k) {
  const RingPtr w = ring_W(d);
  const RingPtr r = ring_R(d);
  const Homomorphism phi = phi_W(d);
  const auto target = monomials_of_degree(*r, 2 * k);
  std::map<oracle::Exponents, std::size_t> col;
  for (std::size_t c = 0; c < target.size(); ++c) col[oracle::exponents(*r, target[c])] = c;
  std::vector<std::vector<mpq_class>> rows;
  const auto source = monomials_of_degree(*w, k);
  for (const auto& m : source) {
    std::vector<mpq_class> row(target.size());
    const Polynomial image = phi(Polynomial::term(w, 1, m));
    for (const auto& t : image.terms()) row[col.at(oracle::exponents(*r, t.mono))] += t.coeff;
    rows.push_back(std::move(row));
  }
  return static_cast<long long>(source.size()) - static_cast<long long>(oracle::dense_rank(std::move(rows)));
}

}  // namespace

TEST(Monomials, CountAndOrder) {
  const RingPtr w = ring_W(5);
  for (int k = 0; k <= 3; ++k) {
    const auto ms = monomials_of_degree(*w, k);
    EXPECT_EQ(static_cast<long long>(ms.size()), hf_closed(HFKind::W, 5, k));
    for (std::size_t a = 1; a < ms.size(); ++a) EXPECT_TRUE(w->compare(ms[a - 1], ms[a]) > 0);
  }
  // Weighted degree in S: x has weight 1, w weight 3.
  const RingPtr s = ring_S(4);
  const auto s3 = monomials_of_degree(*s, 3);
  EXPECT_EQ(s3.size(), 20u + 9u);
}

TEST(HilbertFunction, RankAgreesWithDenseOracle) {
  std::mt19937 rng(31);
  const RingPtr r = ring_R(4);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Polynomial> gens;
    for (int g = 0; g < 4; ++g) gens.push_back(random_form(r, rng, 2, 3));
    for (int k = 2; k <= 4; ++k) EXPECT_EQ(hf_exact(gens, k), oracle::dense_hf(gens, k));
  }
  const auto lambda = lambda_polynomials(4);
  EXPECT_EQ(hf_exact(lambda, 2), oracle::dense_hf(lambda, 2));
  EXPECT_EQ(hf_exact(lambda, 3), oracle::dense_hf(lambda, 3));
}

TEST(HilbertFunction, FiberKernelDimensionByImageRank) {
  for (int d = 4; d <= 5; ++d) {
    const auto lambda = lambda_polynomials(d);
    for (int k = 2; k <= 3; ++k) {
      const long long by_images = kernel_dim_by_images(d, k);
      EXPECT_EQ(static_cast<long long>(hf_exact(lambda, k)), by_images) << "d=" << d << " k=" << k;
      EXPECT_EQ(hf_closed(HFKind::W, d, k) - hf_closed(HFKind::Fiber, d, k), by_images);
    }
  }
}

TEST(HilbertFunction, ClosedFormsAtDimensionFour) {
  EXPECT_EQ(hf_closed(HFKind::IX2, 4, 2), 10);
  EXPECT_EQ(hf_closed(HFKind::IX3, 4, 3), 81);
  EXPECT_EQ(hf_closed(HFKind::W, 4, 3), 165);
  EXPECT_EQ(hf_closed(HFKind::Fiber, 4, 3), 84);
  EXPECT_EQ(hf_closed(HFKind::IX2, 5, 2), 35);
}

TEST(HilbertFunction, ClosedFormIdentitiesUpToFifty) {
  for (int d = 4; d <= 50; ++d) {
    for (int k : {2, 3}) {
      EXPECT_EQ(hf_closed(HFKind::W, d, k) - hf_closed(HFKind::Fiber, d, k),
                hf_closed(k == 2 ? HFKind::IX2 : HFKind::IX3, d, k));
    }
  }
}

TEST(HilbertFunction, Errors) {
  EXPECT_FF_ERROR(hf_closed(HFKind::IX2, 3, 2), DimensionTooSmall);
  EXPECT_FF_ERROR(hf_closed(HFKind::IX2, 4, 3), OutOfTable);
  EXPECT_FF_ERROR(hf_closed(HFKind::IX3, 4, 2), OutOfTable);
  EXPECT_FF_ERROR(hf_closed(HFKind::Fiber, 4, 1), OutOfTable);
  const RingPtr r = ring_R(2);
  const Polynomial x1 = Polynomial::variable(r, VariableId::x(1));
  EXPECT_FF_ERROR(hf_exact({x1 * x1 - x1}, 2), NotHomogeneous);
  EXPECT_EQ(hf_exact({}, 2, r), 0u);
}

TEST(InitialMonomials, EchelonAndGroebnerAgree) {
  std::mt19937 rng(37);
  const RingPtr r = ring_R(4);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Polynomial> gens;
    for (int g = 0; g < 3; ++g) gens.push_back(random_form(r, rng, 2, 4));
    for (int k = 2; k <= 3; ++k) {
      auto linear = initial_monomials_linear(gens, k);
      std::sort(linear.begin(), linear.end(), [&r](const Monomial& a, const Monomial& b) { return r->compare(a, b) > 0; });
      EXPECT_EQ(linear, initial_monomials(gens, k, r));
      EXPECT_EQ(linear.size(), hf_exact(gens, k));
    }
  }
}
