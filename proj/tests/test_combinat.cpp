#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"

using namespace fiberforge;

namespace {

std::set<std::string> names(const Ring& r, const std::vector<Monomial>& ms) {
  std::set<std::string> out;
  for (const auto& m : ms) out.insert(format_monomial(r, m));
  return out;
}

std::vector<Monomial> k_census(const Census& c) {
  std::vector<Monomial> k;
  for (const auto* part : {&c.k0(), &c.k1(), &c.k2()}) k.insert(k.end(), part->begin(), part->end());
  return k;
}

/// Degree-three monomials divisible by some member of the degree-two census.
std::vector<Monomial> cubic_multiples(const Census& c) {
  const auto k = k_census(c);
  std::vector<Monomial> out;
  for (const auto& m : monomials_of_degree(*c.ring(), 3)) {
    if (std::any_of(k.begin(), k.end(), [&m](const Monomial& q) { return q.divides(m); })) out.push_back(m);
  }
  return out;
}

}  // namespace

TEST(Census, DimensionFourMembers) {
  const auto c = census(4);
  const std::set<std::string> expected{"w[1,4]*w[2,3]", "w[2,4]*w[1,3]", "w[3,4]*w[2,4]", "w[3,4]*w[1,4]",
                                       "w[2,4]*w[1,4]", "w[2,4]*w[3,3]", "w[1,4]*w[3,3]", "w[2,4]*w[2,3]",
                                       "w[3,4]^2",      "w[2,4]^2"};
  EXPECT_EQ(names(*c->ring(), k_census(*c)), expected);
  EXPECT_EQ(c->k0().size(), 2u);
  EXPECT_EQ(c->k1().size(), 6u);
  EXPECT_EQ(c->k2().size(), 2u);
}

TEST(Census, MatchesInitialIdealInDegreeTwo) {
  for (int d = 4; d <= 6; ++d) {
    const auto c = census(d);
    const RingPtr w = ring_W(d);
    EXPECT_EQ(names(*w, k_census(*c)), names(*w, initial_monomials_linear(lambda_polynomials(d), 2)))
        << "d=" << d;
  }
}

TEST(Census, ClosedFormsMatchEnumeration) {
  for (int d = 4; d <= 8; ++d) {
    for (auto f : {Family::K0, Family::K1, Family::K2, Family::T, Family::G1, Family::G2, Family::G3, Family::G4,
                   Family::Gsum}) {
      const auto set = enum_census(d, f);
      ASSERT_TRUE(set.expected.has_value());
      EXPECT_EQ(static_cast<long long>(set.members.size()), *set.expected) << to_string(f) << " d=" << d;
    }
  }
}

TEST(Census, SetsSAndTmax) {
  for (int d = 4; d <= 8; ++d) {
    for (int j = 1; j <= d; ++j)
      for (int i = 1; i <= j; ++i) {
        if (i == d && j == d) continue;
        const auto s = enum_census(d, Family::S, {i, j});
        EXPECT_EQ(static_cast<long long>(s.members.size()), count_closed(d, Family::S, {i, j}));
        if (s.members.empty()) {
          EXPECT_FF_ERROR(count_closed(d, Family::Tmax, {i, j}), OutOfTable);
          continue;
        }
        EXPECT_EQ(static_cast<long long>(enum_census(d, Family::Tmax, {i, j}).members.size()),
                  count_closed(d, Family::Tmax, {i, j}));
      }
  }
}

TEST(Census, TIsTheSetOfCubicMultiples) {
  for (int d = 4; d <= 7; ++d) {
    const auto c = census(d);
    const auto multiples = cubic_multiples(*c);
    EXPECT_EQ(static_cast<long long>(multiples.size()), count_closed(d, Family::T));
    EXPECT_EQ(names(*c->ring(), enum_census(d, Family::T).members), names(*c->ring(), multiples));
  }
  EXPECT_EQ(count_closed(4, Family::T), 67);
  EXPECT_EQ(count_closed(4, Family::Gsum), 14);
}

TEST(Census, GIsTheRestOfTheCubicInitialIdeal) {
  for (int d = 4; d <= 5; ++d) {
    const auto c = census(d);
    const RingPtr w = ring_W(d);
    const auto in3 = initial_monomials(lambda_polynomials(d), 3, w);
    const auto multiples = names(*w, cubic_multiples(*c));
    std::set<std::string> rest;
    for (const auto& m : in3) {
      if (!multiples.count(format_monomial(*w, m))) rest.insert(format_monomial(*w, m));
    }
    EXPECT_EQ(rest, names(*w, enum_census(d, Family::Gsum).members)) << "d=" << d;
  }
}

TEST(Census, TClausesAgreeWithGreedyAssignment) {
  for (int d = 4; d <= 6; ++d) {
    const auto c = census(d);
    const auto assigned = c->t_by_assignment();
    for (std::size_t ij = 0; ij < c->size(); ++ij) {
      for (auto kl : c->s(ij)) {
        const auto it = assigned.find({ij, kl});
        ASSERT_NE(it, assigned.end());
        EXPECT_EQ(c->t(ij, kl), it->second);
      }
    }
  }
}

TEST(Census, TTableAtDimensionFour) {
  const auto rows = t_table(4);
  ASSERT_EQ(rows.size(), 3u);
  auto sizes = [](const TRow& r) {
    std::vector<long long> out;
    for (const auto& s : r.sizes) out.push_back(s.second);
    return out;
  };
  EXPECT_EQ(rows[0].i, 3);
  EXPECT_EQ(rows[0].j, 4);
  EXPECT_EQ(sizes(rows[0]), (std::vector<long long>{9, 8, 7}));
  EXPECT_EQ(sizes(rows[1]), (std::vector<long long>{8, 7, 6, 5, 4}));
  EXPECT_EQ(sizes(rows[2]), (std::vector<long long>{7, 6}));
}

TEST(Census, VerificationPasses) {
  for (int d = 4; d <= 8; ++d) {
    for (const auto& line : verify_census(d)) {
      EXPECT_EQ(line.status, CheckStatus::Pass) << "d=" << d << " " << line.text();
    }
  }
}

TEST(Census, Errors) {
  EXPECT_FF_ERROR(count_closed(3, Family::K0), DimensionTooSmall);
  EXPECT_FF_ERROR(count_closed(5, Family::S, {1}), BadParams);
  EXPECT_FF_ERROR(count_closed(5, Family::S, {5, 5}), BadParams);
  EXPECT_FF_ERROR(count_closed(5, Family::S, {4, 2}), BadParams);
  EXPECT_FF_ERROR(count_closed(5, Family::Tkl, {3, 4, 2, 4}), OutOfTable);
  EXPECT_FF_ERROR(count_closed(5, Family::Tmax, {1, 3}), OutOfTable);
  EXPECT_FF_ERROR(enum_census(5, Family::Tkl, {3, 4, 3, 5}), NotInS);
  EXPECT_FF_ERROR(enum_census(5, Family::Tkl, {3, 4}), BadParams);
  EXPECT_EQ(parse_family("Gsum"), Family::Gsum);
  EXPECT_FALSE(parse_family("K9").has_value());
  const auto tkl = enum_census(4, Family::Tkl, {3, 4, 2, 4});
  EXPECT_FALSE(tkl.expected.has_value());
  EXPECT_EQ(tkl.members.size(), 8u);
}
