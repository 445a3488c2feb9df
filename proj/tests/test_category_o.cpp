#include <gtest/gtest.h>

#include <random>

#include "fockkit/category_o.hpp"

using namespace fockkit;

namespace {

MultiPartition box_at(int p, int l) {
  std::vector<Partition> comps(static_cast<std::size_t>(l));
  comps[p - 1] = Partition({1});
  return MultiPartition(comps);
}

Composition random_composition(std::mt19937_64& rng, int l, int lo, int hi) {
  std::vector<int> parts;
  for (int p = 0; p < l; ++p) parts.push_back(lo + static_cast<int>(rng() % (hi - lo + 1)));
  return Composition(parts);
}

const MultiPartition& pick(std::mt19937_64& rng, const std::vector<MultiPartition>& v) {
  return v[rng() % v.size()];
}

}  // namespace

TEST(Params, FromNuKappaAtLevelMinusOne) {
  auto p = params_from_nu_kappa({1, 1, 4, 1}, -1);
  EXPECT_EQ(p.h, -1);
  ASSERT_EQ(p.H.size(), 3u);
  EXPECT_EQ(p.H[0], Rational(-9, 4));
  EXPECT_EQ(p.H[1], Rational(3, 4));
  EXPECT_EQ(p.H[2], Rational(3, 4));
  EXPECT_EQ(p.h_p(4), Rational(3, 4));
}

TEST(Params, SumOfHpVanishes) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 50; ++t) {
    auto nu = random_composition(rng, 1 + t % 4, 0, 4);
    if (nu.total() == 0) continue;
    Rational kappa(-static_cast<int>(1 + rng() % 6), 1 + rng() % 3);
    auto p = params_from_nu_kappa(nu, kappa);
    Rational acc = 0;
    for (int q = 1; q <= p.level(); ++q) acc += p.h_p(q);
    EXPECT_EQ(acc, 0);
  }
}

TEST(Theta, SingleBoxValues) {
  auto p = params_from_nu_kappa({2, 1, 6, 1}, -2);
  EXPECT_EQ(p.h, Rational(-1, 2));
  std::vector<Rational> got;
  for (int q : {3, 2, 1, 4}) got.push_back(theta(box_at(q, 4).reversed(), p));
  EXPECT_EQ(got, (std::vector<Rational>{-7, -4, -3, 0}));
}

TEST(Theta, SingleBoxChain) {
  auto p = params_from_nu_kappa({2, 1, 6, 1}, -2);
  auto b = [](int q) { return box_at(q, 4).reversed(); };
  EXPECT_EQ(cherednik_order(b(3), b(2), p), CherednikOrder::lambda_greater);
  EXPECT_EQ(cherednik_order(b(2), b(1), p), CherednikOrder::lambda_greater);
  EXPECT_EQ(cherednik_order(b(1), b(4), p), CherednikOrder::lambda_greater);
  EXPECT_EQ(cherednik_order(b(4), b(3), p), CherednikOrder::mu_greater);
  EXPECT_EQ(cherednik_order(b(2), b(2), p), CherednikOrder::incomparable);
}

TEST(Theta, TrivialCases) {
  CherednikParams l1{Rational(1, 3), {}};
  EXPECT_EQ(theta(MultiPartition{Partition({1})}, l1), 0);
  // level one: only the content term survives
  MultiPartition lam{Partition({2, 1, 1})};
  EXPECT_EQ(theta(lam, l1), -Rational(1, 3) * (Rational(3) - Rational(1)));
  CherednikParams l2{Rational(1, 2), {Rational(1, 3)}};
  MultiPartition a{Partition({1}), Partition({})}, b{Partition({}), Partition({1})};
  EXPECT_EQ(theta(b, l2) - theta(a, l2), Rational(2, 3));
  EXPECT_EQ(cherednik_order(a, b, l2), CherednikOrder::incomparable);
}

TEST(PiShift, Examples) {
  EXPECT_EQ(pi_shift_sec6({1, 1}, -4), (std::vector<Rational>{2, 4}));
  auto p8 = pi_shift_sec8({2, 3, 1});
  auto r = rho(6);
  std::vector<Rational> plus;
  for (int i = 0; i < 6; ++i) plus.push_back(p8[i] + r[i]);
  EXPECT_EQ(plus, (std::vector<Rational>{2, 1, 3, 2, 1, 1}));
  EXPECT_EQ(pi_shift_sec8({4}), std::vector<Rational>(4, 0));
  EXPECT_EQ(pi_shift_sec6({1, 1, 4, 1}, -8), (std::vector<Rational>{2, 4, 6, 6, 6, 6, 8}));
}

TEST(ThetaPairing, SingleBoxesAndDiagonal) {
  Composition nu{2, 1, 6, 1};
  for (int p = 1; p <= 4; ++p)
    for (int q = 1; q <= 4; ++q) EXPECT_TRUE(check_identity_6_3(box_at(p, 4), box_at(q, 4), nu, -2));
  auto s = theta_pairing_sides(box_at(2, 4), box_at(2, 4), nu, -2);
  EXPECT_EQ(s.lhs, 0);
  EXPECT_EQ(s.rhs, 0);
}

TEST(ThetaPairing, Randomized) {
  std::mt19937_64 rng(63);
  int checked = 0;
  for (int t = 0; t < 300; ++t) {
    auto nu = random_composition(rng, 1 + static_cast<int>(rng() % 4), 1, 3);
    Rational kappa(-static_cast<int>(1 + rng() % 7), 1 + rng() % 4);
    int n = static_cast<int>(rng() % 4);
    auto labels = multipartitions_fitting(n, nu);
    const auto& lam = pick(rng, labels);
    const auto& mu = pick(rng, labels);
    auto sides = theta_pairing_sides(lam, mu, nu, kappa);
    EXPECT_EQ(sides.lhs, sides.rhs) << nu << " " << lam << " " << mu;
    ++checked;
  }
  EXPECT_GE(checked, 200);
}

TEST(ThetaOrder, ImpliedByTriangleOrder) {
  std::mt19937_64 rng(64);
  int related = 0;
  for (int t = 0; t < 200; ++t) {
    auto nu = random_composition(rng, 1 + static_cast<int>(rng() % 3), 1, 3);
    Rational kappa = t % 3 == 0 ? Rational(-static_cast<int>(1 + rng() % 3), 2)
                                : Rational(-static_cast<int>(1 + rng() % 3));
    int n = 1 + static_cast<int>(rng() % 2);
    auto labels = multipartitions_fitting(n, nu);
    const auto& lam = pick(rng, labels);
    const auto& mu = pick(rng, labels);
    if (!order_triangle_leq(sec6_weight(mu, nu, kappa), sec6_weight(lam, nu, kappa), nu)) continue;
    ++related;
    EXPECT_TRUE(cherednik_leq(mu.reversed(), lam.reversed(), params_from_nu_kappa(nu, kappa)))
        << nu << " kappa=" << to_string(kappa) << " " << lam << " " << mu;
  }
  EXPECT_GT(related, 0);
}

TEST(DownSet, StaysInsideMultipartitions) {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 60; ++t) {
    const int l = 1 + static_cast<int>(rng() % 2);
    IntTuple s;
    for (int p = 0; p < l; ++p) s.push_back(1 + static_cast<std::int64_t>(rng() % 3));
    int e = 2 + static_cast<int>(rng() % 2);
    int n = 1 + static_cast<int>(rng() % 2);
    auto nu = composition_of_charge(s);
    auto labels = multipartitions_fitting(n, nu);
    const auto& lam = pick(rng, labels);
    auto pi = pi_shift_sec8(s);
    for (const auto& y : triangle_down_set(sec8_weight(lam, s, e), nu)) {
      std::int64_t total = 0;
      for (std::size_t i = 0; i < pi.size(); ++i) {
        Rational v = y.classical[i] - pi[i];
        ASSERT_TRUE(is_integer(v));
        EXPECT_GE(v, 0);
        total += static_cast<std::int64_t>(numerator_of(v));
      }
      EXPECT_EQ(total, n);
    }
  }
}

TEST(BlockDecomposition, EmptyMultipartition) {
  auto d = block_decomposition_numbers(0, {2, 1}, 2);
  ASSERT_EQ(d.entries.size(), 1u);
  EXPECT_EQ(d.entries[0][0], 1);
}

TEST(BlockDecomposition, AgreesWithFockRoute) {
  for (const IntTuple& s : {IntTuple{2, 1}, IntTuple{1, 2}, IntTuple{2, 2}, IntTuple{3, 1}})
    for (int n = 0; n <= 2; ++n) {
      auto blk = block_decomposition_numbers(n, s, 2, {.use_alternating_sum = true});
      auto fock = decomposition_matrices(n, s, 2).nabla_minus;
      ASSERT_EQ(blk.rows.size(), fock.rows.size());
      std::map<MultiPartition, std::size_t> at;
      for (std::size_t i = 0; i < fock.rows.size(); ++i) at[fock.rows[i]] = i;
      for (std::size_t i = 0; i < blk.rows.size(); ++i)
        for (std::size_t j = 0; j < blk.rows.size(); ++j)
          EXPECT_EQ(blk.entries[i][j], fock.entries[at.at(blk.rows[i].reversed())][at.at(blk.cols[j].reversed())])
              << blk.rows[i] << " " << blk.cols[j];
    }
}

TEST(BlockDecomposition, UnitriangularAndNonnegative) {
  for (const IntTuple& s : {IntTuple{2, 1}, IntTuple{3}, IntTuple{1, 1, 1}})
    for (int e : {2, 3})
      for (int n = 1; n <= 2; ++n) {
        auto d = block_decomposition_numbers(n, s, e);
        auto nu = composition_of_charge(s);
        for (std::size_t i = 0; i < d.rows.size(); ++i) {
          EXPECT_EQ(d.entries[i][i], 1);
          for (std::size_t j = 0; j < d.rows.size(); ++j) {
            EXPECT_GE(d.entries[i][j], 0);
            if (i != j && d.entries[i][j] != 0) {
              EXPECT_TRUE(order_triangle_leq(sec8_weight(d.cols[j], s, e), sec8_weight(d.rows[i], s, e), nu));
            }
          }
        }
      }
}

TEST(BlockDecomposition, LevelMinusOnePattern) {
  Composition nu{1, 1, 4, 1};
  auto d = block_decomposition_sec6(1, nu, -1);
  ASSERT_EQ(d.rows.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      bool below = order_triangle_leq(sec6_weight(d.cols[j], nu, -1), sec6_weight(d.rows[i], nu, -1), nu);
      EXPECT_EQ(d.entries[i][j], below ? 1 : 0) << d.rows[i] << " " << d.cols[j];
    }
}

TEST(BlockDecomposition, EmptyLabelIsNotSimple) {
  Composition nu{1, 1, 4, 1};
  auto top = sec6_weight(MultiPartition::empty_of_level(4), nu, -1);
  auto below = triangle_down_set(top, nu);
  ASSERT_GT(below.size(), 1u);
  auto rows = multiplicities_from_weights(below, nu);
  std::size_t at = std::find(below.begin(), below.end(), top) - below.begin();
  int factors = 0;
  for (std::size_t j = 0; j < below.size(); ++j)
    if (j != at && rows[at][j] != 0) ++factors;
  EXPECT_GT(factors, 0);
}
