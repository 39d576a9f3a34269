#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "specht/errors.hpp"
#include "specht/fan.hpp"

using namespace specht;

namespace {

std::vector<Partition> nontrivial(int n) {
  std::vector<Partition> out;
  for (auto& p : enumerate_partitions(n))
    if (p.length() >= 2) out.push_back(p);
  return out;
}

}  // namespace

TEST(DegreeStatistic, Examples) {
  auto d = degree_statistic(Partition({2, 2}), VariableOrder::identity(4));
  EXPECT_EQ(d.values, (std::vector<int>{0, 1, 1, 2}));
  EXPECT_EQ(d.at(d.order.at(2)), 1);
  EXPECT_EQ(d.at(d.order.at(3)), 1);
  EXPECT_EQ(degree_statistic(Partition({1, 1}), VariableOrder::identity(2)).values, (std::vector<int>{0, 1}));
  EXPECT_EQ(degree_statistic(Partition({2, 1}), VariableOrder::identity(3)).values, (std::vector<int>{0, 1, 1}));
}

TEST(DegreeStatistic, TiesForTwoTwoUnderEveryOrder) {
  for (const auto& s : all_orders(4)) {
    auto d = degree_statistic(Partition({2, 2}), s);
    EXPECT_EQ(d.at(s.at(2)), 1);
    EXPECT_EQ(d.at(s.at(3)), 1);
  }
}

TEST(Monotonicity, Examples) {
  auto r = monotonicity_check(Partition({2, 2}), VariableOrder::identity(4));
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.strict, (std::vector<bool>{true, false, true}));

  auto col = monotonicity_check(Partition({1, 1, 1}), VariableOrder::identity(3));
  EXPECT_TRUE(col.ok());
  EXPECT_EQ(col.strict, (std::vector<bool>{true, true}));
  EXPECT_EQ(degree_statistic(Partition({1, 1, 1}), VariableOrder::identity(3)).values, (std::vector<int>{0, 1, 2}));

  auto row = monotonicity_check(Partition({4}), VariableOrder::identity(4));
  EXPECT_TRUE(row.ok());
  EXPECT_EQ(row.strict, (std::vector<bool>(3, false)));
}

TEST(Monotonicity, HoldsForRandomOrders) {
  std::mt19937_64 rng(21);
  for (int n = 2; n <= 7; ++n)
    for (const auto& lambda : enumerate_partitions(n))
      for (int trial = 0; trial < 5; ++trial) {
        auto r = monotonicity_check(lambda, VariableOrder(oracles::random_perm(n, rng)));
        EXPECT_TRUE(r.ok()) << lambda.to_string();
      }
}

TEST(EnumerateFan, Examples) {
  auto f21 = enumerate_fan(Partition({2, 1}));
  EXPECT_EQ(f21.distinct_count(), 3u);
  EXPECT_EQ(f21.total_orders, 6u);
  for (const auto& [ideal, orders] : f21.classes) EXPECT_EQ(orders.size(), 2u);
  EXPECT_EQ(enumerate_fan(Partition({2, 2})).distinct_count(), 24u);
  EXPECT_EQ(enumerate_fan(Partition({3, 1})).distinct_count(), 4u);
}

TEST(EnumerateFan, CountsMatchExpandedOracle) {
  for (int n = 2; n <= 4; ++n)
    for (const auto& lambda : nontrivial(n)) {
      std::set<std::set<oracles::Exps>> distinct;
      for (const auto& s : all_orders(n)) distinct.insert(oracles::expanded_initial_ideal(lambda.parts(), s.one_line()));
      EXPECT_EQ(enumerate_fan(lambda).distinct_count(), distinct.size()) << lambda.to_string();
    }
}

TEST(EnumerateFan, CapacityAndDeterminism) {
  EXPECT_THROW(enumerate_fan(Partition({8, 1})), CapacityError);
  EXPECT_THROW(enumerate_fan(Partition({3, 2}), {4, 1}), CapacityError);
  auto a = enumerate_fan(Partition({3, 2, 1}), {8, 1}).to_json().dump();
  auto b = enumerate_fan(Partition({3, 2, 1}), {8, 4}).to_json().dump();
  EXPECT_EQ(a, b);
}

TEST(EnumerateFan, ClassesPartitionTheOrdersAndRepresentativesAreSmallest) {
  auto f = enumerate_fan(Partition({3, 1, 1}));
  std::set<VariableOrder> seen;
  for (const auto& [ideal, orders] : f.classes) {
    EXPECT_TRUE(std::is_sorted(orders.begin(), orders.end()));
    for (const auto& s : orders) EXPECT_TRUE(seen.insert(s).second);
  }
  EXPECT_EQ(seen.size(), 120u);
}

TEST(TheoremCount, Examples) {
  EXPECT_EQ(theorem_count(Partition({2, 2})), 24);
  for (int n = 3; n <= 12; ++n) EXPECT_EQ(theorem_count(Partition({n - 1, 1})), n);
  EXPECT_EQ(theorem_count(Partition({4, 2, 1})), 2520);
  EXPECT_EQ(theorem_count(Partition({20, 10, 1})).get_str(), "2265993897205115414937600000");
}

TEST(TheoremCount, MatchesEnumerationUpToSix) {
  for (int n = 2; n <= 6; ++n)
    for (const auto& lambda : nontrivial(n)) {
      auto f = enumerate_fan(lambda);
      EXPECT_EQ(theorem_count(lambda), f.distinct_count()) << lambda.to_string();
      for (const auto& [ideal, orders] : f.classes) EXPECT_EQ(orders.size(), factorial(f.k + 1));
      if (lambda.has_repeated_part()) EXPECT_EQ(f.distinct_count(), factorial(n));
    }
}

TEST(OrderClassPredictor, Examples) {
  Partition l21({2, 1});
  EXPECT_TRUE(order_class_predictor(l21, VariableOrder::parse("1,2,3"), VariableOrder::parse("1,3,2")));
  EXPECT_FALSE(order_class_predictor(l21, VariableOrder::parse("1,2,3"), VariableOrder::parse("2,1,3")));
  const auto orders = all_orders(4);
  for (const auto& s : orders)
    for (const auto& t : orders)
      EXPECT_EQ(order_class_predictor(Partition({2, 2}), s, t), s == t);
}

TEST(OrderClassPredictor, AgreesWithIdealEqualityUpToFive) {
  for (int n = 2; n <= 5; ++n)
    for (const auto& lambda : nontrivial(n)) {
      const auto orders = all_orders(n);
      std::vector<MonomialIdeal> ideals;
      for (const auto& s : orders) ideals.push_back(initial_ideal(lambda, s));
      for (std::size_t i = 0; i < orders.size(); ++i)
        for (std::size_t j = 0; j < orders.size(); ++j)
          ASSERT_EQ(order_class_predictor(lambda, orders[i], orders[j]), ideals[i] == ideals[j])
              << lambda.to_string() << " " << orders[i].to_string() << " " << orders[j].to_string();
    }
}

TEST(Elimination, Examples) {
  auto r = elimination_identity_check(Partition({2, 2}), VariableOrder::identity(4));
  EXPECT_TRUE(r.ok) << r.detail;
  EXPECT_EQ(r.hat_lambda, Partition({1, 1, 1}));
  ASSERT_EQ(r.restricted.size(), 1u);
  EXPECT_EQ(r.restricted.generators()[0], Monomial({0, 1, 2}));

  auto r31 = elimination_identity_check(Partition({3, 1}), VariableOrder::identity(4));
  EXPECT_TRUE(r31.ok);
  EXPECT_EQ(r31.expected, MonomialIdeal(3, {Monomial({0, 1, 0}), Monomial({0, 0, 1})}));

  auto r21 = elimination_identity_check(Partition({2, 1}), VariableOrder::identity(3));
  EXPECT_TRUE(r21.ok);
  EXPECT_EQ(r21.expected, MonomialIdeal(2, {Monomial({0, 1})}));

  EXPECT_TRUE(elimination_identity_check(Partition({1, 1, 1}), VariableOrder::identity(3)).skipped);
}

TEST(Elimination, DropLastRenumbers) {
  EXPECT_EQ(drop_last(VariableOrder::parse("4,1,2,3")), VariableOrder::parse("3,1,2"));
  EXPECT_EQ(drop_last(VariableOrder::parse("3,4,1,2")), VariableOrder::parse("2,3,1"));
  EXPECT_EQ(drop_variable(Monomial({1, 2, 3, 4}), 2), Monomial({1, 3, 4}));
}

TEST(Elimination, HoldsForRandomOrders) {
  std::mt19937_64 rng(23);
  for (int n = 3; n <= 7; ++n)
    for (const auto& lambda : nontrivial(n)) {
      if (lambda.part(1) < 2) continue;
      for (int trial = 0; trial < 5; ++trial) {
        auto r = elimination_identity_check(lambda, VariableOrder(oracles::random_perm(n, rng)));
        EXPECT_TRUE(r.skipped || r.ok) << lambda.to_string() << " " << r.detail;
      }
    }
}
