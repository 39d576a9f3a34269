#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "specht/specht_ideal.hpp"

using namespace specht;

namespace {

Polynomial x(int n, int v) { return Polynomial::variable(n, v); }
Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

std::set<oracles::Exps> gens_of(const MonomialIdeal& I) {
  std::set<oracles::Exps> s;
  for (const auto& g : I.generators()) s.insert(g.exponents());
  return s;
}

std::vector<Partition> nontrivial(int n) {
  std::vector<Partition> out;
  for (auto& p : enumerate_partitions(n))
    if (p.length() >= 2) out.push_back(p);
  return out;
}

}  // namespace

TEST(SpechtPolynomial, Examples) {
  auto t = Tableau::parse("3,5,1,7/4,2/6");
  const int n = 7;
  auto expect = (x(n, 3) - x(n, 4)) * (x(n, 3) - x(n, 6)) * (x(n, 4) - x(n, 6)) * (x(n, 5) - x(n, 2));
  EXPECT_EQ(specht_polynomial(t), expect);
  EXPECT_EQ(specht_polynomial(Tableau::parse("1,2,3,4")), Polynomial::constant(4, 1));
  EXPECT_EQ(specht_polynomial(Tableau::parse("1,2/3")), x(3, 1) - x(3, 3));
}

TEST(SpechtPolynomial, MatchesOracleProduct) {
  std::mt19937_64 rng(1);
  for (int n = 1; n <= 6; ++n)
    for (const auto& shape : enumerate_partitions(n))
      for (const auto& t : standard_tableaux(shape, VariableOrder(oracles::random_perm(n, rng)))) {
        auto ref = oracles::column_product(t.rows(), n);
        auto f = specht_polynomial(t);
        ASSERT_EQ(f.size(), ref.size()) << t.to_string();
        for (const auto& [e, c] : ref) EXPECT_EQ(f.coefficient(Monomial(e)), c);
      }
}

TEST(ClosedForm, Examples) {
  auto id3 = VariableOrder::identity(3);
  EXPECT_EQ(closed_form_initial_monomial(Tableau::parse("1,2/3"), id3), mono({0, 0, 1}));
  EXPECT_EQ(closed_form_initial_monomial(Tableau::parse("1,2/3"), id3),
            leading_monomial(x(3, 1) - x(3, 3), id3));
  auto t = Tableau::parse("1,4/2/3");
  EXPECT_EQ(closed_form_initial_monomial(t, VariableOrder::identity(4)), mono({0, 1, 2, 0}));
  EXPECT_EQ(leading_monomial(specht_polynomial(t), VariableOrder::identity(4)), mono({0, 1, 2, 0}));
  EXPECT_EQ(closed_form_initial_monomial(Tableau::parse("2,3,1"), VariableOrder::parse("3,1,2")), Monomial::one(3));
  EXPECT_THROW(closed_form_initial_monomial(Tableau::parse("3,5,1,7/4,2/6"), VariableOrder::identity(7)),
               std::invalid_argument);
}

TEST(ClosedForm, AgreesWithExpandedLeader) {
  std::mt19937_64 rng(2);
  for (int n = 1; n <= 5; ++n)
    for (int trial = 0; trial < 10; ++trial) {
      auto sigma = oracles::random_perm(n, rng);
      VariableOrder order(sigma);
      for (const auto& shape : enumerate_partitions(n))
        for (const auto& t : standard_tableaux(shape, order))
          EXPECT_EQ(closed_form_initial_monomial(t, order).exponents(),
                    oracles::leading(specht_polynomial(t), sigma))
              << t.to_string() << " sigma=" << order.to_string();
    }
}

TEST(ClosedForm, EqualIffRowEquivalent) {
  std::mt19937_64 rng(4);
  for (int n = 2; n <= 5; ++n)
    for (const auto& shape : enumerate_partitions(n)) {
      auto sigma = oracles::random_perm(n, rng);
      VariableOrder order(sigma);
      // Column-standard fillings by brute force.
      std::vector<int> perm(static_cast<std::size_t>(n));
      std::iota(perm.begin(), perm.end(), 1);
      std::vector<Tableau> cs;
      do {
        std::vector<std::vector<int>> rows;
        std::size_t at = 0;
        for (int len : shape.parts()) {
          rows.emplace_back(perm.begin() + static_cast<long>(at), perm.begin() + static_cast<long>(at) + len);
          at += static_cast<std::size_t>(len);
        }
        Tableau t(rows);
        if (is_column_standard(t, order)) cs.push_back(t);
      } while (std::next_permutation(perm.begin(), perm.end()));
      for (const auto& a : cs)
        for (const auto& b : cs) {
          bool row_equiv = true;
          for (std::size_t r = 0; r < a.rows().size(); ++r) {
            std::set<int> ra(a.rows()[r].begin(), a.rows()[r].end()), rb(b.rows()[r].begin(), b.rows()[r].end());
            row_equiv = row_equiv && ra == rb;
          }
          EXPECT_EQ(closed_form_initial_monomial(a, order) == closed_form_initial_monomial(b, order), row_equiv);
        }
    }
}

TEST(SignCheck, Examples) {
  auto r = transposition_sign_check(Tableau::parse("1,2/3"), 1, 3);
  EXPECT_TRUE(r.negated);
  EXPECT_EQ(r.swapped, x(3, 3) - x(3, 1));
  EXPECT_TRUE(transposition_sign_check(Tableau::parse("1,4/2/3"), 2, 3).negated);
  EXPECT_TRUE(transposition_sign_check(Tableau::parse("1/2/3"), 1, 2).negated);
  EXPECT_THROW(transposition_sign_check(Tableau::parse("1,2/3"), 1, 2), std::invalid_argument);
  EXPECT_THROW(transposition_sign_check(Tableau::parse("1,2/3"), 1, 1), std::invalid_argument);
}

TEST(Generators, LexExamples) {
  auto s = lex_groebner_generators(Partition({2, 1}), VariableOrder::identity(3));
  ASSERT_EQ(s.generators.size(), 2u);
  EXPECT_EQ(s.generators[0].tableau, Tableau::parse("1,2/3"));
  EXPECT_EQ(s.generators[0].polynomial, x(3, 1) - x(3, 3));
  EXPECT_EQ(s.generators[1].tableau, Tableau::parse("1,3/2"));
  EXPECT_EQ(s.generators[1].polynomial, x(3, 1) - x(3, 2));

  EXPECT_EQ(lex_groebner_generators(Partition({2, 2}), VariableOrder::identity(4)).generators.size(), 5u);

  auto one = lex_groebner_generators(Partition({1, 1}), VariableOrder::identity(2));
  ASSERT_EQ(one.generators.size(), 1u);
  EXPECT_EQ(one.generators[0].polynomial, x(2, 1) - x(2, 2));
  EXPECT_THROW(lex_groebner_generators(Partition({3}), VariableOrder::identity(3)), std::invalid_argument);
}

TEST(Generators, UniversalExamples) {
  EXPECT_EQ(universal_groebner_generators(Partition({2, 1}), VariableOrder::identity(3)).generators.size(), 3u);
  auto v = universal_groebner_generators(Partition({1, 1, 1, 1}), VariableOrder::identity(4));
  ASSERT_EQ(v.generators.size(), 1u);
  EXPECT_EQ(v.generators[0].polynomial.size(), 24u);  // Vandermonde in 4 variables
  // Shapes (2,2), (2,1,1), (1,1,1,1): 2 + 3 + 1 standard tableaux.
  EXPECT_EQ(universal_groebner_generators(Partition({2, 2}), VariableOrder::identity(4)).generators.size(), 6u);
  for (const auto& g : universal_groebner_generators(Partition({3, 2}), VariableOrder::parse("5,2,4,1,3")).generators) {
    EXPECT_TRUE(is_standard(g.tableau, VariableOrder::parse("5,2,4,1,3")));
    EXPECT_EQ(g.polynomial, specht_polynomial(g.tableau));
  }
}

TEST(Minimalize, Examples) {
  std::vector<Monomial> in{mono({0, 0, 1, 1}), mono({0, 0, 1, 2}), mono({0, 1, 0, 1}), mono({0, 1, 2, 0})};
  EXPECT_EQ(gens_of(minimalize(in)), (std::set<oracles::Exps>{{0, 0, 1, 1}, {0, 1, 0, 1}, {0, 1, 2, 0}}));
  EXPECT_EQ(minimalize(std::vector{mono({1, 0})}).size(), 1u);
  EXPECT_EQ(gens_of(minimalize(std::vector{mono({1, 0}), mono({1, 1}), mono({2, 0})})),
            (std::set<oracles::Exps>{{1, 0}}));
  EXPECT_THROW(minimalize(std::vector<Monomial>{}), std::invalid_argument);
}

TEST(Minimalize, MatchesBruteForce) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    std::vector<Monomial> ms;
    std::vector<oracles::Exps> raw;
    for (int i = 0; i < 1 + static_cast<int>(rng() % 8); ++i) {
      oracles::Exps e(static_cast<std::size_t>(n));
      for (auto& v : e) v = static_cast<int>(rng() % 3);
      raw.push_back(e);
      ms.emplace_back(e);
    }
    EXPECT_EQ(gens_of(minimalize(ms)), oracles::minimal(raw));
  }
}

TEST(MonomialIdeal, ValidatesAndSerializes) {
  EXPECT_THROW(MonomialIdeal(2, {mono({1, 0}), mono({1, 1})}), std::invalid_argument);
  MonomialIdeal I(3, {mono({0, 0, 1}), mono({0, 1, 0})});
  EXPECT_EQ(I.to_json().dump(), R"({"min_gens":[[0,1,0],[0,0,1]],"n":3})");
  EXPECT_EQ(MonomialIdeal::from_json(I.to_json()), I);
  EXPECT_TRUE(I.contains(mono({4, 1, 0})));
  EXPECT_FALSE(I.contains(mono({4, 0, 0})));
}

TEST(InitialIdeal, Examples) {
  EXPECT_EQ(gens_of(initial_ideal(Partition({2, 1}), VariableOrder::identity(3))),
            (std::set<oracles::Exps>{{0, 1, 0}, {0, 0, 1}}));
  EXPECT_EQ(gens_of(initial_ideal(Partition({2, 2}), VariableOrder::identity(4))),
            (std::set<oracles::Exps>{{0, 0, 1, 1}, {0, 1, 0, 1}, {0, 1, 2, 0}}));
  EXPECT_EQ(gens_of(initial_ideal(Partition({2, 1}), VariableOrder::parse("3,2,1"))),
            (std::set<oracles::Exps>{{1, 0, 0}, {0, 1, 0}}));
  EXPECT_THROW(initial_ideal(Partition({2, 1}), VariableOrder::identity(2)), std::invalid_argument);
}

TEST(InitialIdeal, MatchesExpandedOracle) {
  std::mt19937_64 rng(12);
  for (int n = 2; n <= 5; ++n)
    for (const auto& lambda : nontrivial(n))
      for (int trial = 0; trial < 4; ++trial) {
        auto sigma = oracles::random_perm(n, rng);
        EXPECT_EQ(gens_of(initial_ideal(lambda, VariableOrder(sigma))),
                  oracles::expanded_initial_ideal(lambda.parts(), sigma))
            << lambda.to_string();
      }
}

TEST(InitialIdeal, LexAndUniversalSetsAgree) {
  std::mt19937_64 rng(13);
  for (int n = 2; n <= 6; ++n)
    for (const auto& lambda : nontrivial(n))
      for (int trial = 0; trial < 3; ++trial) {
        VariableOrder order(oracles::random_perm(n, rng));
        std::vector<Monomial> all;
        for (const auto& t : generator_tableaux(lambda, order, GeneratorSet::Universal))
          all.push_back(closed_form_initial_monomial(t, order));
        EXPECT_EQ(minimalize(all), initial_ideal(lambda, order)) << lambda.to_string();
      }
}

TEST(InitialIdeal, Equivariance) {
  std::mt19937_64 rng(14);
  for (int n = 2; n <= 6; ++n)
    for (const auto& lambda : nontrivial(n))
      for (int trial = 0; trial < 3; ++trial) {
        VariableOrder sigma(oracles::random_perm(n, rng));
        VariableOrder rho(oracles::random_perm(n, rng));
        std::vector<int> composed;
        for (int i = 1; i <= n; ++i) composed.push_back(rho.at(sigma.at(i)));
        EXPECT_EQ(initial_ideal(lambda, VariableOrder(composed)), initial_ideal(lambda, sigma).relabeled(rho));
      }
}

TEST(GapAudit, Examples) {
  for (auto p : {Partition({2, 2}), Partition({3, 1}), Partition({4, 2, 1})}) {
    auto a = gap_condition_audit(p, VariableOrder::identity(p.n()));
    EXPECT_TRUE(a.ok()) << p.to_string();
    EXPECT_EQ(a.entries.size(), initial_ideal(p, VariableOrder::identity(p.n())).size());
  }
  auto a = gap_condition_audit(Partition({2, 2}), VariableOrder::identity(4));
  EXPECT_EQ(a.entries.size(), 3u);
}

TEST(GapAudit, NoViolationsUpToSeven) {
  std::mt19937_64 rng(15);
  for (int n = 2; n <= 7; ++n)
    for (const auto& lambda : nontrivial(n))
      for (int trial = 0; trial < 10; ++trial) {
        auto a = gap_condition_audit(lambda, VariableOrder(oracles::random_perm(n, rng)));
        EXPECT_TRUE(a.ok()) << lambda.to_string() << ": " << (a.ok() ? "" : a.violations.front());
      }
}
