#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "specht/errors.hpp"
#include "specht/fan.hpp"
#include "specht/oracle.hpp"
#include "specht/specht_ideal.hpp"

using namespace specht;
using namespace specht::oracle;

namespace {

Polynomial x(int n, int i) { return Polynomial::variable(n, i); }

std::vector<Polynomial> polys(const SpechtSystem& s) {
  std::vector<Polynomial> out;
  for (const auto& g : s.generators) out.push_back(g.polynomial);
  return out;
}

MonomialIdeal marks_ideal(const MarkedBasis& b, int) {
  std::vector<Monomial> m;
  for (const auto& e : b.elements()) m.push_back(e.marked);
  return minimalize(m);
}

std::vector<Partition> nontrivial(int n) {
  std::vector<Partition> out;
  for (const auto& p : enumerate_partitions(n))
    if (p.length() >= 2) out.push_back(p);
  return out;
}

}  // namespace

TEST(Reduce, Examples) {
  auto id = VariableOrder::identity(3);
  MarkedBasis self({x(3, 1) - x(3, 3)}, id);
  EXPECT_EQ(self.elements()[0].marked, Monomial({0, 0, 1}));
  EXPECT_TRUE(reduce(x(3, 1) - x(3, 3), self).is_zero());

  MarkedBasis b21(polys(lex_groebner_generators(Partition({2, 1}), id)), id);
  EXPECT_EQ(b21.size(), 2u);
  EXPECT_TRUE(reduce(x(3, 1) * (x(3, 2) - x(3, 3)), b21).is_zero());

  auto one = reduce(Polynomial::constant(3, 1), b21);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one.leading_monomial(), Monomial::one(3));
  EXPECT_EQ(one.leading_coefficient(), Rational(1));

  EXPECT_THROW(reduce(x(3, 1), MarkedBasis(std::vector<Polynomial>{}, id)), std::invalid_argument);
}

TEST(Reduce, RemainderHasNoDivisibleTerm) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    VariableOrder s(oracles::random_perm(4, rng));
    MarkedBasis b(polys(lex_groebner_generators(Partition({2, 2}), s)), s);
    Polynomial f(4);
    for (int t = 0; t < 6; ++t) {
      std::vector<int> e(4);
      for (auto& v : e) v = static_cast<int>(rng() % 3);
      f = f + Polynomial::monomial(Monomial(e), static_cast<long>(rng() % 7) - 3);
    }
    auto r = reduce(f, b);
    for (const auto& [m, c] : r.terms())
      for (const auto& el : b.elements()) EXPECT_FALSE(el.marked.divides(m));
  }
}

TEST(SPolynomial, Examples) {
  auto id = VariableOrder::identity(3);
  auto s = s_polynomial(x(3, 1) - x(3, 3), x(3, 1) - x(3, 2), id);
  ASSERT_EQ(s.size(), 2u);
  for (const auto& [m, c] : s.terms()) {
    EXPECT_TRUE(m == Monomial({1, 1, 0}) || m == Monomial({1, 0, 1})) << m;
    EXPECT_EQ(abs(c), Rational(1));
  }
  auto f = x(3, 1) * x(3, 2) - x(3, 3);
  EXPECT_TRUE(s_polynomial(f, f, id).is_zero());
  EXPECT_TRUE(s_polynomial(x(3, 2), x(3, 3), id).is_zero());
  EXPECT_THROW(s_polynomial(Polynomial(3), f, id), std::invalid_argument);
}

TEST(Certify, Examples) {
  auto id = VariableOrder::identity(3);
  auto c21 = certify_groebner(MarkedBasis(polys(lex_groebner_generators(Partition({2, 1}), id)), id));
  EXPECT_TRUE(c21.ok());
  EXPECT_EQ(c21.pairs_total, 1u);

  auto id4 = VariableOrder::identity(4);
  auto gens = polys(lex_groebner_generators(Partition({2, 2}), id4));
  ASSERT_EQ(gens.size(), 5u);
  auto c22 = certify_groebner(MarkedBasis(gens, id4));
  EXPECT_TRUE(c22.ok());
  EXPECT_EQ(c22.pairs_total, 10u);
  EXPECT_EQ(c22.pairs_skipped_coprime + c22.pairs_reduced, c22.pairs_total);

  int failing = 0;
  for (std::size_t drop = 0; drop < gens.size(); ++drop) {
    auto g = gens;
    g.erase(g.begin() + static_cast<long>(drop));
    if (!certify_groebner(MarkedBasis(g, id4)).ok()) ++failing;
  }
  EXPECT_GT(failing, 0);

  // Classic non-basis: x2*x3 - x1 and x3^2 - x2 leave a nonzero remainder.
  auto bad = certify_groebner(MarkedBasis({x(3, 2) * x(3, 3) - x(3, 1), x(3, 3) * x(3, 3) - x(3, 2)}, id));
  EXPECT_FALSE(bad.ok());
  ASSERT_EQ(bad.failures.size(), 1u);
}

TEST(Membership, CombinationsReduceToZero) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 2);
    const auto parts = nontrivial(n);
    const auto& lambda = parts[rng() % parts.size()];
    VariableOrder s(oracles::random_perm(n, rng));
    auto gens = polys(lex_groebner_generators(lambda, s));
    MarkedBasis b(gens, s);
    Polynomial f(n);
    for (const auto& g : gens) {
      Polynomial mult(n);
      for (int t = 0; t < 2; ++t) {
        std::vector<int> e(static_cast<std::size_t>(n));
        for (auto& v : e) v = static_cast<int>(rng() % 2);
        mult = mult + Polynomial::monomial(Monomial(e), static_cast<long>(rng() % 5) - 2);
      }
      f = f + mult * g;
    }
    EXPECT_TRUE(reduce(f, b).is_zero()) << lambda << " " << s;
    // Adding a nonzero remainder-free term breaks membership.
    auto shifted = f + Polynomial::constant(n, 1);
    EXPECT_FALSE(reduce(shifted, b).is_zero());
  }
}

TEST(Certify, LexAndUniversalUpToFive) {
  std::mt19937_64 rng(2021);
  for (int n = 2; n <= 5; ++n)
    for (const auto& lambda : nontrivial(n))
      for (int t = 0; t < 10; ++t) {
        VariableOrder s = t == 0 ? VariableOrder::identity(n) : VariableOrder(oracles::random_perm(n, rng));
        MarkedBasis lex(polys(lex_groebner_generators(lambda, s)), s);
        EXPECT_TRUE(certify_groebner(lex).ok()) << lambda << " " << s;
        EXPECT_EQ(marks_ideal(lex, n), initial_ideal(lambda, s)) << lambda << " " << s;
        MarkedBasis uni(polys(universal_groebner_generators(lambda, s)), s);
        EXPECT_TRUE(certify_groebner(uni).ok()) << lambda << " " << s;
        EXPECT_EQ(marks_ideal(uni, n), initial_ideal(lambda, s)) << lambda << " " << s;
      }
}

TEST(Elimination, Examples) {
  EXPECT_TRUE(elimination_polynomial_check(Partition({2, 2}), VariableOrder::identity(4)).ok());
  EXPECT_TRUE(elimination_polynomial_check(Partition({3, 1}), VariableOrder::identity(4)).ok());
  auto r21 = elimination_polynomial_check(Partition({2, 1}), VariableOrder::identity(3));
  // hat(2,1) = (1,1): one generator x1 - x2 in the first two variables.
  EXPECT_TRUE(r21.ok()) << r21.detail;
  EXPECT_TRUE(elimination_polynomial_check(Partition({1, 1, 1}), VariableOrder::identity(3)).skipped);
  EXPECT_THROW(elimination_polynomial_check(Partition({3, 3}), VariableOrder::identity(6)), CapacityError);
}

TEST(Elimination, AllApplicableUpToFive) {
  std::mt19937_64 rng(77);
  int ran = 0;
  for (int n = 3; n <= 5; ++n)
    for (const auto& lambda : nontrivial(n))
      for (int t = 0; t < 5; ++t) {
        VariableOrder s(oracles::random_perm(n, rng));
        auto r = elimination_polynomial_check(lambda, s);
        if (r.skipped) continue;
        ++ran;
        EXPECT_TRUE(r.ok()) << lambda << " " << s << ": " << (r.failures.empty() ? "" : r.failures[0]);
      }
  EXPECT_GT(ran, 20);
}

TEST(ReportJson, Schema) {
  auto id = VariableOrder::identity(3);
  auto c = certify_groebner(MarkedBasis(polys(lex_groebner_generators(Partition({2, 1}), id)), id));
  auto j = certificate_json("groebner_lex", Partition({2, 1}), id, c);
  for (const char* key : {"check", "lambda", "sigma", "pairs_total", "pairs_skipped_coprime", "pairs_reduced", "failures"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_TRUE(j["failures"].is_array());
  auto e = elimination_json(Partition({2, 2}), VariableOrder::identity(4),
                            elimination_polynomial_check(Partition({2, 2}), VariableOrder::identity(4)));
  EXPECT_EQ(e["check"], "elimination_polynomial");
  EXPECT_TRUE(e["failures"].empty());
}
