#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "specht/combinatorics.hpp"
#include "specht/polyring.hpp"
#include "specht/specht_ideal.hpp"

namespace specht {

struct FanOptions {
  int max_n = 8;       // exhaustive enumeration over S_n refuses larger n
  unsigned jobs = 1;   // worker threads for the sigma loop
};

/// d_lambda: values[i-1] is the exponent sum of x_i over the closed-form
/// initial monomials of the standard tableaux of shape lambda.
struct DegreeStatistic {
  Partition lambda;
  VariableOrder order;
  std::vector<int> values;

  int at(int var) const { return values[static_cast<std::size_t>(var - 1)]; }
};

DegreeStatistic degree_statistic(const Partition& lambda, const VariableOrder& order);

struct MonotonicityReport {
  /// strict[i-1] describes the step from sigma(i) to sigma(i+1).
  std::vector<bool> strict;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

MonotonicityReport monotonicity_check(const Partition& lambda, const VariableOrder& order);

struct FanSummary {
  Partition lambda;
  int k = 0;
  std::uint64_t total_orders = 0;
  /// Orders per initial ideal, each list ascending in one-line notation.
  std::map<MonomialIdeal, std::vector<VariableOrder>> classes;

  std::size_t distinct_count() const { return classes.size(); }
  nlohmann::json to_json() const;
};

/// All n! permutations of 1..n in lexicographic order.
std::vector<VariableOrder> all_orders(int n);

std::uint64_t factorial(int n);

/// Initial ideals for every variable order, grouped by ideal.
FanSummary enumerate_fan(const Partition& lambda, const FanOptions& options = {});

/// n!/(k+1)! with k the gap statistic of lambda.
Integer theorem_count(const Partition& lambda);

/// Predicts whether sigma and tau give the same initial ideal: they agree on
/// the first n-k-1 positions and as sets on the rest.
bool order_class_predictor(const Partition& lambda, const VariableOrder& sigma, const VariableOrder& tau);

struct EliminationReport {
  bool skipped = false;
  bool ok = false;
  Partition hat_lambda;
  MonomialIdeal restricted;  // min gens of in(I_lambda) free of x_{sigma(n)}, in n-1 variables
  MonomialIdeal expected;    // in(I_hat) for sigma restricted to n-1 positions
  std::string detail;
};

/// Initial-ideal level elimination identity for the largest variable.
EliminationReport elimination_identity_check(const Partition& lambda, const VariableOrder& order);

/// Drops variable `removed` and renumbers x_v (v > removed) to x_{v-1}.
Monomial drop_variable(const Monomial& m, int removed);

/// The order sigma(1..n-1) rewritten on 1..n-1 after dropping sigma(n).
VariableOrder drop_last(const VariableOrder& order);

}  // namespace specht
