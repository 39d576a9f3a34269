#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "specht/combinatorics.hpp"
#include "specht/report.hpp"

namespace specht {

struct VerifyConfig {
  int n_max = 5;
  std::uint64_t seed = 20210101;
  unsigned jobs = 1;
  bool skip_fan = false;
  bool skip_polytope = false;
  bool skip_oracle = false;

  int fan_max_n = 8;
  int exhaustive_pairs_max_n = 6;  // class predictor over all ordered pairs
  std::size_t sampled_pairs = 100000;
  int closed_form_max_n = 6;
  int closed_form_orders = 20;
  int random_orders = 10;
  int oracle_max_n = 5;
  int oracle_orders = 10;
  int elimination_poly_orders = 5;
  int polytope_max_n = 6;
  int braid_max_n = 5;
};

/// Partitions of n with at least two positive parts.
std::vector<Partition> nontrivial_partitions(int n);

/// Deterministic random generator for one (check, instance) stream.
std::mt19937_64 sample_rng(std::uint64_t seed, const std::string& stream);

VariableOrder random_order(int n, std::mt19937_64& rng);
/// count distinct random orders (all of S_n when count >= n!), ascending.
std::vector<VariableOrder> sample_orders(int n, int count, std::mt19937_64& rng);

/// Runs every structural check for all partitions of 2..n_max.
Report run_verify(const VerifyConfig& config);

}  // namespace specht
