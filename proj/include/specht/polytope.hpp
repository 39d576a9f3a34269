#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "specht/combinatorics.hpp"
#include "specht/fan.hpp"
#include "specht/polyring.hpp"
#include "specht/specht_ideal.hpp"

namespace specht {

using Point = std::vector<int>;

/// A finite point set on a common hyperplane sum(x) = const, sorted.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<Point> points);

  const std::vector<Point>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  int dimension() const { return points_.empty() ? 0 : static_cast<int>(points_.front().size()); }
  long coordinate_sum() const;

  nlohmann::json to_json(int k) const;

 private:
  std::vector<Point> points_;
};

/// The closed cone C_{sigma,k}: a chain w_{sigma(1)} <= ... <= w_{sigma(n-k-1)}
/// with each of the last k+1 coordinates bounded below by the chain's top.
struct BraidCone {
  VariableOrder sigma;
  int k = 0;

  BraidCone(VariableOrder s, int k_);
  int n() const { return sigma.size(); }
  /// The vertex of Pi_{n,k} whose normal cone is this cone.
  Point vertex() const;
};

/// Every coordinate permutation of u (the vertex set of P_n(u)).
PointSet permuted_points(std::vector<int> u);

/// Vertices of Pi_{n,k} = P_n(1, 2, ..., n-k-1, n-k, ..., n-k).
PointSet pnk_vertices(int n, int k);

bool cone_membership(const WeightVector& w, const BraidCone& cone);

/// A point strictly inside the cone with pairwise distinct coordinates.
WeightVector interior_sample(const BraidCone& cone, std::uint64_t seed);

/// Dimension of the affine span, by exact elimination on difference vectors.
int affine_dimension(const PointSet& points);

/// Exact rank of a list of integer vectors.
int exact_rank(const std::vector<Point>& rows);

/// Each point is the unique maximizer of its own linear functional over the
/// set (true whenever all points share one Euclidean norm).
bool all_points_extreme(const PointSet& points);

/// Order sigma with vertex() equal to v for the given k; the last k+1
/// positions are filled in ascending variable order.
VariableOrder order_of_vertex(const Point& v, int k);

/// Vertex of Pi_{n,k} -> initial ideal of the order(s) in its normal cone.
/// Throws TheoremViolation unless this is a bijection onto the distinct
/// initial ideals consistent with every order's braid cone.
std::map<Point, MonomialIdeal> vertex_ideal_bijection(const Partition& lambda,
                                                      const FanOptions& options = {});

struct RefinementOptions {
  std::size_t max_cones = 0;  // 0 = all n! braid cones, otherwise a seeded sample
  std::uint64_t seed = 0;
};

struct RefinementReport {
  std::size_t cones_checked = 0;
  std::size_t generator_checks = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// For interior integer weights of maximal braid cones, checks that every
/// lex Groebner generator has the lex leading term as its sole initial term.
RefinementReport braid_refinement_check(const Partition& lambda, const RefinementOptions& options = {});

}  // namespace specht
