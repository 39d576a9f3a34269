#include "specht/polytope.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "specht/errors.hpp"

namespace specht {

namespace {

std::string point_string(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p[i]);
  }
  return s + ")";
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

}  // namespace

// ----------------------------------------------------------------- PointSet

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
  if (points_.empty()) return;
  const auto dim = points_.front().size();
  const long sum = std::accumulate(points_.front().begin(), points_.front().end(), 0L);
  for (const auto& p : points_) {
    if (p.size() != dim) throw std::invalid_argument("points of different dimension");
    if (std::accumulate(p.begin(), p.end(), 0L) != sum)
      throw std::invalid_argument("points do not share a coordinate sum");
  }
}

long PointSet::coordinate_sum() const {
  return points_.empty() ? 0 : std::accumulate(points_.front().begin(), points_.front().end(), 0L);
}

nlohmann::json PointSet::to_json(int k) const {
  return {{"n", dimension()}, {"k", k}, {"vertices", points_}};
}

// --------------------------------------------------------------- BraidCone

BraidCone::BraidCone(VariableOrder s, int k_) : sigma(std::move(s)), k(k_) {
  if (k < 0 || k >= sigma.size())
    throw std::invalid_argument("cone parameter k must satisfy 0 <= k < n");
}

Point BraidCone::vertex() const {
  Point v(static_cast<std::size_t>(n()));
  for (int j = 1; j <= n(); ++j) v[static_cast<std::size_t>(sigma.at(j) - 1)] = std::min(j, n() - k);
  return v;
}

// --------------------------------------------------------------- operations

PointSet permuted_points(std::vector<int> u) {
  std::sort(u.begin(), u.end());
  std::vector<Point> pts;
  do {
    pts.push_back(u);
  } while (std::next_permutation(u.begin(), u.end()));
  return PointSet(std::move(pts));
}

PointSet pnk_vertices(int n, int k) {
  if (n < 2 || k < 0 || k > n - 2)
    throw std::invalid_argument("Pi_{n,k} needs 0 <= k <= n-2 (n = " + std::to_string(n) +
                                ", k = " + std::to_string(k) + ")");
  std::vector<int> u(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) u[static_cast<std::size_t>(i - 1)] = std::min(i, n - k);
  return permuted_points(std::move(u));
}

bool cone_membership(const WeightVector& w, const BraidCone& cone) {
  const int n = cone.n();
  if (w.n() != n) throw std::invalid_argument("weight length differs from cone dimension");
  const int chain = n - cone.k - 1;
  if (chain <= 0) return true;
  for (int i = 1; i < chain; ++i)
    if (w.at(cone.sigma.at(i)) > w.at(cone.sigma.at(i + 1))) return false;
  const Rational& floor = w.at(cone.sigma.at(chain));
  for (int j = chain + 1; j <= n; ++j)
    if (w.at(cone.sigma.at(j)) < floor) return false;
  return true;
}

WeightVector interior_sample(const BraidCone& cone, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int n = cone.n();
  const int chain = n - cone.k - 1;
  std::vector<long> value(static_cast<std::size_t>(n));
  long v = static_cast<long>(draw(rng, 7)) - 3;
  for (int i = 1; i <= chain; ++i) {
    value[static_cast<std::size_t>(cone.sigma.at(i) - 1)] = v;
    v += 1 + static_cast<long>(draw(rng, 4));
  }
  // Distinct values above the chain, shuffled over the free block.
  std::vector<long> top;
  for (int j = chain + 1; j <= n; ++j) {
    top.push_back(v);
    v += 1 + static_cast<long>(draw(rng, 4));
  }
  for (std::size_t i = top.size(); i > 1; --i) std::swap(top[i - 1], top[draw(rng, i)]);
  for (int j = chain + 1; j <= n; ++j)
    value[static_cast<std::size_t>(cone.sigma.at(j) - 1)] = top[static_cast<std::size_t>(j - chain - 1)];

  const long denominator = 1 + static_cast<long>(draw(rng, 5));
  std::vector<Rational> w;
  for (long x : value) {
    Rational q(x, denominator);
    q.canonicalize();
    w.push_back(q);
  }
  return WeightVector(std::move(w));
}

int exact_rank(const std::vector<Point>& rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::vector<std::vector<Rational>> m;
  for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
  int rank = 0;
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < m.size(); ++c) {
    auto pivot = std::find_if(m.begin() + rank, m.end(), [&](const auto& r) { return r[c] != 0; });
    if (pivot == m.end()) continue;
    std::iter_swap(m.begin() + rank, pivot);
    auto& p = m[static_cast<std::size_t>(rank)];
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < m.size(); ++r) {
      if (m[r][c] == 0) continue;
      Rational f = m[r][c] / p[c];
      for (std::size_t j = c; j < cols; ++j) m[r][j] -= f * p[j];
    }
    ++rank;
  }
  return rank;
}

int affine_dimension(const PointSet& points) {
  if (points.size() == 0) return -1;
  const auto& base = points.points().front();
  std::vector<Point> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    Point d(base.size());
    for (std::size_t j = 0; j < base.size(); ++j) d[j] = points.points()[i][j] - base[j];
    diffs.push_back(std::move(d));
  }
  return exact_rank(diffs);
}

bool all_points_extreme(const PointSet& points) {
  auto dot = [](const Point& a, const Point& b) {
    long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long>(a[i]) * b[i];
    return s;
  };
  for (const auto& v : points.points()) {
    const long best = dot(v, v);
    for (const auto& u : points.points())
      if (u != v && dot(v, u) >= best) return false;
  }
  return true;
}

VariableOrder order_of_vertex(const Point& v, int k) {
  const int n = static_cast<int>(v.size());
  const int chain = n - k - 1;
  std::vector<int> sigma(static_cast<std::size_t>(n), 0);
  std::vector<int> rest;
  for (int var = 1; var <= n; ++var) {
    int value = v[static_cast<std::size_t>(var - 1)];
    if (value >= 1 && value <= chain) {
      if (sigma[static_cast<std::size_t>(value - 1)] != 0)
        throw std::invalid_argument(point_string(v) + " is not a vertex of Pi_{n,k}");
      sigma[static_cast<std::size_t>(value - 1)] = var;
    } else if (value == n - k) {
      rest.push_back(var);
    } else {
      throw std::invalid_argument(point_string(v) + " is not a vertex of Pi_{n,k}");
    }
  }
  if (static_cast<int>(rest.size()) != k + 1)
    throw std::invalid_argument(point_string(v) + " is not a vertex of Pi_{n,k}");
  std::copy(rest.begin(), rest.end(), sigma.begin() + chain);
  return VariableOrder(std::move(sigma));
}

std::map<Point, MonomialIdeal> vertex_ideal_bijection(const Partition& lambda, const FanOptions& options) {
  const int n = lambda.n();
  const int k = min_gap_k(lambda);
  const auto vertices = pnk_vertices(n, k);
  const auto fan = enumerate_fan(lambda, options);

  std::map<Point, MonomialIdeal> map;
  std::set<MonomialIdeal> images;
  for (const auto& v : vertices.points()) {
    const BraidCone cone(order_of_vertex(v, k), k);
    if (cone.vertex() != v) throw std::logic_error("vertex/cone round trip failed");
    // The cone is the normal cone of v: an interior weight picks out v alone.
    const auto w = interior_sample(cone, 0x5eed);
    auto score = [&](const Point& p) {
      Rational s = 0;
      for (int i = 1; i <= n; ++i) s += w.at(i) * p[static_cast<std::size_t>(i - 1)];
      return s;
    };
    const Rational best = score(v);
    for (const auto& u : vertices.points())
      if (u != v && score(u) >= best)
        throw TheoremViolation("weight " + w.to_string() + " from C_{sigma,k} does not single out " +
                               point_string(v));
    auto ideal = initial_ideal(lambda, cone.sigma);
    if (!images.insert(ideal).second)
      throw TheoremViolation("two vertices of Pi_{n,k} share the initial ideal " + ideal.to_string());
    map.emplace(v, std::move(ideal));
  }
  if (images.size() != fan.distinct_count())
    throw TheoremViolation(std::to_string(vertices.size()) + " vertices but " +
                           std::to_string(fan.distinct_count()) + " distinct initial ideals for " +
                           lambda.to_string());
  for (const auto& [ideal, orders] : fan.classes)
    for (const auto& sigma : orders) {
      auto it = map.find(BraidCone(sigma, k).vertex());
      if (it == map.end() || it->second != ideal)
        throw TheoremViolation("order " + sigma.to_string() + " lies in the cone of vertex " +
                               point_string(BraidCone(sigma, k).vertex()) +
                               " but has a different initial ideal");
    }
  return map;
}

RefinementReport braid_refinement_check(const Partition& lambda, const RefinementOptions& options) {
  RefinementReport r;
  const int n = lambda.n();
  auto orders = all_orders(n);
  if (options.max_cones != 0 && options.max_cones < orders.size()) {
    std::mt19937_64 rng(options.seed);
    for (std::size_t i = orders.size(); i > 1; --i) std::swap(orders[i - 1], orders[draw(rng, i)]);
    orders.resize(options.max_cones);
    std::sort(orders.begin(), orders.end());
  }
  for (const auto& sigma : orders) {
    ++r.cones_checked;
    const auto system = lex_groebner_generators(lambda, sigma);
    std::vector<long> unit(static_cast<std::size_t>(n)), doubling(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
      unit[static_cast<std::size_t>(sigma.at(i) - 1)] = i;
      doubling[static_cast<std::size_t>(sigma.at(i) - 1)] = 1L << (i - 1);
    }
    const WeightVector weights[] = {WeightVector::from_integers(unit), WeightVector::from_integers(doubling),
                                    interior_sample(BraidCone(sigma, 0), options.seed + r.cones_checked)};
    for (const auto& g : system.generators) {
      const auto lead = leading_monomial(g.polynomial, sigma);
      for (const auto& w : weights) {
        ++r.generator_checks;
        const auto form = initial_form(g.polynomial, w);
        if (form.size() != 1 || form.terms().begin()->first != lead)
          r.failures.push_back("sigma=" + sigma.to_string() + " w=" + w.to_string() + " T=" +
                               g.tableau.to_string() + ": in_w = " + form.to_string());
      }
    }
  }
  return r;
}

}  // namespace specht
