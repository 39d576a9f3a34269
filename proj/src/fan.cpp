#include "specht/fan.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "specht/errors.hpp"

namespace specht {

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw std::invalid_argument("factorial out of 64-bit range");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

DegreeStatistic degree_statistic(const Partition& lambda, const VariableOrder& order) {
  if (lambda.n() != order.size()) throw std::invalid_argument("lambda and order sizes differ");
  DegreeStatistic d{lambda, order, std::vector<int>(static_cast<std::size_t>(lambda.n()), 0)};
  for (const auto& t : standard_tableaux(lambda, order)) {
    auto m = closed_form_initial_monomial(t, order);
    for (int v = 1; v <= lambda.n(); ++v) d.values[static_cast<std::size_t>(v - 1)] += m.exponent(v);
  }
  return d;
}

MonotonicityReport monotonicity_check(const Partition& lambda, const VariableOrder& order) {
  MonotonicityReport r;
  const auto d = degree_statistic(lambda, order);
  const auto tableaux = standard_tableaux(lambda, order);
  for (int i = 1; i < lambda.n(); ++i) {
    const int a = order.at(i), b = order.at(i + 1);
    const bool strict = d.at(a) < d.at(b);
    r.strict.push_back(strict);
    if (d.at(a) > d.at(b))
      r.failures.push_back("d(sigma(" + std::to_string(i) + ")) = " + std::to_string(d.at(a)) +
                           " > d(sigma(" + std::to_string(i + 1) + ")) = " + std::to_string(d.at(b)));
    const bool witness = std::any_of(tableaux.begin(), tableaux.end(),
                                     [&](const Tableau& t) { return t.same_column(a, b); });
    if (witness != strict)
      r.failures.push_back("step " + std::to_string(i) + ": strict=" + (strict ? "yes" : "no") +
                           " but same-column witness=" + (witness ? "yes" : "no"));
  }
  return r;
}

std::vector<VariableOrder> all_orders(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::vector<VariableOrder> out;
  out.reserve(factorial(n));
  do {
    out.emplace_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

nlohmann::json FanSummary::to_json() const {
  auto cls = nlohmann::json::array();
  for (const auto& [ideal, orders] : classes)
    cls.push_back({{"representative", orders.front().one_line()},
                   {"size", orders.size()},
                   {"ideal", ideal.to_json()}});
  return {{"lambda", lambda.parts()},
          {"n", lambda.n()},
          {"k", k},
          {"total_orders", total_orders},
          {"distinct_count", distinct_count()},
          {"classes", cls}};
}

FanSummary enumerate_fan(const Partition& lambda, const FanOptions& options) {
  const int n = lambda.n();
  if (n > options.max_n)
    throw CapacityError("exhaustive fan enumeration is limited to n <= " +
                        std::to_string(options.max_n) + " (lambda = " + lambda.to_string() + ")");
  FanSummary s;
  s.lambda = lambda;
  s.k = min_gap_k(lambda);
  const auto orders = all_orders(n);
  s.total_orders = orders.size();

  std::vector<MonomialIdeal> ideals(orders.size());
  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(orders.size())));
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) ideals[i] = initial_ideal(lambda, orders[i]);
  };
  if (jobs == 1) {
    work(0, orders.size());
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (orders.size() + jobs - 1) / jobs;
    for (std::size_t b = 0; b < orders.size(); b += chunk)
      pool.emplace_back(work, b, std::min(orders.size(), b + chunk));
  }
  // Orders are visited ascending, so each class list comes out sorted.
  for (std::size_t i = 0; i < orders.size(); ++i) s.classes[std::move(ideals[i])].push_back(orders[i]);
  return s;
}

Integer theorem_count(const Partition& lambda) {
  const int k = min_gap_k(lambda);
  Integer r = 1;
  for (int i = k + 2; i <= lambda.n(); ++i) r *= i;
  return r;
}

bool order_class_predictor(const Partition& lambda, const VariableOrder& sigma, const VariableOrder& tau) {
  const int n = lambda.n();
  if (sigma.size() != n || tau.size() != n) throw std::invalid_argument("order sizes differ from n");
  const int k = min_gap_k(lambda);
  const int fixed = n - k - 1;
  for (int i = 1; i <= fixed; ++i)
    if (sigma.at(i) != tau.at(i)) return false;
  std::vector<int> a(sigma.one_line().begin() + fixed, sigma.one_line().end());
  std::vector<int> b(tau.one_line().begin() + fixed, tau.one_line().end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

Monomial drop_variable(const Monomial& m, int removed) {
  std::vector<int> e;
  e.reserve(static_cast<std::size_t>(m.n() - 1));
  for (int v = 1; v <= m.n(); ++v)
    if (v != removed) e.push_back(m.exponent(v));
  return Monomial(std::move(e));
}

VariableOrder drop_last(const VariableOrder& order) {
  const int top = order.at(order.size());
  std::vector<int> p;
  for (int i = 1; i < order.size(); ++i) {
    int v = order.at(i);
    p.push_back(v > top ? v - 1 : v);
  }
  return VariableOrder(std::move(p));
}

EliminationReport elimination_identity_check(const Partition& lambda, const VariableOrder& order) {
  EliminationReport r;
  if (lambda.part(1) < 2 || lambda.length() < 2) {
    r.skipped = true;
    r.detail = "needs lambda_1 >= 2 and lambda_2 > 0";
    return r;
  }
  r.hat_lambda = hat(lambda);
  if (r.hat_lambda.length() < 2) {
    r.skipped = true;
    r.detail = "hat(lambda) = " + r.hat_lambda.to_string() + " is a single row";
    return r;
  }
  const int top = order.at(order.size());
  const auto full = initial_ideal(lambda, order);
  std::vector<Monomial> kept;
  for (const auto& g : full.generators())
    if (g.exponent(top) == 0) kept.push_back(drop_variable(g, top));
  r.expected = initial_ideal(r.hat_lambda, drop_last(order));
  if (kept.empty()) {
    r.detail = "no minimal generator avoids x" + std::to_string(top);
    return r;
  }
  // Generators of a minimal set that avoid a variable stay minimal.
  r.restricted = MonomialIdeal(lambda.n() - 1, std::move(kept));
  r.ok = r.restricted == r.expected;
  if (!r.ok) r.detail = r.restricted.to_string() + " != " + r.expected.to_string();
  return r;
}

}  // namespace specht
