#include "specht/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "specht/errors.hpp"
#include "specht/fan.hpp"
#include "specht/oracle.hpp"
#include "specht/polytope.hpp"
#include "specht/specht_ideal.hpp"

namespace specht {

std::vector<Partition> nontrivial_partitions(int n) {
  std::vector<Partition> out;
  for (auto& p : enumerate_partitions(n))
    if (p.length() >= 2) out.push_back(std::move(p));
  return out;
}

std::mt19937_64 sample_rng(std::uint64_t seed, const std::string& stream) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : stream) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return std::mt19937_64(seed ^ h);
}

VariableOrder random_order(int n, std::mt19937_64& rng) {
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i + 1;
  for (std::size_t i = p.size(); i > 1; --i) std::swap(p[i - 1], p[rng() % i]);
  return VariableOrder(std::move(p));
}

std::vector<VariableOrder> sample_orders(int n, int count, std::mt19937_64& rng) {
  if (static_cast<std::uint64_t>(count) >= factorial(n)) return all_orders(n);
  std::set<VariableOrder> picked;
  while (picked.size() < static_cast<std::size_t>(count)) picked.insert(random_order(n, rng));
  return {picked.begin(), picked.end()};
}

namespace {

std::string lam(const Partition& p) { return "lambda=" + p.to_string(); }
std::string inst(const Partition& p, const VariableOrder& s) { return lam(p) + " sigma=" + s.to_string(); }

std::string join_all(const std::vector<std::string>& xs) {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : "; ") + x;
  return s;
}

void fan_checks(const VerifyConfig& cfg, const Partition& lambda, Report& out) {
  const int n = lambda.n();
  if (n > cfg.fan_max_n) return;
  const auto fan = enumerate_fan(lambda, {cfg.fan_max_n, cfg.jobs});
  const Integer expected = theorem_count(lambda);
  const bool agree = expected == fan.distinct_count();
  out.add("count", lam(lambda) + " theorem=" + expected.get_str() + " brute=" + std::to_string(fan.distinct_count()),
          agree, "distinct initial ideals differ from n!/(k+1)!");

  const auto class_size = factorial(fan.k + 1);
  bool sizes_ok = true;
  for (const auto& [ideal, orders] : fan.classes) sizes_ok = sizes_ok && orders.size() == class_size;
  out.add("class_sizes", lam(lambda) + " expected=" + std::to_string(class_size), sizes_ok,
          "a class does not have (k+1)! orders");

  if (lambda.has_repeated_part())
    out.add("repeated_part", lam(lambda),
            fan.distinct_count() == factorial(n) && class_size == 1, "repeated part but not n! ideals");

  // Class id for each order, by position in lexicographic S_n.
  const auto orders = all_orders(n);
  std::map<VariableOrder, std::size_t> id;
  std::size_t next = 0;
  for (const auto& [ideal, members] : fan.classes) {
    for (const auto& s : members) id[s] = next;
    ++next;
  }
  std::size_t pairs = 0, mismatches = 0;
  std::string first;
  auto test_pair = [&](const VariableOrder& s, const VariableOrder& t) {
    ++pairs;
    if (order_class_predictor(lambda, s, t) != (id[s] == id[t])) {
      if (mismatches++ == 0) first = s.to_string() + " vs " + t.to_string();
    }
  };
  if (n <= cfg.exhaustive_pairs_max_n) {
    for (const auto& s : orders)
      for (const auto& t : orders) test_pair(s, t);
  } else {
    auto rng = sample_rng(cfg.seed, "class_predictor " + lambda.to_string());
    for (std::size_t i = 0; i < cfg.sampled_pairs; ++i)
      test_pair(orders[rng() % orders.size()], orders[rng() % orders.size()]);
  }
  out.add("class_predictor", lam(lambda) + " pairs=" + std::to_string(pairs), mismatches == 0,
          std::to_string(mismatches) + " mismatches, first " + first);

  auto rng = sample_rng(cfg.seed, "monotonicity " + lambda.to_string());
  for (const auto& s : sample_orders(n, cfg.random_orders, rng)) {
    auto r = monotonicity_check(lambda, s);
    out.add("monotonicity", inst(lambda, s), r.ok(), join_all(r.failures));
  }

  if (lambda.part(1) >= 2 && hat(lambda).length() >= 2) {
    auto erng = sample_rng(cfg.seed, "elimination_monomial " + lambda.to_string());
    for (const auto& s : sample_orders(n, cfg.random_orders, erng)) {
      auto r = elimination_identity_check(lambda, s);
      out.add("elimination_monomial", inst(lambda, s), r.ok, r.detail);
    }
  }
}

void specht_checks(const VerifyConfig& cfg, const Partition& lambda, Report& out) {
  auto rng = sample_rng(cfg.seed, "gap_audit " + lambda.to_string());
  for (const auto& s : sample_orders(lambda.n(), cfg.random_orders, rng)) {
    auto audit = gap_condition_audit(lambda, s);
    out.add("gap_audit", inst(lambda, s), audit.ok(), join_all(audit.violations));
  }
}

void closed_form_checks(const VerifyConfig& cfg, int n, Report& out) {
  if (n > cfg.closed_form_max_n) return;
  auto rng = sample_rng(cfg.seed, "closed_form " + std::to_string(n));
  const auto shapes = enumerate_partitions(n);
  for (const auto& s : sample_orders(n, cfg.closed_form_orders, rng)) {
    std::size_t checked = 0;
    std::string bad;
    for (const auto& mu : shapes)
      for (const auto& t : standard_tableaux(mu, s)) {
        ++checked;
        if (closed_form_initial_monomial(t, s) != leading_monomial(specht_polynomial(t), s) && bad.empty())
          bad = t.to_string();
      }
    out.add("closed_form", "n=" + std::to_string(n) + " sigma=" + s.to_string() + " tableaux=" +
            std::to_string(checked), bad.empty(), "mismatch at " + bad);
  }
}

std::vector<Polynomial> polys(const SpechtSystem& s) {
  std::vector<Polynomial> v;
  for (const auto& g : s.generators) v.push_back(g.polynomial);
  return v;
}

void oracle_checks(const VerifyConfig& cfg, const Partition& lambda, Report& out) {
  const int n = lambda.n();
  if (n > cfg.oracle_max_n) return;
  auto rng = sample_rng(cfg.seed, "groebner " + lambda.to_string());
  for (const auto& s : sample_orders(n, cfg.oracle_orders, rng)) {
    const oracle::MarkedBasis lex(polys(lex_groebner_generators(lambda, s)), s);
    const auto c = oracle::certify_groebner(lex);
    out.add("groebner_lex", inst(lambda, s) + " pairs=" + std::to_string(c.pairs_total), c.ok(),
            std::to_string(c.failures.size()) + " S-pairs with nonzero remainder");

    const oracle::MarkedBasis uni(polys(universal_groebner_generators(lambda, s)), s);
    const auto cu = oracle::certify_groebner(uni);
    out.add("groebner_universal", inst(lambda, s) + " pairs=" + std::to_string(cu.pairs_total), cu.ok(),
            std::to_string(cu.failures.size()) + " S-pairs with nonzero remainder");

    std::vector<Monomial> marks;
    for (const auto& e : lex.elements()) marks.push_back(e.marked);
    const bool agree = minimalize(marks) == initial_ideal(lambda, s);
    out.add("oracle_initial_agreement", inst(lambda, s), agree,
            "expanded leading monomials disagree with the closed form");
  }
  if (lambda.part(1) >= 2 && hat(lambda).length() >= 2) {
    auto erng = sample_rng(cfg.seed, "elimination_polynomial " + lambda.to_string());
    for (const auto& s : sample_orders(n, cfg.elimination_poly_orders, erng)) {
      auto r = oracle::elimination_polynomial_check(lambda, s, {cfg.oracle_max_n});
      out.add("elimination_polynomial", inst(lambda, s), r.ok(), r.skipped ? r.detail : join_all(r.failures));
    }
  }
}

void polytope_checks(const VerifyConfig& cfg, const Partition& lambda, Report& out) {
  const int n = lambda.n();
  const int k = min_gap_k(lambda);
  if (n <= cfg.polytope_max_n) {
    std::string detail;
    bool ok = true;
    try {
      const auto map = vertex_ideal_bijection(lambda, {cfg.fan_max_n, cfg.jobs});
      const auto vertices = pnk_vertices(n, k);
      const auto fan = enumerate_fan(lambda, {cfg.fan_max_n, cfg.jobs});
      if (map.size() != vertices.size() || vertices.size() != fan.distinct_count()) {
        ok = false;
        detail = "vertex count differs from distinct ideal count";
      } else if (affine_dimension(vertices) != n - 1) {
        ok = false;
        detail = "affine dimension is not n-1";
      } else if (!all_points_extreme(vertices)) {
        ok = false;
        detail = "a listed point is not extreme";
      }
    } catch (const TheoremViolation& e) {
      ok = false;
      detail = e.what();
    }
    out.add("state_polytope", lam(lambda) + " k=" + std::to_string(k), ok, detail);
  }
  if (lambda == Partition({n - 1, 1}) && n >= 3) {
    const auto v = pnk_vertices(n, n - 2);
    out.add("simplex", "n=" + std::to_string(n), v.size() == static_cast<std::size_t>(n) && affine_dimension(v) == n - 1,
            "Pi_{n,n-2} is not an (n-1)-simplex");
  }
  if (n <= cfg.braid_max_n) {
    const auto r = braid_refinement_check(lambda, {0, cfg.seed});
    out.add("braid_refinement", lam(lambda) + " cones=" + std::to_string(r.cones_checked), r.ok(),
            r.failures.empty() ? "" : r.failures.front());
  }
}

}  // namespace

Report run_verify(const VerifyConfig& cfg) {
  if (cfg.n_max < 2) throw std::invalid_argument("verify needs n_max >= 2");
  Report out;
  for (int n = 2; n <= cfg.n_max; ++n) {
    closed_form_checks(cfg, n, out);
    for (const auto& lambda : nontrivial_partitions(n)) {
      specht_checks(cfg, lambda, out);
      if (!cfg.skip_fan) fan_checks(cfg, lambda, out);
      if (!cfg.skip_oracle) oracle_checks(cfg, lambda, out);
      if (!cfg.skip_polytope) polytope_checks(cfg, lambda, out);
    }
  }
  return out;
}

}  // namespace specht
