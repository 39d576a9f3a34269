#include "specht/specht_ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace specht {

namespace {

void require_nontrivial(const Partition& lambda) {
  if (lambda.length() < 2)
    throw std::invalid_argument("the Specht ideal of a single-row shape is the unit ideal (" +
                                lambda.to_string() + ")");
}

void require_size(const Partition& lambda, const VariableOrder& order) {
  if (lambda.n() != order.size())
    throw std::invalid_argument("variable order has length " + std::to_string(order.size()) +
                                " but lambda = " + lambda.to_string() + " has n = " +
                                std::to_string(lambda.n()));
}

}  // namespace

// ------------------------------------------------------------ MonomialIdeal

MonomialIdeal::MonomialIdeal(int n, std::vector<Monomial> min_gens) : n_(n), gens_(std::move(min_gens)) {
  for (const auto& g : gens_)
    if (g.n() != n) throw std::invalid_argument("generator from a different ring");
  for (std::size_t i = 0; i < gens_.size(); ++i)
    for (std::size_t j = 0; j < gens_.size(); ++j)
      if (i != j && gens_[i].divides(gens_[j]))
        throw std::invalid_argument("generators are not minimal: " + gens_[i].to_string() +
                                    " divides " + gens_[j].to_string());
  std::sort(gens_.begin(), gens_.end(), IdentityLexLess{});
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

MonomialIdeal MonomialIdeal::relabeled(const VariableOrder& tau) const {
  if (tau.size() != n_) throw std::invalid_argument("relabeling size mismatch");
  std::vector<Monomial> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) {
    std::vector<int> e(static_cast<std::size_t>(n_));
    for (int v = 1; v <= n_; ++v) e[static_cast<std::size_t>(tau.at(v) - 1)] = g.exponent(v);
    out.emplace_back(std::move(e));
  }
  std::sort(out.begin(), out.end(), IdentityLexLess{});
  return MonomialIdeal(Trusted{}, n_, std::move(out));
}

nlohmann::json MonomialIdeal::to_json() const {
  auto gens = nlohmann::json::array();
  for (const auto& g : gens_) gens.push_back(specht::to_json(g));
  return {{"n", n_}, {"min_gens", gens}};
}

MonomialIdeal MonomialIdeal::from_json(const nlohmann::json& j) {
  std::vector<Monomial> gens;
  for (const auto& g : j.at("min_gens")) gens.emplace_back(g.get<std::vector<int>>());
  return MonomialIdeal(j.at("n").get<int>(), std::move(gens));
}

std::string MonomialIdeal::to_string() const {
  std::string s = "<";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += gens_[i].to_string();
  }
  return s + ">";
}

MonomialIdeal minimalize(std::span<const Monomial> gens) {
  if (gens.empty()) throw std::invalid_argument("minimalize: empty generator list");
  const int n = gens.front().n();
  std::vector<Monomial> sorted(gens.begin(), gens.end());
  for (const auto& g : sorted)
    if (g.n() != n) throw std::invalid_argument("minimalize: generators from different rings");
  // A divisor of m has degree <= deg m, so scanning by degree only needs to
  // test against already-kept generators.
  std::sort(sorted.begin(), sorted.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a < b;
  });
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Monomial> kept;
  for (auto& m : sorted) {
    bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Monomial& g) { return g.divides(m); });
    if (!redundant) kept.push_back(std::move(m));
  }
  std::sort(kept.begin(), kept.end(), IdentityLexLess{});
  return MonomialIdeal(MonomialIdeal::Trusted{}, n, std::move(kept));
}

// -------------------------------------------------------- Specht polynomials

Polynomial specht_polynomial(const Tableau& t) {
  const int n = t.n();
  Polynomial f = Polynomial::constant(n, 1);
  const auto& rows = t.rows();
  for (std::size_t c = 0; c < rows.front().size(); ++c) {
    for (std::size_t upper = 0; upper < rows.size() && c < rows[upper].size(); ++upper) {
      for (std::size_t lower = upper + 1; lower < rows.size() && c < rows[lower].size(); ++lower) {
        Polynomial factor = Polynomial::variable(n, rows[upper][c]) -
                            Polynomial::variable(n, rows[lower][c]);
        f = f * factor;
      }
    }
  }
  return f;
}

Monomial closed_form_initial_monomial(const Tableau& t, const VariableOrder& order) {
  if (t.n() != order.size()) throw std::invalid_argument("tableau and order sizes differ");
  if (!is_column_standard(t, order))
    throw std::invalid_argument("closed-form initial monomial needs a column-standard tableau, got " +
                                t.to_string());
  std::vector<int> e(static_cast<std::size_t>(t.n()));
  for (int i = 1; i <= t.n(); ++i) e[static_cast<std::size_t>(i - 1)] = t.row_of(i) - 1;
  return Monomial(std::move(e));
}

SignCheck transposition_sign_check(const Tableau& t, int a, int b) {
  if (a < 1 || b < 1 || a > t.n() || b > t.n() || a == b || !t.same_column(a, b))
    throw std::invalid_argument(std::to_string(a) + " and " + std::to_string(b) +
                                " are not distinct entries of one column of " + t.to_string());
  SignCheck r{specht_polynomial(t), specht_polynomial(t.swapped(a, b)), false};
  r.negated = r.swapped == -r.original;
  return r;
}

// ---------------------------------------------------------- generator sets

std::vector<Partition> generator_shapes(const Partition& lambda, GeneratorSet set) {
  std::vector<Partition> out;
  for (auto& mu : enumerate_partitions(lambda.n())) {
    if (!dominance_leq(mu, lambda)) continue;
    if (set == GeneratorSet::Lex && mu.part(1) != lambda.part(1)) continue;
    out.push_back(std::move(mu));
  }
  return out;
}

std::vector<Tableau> generator_tableaux(const Partition& lambda, const VariableOrder& order,
                                        GeneratorSet set) {
  require_nontrivial(lambda);
  require_size(lambda, order);
  std::vector<Tableau> out;
  for (const auto& mu : generator_shapes(lambda, set)) {
    auto ts = standard_tableaux(mu, order);
    out.insert(out.end(), std::make_move_iterator(ts.begin()), std::make_move_iterator(ts.end()));
  }
  return out;
}

namespace {

SpechtSystem expand(const Partition& lambda, const VariableOrder& order, GeneratorSet set) {
  SpechtSystem sys{lambda, order, {}};
  for (auto& t : generator_tableaux(lambda, order, set)) {
    Polynomial f = specht_polynomial(t);
    sys.generators.push_back({std::move(t), std::move(f)});
  }
  return sys;
}

}  // namespace

SpechtSystem lex_groebner_generators(const Partition& lambda, const VariableOrder& order) {
  return expand(lambda, order, GeneratorSet::Lex);
}

SpechtSystem universal_groebner_generators(const Partition& lambda, const VariableOrder& order) {
  return expand(lambda, order, GeneratorSet::Universal);
}

MonomialIdeal initial_ideal(const Partition& lambda, const VariableOrder& order) {
  std::vector<Monomial> monos;
  for (const auto& t : generator_tableaux(lambda, order, GeneratorSet::Lex))
    monos.push_back(closed_form_initial_monomial(t, order));
  return minimalize(monos);
}

GapAudit gap_condition_audit(const Partition& lambda, const VariableOrder& order) {
  GapAudit audit;
  audit.k = min_gap_k(lambda);
  const int n = lambda.n();
  const int top = order.at(n);
  const auto ideal = initial_ideal(lambda, order);
  const auto candidates = generator_tableaux(lambda, order, GeneratorSet::Universal);

  for (const auto& g : ideal.generators()) {
    auto it = std::find_if(candidates.begin(), candidates.end(), [&](const Tableau& t) {
      return closed_form_initial_monomial(t, order) == g;
    });
    if (it == candidates.end()) {
      audit.violations.push_back("no standard tableau witnesses " + g.to_string());
      continue;
    }
    GapAuditEntry e{g, *it, it->row_of(top), 0};
    const auto& mu = it->shape();
    const int j = e.row_of_top;
    if (j >= 2) {
      if (mu.part(j - 1) - mu.part(j) < audit.k)
        audit.violations.push_back("witness " + it->to_string() + " of " + g.to_string() +
                                   ": row gap " + std::to_string(mu.part(j - 1) - mu.part(j)) +
                                   " < k = " + std::to_string(audit.k));
      e.above_index = order.position(it->at(j - 1, it->column_of(top)));
      if (e.above_index >= n - audit.k)
        audit.violations.push_back("witness " + it->to_string() + " of " + g.to_string() +
                                   ": entry above sigma(n) is sigma(" +
                                   std::to_string(e.above_index) + "), not below n-k");
    }
    audit.entries.push_back(std::move(e));
  }
  return audit;
}

}  // namespace specht
