#include "specht/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "specht/errors.hpp"
#include "specht/fan.hpp"
#include "specht/specht_ideal.hpp"

namespace specht::oracle {

// -------------------------------------------------------------- QPolynomial

QPolynomial::QPolynomial(const Polynomial& f, const VariableOrder& order)
    : order_(order), terms_(LexLess(order)) {
  if (f.n() != order.size()) throw std::invalid_argument("polynomial and order sizes differ");
  for (const auto& [m, c] : f.terms()) terms_.emplace(m, Rational(c));
}

const Monomial& QPolynomial::leading_monomial() const {
  if (terms_.empty()) throw std::invalid_argument("leading monomial of the zero polynomial");
  return terms_.rbegin()->first;
}

const Rational& QPolynomial::leading_coefficient() const {
  if (terms_.empty()) throw std::invalid_argument("leading coefficient of the zero polynomial");
  return terms_.rbegin()->second;
}

void QPolynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void QPolynomial::add_multiple(const QPolynomial& g, const Monomial& m, const Rational& c) {
  for (const auto& [gm, gc] : g.terms_) add_term(gm * m, gc * c);
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

QPolynomial QPolynomial::operator*(const QPolynomial& other) const {
  QPolynomial r(order());
  for (const auto& [m, c] : terms_) r.add_multiple(other, m, c);
  return r;
}

std::string QPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!s.empty()) s += " + ";
    s += "(" + it->second.get_str() + ")*" + it->first.to_string();
  }
  return s;
}

nlohmann::json QPolynomial::to_json() const {
  auto arr = nlohmann::json::array();
  for (const auto& [m, c] : terms_) arr.push_back({{"coeff", c.get_str()}, {"exps", m.exponents()}});
  return arr;
}

// -------------------------------------------------------------- MarkedBasis

MarkedBasis::MarkedBasis(const std::vector<Polynomial>& polys, const VariableOrder& order) : order_(order) {
  for (const auto& f : polys) {
    QPolynomial q(f, order);
    Monomial mark = q.leading_monomial();
    elements_.push_back({std::move(q), std::move(mark)});
  }
  index();
}

MarkedBasis::MarkedBasis(std::vector<QPolynomial> polys, const VariableOrder& order) : order_(order) {
  for (auto& q : polys) {
    if (!(q.order() == order)) throw std::invalid_argument("basis element uses a different order");
    Monomial mark = q.leading_monomial();
    elements_.push_back({std::move(q), std::move(mark)});
  }
  index();
}

void MarkedBasis::index() {
  by_mark_.resize(elements_.size());
  for (std::size_t i = 0; i < by_mark_.size(); ++i) by_mark_[i] = i;
  std::stable_sort(by_mark_.begin(), by_mark_.end(), [&](std::size_t a, std::size_t b) {
    return lex_compare(elements_[a].marked, elements_[b].marked, order_) < 0;
  });
}

std::size_t MarkedBasis::reducer_for(const Monomial& m) const {
  for (std::size_t i : by_mark_)
    if (elements_[i].marked.divides(m)) return i;
  return elements_.size();
}

// ---------------------------------------------------------------- algorithms

QPolynomial reduce(const QPolynomial& f, const MarkedBasis& basis) {
  if (basis.size() == 0) throw std::invalid_argument("reduce: empty basis");
  if (!(f.order() == basis.order())) throw std::invalid_argument("reduce: order mismatch");
  QPolynomial p = f;
  QPolynomial remainder(basis.order());
  while (!p.is_zero()) {
    const Monomial lm = p.leading_monomial();
    const Rational lc = p.leading_coefficient();
    const std::size_t i = basis.reducer_for(lm);
    if (i == basis.size()) {
      remainder.add_term(lm, lc);
      p.add_term(lm, -lc);
      continue;
    }
    const auto& g = basis.elements()[i];
    p.add_multiple(g.polynomial, g.marked.quotient_of(lm), -lc / g.polynomial.leading_coefficient());
  }
  return remainder;
}

QPolynomial reduce(const Polynomial& f, const MarkedBasis& basis) {
  return reduce(QPolynomial(f, basis.order()), basis);
}

QPolynomial s_polynomial(const QPolynomial& f, const QPolynomial& g) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("S-polynomial of a zero polynomial");
  if (!(f.order() == g.order())) throw std::invalid_argument("S-polynomial: order mismatch");
  const Monomial& a = f.leading_monomial();
  const Monomial& b = g.leading_monomial();
  const Monomial l = a.lcm(b);
  QPolynomial s(f.order());
  s.add_multiple(f, a.quotient_of(l), 1 / f.leading_coefficient());
  s.add_multiple(g, b.quotient_of(l), -1 / g.leading_coefficient());
  return s;
}

QPolynomial s_polynomial(const Polynomial& f, const Polynomial& g, const VariableOrder& order) {
  return s_polynomial(QPolynomial(f, order), QPolynomial(g, order));
}

Certificate certify_groebner(const MarkedBasis& basis) {
  Certificate c;
  const auto& els = basis.elements();
  for (std::size_t i = 0; i < els.size(); ++i)
    for (std::size_t j = i + 1; j < els.size(); ++j) {
      ++c.pairs_total;
      if (els[i].marked.coprime(els[j].marked)) {
        ++c.pairs_skipped_coprime;
        continue;
      }
      ++c.pairs_reduced;
      auto r = reduce(s_polynomial(els[i].polynomial, els[j].polynomial), basis);
      if (!r.is_zero()) c.failures.push_back({i, j, r.to_string()});
    }
  return c;
}

namespace {

// Embeds a polynomial in n-1 variables into n variables, inserting a zero
// exponent at position `inserted`.
Polynomial embed(const Polynomial& f, int inserted) {
  Polynomial out(f.n() + 1);
  for (const auto& [m, c] : f.terms()) {
    std::vector<int> e;
    for (int v = 1; v <= f.n() + 1; ++v) {
      if (v == inserted)
        e.push_back(0);
      else
        e.push_back(m.exponent(v < inserted ? v : v - 1));
    }
    out.add_term(Monomial(std::move(e)), c);
  }
  return out;
}

std::vector<Polynomial> polynomials_of(const SpechtSystem& s) {
  std::vector<Polynomial> out;
  for (const auto& g : s.generators) out.push_back(g.polynomial);
  return out;
}

}  // namespace

EliminationPolyReport elimination_polynomial_check(const Partition& lambda, const VariableOrder& order,
                                                   const OracleOptions& options) {
  EliminationPolyReport r;
  if (lambda.n() > options.max_n)
    throw CapacityError("polynomial elimination check is limited to n <= " + std::to_string(options.max_n));
  if (lambda.part(1) < 2 || lambda.length() < 2) {
    r.skipped = true;
    r.detail = "needs lambda_1 >= 2 and lambda_2 > 0";
    return r;
  }
  const Partition small = hat(lambda);
  if (small.length() < 2) {
    r.skipped = true;
    r.detail = "hat(lambda) = " + small.to_string() + " is a single row";
    return r;
  }
  const int top = order.at(order.size());
  const MarkedBasis big_basis(polynomials_of(lex_groebner_generators(lambda, order)), order);

  std::vector<Polynomial> small_gens;
  for (const auto& g : lex_groebner_generators(small, drop_last(order)).generators)
    small_gens.push_back(embed(g.polynomial, top));

  // Specht generators of the smaller shape lie in I_lambda.
  for (const auto& f : small_gens) {
    ++r.reductions;
    if (!reduce(f, big_basis).is_zero())
      r.failures.push_back("generator of I_hat not in I_lambda: " + f.to_string());
  }

  // Basis elements of I_lambda free of the top variable in their leading
  // monomial are free of it entirely and lie in I_hat.
  const MarkedBasis small_basis(small_gens, order);
  for (const auto& el : big_basis.elements()) {
    if (el.marked.exponent(top) != 0) continue;
    for (const auto& [m, c] : el.polynomial.terms())
      if (m.exponent(top) != 0) {
        r.failures.push_back("basis element with leading monomial " + el.marked.to_string() +
                             " involves x" + std::to_string(top));
        break;
      }
    ++r.reductions;
    if (!reduce(el.polynomial, small_basis).is_zero())
      r.failures.push_back("elimination element not in I_hat: " + el.polynomial.to_string());
  }
  return r;
}

nlohmann::json certificate_json(const std::string& check, const Partition& lambda,
                                const VariableOrder& order, const Certificate& c) {
  auto failures = nlohmann::json::array();
  for (const auto& f : c.failures)
    failures.push_back({{"pair", {f.first, f.second}}, {"remainder", f.remainder}});
  return {{"check", check},
          {"lambda", lambda.to_string()},
          {"sigma", order.to_string()},
          {"pairs_total", c.pairs_total},
          {"pairs_skipped_coprime", c.pairs_skipped_coprime},
          {"pairs_reduced", c.pairs_reduced},
          {"failures", failures}};
}

nlohmann::json elimination_json(const Partition& lambda, const VariableOrder& order,
                                const EliminationPolyReport& r) {
  return {{"check", "elimination_polynomial"},
          {"lambda", lambda.to_string()},
          {"sigma", order.to_string()},
          {"pairs_total", r.reductions},
          {"pairs_skipped_coprime", 0},
          {"pairs_reduced", r.reductions},
          {"skipped", r.skipped},
          {"failures", r.failures}};
}

}  // namespace specht::oracle
