#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "specht/combinatorics.hpp"
#include "specht/polyring.hpp"

namespace specht::oracle {

/// Polynomial over the rationals whose terms are kept in the lex order of a
/// fixed variable order, so the leading term is the last entry.
class QPolynomial {
 public:
  using TermMap = std::map<Monomial, Rational, LexLess>;

  explicit QPolynomial(const VariableOrder& order) : order_(order), terms_(LexLess(order)) {}
  QPolynomial(const Polynomial& f, const VariableOrder& order);

  int n() const { return order().size(); }
  const VariableOrder& order() const { return order_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  const Monomial& leading_monomial() const;
  const Rational& leading_coefficient() const;

  void add_term(const Monomial& m, const Rational& c);
  /// *this += c * m * g
  void add_multiple(const QPolynomial& g, const Monomial& m, const Rational& c);

  QPolynomial& operator+=(const QPolynomial& other);
  QPolynomial operator*(const QPolynomial& other) const;

  std::string to_string() const;
  nlohmann::json to_json() const;

  friend bool operator==(const QPolynomial& a, const QPolynomial& b) { return a.terms_ == b.terms_; }

 private:
  VariableOrder order_;
  TermMap terms_;
};

struct MarkedElement {
  QPolynomial polynomial;
  Monomial marked;
};

/// Generators each marked by their lex leading monomial under one order.
class MarkedBasis {
 public:
  MarkedBasis(const std::vector<Polynomial>& polys, const VariableOrder& order);
  MarkedBasis(std::vector<QPolynomial> polys, const VariableOrder& order);

  const VariableOrder& order() const { return order_; }
  const std::vector<MarkedElement>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

  /// Index of the reducer for m: lex-smallest dividing mark, then earliest.
  /// Returns size() if none divides.
  std::size_t reducer_for(const Monomial& m) const;

 private:
  void index();

  VariableOrder order_;
  std::vector<MarkedElement> elements_;
  std::vector<std::size_t> by_mark_;  // indices sorted by mark, stable
};

/// Full remainder of f on division by the basis.
QPolynomial reduce(const QPolynomial& f, const MarkedBasis& basis);
QPolynomial reduce(const Polynomial& f, const MarkedBasis& basis);

/// lcm/lt(f) * f - lcm/lt(g) * g with leading coefficients normalized to 1.
QPolynomial s_polynomial(const QPolynomial& f, const QPolynomial& g);
QPolynomial s_polynomial(const Polynomial& f, const Polynomial& g, const VariableOrder& order);

struct PairFailure {
  std::size_t first = 0;
  std::size_t second = 0;
  std::string remainder;
};

struct Certificate {
  std::size_t pairs_total = 0;
  std::size_t pairs_skipped_coprime = 0;
  std::size_t pairs_reduced = 0;
  std::vector<PairFailure> failures;
  bool ok() const { return failures.empty(); }
};

/// Buchberger's criterion: every S-pair reduces to zero.
Certificate certify_groebner(const MarkedBasis& basis);

struct OracleOptions {
  int max_n = 5;
};

struct EliminationPolyReport {
  bool skipped = false;
  std::size_t reductions = 0;
  std::vector<std::string> failures;
  std::string detail;
  bool ok() const { return !skipped && failures.empty(); }
};

/// Two-sided check that the Specht ideal of hat(lambda), embedded in the
/// variables other than x_{sigma(n)}, equals the elimination ideal.
EliminationPolyReport elimination_polynomial_check(const Partition& lambda, const VariableOrder& order,
                                                   const OracleOptions& options = {});

/// Report object {check, lambda, sigma, pairs_total, pairs_skipped_coprime,
/// pairs_reduced, failures}.
nlohmann::json certificate_json(const std::string& check, const Partition& lambda,
                                const VariableOrder& order, const Certificate& c);
nlohmann::json elimination_json(const Partition& lambda, const VariableOrder& order,
                                const EliminationPolyReport& r);

}  // namespace specht::oracle
