#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "json.hpp"
#include "specht/combinatorics.hpp"

namespace specht {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense exponent vector; exponents()[i] is the exponent of x_{i+1}.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);

  static Monomial one(int n) { return Monomial(std::vector<int>(static_cast<std::size_t>(n), 0)); }
  /// x_var with var 1-based.
  static Monomial variable(int n, int var);

  int n() const { return static_cast<int>(exps_.size()); }
  /// Exponent of x_var, var 1-based.
  int exponent(int var) const { return exps_[static_cast<std::size_t>(var - 1)]; }
  const std::vector<int>& exponents() const { return exps_; }
  int degree() const;
  bool is_one() const;

  bool divides(const Monomial& other) const;
  /// other / *this; throws if *this does not divide other.
  Monomial quotient_of(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;

  /// "x2*x3^2", or "1".
  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  // Plain exponent-sequence order; only for containers.
  friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.exps_ <=> b.exps_; }

 private:
  std::vector<int> exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// Lexicographic comparison where x_{sigma(n)} is the most significant
/// variable; a larger exponent on a larger variable wins.
std::strong_ordering lex_compare(const Monomial& a, const Monomial& b, const VariableOrder& order);

/// Lex order of the identity permutation (x_n most significant). Used as the
/// canonical storage and serialization order.
struct IdentityLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Lex order relative to a fixed variable order, usable as a map comparator.
class LexLess {
 public:
  explicit LexLess(VariableOrder order) : order_(std::move(order)) {}
  bool operator()(const Monomial& a, const Monomial& b) const {
    return lex_compare(a, b, order_) < 0;
  }
  const VariableOrder& order() const { return order_; }

 private:
  VariableOrder order_;
};

class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::vector<Rational> weights) : w_(std::move(weights)) {}
  static WeightVector from_integers(const std::vector<long>& w);

  int n() const { return static_cast<int>(w_.size()); }
  /// Weight of x_var, var 1-based.
  const Rational& at(int var) const { return w_[static_cast<std::size_t>(var - 1)]; }
  const std::vector<Rational>& weights() const { return w_; }
  Rational weight(const Monomial& m) const;

  std::string to_string() const;

 private:
  std::vector<Rational> w_;
};

/// Sparse polynomial over the integers in n variables. Terms are kept in
/// IdentityLexLess order and zero coefficients are never stored.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Integer, IdentityLexLess>;

  Polynomial() = default;
  explicit Polynomial(int n) : n_(n) {}

  static Polynomial constant(int n, const Integer& c);
  static Polynomial variable(int n, int var);
  static Polynomial monomial(const Monomial& m, const Integer& c = 1);

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  Integer coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Integer& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& other) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  void check_same_ring(const Polynomial& other) const;

  int n_ = 0;
  TermMap terms_;
};

Polynomial multiply(const Polynomial& f, const Polynomial& g);

/// Lex-largest monomial of f under order; throws on the zero polynomial.
Monomial leading_monomial(const Polynomial& f, const VariableOrder& order);
Integer leading_coefficient(const Polynomial& f, const VariableOrder& order);

/// Terms of f of maximal w-weight; throws on the zero polynomial.
Polynomial initial_form(const Polynomial& f, const WeightVector& w);

inline std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << m.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const Polynomial& f) { return os << f.to_string(); }

nlohmann::json to_json(const Monomial& m);
nlohmann::json to_json(const Polynomial& f);
Polynomial polynomial_from_json(const nlohmann::json& j);

}  // namespace specht
