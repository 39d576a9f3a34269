#pragma once

#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "specht/combinatorics.hpp"
#include "specht/polyring.hpp"

namespace specht {

/// A monomial ideal given by its minimal generators, stored in ascending
/// identity-lex order so that equal ideals have identical representations.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  /// Validates that no generator divides another.
  MonomialIdeal(int n, std::vector<Monomial> min_gens);

  int n() const { return n_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool contains(const Monomial& m) const;

  /// Image under x_v -> x_{tau(v)}.
  MonomialIdeal relabeled(const VariableOrder& tau) const;

  nlohmann::json to_json() const;
  static MonomialIdeal from_json(const nlohmann::json& j);
  std::string to_string() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;
  friend auto operator<=>(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.gens_ <=> b.gens_;
  }

 private:
  friend MonomialIdeal minimalize(std::span<const Monomial> gens);
  struct Trusted {};
  MonomialIdeal(Trusted, int n, std::vector<Monomial> gens) : n_(n), gens_(std::move(gens)) {}

  int n_ = 0;
  std::vector<Monomial> gens_;
};

inline std::ostream& operator<<(std::ostream& os, const MonomialIdeal& I) { return os << I.to_string(); }

/// Unique minimal generating set of the ideal generated by gens.
MonomialIdeal minimalize(std::span<const Monomial> gens);

struct SpechtGenerator {
  Tableau tableau;
  Polynomial polynomial;
};

/// A family of Specht polynomials indexed by standard tableaux.
struct SpechtSystem {
  Partition lambda;
  VariableOrder order;
  std::vector<SpechtGenerator> generators;
};

/// Product over columns of (x_upper - x_lower), fully expanded.
Polynomial specht_polynomial(const Tableau& t);

/// prod_i x_i^{row(i)-1}; requires t column standard in order.
Monomial closed_form_initial_monomial(const Tableau& t, const VariableOrder& order);

struct SignCheck {
  Polynomial original;
  Polynomial swapped;
  bool negated = false;
};

/// Swapping two entries of one column negates the Specht polynomial.
SignCheck transposition_sign_check(const Tableau& t, int a, int b);

enum class GeneratorSet {
  Lex,        // shapes mu dominated by lambda with mu_1 = lambda_1
  Universal,  // all shapes dominated by lambda
};

/// The shapes contributing to a generator set, in decreasing lex order
/// (a linear extension of dominance, largest first).
std::vector<Partition> generator_shapes(const Partition& lambda, GeneratorSet set);

/// Standard tableaux indexing a generator set, shape by shape.
std::vector<Tableau> generator_tableaux(const Partition& lambda, const VariableOrder& order,
                                        GeneratorSet set);

SpechtSystem lex_groebner_generators(const Partition& lambda, const VariableOrder& order);
SpechtSystem universal_groebner_generators(const Partition& lambda, const VariableOrder& order);

/// Lex initial ideal of the Specht ideal of lambda, from closed-form
/// initial monomials (no polynomial expansion).
MonomialIdeal initial_ideal(const Partition& lambda, const VariableOrder& order);

struct GapAuditEntry {
  Monomial generator;
  Tableau witness;
  int row_of_top = 0;    // row of sigma(n) in the witness
  int above_index = 0;   // i with sigma(i) directly above sigma(n), 0 if in row 1
};

struct GapAudit {
  int k = 0;
  std::vector<GapAuditEntry> entries;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks the row-gap and above-entry constraints on witnesses of every
/// minimal generator of the initial ideal.
GapAudit gap_condition_audit(const Partition& lambda, const VariableOrder& order);

}  // namespace specht
