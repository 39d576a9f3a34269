#pragma once

#include <compare>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace specht {

/// A partition of n: weakly decreasing positive parts. Trailing zeros given
/// to the constructor are dropped, so (2,1,0) and (2,1) compare equal.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  /// Parses "4,2,1".
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int n() const { return n_; }
  int length() const { return static_cast<int>(parts_.size()); }

  /// 1-based part lookup; zero past the last positive part.
  int part(int i) const {
    return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
  }

  bool has_repeated_part() const;
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// A permutation sigma of {1..n} in one-line notation, read as the variable
/// order x_{sigma(1)} < x_{sigma(2)} < ... < x_{sigma(n)}.
class VariableOrder {
 public:
  VariableOrder() = default;
  explicit VariableOrder(std::vector<int> one_line);

  static VariableOrder identity(int n);
  static VariableOrder parse(std::string_view text);

  int size() const { return static_cast<int>(one_line_.size()); }
  /// sigma(pos), both 1-based.
  int at(int pos) const { return one_line_[static_cast<std::size_t>(pos - 1)]; }
  /// sigma^{-1}(value), both 1-based.
  int position(int value) const { return inverse_[static_cast<std::size_t>(value - 1)]; }
  /// True iff x_a is strictly smaller than x_b.
  bool precedes(int a, int b) const { return position(a) < position(b); }

  const std::vector<int>& one_line() const { return one_line_; }
  std::string to_string() const;

  friend bool operator==(const VariableOrder& a, const VariableOrder& b) {
    return a.one_line_ == b.one_line_;
  }
  friend auto operator<=>(const VariableOrder& a, const VariableOrder& b) {
    return a.one_line_ <=> b.one_line_;
  }

 private:
  std::vector<int> one_line_;
  std::vector<int> inverse_;
};

/// A bijective filling of a Young diagram by {1..n}.
class Tableau {
 public:
  Tableau() = default;
  explicit Tableau(std::vector<std::vector<int>> rows);

  /// Parses "1,2/3" (rows separated by '/').
  static Tableau parse(std::string_view text);

  const Partition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int n() const { return shape_.n(); }

  /// 1-based row containing entry.
  int row_of(int entry) const { return row_[static_cast<std::size_t>(entry - 1)]; }
  /// 1-based column containing entry.
  int column_of(int entry) const { return col_[static_cast<std::size_t>(entry - 1)]; }
  /// Entry at 1-based (row, column).
  int at(int row, int column) const {
    return rows_[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(column - 1)];
  }

  bool same_column(int a, int b) const { return column_of(a) == column_of(b); }

  /// The tableau with entries a and b exchanged.
  Tableau swapped(int a, int b) const;
  /// The tableau with every entry e replaced by sigma(e).
  Tableau relabeled(const VariableOrder& sigma) const;

  std::string to_string() const;

  friend bool operator==(const Tableau& a, const Tableau& b) { return a.rows_ == b.rows_; }
  friend auto operator<=>(const Tableau& a, const Tableau& b) { return a.rows_ <=> b.rows_; }

 private:
  std::vector<std::vector<int>> rows_;
  Partition shape_;
  std::vector<int> row_;
  std::vector<int> col_;
};

/// All partitions of n in decreasing lexicographic order.
std::vector<Partition> enumerate_partitions(int n);

/// mu is dominated by lambda (prefix sums of mu never exceed those of lambda).
bool dominance_leq(const Partition& mu, const Partition& lambda);

/// Smallest gap between consecutive positive parts.
int min_gap_k(const Partition& lambda);

/// The partition of n-1 cut out of lambda by eliminating the largest variable.
Partition hat(const Partition& lambda);

/// Every tableau of the given shape whose rows and columns increase in the
/// order sigma, sorted by row reading.
std::vector<Tableau> standard_tableaux(const Partition& shape, const VariableOrder& order);

bool is_column_standard(const Tableau& t, const VariableOrder& order);
bool is_row_standard(const Tableau& t, const VariableOrder& order);
inline bool is_standard(const Tableau& t, const VariableOrder& order) {
  return is_column_standard(t, order) && is_row_standard(t, order);
}

inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << "(" << p.to_string() << ")"; }
inline std::ostream& operator<<(std::ostream& os, const VariableOrder& s) { return os << "[" << s.to_string() << "]"; }
inline std::ostream& operator<<(std::ostream& os, const Tableau& t) { return os << t.to_string(); }

/// Comma-separated positive integers; throws std::invalid_argument on junk.
std::vector<int> parse_int_list(std::string_view text);

}  // namespace specht
