#include "specht/combinatorics.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace specht {

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = text.substr(start, end - start);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw std::invalid_argument("not a comma-separated integer list: '" + std::string(text) + "'");
    out.push_back(value);
    start = end + 1;
  }
  return out;
}

namespace {

std::string join(const std::vector<int>& xs, char sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(xs[i]);
  }
  return s;
}

}  // namespace

// ---------------------------------------------------------------- Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  if (n_ == 0) throw std::invalid_argument("partition of zero");
}

Partition Partition::parse(std::string_view text) { return Partition(parse_int_list(text)); }

bool Partition::has_repeated_part() const {
  return std::adjacent_find(parts_.begin(), parts_.end()) != parts_.end();
}

std::string Partition::to_string() const { return join(parts_, ','); }

// ------------------------------------------------------------ VariableOrder

VariableOrder::VariableOrder(std::vector<int> one_line) : one_line_(std::move(one_line)) {
  const int n = size();
  if (n == 0) throw std::invalid_argument("empty variable order");
  inverse_.assign(static_cast<std::size_t>(n), 0);
  for (int pos = 1; pos <= n; ++pos) {
    int v = one_line_[static_cast<std::size_t>(pos - 1)];
    if (v < 1 || v > n || inverse_[static_cast<std::size_t>(v - 1)] != 0)
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(n) + ": " +
                                  join(one_line_, ','));
    inverse_[static_cast<std::size_t>(v - 1)] = pos;
  }
}

VariableOrder VariableOrder::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return VariableOrder(std::move(v));
}

VariableOrder VariableOrder::parse(std::string_view text) {
  return VariableOrder(parse_int_list(text));
}

std::string VariableOrder::to_string() const { return join(one_line_, ','); }

// ------------------------------------------------------------------ Tableau

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  std::vector<int> lengths;
  for (const auto& r : rows_) lengths.push_back(static_cast<int>(r.size()));
  shape_ = Partition(lengths);
  if (static_cast<std::size_t>(shape_.length()) != rows_.size())
    throw std::invalid_argument("tableau has an empty row");
  const auto n = static_cast<std::size_t>(shape_.n());
  row_.assign(n, 0);
  col_.assign(n, 0);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      int e = rows_[i][j];
      if (e < 1 || static_cast<std::size_t>(e) > n || row_[static_cast<std::size_t>(e - 1)] != 0)
        throw std::invalid_argument("tableau filling is not a bijection onto 1..n");
      row_[static_cast<std::size_t>(e - 1)] = static_cast<int>(i + 1);
      col_[static_cast<std::size_t>(e - 1)] = static_cast<int>(j + 1);
    }
  }
}

Tableau Tableau::parse(std::string_view text) {
  std::vector<std::vector<int>> rows;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('/', start);
    if (end == std::string_view::npos) end = text.size();
    rows.push_back(parse_int_list(text.substr(start, end - start)));
    start = end + 1;
  }
  return Tableau(std::move(rows));
}

Tableau Tableau::swapped(int a, int b) const {
  auto rows = rows_;
  for (auto& r : rows)
    for (int& e : r) {
      if (e == a)
        e = b;
      else if (e == b)
        e = a;
    }
  return Tableau(std::move(rows));
}

Tableau Tableau::relabeled(const VariableOrder& sigma) const {
  if (sigma.size() != n()) throw std::invalid_argument("relabeling size mismatch");
  auto rows = rows_;
  for (auto& r : rows)
    for (int& e : r) e = sigma.at(e);
  return Tableau(std::move(rows));
}

std::string Tableau::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) s += '/';
    s += join(rows_[i], ',');
  }
  return s;
}

// --------------------------------------------------------------- operations

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

// Standard Young tableaux in the natural order 1 < 2 < ... < n, built by
// placing 1, 2, ..., n into successive outer corners.
void syt_rec(const Partition& shape, int next, std::vector<std::vector<int>>& rows,
             std::vector<Tableau>& out) {
  if (next > shape.n()) {
    out.emplace_back(rows);
    return;
  }
  for (int i = 0; i < shape.length(); ++i) {
    auto len = rows[static_cast<std::size_t>(i)].size();
    if (static_cast<int>(len) >= shape.part(i + 1)) continue;
    if (i > 0 && rows[static_cast<std::size_t>(i - 1)].size() <= len) continue;
    rows[static_cast<std::size_t>(i)].push_back(next);
    syt_rec(shape, next + 1, rows, out);
    rows[static_cast<std::size_t>(i)].pop_back();
  }
}

const std::vector<Tableau>& natural_standard_tableaux(const Partition& shape) {
  static std::mutex mutex;
  static std::map<Partition, std::vector<Tableau>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(shape);
  if (it != cache.end()) return it->second;
  std::vector<Tableau> out;
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.length()));
  syt_rec(shape, 1, rows, out);
  // std::map never invalidates references on insert.
  return cache.emplace(shape, std::move(out)).first->second;
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_partitions needs n >= 1");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

bool dominance_leq(const Partition& mu, const Partition& lambda) {
  if (mu.n() != lambda.n())
    throw std::invalid_argument("dominance order compares partitions of the same integer");
  int smu = 0, slam = 0;
  const int len = std::max(mu.length(), lambda.length());
  for (int i = 1; i <= len; ++i) {
    smu += mu.part(i);
    slam += lambda.part(i);
    if (smu > slam) return false;
  }
  return true;
}

int min_gap_k(const Partition& lambda) {
  if (lambda.length() < 2)
    throw std::invalid_argument("gap statistic needs at least two positive parts (got " +
                                lambda.to_string() + ")");
  int k = lambda.part(1);
  for (int i = 2; i <= lambda.length(); ++i) k = std::min(k, lambda.part(i - 1) - lambda.part(i));
  return k;
}

Partition hat(const Partition& lambda) {
  if (lambda.part(1) < 2)
    throw std::invalid_argument("hat needs a first part of at least 2 (got " +
                                lambda.to_string() + ")");
  const int target = lambda.n() - 1;
  std::vector<int> out{lambda.part(1) - 1};
  int sum_lambda = lambda.part(1);
  int sum_hat = out.back();
  for (int i = 2; sum_hat < target; ++i) {
    sum_lambda += lambda.part(i);
    int next = std::min(out.back(), sum_lambda - sum_hat - 1);
    if (next <= 0) throw std::logic_error("hat recursion stalled for " + lambda.to_string());
    out.push_back(next);
    sum_hat += next;
  }
  return Partition(std::move(out));
}

std::vector<Tableau> standard_tableaux(const Partition& shape, const VariableOrder& order) {
  if (shape.n() != order.size())
    throw std::invalid_argument("shape " + shape.to_string() + " does not match order of size " +
                                std::to_string(order.size()));
  const auto& natural = natural_standard_tableaux(shape);
  std::vector<Tableau> out;
  out.reserve(natural.size());
  for (const auto& t : natural) out.push_back(t.relabeled(order));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_column_standard(const Tableau& t, const VariableOrder& order) {
  const auto& rows = t.rows();
  for (std::size_t i = 1; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      if (!order.precedes(rows[i - 1][j], rows[i][j])) return false;
  return true;
}

bool is_row_standard(const Tableau& t, const VariableOrder& order) {
  for (const auto& r : t.rows())
    for (std::size_t j = 1; j < r.size(); ++j)
      if (!order.precedes(r[j - 1], r[j])) return false;
  return true;
}

}  // namespace specht
