#include "specht/polyring.hpp"

#include <algorithm>
#include <stdexcept>

namespace specht {

// ----------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
  for (int e : exps_)
    if (e < 0) throw std::invalid_argument("negative exponent");
}

Monomial Monomial::variable(int n, int var) {
  if (var < 1 || var > n) throw std::invalid_argument("variable index out of range");
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  e[static_cast<std::size_t>(var - 1)] = 1;
  return Monomial(std::move(e));
}

int Monomial::degree() const {
  int d = 0;
  for (int e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  if (!divides(other)) throw std::invalid_argument(to_string() + " does not divide " + other.to_string());
  std::vector<int> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = other.exps_[i] - exps_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& other) const {
  std::vector<int> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(exps_[i], other.exps_[i]);
  return Monomial(std::move(e));
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > 0 && other.exps_[i] > 0) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (n() != other.n()) throw std::invalid_argument("monomials from different rings");
  std::vector<int> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = exps_[i] + other.exps_[i];
  return Monomial(std::move(e));
}

std::string Monomial::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += "x" + std::to_string(i + 1);
    if (exps_[i] > 1) s += "^" + std::to_string(exps_[i]);
  }
  return s.empty() ? "1" : s;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int e : m.exponents()) {
    h ^= static_cast<std::size_t>(e);
    h *= 1099511628211ull;
  }
  return h;
}

std::strong_ordering lex_compare(const Monomial& a, const Monomial& b, const VariableOrder& order) {
  if (a.n() != b.n() || a.n() != order.size())
    throw std::invalid_argument("lex_compare: ring size mismatch");
  for (int pos = order.size(); pos >= 1; --pos) {
    int v = order.at(pos);
    if (auto c = a.exponent(v) <=> b.exponent(v); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

bool IdentityLexLess::operator()(const Monomial& a, const Monomial& b) const {
  const auto& x = a.exponents();
  const auto& y = b.exponents();
  return std::lexicographical_compare(x.rbegin(), x.rend(), y.rbegin(), y.rend());
}

// ------------------------------------------------------------- WeightVector

WeightVector WeightVector::from_integers(const std::vector<long>& w) {
  std::vector<Rational> q;
  q.reserve(w.size());
  for (long x : w) q.emplace_back(x);
  return WeightVector(std::move(q));
}

Rational WeightVector::weight(const Monomial& m) const {
  if (m.n() != n()) throw std::invalid_argument("weight vector length mismatch");
  Rational s = 0;
  for (int v = 1; v <= n(); ++v)
    if (m.exponent(v) != 0) s += at(v) * m.exponent(v);
  return s;
}

std::string WeightVector::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (i) s += ',';
    s += w_[i].get_str();
  }
  return s;
}

// --------------------------------------------------------------- Polynomial

Polynomial Polynomial::constant(int n, const Integer& c) {
  Polynomial p(n);
  p.add_term(Monomial::one(n), c);
  return p;
}

Polynomial Polynomial::variable(int n, int var) {
  return monomial(Monomial::variable(n, var));
}

Polynomial Polynomial::monomial(const Monomial& m, const Integer& c) {
  Polynomial p(m.n());
  p.add_term(m, c);
  return p;
}

Integer Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Integer& c) {
  if (m.n() != n_) throw std::invalid_argument("term from a different ring");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::check_same_ring(const Polynomial& other) const {
  if (n_ != other.n_) throw std::invalid_argument("polynomials from different rings");
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_same_ring(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_same_ring(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  Polynomial r = *this;
  r += other;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  Polynomial r = *this;
  r -= other;
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  check_same_ring(other);
  Polynomial r(n_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : other.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  // Highest term first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Integer mag = abs(c);
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (m.is_one())
      s += mag.get_str();
    else if (mag == 1)
      s += m.to_string();
    else
      s += mag.get_str() + "*" + m.to_string();
  }
  return s;
}

Polynomial multiply(const Polynomial& f, const Polynomial& g) { return f * g; }

Monomial leading_monomial(const Polynomial& f, const VariableOrder& order) {
  if (f.is_zero()) throw std::invalid_argument("leading monomial of the zero polynomial");
  const Monomial* best = nullptr;
  for (const auto& [m, c] : f.terms())
    if (!best || lex_compare(m, *best, order) > 0) best = &m;
  return *best;
}

Integer leading_coefficient(const Polynomial& f, const VariableOrder& order) {
  return f.coefficient(leading_monomial(f, order));
}

Polynomial initial_form(const Polynomial& f, const WeightVector& w) {
  if (f.is_zero()) throw std::invalid_argument("initial form of the zero polynomial");
  if (w.n() != f.n()) throw std::invalid_argument("weight vector length mismatch");
  std::vector<std::pair<const Monomial*, Rational>> weighted;
  Rational best;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    Rational x = w.weight(m);
    if (first || x > best) best = x;
    first = false;
    weighted.emplace_back(&m, std::move(x));
  }
  Polynomial r(f.n());
  for (const auto& [m, x] : weighted)
    if (x == best) r.add_term(*m, f.coefficient(*m));
  return r;
}

nlohmann::json to_json(const Monomial& m) { return m.exponents(); }

nlohmann::json to_json(const Polynomial& f) {
  auto arr = nlohmann::json::array();
  for (const auto& [m, c] : f.terms()) arr.push_back({{"coeff", c.get_str()}, {"exps", to_json(m)}});
  return arr;
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  if (j.empty()) throw std::invalid_argument("cannot infer ring size of an empty polynomial");
  const int n = static_cast<int>(j.front().at("exps").size());
  Polynomial p(n);
  for (const auto& t : j) {
    Monomial m(t.at("exps").get<std::vector<int>>());
    p.add_term(m, Integer(t.at("coeff").get<std::string>()));
  }
  return p;
}

}  // namespace specht
