#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "siflag/lattice.hpp"

namespace siflag {

/// Polynomial in q with integer coefficients, stored densely from q^0; no trailing zeros.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
  static QPolynomial constant(Int a) { return QPolynomial(std::vector<Int>{a}); }
  static QPolynomial monomial(std::size_t deg, Int a = 1) {
    std::vector<Int> c(deg + 1, 0);
    c[deg] = a;
    return QPolynomial(std::move(c));
  }

  bool is_zero() const noexcept { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  Int coeff(std::size_t k) const noexcept { return k < c_.size() ? c_[k] : 0; }
  const std::vector<Int>& coeffs() const noexcept { return c_; }

  Int eval_at_one() const {
    Int s = 0;
    for (Int x : c_) s = checked_add(s, x);
    return s;
  }

  /// p(q) -> p(q^2).
  QPolynomial substitute_q_squared() const {
    if (c_.empty()) return {};
    std::vector<Int> r(2 * c_.size() - 1, 0);
    for (std::size_t k = 0; k < c_.size(); ++k) r[2 * k] = c_[k];
    return QPolynomial(std::move(r));
  }

  QPolynomial& operator+=(const QPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] = checked_add(c_[k], o.c_[k]);
    trim();
    return *this;
  }
  QPolynomial& operator-=(const QPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] = checked_add(c_[k], -o.c_[k]);
    trim();
    return *this;
  }
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }

  /// Multiplication by q^k.
  QPolynomial shifted(std::size_t k) const {
    if (c_.empty()) return {};
    std::vector<Int> r(k, 0);
    r.insert(r.end(), c_.begin(), c_.end());
    return QPolynomial(std::move(r));
  }

  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

  /// {"q^0":c0,"q^2":c2,...} with zero coefficients omitted.
  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (std::size_t k = 0; k < c_.size(); ++k)
      if (c_[k] != 0) j["q^" + std::to_string(k)] = c_[k];
    return j;
  }

  static QPolynomial from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("q-polynomial JSON must be an object");
    std::vector<Int> c;
    for (auto it = j.begin(); it != j.end(); ++it) {
      const std::string& key = it.key();
      if (key.rfind("q^", 0) != 0 || key.size() < 3) throw ParseError("bad q-polynomial key '" + key + "'");
      std::size_t pos = 0;
      unsigned long e = std::stoul(key.substr(2), &pos);
      if (pos != key.size() - 2) throw ParseError("bad q-polynomial key '" + key + "'");
      if (!it.value().is_number_integer()) throw ParseError("q-polynomial coefficient must be an integer");
      if (e >= c.size()) c.resize(e + 1, 0);
      c[e] = it.value().get<Int>();
    }
    return QPolynomial(std::move(c));
  }

  /// "q^2 + q^4", "1", "0".
  std::string str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      Int a = c_[k];
      if (a == 0) continue;
      if (!s.empty()) s += a < 0 ? " - " : " + ";
      else if (a < 0) s += "-";
      Int m = a < 0 ? -a : a;
      if (k == 0)
        s += std::to_string(m);
      else {
        if (m != 1) s += std::to_string(m) + "*";
        s += k == 1 ? "q" : "q^" + std::to_string(k);
      }
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Int> c_;
};

/**
 * Laurent polynomial in v with integer coefficients.
 *
 * Dense storage with an exponent offset: value = sum_k c_[k] v^{low_ + k}.
 * Normalized so that the first and last stored coefficients are nonzero.
 */
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  LaurentPolynomial(Int constant) {  // NOLINT: implicit from integers is convenient in formulas
    if (constant != 0) c_ = {constant};
  }
  static LaurentPolynomial monomial(long exp, Int a = 1) {
    LaurentPolynomial p;
    if (a != 0) {
      p.low_ = exp;
      p.c_ = {a};
    }
    return p;
  }
  static LaurentPolynomial from_terms(const std::map<long, Int>& terms) {
    LaurentPolynomial p;
    for (const auto& [e, a] : terms) p += monomial(e, a);
    return p;
  }

  bool is_zero() const noexcept { return c_.empty(); }
  long min_exp() const noexcept { return low_; }
  long max_exp() const noexcept { return low_ + static_cast<long>(c_.size()) - 1; }
  Int coeff(long e) const noexcept {
    if (c_.empty() || e < low_ || e > max_exp()) return 0;
    return c_[static_cast<std::size_t>(e - low_)];
  }
  std::map<long, Int> terms() const {
    std::map<long, Int> t;
    for (std::size_t k = 0; k < c_.size(); ++k)
      if (c_[k] != 0) t[low_ + static_cast<long>(k)] = c_[k];
    return t;
  }

  /// A unit is +-v^k.
  bool is_unit() const noexcept { return c_.size() == 1 && (c_[0] == 1 || c_[0] == -1); }

  LaurentPolynomial& operator+=(const LaurentPolynomial& o) {
    if (o.c_.empty()) return *this;
    if (c_.empty()) return *this = o;
    long lo = std::min(low_, o.low_), hi = std::max(max_exp(), o.max_exp());
    if (lo < low_ || hi > max_exp()) {
      std::vector<Int> r(static_cast<std::size_t>(hi - lo + 1), 0);
      std::copy(c_.begin(), c_.end(), r.begin() + (low_ - lo));
      c_ = std::move(r);
      low_ = lo;
    }
    for (std::size_t k = 0; k < o.c_.size(); ++k) {
      Int& t = c_[static_cast<std::size_t>(o.low_ - low_) + k];
      t = checked_add(t, o.c_[k]);
    }
    normalize();
    return *this;
  }
  LaurentPolynomial& operator-=(const LaurentPolynomial& o) { return *this += -o; }
  LaurentPolynomial& operator*=(const LaurentPolynomial& o) { return *this = *this * o; }

  friend LaurentPolynomial operator-(LaurentPolynomial a) {
    for (Int& x : a.c_) x = -x;
    return a;
  }
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a += -b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial r;
    if (a.c_.empty() || b.c_.empty()) return r;
    r.low_ = a.low_ + b.low_;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        r.c_[i + j] = checked_add(r.c_[i + j], checked_mul(a.c_[i], b.c_[j]));
    }
    r.normalize();
    return r;
  }

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.c_ == b.c_ && (a.c_.empty() || a.low_ == b.low_);
  }

  /// "v^-1 - v", "1", "0"; ascending exponents.
  std::string str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      Int a = c_[k];
      if (a == 0) continue;
      long e = low_ + static_cast<long>(k);
      if (!s.empty()) s += a < 0 ? " - " : " + ";
      else if (a < 0) s += "-";
      Int m = a < 0 ? -a : a;
      if (e == 0)
        s += std::to_string(m);
      else {
        if (m != 1) s += std::to_string(m) + "*";
        s += e == 1 ? "v" : "v^" + std::to_string(e);
      }
    }
    return s;
  }

  /// {"-1":1,"1":-1}: exponent -> coefficient.
  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [e, a] : terms()) j[std::to_string(e)] = a;
    return j;
  }

  static LaurentPolynomial from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("Laurent polynomial JSON must be an object");
    std::map<long, Int> t;
    for (auto it = j.begin(); it != j.end(); ++it) {
      std::size_t pos = 0;
      long e = std::stol(it.key(), &pos);
      if (pos != it.key().size() || !it.value().is_number_integer())
        throw ParseError("bad Laurent polynomial term '" + it.key() + "'");
      t[e] += it.value().get<Int>();
    }
    return from_terms(t);
  }

 private:
  void normalize() {
    std::size_t b = 0;
    while (b < c_.size() && c_[b] == 0) ++b;
    if (b == c_.size()) {
      c_.clear();
      low_ = 0;
      return;
    }
    std::size_t e = c_.size();
    while (c_[e - 1] == 0) --e;
    if (b > 0 || e < c_.size()) c_ = std::vector<Int>(c_.begin() + static_cast<long>(b), c_.begin() + static_cast<long>(e));
    low_ += static_cast<long>(b);
  }

  long low_ = 0;
  std::vector<Int> c_;
};

}  // namespace siflag
