#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "siflag/extweyl.hpp"
#include "siflag/polynomial.hpp"

namespace siflag {

/// Finite Z[v, v^-1]-linear combination of standard basis elements H_x; zero coefficients are never stored.
class HeckeElement {
 public:
  using Terms = std::map<ExtAffineElement, LaurentPolynomial>;

  HeckeElement() = default;
  explicit HeckeElement(Terms terms) : terms_(std::move(terms)) { prune(); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  LaurentPolynomial coeff(const ExtAffineElement& x) const {
    auto it = terms_.find(x);
    return it == terms_.end() ? LaurentPolynomial{} : it->second;
  }

  void add(const ExtAffineElement& x, const LaurentPolynomial& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(x, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  HeckeElement& operator+=(const HeckeElement& o) {
    for (const auto& [x, c] : o.terms_) add(x, c);
    return *this;
  }
  HeckeElement& operator-=(const HeckeElement& o) {
    for (const auto& [x, c] : o.terms_) add(x, -c);
    return *this;
  }
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  friend HeckeElement operator*(const LaurentPolynomial& s, const HeckeElement& a) {
    HeckeElement r;
    for (const auto& [x, c] : a.terms_) r.add(x, s * c);
    return r;
  }

  friend bool operator==(const HeckeElement&, const HeckeElement&) = default;

 private:
  void prune() {
    for (auto it = terms_.begin(); it != terms_.end();)
      it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  Terms terms_;
};

/// Outcome of check_bernstein_relations.
struct BernsteinCheck {
  enum class Kind { commutes, conjugates, not_applicable };
  Kind kind = Kind::not_applicable;
  Int pairing = 0;
  bool passed = true;
};

inline const char* to_string(BernsteinCheck::Kind k) {
  switch (k) {
    case BernsteinCheck::Kind::commutes:
      return "commutes";
    case BernsteinCheck::Kind::conjugates:
      return "conjugates";
    default:
      return "n/a";
  }
}

/**
 * The extended affine Hecke algebra over Z[v, v^-1] in the standard basis.
 *
 * Normalization: H_s^2 = 1 + (v^-1 - v) H_s for s in S_aff, so
 * H_s^{-1} = H_s + (v - v^-1); H_x H_y = H_{xy} whenever lengths add, and
 * H_omega H_x = H_{omega x} for l(omega) = 0.
 *
 * Products are computed by factoring the basis elements of one operand
 * into S_aff letters and a length-zero tail (greedy descent) and applying
 * the letters one at a time.
 */
class HeckeAlgebra {
 public:
  explicit HeckeAlgebra(const ExtAffineWeylGroup& group) : group_(group) {}

  const ExtAffineWeylGroup& group() const noexcept { return group_; }

  HeckeElement one() const { return basis(group_.identity()); }
  HeckeElement basis(const ExtAffineElement& x) const {
    HeckeElement h;
    h.add(x, 1);
    return h;
  }
  HeckeElement scalar(const LaurentPolynomial& c) const {
    HeckeElement h;
    h.add(group_.identity(), c);
    return h;
  }

  /// v^-1 - v
  static LaurentPolynomial quadratic_coeff() { return LaurentPolynomial::monomial(-1) - LaurentPolynomial::monomial(1); }

  HeckeElement mul(const HeckeElement& a, const HeckeElement& b) const {
    if (a.is_zero() || b.is_zero()) return {};
    if (total_length(b) <= total_length(a)) {
      HeckeElement out;
      for (const auto& [y, c] : b.terms()) out += c * right_mul_basis(a, y);
      return out;
    }
    HeckeElement out;
    for (const auto& [x, c] : a.terms()) out += c * left_mul_basis(x, b);
    return out;
  }

  HeckeElement mul(std::initializer_list<HeckeElement> factors) const {
    HeckeElement r = one();
    for (const auto& f : factors) r = mul(r, f);
    return r;
  }

  /// a * H_y.
  HeckeElement right_mul_basis(const HeckeElement& a, const ExtAffineElement& y) const {
    const auto& [letters, tail] = factor(y);
    Work w(a.terms().begin(), a.terms().end());
    for (std::size_t s : letters) right_letter(w, s);
    return relabel_right(w, tail);
  }

  /// H_x * b.
  HeckeElement left_mul_basis(const ExtAffineElement& x, const HeckeElement& b) const {
    const auto& [letters, tail] = factor(x);
    Work w;
    for (const auto& [y, c] : b.terms()) w.emplace(group_.compose(tail, y), c);
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) left_letter(w, *it);
    return to_element(w);
  }

  /// N with H_w N = 1, i.e. N = H_w^{-1}.
  HeckeElement std_inverse(const ExtAffineElement& w) const {
    {
      std::shared_lock lock(mutex_);
      if (auto it = inverse_cache_.find(w); it != inverse_cache_.end()) return it->second;
    }
    const auto& [letters, tail] = factor(w);
    // H_w = H_{s_1} ... H_{s_k} H_omega, so H_w^{-1} = H_{omega^{-1}} H_{s_k}^{-1} ... H_{s_1}^{-1}.
    Work cur;
    cur.emplace(group_.invert(tail), LaurentPolynomial(1));
    const LaurentPolynomial shift = LaurentPolynomial::monomial(1) - LaurentPolynomial::monomial(-1);
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
      Work scaled = cur;
      right_letter(cur, *it);
      for (auto& [x, c] : scaled) accumulate(cur, x, shift * c);
    }
    HeckeElement r = to_element(cur);
    std::unique_lock lock(mutex_);
    inverse_cache_.emplace(w, r);
    return r;
  }

  /// theta_lambda = (H_{t_mu})^{-1} H_{t_{lambda + mu}} for the smallest admissible dominant shift mu.
  HeckeElement bernstein(const Coweight& lambda) const {
    {
      std::shared_lock lock(mutex_);
      if (auto it = theta_cache_.find(lambda); it != theta_cache_.end()) return it->second;
    }
    HeckeElement r = bernstein_with_shift(lambda, group_.datum().min_dominant_shift(lambda));
    std::unique_lock lock(mutex_);
    theta_cache_.emplace(lambda, r);
    return r;
  }

  /// theta_lambda presented with an explicit shift mu (mu and lambda + mu dominant).
  HeckeElement bernstein_with_shift(const Coweight& lambda, const Coweight& mu) const {
    const RootDatum& d = group_.datum();
    if (!d.is_dominant(mu) || !d.is_dominant(lambda + mu))
      throw DomainError("bernstein: shift must make mu and lambda + mu dominant");
    return right_mul_basis(std_inverse(group_.translation(mu)), group_.translation(lambda + mu));
  }

  /// Image of the Wakimoto object for x = t_lambda w_f: theta_lambda H_{w_f}.
  HeckeElement wakimoto(const ExtAffineElement& x) const {
    return right_mul_basis(bernstein(x.trans), group_.from_finite(x.fin));
  }

  /// Braid-group identities for theta_lambda and a finite simple reflection s = s_alpha.
  BernsteinCheck check_bernstein_relations(const Coweight& lambda, std::size_t alpha) const {
    const RootDatum& d = group_.datum();
    if (alpha >= d.semisimple_rank()) throw DomainError("simple root index out of range");
    BernsteinCheck out;
    out.pairing = pair(lambda, d.simple_roots()[alpha]);
    const HeckeElement hs = basis(group_.s_aff()[alpha]);
    if (out.pairing == 0) {
      out.kind = BernsteinCheck::Kind::commutes;
      const HeckeElement th = bernstein(lambda);
      out.passed = mul(hs, th) == mul(th, hs);
    } else if (out.pairing == 1) {
      out.kind = BernsteinCheck::Kind::conjugates;
      out.passed = mul({hs, bernstein(d.reflect(alpha, lambda)), hs}) == bernstein(lambda);
    }
    return out;
  }

  /// Order of s_i s_j in W_ext (0 if larger than 12, i.e. treated as infinite).
  int braid_order(std::size_t i, std::size_t j) const {
    const auto& s = group_.s_aff();
    ExtAffineElement st = group_.compose(s[i], s[j]);
    ExtAffineElement p = st;
    for (int m = 1; m <= 12; ++m) {
      if (group_.is_identity(p)) return m;
      p = group_.compose(p, st);
    }
    return 0;
  }

  /// H_s H_t H_s ... = H_t H_s H_t ... (m factors each); nullopt when s t has infinite order.
  std::optional<bool> braid_relation_holds(std::size_t i, std::size_t j) const {
    int m = braid_order(i, j);
    if (m == 0) return std::nullopt;
    const auto& s = group_.s_aff();
    HeckeElement lhs = one(), rhs = one();
    for (int k = 0; k < m; ++k) {
      lhs = right_mul_basis(lhs, s[k % 2 == 0 ? i : j]);
      rhs = right_mul_basis(rhs, s[k % 2 == 0 ? j : i]);
    }
    return lhs == rhs;
  }

  /// Terms sorted by decreasing length, then canonical form: "H[t[1]*s1]*(v^-1 - v) + 1".
  std::string to_string(const HeckeElement& h) const {
    if (h.is_zero()) return "0";
    std::string s;
    for (const auto& [x, c] : sorted_terms(h)) {
      if (group_.is_identity(x)) {
        auto t = c.terms();
        if (t.size() > 1)
          s += (s.empty() ? "(" : " + (") + c.str() + ")";
        else if (!s.empty() && t.begin()->second < 0)
          s += " - " + (-c).str();
        else
          s += (s.empty() ? "" : " + ") + c.str();
        continue;
      }
      if (!s.empty()) s += " + ";
      s += "H[" + group_.to_string(x) + "]";
      if (!(c == LaurentPolynomial(1))) s += "*(" + c.str() + ")";
    }
    return s;
  }

  nlohmann::ordered_json to_json(const HeckeElement& h) const {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& [x, c] : sorted_terms(h)) j.push_back({{"w", group_.to_string(x)}, {"coeff", c.to_json()}});
    return j;
  }

  std::vector<std::pair<ExtAffineElement, LaurentPolynomial>> sorted_terms(const HeckeElement& h) const {
    std::vector<std::tuple<Int, ExtAffineElement, LaurentPolynomial>> rows;
    for (const auto& [x, c] : h.terms()) rows.emplace_back(group_.length(x), x, c);
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
      if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) > std::get<0>(b);
      return std::get<1>(a) < std::get<1>(b);
    });
    std::vector<std::pair<ExtAffineElement, LaurentPolynomial>> out;
    for (auto& r : rows) out.emplace_back(std::move(std::get<1>(r)), std::move(std::get<2>(r)));
    return out;
  }

 private:
  using Work = std::unordered_map<ExtAffineElement, LaurentPolynomial>;
  using Factorization = std::pair<std::vector<std::size_t>, ExtAffineElement>;

  static void accumulate(Work& w, const ExtAffineElement& x, const LaurentPolynomial& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = w.try_emplace(x, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) w.erase(it);
    }
  }

  static HeckeElement to_element(const Work& w) {
    HeckeElement::Terms t(w.begin(), w.end());
    return HeckeElement(std::move(t));
  }

  Int total_length(const HeckeElement& h) const {
    Int s = 0;
    for (const auto& [x, c] : h.terms()) s += group_.length(x);
    return s;
  }

  const Factorization& factor(const ExtAffineElement& x) const {
    {
      std::shared_lock lock(mutex_);
      if (auto it = factor_cache_.find(x); it != factor_cache_.end()) return it->second;
    }
    Factorization f = group_.reduced_word(x);
    std::unique_lock lock(mutex_);
    return factor_cache_.emplace(x, std::move(f)).first->second;
  }

  // w <- w * H_s
  void right_letter(Work& w, std::size_t s) const {
    const ExtAffineElement& sx = group_.s_aff()[s];
    Work out;
    out.reserve(w.size() * 2);
    for (const auto& [x, c] : w) {
      ExtAffineElement xs = group_.compose(x, sx);
      if (group_.length(xs) > group_.length(x)) {
        accumulate(out, xs, c);
      } else {
        accumulate(out, xs, c);
        accumulate(out, x, quadratic_coeff() * c);
      }
    }
    w = std::move(out);
  }

  // w <- H_s * w
  void left_letter(Work& w, std::size_t s) const {
    const ExtAffineElement& sx = group_.s_aff()[s];
    Work out;
    out.reserve(w.size() * 2);
    for (const auto& [x, c] : w) {
      ExtAffineElement xs = group_.compose(sx, x);
      if (group_.length(xs) > group_.length(x)) {
        accumulate(out, xs, c);
      } else {
        accumulate(out, xs, c);
        accumulate(out, x, quadratic_coeff() * c);
      }
    }
    w = std::move(out);
  }

  HeckeElement relabel_right(const Work& w, const ExtAffineElement& omega) const {
    if (group_.is_identity(omega)) return to_element(w);
    HeckeElement r;
    for (const auto& [x, c] : w) r.add(group_.compose(x, omega), c);
    return r;
  }

  const ExtAffineWeylGroup& group_;
  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<ExtAffineElement, Factorization> factor_cache_;
  mutable std::unordered_map<ExtAffineElement, HeckeElement> inverse_cache_;
  mutable std::map<Coweight, HeckeElement> theta_cache_;
};

}  // namespace siflag
