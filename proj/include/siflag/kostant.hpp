#pragma once

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "siflag/polynomial.hpp"
#include "siflag/weyl.hpp"

namespace siflag {

/// Result of a stabilization scan for the stalks of M_lambda at a fixed nu.
struct StabilizationReport {
  Coweight nu;
  Int target = 0;                     ///< P(-nu, 1)
  std::optional<Coweight> stable_from;  ///< first lambda in scan order from which the rank is constant
  std::size_t box_size = 0;
};

namespace detail {

inline std::uint64_t fnv1a(const void* data, std::size_t n, std::uint64_t h = 0xcbf29ce484222325ULL) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

struct ExpansionKey {
  std::vector<Int> c;
  std::size_t k;
  friend bool operator==(const ExpansionKey&, const ExpansionKey&) = default;
};

struct ExpansionKeyHash {
  std::size_t operator()(const ExpansionKey& key) const noexcept { return hash_coords(key.c, key.k); }
};

}  // namespace detail

/**
 * q-Kostant partition function and the multiplicity formulas built on it.
 *
 * P(nu, q) = sum over maps phi: R^vee_+ -> Z_{>=0} with sum phi(b) b = nu of q^{|phi|}.
 * Computed on simple-coroot expansions by the recurrence
 *   P_k(c) = P_{k+1}(c) + q P_k(c - e_k),   P_N(c) = [c == 0],
 * over positive coroots in the datum's fixed order. The memo table is
 * shared between threads (shared mutex) and can be persisted with save()/load().
 */
class KostantCalculator {
 public:
  explicit KostantCalculator(const FiniteWeylGroup& weyl) : weyl_(weyl), datum_(weyl.datum()) {
    for (std::size_t w = 0; w < weyl_.order(); ++w) shifts_.push_back(weyl_.rho_check_shift(weyl_.element(w)));
  }

  const RootDatum& datum() const noexcept { return datum_; }

  QPolynomial partition(const Coweight& nu) const {
    auto c = datum_.coroot_expansion(nu);
    if (!c || std::any_of(c->begin(), c->end(), [](Int x) { return x < 0; })) return {};
    return partition_expansion(*c, 0);
  }

  Int partition_count(const Coweight& nu) const { return partition(nu).eval_at_one(); }

  /// dim N^vee(lambda)_mu = sum_w (-1)^{l(w)} P(w(lambda) - mu + (w(rho^vee) - rho^vee), 1).
  Int kostant_weight_multiplicity(const Coweight& lambda, const Coweight& mu) const {
    require_dominant(lambda);
    Int total = 0;
    for (std::size_t w = 0; w < weyl_.order(); ++w) {
      FiniteWeylElement e = weyl_.element(w);
      Int p = partition_count(weyl_.act(e, lambda) - mu + shifts_[w]);
      total = checked_add(total, weyl_.length(e) % 2 == 0 ? p : -p);
    }
    return total;
  }

  /// Rank of the (degree-0) stalk of M_lambda at S_nu.
  Int m_stalk_rank(const Coweight& lambda, const Coweight& nu) const {
    return kostant_weight_multiplicity(lambda, lambda + nu);
  }

  /// Costalk polynomial of M_lambda at S_nu; only defined when lambda and lambda + nu are dominant.
  QPolynomial m_costalk_poly(const Coweight& lambda, const Coweight& nu) const {
    require_dominant(lambda);
    if (!datum_.is_dominant(lambda + nu))
      throw DomainError("m_costalk_poly: formula out of proven range (lambda + nu is not dominant)");
    QPolynomial total;
    for (std::size_t w = 0; w < weyl_.order(); ++w) {
      FiniteWeylElement e = weyl_.element(w);
      QPolynomial p = partition(weyl_.act(e, lambda) - (lambda + nu) + shifts_[w]);
      if (weyl_.length(e) % 2 == 0)
        total += p;
      else
        total -= p;
    }
    return total.substitute_q_squared();
  }

  Int gaitsgory_stalk_rank(const Coweight& nu) const { return partition_count(-nu); }
  QPolynomial gaitsgory_costalk_poly(const Coweight& nu) const { return partition(-nu).substitute_q_squared(); }

  /// Dominant lambda with 0 <= <lambda, alpha_i> <= bound for every simple root, in scan order.
  std::vector<Coweight> dominant_pairing_box(Int bound) const {
    if (!datum_.is_semisimple()) throw DomainError("dominant_pairing_box needs a semisimple datum");
    std::vector<std::pair<std::vector<Int>, Coweight>> found;
    const std::size_t r = datum_.semisimple_rank();
    if (bound < 0) return {};
    std::vector<Int> p(r, 0);
    for (;;) {
      if (auto lam = datum_.coweight_with_pairings(p)) found.emplace_back(p, *lam);
      std::size_t i = 0;
      while (i < r && ++p[i] > bound) p[i] = 0, ++i;
      if (i == r) break;
    }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
      Int sa = std::accumulate(a.first.begin(), a.first.end(), Int{0});
      Int sb = std::accumulate(b.first.begin(), b.first.end(), Int{0});
      return sa != sb ? sa < sb : a.first < b.first;
    });
    std::vector<Coweight> out;
    for (auto& f : found) out.push_back(std::move(f.second));
    return out;
  }

  /**
   * First lambda of the dominant box (scan order: sum of pairings, then
   * pairings) such that m_stalk_rank(lambda', nu) = P(-nu, 1) for every
   * lambda' in the box with lambda' - lambda dominant.
   */
  StabilizationReport stabilization_check(const Coweight& nu, Int bound) const {
    if (!datum_.dominance_leq(nu, datum_.zero())) throw DomainError("stabilization_check: nu is not <= 0");
    auto box = dominant_pairing_box(bound);
    if (box.empty()) throw DomainError("stabilization_check: empty box");
    StabilizationReport rep{nu, gaitsgory_stalk_rank(nu), std::nullopt, box.size()};
    std::vector<Int> ranks;
    for (const auto& lam : box) ranks.push_back(m_stalk_rank(lam, nu));
    for (std::size_t i = 0; i < box.size() && !rep.stable_from; ++i) {
      bool ok = true;
      for (std::size_t j = 0; j < box.size() && ok; ++j)
        if (datum_.is_dominant(box[j] - box[i]) && ranks[j] != rep.target) ok = false;
      if (ok) rep.stable_from = box[i];
    }
    return rep;
  }

  std::size_t memo_size() const {
    std::shared_lock lock(mutex_);
    return memo_.size();
  }

  /// Writes the whole memo table; returns false on I/O failure.
  bool save(const std::string& path) const {
    std::string payload;
    auto put = [&](const void* p, std::size_t n) { payload.append(static_cast<const char*>(p), n); };
    const char magic[8] = {'S', 'I', 'F', 'L', 'A', 'G', 'K', '\0'};
    put(magic, 8);
    const std::uint32_t version = format_version;
    put(&version, 4);
    const std::uint64_t fp = fingerprint();
    put(&fp, 8);
    std::vector<std::pair<std::pair<std::size_t, std::vector<Int>>, QPolynomial>> rows;
    {
      std::shared_lock lock(mutex_);
      for (const auto& [key, val] : memo_) rows.emplace_back(std::pair{key.k, key.c}, val);
    }
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    const std::uint64_t count = rows.size();
    put(&count, 8);
    for (const auto& [kc, val] : rows) {
      const auto& [k, c] = kc;
      const auto kk = static_cast<std::uint32_t>(k);
      const auto r = static_cast<std::uint32_t>(c.size());
      put(&kk, 4);
      put(&r, 4);
      put(c.data(), c.size() * sizeof(Int));
      const auto n = static_cast<std::uint32_t>(val.coeffs().size());
      put(&n, 4);
      put(val.coeffs().data(), val.coeffs().size() * sizeof(Int));
    }
    const std::uint64_t sum = detail::fnv1a(payload.data(), payload.size());
    put(&sum, 8);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) return false;
    out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
    return static_cast<bool>(out);
  }

  /// Loads a table written by save(); a missing, corrupt or foreign file is ignored (returns false).
  bool load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (data.size() < 8 + 4 + 8 + 8 + 8) return false;
    std::uint64_t sum;
    std::memcpy(&sum, data.data() + data.size() - 8, 8);
    if (detail::fnv1a(data.data(), data.size() - 8) != sum) return false;
    std::size_t pos = 0;
    const std::size_t end = data.size() - 8;
    auto get = [&](void* p, std::size_t n) {
      if (pos + n > end) return false;
      std::memcpy(p, data.data() + pos, n);
      pos += n;
      return true;
    };
    char magic[8];
    std::uint32_t version;
    std::uint64_t fp, count;
    if (!get(magic, 8) || std::memcmp(magic, "SIFLAGK", 8) != 0) return false;
    if (!get(&version, 4) || version != format_version) return false;
    if (!get(&fp, 8) || fp != fingerprint()) return false;
    if (!get(&count, 8)) return false;
    std::vector<std::pair<detail::ExpansionKey, QPolynomial>> rows;
    for (std::uint64_t i = 0; i < count; ++i) {
      std::uint32_t k, r, n;
      if (!get(&k, 4) || k >= datum_.num_pos_roots()) return false;
      if (!get(&r, 4) || r != datum_.semisimple_rank()) return false;
      std::vector<Int> c(r);
      if (!get(c.data(), r * sizeof(Int)) || !get(&n, 4)) return false;
      std::vector<Int> coeffs(n);
      if (!get(coeffs.data(), n * sizeof(Int))) return false;
      rows.emplace_back(detail::ExpansionKey{std::move(c), k}, QPolynomial(std::move(coeffs)));
    }
    if (pos != end) return false;
    std::unique_lock lock(mutex_);
    for (auto& [k, v] : rows) memo_.emplace(std::move(k), std::move(v));
    return true;
  }

  static constexpr std::uint32_t format_version = 1;

 private:
  void require_dominant(const Coweight& lambda) const {
    if (!datum_.is_dominant(lambda)) throw DomainError("lambda is not dominant");
  }

  std::uint64_t fingerprint() const {
    std::string s = datum_.to_json().dump();
    return detail::fnv1a(s.data(), s.size());
  }

  QPolynomial partition_expansion(const std::vector<Int>& c, std::size_t k) const {
    const auto& coroots = datum_.coroot_expansions();
    if (k == coroots.size())
      return std::all_of(c.begin(), c.end(), [](Int x) { return x == 0; }) ? QPolynomial::constant(1) : QPolynomial{};
    detail::ExpansionKey key{c, k};
    {
      std::shared_lock lock(mutex_);
      auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
    }
    QPolynomial result = partition_expansion(c, k + 1);
    std::vector<Int> rest = c;
    bool fits = true;
    for (std::size_t j = 0; j < c.size(); ++j) {
      rest[j] -= coroots[k][j];
      if (rest[j] < 0) fits = false;
    }
    if (fits) result += partition_expansion(rest, k).shifted(1);
    std::unique_lock lock(mutex_);
    memo_.emplace(std::move(key), result);
    return result;
  }

  const FiniteWeylGroup& weyl_;
  const RootDatum& datum_;
  std::vector<Coweight> shifts_;
  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<detail::ExpansionKey, QPolynomial, detail::ExpansionKeyHash> memo_;
};

/**
 * Freudenthal recursion for the weight multiplicities of the irreducible
 * (char 0) module of the dual group with highest weight lambda, and the
 * Weyl dimension formula. Independent of the partition-function code path:
 * it only uses the roots, the coroots and simple reflections.
 *
 * Uses the W-invariant form (a, b) = sum_{alpha > 0} <a, alpha><b, alpha> on Y.
 */
class FreudenthalOracle {
 public:
  explicit FreudenthalOracle(const RootDatum& datum) : datum_(datum) {}

  Int multiplicity(const Coweight& lambda, const Coweight& mu) const {
    require_dominant(lambda);
    return dominant_mult(lambda, dominant(mu));
  }

  Int weyl_dimension(const Coweight& lambda) const {
    require_dominant(lambda);
    __int128 num = 1, den = 1;
    for (const auto& a : datum_.pos_roots()) {
      __int128 n = 2 * pair(lambda, a) + pair(datum_.two_rho_check(), a);
      __int128 d = pair(datum_.two_rho_check(), a);
      num *= n;
      den *= d;
      __int128 g = gcd128(num, den);
      num /= g;
      den /= g;
    }
    if (den != 1) throw Error("internal error: Weyl dimension is not an integer");
    if (num > static_cast<__int128>(INT64_MAX)) throw Error("integer overflow");
    return static_cast<Int>(num);
  }

  /// Dominant mu <= lambda, sorted.
  std::vector<Coweight> dominant_weights(const Coweight& lambda) const {
    require_dominant(lambda);
    Coweight low = antidominant(lambda);
    auto top = datum_.coroot_expansion(lambda - low);
    const std::size_t r = datum_.semisimple_rank();
    std::vector<Coweight> out;
    std::vector<Int> c(r, 0);
    for (;;) {
      Coweight mu = lambda;
      for (std::size_t i = 0; i < r; ++i) mu -= c[i] * datum_.simple_coroots()[i];
      if (datum_.is_dominant(mu)) out.push_back(mu);
      std::size_t i = 0;
      while (i < r && ++c[i] > (*top)[i]) c[i] = 0, ++i;
      if (i == r) break;
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// All weights of the module (each listed once), with multiplicities.
  std::map<Coweight, Int> character(const Coweight& lambda) const {
    std::map<Coweight, Int> out;
    for (const auto& d : dominant_weights(lambda)) {
      Int m = dominant_mult(lambda, d);
      if (m == 0) continue;
      std::vector<Coweight> orbit{d};
      std::set<Coweight> seen{d};
      for (std::size_t h = 0; h < orbit.size(); ++h)
        for (std::size_t i = 0; i < datum_.semisimple_rank(); ++i) {
          Coweight s = datum_.reflect(i, orbit[h]);
          if (seen.insert(s).second) orbit.push_back(s);
        }
      for (const auto& w : orbit) out[w] = m;
    }
    return out;
  }

 private:
  static __int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  void require_dominant(const Coweight& lambda) const {
    if (!datum_.is_dominant(lambda)) throw DomainError("lambda is not dominant");
  }

  Int form(const Coweight& a, const Coweight& b) const {
    Int s = 0;
    for (const auto& r : datum_.pos_roots()) s = checked_add(s, checked_mul(pair(a, r), pair(b, r)));
    return s;
  }

  Coweight dominant(Coweight mu) const {
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t i = 0; i < datum_.semisimple_rank(); ++i)
        if (pair(mu, datum_.simple_roots()[i]) < 0) {
          mu = datum_.reflect(i, mu);
          changed = true;
        }
    }
    return mu;
  }

  Coweight antidominant(Coweight mu) const {
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t i = 0; i < datum_.semisimple_rank(); ++i)
        if (pair(mu, datum_.simple_roots()[i]) > 0) {
          mu = datum_.reflect(i, mu);
          changed = true;
        }
    }
    return mu;
  }

  // (|lambda+rho|^2 - |mu+rho|^2) m(mu) = 2 sum_{beta>0} sum_{k>=1} m(mu + k beta^vee) (mu + k beta^vee, beta^vee)
  Int dominant_mult(const Coweight& lambda, const Coweight& mu) const {
    if (mu == lambda) return 1;
    if (!datum_.dominance_leq(mu, lambda)) return 0;
    auto& memo = memo_[lambda];
    if (auto it = memo.find(mu); it != memo.end()) return it->second;
    const Int lhs = form(lambda - mu, lambda + mu + datum_.two_rho_check());
    Int rhs = 0;
    for (const auto& b : datum_.pos_coroots()) {
      Coweight nu = mu + b;
      for (;;) {
        Coweight d = dominant(nu);
        if (!datum_.dominance_leq(d, lambda)) break;
        rhs = checked_add(rhs, checked_mul(2 * dominant_mult(lambda, d), form(nu, b)));
        nu += b;
      }
    }
    if (lhs <= 0 || rhs % lhs != 0) throw Error("internal error: Freudenthal recursion is not integral");
    const Int m = rhs / lhs;
    memo_[lambda].emplace(mu, m);
    return m;
  }

  const RootDatum& datum_;
  mutable std::map<Coweight, std::map<Coweight, Int>> memo_;
};

}  // namespace siflag
