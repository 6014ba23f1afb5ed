#pragma once

#include <algorithm>
#include <cstdlib>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "siflag/weyl.hpp"

namespace siflag {

/// x = t_trans * fin, an element of W_ext = W_f |x Y in canonical (translation first) form.
struct ExtAffineElement {
  Coweight trans;
  FiniteWeylElement fin;

  friend bool operator==(const ExtAffineElement&, const ExtAffineElement&) = default;
  friend auto operator<=>(const ExtAffineElement& a, const ExtAffineElement& b) {
    if (auto c = a.trans <=> b.trans; c != 0) return c;
    return a.fin <=> b.fin;
  }
};

}  // namespace siflag

template <>
struct std::hash<siflag::ExtAffineElement> {
  std::size_t operator()(const siflag::ExtAffineElement& x) const noexcept {
    return siflag::hash_coords(x.trans.coords(), x.fin.index * 0x100000001b3ULL);
  }
};

namespace siflag {

/// The affine root (alpha, n), i.e. the affine function v -> <v, alpha> + n; alpha is a signed root index.
struct AffineRoot {
  int root = 0;
  Int level = 0;
  friend bool operator==(const AffineRoot&, const AffineRoot&) = default;
};

/**
 * Positivity conventions for affine roots.
 *
 * `alcove`: positive on the fundamental alcove {-1 <= <v, alpha> <= 0};
 *   (alpha, n) is positive iff n >= 1 for alpha > 0, n >= 0 for alpha < 0.
 * `iwahori`: U_{alpha + n hbar} lies in the Iwahori attached to the positive Borel;
 *   positive iff n >= 0 for alpha > 0, n >= 1 for alpha < 0.
 *
 * Only `alcove` makes the inversion count agree with the length function.
 */
enum class AffinePositivity { alcove, iwahori };

inline bool is_positive(const AffineRoot& r, AffinePositivity conv = AffinePositivity::alcove) {
  bool up = r.root > 0;
  if (conv == AffinePositivity::iwahori) up = !up;
  return up ? r.level >= 1 : r.level >= 0;
}

/// The alcove x(A_0), represented by the unique W_aff element sending A_0 to it.
struct Alcove {
  ExtAffineElement rep;
  friend bool operator==(const Alcove&, const Alcove&) = default;
};

/**
 * The extended affine Weyl group W_ext = W_f |x Y of a root datum.
 *
 * Owns the enumerated finite Weyl group, the affine simple reflections, the
 * length-zero subgroup Omega and a memo table for Bruhat comparisons. The
 * memo table is guarded by a shared mutex; all other members are immutable
 * after construction, so one instance can be shared between threads.
 */
class ExtAffineWeylGroup {
 public:
  explicit ExtAffineWeylGroup(std::shared_ptr<const RootDatum> datum)
      : datum_(datum), finite_(std::move(datum)) {
    build_saff();
    if (datum_->is_semisimple()) build_omega();
  }

  explicit ExtAffineWeylGroup(RootDatum datum) : ExtAffineWeylGroup(std::make_shared<const RootDatum>(std::move(datum))) {}

  ExtAffineWeylGroup(const ExtAffineWeylGroup&) = delete;
  ExtAffineWeylGroup& operator=(const ExtAffineWeylGroup&) = delete;

  const RootDatum& datum() const noexcept { return *datum_; }
  std::shared_ptr<const RootDatum> datum_ptr() const noexcept { return datum_; }
  const FiniteWeylGroup& finite() const noexcept { return finite_; }

  ExtAffineElement identity() const { return {datum_->zero(), finite_.identity()}; }
  ExtAffineElement translation(const Coweight& lambda) const {
    check_rank(lambda);
    return {lambda, finite_.identity()};
  }
  ExtAffineElement from_finite(FiniteWeylElement w) const { return {datum_->zero(), w}; }
  ExtAffineElement make(const Coweight& lambda, FiniteWeylElement w) const {
    check_rank(lambda);
    return {lambda, w};
  }

  bool is_identity(const ExtAffineElement& x) const { return x.fin.index == 0 && x.trans.is_zero(); }

  /// (t_l w)(t_m u) = t_{l + w(m)} wu.
  ExtAffineElement compose(const ExtAffineElement& x, const ExtAffineElement& y) const {
    return {x.trans + finite_.act(x.fin, y.trans), finite_.compose(x.fin, y.fin)};
  }

  /// (t_l w)^{-1} = t_{-w^{-1}(l)} w^{-1}.
  ExtAffineElement invert(const ExtAffineElement& x) const {
    FiniteWeylElement wi = finite_.inverse(x.fin);
    return {-finite_.act(wi, x.trans), wi};
  }

  /// (t_l u) . (alpha, n) = (u(alpha), n - <l, u(alpha)>).
  AffineRoot act_affine(const ExtAffineElement& x, const AffineRoot& r) const {
    int img = finite_.act_root(x.fin, r.root);
    return {img, checked_add(r.level, -pair(x.trans, datum_->signed_root(img)))};
  }

  /**
   * Length from the closed formula. Writing x = t_l w = w t_m with m = w^{-1}(l),
   *   l(w t_m) = sum_{a > 0, w(a) > 0} |<m, a>| + sum_{a > 0, w(a) < 0} |1 - <m, a>|,
   * and <m, a> = <l, w(a)>.
   */
  Int length(const ExtAffineElement& x) const {
    const auto& roots = datum_->pos_roots();
    const std::size_t np = roots.size();
    Int total = 0;
    for (std::size_t k = 0; k < np; ++k) {
      int img = finite_.root_image(x.fin, k);
      Int p = pair(x.trans, roots[static_cast<std::size_t>(std::abs(img)) - 1]);
      if (img > 0)
        total += std::abs(p);
      else
        total += std::abs(1 + p);  // <l, w(a)> = -p here
    }
    return total;
  }

  /// Brute-force count of positive affine roots made negative by x^{-1}.
  Int length_inversions(const ExtAffineElement& x, AffinePositivity conv = AffinePositivity::alcove) const {
    const ExtAffineElement xi = invert(x);
    Int bound = 2;
    for (const auto& a : datum_->pos_roots()) bound = std::max(bound, std::abs(pair(x.trans, a)) + 2);
    Int count = 0;
    const int np = static_cast<int>(datum_->num_pos_roots());
    for (int a = -np; a <= np; ++a) {
      if (a == 0) continue;
      for (Int n = -bound; n <= bound; ++n) {
        AffineRoot r{a, n};
        if (is_positive(r, conv) && !is_positive(act_affine(xi, r), conv)) ++count;
      }
    }
    return count;
  }

  /// Finite simple reflections s_1..s_r followed by one affine reflection s_theta t_{theta^vee} per component.
  const std::vector<ExtAffineElement>& s_aff() const {
    if (datum_->is_torus()) throw DomainError("S_aff is empty for a torus");
    return saff_;
  }

  /// Some s in S_aff with l(s x) < l(x), as an index into s_aff(); nullopt when l(x) = 0.
  std::optional<std::size_t> left_descent(const ExtAffineElement& x) const {
    const Int lx = length(x);
    if (lx == 0) return std::nullopt;
    for (std::size_t i = 0; i < saff_.size(); ++i)
      if (length(compose(saff_[i], x)) < lx) return i;
    throw Error("internal error: positive-length element without a left descent");
  }

  std::optional<std::size_t> right_descent(const ExtAffineElement& x) const {
    const Int lx = length(x);
    if (lx == 0) return std::nullopt;
    for (std::size_t i = 0; i < saff_.size(); ++i)
      if (length(compose(x, saff_[i])) < lx) return i;
    throw Error("internal error: positive-length element without a right descent");
  }

  /// x = s_{i1} ... s_{ik} * omega with k = l(x); returns the letters and the length-zero tail.
  std::pair<std::vector<std::size_t>, ExtAffineElement> reduced_word(ExtAffineElement x) const {
    std::vector<std::size_t> letters;
    while (auto s = left_descent(x)) {
      letters.push_back(*s);
      x = compose(saff_[*s], x);  // simple reflections are involutions
    }
    return {letters, x};
  }

  /// Length-zero elements, one per class of Y / ZR^vee; identity first.
  const std::vector<ExtAffineElement>& omega() const {
    require_semisimple("Omega");
    return omega_;
  }

  /// The unique omega in Omega with x in omega * W_aff.
  const ExtAffineElement& omega_of(const ExtAffineElement& x) const {
    require_semisimple("omega_decompose");
    for (const auto& w : omega_)
      if (datum_->in_coroot_lattice(x.trans - w.trans)) return w;
    throw Error("internal error: no Omega class for element");
  }

  /// x = omega * u with l(omega) = 0 and u in W_aff.
  std::pair<ExtAffineElement, ExtAffineElement> omega_decompose(const ExtAffineElement& x) const {
    const ExtAffineElement& w = omega_of(x);
    return {w, compose(invert(w), x)};
  }

  bool in_waff(const ExtAffineElement& x) const { return datum_->in_coroot_lattice(x.trans); }

  /// Bruhat order, extended to W_ext class-wise over Omega.
  bool bruhat_leq(const ExtAffineElement& x, const ExtAffineElement& y) const {
    auto [wx, ux] = omega_decompose(x);
    auto [wy, uy] = omega_decompose(y);
    if (wx != wy) return false;
    return waff_leq(std::move(ux), std::move(uy));
  }

  std::size_t bruhat_cache_size() const {
    std::shared_lock lock(cache_mutex_);
    return bruhat_cache_.size();
  }

  void set_bruhat_cache_limit(std::size_t n) { cache_limit_ = n; }

  /// (w_lambda, v_lambda): v_lambda minimal with v_lambda(lambda) dominant, w_lambda = t_lambda v_lambda^{-1}.
  std::pair<ExtAffineElement, FiniteWeylElement> min_coset_data(const Coweight& lambda) const {
    check_rank(lambda);
    FiniteWeylElement v = finite_.to_dominant(lambda);
    return {ExtAffineElement{lambda, finite_.inverse(v)}, v};
  }

  /**
   * Membership in W_ext^+ = {x : l(t_mu x) = l(t_mu) + l(x) for all dominant mu}.
   *
   * Checked at one strictly dominant mu_0 (a positive multiple of the regular
   * generator that also makes mu_0 + trans(x) dominant). The defect
   * l(t_mu) + l(x) - l(t_mu x) is a sum of per-root terms, each vanishing
   * for every dominant mu iff it vanishes at a strictly dominant one.
   * With `paranoid`, also re-checks every dominant mu with |coords| <= 3.
   */
  bool in_wext_plus(const ExtAffineElement& x, bool paranoid = false) const {
    if (datum_->is_torus()) return true;
    Coweight mu0 = datum_->regular_multiple_for(x.trans);
    if (!datum_->is_strictly_dominant(mu0)) mu0 += datum_->regular_generator();
    const bool result = additive_at(mu0, x);
    if (paranoid && result) {
      for (const auto& mu : dominant_box(3))
        if (!additive_at(mu, x)) throw Error("in_wext_plus: paranoid re-check disagrees");
    }
    return result;
  }

  /// All dominant coweights with every coordinate in [-bound, bound].
  std::vector<Coweight> dominant_box(Int bound) const {
    std::vector<Coweight> out;
    Coweight c(datum_->rank());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -bound;
    for (;;) {
      if (datum_->is_dominant(c)) out.push_back(c);
      std::size_t i = 0;
      while (i < c.size() && ++c[i] > bound) c[i] = -bound, ++i;
      if (i == c.size()) break;
    }
    return out;
  }

  /// The shift used by semiinfinite_leq: N * regular generator, N minimal with both shifted translations dominant.
  Coweight semiinfinite_shift(const ExtAffineElement& x, const ExtAffineElement& y) const {
    return datum_->regular_multiple_for_all({x.trans, y.trans});
  }

  bool semiinfinite_leq(const ExtAffineElement& x, const ExtAffineElement& y) const {
    return semiinfinite_leq_at(x, y, semiinfinite_shift(x, y));
  }

  /// t_mu x <= t_mu y in Bruhat order; mu must be dominant with mu + trans dominant for both.
  bool semiinfinite_leq_at(const ExtAffineElement& x, const ExtAffineElement& y, const Coweight& mu) const {
    if (!datum_->is_dominant(mu) || !datum_->is_dominant(mu + x.trans) || !datum_->is_dominant(mu + y.trans))
      throw DomainError("semiinfinite_leq_at: shift does not make both translations dominant");
    ExtAffineElement tm = translation(mu);
    return bruhat_leq(compose(tm, x), compose(tm, y));
  }

  /// <lambda, 2 rho> + l(w_f) for x = t_lambda w_f.
  Int pseudodim_fl(const ExtAffineElement& x) const { return pseudodim_gr(x.trans) + finite_.length(x.fin); }
  Int pseudodim_gr(const Coweight& lambda) const { return pair(lambda, datum_->two_rho()); }

  /// The alcove x(A_0). Omega stabilizes A_0, so x(A_0) = (x omega^{-1})(A_0) with x omega^{-1} in W_aff.
  Alcove alcove_of(const ExtAffineElement& x) const { return {compose(x, invert(omega_of(x)))}; }

  Alcove fundamental_alcove() const { return {identity()}; }

  /// lambda + A.
  Alcove translate_alcove(const Coweight& lambda, const Alcove& a) const {
    return alcove_of(compose(translation(lambda), a.rep));
  }

  /// All x with l(x) <= max_len (semisimple data only).
  std::vector<ExtAffineElement> ball(Int max_len) const {
    require_semisimple("ball");
    std::vector<ExtAffineElement> waff{identity()};
    std::vector<ExtAffineElement> layer{identity()};
    std::unordered_map<ExtAffineElement, bool> seen{{identity(), true}};
    for (Int l = 0; l < max_len; ++l) {
      std::vector<ExtAffineElement> next;
      for (const auto& u : layer)
        for (const auto& s : saff_) {
          ExtAffineElement su = compose(s, u);
          if (length(su) != l + 1 || seen.count(su)) continue;
          seen.emplace(su, true);
          next.push_back(su);
        }
      waff.insert(waff.end(), next.begin(), next.end());
      layer = std::move(next);
    }
    std::vector<ExtAffineElement> out;
    for (const auto& w : omega_)
      for (const auto& u : waff) out.push_back(compose(w, u));
    return out;
  }

  /// Canonical text: "t[1,-2]*s1*s2", "s1", "t[1]" or "e".
  std::string to_string(const ExtAffineElement& x) const {
    if (is_identity(x)) return "e";
    std::string s;
    if (!x.trans.is_zero()) s = "t" + x.trans.str();
    if (x.fin.index != 0) s += (s.empty() ? "" : "*") + finite_.to_string(x.fin);
    return s;
  }

 private:
  void check_rank(const Coweight& lambda) const {
    if (lambda.size() != datum_->rank()) throw DomainError("coweight rank mismatch");
  }

  void require_semisimple(const char* what) const {
    if (!datum_->is_semisimple())
      throw DomainError(std::string(what) + ": Omega is infinite for a datum with central directions");
  }

  bool additive_at(const Coweight& mu, const ExtAffineElement& x) const {
    ExtAffineElement tm = translation(mu);
    return length(compose(tm, x)) == length(tm) + length(x);
  }

  void build_saff() {
    const RootDatum& d = *datum_;
    for (std::size_t i = 0; i < d.semisimple_rank(); ++i) saff_.push_back(from_finite(finite_.simple(i)));
    for (std::size_t k : d.highest_roots()) {
      // s_theta t_{theta^vee} = t_{-theta^vee} s_theta
      saff_.push_back({-d.pos_coroots()[k], finite_.reflection(k)});
    }
    for (const auto& s : saff_)
      if (length(s) != 1) throw Error("internal error: affine simple reflection of length != 1");
  }

  void build_omega() {
    const RootDatum& d = *datum_;
    const Int classes = d.fundamental_group_order();
    Int box = 1;
    for (const auto& c : d.pos_coroots())
      for (Int v : c.coords()) box = std::max(box, std::abs(v));
    for (;; ++box) {
      omega_.clear();
      Coweight c(d.rank());
      for (std::size_t i = 0; i < c.size(); ++i) c[i] = -box;
      for (;;) {
        bool fresh = true;
        for (const auto& w : omega_)
          if (d.in_coroot_lattice(c - w.trans)) fresh = false;
        if (fresh)
          for (std::size_t f = 0; f < finite_.order(); ++f) {
            ExtAffineElement x{c, finite_.element(f)};
            if (length(x) == 0) {
              omega_.push_back(x);
              break;
            }
          }
        std::size_t i = 0;
        while (i < c.size() && ++c[i] > box) c[i] = -box, ++i;
        if (i == c.size()) break;
      }
      if (static_cast<Int>(omega_.size()) == classes) break;
      if (box > 64) throw Error("internal error: Omega enumeration did not terminate");
    }
    std::sort(omega_.begin(), omega_.end(), [&](const auto& a, const auto& b) {
      bool ea = is_identity(a), eb = is_identity(b);
      if (ea != eb) return ea;
      return a < b;
    });
  }

  using Key = std::pair<ExtAffineElement, ExtAffineElement>;
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      std::hash<ExtAffineElement> h;
      return h(k.first) * 31 + h(k.second);
    }
  };

  // Bruhat order on W_aff: if s y < y then x <= y iff (s x < x ? s x <= s y : x <= s y).
  // The recursion never branches, so every pair on the path shares the final answer.
  bool waff_leq(ExtAffineElement x, ExtAffineElement y) const {
    std::vector<Key> path;
    std::optional<bool> result;
    for (;;) {
      Key k{x, y};
      {
        std::shared_lock lock(cache_mutex_);
        auto it = bruhat_cache_.find(k);
        if (it != bruhat_cache_.end()) {
          result = it->second;
          break;
        }
      }
      path.push_back(std::move(k));
      Int lx = length(x), ly = length(y);
      if (lx > ly) {
        result = false;
        break;
      }
      if (x == y) {
        result = true;
        break;
      }
      if (ly == 0) {
        result = false;
        break;
      }
      std::size_t s = *left_descent(y);
      y = compose(saff_[s], y);
      ExtAffineElement sx = compose(saff_[s], x);
      if (length(sx) < lx) x = std::move(sx);
    }
    {
      std::unique_lock lock(cache_mutex_);
      if (bruhat_cache_.size() + path.size() > cache_limit_) bruhat_cache_.clear();
      for (auto& k : path) bruhat_cache_.emplace(std::move(k), *result);
    }
    return *result;
  }

  std::shared_ptr<const RootDatum> datum_;
  FiniteWeylGroup finite_;
  std::vector<ExtAffineElement> saff_;
  std::vector<ExtAffineElement> omega_;
  mutable std::shared_mutex cache_mutex_;
  mutable std::unordered_map<Key, bool, KeyHash> bruhat_cache_;
  std::size_t cache_limit_ = 1u << 20;
};

}  // namespace siflag
