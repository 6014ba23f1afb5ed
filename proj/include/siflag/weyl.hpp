#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "siflag/rootdatum.hpp"

namespace siflag {

/// Handle to an element of a FiniteWeylGroup (index into its element table).
struct FiniteWeylElement {
  std::uint32_t index = 0;
  friend bool operator==(FiniteWeylElement, FiniteWeylElement) = default;
  friend auto operator<=>(FiniteWeylElement, FiniteWeylElement) = default;
};

/**
 * The finite Weyl group W_f of a root datum, fully enumerated.
 *
 * Elements are discovered breadth-first from the identity by right
 * multiplication with simple reflections, so the stored word of each element
 * is reduced and its index order refines length. Each element is identified
 * by its image of 2 rho^vee, which is regular dominant, so W_f acts simply
 * transitively on its orbit.
 */
class FiniteWeylGroup {
 public:
  static constexpr std::size_t max_order = 200000;

  explicit FiniteWeylGroup(std::shared_ptr<const RootDatum> datum) : datum_(std::move(datum)) { enumerate(); }

  const RootDatum& datum() const noexcept { return *datum_; }
  std::shared_ptr<const RootDatum> datum_ptr() const noexcept { return datum_; }

  std::size_t order() const noexcept { return elems_.size(); }
  FiniteWeylElement identity() const noexcept { return {0}; }
  FiniteWeylElement element(std::size_t index) const { return {static_cast<std::uint32_t>(index)}; }
  FiniteWeylElement simple(std::size_t i) const { return simple_.at(i); }
  FiniteWeylElement longest() const noexcept { return longest_; }

  const std::vector<int>& word(FiniteWeylElement w) const { return elems_[w.index].word; }
  const IntMatrix& matrix(FiniteWeylElement w) const { return elems_[w.index].matrix; }
  Int length(FiniteWeylElement w) const { return elems_[w.index].length; }
  FiniteWeylElement inverse(FiniteWeylElement w) const { return {elems_[w.index].inverse}; }

  FiniteWeylElement compose(FiniteWeylElement u, FiniteWeylElement v) const {
    if (u.index == 0) return v;
    if (v.index == 0) return u;
    return lookup(matrix(u).apply(elems_[v.index].key));
  }

  Coweight act(FiniteWeylElement w, const Coweight& lambda) const {
    if (w.index == 0) return lambda;
    return Coweight(matrix(w).apply(lambda.coords()));
  }

  /// w acting on a weight: (w chi)(lambda) = chi(w^{-1} lambda).
  Weight act(FiniteWeylElement w, const Weight& chi) const {
    if (w.index == 0) return chi;
    return Weight(matrix(inverse(w)).apply_row(chi.coords()));
  }

  /// Signed index of w(alpha_k) for the k-th positive root: +(j+1) or -(j+1).
  int root_image(FiniteWeylElement w, std::size_t k) const { return root_perm_[w.index * npos_ + k]; }

  /// Signed-index image of an arbitrary root index.
  int act_root(FiniteWeylElement w, int signed_index) const {
    int img = root_image(w, static_cast<std::size_t>(std::abs(signed_index)) - 1);
    return signed_index > 0 ? img : -img;
  }

  /// Reflection s_beta for the k-th positive root.
  FiniteWeylElement reflection(std::size_t k) const { return reflections_.at(k); }

  /// Number of positive roots sent to negative roots; equals length() (checked in tests).
  Int inversion_count(FiniteWeylElement w) const {
    Int n = 0;
    for (std::size_t k = 0; k < npos_; ++k)
      if (root_image(w, k) < 0) ++n;
    return n;
  }

  /// w(rho^vee) - rho^vee, computed as (w(2 rho^vee) - 2 rho^vee) / 2.
  Coweight rho_check_shift(FiniteWeylElement w) const {
    Coweight d = act(w, datum_->two_rho_check()) - datum_->two_rho_check();
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (d[i] % 2 != 0) throw Error("internal parity failure in rho_check_shift");
      d[i] /= 2;
    }
    return d;
  }

  /// The unique element of minimal length sending lambda into the dominant chamber.
  FiniteWeylElement to_dominant(const Coweight& lambda) const {
    for (std::size_t i = 0; i < elems_.size(); ++i)
      if (datum_->is_dominant(act(element(i), lambda))) return element(i);
    throw Error("internal error: no dominant conjugate");
  }

  Coweight dominant_conjugate(const Coweight& lambda) const { return act(to_dominant(lambda), lambda); }

  /// Word such as "s1*s2"; "e" for the identity.
  std::string to_string(FiniteWeylElement w) const {
    const auto& wd = word(w);
    if (wd.empty()) return "e";
    std::string s;
    for (std::size_t i = 0; i < wd.size(); ++i) s += (i ? "*s" : "s") + std::to_string(wd[i] + 1);
    return s;
  }

  FiniteWeylElement from_word(const std::vector<int>& letters) const {
    FiniteWeylElement w = identity();
    for (int i : letters) {
      if (i < 0 || static_cast<std::size_t>(i) >= simple_.size()) throw DomainError("simple reflection index out of range");
      w = compose(w, simple_[static_cast<std::size_t>(i)]);
    }
    return w;
  }

  FiniteWeylElement lookup(const std::vector<Int>& key) const {
    auto it = index_.find(Coweight(key));
    if (it == index_.end()) throw Error("internal error: vector is not in the W_f-orbit of 2 rho^vee");
    return {it->second};
  }

 private:
  struct Elem {
    std::vector<int> word;
    IntMatrix matrix;
    std::vector<Int> key;
    Int length = 0;
    std::uint32_t inverse = 0;
  };

  void enumerate() {
    const RootDatum& d = *datum_;
    const std::size_t n = d.rank();
    const std::size_t r = d.semisimple_rank();
    npos_ = d.num_pos_roots();
    std::vector<IntMatrix> gens;
    for (std::size_t i = 0; i < r; ++i) {
      IntMatrix m = IntMatrix::identity(n);
      // column j = s_i(e_j) = e_j - <e_j, alpha_i> alpha_i^vee
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t t = 0; t < n; ++t) m(t, j) -= d.simple_roots()[i][j] * d.simple_coroots()[i][t];
      gens.push_back(m);
    }
    const std::vector<Int>& base = d.two_rho_check().coords();
    elems_.push_back({{}, IntMatrix::identity(n), base, 0, 0});
    index_.emplace(Coweight(base), 0);
    for (std::size_t head = 0; head < elems_.size(); ++head) {
      for (std::size_t i = 0; i < r; ++i) {
        IntMatrix m = elems_[head].matrix * gens[i];
        std::vector<Int> key = m.apply(base);
        if (index_.count(Coweight(key))) continue;
        if (elems_.size() >= max_order) throw DomainError("finite Weyl group too large to enumerate");
        Elem e;
        e.word = elems_[head].word;
        e.word.push_back(static_cast<int>(i));
        e.length = elems_[head].length + 1;
        e.matrix = std::move(m);
        e.key = std::move(key);
        index_.emplace(Coweight(e.key), static_cast<std::uint32_t>(elems_.size()));
        elems_.push_back(std::move(e));
      }
    }
    for (std::size_t i = 0; i < r; ++i) simple_.push_back(lookup(gens[i].apply(base)));
    std::uint32_t best = 0;
    for (std::size_t w = 0; w < elems_.size(); ++w) {
      // Inverse: the reversed word.
      FiniteWeylElement inv = identity();
      for (auto it = elems_[w].word.rbegin(); it != elems_[w].word.rend(); ++it) inv = compose(inv, simple_[*it]);
      elems_[w].inverse = inv.index;
      if (elems_[w].length > elems_[best].length) best = static_cast<std::uint32_t>(w);
    }
    longest_ = {best};
    root_perm_.assign(elems_.size() * npos_, 0);
    for (std::size_t w = 0; w < elems_.size(); ++w)
      for (std::size_t k = 0; k < npos_; ++k) {
        int img = d.root_index(act(element(w), d.pos_roots()[k]));
        if (img == 0) throw Error("internal error: W_f does not permute the roots");
        root_perm_[w * npos_ + k] = img;
      }
    for (std::size_t k = 0; k < npos_; ++k) {
      const Coweight& bc = d.pos_coroots()[k];
      std::vector<Int> key = base;
      Int p = pair(Coweight(base), d.pos_roots()[k]);
      for (std::size_t t = 0; t < n; ++t) key[t] -= p * bc[t];
      reflections_.push_back(lookup(key));
    }
  }

  std::shared_ptr<const RootDatum> datum_;
  std::vector<Elem> elems_;
  std::unordered_map<Coweight, std::uint32_t> index_;
  std::vector<FiniteWeylElement> simple_;
  std::vector<FiniteWeylElement> reflections_;
  FiniteWeylElement longest_;
  std::size_t npos_ = 0;
  std::vector<int> root_perm_;
};

}  // namespace siflag
