#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "siflag/extweyl.hpp"
#include "siflag/polynomial.hpp"

namespace siflag {

/// Number of root-subgroup factors U_{alpha + n hbar} in the Iwahori orbit of t_mu w_f (mu dominant).
inline Int iwahori_orbit_dimension(const ExtAffineWeylGroup& G, const ExtAffineElement& x) {
  const RootDatum& d = G.datum();
  if (!d.is_dominant(x.trans))
    throw DomainError("iwahori_orbit_dimension: translation part " + x.trans.str() + " is not dominant");
  const FiniteWeylGroup& W = G.finite();
  const FiniteWeylElement winv = W.inverse(x.fin);
  Int dim = 0;
  for (std::size_t k = 0; k < d.num_pos_roots(); ++k) {
    Int p = pair(x.trans, d.pos_roots()[k]);
    // n ranges over 0 <= n < p, plus n = p when w_f^{-1} alpha < 0
    dim += W.root_image(winv, k) > 0 ? p : p + 1;
  }
  return dim;
}

/// All mu below lambda (lambda - mu a nonnegative coroot combination) with coroot height of lambda - mu at most bound.
/// Ordered by height, then by the coefficient vector in decreasing lexicographic order.
inline std::vector<Coweight> closure_box(const RootDatum& d, const Coweight& lambda, Int height_bound) {
  if (height_bound < 0) throw DomainError("closure_box: height bound must be nonnegative");
  if (lambda.size() != d.rank()) throw DomainError("coweight rank mismatch");
  const std::size_t r = d.semisimple_rank();
  std::vector<Coweight> out;
  for (Int h = 0; h <= height_bound; ++h) {
    if (r == 0) {
      if (h == 0) out.push_back(lambda);
      break;
    }
    // compositions of h into r parts, decreasing lex
    std::vector<Int> c(r, 0);
    c[0] = h;
    for (;;) {
      Coweight mu = lambda;
      for (std::size_t i = 0; i < r; ++i) mu -= c[i] * d.simple_coroots()[i];
      out.push_back(mu);
      // next composition in decreasing lex order
      std::size_t j = r - 1;
      while (j > 0 && c[j - 1] == 0) --j;
      if (j == 0) break;
      Int tail = c[r - 1];
      c[r - 1] = 0;
      --c[j - 1];
      c[j] = tail + 1;
    }
  }
  return out;
}

struct StalkDatum {
  Int degree = 0;
  Int rank = 0;
};

/// Stalk of the IC sheaf attached to t_lambda w_0 at the orbit of y: rank 1 in degree -l(x w_0) when y = t_lambda x.
inline std::optional<StalkDatum> ic_family_stalk(const ExtAffineWeylGroup& G, const Coweight& lambda,
                                                 const ExtAffineElement& y) {
  if (y.trans != lambda) return std::nullopt;
  const FiniteWeylGroup& W = G.finite();
  return StalkDatum{-W.length(W.compose(y.fin, W.longest())), 1};
}

/// p_{B, lambda + A_0}: v^{l(x)} if B = lambda + x(A_0) for x in W_f, else 0.
inline LaurentPolynomial periodic_kl_closed(const ExtAffineWeylGroup& G, const Alcove& B, const Coweight& lambda) {
  if (!G.datum().is_semisimple()) throw DomainError("periodic_kl_closed: datum must be semisimple");
  const FiniteWeylGroup& W = G.finite();
  for (std::size_t i = 0; i < W.order(); ++i) {
    FiniteWeylElement x = W.element(i);
    if (G.translate_alcove(lambda, G.alcove_of(G.from_finite(x))) == B)
      return LaurentPolynomial::monomial(static_cast<long>(W.length(x)));
  }
  return {};
}

struct PeriodicRow {
  ExtAffineElement y;
  LaurentPolynomial lhs;
  LaurentPolynomial rhs;
  bool on_family = false;
  bool pass = false;
};

struct PeriodicReport {
  std::vector<PeriodicRow> rows;
  bool pass() const {
    return std::all_of(rows.begin(), rows.end(), [](const PeriodicRow& r) { return r.pass; });
  }
  std::size_t on_family_count() const {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const PeriodicRow& r) { return r.on_family; }));
  }
  std::optional<ExtAffineElement> first_failure() const {
    for (const auto& r : rows)
      if (!r.pass) return r.y;
    return std::nullopt;
  }
};

/**
 * Compares, for w = t_lambda w_0, the stalk side sum_n rank v^{-n} with the
 * alcove side p_{y w_0(A_0), lambda + A_0}.
 *
 * Rows: every y = t_lambda x (x in W_f), then off-family y = t_{lambda + delta} u
 * with delta a nonzero coroot-lattice vector of coordinate 1-norm at most 2
 * and u in W_f. `inject_shift` perturbs the stalk degree (negative control).
 */
inline PeriodicReport verify_periodic_example(const ExtAffineWeylGroup& G, const Coweight& lambda,
                                              Int inject_shift = 0) {
  const RootDatum& d = G.datum();
  if (!d.is_semisimple()) throw DomainError("verify_periodic_example: datum must be semisimple");
  const FiniteWeylGroup& W = G.finite();
  const ExtAffineElement w0 = G.from_finite(W.longest());

  std::vector<Coweight> shifts{d.zero()};
  {
    Coweight delta(d.rank());
    for (std::size_t i = 0; i < delta.size(); ++i) delta[i] = -2;
    for (;;) {
      Int norm = 0;
      for (Int v : delta.coords()) norm += std::abs(v);
      if (norm > 0 && norm <= 2 && d.in_coroot_lattice(delta)) shifts.push_back(delta);
      std::size_t i = 0;
      while (i < delta.size() && ++delta[i] > 2) delta[i] = -2, ++i;
      if (i == delta.size()) break;
    }
  }

  PeriodicReport report;
  for (const auto& delta : shifts)
    for (std::size_t i = 0; i < W.order(); ++i) {
      PeriodicRow row;
      row.y = G.make(lambda + delta, W.element(i));
      row.on_family = delta.is_zero();
      if (auto st = ic_family_stalk(G, lambda, row.y))
        row.lhs = LaurentPolynomial::monomial(static_cast<long>(-(st->degree + inject_shift)), st->rank);
      row.rhs = periodic_kl_closed(G, G.alcove_of(G.compose(row.y, w0)), lambda);
      row.pass = row.lhs == row.rhs;
      report.rows.push_back(std::move(row));
    }
  return report;
}

inline nlohmann::ordered_json to_json(const ExtAffineWeylGroup& G, const PeriodicReport& r) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& row : r.rows)
    j.push_back({{"y", G.to_string(row.y)}, {"lhs", row.lhs.to_json()}, {"rhs", row.rhs.to_json()}, {"pass", row.pass}});
  return j;
}

}  // namespace siflag
