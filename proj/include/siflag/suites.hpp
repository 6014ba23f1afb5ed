#pragma once

#include <functional>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "siflag/hecke.hpp"
#include "siflag/kostant.hpp"
#include "siflag/stalkcheck.hpp"

namespace siflag {

struct SuiteResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;  // first few only
  std::string note;                   // e.g. why a suite did not apply

  void check(bool ok, const std::string& what) {
    if (ok) {
      ++passed;
      return;
    }
    ++failed;
    if (failures.size() < 5) failures.push_back(what);
  }
  bool ok() const noexcept { return failed == 0; }
};

/**
 * Property suites over one root datum, sized to finish in seconds for rank <= 2.
 *
 * Each suite compares two independent computations (closed formula vs brute
 * force, Kostant vs Freudenthal, two shifts, ...). The acceptance tests run
 * larger versions of the same properties against oracles in the test tree.
 */
class SuiteRunner {
 public:
  explicit SuiteRunner(std::shared_ptr<const RootDatum> datum)
      : datum_(std::move(datum)), group_(datum_), kostant_(group_.finite()), hecke_(group_) {}

  static const std::vector<std::string>& names() {
    static const std::vector<std::string> n{"datum",      "length-oracle", "orbit-dimension", "semiinfinite",
                                            "order-axioms", "kostant-freudenthal", "zero-stalk", "gaitsgory",
                                            "stabilization", "hecke", "periodic-kl"};
    return n;
  }

  static bool is_known(const std::string& name) {
    if (name == "all") return true;
    for (const auto& n : names())
      if (n == name) return true;
    return false;
  }

  SuiteResult run(const std::string& name) {
    SuiteResult r;
    r.name = name;
    const RootDatum& d = *datum_;
    const bool needs_semisimple = name != "datum";
    if (needs_semisimple && (!d.is_semisimple() || d.is_torus())) {
      r.note = "skipped: needs a semisimple datum of positive rank";
      return r;
    }
    if (name == "datum") datum_suite(r);
    else if (name == "length-oracle") length_suite(r);
    else if (name == "orbit-dimension") orbit_suite(r);
    else if (name == "semiinfinite") semiinfinite_suite(r);
    else if (name == "order-axioms") order_suite(r);
    else if (name == "kostant-freudenthal") kostant_suite(r);
    else if (name == "zero-stalk") zero_stalk_suite(r);
    else if (name == "gaitsgory") gaitsgory_suite(r);
    else if (name == "stabilization") stabilization_suite(r);
    else if (name == "hecke") hecke_suite(r);
    else if (name == "periodic-kl") periodic_suite(r);
    else throw DomainError("unknown suite '" + name + "'");
    return r;
  }

  KostantCalculator& kostant() noexcept { return kostant_; }

 private:
  void datum_suite(SuiteResult& r) {
    const RootDatum& d = *datum_;
    const FiniteWeylGroup& W = group_.finite();
    for (std::size_t i = 0; i < d.semisimple_rank(); ++i) {
      r.check(pair(d.simple_coroots()[i], d.simple_roots()[i]) == 2, "<alpha_i^vee, alpha_i> = 2");
      for (std::size_t j = 0; j < d.semisimple_rank(); ++j)
        if (i != j) r.check(pair(d.simple_coroots()[j], d.simple_roots()[i]) <= 0, "off-diagonal Cartan entry <= 0");
    }
    for (std::size_t k = 0; k < W.order(); ++k)
      r.check(W.length(W.element(k)) == W.inversion_count(W.element(k)), "word length = inversion count in W_f");
    r.check(W.length(W.longest()) == static_cast<Int>(d.num_pos_roots()), "l(w_0) = number of positive roots");
    if (d.is_semisimple() && !d.is_torus())
      r.check(static_cast<Int>(group_.omega().size()) == d.fundamental_group_order(), "|Omega| = |Y / ZR^vee|");
  }

  void length_suite(SuiteResult& r) {
    for (const auto& x : group_.ball(5))
      r.check(group_.length(x) == group_.length_inversions(x), "length vs inversions at " + group_.to_string(x));
  }

  void orbit_suite(SuiteResult& r) {
    const FiniteWeylGroup& W = group_.finite();
    for (const auto& mu : group_.dominant_box(3))
      for (std::size_t k = 0; k < W.order(); ++k) {
        ExtAffineElement x = group_.make(mu, W.element(k));
        r.check(iwahori_orbit_dimension(group_, x) == group_.length(x), "orbit dimension at " + group_.to_string(x));
      }
  }

  void semiinfinite_suite(SuiteResult& r) {
    auto ball = group_.ball(3);
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<std::size_t> pick(0, ball.size() - 1);
    for (int n = 0; n < 60; ++n) {
      const auto& x = ball[pick(rng)];
      const auto& y = ball[pick(rng)];
      Coweight mu = group_.semiinfinite_shift(x, y);
      bool a = group_.semiinfinite_leq_at(x, y, mu);
      bool b = group_.semiinfinite_leq_at(x, y, mu + datum_->regular_generator());
      r.check(a == b, "shift independence at (" + group_.to_string(x) + ", " + group_.to_string(y) + ")");
    }
  }

  void order_suite(SuiteResult& r) {
    auto ball = group_.ball(2);
    if (ball.size() > 60) ball.resize(60);
    using Leq = std::function<bool(const ExtAffineElement&, const ExtAffineElement&)>;
    std::vector<std::pair<std::string, Leq>> orders{
        {"bruhat", [&](const auto& a, const auto& b) { return group_.bruhat_leq(a, b); }},
        {"semiinfinite", [&](const auto& a, const auto& b) { return group_.semiinfinite_leq(a, b); }}};
    for (const auto& [label, leq] : orders) {
      const std::size_t n = ball.size();
      std::vector<char> m(n * n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i * n + j] = leq(ball[i], ball[j]);
      bool refl = true, anti = true, trans = true;
      for (std::size_t i = 0; i < n; ++i) {
        refl &= m[i * n + i] != 0;
        for (std::size_t j = 0; j < n; ++j) {
          if (i != j && m[i * n + j] && m[j * n + i]) anti = false;
          if (!m[i * n + j]) continue;
          for (std::size_t k = 0; k < n; ++k)
            if (m[j * n + k] && !m[i * n + k]) trans = false;
        }
      }
      r.check(refl, label + " reflexive");
      r.check(anti, label + " antisymmetric");
      r.check(trans, label + " transitive");
    }
    for (const auto& w : group_.omega())
      for (const auto& x : ball)
        if (group_.omega_of(x) == w) r.check(group_.bruhat_leq(w, x), "Omega element is the class minimum");
  }

  void kostant_suite(SuiteResult& r) {
    FreudenthalOracle F(*datum_);
    for (const auto& lam : kostant_.dominant_pairing_box(2)) {
      Int dim = F.weyl_dimension(lam);
      if (dim > 30) continue;
      Int total = 0;
      for (const auto& [mu, m] : F.character(lam)) {
        Int k = kostant_.kostant_weight_multiplicity(lam, mu);
        r.check(k == m, "multiplicity of " + mu.str() + " in " + lam.str());
        total += k;
      }
      r.check(total == dim, "multiplicities sum to the Weyl dimension for " + lam.str());
    }
  }

  void zero_stalk_suite(SuiteResult& r) {
    for (const auto& lam : kostant_.dominant_pairing_box(3))
      r.check(kostant_.m_stalk_rank(lam, datum_->zero()) == 1, "m_stalk_rank(" + lam.str() + ", 0) = 1");
  }

  void gaitsgory_suite(SuiteResult& r) {
    for (const auto& nu : closure_box(*datum_, datum_->zero(), 4)) {
      QPolynomial c = kostant_.gaitsgory_costalk_poly(nu);
      bool even = true;
      for (std::size_t k = 1; k < c.coeffs().size(); k += 2) even &= c.coeff(k) == 0;
      r.check(even, "even exponents at " + nu.str());
      r.check(c.coeff(0) == (nu.is_zero() ? 1 : 0), "constant term at " + nu.str());
      r.check(c.eval_at_one() == kostant_.gaitsgory_stalk_rank(nu), "costalk(1) = stalk at " + nu.str());
    }
  }

  void stabilization_suite(SuiteResult& r) {
    for (const auto& nu : closure_box(*datum_, datum_->zero(), 2)) {
      auto rep = kostant_.stabilization_check(nu, 6);
      r.check(rep.stable_from.has_value(), "stabilization threshold found for " + nu.str());
    }
  }

  void hecke_suite(SuiteResult& r) {
    const RootDatum& d = *datum_;
    std::vector<Coweight> box;
    {
      Coweight c(d.rank());
      for (std::size_t i = 0; i < c.size(); ++i) c[i] = -1;
      for (;;) {
        box.push_back(c);
        std::size_t i = 0;
        while (i < c.size() && ++c[i] > 1) c[i] = -1, ++i;
        if (i == c.size()) break;
      }
    }
    for (const auto& lam : box) {
      Coweight mu = d.min_dominant_shift(lam);
      r.check(hecke_.bernstein_with_shift(lam, mu + d.regular_generator()) == hecke_.bernstein(lam),
              "theta presentation independence at " + lam.str());
      r.check(hecke_.mul(hecke_.bernstein(lam), hecke_.bernstein(-lam)) == hecke_.one(), "theta_l theta_-l = 1 at " + lam.str());
      for (std::size_t a = 0; a < d.semisimple_rank(); ++a) {
        auto c = hecke_.check_bernstein_relations(lam, a);
        r.check(c.passed, "Bernstein relation at " + lam.str() + ", alpha_" + std::to_string(a + 1));
      }
    }
    for (const auto& x : group_.ball(3))
      r.check(hecke_.mul(hecke_.basis(x), hecke_.std_inverse(x)) == hecke_.one(), "H_x H_x^-1 = 1 at " + group_.to_string(x));
    const std::size_t ns = group_.s_aff().size();
    for (std::size_t i = 0; i < ns; ++i)
      for (std::size_t j = i + 1; j < ns; ++j)
        if (auto ok = hecke_.braid_relation_holds(i, j)) r.check(*ok, "braid relation");
  }

  void periodic_suite(SuiteResult& r) {
    for (const auto& lam : closure_box(*datum_, datum_->zero(), 2)) {
      auto rep = verify_periodic_example(group_, lam);
      r.check(rep.pass(), "periodic example at " + lam.str());
      r.check(!verify_periodic_example(group_, lam, 1).pass(), "negative control fails at " + lam.str());
    }
  }

  std::shared_ptr<const RootDatum> datum_;
  ExtAffineWeylGroup group_;
  KostantCalculator kostant_;
  HeckeAlgebra hecke_;
};

}  // namespace siflag
