#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "siflag/lattice.hpp"

namespace siflag {

enum class LatticeForm { adjoint, simply_connected };

/**
 * A reduced root datum (Y, X, simple roots, simple coroots).
 *
 * Y = Z^rank is the coweight lattice. Simple coroots are vectors in Y;
 * simple roots are covectors on Y. The semisimple rank r may be smaller
 * than rank() when Y has central directions.
 *
 * Positive roots and coroots are enumerated as matched pairs: index k in
 * pos_roots() and pos_coroots() refers to the same reflection. The order is
 * (height, simple-root expansion) ascending and is stable across runs.
 *
 * Immutable after construction.
 */
class RootDatum {
 public:
  /// Standard Cartan matrix C with C[i][j] = <alpha_i^vee, alpha_j> (Bourbaki numbering).
  static std::vector<std::vector<Int>> standard_cartan(char type, int n) {
    auto bad = [&] { throw DatumError(std::string("unsupported Cartan type ") + type + std::to_string(n)); };
    std::vector<std::vector<Int>> c(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i) c[i][i] = 2;
    auto link = [&](int i, int j) { c[i][j] = c[j][i] = -1; };
    switch (type) {
      case 'A':
        if (n < 1) bad();
        for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
        break;
      case 'B':
        if (n < 2) bad();
        for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
        c[n - 1][n - 2] = -2;  // alpha_n short
        break;
      case 'C':
        if (n < 2) bad();
        for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
        c[n - 2][n - 1] = -2;  // alpha_n long
        break;
      case 'D':
        if (n < 3) bad();
        for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
        link(n - 3, n - 1);
        break;
      case 'E':
        if (n < 6 || n > 8) bad();
        link(0, 2);
        link(1, 3);
        for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
        break;
      case 'F':
        if (n != 4) bad();
        link(0, 1);
        link(1, 2);
        link(2, 3);
        c[2][1] = -2;
        break;
      case 'G':
        if (n != 2) bad();
        c[0][1] = -3;  // alpha_1 short
        c[1][0] = -1;
        break;
      default:
        bad();
    }
    return c;
  }

  /// Root datum of the given Cartan type, e.g. ("A", 1, adjoint) for PGL2.
  static RootDatum from_cartan_type(char type, int n, LatticeForm form) {
    auto c = standard_cartan(type, n);
    std::vector<Weight> roots;
    std::vector<Coweight> coroots;
    for (int i = 0; i < n; ++i) {
      Weight a(n);
      Coweight ac(n);
      if (form == LatticeForm::adjoint) {
        // X spanned by the simple roots; Y is the dual (fundamental coweight) basis.
        a[i] = 1;
        for (int j = 0; j < n; ++j) ac[j] = c[i][j];
      } else {
        // Y spanned by the simple coroots.
        ac[i] = 1;
        for (int j = 0; j < n; ++j) a[j] = c[j][i];
      }
      roots.push_back(std::move(a));
      coroots.push_back(std::move(ac));
    }
    std::string name = std::string(1, type) + std::to_string(n) + (form == LatticeForm::adjoint ? "-adj" : "-sc");
    return RootDatum(static_cast<std::size_t>(n), std::move(roots), std::move(coroots), std::move(name));
  }

  /// Parses a type tag such as "A2", "g2", "E6".
  static RootDatum from_type_string(const std::string& tag, LatticeForm form) {
    if (tag.size() < 2 || !std::isalpha(static_cast<unsigned char>(tag[0])))
      throw DatumError("bad Cartan type tag '" + tag + "'");
    int n = 0;
    for (std::size_t i = 1; i < tag.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(tag[i]))) throw DatumError("bad Cartan type tag '" + tag + "'");
      n = n * 10 + (tag[i] - '0');
      if (n > 64) throw DatumError("rank too large in '" + tag + "'");
    }
    return from_cartan_type(static_cast<char>(std::toupper(static_cast<unsigned char>(tag[0]))), n, form);
  }

  /// Built-in aliases: a1-adj, a1-sc, a2-adj, a2-sc, b2, g2.
  static RootDatum from_alias(const std::string& alias) {
    static const std::map<std::string, std::pair<std::string, LatticeForm>> table = {
        {"a1-adj", {"A1", LatticeForm::adjoint}}, {"a1-sc", {"A1", LatticeForm::simply_connected}},
        {"a2-adj", {"A2", LatticeForm::adjoint}}, {"a2-sc", {"A2", LatticeForm::simply_connected}},
        {"b2", {"B2", LatticeForm::adjoint}},     {"g2", {"G2", LatticeForm::adjoint}},
    };
    auto it = table.find(alias);
    if (it == table.end()) throw DatumError("unknown datum alias '" + alias + "'");
    RootDatum d = from_type_string(it->second.first, it->second.second);
    d.name_ = alias;
    return d;
  }

  /// Reads {"type":"A1","form":"adjoint"} or {"rank":d,"simple_roots":[...],"simple_coroots":[...]}.
  static RootDatum from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw DatumError("root datum JSON must be an object");
    if (j.contains("type")) {
      if (!j["type"].is_string()) throw DatumError("\"type\" must be a string");
      std::string form = j.value("form", "adjoint");
      LatticeForm f;
      if (form == "adjoint")
        f = LatticeForm::adjoint;
      else if (form == "simply-connected" || form == "simply_connected" || form == "sc")
        f = LatticeForm::simply_connected;
      else
        throw DatumError("unknown lattice form '" + form + "'");
      return from_type_string(j["type"].get<std::string>(), f);
    }
    if (!j.contains("rank") || !j.contains("simple_roots") || !j.contains("simple_coroots"))
      throw DatumError("explicit root datum needs rank, simple_roots, simple_coroots");
    if (!j["rank"].is_number_integer() || j["rank"].get<Int>() <= 0) throw DatumError("rank must be a positive integer");
    const auto d = static_cast<std::size_t>(j["rank"].get<Int>());
    auto read_rows = [&](const nlohmann::json& rows, const char* what) {
      if (!rows.is_array()) throw DatumError(std::string(what) + " must be an array");
      std::vector<std::vector<Int>> out;
      for (const auto& row : rows) {
        if (!row.is_array() || row.size() != d)
          throw DatumError(std::string(what) + ": every entry must have " + std::to_string(d) + " coordinates");
        std::vector<Int> v;
        for (const auto& x : row) {
          if (!x.is_number_integer()) throw DatumError(std::string(what) + ": pairing not integral");
          v.push_back(x.get<Int>());
        }
        out.push_back(std::move(v));
      }
      return out;
    };
    auto rr = read_rows(j["simple_roots"], "simple_roots");
    auto cr = read_rows(j["simple_coroots"], "simple_coroots");
    if (rr.size() != cr.size()) throw DatumError("simple_roots and simple_coroots differ in length");
    std::vector<Weight> roots;
    std::vector<Coweight> coroots;
    for (auto& v : rr) roots.emplace_back(std::move(v));
    for (auto& v : cr) coroots.emplace_back(std::move(v));
    return RootDatum(d, std::move(roots), std::move(coroots), j.value("name", std::string("explicit")));
  }

  RootDatum(std::size_t rank, std::vector<Weight> simple_roots, std::vector<Coweight> simple_coroots,
            std::string name = "explicit")
      : rank_(rank), name_(std::move(name)), simple_roots_(std::move(simple_roots)),
        simple_coroots_(std::move(simple_coroots)) {
    if (rank_ == 0) throw DatumError("rank must be positive");
    if (simple_roots_.size() != simple_coroots_.size()) throw DatumError("root/coroot count mismatch");
    if (simple_roots_.size() > rank_) throw DatumError("more simple roots than the rank");
    for (const auto& a : simple_roots_)
      if (a.size() != rank_) throw DatumError("simple root has wrong dimension");
    for (const auto& a : simple_coroots_)
      if (a.size() != rank_) throw DatumError("simple coroot has wrong dimension");
    build_cartan();
    build_positive_roots();
    build_generators();
  }

  const std::string& name() const noexcept { return name_; }
  std::size_t rank() const noexcept { return rank_; }
  std::size_t semisimple_rank() const noexcept { return simple_roots_.size(); }
  bool is_semisimple() const noexcept { return semisimple_rank() == rank_; }
  bool is_torus() const noexcept { return simple_roots_.empty(); }

  const std::vector<Weight>& simple_roots() const noexcept { return simple_roots_; }
  const std::vector<Coweight>& simple_coroots() const noexcept { return simple_coroots_; }
  /// A(i, j) = <alpha_j^vee, alpha_i>.
  const IntMatrix& cartan() const noexcept { return cartan_; }

  const std::vector<Weight>& pos_roots() const noexcept { return pos_roots_; }
  const std::vector<Coweight>& pos_coroots() const noexcept { return pos_coroots_; }
  /// Expansion of pos_roots()[k] in the simple roots.
  const std::vector<std::vector<Int>>& root_expansions() const noexcept { return root_exp_; }
  /// Expansion of pos_coroots()[k] in the simple coroots.
  const std::vector<std::vector<Int>>& coroot_expansions() const noexcept { return coroot_exp_; }
  std::size_t num_pos_roots() const noexcept { return pos_roots_.size(); }

  const Weight& two_rho() const noexcept { return two_rho_; }
  const Coweight& two_rho_check() const noexcept { return two_rho_check_; }

  /// Index of a root (as covector) among +-pos_roots: k+1 for pos_roots()[k], -(k+1) for its negative, 0 if not a root.
  int root_index(const Weight& chi) const {
    auto it = root_lookup_.find(chi);
    return it == root_lookup_.end() ? 0 : it->second;
  }

  Weight signed_root(int index) const {
    const Weight& a = pos_roots_.at(static_cast<std::size_t>(std::abs(index)) - 1);
    return index > 0 ? a : -a;
  }

  Coweight zero() const { return Coweight(rank_); }

  /// s_i(lambda) = lambda - <lambda, alpha_i> alpha_i^vee.
  Coweight reflect(std::size_t i, const Coweight& lambda) const {
    return lambda - pair(lambda, simple_roots_[i]) * simple_coroots_[i];
  }

  bool is_dominant(const Coweight& lambda) const {
    for (const auto& a : simple_roots_)
      if (pair(lambda, a) < 0) return false;
    return true;
  }

  bool is_strictly_dominant(const Coweight& lambda) const {
    for (const auto& a : simple_roots_)
      if (pair(lambda, a) <= 0) return false;
    return true;
  }

  /// Integer coefficients c with lambda = sum c_j alpha_j^vee, if they exist.
  std::optional<std::vector<Int>> coroot_expansion(const Coweight& lambda) const {
    check_rank(lambda);
    const std::size_t r = semisimple_rank();
    std::vector<Int> p(r);
    for (std::size_t i = 0; i < r; ++i) p[i] = pair(lambda, simple_roots_[i]);
    std::vector<Int> c(r, 0);
    for (std::size_t j = 0; j < r; ++j) {
      Int s = 0;
      for (std::size_t i = 0; i < r; ++i) s = checked_add(s, checked_mul(cartan_adj_(j, i), p[i]));
      if (s % cartan_det_ != 0) return std::nullopt;
      c[j] = s / cartan_det_;
    }
    Coweight back = zero();
    for (std::size_t j = 0; j < r; ++j) back += c[j] * simple_coroots_[j];
    if (back != lambda) return std::nullopt;
    return c;
  }

  bool in_coroot_lattice(const Coweight& lambda) const { return coroot_expansion(lambda).has_value(); }

  /// Sum of the coroot-expansion coefficients; nullopt outside the coroot lattice.
  std::optional<Int> coroot_height(const Coweight& lambda) const {
    auto c = coroot_expansion(lambda);
    if (!c) return std::nullopt;
    return std::accumulate(c->begin(), c->end(), Int{0});
  }

  /// lambda <= mu  iff  mu - lambda is a nonnegative integer combination of simple coroots.
  bool dominance_leq(const Coweight& lambda, const Coweight& mu) const {
    auto c = coroot_expansion(mu - lambda);
    if (!c) return false;
    return std::all_of(c->begin(), c->end(), [](Int x) { return x >= 0; });
  }

  /// The coweight with prescribed pairings against the simple roots (semisimple data only).
  std::optional<Coweight> coweight_with_pairings(const std::vector<Int>& p) const {
    if (!is_semisimple()) throw DomainError("coweight_with_pairings needs a semisimple datum");
    if (p.size() != rank_) throw DomainError("pairing vector has wrong length");
    Coweight out(rank_);
    for (std::size_t j = 0; j < rank_; ++j) {
      Int s = 0;
      for (std::size_t i = 0; i < rank_; ++i) s = checked_add(s, checked_mul(roots_adj_(j, i), p[i]));
      if (s % roots_det_ != 0) return std::nullopt;
      out[j] = s / roots_det_;
    }
    return out;
  }

  /// Dominant generators along the fundamental coweight rays: the smallest positive multiple of each lying in Y.
  const std::vector<Coweight>& dominant_generators() const noexcept { return dominant_generators_; }
  /// Sum of dominant_generators(): a strictly dominant coweight.
  const Coweight& regular_generator() const noexcept { return regular_generator_; }

  /// Number of cosets of the coroot lattice in Y (semisimple data only).
  Int fundamental_group_order() const {
    if (!is_semisimple()) throw DomainError("Y/ZR^vee is infinite for a datum with central directions");
    IntMatrix m(rank_);
    for (std::size_t j = 0; j < rank_; ++j)
      for (std::size_t i = 0; i < rank_; ++i) m(i, j) = simple_coroots_[j][i];
    return std::abs(determinant(m));
  }

  /// Connected components of the Dynkin diagram, as sorted index lists.
  const std::vector<std::vector<std::size_t>>& components() const noexcept { return components_; }
  /// Index into pos_roots() of the highest root of each component.
  const std::vector<std::size_t>& highest_roots() const noexcept { return highest_roots_; }

  /// Smallest (by <mu,2rho>, then coordinates) dominant mu with lambda + mu dominant.
  Coweight min_dominant_shift(const Coweight& lambda) const {
    check_rank(lambda);
    if (is_dominant(lambda)) return zero();
    const std::size_t r = semisimple_rank();
    std::vector<Int> lo(r);
    for (std::size_t i = 0; i < r; ++i) lo[i] = std::max<Int>(0, -pair(lambda, simple_roots_[i]));
    if (!is_semisimple() || r > 8) return regular_multiple_for(lambda);
    std::optional<Coweight> best;
    Int best_len = 0;
    std::vector<Int> c = lo;
    const Int span = std::max<Int>(1, roots_det_);
    for (;;) {
      if (auto mu = coweight_with_pairings(c)) {
        Int len = pair(*mu, two_rho_);
        if (!best || len < best_len || (len == best_len && *mu < *best)) best = *mu, best_len = len;
      }
      std::size_t i = 0;
      while (i < r && ++c[i] >= lo[i] + span) c[i] = lo[i], ++i;
      if (i == r) break;
    }
    return best ? *best : regular_multiple_for(lambda);
  }

  /// N * regular_generator() with N >= 0 minimal such that lambda + N * regular_generator() is dominant.
  Coweight regular_multiple_for(const Coweight& lambda) const { return regular_multiple_for_all({lambda}); }

  Coweight regular_multiple_for_all(const std::vector<Coweight>& lambdas) const {
    Int n = 0;
    for (const auto& lambda : lambdas)
      for (const auto& a : simple_roots_) {
        Int need = -pair(lambda, a);
        Int step = pair(regular_generator_, a);
        if (need > 0) n = std::max(n, (need + step - 1) / step);
      }
    return n * regular_generator_;
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["name"] = name_;
    j["rank"] = rank_;
    auto rows = [](const auto& vs) {
      nlohmann::json a = nlohmann::json::array();
      for (const auto& v : vs) a.push_back(v.coords());
      return a;
    };
    j["simple_roots"] = rows(simple_roots_);
    j["simple_coroots"] = rows(simple_coroots_);
    nlohmann::json cm = nlohmann::json::array();
    for (std::size_t i = 0; i < semisimple_rank(); ++i) {
      std::vector<Int> row;
      for (std::size_t jj = 0; jj < semisimple_rank(); ++jj) row.push_back(cartan_(i, jj));
      cm.push_back(row);
    }
    j["cartan"] = cm;
    j["pos_roots"] = rows(pos_roots_);
    j["pos_coroots"] = rows(pos_coroots_);
    j["two_rho"] = two_rho_.coords();
    j["two_rho_check"] = two_rho_check_.coords();
    return j;
  }

 private:
  void check_rank(const Coweight& lambda) const {
    if (lambda.size() != rank_) throw DomainError("coweight has rank " + std::to_string(lambda.size()) +
                                                  ", datum has rank " + std::to_string(rank_));
  }

  void build_cartan() {
    const std::size_t r = semisimple_rank();
    cartan_ = IntMatrix(r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) cartan_(i, j) = pair(simple_coroots_[j], simple_roots_[i]);
    for (std::size_t i = 0; i < r; ++i) {
      if (cartan_(i, i) != 2) throw DatumError("inconsistent Cartan matrix: <alpha_i^vee, alpha_i> != 2");
      for (std::size_t j = 0; j < r; ++j) {
        if (i == j) continue;
        if (cartan_(i, j) > 0) throw DatumError("inconsistent Cartan matrix: positive off-diagonal entry");
        if ((cartan_(i, j) == 0) != (cartan_(j, i) == 0))
          throw DatumError("inconsistent Cartan matrix: asymmetric zero pattern");
      }
    }
    cartan_det_ = determinant(cartan_);
    if (cartan_det_ == 0) throw DatumError("coroots not linearly independent");
    cartan_adj_ = adjugate(cartan_);
    if (cartan_det_ < 0) {
      cartan_det_ = -cartan_det_;
      for (auto& x : cartan_adj_.a) x = -x;
    }
    if (is_semisimple()) {
      IntMatrix m(rank_);
      for (std::size_t i = 0; i < rank_; ++i)
        for (std::size_t j = 0; j < rank_; ++j) m(i, j) = simple_roots_[i][j];
      roots_det_ = determinant(m);
      roots_adj_ = adjugate(m);
      if (roots_det_ < 0) {
        roots_det_ = -roots_det_;
        for (auto& x : roots_adj_.a) x = -x;
      }
    }
  }

  // Closure of the simple (root, coroot) pairs under simple reflections, in
  // root-basis coordinates; the same reflection is applied to both members.
  void build_positive_roots() {
    const std::size_t r = semisimple_rank();
    const std::size_t cap = 4096;
    std::map<std::vector<Int>, std::vector<Int>> found;  // root expansion -> coroot expansion
    std::vector<std::vector<Int>> queue;
    for (std::size_t i = 0; i < r; ++i) {
      std::vector<Int> e(r, 0);
      e[i] = 1;
      found.emplace(e, e);
      queue.push_back(e);
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::vector<Int> b = queue[head];
      const std::vector<Int> bc = found.at(b);
      for (std::size_t i = 0; i < r; ++i) {
        Int k = 0, kc = 0;  // <alpha_i^vee, beta>, <beta^vee, alpha_i>
        for (std::size_t j = 0; j < r; ++j) {
          k += b[j] * cartan_(j, i);
          kc += bc[j] * cartan_(i, j);
        }
        std::vector<Int> nb = b, nbc = bc;
        nb[i] -= k;
        nbc[i] -= kc;
        bool positive = std::all_of(nb.begin(), nb.end(), [](Int x) { return x >= 0; }) &&
                        std::any_of(nb.begin(), nb.end(), [](Int x) { return x > 0; });
        if (!positive || found.count(nb)) continue;
        if (!std::all_of(nbc.begin(), nbc.end(), [](Int x) { return x >= 0; }))
          throw DatumError("inconsistent Cartan matrix: root and coroot positivity disagree");
        found.emplace(nb, nbc);
        queue.push_back(nb);
        if (found.size() > cap) throw DatumError("inconsistent Cartan matrix: not of finite type");
      }
    }
    std::vector<std::pair<std::vector<Int>, std::vector<Int>>> entries(found.begin(), found.end());
    auto height = [](const std::vector<Int>& v) { return std::accumulate(v.begin(), v.end(), Int{0}); };
    std::stable_sort(entries.begin(), entries.end(), [&](const auto& x, const auto& y) {
      Int hx = height(x.first), hy = height(y.first);
      return hx != hy ? hx < hy : x.first < y.first;
    });
    two_rho_ = Weight(rank_);
    two_rho_check_ = Coweight(rank_);
    for (const auto& [b, bc] : entries) {
      Weight a(rank_);
      Coweight ac(rank_);
      for (std::size_t j = 0; j < r; ++j) {
        a += b[j] * simple_roots_[j];
        ac += bc[j] * simple_coroots_[j];
      }
      if (pair(ac, a) != 2) throw DatumError("inconsistent Cartan matrix: <beta^vee, beta> != 2");
      two_rho_ += a;
      two_rho_check_ += ac;
      root_lookup_[a] = static_cast<int>(pos_roots_.size()) + 1;
      root_lookup_[-a] = -(static_cast<int>(pos_roots_.size()) + 1);
      pos_roots_.push_back(std::move(a));
      pos_coroots_.push_back(std::move(ac));
      root_exp_.push_back(b);
      coroot_exp_.push_back(bc);
    }
    if (root_lookup_.size() != 2 * pos_roots_.size()) throw DatumError("distinct roots with equal pairings");

    // Dynkin components and their highest roots.
    std::vector<int> comp(r, -1);
    for (std::size_t s = 0; s < r; ++s) {
      if (comp[s] >= 0) continue;
      std::vector<std::size_t> members{s};
      comp[s] = static_cast<int>(components_.size());
      for (std::size_t h = 0; h < members.size(); ++h)
        for (std::size_t t = 0; t < r; ++t)
          if (comp[t] < 0 && cartan_(members[h], t) != 0) {
            comp[t] = comp[s];
            members.push_back(t);
          }
      std::sort(members.begin(), members.end());
      components_.push_back(members);
    }
    for (std::size_t c = 0; c < components_.size(); ++c) {
      std::size_t best = 0;
      Int best_h = -1;
      for (std::size_t k = 0; k < root_exp_.size(); ++k) {
        bool inside = true;
        for (std::size_t j = 0; j < r; ++j)
          if (root_exp_[k][j] != 0 && comp[j] != static_cast<int>(c)) inside = false;
        if (inside && height(root_exp_[k]) > best_h) best_h = height(root_exp_[k]), best = k;
      }
      highest_roots_.push_back(best);
    }
  }

  void build_generators() {
    const std::size_t r = semisimple_rank();
    regular_generator_ = zero();
    for (std::size_t i = 0; i < r; ++i) {
      // det * varpi_i^vee = sum_j adj(j, i) alpha_j^vee lies in Y.
      Coweight v = zero();
      for (std::size_t j = 0; j < r; ++j) v += cartan_adj_(j, i) * simple_coroots_[j];
      Int g = cartan_det_;
      for (Int x : v.coords()) g = std::gcd(g, x);
      Int k = cartan_det_ / g;
      Coweight gen(rank_);
      for (std::size_t t = 0; t < rank_; ++t) gen[t] = v[t] / g;
      if (pair(gen, simple_roots_[i]) != k) throw DatumError("internal error: fundamental coweight generator");
      dominant_generators_.push_back(gen);
      regular_generator_ += gen;
    }
  }

  std::size_t rank_;
  std::string name_;
  std::vector<Weight> simple_roots_;
  std::vector<Coweight> simple_coroots_;
  IntMatrix cartan_;
  IntMatrix cartan_adj_;
  Int cartan_det_ = 1;
  IntMatrix roots_adj_;
  Int roots_det_ = 1;
  std::vector<Weight> pos_roots_;
  std::vector<Coweight> pos_coroots_;
  std::vector<std::vector<Int>> root_exp_;
  std::vector<std::vector<Int>> coroot_exp_;
  std::map<Weight, int> root_lookup_;
  Weight two_rho_;
  Coweight two_rho_check_;
  std::vector<std::vector<std::size_t>> components_;
  std::vector<std::size_t> highest_roots_;
  std::vector<Coweight> dominant_generators_;
  Coweight regular_generator_;
};

}  // namespace siflag
