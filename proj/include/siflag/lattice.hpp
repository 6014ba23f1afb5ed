#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace siflag {

using Int = std::int64_t;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid or inconsistent root-datum input.
class DatumError : public Error {
 public:
  using Error::Error;
};

/// A precondition of a formula does not hold (e.g. non-dominant input).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input.
class ParseError : public Error {
 public:
  using Error::Error;
};

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("integer overflow");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("integer overflow");
  return r;
}

struct CoweightTag {};
struct WeightTag {};

/**
 * An element of Z^n tagged with the lattice it lives in.
 *
 * Coweights (elements of Y) and weights (covectors, elements of X) share
 * this representation but are distinct types, so a coweight cannot be
 * passed where a weight is expected.
 */
template <class Tag>
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::size_t n) : coords_(n, 0) {}
  explicit LatticeVector(std::vector<Int> coords) : coords_(std::move(coords)) {}
  LatticeVector(std::initializer_list<Int> coords) : coords_(coords) {}

  std::size_t size() const noexcept { return coords_.size(); }
  const std::vector<Int>& coords() const noexcept { return coords_; }
  Int operator[](std::size_t i) const { return coords_[i]; }
  Int& operator[](std::size_t i) { return coords_[i]; }

  bool is_zero() const noexcept {
    for (Int c : coords_)
      if (c != 0) return false;
    return true;
  }

  LatticeVector& operator+=(const LatticeVector& o) {
    check_size(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = checked_add(coords_[i], o.coords_[i]);
    return *this;
  }
  LatticeVector& operator-=(const LatticeVector& o) {
    check_size(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = checked_add(coords_[i], -o.coords_[i]);
    return *this;
  }
  LatticeVector& operator*=(Int k) {
    for (Int& c : coords_) c = checked_mul(c, k);
    return *this;
  }

  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator*(Int k, LatticeVector a) { return a *= k; }
  friend LatticeVector operator-(LatticeVector a) { return a *= -1; }

  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
  friend auto operator<=>(const LatticeVector& a, const LatticeVector& b) { return a.coords_ <=> b.coords_; }

  friend std::ostream& operator<<(std::ostream& os, const LatticeVector& v) {
    os << '[';
    for (std::size_t i = 0; i < v.coords_.size(); ++i) os << (i ? "," : "") << v.coords_[i];
    return os << ']';
  }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(coords_[i]);
    }
    return s + "]";
  }

 private:
  void check_size(const LatticeVector& o) const {
    if (o.size() != size()) throw DomainError("lattice rank mismatch");
  }

  std::vector<Int> coords_;
};

/// Element of Y = X_*(T).
using Coweight = LatticeVector<CoweightTag>;
/// Element of X = X^*(T), written as its row of pairings against the Y-basis.
using Weight = LatticeVector<WeightTag>;

/// The perfect pairing Y x X -> Z.
inline Int pair(const Coweight& lambda, const Weight& chi) {
  if (lambda.size() != chi.size()) throw DomainError("pair: rank mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) s = checked_add(s, checked_mul(lambda[i], chi[i]));
  return s;
}

inline std::size_t hash_coords(const std::vector<Int>& v, std::size_t seed = 0) {
  std::size_t h = seed ^ 0x9e3779b97f4a7c15ULL;
  for (Int c : v) h ^= std::hash<Int>{}(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

/// Square integer matrix stored row-major; small sizes only.
struct IntMatrix {
  std::size_t n = 0;
  std::vector<Int> a;

  IntMatrix() = default;
  explicit IntMatrix(std::size_t dim) : n(dim), a(dim * dim, 0) {}
  static IntMatrix identity(std::size_t dim) {
    IntMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
    return m;
  }

  Int& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
  Int operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    IntMatrix r(x.n);
    for (std::size_t i = 0; i < x.n; ++i)
      for (std::size_t k = 0; k < x.n; ++k) {
        Int xik = x(i, k);
        if (xik == 0) continue;
        for (std::size_t j = 0; j < x.n; ++j) r(i, j) = checked_add(r(i, j), checked_mul(xik, y(k, j)));
      }
    return r;
  }

  /// Matrix acting on a column vector.
  std::vector<Int> apply(const std::vector<Int>& v) const {
    std::vector<Int> r(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) r[i] = checked_add(r[i], checked_mul((*this)(i, j), v[j]));
    return r;
  }

  /// Row vector times matrix.
  std::vector<Int> apply_row(const std::vector<Int>& v) const {
    std::vector<Int> r(n, 0);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) r[j] = checked_add(r[j], checked_mul(v[i], (*this)(i, j)));
    return r;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

/// Determinant by fraction-free (Bareiss) elimination.
inline Int determinant(IntMatrix m) {
  const std::size_t n = m.n;
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (checked_mul(m(i, j), m(k, k)) - checked_mul(m(i, k), m(k, j))) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// Adjugate matrix: adj(M) * M = det(M) * I.
inline IntMatrix adjugate(const IntMatrix& m) {
  const std::size_t n = m.n;
  IntMatrix adj(n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      IntMatrix minor(n - 1);
      for (std::size_t r = 0, mr = 0; r < n; ++r) {
        if (r == j) continue;
        for (std::size_t c = 0, mc = 0; c < n; ++c) {
          if (c == i) continue;
          minor(mr, mc++) = m(r, c);
        }
        ++mr;
      }
      Int d = determinant(minor);
      adj(i, j) = ((i + j) % 2 == 0) ? d : -d;
    }
  return adj;
}

}  // namespace siflag

template <class Tag>
struct std::hash<siflag::LatticeVector<Tag>> {
  std::size_t operator()(const siflag::LatticeVector<Tag>& v) const noexcept { return siflag::hash_coords(v.coords()); }
};
