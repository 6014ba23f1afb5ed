#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "siflag/extweyl.hpp"
#include "siflag/hecke.hpp"

namespace siflag {

/// A coweight written as a JSON integer array, e.g. "[1,-2]".
inline Coweight parse_coweight(std::string_view text, std::size_t rank) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error&) {
    throw ParseError("coweight must be a JSON integer array, got '" + std::string(text) + "'");
  }
  if (!j.is_array()) throw ParseError("coweight must be a JSON integer array, got '" + std::string(text) + "'");
  std::vector<Int> c;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw ParseError("coweight entries must be integers");
    c.push_back(v.get<Int>());
  }
  if (c.size() != rank)
    throw ParseError("coweight has " + std::to_string(c.size()) + " entries, datum rank is " + std::to_string(rank));
  return Coweight(std::move(c));
}

namespace detail {

inline std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

// Split on '*' outside brackets.
inline std::vector<std::string> split_factors(std::string_view s) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '[') ++depth;
    if (s[i] == ']') --depth;
    if (depth < 0) throw ParseError("unbalanced ']' in element");
    if (s[i] == '*' && depth == 0) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (depth != 0) throw ParseError("unbalanced '[' in element");
  out.push_back(trim(s.substr(start)));
  return out;
}

}  // namespace detail

/**
 * Parses a product of factors separated by '*':
 *   e            identity
 *   t[a,b,...]   translation
 *   s1, s2, ...  finite simple reflections (1-based); plain "s" when there is exactly one
 *   s0           the affine simple reflection (single simple component only)
 *   w0           longest element of W_f
 * The canonical printer's output is always accepted.
 */
inline ExtAffineElement parse_element(const ExtAffineWeylGroup& G, std::string_view text) {
  const RootDatum& d = G.datum();
  const FiniteWeylGroup& W = G.finite();
  ExtAffineElement x = G.identity();
  for (const std::string& f : detail::split_factors(text)) {
    if (f.empty()) throw ParseError("empty factor in element '" + std::string(text) + "'");
    ExtAffineElement g;
    if (f == "e") {
      g = G.identity();
    } else if (f == "w0") {
      g = G.from_finite(W.longest());
    } else if (f[0] == 't') {
      g = G.translation(parse_coweight(std::string_view(f).substr(1), d.rank()));
    } else if (f == "s") {
      if (d.semisimple_rank() != 1) throw ParseError("bare 's' needs semisimple rank 1; write s1, s2, ...");
      g = G.from_finite(W.simple(0));
    } else if (f[0] == 's') {
      std::size_t pos = 0;
      unsigned long i = 0;
      try {
        i = std::stoul(f.substr(1), &pos);
      } catch (const std::exception&) {
        throw ParseError("bad factor '" + f + "'");
      }
      if (pos != f.size() - 1) throw ParseError("bad factor '" + f + "'");
      if (i == 0) {
        if (d.components().size() != 1) throw ParseError("s0 needs exactly one simple component");
        g = G.s_aff().back();
      } else {
        if (i > d.semisimple_rank()) throw ParseError("simple reflection " + f + " out of range");
        g = G.from_finite(W.simple(i - 1));
      }
    } else {
      throw ParseError("bad factor '" + f + "'");
    }
    x = G.compose(x, g);
  }
  return x;
}

/// Inverse of HeckeAlgebra::to_json.
inline HeckeElement hecke_from_json(const ExtAffineWeylGroup& G, const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("Hecke element JSON must be an array");
  HeckeElement h;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("w") || !t.contains("coeff")) throw ParseError("Hecke term needs 'w' and 'coeff'");
    h.add(parse_element(G, t.at("w").get<std::string>()), LaurentPolynomial::from_json(t.at("coeff")));
  }
  return h;
}

}  // namespace siflag
