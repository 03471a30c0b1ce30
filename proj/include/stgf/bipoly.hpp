#pragma once

// Sparse bivariate polynomials in y (vertex marker) and z (edge marker) with
// arbitrary-precision non-negative integer coefficients.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include "stgf/errors.hpp"

namespace stgf {

using Coeff = boost::multiprecision::cpp_int;

/// Exponent pair of a monomial y^dy z^dz.
struct Monomial {
  std::uint32_t dy = 0;
  std::uint32_t dz = 0;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Canonical term order: dz ascending, then dy ascending.
inline bool canonical_less(const Monomial& a, const Monomial& b) {
  return a.dz != b.dz ? a.dz < b.dz : a.dy < b.dy;
}

struct Term {
  Monomial mono;
  Coeff coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Immutable-by-convention polynomial value. Terms are kept sorted in
/// canonical order and never carry a zero coefficient.
class BiPoly {
 public:
  BiPoly() = default;

  /// Constant polynomial.
  explicit BiPoly(Coeff c) {
    if (c != 0) terms_.push_back({{0, 0}, std::move(c)});
  }

  /// Builds from arbitrary (possibly repeated, unordered) terms.
  BiPoly(std::initializer_list<Term> terms) : terms_(terms) { normalize(); }
  explicit BiPoly(std::vector<Term> terms) : terms_(std::move(terms)) { normalize(); }

  static BiPoly zero() { return {}; }
  static BiPoly one() { return BiPoly(Coeff(1)); }
  static BiPoly monomial(std::uint32_t dy, std::uint32_t dz, Coeff c = 1) {
    return BiPoly(std::vector<Term>{{{dy, dz}, std::move(c)}});
  }
  static BiPoly y() { return monomial(1, 0); }
  static BiPoly z() { return monomial(0, 1); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  friend bool operator==(const BiPoly&, const BiPoly&) = default;

  friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    BiPoly out;
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    while (ia != a.terms_.end() && ib != b.terms_.end()) {
      if (canonical_less(ia->mono, ib->mono)) {
        out.terms_.push_back(*ia++);
      } else if (canonical_less(ib->mono, ia->mono)) {
        out.terms_.push_back(*ib++);
      } else {
        out.terms_.push_back({ia->mono, ia->coeff + ib->coeff});
        ++ia;
        ++ib;
      }
    }
    out.terms_.insert(out.terms_.end(), ia, a.terms_.end());
    out.terms_.insert(out.terms_.end(), ib, b.terms_.end());
    return out;
  }

  BiPoly& operator+=(const BiPoly& b) {
    if (b.is_zero()) return *this;
    if (is_zero()) return *this = b;
    return *this = *this + b;
  }

  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.terms_.size() == 1 && a.terms_[0].mono == Monomial{0, 0}) return b.scaled(a.terms_[0].coeff);
    if (b.terms_.size() == 1 && b.terms_[0].mono == Monomial{0, 0}) return a.scaled(b.terms_[0].coeff);
    std::vector<Term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_) {
      for (const auto& tb : b.terms_) {
        prod.push_back({{ta.mono.dy + tb.mono.dy, ta.mono.dz + tb.mono.dz}, ta.coeff * tb.coeff});
      }
    }
    return BiPoly(std::move(prod));
  }

  BiPoly& operator*=(const BiPoly& b) { return *this = *this * b; }

  /// Stored coefficient of y^dy z^dz, or 0.
  Coeff coefficient(std::uint32_t dy, std::uint32_t dz) const {
    const Monomial key{dy, dz};
    auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                               [](const Term& t, const Monomial& m) { return canonical_less(t.mono, m); });
    if (it != terms_.end() && it->mono == key) return it->coeff;
    return 0;
  }

 private:
  BiPoly scaled(const Coeff& c) const {
    BiPoly out = *this;
    if (c == 1) return out;
    for (auto& t : out.terms_) t.coeff *= c;
    return out;
  }

  void normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return canonical_less(a.mono, b.mono); });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!merged.empty() && merged.back().mono == t.mono) {
        merged.back().coeff += t.coeff;
      } else {
        merged.push_back(std::move(t));
      }
    }
    std::erase_if(merged, [](const Term& t) { return t.coeff == 0; });
    for (const auto& t : merged) {
      if (t.coeff < 0) throw NegativeCoefficient("polynomial terms must be non-negative");
    }
    terms_ = std::move(merged);
  }

  std::vector<Term> terms_;
};

inline BiPoly add(const BiPoly& a, const BiPoly& b) { return a + b; }
inline BiPoly mul(const BiPoly& a, const BiPoly& b) { return a * b; }

/// a - b, requiring b to be dominated by a coefficientwise.
inline BiPoly subtract_nonneg(const BiPoly& a, const BiPoly& b) {
  std::vector<Term> out;
  out.reserve(a.size());
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  while (ib != b.terms().end()) {
    if (ia == a.terms().end() || canonical_less(ib->mono, ia->mono)) {
      throw NegativeCoefficient("subtrahend has a term absent from the minuend");
    }
    if (canonical_less(ia->mono, ib->mono)) {
      out.push_back(*ia++);
      continue;
    }
    if (ib->coeff > ia->coeff) {
      throw NegativeCoefficient("subtrahend coefficient exceeds minuend coefficient");
    }
    Coeff diff = ia->coeff - ib->coeff;
    if (diff != 0) out.push_back({ia->mono, std::move(diff)});
    ++ia;
    ++ib;
  }
  out.insert(out.end(), ia, a.terms().end());
  return BiPoly(std::move(out));
}

/// Value at y = z = 1.
inline Coeff eval_counts(const BiPoly& a) {
  Coeff total = 0;
  for (const auto& t : a.terms()) total += t.coeff;
  return total;
}

inline Coeff coefficient(const BiPoly& a, std::uint32_t dy, std::uint32_t dz) {
  return a.coefficient(dy, dz);
}

/// Sum of entries[lo..hi]; empty (zero) when hi < lo. Indices outside the
/// vector read as zero.
inline BiPoly range_sum(const std::vector<BiPoly>& entries, int lo, int hi) {
  BiPoly s;
  lo = std::max(lo, 0);
  hi = std::min(hi, static_cast<int>(entries.size()) - 1);
  for (int i = lo; i <= hi; ++i) s += entries[static_cast<std::size_t>(i)];
  return s;
}

// ---- text form --------------------------------------------------------------

/// Canonical text: `c*y^a*z^b` terms joined by " + ", zero exponents and `^1`
/// elided, coefficient always written, "0" for the empty polynomial.
inline std::string to_string(const BiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& t : p.terms()) {
    if (!out.empty()) out += " + ";
    out += t.coeff.str();
    auto factor = [&](char var, std::uint32_t e) {
      if (e == 0) return;
      out += '*';
      out += var;
      if (e != 1) out += '^' + std::to_string(e);
    };
    factor('y', t.mono.dy);
    factor('z', t.mono.dz);
  }
  return out;
}

/// Parses the canonical text form. Also accepts a leading coefficient being
/// omitted ("y^2*z") and arbitrary term order.
inline BiPoly parse_bipoly(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) throw ParseError("empty polynomial");
  std::vector<Term> terms;
  std::size_t pos = 0;
  auto read_uint = [&](const char* what) {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw ParseError(std::string("expected ") + what + " in '" + std::string(text) + "'");
    return s.substr(start, pos - start);
  };
  while (true) {
    Term term{{0, 0}, 1};
    bool first = true;
    while (true) {
      if (pos >= s.size()) throw ParseError("truncated term in '" + std::string(text) + "'");
      char ch = s[pos];
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        if (!first) throw ParseError("coefficient must lead its term");
        term.coeff = Coeff(read_uint("coefficient"));
      } else if (ch == 'y' || ch == 'z') {
        ++pos;
        std::uint32_t e = 1;
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          e = static_cast<std::uint32_t>(std::stoul(read_uint("exponent")));
        }
        (ch == 'y' ? term.mono.dy : term.mono.dz) += e;
      } else {
        throw ParseError(std::string("unexpected character '") + ch + "'");
      }
      first = false;
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    terms.push_back(std::move(term));
    if (pos == s.size()) break;
    if (s[pos] != '+') throw ParseError(std::string("unexpected character '") + s[pos] + "'");
    ++pos;
  }
  return BiPoly(std::move(terms));
}

// ---- JSON form --------------------------------------------------------------

/// List of {"y": int, "z": int, "c": decimal-string} in canonical order.
inline nlohmann::json to_json(const BiPoly& p) {
  auto arr = nlohmann::json::array();
  for (const auto& t : p.terms()) {
    arr.push_back({{"y", t.mono.dy}, {"z", t.mono.dz}, {"c", t.coeff.str()}});
  }
  return arr;
}

inline BiPoly bipoly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("polynomial JSON must be an array");
  std::vector<Term> terms;
  for (const auto& rec : j) {
    if (!rec.is_object() || !rec.contains("y") || !rec.contains("z") || !rec.contains("c") ||
        !rec["y"].is_number_unsigned() || !rec["z"].is_number_unsigned() || !rec["c"].is_string()) {
      throw ParseError("malformed polynomial term " + rec.dump());
    }
    const auto c = rec["c"].get<std::string>();
    if (c.empty() || !std::all_of(c.begin(), c.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
      throw ParseError("coefficient must be a non-negative decimal string, got '" + c + "'");
    }
    terms.push_back({{rec["y"].get<std::uint32_t>(), rec["z"].get<std::uint32_t>()}, Coeff(c)});
  }
  return BiPoly(std::move(terms));
}

}  // namespace stgf
