#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "rational.hpp"
#include "rootsys.hpp"

namespace isod4 {

using Exponent = std::array<int, 4>;

/// Graded term order: higher total degree first, then lexicographically
/// larger exponent first (t1 > t2 > t3 > t4).
struct TermOrder {
  bool operator()(const Exponent &a, const Exponent &b) const {
    const int da = a[0] + a[1] + a[2] + a[3];
    const int db = b[0] + b[1] + b[2] + b[3];
    if (da != db)
      return da > db;
    return a > b;
  }
};

/// Sparse polynomial in t1..t4 with rational coefficients. Zero coefficients
/// are never stored, so the zero polynomial has no terms.
class Polynomial {
public:
  using Terms = std::map<Exponent, Rational, TermOrder>;

  Polynomial() = default;
  Polynomial(Rational c) { add_term({0, 0, 0, 0}, c); } // NOLINT: constants promote

  /// The variable t_i, i in 1..4.
  static Polynomial var(int i) {
    if (i < 1 || i > 4)
      throw std::out_of_range("variable index out of range: " + std::to_string(i));
    Exponent e{};
    e[static_cast<std::size_t>(i - 1)] = 1;
    Polynomial p;
    p.add_term(e, 1);
    return p;
  }

  static Polynomial monomial(const Exponent &e, Rational c = 1) {
    Polynomial p;
    p.add_term(e, c);
    return p;
  }

  [[nodiscard]] const Terms &terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }

  [[nodiscard]] Rational coefficient(const Exponent &e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Total degree in the t_i; -1 for the zero polynomial.
  [[nodiscard]] int degree() const {
    return terms_.empty() ? -1 : std::accumulate(terms_.begin()->first.begin(),
                                                 terms_.begin()->first.end(), 0);
  }

  [[nodiscard]] bool is_homogeneous() const {
    const int d = degree();
    for (const auto &[e, c] : terms_)
      if (e[0] + e[1] + e[2] + e[3] != d)
        return false;
    return true;
  }

  /// Cohomological degree when each t_i sits in degree `grading`.
  [[nodiscard]] int graded_degree(int grading) const {
    if (!is_homogeneous())
      throw std::domain_error("graded_degree: polynomial is not homogeneous");
    return is_zero() ? -1 : degree() * grading;
  }

  void add_term(const Exponent &e, const Rational &c) {
    if (c.is_zero())
      return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero())
        terms_.erase(it);
    }
  }

  friend Polynomial operator+(Polynomial a, const Polynomial &b) {
    for (const auto &[e, c] : b.terms_)
      a.add_term(e, c);
    return a;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial &b) {
    for (const auto &[e, c] : b.terms_)
      a.add_term(e, -c);
    return a;
  }
  Polynomial operator-() const { return Polynomial() - *this; }

  friend Polynomial operator*(const Polynomial &a, const Polynomial &b) {
    Polynomial r;
    for (const auto &[ea, ca] : a.terms_)
      for (const auto &[eb, cb] : b.terms_) {
        Exponent e;
        for (std::size_t i = 0; i < 4; ++i)
          e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }

  Polynomial &operator+=(const Polynomial &o) { return *this = *this + o; }
  Polynomial &operator-=(const Polynomial &o) { return *this = *this - o; }
  Polynomial &operator*=(const Polynomial &o) { return *this = *this * o; }

  [[nodiscard]] Polynomial pow(unsigned n) const {
    Polynomial r(1);
    for (unsigned i = 0; i < n; ++i)
      r *= *this;
    return r;
  }

  friend bool operator==(const Polynomial &, const Polynomial &) = default;

  /// Canonical text, terms in TermOrder, e.g. "t1^2 - 2*t1*t2 + 1/2".
  [[nodiscard]] std::string str() const {
    if (terms_.empty())
      return "0";
    std::string s;
    bool first = true;
    for (const auto &[e, c] : terms_) {
      const bool neg = c < Rational(0);
      const Rational mag = neg ? -c : c;
      if (first)
        s += neg ? "-" : "";
      else
        s += neg ? " - " : " + ";
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < 4; ++i) {
        if (e[i] == 0)
          continue;
        mono += (mono.empty() ? "" : "*") + std::string("t") + std::to_string(i + 1);
        if (e[i] > 1)
          mono += "^" + std::to_string(e[i]);
      }
      if (mono.empty())
        s += mag.str();
      else if (mag == Rational(1))
        s += mono;
      else
        s += mag.str() + "*" + mono;
    }
    return s;
  }

private:
  Terms terms_;
};

/// Substitutes t_i -> sign_i * t_{target_i} and expands multiplicatively.
inline Polynomial substitute(const SignedPerm &action, const Polynomial &p) {
  Polynomial out;
  for (const auto &[e, c] : p.terms()) {
    Exponent moved{};
    int sign = 1;
    for (std::size_t i = 0; i < 4; ++i) {
      moved[static_cast<std::size_t>(action.target[i])] = e[i];
      if (action.sign[i] < 0 && e[i] % 2 != 0)
        sign = -sign;
    }
    out.add_term(moved, c * Rational(sign));
  }
  return out;
}

/// i-th elementary symmetric polynomial in t1..t4, i in 0..4.
inline Polynomial elementary_symmetric(int i) {
  if (i < 0 || i > 4)
    throw std::out_of_range("elementary_symmetric: index out of range");
  Polynomial s;
  for (unsigned mask = 0; mask < 16; ++mask) {
    if (std::popcount(mask) != i)
      continue;
    Exponent e{};
    for (std::size_t b = 0; b < 4; ++b)
      e[b] = static_cast<int>((mask >> b) & 1u);
    s.add_term(e, 1);
  }
  return s;
}

/// i-th elementary symmetric polynomial in t1^2..t4^2, i in 1..4.
inline Polynomial theta(int i) {
  if (i < 1 || i > 4)
    throw std::out_of_range("theta: index out of range");
  Polynomial s;
  for (unsigned mask = 0; mask < 16; ++mask) {
    if (std::popcount(mask) != i)
      continue;
    Exponent e{};
    for (std::size_t b = 0; b < 4; ++b)
      e[b] = 2 * static_cast<int>((mask >> b) & 1u);
    s.add_term(e, 1);
  }
  return s;
}

} // namespace isod4
