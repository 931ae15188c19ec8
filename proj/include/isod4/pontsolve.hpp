#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cohomring.hpp"
#include "linalg.hpp"
#include "rational.hpp"
#include "rootsys.hpp"

namespace isod4 {

// ---------------------------------------------------------------------------
// Linear forms in the unknowns k1..k4.

using LinearForm = std::array<Rational, 4>;

inline LinearForm unknown(std::size_t i) {
  LinearForm f{};
  f[i] = 1;
  return f;
}

inline LinearForm operator+(const LinearForm &a, const LinearForm &b) {
  LinearForm r;
  for (std::size_t i = 0; i < 4; ++i)
    r[i] = a[i] + b[i];
  return r;
}

inline LinearForm operator-(const LinearForm &a, const LinearForm &b) {
  LinearForm r;
  for (std::size_t i = 0; i < 4; ++i)
    r[i] = a[i] - b[i];
  return r;
}

inline LinearForm operator*(const Rational &s, const LinearForm &a) {
  LinearForm r;
  for (std::size_t i = 0; i < 4; ++i)
    r[i] = s * a[i];
  return r;
}

inline bool is_zero(const LinearForm &f) {
  return std::all_of(f.begin(), f.end(), [](const Rational &x) { return x.is_zero(); });
}

using UnknownNames = std::array<std::string, 4>;

inline const UnknownNames kGenericNames{"k1", "k2", "k3", "k4"};
/// Names once k1 = k2 has been imposed: k1 prints as k.
inline const UnknownNames kReducedNames{"k", "k2", "k3", "k4"};

inline std::string render_form(const LinearForm &f, const UnknownNames &names) {
  std::string s;
  for (std::size_t i = 0; i < 4; ++i) {
    const Rational &c = f[i];
    if (c.is_zero())
      continue;
    const bool neg = c < Rational(0);
    const Rational mag = neg ? -c : c;
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    if (mag != Rational(1))
      s += mag.str();
    s += names[i];
  }
  return s.empty() ? "0" : s;
}

/// A degree-m class sum_i coef[i] * t_i whose coefficients are linear forms
/// in the unknowns k1..k4.
struct UnknownVector {
  std::array<LinearForm, 4> coef{};

  /// k1 t1 + k2 t2 + k3 t3 + k4 t4.
  static UnknownVector generic() {
    UnknownVector v;
    for (std::size_t i = 0; i < 4; ++i)
      v.coef[i] = unknown(i);
    return v;
  }

  friend bool operator==(const UnknownVector &, const UnknownVector &) = default;

  friend UnknownVector operator+(const UnknownVector &a, const UnknownVector &b) {
    UnknownVector r;
    for (std::size_t i = 0; i < 4; ++i)
      r.coef[i] = a.coef[i] + b.coef[i];
    return r;
  }
  friend UnknownVector operator-(const UnknownVector &a, const UnknownVector &b) {
    UnknownVector r;
    for (std::size_t i = 0; i < 4; ++i)
      r.coef[i] = a.coef[i] - b.coef[i];
    return r;
  }

  /// Linear action t_i -> sign_i t_{target_i}.
  [[nodiscard]] UnknownVector transformed(const SignedPerm &p) const {
    UnknownVector r;
    for (std::size_t i = 0; i < 4; ++i)
      r.coef[static_cast<std::size_t>(p.target[i])] = Rational(p.sign[i]) * coef[i];
    return r;
  }

  /// Replaces unknown `var` by the linear form `value` in every coefficient.
  [[nodiscard]] UnknownVector substituted(std::size_t var, const LinearForm &value) const {
    UnknownVector r;
    for (std::size_t i = 0; i < 4; ++i) {
      LinearForm f = coef[i];
      const Rational c = f[var];
      f[var] = 0;
      r.coef[i] = f + c * value;
    }
    return r;
  }

  /// Numeric class once the unknowns take the values `k`.
  [[nodiscard]] Vec4 evaluate(const std::array<Rational, 4> &k) const {
    Vec4 out{0, 0, 0, 0};
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        out[i] += coef[i][j] * k[j];
    return out;
  }

  [[nodiscard]] std::string str(const UnknownNames &names = kGenericNames) const {
    std::string s;
    for (std::size_t i = 0; i < 4; ++i) {
      const LinearForm &f = coef[i];
      const auto nz = std::count_if(f.begin(), f.end(), [](const Rational &x) { return !x.is_zero(); });
      if (nz == 0)
        continue;
      const std::string t = "t" + std::to_string(i + 1);
      if (nz == 1) {
        std::string term = render_form(f, names);
        const bool neg = term.front() == '-';
        if (neg)
          term.erase(0, 1);
        if (s.empty())
          s += neg ? "-" : "";
        else
          s += neg ? " - " : " + ";
        s += term + t;
      } else {
        s += (s.empty() ? "" : " + ") + std::string("(") + render_form(f, names) + ")" + t;
      }
    }
    return s.empty() ? "0" : s;
  }
};

inline UnknownVector sum(std::span<const UnknownVector> vs) {
  UnknownVector s;
  for (const auto &v : vs)
    s = s + v;
  return s;
}

/// k2 := k1.
inline UnknownVector impose_leaf_sphere(const UnknownVector &v) { return v.substituted(1, unknown(0)); }

/// k3 := -k1.
inline UnknownVector impose_sum_zero(const UnknownVector &v) {
  return v.substituted(2, Rational(-1) * unknown(0));
}

// ---------------------------------------------------------------------------
// Constraints.

struct Equation {
  LinearForm lhs; // lhs = 0
  std::string source;
  [[nodiscard]] std::string str(const UnknownNames &names = kGenericNames) const {
    return render_form(lhs, names) + " = 0";
  }
};

/// Classes p1(E_ai), i = 1..12, obtained from the class of E_a1 by the
/// pullbacks (u^{-1})^* where a_i = u(a1) in the word table.
inline std::array<UnknownVector, 12> orbit_classes(const Cohomology &coh,
                                                   const UnknownVector &first) {
  std::array<UnknownVector, 12> out;
  out[0] = first;
  for (const auto &[idx, word] : word_table()) {
    const Word inv(word.rbegin(), word.rend());
    out[static_cast<std::size_t>(idx - 1)] = first.transformed(coh.pullback_on_t(inv));
  }
  return out;
}

/// The leaf sphere through a1 has stably trivial tangent bundle, so
/// <p1(E_a1), b1> = 0.
inline Equation leaf_sphere_constraint(const Cohomology &coh) {
  LinearForm f{};
  for (std::size_t i = 0; i < 4; ++i)
    f[i] = coh.pairing(basis_class(Basis::t, i), basis_hom(0));
  return {f, "<p1(E_a1), b1> = 0"};
}

/// Each t-coefficient of the total sum of the classes vanishes.
inline std::vector<Equation> sum_zero_constraint(std::span<const UnknownVector> classes) {
  const UnknownVector s = sum(classes);
  std::vector<Equation> eqs;
  for (std::size_t i = 0; i < 4; ++i)
    eqs.push_back({s.coef[i], "coefficient of t" + std::to_string(i + 1) + " in p1(TM)"});
  return eqs;
}

/// Keeps a maximal independent subset in reduced row echelon form.
inline std::vector<LinearForm> reduce_forms(const std::vector<LinearForm> &forms) {
  if (forms.empty())
    return {};
  Matrix m(forms.size(), 4);
  for (std::size_t r = 0; r < forms.size(); ++r)
    for (std::size_t c = 0; c < 4; ++c)
      m(r, c) = forms[r][c];
  const auto pivots = row_reduce(m);
  std::vector<LinearForm> out;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    LinearForm f;
    for (std::size_t c = 0; c < 4; ++c)
      f[c] = m(r, c);
    out.push_back(f);
  }
  return out;
}

/// The sum of the given classes must be symmetric in t1..t4. Invariance is
/// imposed under the transpositions (t1 t2), (t2 t3), (t3 t4), which generate
/// the symmetric group; the resulting equations are returned reduced.
inline std::vector<Equation> symmetry_constraint(std::span<const UnknownVector> classes) {
  const UnknownVector s = sum(classes);
  std::vector<LinearForm> raw;
  for (int i = 0; i < 3; ++i) {
    SignedPerm swap;
    std::swap(swap.target[static_cast<std::size_t>(i)], swap.target[static_cast<std::size_t>(i + 1)]);
    const UnknownVector diff = s - s.transformed(swap);
    for (const auto &f : diff.coef)
      if (!is_zero(f))
        raw.push_back(f);
  }
  std::vector<Equation> eqs;
  for (const auto &f : reduce_forms(raw))
    eqs.push_back({f, "pullback of p1(TM_b) symmetric in t1..t4"});
  return eqs;
}

// ---------------------------------------------------------------------------
// Printed reference tables, in unknowns k (= k1 = k2), k3, k4.

namespace detail {
inline UnknownVector row(std::array<std::pair<int, int>, 4> terms) {
  // pair (sign, unknown index 0..3) per t_i; index 0 means k
  UnknownVector v;
  for (std::size_t i = 0; i < 4; ++i)
    v.coef[i] = Rational(terms[i].first) * unknown(static_cast<std::size_t>(terms[i].second));
  return v;
}
} // namespace detail

/// The twelve classes at k1 = k2 = k, as listed for a1..a12.
inline const std::array<UnknownVector, 12> &reference_orbit_table() {
  using detail::row;
  constexpr int K = 0, K3 = 2, K4 = 3;
  static const std::array<UnknownVector, 12> t{
      row({{{1, K}, {1, K}, {1, K3}, {1, K4}}}),
      row({{{1, K3}, {1, K}, {1, K}, {1, K4}}}),
      row({{{1, K3}, {1, K4}, {1, K}, {1, K}}}),
      row({{{1, K}, {1, K3}, {1, K}, {1, K4}}}),
      row({{{1, K3}, {1, K}, {1, K4}, {1, K}}}),
      row({{{1, K}, {1, K3}, {1, K4}, {1, K}}}),
      row({{{1, K}, {-1, K}, {1, K3}, {-1, K4}}}),
      row({{{1, K3}, {1, K}, {-1, K}, {-1, K4}}}),
      row({{{1, K3}, {-1, K4}, {1, K}, {-1, K}}}),
      row({{{1, K}, {1, K3}, {-1, K}, {-1, K4}}}),
      row({{{1, K3}, {1, K}, {-1, K4}, {-1, K}}}),
      row({{{1, K}, {1, K3}, {-1, K4}, {-1, K}}}),
  };
  return t;
}

/// Classes for a7..a12 after k3 = -k.
inline const std::array<UnknownVector, 6> &reference_reduced_table() {
  using detail::row;
  constexpr int K = 0, K4 = 3;
  static const std::array<UnknownVector, 6> t{
      row({{{1, K}, {-1, K}, {-1, K}, {-1, K4}}}),
      row({{{-1, K}, {1, K}, {-1, K}, {-1, K4}}}),
      row({{{-1, K}, {-1, K4}, {1, K}, {-1, K}}}),
      row({{{1, K}, {-1, K}, {-1, K}, {-1, K4}}}),
      row({{{-1, K}, {1, K}, {-1, K4}, {-1, K}}}),
      row({{{1, K}, {-1, K}, {-1, K4}, {-1, K}}}),
  };
  return t;
}

// ---------------------------------------------------------------------------
// Solving.

struct SolveOptions {
  bool leaf_sphere = true;
  bool sum_zero = true;
  bool symmetry = true;
};

struct Solution {
  std::array<UnknownVector, 12> classes;         // generic orbit classes
  std::array<UnknownVector, 12> reduced_classes; // after k2 := k1
  std::vector<Equation> equations;
  std::vector<std::vector<Rational>> basis; // nullspace over (k1, k2, k3, k4)

  [[nodiscard]] std::size_t dimension() const { return basis.size(); }
};

/// Assembles the enabled constraint families and solves them exactly. Later
/// families are derived from the classes with the earlier substitutions
/// (k2 := k1, then k3 := -k1) applied.
inline Solution solve(const Cohomology &coh, const SolveOptions &opt = {}) {
  Solution sol;
  sol.classes = orbit_classes(coh, UnknownVector::generic());
  std::array<UnknownVector, 12> work = sol.classes;
  for (std::size_t i = 0; i < 12; ++i)
    sol.reduced_classes[i] = impose_leaf_sphere(sol.classes[i]);

  if (opt.leaf_sphere) {
    sol.equations.push_back(leaf_sphere_constraint(coh));
    work = sol.reduced_classes;
  }
  if (opt.sum_zero) {
    for (auto &e : sum_zero_constraint(work))
      if (!is_zero(e.lhs))
        sol.equations.push_back(std::move(e));
    for (auto &c : work)
      c = impose_sum_zero(c);
  }
  if (opt.symmetry) {
    for (auto &e : symmetry_constraint(std::span<const UnknownVector>(work).subspan(6)))
      sol.equations.push_back(std::move(e));
  }

  Matrix m(sol.equations.size(), 4);
  for (std::size_t r = 0; r < sol.equations.size(); ++r)
    for (std::size_t c = 0; c < 4; ++c)
      m(r, c) = sol.equations[r].lhs[c];
  sol.basis = nullspace(m);
  // scale each basis vector so its first nonzero entry is 1
  for (auto &v : sol.basis) {
    auto it = std::find_if(v.begin(), v.end(), [](const Rational &x) { return !x.is_zero(); });
    const Rational lead = *it;
    for (auto &x : v)
      x /= lead;
  }
  return sol;
}

// ---------------------------------------------------------------------------
// The rank-4 bundle E_a1 in integral coordinates.

/// constant + k_coeff * k for an integer unknown k.
struct AffineK {
  Rational constant;
  Rational k_coeff;

  friend bool operator==(const AffineK &, const AffineK &) = default;
  [[nodiscard]] Rational at(const Rational &k) const { return constant + k_coeff * k; }

  [[nodiscard]] std::string str() const {
    if (k_coeff.is_zero())
      return constant.str();
    std::string s;
    if (k_coeff == Rational(1))
      s = "k";
    else if (k_coeff == Rational(-1))
      s = "-k";
    else
      s = k_coeff.str() + "k";
    if (constant.is_zero())
      return s;
    return constant < Rational(0) ? s + " - " + (-constant).str() : s + " + " + constant.str();
  }
};

/// A degree-m class in the ω-basis with k-affine coordinates.
struct KClass {
  std::array<AffineK, 4> coords{};

  [[nodiscard]] CohClass at(const Rational &k) const {
    CohClass c{Basis::omega, {}};
    for (std::size_t p = 0; p < 4; ++p)
      c.coords[p] = coords[p].at(k);
    return c;
  }

  [[nodiscard]] std::string str() const {
    Vec4 kpart{0, 0, 0, 0}, cpart{0, 0, 0, 0};
    for (std::size_t p = 0; p < 4; ++p) {
      kpart[p] = coords[p].k_coeff;
      cpart[p] = coords[p].constant;
    }
    const bool has_k = std::any_of(kpart.begin(), kpart.end(), [](auto &x) { return !x.is_zero(); });
    const bool has_c = std::any_of(cpart.begin(), cpart.end(), [](auto &x) { return !x.is_zero(); });
    if (!has_k)
      return render_linear(cpart, "ω", Basis::omega);
    // factor the content out of the k-part: 2k(ω2 - ω9)
    std::int64_t g = 0;
    std::int64_t l = 1;
    for (const auto &x : kpart)
      if (!x.is_zero()) {
        g = std::gcd(g, x.num());
        l = std::lcm(l, x.den());
      }
    const Rational content(g, l);
    Vec4 prim{0, 0, 0, 0};
    for (std::size_t p = 0; p < 4; ++p)
      prim[p] = kpart[p] / content;
    std::string s = (content == Rational(1) ? "" : content.str()) + "k(" +
                    render_linear(prim, "ω", Basis::omega) + ")";
    if (has_c)
      s += " + " + render_linear(cpart, "ω", Basis::omega);
    return s;
  }
};

struct BundleClasses {
  CohClass euler;        // e(E_a1) in the ω-basis
  KClass p1;             // p1(E_a1) in the ω-basis, linear in k
  Rational content;      // gcd of the ω-coefficients of p1 at k = 1
  bool k_integral = false;
};

/// Euler and first Pontryagin classes of E_a1. Requires a one-dimensional
/// solution space. The integrality flag records that p1 integral and even
/// forces k to be an integer given the content of its ω-coordinates.
inline BundleClasses lemma8_classes(const Cohomology &coh, const Solution &sol) {
  if (sol.dimension() != 1)
    throw std::domain_error("expected a one-dimensional solution space, got dimension " +
                            std::to_string(sol.dimension()));
  BundleClasses out;
  out.euler = coh.euler_class_d(1);
  CohClass t{Basis::t, {}};
  for (std::size_t i = 0; i < 4; ++i)
    t.coords[i] = sol.basis[0][i];
  const CohClass w = coh.to_omega(t);
  std::int64_t g = 0;
  std::int64_t l = 1;
  for (std::size_t p = 0; p < 4; ++p) {
    out.p1.coords[p] = {0, w.coords[p]};
    g = std::gcd(g, w.coords[p].num());
    l = std::lcm(l, w.coords[p].den());
  }
  out.content = Rational(g, l);
  // content * k must lie in 2Z; that pins k to Z exactly when content == 2
  out.k_integral = out.content == Rational(2);
  return out;
}

} // namespace isod4
