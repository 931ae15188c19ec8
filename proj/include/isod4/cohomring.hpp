#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "rootsys.hpp"

namespace isod4 {

/// Bases of degree-m cohomology. `omega` is dual to the leaf-sphere classes
/// b1, b2, b3, b9; `d` are the Euler classes d1, d2, d3, d9; `t` is the
/// rational basis in which the Weyl group acts by signed permutations.
enum class Basis { omega, t, d };

inline std::string basis_symbol(Basis b) {
  switch (b) {
  case Basis::omega: return "ω";
  case Basis::t: return "t";
  case Basis::d: return "d";
  }
  return "?";
}

/// Index printed for coordinate position p in basis b.
inline int basis_label(Basis b, std::size_t p) {
  return b == Basis::t ? static_cast<int>(p) + 1 : kSimpleLabels[p];
}

/// Renders sum_p coords[p] * symbol_label(p), e.g. "2ω1 - ω2".
inline std::string render_linear(const Vec4 &coords, const std::string &symbol,
                                 Basis labels) {
  std::string s;
  for (std::size_t p = 0; p < 4; ++p) {
    const Rational &c = coords[p];
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
    s += symbol + std::to_string(basis_label(labels, p));
  }
  return s.empty() ? "0" : s;
}

struct CohClass {
  Basis basis = Basis::omega;
  Vec4 coords{0, 0, 0, 0};

  friend bool operator==(const CohClass &, const CohClass &) = default;
  [[nodiscard]] std::string str() const { return render_linear(coords, basis_symbol(basis), basis); }
};

/// Homology class over b1, b2, b3, b9.
struct HomClass {
  Vec4 coords{0, 0, 0, 0};

  friend bool operator==(const HomClass &, const HomClass &) = default;
  [[nodiscard]] std::string str() const { return render_linear(coords, "b", Basis::omega); }
};

inline CohClass basis_class(Basis b, std::size_t p) {
  CohClass c{b, {}};
  c.coords[p] = 1;
  return c;
}

inline HomClass basis_hom(std::size_t p) {
  HomClass h;
  h.coords[p] = 1;
  return h;
}

/// Rows express t1..t4 in terms of ω1, ω2, ω3, ω9. This is the unique
/// basis (with t1 = ω1) on which the simple reflections act by the signed
/// permutations of the normal plane.
inline Matrix t_in_omega_matrix() {
  return Matrix{{1, 0, 0, 0}, {-1, 1, 0, 0}, {0, -1, 1, 1}, {0, 0, -1, 1}};
}

/// Rows express ω1, ω2, ω3, ω9 in terms of t1..t4.
inline Matrix omega_in_t_matrix() {
  const Rational h(1, 2);
  return Matrix{{1, 0, 0, 0}, {1, 1, 0, 0}, {h, h, h, -h}, {h, h, h, h}};
}

/// The change of basis with ω3 = t1 + t2 + t3 (a B4 weight) in place of the
/// D4 one. Kept so the report can show it is not W-equivariant.
inline Matrix printed_t_in_omega_matrix() {
  return Matrix{{1, 0, 0, 0}, {-1, 1, 0, 0}, {0, -1, 1, 0}, {0, 0, -1, 2}};
}

inline Matrix printed_omega_in_t_matrix() {
  const Rational h(1, 2);
  return Matrix{{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 1, 1, 0}, {h, h, h, h}};
}

/// Degree-m cohomology and homology of the D4 isoparametric submanifold,
/// with the Weyl group action induced on both.
///
/// The homology action uses s_i*(b_j) = b_j - beta_ij b_i. Its dual on the
/// ω-basis is s_k^*(ω_k) = ω_k - sum_j beta_kj ω_j and s_i^*(ω_k) = ω_k for
/// i != k. Conjugating by the t/ω change of basis turns each s_i^* into a
/// signed permutation of t1..t4.
class Cohomology {
public:
  explicit Cohomology(const RootSystem &rs) : cartan_(rs.simple_cartan_matrix()) {
    kronecker_ = Matrix(rs.size(), rs.size());
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (std::size_t j = 0; j < rs.size(); ++j)
        kronecker_(i, j) =
            rs.cartan_number(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
  }

  [[nodiscard]] const Matrix &cartan() const { return cartan_; }

  /// <d_i, b_j> for all positive roots, 1-based labels mapped to 0-based rows.
  [[nodiscard]] const Matrix &kronecker_matrix() const { return kronecker_; }

  /// Euler class d_i of a simple curvature distribution, in the ω-basis.
  [[nodiscard]] CohClass euler_class_d(int label) const {
    const std::size_t p = simple_position(label);
    CohClass c{Basis::omega, {}};
    for (std::size_t q = 0; q < 4; ++q)
      c.coords[q] = cartan_(p, q);
    return c;
  }

  [[nodiscard]] CohClass to_omega(const CohClass &c) const {
    switch (c.basis) {
    case Basis::omega: return c;
    case Basis::t: return {Basis::omega, matvec(t_in_omega_matrix().transpose(), c.coords)};
    case Basis::d: return {Basis::omega, matvec(cartan_.transpose(), c.coords)};
    }
    return c;
  }

  [[nodiscard]] CohClass convert(const CohClass &c, Basis target) const {
    const CohClass w = to_omega(c);
    switch (target) {
    case Basis::omega: return w;
    case Basis::t: return {Basis::t, matvec(omega_in_t_matrix().transpose(), w.coords)};
    case Basis::d: return {Basis::d, matvec(inverse(cartan_).transpose(), w.coords)};
    }
    return w;
  }

  /// Kronecker pairing, computed in the ω-basis where <ω_i, b_j> = δ_ij.
  [[nodiscard]] Rational pairing(const CohClass &c, const HomClass &h) const {
    const CohClass w = to_omega(c);
    Rational s = 0;
    for (std::size_t p = 0; p < 4; ++p)
      s += w.coords[p] * h.coords[p];
    return s;
  }

  [[nodiscard]] Matrix homology_action_matrix(int label) const {
    const std::size_t i = simple_position(label);
    Matrix m = Matrix::identity(4);
    for (std::size_t j = 0; j < 4; ++j)
      m(i, j) -= cartan_(i, j);
    return m;
  }

  [[nodiscard]] HomClass homology_action(int label, const HomClass &h) const {
    return {matvec(homology_action_matrix(label), h.coords)};
  }

  /// Matrix of s_i^* on ω-coordinate column vectors.
  [[nodiscard]] Matrix omega_action_matrix(int label) const {
    const std::size_t k = simple_position(label);
    Matrix m = Matrix::identity(4);
    // column k holds the coordinates of s_k^*(ω_k)
    for (std::size_t j = 0; j < 4; ++j)
      m(j, k) -= cartan_(k, j);
    return m;
  }

  [[nodiscard]] CohClass cohomology_action(int label, const CohClass &c) const {
    const CohClass w = to_omega(c);
    const CohClass img{Basis::omega, matvec(omega_action_matrix(label), w.coords)};
    return convert(img, c.basis);
  }

  /// s_i^* on t-coordinate column vectors.
  [[nodiscard]] Matrix t_action_matrix(int label) const {
    const Matrix to_w = t_in_omega_matrix().transpose();
    const Matrix to_t = omega_in_t_matrix().transpose();
    return to_t * omega_action_matrix(label) * to_w;
  }

  /// Simple labels whose action, conjugated into the basis given by the two
  /// matrices (same layout as t_in_omega_matrix / omega_in_t_matrix), is not
  /// a signed permutation.
  [[nodiscard]] std::vector<int> non_permuting_generators(const Matrix &t_in_omega,
                                                          const Matrix &omega_in_t) const {
    std::vector<int> bad;
    for (int g : kSimpleLabels) {
      const Matrix m = omega_in_t.transpose() * omega_action_matrix(g) * t_in_omega.transpose();
      try {
        SignedPerm::from_matrix(m);
      } catch (const std::domain_error &) {
        bad.push_back(g);
      }
    }
    return bad;
  }

  /// s_i^* as a signed permutation of t1..t4. Throws std::domain_error if the
  /// conjugated action is not a signed permutation.
  [[nodiscard]] SignedPerm action_on_t(int label) const {
    return SignedPerm::from_matrix(t_action_matrix(label));
  }

  /// Pullback of the element w = s_g1 ... s_gr, i.e. s_gr^* ∘ ... ∘ s_g1^*,
  /// as a signed permutation of the t_i.
  [[nodiscard]] SignedPerm pullback_on_t(const Word &w) const {
    SignedPerm p;
    for (int g : w)
      p = action_on_t(g) * p;
    return p;
  }

  [[nodiscard]] Polynomial act_on_polynomial(const Word &w, const Polynomial &p) const {
    return substitute(pullback_on_t(w), p);
  }

  [[nodiscard]] Polynomial act_on_polynomial(const WeylElement &w, const Polynomial &p) const {
    return act_on_polynomial(w.word, p);
  }

  /// Invariance under each listed generator; sufficient for the generated group.
  [[nodiscard]] bool is_invariant(const Polynomial &p, const std::vector<int> &labels) const {
    return std::all_of(labels.begin(), labels.end(), [&](int g) {
      return substitute(action_on_t(g), p) == p;
    });
  }

private:
  Matrix cartan_;
  Matrix kronecker_;
};

/// Generator actions on t1..t4 as printed, keyed by label 1, 2, 3, 9.
inline std::array<SignedPerm, 4> reference_t_actions() {
  return {SignedPerm{{1, 0, 2, 3}, {1, 1, 1, 1}}, SignedPerm{{0, 2, 1, 3}, {1, 1, 1, 1}},
          SignedPerm{{0, 1, 3, 2}, {1, 1, 1, 1}}, SignedPerm{{0, 1, 3, 2}, {1, 1, -1, -1}}};
}

inline bool is_symmetric(const Polynomial &p) {
  std::array<int, 4> perm{0, 1, 2, 3};
  do {
    SignedPerm s;
    s.target = perm;
    if (substitute(s, p) != p)
      return false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return true;
}

struct ThetaIdentity {
  int index;
  Polynomial difference; // theta_i minus its expression in the e_i
  [[nodiscard]] bool passed() const { return difference.is_zero(); }
};

/// theta_i expressed through e_1..e_4, for i = 1, 2, 3.
inline Polynomial theta_via_elementary(int i) {
  const auto e = [](int k) { return elementary_symmetric(k); };
  switch (i) {
  case 1: return e(1).pow(2) - Polynomial(2) * e(2);
  case 2: return e(2).pow(2) - Polynomial(2) * e(1) * e(3) + Polynomial(2) * e(4);
  case 3: return e(3).pow(2) - Polynomial(2) * e(2) * e(4);
  default: throw std::out_of_range("theta_via_elementary: index out of range");
  }
}

inline std::vector<ThetaIdentity> verify_theta_identities() {
  std::vector<ThetaIdentity> out;
  for (int i = 1; i <= 3; ++i)
    out.push_back({i, theta(i) - theta_via_elementary(i)});
  return out;
}

} // namespace isod4
