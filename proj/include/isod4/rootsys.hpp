#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <deque>
#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "rational.hpp"

namespace isod4 {

// ---------------------------------------------------------------------------
// Vectors in the 4-dimensional normal plane, coordinates in the orthonormal
// basis e1..e4.

struct RootVector {
  Vec4 coords{0, 0, 0, 0};

  friend bool operator==(const RootVector &, const RootVector &) = default;
  friend auto operator<=>(const RootVector &a, const RootVector &b) {
    return std::lexicographical_compare_three_way(a.coords.begin(), a.coords.end(),
                                                  b.coords.begin(), b.coords.end());
  }

  friend RootVector operator+(const RootVector &a, const RootVector &b) {
    RootVector r;
    for (std::size_t i = 0; i < 4; ++i)
      r.coords[i] = a.coords[i] + b.coords[i];
    return r;
  }
  friend RootVector operator-(const RootVector &a, const RootVector &b) {
    RootVector r;
    for (std::size_t i = 0; i < 4; ++i)
      r.coords[i] = a.coords[i] - b.coords[i];
    return r;
  }
  friend RootVector operator*(const Rational &s, const RootVector &v) {
    RootVector r;
    for (std::size_t i = 0; i < 4; ++i)
      r.coords[i] = s * v.coords[i];
    return r;
  }
  RootVector operator-() const { return Rational(-1) * *this; }

  /// Tuple form, e.g. "(1,-1,0,0)".
  [[nodiscard]] std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < 4; ++i)
      s += (i ? "," : "") + coords[i].str();
    return s + ")";
  }
};

inline Rational inner(const RootVector &u, const RootVector &v) {
  Rational s = 0;
  for (std::size_t i = 0; i < 4; ++i)
    s += u.coords[i] * v.coords[i];
  return s;
}

// ---------------------------------------------------------------------------
// Signed permutations of four coordinates.

/// Linear map sending basis vector i to sign[i] * (basis vector target[i]).
/// Indices are 0-based.
struct SignedPerm {
  std::array<int, 4> target{0, 1, 2, 3};
  std::array<int, 4> sign{1, 1, 1, 1};

  static SignedPerm identity() { return {}; }

  friend bool operator==(const SignedPerm &, const SignedPerm &) = default;
  friend auto operator<=>(const SignedPerm &, const SignedPerm &) = default;

  /// (a * b)(x) = a(b(x)).
  friend SignedPerm operator*(const SignedPerm &a, const SignedPerm &b) {
    SignedPerm c;
    for (std::size_t i = 0; i < 4; ++i) {
      const auto j = static_cast<std::size_t>(b.target[i]);
      c.target[i] = a.target[j];
      c.sign[i] = b.sign[i] * a.sign[j];
    }
    return c;
  }

  [[nodiscard]] SignedPerm inverse() const {
    SignedPerm inv;
    for (std::size_t i = 0; i < 4; ++i) {
      const auto j = static_cast<std::size_t>(target[i]);
      inv.target[j] = static_cast<int>(i);
      inv.sign[j] = sign[i];
    }
    return inv;
  }

  [[nodiscard]] int sign_product() const { return sign[0] * sign[1] * sign[2] * sign[3]; }

  [[nodiscard]] bool is_valid() const {
    std::array<bool, 4> hit{};
    for (std::size_t i = 0; i < 4; ++i) {
      if (target[i] < 0 || target[i] > 3 || hit[static_cast<std::size_t>(target[i])])
        return false;
      if (sign[i] != 1 && sign[i] != -1)
        return false;
      hit[static_cast<std::size_t>(target[i])] = true;
    }
    return true;
  }

  [[nodiscard]] Vec4 apply(const Vec4 &v) const {
    Vec4 r{0, 0, 0, 0};
    for (std::size_t i = 0; i < 4; ++i)
      r[static_cast<std::size_t>(target[i])] = Rational(sign[i]) * v[i];
    return r;
  }

  /// Matrix acting on column coordinate vectors.
  [[nodiscard]] Matrix to_matrix() const {
    Matrix m(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      m(static_cast<std::size_t>(target[i]), i) = sign[i];
    return m;
  }

  /// Inverse of to_matrix(); throws if the matrix is not a signed permutation.
  static SignedPerm from_matrix(const Matrix &m) {
    if (m.rows() != 4 || m.cols() != 4)
      throw std::invalid_argument("SignedPerm::from_matrix: expected 4x4");
    SignedPerm p;
    for (std::size_t col = 0; col < 4; ++col) {
      int found = -1;
      for (std::size_t row = 0; row < 4; ++row) {
        const Rational &x = m(row, col);
        if (x.is_zero())
          continue;
        if (found >= 0 || (x != Rational(1) && x != Rational(-1)))
          throw std::domain_error("not a signed permutation matrix: " + m.str());
        found = static_cast<int>(row);
        p.sign[col] = x == Rational(1) ? 1 : -1;
      }
      if (found < 0)
        throw std::domain_error("not a signed permutation matrix: " + m.str());
      p.target[col] = found;
    }
    if (!p.is_valid())
      throw std::domain_error("not a signed permutation matrix: " + m.str());
    return p;
  }

  /// Image list in basis-symbol form, e.g. "{t2,t1,t3,t4}" for symbol "t".
  [[nodiscard]] std::string str(const std::string &symbol = "e") const {
    std::string s = "{";
    for (std::size_t i = 0; i < 4; ++i) {
      s += i ? "," : "";
      s += sign[i] < 0 ? "-" : "";
      s += symbol + std::to_string(target[i] + 1);
    }
    return s + "}";
  }
};

/// Generator labels follow the simple-root indices: 1, 2, 3, 9.
using Word = std::vector<int>;

inline std::string word_str(const Word &w) {
  if (w.empty())
    return "1";
  std::string s;
  for (int g : w)
    s += "s" + std::to_string(g);
  return s;
}

/// A group element together with a word that produces it. The word
/// w = [g1, g2, ..., gr] denotes the product s_g1 s_g2 ... s_gr, which acts
/// right to left (s_gr first).
struct WeylElement {
  SignedPerm action;
  Word word;

  [[nodiscard]] RootVector apply(const RootVector &v) const { return {action.apply(v.coords)}; }
};

// ---------------------------------------------------------------------------
// Root system of type D4.

struct FoliationSpec {
  std::string diagram;
  int multiplicity = 0;
  int dim_M = 0;
  int ambient_n = 0;
};

inline constexpr std::array<int, 4> kSimpleLabels{1, 2, 3, 9};

/// Position 0..3 of a simple label in the Cartan matrix, or throws.
inline std::size_t simple_position(int label) {
  for (std::size_t p = 0; p < kSimpleLabels.size(); ++p)
    if (kSimpleLabels[p] == label)
      return p;
  throw std::invalid_argument("not a simple root index: " + std::to_string(label));
}

class RootSystem {
public:
  RootSystem(std::vector<RootVector> positive, int multiplicity)
      : roots_(std::move(positive)), multiplicity_(multiplicity) {}

  [[nodiscard]] std::span<const RootVector> positive_roots() const { return roots_; }
  [[nodiscard]] std::size_t size() const { return roots_.size(); }
  [[nodiscard]] int multiplicity() const { return multiplicity_; }
  [[nodiscard]] static constexpr std::span<const int> simple_indices() { return kSimpleLabels; }

  /// Root by its 1-based index.
  [[nodiscard]] const RootVector &root(int i) const {
    check_index(i);
    return roots_[static_cast<std::size_t>(i - 1)];
  }

  /// 2 (a_i, a_j) / (a_j, a_j).
  [[nodiscard]] Rational cartan_number(int i, int j) const {
    const auto &ai = root(i);
    const auto &aj = root(j);
    return Rational(2) * inner(ai, aj) / inner(aj, aj);
  }

  /// Rows and columns ordered by simple labels (1, 2, 3, 9).
  [[nodiscard]] Matrix simple_cartan_matrix() const {
    Matrix c(4, 4);
    for (std::size_t p = 0; p < 4; ++p)
      for (std::size_t q = 0; q < 4; ++q)
        c(p, q) = cartan_number(kSimpleLabels[p], kSimpleLabels[q]);
    return c;
  }

  /// The orthogonal reflection in the hyperplane normal to root i, as a
  /// signed permutation (no word attached).
  [[nodiscard]] SignedPerm reflection_action(int i) const {
    const RootVector &a = root(i);
    const Rational scale = Rational(2) / inner(a, a);
    Matrix m(4, 4);
    for (std::size_t j = 0; j < 4; ++j) {
      RootVector e;
      e.coords[j] = 1;
      const RootVector img = e - (scale * inner(e, a)) * a;
      for (std::size_t r = 0; r < 4; ++r)
        m(r, j) = img.coords[r];
    }
    return SignedPerm::from_matrix(m);
  }

  /// Simple generator with its one-letter word.
  [[nodiscard]] WeylElement generator(int label) const {
    simple_position(label);
    return {reflection_action(label), Word{label}};
  }

  [[nodiscard]] std::vector<WeylElement> generators() const {
    std::vector<WeylElement> gens;
    for (int l : kSimpleLabels)
      gens.push_back(generator(l));
    return gens;
  }

  /// Evaluates a word in the simple generators.
  [[nodiscard]] WeylElement evaluate(const Word &w) const {
    SignedPerm p;
    for (int g : w)
      p = p * generator(g).action;
    return {p, w};
  }

private:
  void check_index(int i) const {
    if (i < 1 || static_cast<std::size_t>(i) > roots_.size())
      throw std::out_of_range("root index out of range: " + std::to_string(i));
  }

  std::vector<RootVector> roots_;
  int multiplicity_;
};

/// Positive roots of D4 in the fixed order a1..a12, simple roots a1, a2, a3, a9.
inline RootSystem build_d4(int multiplicity) {
  if (multiplicity < 1)
    throw std::invalid_argument("invalid multiplicity: " + std::to_string(multiplicity));
  auto e = [](int i, int si, int j, int sj) {
    RootVector v;
    v.coords[static_cast<std::size_t>(i - 1)] = si;
    v.coords[static_cast<std::size_t>(j - 1)] = sj;
    return v;
  };
  std::vector<RootVector> roots{
      e(1, 1, 2, -1), e(2, 1, 3, -1), e(3, 1, 4, -1), // a1  a2  a3
      e(1, 1, 3, -1), e(2, 1, 4, -1), e(1, 1, 4, -1), // a4  a5  a6
      e(2, 1, 1, 1),  e(3, 1, 2, 1),  e(4, 1, 3, 1),  // a7  a8  a9
      e(3, 1, 1, 1),  e(4, 1, 2, 1),  e(4, 1, 1, 1),  // a10 a11 a12
  };
  return RootSystem(std::move(roots), multiplicity);
}

inline FoliationSpec ambient_dims(int multiplicity) {
  if (multiplicity < 1)
    throw std::invalid_argument("invalid multiplicity: " + std::to_string(multiplicity));
  return {"D4", multiplicity, 12 * multiplicity, 12 * multiplicity + 4};
}

// ---------------------------------------------------------------------------
// Finite groups of signed permutations.

/// Closure of a generating set. Elements are discovered breadth first with
/// generators tried in ascending label order and appended on the right, so
/// the stored word of each element is its shortlex-least word.
class WeylGroup {
public:
  explicit WeylGroup(std::vector<WeylElement> generators) {
    std::sort(generators.begin(), generators.end(),
              [](const WeylElement &a, const WeylElement &b) { return a.word < b.word; });
    add({SignedPerm::identity(), {}});
    for (std::size_t head = 0; head < elements_.size(); ++head) {
      for (const auto &g : generators) {
        const WeylElement &cur = elements_[head];
        SignedPerm next = cur.action * g.action;
        if (index_.contains(next))
          continue;
        Word w = cur.word;
        w.insert(w.end(), g.word.begin(), g.word.end());
        add({next, std::move(w)});
      }
    }
  }

  [[nodiscard]] std::size_t order() const { return elements_.size(); }
  [[nodiscard]] std::span<const WeylElement> elements() const & { return elements_; }
  std::span<const WeylElement> elements() const && = delete;
  [[nodiscard]] bool contains(const SignedPerm &p) const { return index_.contains(p); }

  [[nodiscard]] const WeylElement *find(const SignedPerm &p) const {
    auto it = index_.find(p);
    return it == index_.end() ? nullptr : &elements_[it->second];
  }

private:
  void add(WeylElement e) {
    index_.emplace(e.action, elements_.size());
    elements_.push_back(std::move(e));
  }

  std::vector<WeylElement> elements_;
  std::map<SignedPerm, std::size_t> index_;
};

inline WeylGroup enumerate_group(std::vector<WeylElement> generators) {
  return WeylGroup(std::move(generators));
}

inline WeylGroup weyl_group(const RootSystem &rs) { return WeylGroup(rs.generators()); }

/// Subgroup fixing b = e1+e2+e3+e4, generated by s1, s2, s3.
inline WeylGroup stabilizer_subgroup(const RootSystem &rs) {
  return WeylGroup({rs.generator(1), rs.generator(2), rs.generator(3)});
}

/// Reflection in root i with its shortlex word over the simple generators.
inline WeylElement reflection(const RootSystem &rs, int i) {
  const SignedPerm p = rs.reflection_action(i);
  const WeylGroup w = weyl_group(rs);
  const WeylElement *e = w.find(p);
  if (!e)
    throw std::logic_error("reflection not in the Weyl group");
  return *e;
}

inline std::set<RootVector> orbit(const WeylGroup &group, const RootVector &v) {
  std::set<RootVector> out;
  for (const auto &g : group.elements())
    out.insert(g.apply(v));
  return out;
}

// ---------------------------------------------------------------------------
// Reference data as printed, used to cross-check the computed values.

inline Matrix reference_cartan_matrix() {
  return Matrix{{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}};
}

/// Generator actions on e1..e4 keyed by label 1, 2, 3, 9 (in that order).
inline std::array<SignedPerm, 4> reference_generator_actions() {
  return {SignedPerm{{1, 0, 2, 3}, {1, 1, 1, 1}}, SignedPerm{{0, 2, 1, 3}, {1, 1, 1, 1}},
          SignedPerm{{0, 1, 3, 2}, {1, 1, 1, 1}}, SignedPerm{{0, 1, 3, 2}, {1, 1, -1, -1}}};
}

// ---------------------------------------------------------------------------
// Word identities expressing each positive root as w(a1).

struct WordIdentity {
  int root_index;
  Word word;
};

/// Words with a_i = w(a1), w read as a product acting right to left.
inline const std::vector<WordIdentity> &word_table() {
  static const std::vector<WordIdentity> table{
      {2, {1, 2}},        {3, {2, 1, 3, 2}},  {4, {2}},
      {5, {1, 3, 2}},     {6, {3, 2}},        {7, {2, 3, 9, 2}},
      {8, {1, 3, 9, 2}},  {9, {2, 1, 9, 2}},  {10, {3, 9, 2}},
      {11, {1, 9, 2}},    {12, {9, 2}},
  };
  return table;
}

struct WordCheckEntry {
  int root_index;
  Word word;
  RootVector computed;
  bool passed;
};

struct WordTableCheck {
  std::vector<WordCheckEntry> entries;
  [[nodiscard]] bool all_passed() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](const WordCheckEntry &e) { return e.passed; });
  }
};

inline WordTableCheck verify_word_table(const RootSystem &rs) {
  WordTableCheck out;
  for (const auto &[idx, word] : word_table()) {
    const RootVector img = rs.evaluate(word).apply(rs.root(1));
    out.entries.push_back({idx, word, img, img == rs.root(idx)});
  }
  return out;
}

} // namespace isod4
