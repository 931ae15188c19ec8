#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace isod4 {

/// Rank-4 oriented bundle over S^4, identified with the pair
/// (a, b) = (<e, [S^4]>, <p1, [S^4]>). The pair determines the bundle, and
/// bundle sum corresponds to componentwise addition.
struct SphereBundleClass {
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend bool operator==(const SphereBundleClass &, const SphereBundleClass &) = default;
  friend SphereBundleClass operator+(SphereBundleClass x, SphereBundleClass y) {
    return {x.a + y.a, x.b + y.b};
  }
  friend SphereBundleClass operator-(SphereBundleClass x) { return {-x.a, -x.b}; }
  friend SphereBundleClass operator-(SphereBundleClass x, SphereBundleClass y) { return x + (-y); }
  friend SphereBundleClass operator*(std::int64_t n, SphereBundleClass x) {
    return {n * x.a, n * x.b};
  }

  [[nodiscard]] std::string str() const {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  }
};

/// Rank-5 bundle over S^4, identified with its first Pontryagin number.
struct StableBundleClass {
  std::int64_t p1 = 0;
  friend bool operator==(const StableBundleClass &, const StableBundleClass &) = default;
};

/// Tangent bundle of S^4.
inline constexpr SphereBundleClass tau() { return {2, 0}; }
/// Underlying real bundle of the quaternionic line bundle over HP^1.
inline constexpr SphereBundleClass gamma() { return {1, -2}; }
inline constexpr SphereBundleClass trivial_bundle() { return {0, 0}; }

inline SphereBundleClass add(SphereBundleClass x, SphereBundleClass y) { return x + y; }
inline SphereBundleClass neg(SphereBundleClass x) { return -x; }

inline std::int64_t mod(std::int64_t x, std::int64_t m) {
  const std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

/// g(a, b) = (2a - b) mod 4.
inline std::int64_t obstruction(SphereBundleClass x) { return mod(2 * x.a - x.b, 4); }

/// A pair is realised by a bundle iff 2a - b = 0 mod 4.
inline bool is_realizable(SphereBundleClass x) { return obstruction(x) == 0; }

/// Writes x = n_tau * tau + n_gamma * gamma.
inline std::pair<std::int64_t, std::int64_t> decompose(SphereBundleClass x) {
  if (!is_realizable(x))
    throw std::domain_error("not a realizable class: " + x.str());
  const std::int64_t n_gamma = -x.b / 2;
  const std::int64_t n_tau = (2 * x.a + x.b) / 4;
  return {n_tau, n_gamma};
}

/// Whitney sum with a trivial line bundle; only p1 survives.
inline StableBundleClass stabilize(SphereBundleClass x) {
  if (mod(x.b, 2) != 0)
    throw std::domain_error("malformed class (odd p1): " + x.str());
  if (!is_realizable(x))
    throw std::domain_error("not a realizable class: " + x.str());
  return {x.b};
}

struct ExactSequenceCheck {
  std::int64_t window = 0;
  std::size_t realizable_points = 0;
  std::vector<SphereBundleClass> kernel; // realizable classes with stabilize = 0
  std::vector<std::int64_t> image;       // distinct p1 values hit, ascending
  bool kernel_is_tau_multiples = false;
  bool image_is_even_integers = false;
  bool closed_under_group_ops = false;
  bool index_four = false;
  bool f_injective = false;

  [[nodiscard]] bool passed() const {
    return kernel_is_tau_multiples && image_is_even_integers && closed_under_group_ops &&
           index_four && f_injective;
  }
};

/// Exhaustive scan of the window |a|, |b| <= n.
///  - the kernel of stabilization is exactly the multiples of tau,
///  - its image is exactly the even integers in [-n, n],
///  - realizable pairs are closed under addition and negation,
///  - each 4x4 residue block holds exactly four realizable pairs (index 4),
///  - f is injective (distinct classes have distinct pairs).
inline ExactSequenceCheck verify_exact_sequence(std::int64_t n = 20) {
  if (n < 4)
    throw std::invalid_argument("window must be at least 4");
  ExactSequenceCheck out;
  out.window = n;
  std::vector<SphereBundleClass> realizable;
  std::vector<bool> hit(static_cast<std::size_t>(2 * n + 1), false);
  bool kernel_ok = true;
  for (std::int64_t a = -n; a <= n; ++a)
    for (std::int64_t b = -n; b <= n; ++b) {
      const SphereBundleClass x{a, b};
      if (!is_realizable(x))
        continue;
      realizable.push_back(x);
      const auto s = stabilize(x);
      hit[static_cast<std::size_t>(s.p1 + n)] = true;
      if (s.p1 == 0) {
        out.kernel.push_back(x);
        const auto [nt, ng] = decompose(x);
        kernel_ok = kernel_ok && ng == 0 && nt * tau() == x;
      }
    }
  out.realizable_points = realizable.size();
  // every (2j, 0) in the window must appear in the kernel
  std::size_t expected_kernel = 0;
  for (std::int64_t a = -n; a <= n; ++a)
    expected_kernel += mod(a, 2) == 0 ? 1 : 0;
  out.kernel_is_tau_multiples = kernel_ok && out.kernel.size() == expected_kernel;

  bool image_ok = true;
  for (std::int64_t p = -n; p <= n; ++p) {
    const bool h = hit[static_cast<std::size_t>(p + n)];
    if (h)
      out.image.push_back(p);
    image_ok = image_ok && (h == (mod(p, 2) == 0));
  }
  out.image_is_even_integers = image_ok;

  bool closed = true;
  for (const auto &x : realizable) {
    closed = closed && is_realizable(-x);
    for (const auto &y : realizable)
      closed = closed && is_realizable(x + y);
  }
  out.closed_under_group_ops = closed;

  bool index_ok = true;
  for (std::int64_t a0 = -n; a0 + 3 <= n; ++a0)
    for (std::int64_t b0 = -n; b0 + 3 <= n; ++b0) {
      int count = 0;
      for (std::int64_t da = 0; da < 4; ++da)
        for (std::int64_t db = 0; db < 4; ++db)
          count += is_realizable({a0 + da, b0 + db}) ? 1 : 0;
      index_ok = index_ok && count == 4;
    }
  out.index_four = index_ok;

  // classes are stored as their pairs, so f is the identity on the model;
  // check that decomposition separates them as well
  std::set<std::pair<std::int64_t, std::int64_t>> coords;
  for (const auto &x : realizable)
    coords.insert(decompose(x));
  out.f_injective = coords.size() == realizable.size();
  return out;
}

} // namespace isod4
