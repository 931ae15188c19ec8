#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cohomring.hpp"
#include "linalg.hpp"
#include "pontsolve.hpp"
#include "rational.hpp"
#include "rootsys.hpp"
#include "vect4.hpp"

namespace isod4 {

// ---------------------------------------------------------------------------
// Congruences in one integer unknown.

/// coefficient * k + constant = 0 (mod modulus).
struct CongruenceCondition {
  std::int64_t coefficient = 0;
  std::int64_t constant = 0;
  std::int64_t modulus = 1;

  [[nodiscard]] std::string str() const {
    AffineK f{Rational(constant), Rational(coefficient)};
    return f.str() + " ≡ 0 (mod " + std::to_string(modulus) + ")";
  }
};

/// Residues r in [0, modulus) that satisfy a condition, kept sorted.
struct ResidueSet {
  std::int64_t modulus = 1;
  std::vector<std::int64_t> residues;

  [[nodiscard]] bool empty() const { return residues.empty(); }
  [[nodiscard]] bool contains(std::int64_t k) const {
    return std::binary_search(residues.begin(), residues.end(), mod(k, modulus));
  }
  friend bool operator==(const ResidueSet &, const ResidueSet &) = default;

  /// Same set of integers over the smallest modulus that describes it.
  [[nodiscard]] ResidueSet reduced() const {
    if (residues.empty())
      return {1, {}};
    for (std::int64_t p = 1; p <= modulus; ++p) {
      if (modulus % p != 0)
        continue;
      bool periodic = true;
      for (std::int64_t r = 0; r < modulus && periodic; ++r)
        periodic = contains(r) == contains(r + p);
      if (!periodic)
        continue;
      ResidueSet out{p, {}};
      for (std::int64_t r = 0; r < p; ++r)
        if (contains(r))
          out.residues.push_back(r);
      return out;
    }
    return *this;
  }

  /// "k ≡ 1 (mod 2)", "k ≡ 0, 2 (mod 4)", "∅" or "all k".
  [[nodiscard]] std::string str() const {
    if (residues.empty())
      return "∅";
    if (modulus == 1)
      return "all k";
    std::string s = "k ≡ ";
    for (std::size_t i = 0; i < residues.size(); ++i)
      s += (i ? ", " : "") + std::to_string(residues[i]);
    return s + " (mod " + std::to_string(modulus) + ")";
  }
};

inline ResidueSet solve_congruence(const CongruenceCondition &c) {
  if (c.modulus <= 0)
    throw std::invalid_argument("congruence modulus must be positive");
  ResidueSet out{c.modulus, {}};
  for (std::int64_t r = 0; r < c.modulus; ++r)
    if (mod(c.coefficient * r + c.constant, c.modulus) == 0)
      out.residues.push_back(r);
  return out;
}

inline ResidueSet intersect(const ResidueSet &a, const ResidueSet &b) {
  const std::int64_t m = std::lcm(a.modulus, b.modulus);
  ResidueSet out{m, {}};
  for (std::int64_t r = 0; r < m; ++r)
    if (a.contains(r) && b.contains(r))
      out.residues.push_back(r);
  return out;
}

// ---------------------------------------------------------------------------
// Restriction to leaf spheres.

/// <c, b_j>: the ω_j-coordinate.
inline Rational restrict_class(const Cohomology &coh, const CohClass &c, int label) {
  return coh.to_omega(c).coords[simple_position(label)];
}

inline AffineK restrict_class(const KClass &c, int label) {
  return c.coords[simple_position(label)];
}

/// (Euler number, Pontryagin number) of the restricted bundle, affine in k.
struct KPair {
  AffineK a;
  AffineK b;
  [[nodiscard]] std::string str() const { return "(" + a.str() + "," + b.str() + ")"; }
};

/// 2a - b = 0 (mod 4), written as a congruence in k.
inline CongruenceCondition realizability_condition(const KPair &f) {
  const Rational c = Rational(2) * f.a.k_coeff - f.b.k_coeff;
  const Rational d = Rational(2) * f.a.constant - f.b.constant;
  return {c.to_integer(), d.to_integer(), 4};
}

// ---------------------------------------------------------------------------
// Verification report.

enum class CheckStatus { pass, fail };
enum class TheoremStatus { obstructed, not_obstructed, inconclusive, failed };

inline std::string_view to_string(CheckStatus s) { return s == CheckStatus::pass ? "pass" : "fail"; }

inline std::string_view to_string(TheoremStatus s) {
  switch (s) {
  case TheoremStatus::obstructed: return "OBSTRUCTED";
  case TheoremStatus::not_obstructed: return "NOT-OBSTRUCTED";
  case TheoremStatus::inconclusive: return "INCONCLUSIVE";
  case TheoremStatus::failed: return "FAILED";
  }
  return "?";
}

struct CheckRecord {
  std::string id;
  std::string ref;
  std::string statement;
  CheckStatus status = CheckStatus::fail;
  std::string detail;
};

struct TheoremSummary {
  TheoremStatus status = TheoremStatus::failed;
  std::string failing_check; // first failing id, if any
  std::string f_xi1;         // restriction to the leaf sphere S2
  std::string f_xi2;         // restriction to the leaf sphere S9
  std::string residues_xi1;
  std::string residues_xi2;
  std::string intersection;
};

struct VerificationReport {
  std::vector<CheckRecord> checks;
  std::vector<std::string> errata;
  std::vector<std::string> axioms;
  TheoremSummary theorem;

  [[nodiscard]] bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckRecord &c) { return c.status == CheckStatus::pass; });
  }
  [[nodiscard]] const CheckRecord *find(std::string_view id) const {
    auto it = std::find_if(checks.begin(), checks.end(), [&](const CheckRecord &c) { return c.id == id; });
    return it == checks.end() ? nullptr : &*it;
  }
};

/// Every check id the pipeline can emit, in report order.
inline constexpr std::array<std::string_view, 30> kCheckIds{
    "rootsys.roots",           "rootsys.cartan",           "rootsys.generators",
    "rootsys.stabilizer",      "rootsys.word-table",       "rootsys.group-order",
    "rootsys.orbit",           "rootsys.dimensions",       "cohomring.kronecker",
    "cohomring.euler-classes", "cohomring.basis-change",   "cohomring.homology-action",
    "cohomring.lemma4",        "cohomring.duality",        "cohomring.theta",
    "cohomring.invariants",    "pontsolve.orbit-table",    "pontsolve.leaf-sphere",
    "pontsolve.sum-zero",      "pontsolve.reduced-table",  "pontsolve.symmetry",
    "pontsolve.solve",         "pontsolve.bundle-classes", "vect4.generators",
    "vect4.decompose",         "vect4.exact-sequence",     "obstruct.restrictions",
    "obstruct.congruences",    "obstruct.each-satisfiable", "obstruct.contradiction",
};

inline bool is_known_check(std::string_view id) {
  return std::find(kCheckIds.begin(), kCheckIds.end(), id) != kCheckIds.end();
}

struct PipelineOptions {
  SolveOptions solve;
  bool window_checks = true;
  std::int64_t window = 20;

  [[nodiscard]] bool diagnostic() const {
    return !solve.leaf_sphere || !solve.sum_zero || !solve.symmetry;
  }
};

namespace detail {

class Recorder {
public:
  explicit Recorder(VerificationReport &r) : report_(r) {}

  bool add(std::string id, std::string ref, std::string statement, bool ok, std::string detail) {
    report_.checks.push_back({std::move(id), std::move(ref), std::move(statement),
                              ok ? CheckStatus::pass : CheckStatus::fail, std::move(detail)});
    return ok;
  }

private:
  VerificationReport &report_;
};

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline void check_root_system(const RootSystem &rs, Recorder &rec) {
  // roots
  {
    bool norms = true;
    for (const auto &a : rs.positive_roots())
      norms = norms && inner(a, a) == Rational(2);
    Matrix simple(4, 4);
    for (std::size_t p = 0; p < 4; ++p)
      for (std::size_t q = 0; q < 4; ++q)
        simple(q, p) = rs.root(kSimpleLabels[p]).coords[q];
    const bool independent = !determinant(simple).is_zero();
    bool nonneg = independent;
    if (independent) {
      const Matrix inv = inverse(simple);
      for (const auto &a : rs.positive_roots()) {
        const Vec4 c = matvec(inv, a.coords);
        for (const auto &x : c)
          nonneg = nonneg && x.is_integer() && x >= Rational(0);
      }
    }
    const bool first = rs.root(1) == RootVector{{1, -1, 0, 0}};
    rec.add("rootsys.roots", "§2", "12 positive roots of D4, simple roots a1, a2, a3, a9",
            rs.size() == 12 && norms && independent && nonneg && first,
            "count=" + std::to_string(rs.size()) + ", a1=" + rs.root(1).str() +
                ", all norms 2: " + yes_no(norms) + ", simple roots independent: " +
                yes_no(independent) + ", positive roots are nonnegative integer combinations: " +
                yes_no(nonneg));
  }
  // Cartan matrix
  {
    const Matrix c = rs.simple_cartan_matrix();
    const Rational det = determinant(c);
    rec.add("rootsys.cartan", "(2-1)", "Cartan matrix on simple roots (1,2,3,9)",
            c == reference_cartan_matrix() && c == c.transpose() && det == Rational(4),
            "matrix=" + c.str() + ", det=" + det.str());
  }
  // generator actions
  {
    const auto ref = reference_generator_actions();
    bool ok = true;
    std::string detail;
    for (std::size_t p = 0; p < 4; ++p) {
      const SignedPerm s = rs.reflection_action(kSimpleLabels[p]);
      ok = ok && s == ref[p] && s * s == SignedPerm::identity() && s.sign_product() == 1;
      detail += (p ? ", " : "") + std::string("s") + std::to_string(kSimpleLabels[p]) + ":" + s.str("e");
    }
    rec.add("rootsys.generators", "(2-2)", "simple reflections act on e1..e4 as signed permutations",
            ok, detail);
  }
  const WeylGroup w = weyl_group(rs);
  const WeylGroup wb = stabilizer_subgroup(rs);
  // stabilizer of b
  {
    const RootVector b{{1, 1, 1, 1}};
    bool fixes = true;
    for (const auto &g : wb.elements())
      fixes = fixes && g.apply(b) == b;
    std::size_t fixers = 0;
    bool inside = true;
    for (const auto &g : w.elements())
      if (g.apply(b) == b) {
        ++fixers;
        inside = inside && wb.contains(g.action);
      }
    rec.add("rootsys.stabilizer", "(2-3)", "the stabilizer of b = e1+e2+e3+e4 is generated by s1, s2, s3",
            wb.order() == 24 && fixes && inside && fixers == 24,
            "|<s1,s2,s3>|=" + std::to_string(wb.order()) + ", elements of W fixing b: " +
                std::to_string(fixers));
  }
  // word identities
  {
    const auto wt = verify_word_table(rs);
    std::size_t passed = 0;
    std::string failed;
    for (const auto &e : wt.entries) {
      if (e.passed)
        ++passed;
      else
        failed += " a" + std::to_string(e.root_index);
    }
    rec.add("rootsys.word-table", "(2-4)", "each a_i equals the listed word applied to a1",
            wt.all_passed() && wt.entries.size() == 11,
            std::to_string(passed) + "/" + std::to_string(wt.entries.size()) + " identities hold" +
                (failed.empty() ? "" : "; failed:" + failed));
  }
  // group order and axioms
  {
    bool closed = true, even = true, roots_permuted = true, words_ok = true;
    std::set<RootVector> all;
    for (const auto &a : rs.positive_roots()) {
      all.insert(a);
      all.insert(-a);
    }
    for (const auto &g : w.elements()) {
      even = even && g.action.sign_product() == 1;
      words_ok = words_ok && rs.evaluate(g.word).action == g.action;
      closed = closed && w.contains(g.action.inverse());
      std::set<RootVector> img;
      for (const auto &r : all)
        img.insert(g.apply(r));
      roots_permuted = roots_permuted && img == all;
      for (const auto &h : w.elements())
        closed = closed && w.contains(g.action * h.action);
    }
    rec.add("rootsys.group-order", "Remark 1", "|W| = 2^3 * 4! = 192",
            w.order() == 192 && closed && even && roots_permuted && words_ok,
            "|W|=" + std::to_string(w.order()) + ", closed under products and inverses: " +
                yes_no(closed) + ", even sign changes: " + yes_no(even) +
                ", permutes the roots: " + yes_no(roots_permuted) +
                ", stored words reproduce elements: " + yes_no(words_ok));
  }
  // orbit of a1
  {
    const auto orb = orbit(w, rs.root(1));
    rec.add("rootsys.orbit", "(2-4)", "the W-orbit of a1 is all 24 roots", orb.size() == 24,
            "|W a1|=" + std::to_string(orb.size()));
  }
  // dimensions
  {
    const auto f = ambient_dims(rs.multiplicity());
    rec.add("rootsys.dimensions", "§2", "dim M = 12m and n = 12m + 4",
            f.dim_M == 48 && f.ambient_n == 52,
            "m=" + std::to_string(f.multiplicity) + ", dim M=" + std::to_string(f.dim_M) +
                ", n=" + std::to_string(f.ambient_n));
  }
}

inline void check_cohomology(const RootSystem &rs, const Cohomology &coh, Recorder &rec,
                             VerificationReport &report) {
  {
    const Matrix &k = coh.kronecker_matrix();
    bool ok = k.rows() == 12;
    for (std::size_t i = 0; i < 12 && ok; ++i) {
      ok = ok && k(i, i) == Rational(2);
      for (std::size_t j = 0; j < 12; ++j)
        ok = ok && k(i, j).is_integer();
    }
    Matrix sub(4, 4);
    for (std::size_t p = 0; p < 4; ++p)
      for (std::size_t q = 0; q < 4; ++q)
        sub(p, q) = k(static_cast<std::size_t>(kSimpleLabels[p] - 1),
                      static_cast<std::size_t>(kSimpleLabels[q] - 1));
    ok = ok && sub == reference_cartan_matrix();
    rec.add("cohomring.kronecker", "Lemma 2", "<d_i, b_j> = 2(a_i,a_j)/(a_j,a_j) for all 12x12 pairs",
            ok, "integer entries, diagonal 2, simple block " + sub.str());
  }
  {
    bool ok = true;
    std::string detail;
    for (int i : kSimpleLabels) {
      const CohClass d = coh.euler_class_d(i);
      for (int j : kSimpleLabels)
        ok = ok && coh.pairing(d, basis_hom(simple_position(j))) == rs.cartan_number(i, j);
      detail += (detail.empty() ? "" : ", ") + std::string("d") + std::to_string(i) + "=" + d.str();
    }
    ok = ok && coh.euler_class_d(1).coords == Vec4{2, -1, 0, 0};
    rec.add("cohomring.euler-classes", "Lemma 3", "Euler classes d_i in the ω-basis", ok, detail);
  }
  {
    const Matrix prod = t_in_omega_matrix() * omega_in_t_matrix();
    const Matrix prod2 = omega_in_t_matrix() * t_in_omega_matrix();
    const CohClass x = coh.to_omega({Basis::t, {1, 1, -1, -1}});
    const auto bad = coh.non_permuting_generators(printed_t_in_omega_matrix(), printed_omega_in_t_matrix());
    const bool printed_inverse = printed_t_in_omega_matrix() * printed_omega_in_t_matrix() == Matrix::identity(4);
    const bool ok = prod == Matrix::identity(4) && prod2 == Matrix::identity(4) &&
                    x.coords == Vec4{0, 2, 0, -2} &&
                    coh.non_permuting_generators(t_in_omega_matrix(), omega_in_t_matrix()).empty();
    std::string labels;
    for (int g : bad)
      labels += (labels.empty() ? "s" : ", s") + std::to_string(g);
    rec.add("cohomring.basis-change", "(3-1)/(3-2)",
            "the t/ω change-of-basis matrices are mutually inverse and W-equivariant", ok,
            "t3 = -ω2+ω3+ω9, t4 = -ω3+ω9; t1+t2-t3-t4 = " + x.str() +
                "; printed rows (ω3 = t1+t2+t3) inverse: " + yes_no(printed_inverse) +
                ", not a signed permutation for " + (labels.empty() ? "none" : labels));
    if (!bad.empty())
      report.errata.push_back("(3-1)/(3-2) rows 3-4: t3 = -ω2+ω3, t4 = -ω3+2ω9 read as t3 = -ω2+ω3+ω9, "
                              "t4 = -ω3+ω9 (the printed rows do not conjugate " + labels +
                              " to signed permutations)");
  }
  {
    bool involutive = true;
    for (int i : kSimpleLabels) {
      const Matrix m = coh.homology_action_matrix(i);
      involutive = involutive && m * m == Matrix::identity(4);
    }
    // as printed, b_i would map to b_i + 2 b_i = 3 b_i
    const Rational printed = Rational(1) + coh.cartan()(0, 0);
    rec.add("cohomring.homology-action", "(3-3)",
            "s_i*(b_j) = b_j - beta_ij b_i is an involution for every simple i", involutive,
            "s1*(b1) = " + coh.homology_action(1, basis_hom(0)).str() + "; printed sign would give " +
                printed.str() + "b1");
    report.errata.push_back("(3-3) sign: s_i*(b_j) = b_j + beta_ij b_i read as b_j - beta_ij b_i "
                            "(the printed sign is not an involution)");
  }
  {
    const auto ref = reference_t_actions();
    bool ok = true;
    std::string detail;
    for (std::size_t p = 0; p < 4; ++p) {
      SignedPerm s;
      try {
        s = coh.action_on_t(kSimpleLabels[p]);
      } catch (const std::domain_error &) {
        ok = false;
        continue;
      }
      ok = ok && s == ref[p];
      detail += (p ? ", " : "") + std::string("s") + std::to_string(kSimpleLabels[p]) + "^*:" + s.str("t");
    }
    bool braids = false;
    if (ok) {
      const SignedPerm s12 = coh.action_on_t(1) * coh.action_on_t(2);
      const SignedPerm s19 = coh.action_on_t(1) * coh.action_on_t(9);
      braids = s12 * s12 * s12 == SignedPerm::identity() && s19 * s19 == SignedPerm::identity();
    }
    rec.add("cohomring.lemma4", "Lemma 4",
            "the induced action on t1..t4 is the printed signed permutation for each generator",
            ok && braids, detail + "; (s1 s2)^3 = (s1 s9)^2 = 1: " + yes_no(braids));
    report.errata.push_back("Lemma 4 degree label: H^2(M;Q) read as H^m(M;Q), m = 4");
  }
  {
    std::size_t checked = 0;
    bool ok = true;
    for (int i : kSimpleLabels)
      for (std::size_t x = 0; x < 4; ++x)
        for (std::size_t h = 0; h < 4; ++h) {
          const CohClass cx = basis_class(Basis::omega, x);
          const HomClass hh = basis_hom(h);
          ok = ok && coh.pairing(coh.cohomology_action(i, cx), hh) ==
                         coh.pairing(cx, coh.homology_action(i, hh));
          ++checked;
        }
    rec.add("cohomring.duality", "(3-4)", "<s_i^*(x), h> = <x, s_i*(h)> on basis classes", ok,
            std::to_string(checked) + " triples checked");
  }
  {
    const auto ids = verify_theta_identities();
    bool ok = true;
    std::string detail;
    for (const auto &t : ids) {
      ok = ok && t.passed();
      detail += (detail.empty() ? "" : ", ") + std::string("theta") + std::to_string(t.index) +
                " residual " + t.difference.str();
    }
    rec.add("cohomring.theta", "§3", "theta_1..theta_3 in terms of e_1..e_4", ok, detail);
  }
  {
    const std::vector<int> all{1, 2, 3, 9}, sub{1, 2, 3};
    bool w_inv = true;
    for (int i = 1; i <= 3; ++i)
      w_inv = w_inv && coh.is_invariant(theta(i), all);
    w_inv = w_inv && coh.is_invariant(elementary_symmetric(4), all);
    bool wb_inv = true;
    for (int i = 1; i <= 4; ++i)
      wb_inv = wb_inv && coh.is_invariant(elementary_symmetric(i), sub);
    const bool e1_not = !coh.is_invariant(elementary_symmetric(1), {9});
    rec.add("cohomring.invariants", "Lemma 5",
            "theta_1, theta_2, theta_3, e_4 are W-invariant; e_1..e_4 are W_b-invariant",
            w_inv && wb_inv && e1_not,
            "W-invariant: " + yes_no(w_inv) + ", W_b-invariant: " + yes_no(wb_inv) +
                ", s9^*(e1) = " + coh.act_on_polynomial(Word{9}, elementary_symmetric(1)).str());
  }
}

inline std::string render_eqs(const std::vector<Equation> &eqs, const UnknownNames &names) {
  std::string s;
  for (const auto &e : eqs)
    s += (s.empty() ? "" : "; ") + e.str(names);
  return s.empty() ? "(none)" : s;
}

} // namespace detail

/// End-to-end verification. Checks run in a fixed order and the report is
/// deterministic for given options.
inline VerificationReport theorem_pipeline(const PipelineOptions &opt = {}) {
  VerificationReport report;
  detail::Recorder rec(report);
  report.axioms = {
      "Curvature distributions: TM splits as E_a1 + ... + E_a12, and the pullback of TM_b is "
      "E_a7 + ... + E_a12 (Lemma 1)",
      "W acts smoothly on M with w^*(E_a) = E_{w^-1(a)} (Lemma 6)",
      "TM and the tangent bundles of the leaf spheres are stably trivial (Lemma 7)",
      "M is 3-connected, and p1 of a bundle over a 3-connected complex is integral and even "
      "(Lemma 8)",
      "Vect^m(S^n) corresponds bijectively to pi_{n-1}(SO(m)) via clutching (Lemma 10)",
      "pi_3(SO(5)) = Z and p1: Vect^5(S^4) -> H^4(S^4;Z) is onto 2H^4, hence injective (Lemma 9)",
      "the boundary map sends the generator of pi_4(S^4) to tau (Lemma 9)",
      "f(tau) = (2,0) and f(gamma) = (1,-2) (Example)",
  };

  const RootSystem rs = build_d4(4);
  detail::check_root_system(rs, rec);
  const Cohomology coh(rs);
  detail::check_cohomology(rs, coh, rec, report);

  // Pontryagin constraint solve
  const Solution sol = solve(coh, opt.solve);
  {
    const auto &ref = reference_orbit_table();
    std::size_t matched = 0;
    for (std::size_t i = 0; i < 12; ++i)
      matched += sol.reduced_classes[i] == ref[i] ? 1 : 0;
    rec.add("pontsolve.orbit-table", "(4-2)",
            "pullbacks of k t1 + k t2 + k3 t3 + k4 t4 give the listed twelve classes", matched == 12,
            std::to_string(matched) + "/12 classes match");
  }
  if (opt.solve.leaf_sphere) {
    const Equation e = leaf_sphere_constraint(coh);
    rec.add("pontsolve.leaf-sphere", "(4-1)", "<p1(E_a1), b1> = k1 - k2 = 0",
            e.lhs == LinearForm{1, -1, 0, 0}, e.str());
  }
  std::array<UnknownVector, 12> reduced{};
  for (std::size_t i = 0; i < 12; ++i)
    reduced[i] = impose_sum_zero(sol.reduced_classes[i]);
  if (opt.solve.sum_zero) {
    const auto eqs = sum_zero_constraint(sol.reduced_classes);
    const bool ok = eqs[0].lhs == LinearForm{6, 0, 6, 0} && eqs[1].lhs == LinearForm{4, 0, 4, 0} &&
                    eqs[2].lhs == LinearForm{2, 0, 2, 0} && is_zero(eqs[3].lhs);
    rec.add("pontsolve.sum-zero", "Lemma 7", "p1(TM) = 0 forces k3 = -k", ok,
            detail::render_eqs(eqs, kReducedNames));
  }
  {
    const auto &ref = reference_reduced_table();
    std::size_t matched = 0;
    for (std::size_t i = 0; i < 6; ++i)
      matched += reduced[6 + i] == ref[i] ? 1 : 0;
    const UnknownVector s = sum(std::span<const UnknownVector>(reduced).subspan(6));
    const LinearForm kk4{-1, 0, 0, -1};
    UnknownVector expected;
    expected.coef = {LinearForm{}, kk4, Rational(2) * kk4, Rational(3) * kk4};
    rec.add("pontsolve.reduced-table", "(4-3)",
            "after k3 = -k the classes of a7..a12 are as listed; their sum is -(k+k4)(t2+2t3+3t4)",
            matched == 6 && s == expected,
            std::to_string(matched) + "/6 classes match; sum = " + s.str(kReducedNames));
  }
  if (opt.solve.symmetry) {
    const auto eqs = symmetry_constraint(std::span<const UnknownVector>(reduced).subspan(6));
    const bool ok = eqs.size() == 1 && eqs[0].lhs == LinearForm{1, 0, 0, 1};
    rec.add("pontsolve.symmetry", "Lemma 1", "the pullback of p1(TM_b) is symmetric, forcing k4 = -k",
            ok, detail::render_eqs(eqs, kReducedNames));
  }
  {
    const std::vector<Rational> expected{1, 1, -1, -1};
    bool exact = true;
    for (const auto &v : sol.basis)
      for (const auto &e : sol.equations) {
        Rational r = 0;
        for (std::size_t i = 0; i < 4; ++i)
          r += e.lhs[i] * v[i];
        exact = exact && r.is_zero();
      }
    std::string basis;
    for (const auto &v : sol.basis) {
      std::string t = "(";
      for (std::size_t i = 0; i < 4; ++i)
        t += (i ? "," : "") + v[i].str();
      basis += (basis.empty() ? "" : ", ") + t + ")";
    }
    const bool ok = sol.dimension() == 1 && sol.basis[0] == expected && exact;
    rec.add("pontsolve.solve", "Lemma 7", "p1(E_a1) = k(t1 + t2 - t3 - t4)", ok,
            "dimension " + std::to_string(sol.dimension()) + ", basis {" + basis + "}");
  }

  if (sol.dimension() != 1) {
    report.theorem.status = opt.diagnostic() ? TheoremStatus::inconclusive : TheoremStatus::failed;
    report.theorem.failing_check = "pontsolve.solve";
    return report;
  }

  const BundleClasses bundle = lemma8_classes(coh, sol);
  {
    KClass expected_p1;
    expected_p1.coords = {AffineK{0, 0}, AffineK{0, 2}, AffineK{0, 0}, AffineK{0, -2}};
    const bool ok = bundle.euler.coords == Vec4{2, -1, 0, 0} && bundle.p1.coords == expected_p1.coords &&
                    bundle.k_integral;
    rec.add("pontsolve.bundle-classes", "Lemma 8", "e(E_a1) = 2ω1 - ω2 and p1(E_a1) = 2k(ω2 - ω9), k in Z",
            ok,
            "e = " + bundle.euler.str() + ", p1 = " + bundle.p1.str() + ", k integral: " +
                detail::yes_no(bundle.k_integral));
    report.errata.push_back("(4-4) ω₄ read as ω₉");
    report.errata.push_back("Lemma 7 proof closing line: 'Lemma 6' read as Lemma 7");
  }

  // bundles over S^4
  {
    const bool ok = tau() == SphereBundleClass{2, 0} && gamma() == SphereBundleClass{1, -2} &&
                    is_realizable(tau()) && is_realizable(gamma()) && !is_realizable({1, 0}) &&
                    is_realizable(trivial_bundle());
    rec.add("vect4.generators", "Example", "f(tau) = (2,0) and f(gamma) = (1,-2) are realizable; (1,0) is not",
            ok, "tau=" + tau().str() + ", gamma=" + gamma().str() + ", g(1,0)=" +
                    std::to_string(obstruction({1, 0})));
  }
  {
    bool ok = true;
    std::size_t n = 0;
    for (std::int64_t i = -10; i <= 10; ++i)
      for (std::int64_t j = -10; j <= 10; ++j) {
        const SphereBundleClass x = i * tau() + j * gamma();
        ok = ok && is_realizable(x) && decompose(x) == std::pair{i, j};
        ++n;
      }
    rec.add("vect4.decompose", "Remark 4", "tau and gamma generate: decomposition round-trips", ok,
            std::to_string(n) + " pairs with |n|,|m| <= 10");
  }
  if (opt.window_checks) {
    const auto ex = verify_exact_sequence(opt.window);
    rec.add("vect4.exact-sequence", "Lemma 9",
            "kernel of stabilization is Z tau, image is the even integers, realizable pairs form an index-4 subgroup",
            ex.passed(),
            "window N=" + std::to_string(ex.window) + ", realizable points " +
                std::to_string(ex.realizable_points) + ", kernel size " + std::to_string(ex.kernel.size()) +
                ", kernel = Z tau: " + detail::yes_no(ex.kernel_is_tau_multiples) +
                ", image = 2Z: " + detail::yes_no(ex.image_is_even_integers) +
                ", closed: " + detail::yes_no(ex.closed_under_group_ops) +
                ", index 4: " + detail::yes_no(ex.index_four) +
                ", injective: " + detail::yes_no(ex.f_injective));
  }

  // restriction to the leaf spheres S2 and S9, then the congruences
  KClass euler_k;
  for (std::size_t p = 0; p < 4; ++p)
    euler_k.coords[p] = {bundle.euler.coords[p], 0};
  const KPair f1{restrict_class(euler_k, 2), restrict_class(bundle.p1, 2)};
  const KPair f2{restrict_class(euler_k, 9), restrict_class(bundle.p1, 9)};
  report.theorem.f_xi1 = f1.str();
  report.theorem.f_xi2 = f2.str();
  rec.add("obstruct.restrictions", "Theorem", "f(xi_1) = (-1, 2k) and f(xi_2) = (0, -2k)",
          f1.a == AffineK{-1, 0} && f1.b == AffineK{0, 2} && f2.a == AffineK{0, 0} &&
              f2.b == AffineK{0, -2},
          "f(xi_1)=" + f1.str() + ", f(xi_2)=" + f2.str());

  const CongruenceCondition c1 = realizability_condition(f1);
  const CongruenceCondition c2 = realizability_condition(f2);
  const ResidueSet r1 = solve_congruence(c1).reduced();
  const ResidueSet r2 = solve_congruence(c2).reduced();
  report.theorem.residues_xi1 = r1.str();
  report.theorem.residues_xi2 = r2.str();
  rec.add("obstruct.congruences", "Lemma 9", "realizability of xi_1 forces k odd, of xi_2 forces k even",
          r1 == ResidueSet{2, {1}} && r2 == ResidueSet{2, {0}},
          c1.str() + " => " + r1.str() + "; " + c2.str() + " => " + r2.str());
  rec.add("obstruct.each-satisfiable", "Theorem",
          "each congruence alone has solutions, so the contradiction needs both", !r1.empty() && !r2.empty(),
          "xi_1 alone: " + r1.str() + ", xi_2 alone: " + r2.str());
  const ResidueSet both = intersect(r1, r2).reduced();
  report.theorem.intersection = both.str();
  rec.add("obstruct.contradiction", "Theorem", "no integer k satisfies both congruences", both.empty(),
          "intersection " + both.str());

  auto failed = std::find_if(report.checks.begin(), report.checks.end(),
                             [](const CheckRecord &c) { return c.status == CheckStatus::fail; });
  if (failed != report.checks.end()) {
    report.theorem.status = TheoremStatus::failed;
    report.theorem.failing_check = failed->id;
  } else if (!both.empty()) {
    report.theorem.status = TheoremStatus::not_obstructed;
  } else {
    report.theorem.status = TheoremStatus::obstructed;
  }
  return report;
}

} // namespace isod4
