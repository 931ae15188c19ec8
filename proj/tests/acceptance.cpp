// One line per acceptance criterion; exit status is the number of failures.
#include <iostream>
#include <sstream>

#include "isod4/cli.hpp"

using namespace isod4;

namespace {

int failures = 0;

void report(int n, const std::string &name, bool ok, const std::string &detail) {
  std::cout << (ok ? "PASS" : "FAIL") << "  " << n << ". " << name << "  [" << detail << "]\n";
  failures += ok ? 0 : 1;
}

std::string run_cli(std::vector<std::string> args, int &code) {
  args.insert(args.begin(), "isod4-verify");
  std::vector<const char *> argv;
  for (const auto &a : args)
    argv.push_back(a.c_str());
  std::ostringstream out, err;
  code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return out.str();
}

} // namespace

int main() {
  const RootSystem rs = build_d4(4);
  const Cohomology coh(rs);

  {
    const auto w = weyl_group(rs).order();
    const auto sub = enumerate_group({rs.generator(1), rs.generator(2), rs.generator(3)}).order();
    report(1, "group order", w == 192 && sub == 24,
           "|W|=" + std::to_string(w) + ", |<s1,s2,s3>|=" + std::to_string(sub));
  }
  {
    const Matrix expected{{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}};
    const Matrix c = rs.simple_cartan_matrix();
    report(2, "Cartan matrix", c == expected, c.str());
  }
  {
    const auto wt = verify_word_table(rs);
    const auto orb = orbit(weyl_group(rs), rs.root(1)).size();
    report(3, "word table and orbit", wt.entries.size() == 11 && wt.all_passed() && orb == 24,
           std::to_string(wt.entries.size()) + " identities, |W a1|=" + std::to_string(orb));
  }
  {
    const std::array<std::string, 4> printed{"{t2,t1,t3,t4}", "{t1,t3,t2,t4}", "{t1,t2,t4,t3}",
                                             "{t1,t2,-t4,-t3}"};
    bool ok = true;
    for (std::size_t p = 0; p < 4; ++p)
      ok = ok && coh.action_on_t(kSimpleLabels[p]).str("t") == printed[p];
    std::size_t triples = 0;
    bool dual = true;
    for (int i : kSimpleLabels)
      for (std::size_t x = 0; x < 4; ++x)
        for (std::size_t h = 0; h < 4; ++h, ++triples)
          dual = dual && coh.pairing(coh.cohomology_action(i, basis_class(Basis::omega, x)), basis_hom(h)) ==
                             coh.pairing(basis_class(Basis::omega, x), coh.homology_action(i, basis_hom(h)));
    report(4, "t-basis actions and duality", ok && dual && triples == 64,
           "actions match: " + detail::yes_no(ok) + ", duality on " + std::to_string(triples) +
               " triples: " + detail::yes_no(dual));
  }
  {
    const auto e = [](int k) { return elementary_symmetric(k); };
    const Polynomial two(2);
    const bool ok = (theta(1) - (e(1) * e(1) - two * e(2))).is_zero() &&
                    (theta(2) - (e(2) * e(2) - two * e(1) * e(3) + two * e(4))).is_zero() &&
                    (theta(3) - (e(3) * e(3) - two * e(2) * e(4))).is_zero();
    report(5, "theta identities", ok, "three differences are the zero polynomial");
  }
  {
    const std::vector<int> all{1, 2, 3, 9}, stab{1, 2, 3};
    bool w_inv = coh.is_invariant(elementary_symmetric(4), all);
    for (int i = 1; i <= 3; ++i)
      w_inv = w_inv && coh.is_invariant(theta(i), all);
    bool wb_inv = true;
    for (int i = 1; i <= 4; ++i)
      wb_inv = wb_inv && coh.is_invariant(elementary_symmetric(i), stab);
    const bool e1_not = !coh.is_invariant(elementary_symmetric(1), {9});
    report(6, "invariance suite", w_inv && wb_inv && e1_not,
           "W: " + detail::yes_no(w_inv) + ", W_b: " + detail::yes_no(wb_inv) + ", e1 moved by s9: " +
               detail::yes_no(e1_not));
  }
  {
    const std::array<std::string, 12> t42{
        "kt1 + kt2 + k3t3 + k4t4", "k3t1 + kt2 + kt3 + k4t4", "k3t1 + k4t2 + kt3 + kt4",
        "kt1 + k3t2 + kt3 + k4t4", "k3t1 + kt2 + k4t3 + kt4", "kt1 + k3t2 + k4t3 + kt4",
        "kt1 - kt2 + k3t3 - k4t4", "k3t1 + kt2 - kt3 - k4t4", "k3t1 - k4t2 + kt3 - kt4",
        "kt1 + k3t2 - kt3 - k4t4", "k3t1 + kt2 - k4t3 - kt4", "kt1 + k3t2 - k4t3 - kt4"};
    const std::array<std::string, 6> t43{
        "kt1 - kt2 - kt3 - k4t4", "-kt1 + kt2 - kt3 - k4t4", "-kt1 - k4t2 + kt3 - kt4",
        "kt1 - kt2 - kt3 - k4t4", "-kt1 + kt2 - k4t3 - kt4", "kt1 - kt2 - k4t3 - kt4"};
    const auto classes = orbit_classes(coh, UnknownVector::generic());
    std::size_t m42 = 0, m43 = 0;
    UnknownVector tail;
    for (std::size_t i = 0; i < 12; ++i) {
      const UnknownVector r = impose_leaf_sphere(classes[i]);
      m42 += r.str(kReducedNames) == t42[i] ? 1 : 0;
      if (i >= 6) {
        const UnknownVector s = impose_sum_zero(r);
        m43 += s.str(kReducedNames) == t43[i - 6] ? 1 : 0;
        tail = tail + s;
      }
    }
    const std::string sum = tail.str(kReducedNames);
    const bool ok = m42 == 12 && m43 == 6 && sum == "(-k - k4)t2 + (-2k - 2k4)t3 + (-3k - 3k4)t4";
    report(7, "table oracle", ok,
           std::to_string(m42) + "/12 and " + std::to_string(m43) + "/6 rows, sum = " + sum);
  }
  {
    const Solution full = solve(coh);
    const Solution nosym = solve(coh, {true, true, false});
    const bool ok = full.dimension() == 1 && full.basis[0] == std::vector<Rational>{1, 1, -1, -1} &&
                    nosym.dimension() == 2;
    report(8, "solver", ok,
           "full dimension " + std::to_string(full.dimension()) + ", without symmetry " +
               std::to_string(nosym.dimension()));
  }
  {
    const BundleClasses b = lemma8_classes(coh, solve(coh));
    const VerificationReport rep = theorem_pipeline();
    const bool logged = std::find(rep.errata.begin(), rep.errata.end(), "(4-4) ω₄ read as ω₉") != rep.errata.end();
    report(9, "bundle classes", b.euler.str() == "2ω1 - ω2" && b.p1.str() == "2k(ω2 - ω9)" && logged,
           "e = " + b.euler.str() + ", p1 = " + b.p1.str() + ", erratum logged: " + detail::yes_no(logged));
  }
  {
    bool round = true;
    for (std::int64_t n = -10; n <= 10; ++n)
      for (std::int64_t m = -10; m <= 10; ++m)
        round = round && decompose(n * tau() + m * gamma()) == std::pair{n, m};
    const auto ex = verify_exact_sequence(20);
    const bool gens = tau() == SphereBundleClass{2, 0} && gamma() == SphereBundleClass{1, -2} &&
                      is_realizable(tau()) && is_realizable(gamma()) && !is_realizable({1, 0});
    report(10, "Vect4 arithmetic", gens && round && ex.kernel_is_tau_multiples && ex.image_is_even_integers,
           "generators: " + detail::yes_no(gens) + ", round trip: " + detail::yes_no(round) +
               ", exact sequence at N=20: " + detail::yes_no(ex.passed()));
  }
  {
    int code = -1;
    const std::string out = run_cli({"verify-all", "--format", "json"}, code);
    const auto j = nlohmann::ordered_json::parse(out);
    const auto &t = j["theorem"];
    const bool ok = code == 0 && t["f_xi1"] == "(-1,2k)" && t["f_xi2"] == "(0,-2k)" &&
                    t["residues_xi1"] == "k ≡ 1 (mod 2)" && t["residues_xi2"] == "k ≡ 0 (mod 2)" &&
                    t["intersection"] == "∅" && t["status"] == "OBSTRUCTED";
    report(11, "theorem", ok,
           "status " + t["status"].get<std::string>() + ", exit code " + std::to_string(code));
  }
  {
    int c1 = -1, c2 = -1;
    const std::string a = run_cli({"verify-all", "--format", "json"}, c1);
    const std::string b = run_cli({"verify-all", "--format", "json"}, c2);
    report(12, "determinism", a == b && c1 == 0 && c2 == 0, std::to_string(a.size()) + " bytes, identical: " +
                                                               detail::yes_no(a == b));
  }
  std::cout << (12 - failures) << "/12 criteria pass\n";
  return failures;
}
