#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "obstruct.hpp"

namespace isod4 {

enum class Format { text, json };

/// Version of the JSON layout; bump when fields change meaning.
inline constexpr int kReportSchema = 1;

inline nlohmann::ordered_json report_to_json(const VerificationReport &r) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["schema"] = kReportSchema;
  ordered_json th;
  th["status"] = std::string(to_string(r.theorem.status));
  th["failing_check"] = r.theorem.failing_check;
  th["f_xi1"] = r.theorem.f_xi1;
  th["f_xi2"] = r.theorem.f_xi2;
  th["residues_xi1"] = r.theorem.residues_xi1;
  th["residues_xi2"] = r.theorem.residues_xi2;
  th["intersection"] = r.theorem.intersection;
  j["theorem"] = th;
  ordered_json checks = ordered_json::array();
  std::size_t passed = 0;
  for (const auto &c : r.checks) {
    ordered_json o;
    o["id"] = c.id;
    o["ref"] = c.ref;
    o["statement"] = c.statement;
    o["status"] = std::string(to_string(c.status));
    o["detail"] = c.detail;
    checks.push_back(std::move(o));
    passed += c.status == CheckStatus::pass ? 1 : 0;
  }
  j["checks"] = std::move(checks);
  j["errata"] = r.errata;
  j["axioms"] = r.axioms;
  j["summary"] = {{"total", r.checks.size()}, {"passed", passed}};
  return j;
}

inline std::string render_text(const VerificationReport &r) {
  std::string s = "D4 isoparametric foliation, uniform multiplicity 4, ambient R^52\n";
  s += std::to_string(r.checks.size()) + " checks\n";
  for (const auto &c : r.checks) {
    s += "[" + std::string(to_string(c.status)) + "] " + c.id + " (" + c.ref + "): " + c.statement + "\n";
    s += "       " + c.detail + "\n";
  }
  if (!r.errata.empty()) {
    s += "errata:\n";
    for (const auto &e : r.errata)
      s += "  erratum: " + e + "\n";
  }
  if (!r.axioms.empty()) {
    s += "axioms (cited facts, not computed):\n";
    for (const auto &a : r.axioms)
      s += "  - " + a + "\n";
  }
  if (!r.checks.empty()) {
    s += "theorem: " + std::string(to_string(r.theorem.status)) + "\n";
    if (!r.theorem.failing_check.empty())
      s += "  failing check: " + r.theorem.failing_check + "\n";
    if (!r.theorem.f_xi1.empty()) {
      s += "  f(xi_1) = " + r.theorem.f_xi1 + "  =>  " + r.theorem.residues_xi1 + "\n";
      s += "  f(xi_2) = " + r.theorem.f_xi2 + "  =>  " + r.theorem.residues_xi2 + "\n";
      s += "  common solutions: " + r.theorem.intersection + "\n";
    }
  }
  return s;
}

inline std::string render_report(const VerificationReport &r, Format f) {
  if (f == Format::json)
    return report_to_json(r).dump(2) + "\n";
  return render_text(r);
}

} // namespace isod4
