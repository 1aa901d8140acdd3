#include "ampsurf/positivity.hpp"

#include <algorithm>

#include "ampsurf/errors.hpp"
#include "ampsurf/tags.hpp"

namespace ampsurf {
namespace {

Condition strict(std::string id, std::string text, const Rational& lhs, const Rational& rhs,
                 std::string_view backing) {
  Rational margin = lhs - rhs;
  const bool holds = margin > 0;
  return {std::move(id), std::move(text), holds, std::move(margin), std::string(backing)};
}

Condition weak(std::string id, std::string text, const Rational& lhs, const Rational& rhs,
               std::string_view backing) {
  Rational margin = lhs - rhs;
  const bool holds = margin >= 0;
  return {std::move(id), std::move(text), holds, std::move(margin), std::string(backing)};
}

SlopeCheck finish(std::vector<Condition> conditions) {
  SlopeCheck out;
  out.conditions = std::move(conditions);
  auto failing = std::find_if(out.conditions.begin(), out.conditions.end(),
                              [](const Condition& c) { return !c.holds; });
  out.holds = failing == out.conditions.end();
  if (!out.holds) out.detail = failing->inequality + " fails (margin " + to_string(failing->margin) + ")";
  return out;
}

// nu.F and nu.E conditions shared by both theorems on F_e.
std::vector<Condition> hirzebruch_slopes(const ChernCharacter& v, std::string_view backing) {
  const Surface& s = v.surface();
  const LogInvariants inv = log_invariants(v);
  const Rational nu_f = intersect(inv.nu, fiber_class(s));
  const Rational nu_e = intersect(inv.nu, section_class(s));
  std::vector<Condition> out;
  out.push_back(strict("nu-dot-F", "nu.F > 1", nu_f, 1, backing));
  if (s.e() == 0) {
    out.push_back(strict("nu-dot-E", "nu.E > 1", nu_e, 1, backing));
  } else {
    out.push_back(weak("nu-dot-E", "nu.E >= 1", nu_e, 1, backing));
  }
  return out;
}

void require_gg_hypotheses(const ChernCharacter& v, const LogInvariants& inv) {
  if (v.rank() < 2) throw PreconditionError("global-generation classification needs rank >= 2");
  if (inv.delta < 0) throw PreconditionError("global-generation classification needs delta >= 0");
  if (!v.surface().is_plane() && !is_nef(inv.nu)) {
    throw PreconditionError("global-generation classification on F_e needs nu nef, got nu = " +
                            to_string(inv.nu));
  }
}

ChernCharacter trivial_character(const Surface& s, std::int64_t r) {
  return ChernCharacter::make(r, DivisorClass::zero(s), 0);
}

// (r+1) ch O - ch O(D), computed componentwise.
ChernCharacter exceptional_gg_character(std::int64_t r, const DivisorClass& d) {
  return ChernCharacter::make(r, -d, Rational(-intersect(d, d) / 2));
}

// v = (r-m) ch O(aC) + m ch O((a+1)C) with C^2 = 0, a >= 0, 0 <= m < r.
// Such a sum has ch2 = 0 and c1 = kC with k = ra + m, and every k >= 0 is
// reached by a = floor(k/r), m = k - ra.
bool is_split_along(const ChernCharacter& v, const DivisorClass& c) {
  if (v.ch2() != 0) return false;
  const Rational k = c.x() != 0 ? v.c1().x() : v.c1().y();
  return k >= 0 && c * k == v.c1();
}

}  // namespace

std::string to_string(ObstructionVerdict v) {
  switch (v) {
    case ObstructionVerdict::Unobstructed:
      return "Unobstructed";
    case ObstructionVerdict::Obstructed:
      return "Obstructed";
    case ObstructionVerdict::ExceptionalTangentBundle:
      return "ExceptionalTangentBundle";
  }
  return "?";
}

bool bogomolov_check(const ChernCharacter& v) { return log_invariants(v).delta >= 0; }

FlCheck fulton_lazarsfeld_check(std::int64_t rank, const LogInvariants& inv) {
  Rational margin = intersect(inv.nu, inv.nu) / 2 - inv.delta / Rational(rank + 1);
  const bool holds = margin > 0;
  return {holds, std::move(margin)};
}

FlCheck fulton_lazarsfeld_check(const ChernCharacter& v) {
  return fulton_lazarsfeld_check(v.rank(), log_invariants(v));
}

bool is_tangent_bundle_character(const ChernCharacter& v) {
  const Surface& s = v.surface();
  return s.is_plane() && v == ChernCharacter::make(2, DivisorClass(s, 3), rat(3, 2));
}

ObstructionReport necessary_obstructions(const ChernCharacter& v) {
  const Surface& s = v.surface();
  const LogInvariants inv = log_invariants(v);
  const Rational r = v.rank();
  ObstructionReport report;

  const FlCheck fl = fulton_lazarsfeld_check(v);
  report.conditions.push_back({"fulton-lazarsfeld", "nu^2/2 > delta/(r+1)", fl.holds, fl.margin,
                               std::string(tags::kFultonLazarsfeld)});

  if (s.is_plane()) {
    report.conditions.push_back(weak("restriction-line", "mu >= 1", inv.mu, 1, tags::kRationalCurveRestriction));
  } else {
    const Rational nu_f = intersect(inv.nu, fiber_class(s));
    const Rational nu_e = intersect(inv.nu, section_class(s));
    report.conditions.push_back(weak("restriction-fiber", "nu.F >= 1", nu_f, 1, tags::kRationalCurveRestriction));
    report.conditions.push_back(weak("restriction-section", "nu.E >= 1", nu_e, 1, tags::kRationalCurveRestriction));
  }

  if (v.rank() >= 2) {
    if (s.is_plane()) {
      report.conditions.push_back(
          strict("stable-slope", "nu.H > 1 + 1/r", inv.mu, Rational(1 + 1 / r), tags::kStableSlopeBound));
    } else {
      const Rational nu_f = intersect(inv.nu, fiber_class(s));
      report.conditions.push_back(strict("stable-fiber", "nu.F > 1", nu_f, 1, tags::kFiberDegreeOne));
      if (nu_f == 1) report.notes.push_back("nu.F = 1: a stable ample bundle with this fiber degree is a line bundle");
      if (s.e() == 0) {
        // E is a fiber of the other ruling of F_0.
        const Rational nu_e = intersect(inv.nu, section_class(s));
        report.conditions.push_back(strict("stable-section", "nu.E > 1", nu_e, 1, tags::kFiberDegreeOne));
        if (nu_e == 1) report.notes.push_back("nu.E = 1 on F0: by symmetry of the rulings the bundle is a line bundle");
      }
    }
  } else {
    report.notes.push_back("rank one: only the restriction and Fulton-Lazarsfeld conditions apply");
  }

  const bool all_hold = std::all_of(report.conditions.begin(), report.conditions.end(),
                                    [](const Condition& c) { return c.holds; });
  if (all_hold) {
    report.verdict = ObstructionVerdict::Unobstructed;
  } else if (is_tangent_bundle_character(v)) {
    const bool only_slope = std::all_of(report.conditions.begin(), report.conditions.end(),
                                        [](const Condition& c) { return c.holds || c.id == "stable-slope"; });
    report.verdict = only_slope ? ObstructionVerdict::ExceptionalTangentBundle : ObstructionVerdict::Obstructed;
    if (only_slope) report.notes.push_back("v = ch T_P2 (delta = 3/8): the tangent bundle is stable and ample");
  } else {
    report.verdict = ObstructionVerdict::Obstructed;
  }
  return report;
}

SlopeCheck ample_gg_slope_hypotheses(const ChernCharacter& v) {
  const Surface& s = v.surface();
  if (s.is_plane()) {
    const Rational r = v.rank();
    const LogInvariants inv = log_invariants(v);
    return finish({strict("mu", "mu > 1 + 1/r", inv.mu, Rational(1 + 1 / r), tags::kAmpleGlobalGeneration)});
  }
  return finish(hirzebruch_slopes(v, tags::kAmpleGlobalGeneration));
}

SlopeCheck asymptotic_slope_hypotheses(const ChernCharacter& v) {
  const Surface& s = v.surface();
  if (s.is_plane()) {
    const LogInvariants inv = log_invariants(v);
    return finish({strict("nu-dot-H", "nu.H > 1", inv.mu, 1, tags::kAsymptoticAmpleness)});
  }
  return finish(hirzebruch_slopes(v, tags::kAsymptoticAmpleness));
}

GGClassification classify_global_generation(const ChernCharacter& v) {
  const LogInvariants inv = log_invariants(v);
  require_gg_hypotheses(v, inv);
  const Surface& s = v.surface();
  const std::int64_t r = v.rank();
  GGClassification out;
  auto fire = [&](int id, std::string detail) {
    out.globally_generated = true;
    out.case_id = id;
    out.detail = std::move(detail);
    return out;
  };
  auto reject = [&](std::string detail) {
    out.globally_generated = false;
    out.case_id = 0;
    out.detail = std::move(detail);
    return out;
  };
  const std::int64_t chi = euler_characteristic(v);

  if (s.is_plane()) {
    out.backing = tags::kGlobalGenerationP2;
    if (inv.mu == 0) {
      if (v == trivial_character(s, r)) return fire(1, "mu = 0 and v = r ch O");
      return reject("mu = 0 but v != r ch O");
    }
    if (inv.mu < 0) return reject("mu < 0");
    const std::int64_t chi_m1 = euler_characteristic(twist(v, DivisorClass(s, -1)));
    out.evaluated.push_back(weak("chi-v-minus-1", "chi(v(-1)) >= 0", chi_m1, 0, tags::kGlobalGenerationP2));
    if (chi_m1 >= 0) return fire(2, "mu > 0 and chi(v(-1)) >= 0");
    out.evaluated.push_back(weak("chi-v", "chi(v) >= r+2", chi, r + 2, tags::kGlobalGenerationP2));
    if (chi >= r + 2) return fire(3, "mu > 0, chi(v(-1)) < 0 and chi(v) >= r+2");
    if (chi == r + 1 && v == exceptional_gg_character(r, DivisorClass(s, -2))) {
      return fire(4, "v = (r+1) ch O - ch O(-2)");
    }
    return reject("mu > 0, chi(v(-1)) = " + std::to_string(chi_m1) + " < 0 and chi(v) = " + std::to_string(chi) +
                  " < r+2 without the exceptional character");
  }

  const DivisorClass e_cls = section_class(s);
  const DivisorClass f_cls = fiber_class(s);
  const Rational nu_f = intersect(inv.nu, f_cls);
  const Rational nu_e = intersect(inv.nu, e_cls);

  if (s.e() >= 1) {
    out.backing = tags::kGlobalGenerationFe;
    if (nu_f == 0) {
      if (is_split_along(v, f_cls)) return fire(1, "nu.F = 0 and v = (r-m) ch O(aF) + m ch O((a+1)F)");
      return reject("nu.F = 0 but v is not a balanced sum of ch O(aF), ch O((a+1)F)");
    }
    const std::int64_t chi_mf = euler_characteristic(twist(v, -f_cls));
    out.evaluated.push_back(weak("chi-v-minus-F", "chi(v(-F)) >= 0", chi_mf, 0, tags::kGlobalGenerationFe));
    if (chi_mf >= 0) return fire(2, "nu.F > 0 and chi(v(-F)) >= 0");
    out.evaluated.push_back(weak("chi-v", "chi(v) >= r+2", chi, r + 2, tags::kGlobalGenerationFe));
    if (chi >= r + 2) return fire(3, "nu.F > 0, chi(v(-F)) < 0 and chi(v) >= r+2");
    if (s.e() == 1 && chi == r + 1 && v == exceptional_gg_character(r, DivisorClass(s, -2, -2))) {
      return fire(4, "e = 1 and v = (r+1) ch O - ch O(-2E-2F)");
    }
    return reject("nu.F > 0, chi(v(-F)) = " + std::to_string(chi_mf) + " < 0 and chi(v) = " + std::to_string(chi) +
                  " < r+2 without the exceptional character");
  }

  out.backing = tags::kGlobalGenerationF0;
  if (nu_e == 0 || nu_f == 0) {
    if (is_split_along(v, e_cls) || is_split_along(v, f_cls)) {
      return fire(1, "v is a balanced sum of line bundles pulled back from a ruling");
    }
    return reject("nu.E = 0 or nu.F = 0 but v is not a balanced sum along a ruling");
  }
  const std::int64_t chi_me = euler_characteristic(twist(v, -e_cls));
  const std::int64_t chi_mf = euler_characteristic(twist(v, -f_cls));
  out.evaluated.push_back(weak("chi-v-minus-E", "chi(v(-E)) >= 0", chi_me, 0, tags::kGlobalGenerationF0));
  out.evaluated.push_back(weak("chi-v-minus-F", "chi(v(-F)) >= 0", chi_mf, 0, tags::kGlobalGenerationF0));
  if (chi_me >= 0 || chi_mf >= 0) return fire(2, "nu.E, nu.F > 0 and chi(v(-E)) >= 0 or chi(v(-F)) >= 0");
  out.evaluated.push_back(weak("chi-v", "chi(v) >= r+2", chi, r + 2, tags::kGlobalGenerationF0));
  if (chi >= r + 2) return fire(3, "nu.E, nu.F > 0, chi(v(-E)), chi(v(-F)) < 0 and chi(v) >= r+2");
  return reject("chi(v(-E)) = " + std::to_string(chi_me) + ", chi(v(-F)) = " + std::to_string(chi_mf) +
                " < 0 and chi(v) = " + std::to_string(chi) + " < r+2");
}

bool gg_quick_criterion(const ChernCharacter& v) {
  const LogInvariants inv = log_invariants(v);
  if (v.rank() < 2) throw PreconditionError("criterion needs rank >= 2");
  if (inv.delta < 0) throw PreconditionError("criterion needs delta >= 0 (Bogomolov), got " + to_string(inv.delta));
  if (!is_big_and_nef(inv.nu)) throw PreconditionError("criterion needs nu big and nef, got " + to_string(inv.nu));
  return euler_characteristic(twist(v, -restriction_curve(v.surface()))) >= 0;
}

}  // namespace ampsurf
