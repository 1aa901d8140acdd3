#include "ampsurf/cohomology.hpp"

#include <algorithm>

#include "ampsurf/errors.hpp"
#include "ampsurf/positivity.hpp"
#include "ampsurf/tags.hpp"

namespace ampsurf {

WbnCheck wbn_applicable(const ChernCharacter& v) {
  const LogInvariants inv = log_invariants(v);
  const Surface& s = v.surface();
  WbnCheck out;
  if (s.is_plane()) {
    out.backing = tags::kWeakBrillNoetherP2;
    out.applicable = inv.delta >= 0;
    out.reason = out.applicable ? "delta >= 0" : "delta = " + to_string(inv.delta) + " < 0";
    return out;
  }

  out.backing = tags::kWeakBrillNoetherFe;
  const Rational nu_f = intersect(inv.nu, fiber_class(s));
  const Rational nu_e = intersect(inv.nu, section_class(s));
  if (inv.delta < 0) {
    out.reason = "delta = " + to_string(inv.delta) + " < 0";
  } else if (nu_f < -1) {
    out.reason = "nu.F = " + to_string(nu_f) + " < -1";
  } else if (nu_e < -1) {
    out.reason = "nu.E = " + to_string(nu_e) + " < -1";
  } else {
    out.applicable = true;
    out.reason = "delta >= 0, nu.F >= -1, nu.E >= -1";
  }
  if (inv.delta >= 0 && nu_f >= -1 && euler_characteristic(v) >= 0) {
    out.converse_predicts_special = nu_e < -1;
  }
  return out;
}

CohomologyTriple wbn_cohomology(const ChernCharacter& v) {
  const WbnCheck check = wbn_applicable(v);
  if (!check.applicable) {
    throw PreconditionError("weak Brill-Noether does not apply to " + to_string(v) + ": " + check.reason);
  }
  const std::int64_t chi = euler_characteristic(v);
  return {std::max<std::int64_t>(chi, 0), std::max<std::int64_t>(-chi, 0), 0};
}

NonspecialTrace nonspecial_all_twists(const ChernCharacter& v) {
  const SlopeCheck slopes = ample_gg_slope_hypotheses(v);
  if (!slopes.holds) {
    throw PreconditionError("slope hypotheses fail for " + to_string(v) + ": " + slopes.detail);
  }
  const LogInvariants inv = log_invariants(v);
  const Surface& s = v.surface();
  NonspecialTrace trace;
  trace.steps.push_back({"delta(v(K+D)) = delta(v)", inv.delta, Rational(0), false, inv.delta >= 0});
  if (s.is_plane()) {
    trace.holds = trace.steps.front().holds;
    return trace;
  }

  const DivisorClass e_cls = section_class(s);
  const DivisorClass f_cls = fiber_class(s);
  const DivisorClass k = canonical_class(s);
  // Over irreducible D the minima are D.F = 0 (at D = F) and D.E = -e (at D = E).
  const Rational min_df = 0;
  const Rational min_de = -s.e();

  const Rational nu_f = intersect(inv.nu, f_cls);
  const Rational k_f = intersect(k, f_cls);
  const Rational worst_f = nu_f + k_f + min_df;
  trace.steps.push_back({"nu.F + K.F + min D.F > -1", worst_f, Rational(-1), true, worst_f > -1});

  const Rational nu_e = intersect(inv.nu, e_cls);
  const Rational k_e = intersect(k, e_cls);
  const Rational worst_e = nu_e + k_e + min_de;
  trace.steps.push_back({"nu.E + K.E + min D.E >= -1", worst_e, Rational(-1), false, worst_e >= -1});

  trace.fiber_margin = worst_f + 1;
  trace.section_margin = worst_e + 1;
  trace.holds = std::all_of(trace.steps.begin(), trace.steps.end(), [](const TraceStep& t) { return t.holds; });
  return trace;
}

}  // namespace ampsurf
