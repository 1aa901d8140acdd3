#include "ampsurf/ampleness.hpp"

#include <algorithm>

#include "ampsurf/errors.hpp"
#include "ampsurf/tags.hpp"

namespace ampsurf {
namespace {

// Hard cap on the number of classes the bad-curve scan may visit.
constexpr std::int64_t kScanCap = 1'000'000;
// Hard cap for the multiplier search.
constexpr std::int64_t kSearchCap = 100'000'000;

std::int64_t chi_adjoint_twist(const ChernCharacter& v, const DivisorClass& d) {
  return euler_characteristic(twist(v, canonical_class(v.surface()) + d));
}

void require_big_nef_b(const ChernCharacter& v, const DivisorClass& b) {
  if (!is_big_and_nef(b)) {
    throw PreconditionError("B = nu - H = " + to_string(b) + " is not big and nef for " + to_string(v));
  }
}

// Reason the ample-gg hypotheses fail, or nothing.
std::optional<std::string> ample_gg_hypothesis_failure(const ChernCharacter& v, const SlopeCheck& slopes,
                                                       std::optional<GGClassification>& gg) {
  if (v.rank() < 2) return "rank: the theorem needs rank >= 2";
  if (!slopes.holds) return "slope: " + slopes.detail;
  if (!bogomolov_check(v)) return "bogomolov: delta < 0, no semistable sheaves";
  try {
    gg = classify_global_generation(v);
  } catch (const PreconditionError& err) {
    return std::string("global-generation: ") + err.what();
  }
  if (!gg->globally_generated) return "global-generation: " + gg->detail;
  return std::nullopt;
}

BadCurve make_bad_curve(const ChernCharacter& v, const DivisorClass& d, std::int64_t chi) {
  const DivisorClass adjoint = canonical_class(v.surface()) + d;
  if (is_effective(adjoint)) {
    throw InternalError("K+D = " + to_string(adjoint) + " is effective but chi(v(K+D)) = " + std::to_string(chi) +
                        " < 0 for " + to_string(v));
  }
  auto shape = bad_curve_shape(d);
  if (!shape) throw InternalError("bad curve " + to_string(d) + " outside the finite list for " + to_string(v));
  return {d, chi, *shape, dimension_count(v, d)};
}

}  // namespace

DimensionCount dimension_count(const ChernCharacter& v, const DivisorClass& curve) {
  DimensionCount out;
  out.d = h0_line_bundle(curve) - 1;
  out.c = intersect(v.c1(), curve) - v.rank() + 1;
  out.pass = out.d < out.c;
  return out;
}

std::int64_t splitting_codim(std::int64_t k, std::int64_t rank, std::int64_t degree) {
  if (rank < 1 || k < 1 || k > rank) {
    throw PreconditionError("splitting_codim needs 1 <= k <= r, got k = " + std::to_string(k) +
                            ", r = " + std::to_string(rank));
  }
  if (degree < rank) throw PreconditionError("splitting_codim needs slope >= 1");
  return k * (degree - rank + k);
}

std::optional<std::string> bad_curve_shape(const DivisorClass& d) {
  if (!d.is_integral()) return std::nullopt;
  const Surface& s = d.surface();
  if (s.is_plane()) {
    if (d.x() == 1) return "H";
    if (d.x() == 2) return "2H";
    return std::nullopt;
  }
  const Rational& a = d.x();
  const Rational& b = d.y();
  const int e = s.e();
  if (e == 0) {
    if (a == 1 && b >= 0) return "E+bF";
    if (b == 1 && a >= 0) return "bE+F";
    return std::nullopt;
  }
  if (a == 0 && b == 1) return "F";
  if (e == 1 && a == 2 && b == 2) return "2E+2F";
  if (e >= 2 && a == 1 && b == 0) return "E";
  if (a == 1 && b >= (e == 1 ? 0 : e)) return "E+bF";
  return std::nullopt;
}

std::vector<BadCurve> enumerate_bad_curves(const ChernCharacter& v) {
  std::optional<GGClassification> gg;
  const SlopeCheck slopes = ample_gg_slope_hypotheses(v);
  if (auto failure = ample_gg_hypothesis_failure(v, slopes, gg)) {
    throw PreconditionError("bad-curve scan needs the ample-gg hypotheses: " + *failure);
  }
  const Surface& s = v.surface();
  std::vector<BadCurve> out;
  std::int64_t visited = 0;
  auto visit = [&](const DivisorClass& d) {
    if (++visited > kScanCap) {
      throw InternalError("bad-curve scan exceeded " + std::to_string(kScanCap) + " classes for " + to_string(v));
    }
    return chi_adjoint_twist(v, d);
  };

  if (s.is_plane()) {
    // chi(v((d-3)H)) is increasing in d >= 1 since mu > 1.
    for (std::int64_t d = 1;; ++d) {
      const DivisorClass cls(s, d);
      const std::int64_t chi = visit(cls);
      if (chi >= 0) break;
      out.push_back(make_bad_curve(v, cls, chi));
    }
    return out;
  }

  const std::int64_t e = s.e();
  const DivisorClass f_cls = fiber_class(s);
  const DivisorClass e_cls = section_class(s);
  if (const std::int64_t chi = visit(f_cls); chi < 0) out.push_back(make_bad_curve(v, f_cls, chi));
  if (e >= 1) {
    if (const std::int64_t chi = visit(e_cls); chi < 0) out.push_back(make_bad_curve(v, e_cls, chi));
  }
  // Remaining irreducible classes: aE + (ae+t)F with a >= 1, t >= 0. Writing
  // nu = xE + yF, chi/r = (x-1+a) S(a,t) - delta where S is positive and
  // nondecreasing in a and t, so chi is increasing in both.
  for (std::int64_t a = 1;; ++a) {
    const DivisorClass base(s, a, a * e);
    if (visit(base) >= 0) break;
    for (std::int64_t t = 0;; ++t) {
      const DivisorClass cls(s, a, a * e + t);
      const std::int64_t chi = visit(cls);
      if (chi >= 0) break;
      if (is_irreducible_curve_class(cls)) {
        out.push_back(make_bad_curve(v, cls, chi));
      }
    }
  }
  return out;
}

std::string to_string(AmpleGGVerdict v) {
  return v == AmpleGGVerdict::AmpleGeneral ? "AmpleGeneral" : "HypothesesFail";
}

AmpleGGCertificate ample_gg_verdict(const ChernCharacter& v) {
  AmpleGGCertificate cert;
  const SlopeCheck slopes = ample_gg_slope_hypotheses(v);
  cert.slope_conditions = slopes.conditions;
  cert.notes.push_back("stability of v is assumed; the verdict concerns the general member of M(v)");

  std::optional<GGClassification> gg;
  const auto failure = ample_gg_hypothesis_failure(v, slopes, gg);
  cert.gg = gg;
  if (failure) {
    cert.verdict = AmpleGGVerdict::HypothesesFail;
    cert.reason = *failure;
    if (is_tangent_bundle_character(v)) {
      cert.notes.push_back("v = ch T_P2: the tangent bundle is both globally generated and ample");
    }
    return cert;
  }

  cert.notes.push_back("M(v) is open and dense in the L-prioritary stack, so the classification applies to M(v)");
  cert.nonspecial = nonspecial_all_twists(v);
  cert.bad_curves = enumerate_bad_curves(v);
  cert.notes.push_back("every other irreducible D has chi(v(K+D)) >= 0, so V|_D has no trivial quotient");

  const bool counts_pass = std::all_of(cert.bad_curves.begin(), cert.bad_curves.end(),
                                       [](const BadCurve& b) { return b.count.pass; });
  if (!cert.nonspecial->holds) {
    cert.verdict = AmpleGGVerdict::HypothesesFail;
    cert.reason = "nonspecial: twists v(K+D) leave the weak Brill-Noether range";
  } else if (!counts_pass) {
    cert.verdict = AmpleGGVerdict::HypothesesFail;
    cert.reason = "dimension-count: some bad curve has d >= c";
  } else {
    cert.verdict = AmpleGGVerdict::AmpleGeneral;
  }
  return cert;
}

Normalization normalize_character(const ChernCharacter& v) {
  const Surface& s = v.surface();
  const LogInvariants inv = log_invariants(v);
  const Rational nu_l = intersect(inv.nu, restriction_curve(s));
  if (nu_l <= 1) throw PreconditionError("normalization needs nu.L > 1, got " + to_string(nu_l));
  const std::int64_t m = to_int64(ceil(nu_l)) - 2;
  // N.L = 1 and, on F_e, N.E = 0.
  const DivisorClass unit = s.is_plane() ? DivisorClass(s, 1) : DivisorClass(s, 1, s.e());
  DivisorClass n = unit * Rational(m);
  ChernCharacter normalized = twist(v, -n);
  return {std::move(normalized), std::move(n), m};
}

ChernCharacter kernel_character(const ChernCharacter& v, std::int64_t n, std::int64_t s) {
  if (n < 1) throw PreconditionError("kernel_character needs n >= 1");
  if (s < 2) throw PreconditionError("kernel_character needs s >= 2");
  const DivisorClass h = polarization(v.surface());
  const std::int64_t copies = n * v.rank() + s;
  const Rational k = copies;
  const Rational nq = n;
  DivisorClass c1 = h * k - v.c1() * nq;
  Rational ch2 = k * intersect(h, h) / 2 - nq * v.ch2();
  return ChernCharacter::make(s, std::move(c1), std::move(ch2));
}

MultiplierBound effective_n_bound(const ChernCharacter& v, std::int64_t s) {
  if (s < 2) throw PreconditionError("effective_n_bound needs s >= 2");
  const LogInvariants inv = log_invariants(v);
  const DivisorClass b = inv.nu - polarization(v.surface());
  require_big_nef_b(v, b);
  const Rational r = v.rank();
  const Rational sq = s;
  // 2 s^2 delta(u) = n r (n r B^2 + s B^2 - 2 s delta)
  MultiplierBound out;
  out.closed_form = 2 * sq * inv.delta / (r * intersect(b, b)) - sq / r;
  out.n_min = std::max<std::int64_t>(1, to_int64(ceil(out.closed_form)));
  return out;
}

std::int64_t minimal_multiplier_by_search(const ChernCharacter& v, std::int64_t s) {
  for (std::int64_t n = 1; n <= kSearchCap; ++n) {
    if (log_invariants(kernel_character(v, n, s)).delta >= 0) return n;
  }
  throw InternalError("no multiplier below " + std::to_string(kSearchCap) + " for " + to_string(v));
}

std::string to_string(AsymptoticMode m) { return m == AsymptoticMode::Normalized ? "normalized" : "direct"; }

AsymptoticCertificate asymptotic_ample_certificate(const ChernCharacter& v, std::int64_t s, AsymptoticMode mode) {
  const SlopeCheck slopes = asymptotic_slope_hypotheses(v);
  if (!slopes.holds) throw PreconditionError("asymptotic ampleness hypotheses fail: " + slopes.detail);
  if (!bogomolov_check(v)) throw PreconditionError("asymptotic ampleness needs delta >= 0 for a stable character");
  if (s < 2) throw PreconditionError("kernel rank s must be >= 2");

  const Surface& surf = v.surface();
  const DivisorClass h = polarization(surf);
  const DivisorClass l = restriction_curve(surf);

  Normalization norm = mode == AsymptoticMode::Normalized
                           ? normalize_character(v)
                           : Normalization{v, DivisorClass::zero(surf), 0};
  const ChernCharacter& w = norm.normalized;
  const LogInvariants inv = log_invariants(w);
  DivisorClass b = inv.nu - h;
  require_big_nef_b(w, b);

  const MultiplierBound bound = effective_n_bound(w, s);
  const std::int64_t searched = minimal_multiplier_by_search(w, s);
  if (searched != bound.n_min) {
    throw InternalError("closed-form multiplier " + std::to_string(bound.n_min) + " disagrees with search " +
                        std::to_string(searched) + " for " + to_string(w));
  }
  const std::int64_t n = bound.n_min;
  ChernCharacter u = kernel_character(w, n, s);
  Rational u_delta = log_invariants(u).delta;
  std::optional<Rational> previous;
  if (n > 1) previous = log_invariants(kernel_character(w, n - 1, s)).delta;

  const std::int64_t dual_twist_chi = euler_characteristic(twist(dual(w), h - l));
  const ChernCharacter u_dual_h = twist(dual(u), h);
  const ChernCharacter u_dual_hl = twist(dual(u), h - l);
  const std::int64_t kernel_chi = euler_characteristic(u_dual_hl);
  WbnCheck wbn_h = wbn_applicable(u_dual_h);
  WbnCheck wbn_hl = wbn_applicable(u_dual_hl);
  const bool gg = u_delta >= 0 && gg_quick_criterion(u_dual_h);

  std::vector<std::string> notes;
  notes.push_back("stability of v is assumed; the verdict concerns the general member of M(n v)");
  if (mode == AsymptoticMode::Normalized && norm.multiple > 0) {
    notes.push_back("ampleness of the general member of M(n v(-N)) transfers to M(n v) by twisting with nef N");
  }
  if (mode == AsymptoticMode::Direct) {
    notes.push_back("direct mode: v itself is written as a quotient of O(H)^{nr+s} without normalizing");
  }
  const bool identity = kernel_chi == -n * dual_twist_chi;
  const bool verified = slopes.holds && is_big_and_nef(b) && u_delta >= 0 && dual_twist_chi <= 0 &&
                        kernel_chi >= 0 && identity && wbn_h.applicable && wbn_hl.applicable && gg;
  if (!verified) notes.push_back("certificate incomplete: a construction step fails for this character");

  Rational b_squared = intersect(b, b);
  return AsymptoticCertificate{
      .mode = mode,
      .input = v,
      .normalized = w,
      .twist = norm.twist,
      .twist_multiple = norm.multiple,
      .b = std::move(b),
      .b_squared = std::move(b_squared),
      .s = s,
      .n_bound = bound.closed_form,
      .n_min = n,
      .n_search = searched,
      .kernel = std::move(u),
      .kernel_delta = std::move(u_delta),
      .kernel_delta_previous = std::move(previous),
      .dual_twist_chi = dual_twist_chi,
      .kernel_dual_twist_chi = kernel_chi,
      .kernel_dual_wbn = std::move(wbn_h),
      .kernel_dual_twist_wbn = std::move(wbn_hl),
      .kernel_dual_globally_generated = gg,
      .verified = verified,
      .notes = std::move(notes),
  };
}

ChernCharacter gieseker_character(std::int64_t d) {
  if (d < 4) throw PreconditionError("Gieseker character needs d >= 4, got " + std::to_string(d));
  const Surface p2 = Surface::projective_plane();
  return ChernCharacter::make(2, DivisorClass(p2, 2 * d - 4), Rational(2 - d * d));
}

}  // namespace ampsurf
