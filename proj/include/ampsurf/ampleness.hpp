#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ampsurf/chern.hpp"
#include "ampsurf/cohomology.hpp"
#include "ampsurf/positivity.hpp"

namespace ampsurf {

// ---------------------------------------------------------------------------
// Ample globally generated bundles
// ---------------------------------------------------------------------------

/// Dimension d = h0(O(D)) - 1 of the linear system |D| against the lower
/// bound c = r nu.D - r + 1 on the codimension of the locus of bundles with a
/// trivial quotient on a fixed curve of class D. The curve cannot obstruct
/// ampleness of the general bundle when d < c.
struct DimensionCount {
  std::int64_t d = 0;
  Rational c;
  bool pass = false;

  bool operator==(const DimensionCount&) const = default;
};

DimensionCount dimension_count(const ChernCharacter& v, const DivisorClass& curve);

/// Codimension k(delta - r + k) of the locus where a complete family of
/// globally generated rank-r bundles of degree delta on P1 has exactly k
/// independent maps to O. Requires 1 <= k <= r and delta >= r.
std::int64_t splitting_codim(std::int64_t k, std::int64_t rank, std::int64_t degree);

/// An irreducible class D with chi(v(K+D)) < 0.
struct BadCurve {
  DivisorClass curve;
  std::int64_t chi_twist = 0;
  /// Which entry of the finite list of possible bad classes D matches.
  std::string shape;
  DimensionCount count;

  bool operator==(const BadCurve&) const = default;
};

/// Label of the bad-curve shape D belongs to on its surface, if any:
/// H, 2H on P2; E+bF, bE+F on F0; F, 2E+2F, E+bF on F1; F, E, E+bF (b >= e)
/// on F_e, e >= 2.
std::optional<std::string> bad_curve_shape(const DivisorClass& d);

/// Every irreducible class D with chi(v(K+D)) < 0, in scan order.
///
/// chi(v(K+D)) increases along both the section and fiber directions once
/// the slope hypotheses hold, so the scan stops at the first nonnegative value
/// in each direction. Each reported class is checked against the shape list
/// and against the shortcut "K+D effective implies chi >= 0"; a violation
/// raises InternalError. Requires the hypotheses of ample_gg_verdict.
std::vector<BadCurve> enumerate_bad_curves(const ChernCharacter& v);

enum class AmpleGGVerdict { AmpleGeneral, HypothesesFail };
std::string to_string(AmpleGGVerdict v);

struct AmpleGGCertificate {
  AmpleGGVerdict verdict = AmpleGGVerdict::HypothesesFail;
  /// Empty for AmpleGeneral; otherwise `<hypothesis>: <detail>`.
  std::string reason;
  std::vector<Condition> slope_conditions;
  std::optional<GGClassification> gg;
  std::optional<NonspecialTrace> nonspecial;
  std::vector<BadCurve> bad_curves;
  std::vector<std::string> notes;

  bool operator==(const AmpleGGCertificate&) const = default;
};

/// Decides whether the general member of M(v) is ample, assuming it is a
/// globally generated vector bundle. Never throws for a valid character;
/// unmet hypotheses surface as HypothesesFail.
AmpleGGCertificate ample_gg_verdict(const ChernCharacter& v);

// ---------------------------------------------------------------------------
// Asymptotic ampleness
// ---------------------------------------------------------------------------

struct Normalization {
  ChernCharacter normalized;
  /// N with normalized = v(-N).
  DivisorClass twist;
  std::int64_t multiple = 0;
};

/// Twists by -N, N = mH on P2 or m(E+eF) on F_e with m = ceil(nu.L) - 2, so
/// that 1 < nu.L <= 2 afterwards. nu.E is unchanged on F_e.
/// Throws PreconditionError when nu.L <= 1.
Normalization normalize_character(const ChernCharacter& v);

/// Character u = (nr+s) ch O(H) - n v of the kernel of a surjection
/// O(H)^{nr+s} -> V. Requires n >= 1 and s >= 2.
ChernCharacter kernel_character(const ChernCharacter& v, std::int64_t n, std::int64_t s);

struct MultiplierBound {
  /// 2s delta / (r B^2) - s/r with B = nu - H.
  Rational closed_form;
  /// max(1, ceil(closed_form)).
  std::int64_t n_min = 1;

  bool operator==(const MultiplierBound&) const = default;
};

/// Least n with delta(kernel_character(v, n, s)) >= 0, in closed form.
/// Applies to v as given; callers normalize first when they want the
/// normalized construction. Requires nu - H big and nef.
MultiplierBound effective_n_bound(const ChernCharacter& v, std::int64_t s = 2);

/// Same quantity by direct search over n = 1, 2, ...
std::int64_t minimal_multiplier_by_search(const ChernCharacter& v, std::int64_t s = 2);

enum class AsymptoticMode {
  /// Normalize so that 1 < nu.L <= 2, then bound n.
  Normalized,
  /// Bound n for v itself (quotients of O(H)^{nr+s} with no twist).
  Direct,
};
std::string to_string(AsymptoticMode m);

struct AsymptoticCertificate {
  AsymptoticMode mode = AsymptoticMode::Normalized;
  ChernCharacter input;
  ChernCharacter normalized;
  DivisorClass twist;
  std::int64_t twist_multiple = 0;
  /// B = nu(normalized) - H, big and nef.
  DivisorClass b;
  Rational b_squared;
  std::int64_t s = 2;
  Rational n_bound;
  std::int64_t n_min = 1;
  /// Least n found by direct search; equals n_min.
  std::int64_t n_search = 1;
  /// u at n_min.
  ChernCharacter kernel;
  Rational kernel_delta;
  /// delta(u) at n_min - 1, present when n_min > 1.
  std::optional<Rational> kernel_delta_previous;
  /// chi(v*(H-L)) for the normalized character; must be <= 0.
  std::int64_t dual_twist_chi = 0;
  /// chi(u*(H-L)); must equal -n_min * dual_twist_chi and be >= 0.
  std::int64_t kernel_dual_twist_chi = 0;
  WbnCheck kernel_dual_wbn;        // u*(H)
  WbnCheck kernel_dual_twist_wbn;  // u*(H-L)
  /// chi(u*(H)(-L)) >= 0 makes u*(H) globally generated.
  bool kernel_dual_globally_generated = false;
  bool verified = false;
  std::vector<std::string> notes;

  bool operator==(const AsymptoticCertificate&) const = default;
};

/// Certificate that the general member of M(n v) is ample for n >= n_min.
/// Throws PreconditionError when the slope hypotheses fail or delta < 0.
AsymptoticCertificate asymptotic_ample_certificate(const ChernCharacter& v, std::int64_t s = 2,
                                                   AsymptoticMode mode = AsymptoticMode::Normalized);

/// Character (2, (2d-4)H, 2-d^2) of the general cokernel of
/// O(-d)^2 -> O(-1)^4 on P2. Requires d >= 4.
ChernCharacter gieseker_character(std::int64_t d);

}  // namespace ampsurf
