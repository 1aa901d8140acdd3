#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ampsurf/chern.hpp"

namespace ampsurf {

struct CohomologyTriple {
  std::int64_t h0 = 0;
  std::int64_t h1 = 0;
  std::int64_t h2 = 0;

  bool operator==(const CohomologyTriple&) const = default;
};

/// Whether weak Brill-Noether describes the general prioritary sheaf of a
/// character. On P2 the only hypothesis is delta >= 0; on F_e additionally
/// nu.F >= -1 and nu.E >= -1.
struct WbnCheck {
  bool applicable = false;
  /// First failing hypothesis, or a summary of the satisfied ones.
  std::string reason;
  /// Tag of the vanishing theorem consulted.
  std::string backing;
  /// F_e only, set when chi >= 0, nu.F >= -1 and delta >= 0: the converse
  /// direction then says the general sheaf has special cohomology exactly
  /// when nu.E < -1.
  std::optional<bool> converse_predicts_special;

  bool operator==(const WbnCheck&) const = default;
};

WbnCheck wbn_applicable(const ChernCharacter& v);

/// Cohomology (max(chi,0), max(-chi,0), 0) of the general member.
/// Throws PreconditionError when weak Brill-Noether does not apply.
CohomologyTriple wbn_cohomology(const ChernCharacter& v);

/// One inequality in a symbolic verification: value > bound (strict) or
/// value >= bound.
struct TraceStep {
  std::string label;
  Rational value;
  Rational bound;
  bool strict = false;
  bool holds = false;

  bool operator==(const TraceStep&) const = default;
};

/// Verification that v(K+D) meets the weak Brill-Noether hypotheses for every
/// irreducible curve class D, using the worst cases D.F = 0 and D.E = -e.
struct NonspecialTrace {
  std::vector<TraceStep> steps;
  bool holds = false;
  /// nu(v(K+D)).F + 1 at the worst D (must be > 0); zero on P2.
  Rational fiber_margin;
  /// nu(v(K+D)).E + 1 at the worst D (must be >= 0); zero on P2.
  Rational section_margin;

  bool operator==(const NonspecialTrace&) const = default;
};

/// Requires the slope hypotheses of the ample-and-globally-generated
/// theorem (see positivity.hpp); throws PreconditionError otherwise.
NonspecialTrace nonspecial_all_twists(const ChernCharacter& v);

}  // namespace ampsurf
