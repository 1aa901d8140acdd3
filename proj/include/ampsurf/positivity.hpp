#pragma once

#include <string>
#include <vector>

#include "ampsurf/chern.hpp"

namespace ampsurf {

/// One evaluated inequality. `margin` is lhs - rhs; the inequality holds when
/// the margin is positive (strict) or nonnegative (non-strict).
struct Condition {
  std::string id;
  std::string inequality;
  bool holds = false;
  Rational margin;
  std::string backing;

  bool operator==(const Condition&) const = default;
};

enum class ObstructionVerdict { Unobstructed, Obstructed, ExceptionalTangentBundle };

std::string to_string(ObstructionVerdict v);

/// Checklist of necessary conditions for a stable bundle of character v to be
/// ample. Stability is an input assumption, never computed.
struct ObstructionReport {
  std::vector<Condition> conditions;
  ObstructionVerdict verdict = ObstructionVerdict::Unobstructed;
  bool stability_assumed = true;
  std::vector<std::string> notes;

  bool operator==(const ObstructionReport&) const = default;
};

struct FlCheck {
  bool holds = false;
  /// nu^2/2 - delta/(r+1)
  Rational margin;

  bool operator==(const FlCheck&) const = default;
};

/// Result of checking a block of slope inequalities.
struct SlopeCheck {
  bool holds = false;
  std::vector<Condition> conditions;
  /// First failing inequality, empty when all hold.
  std::string detail;
};

bool bogomolov_check(const ChernCharacter& v);

FlCheck fulton_lazarsfeld_check(const ChernCharacter& v);
/// Same inequality from logarithmic invariants alone (no integrality needed).
FlCheck fulton_lazarsfeld_check(std::int64_t rank, const LogInvariants& inv);

bool is_tangent_bundle_character(const ChernCharacter& v);

ObstructionReport necessary_obstructions(const ChernCharacter& v);

/// mu > 1 + 1/r on P2; nu.F > 1 and nu.E > 1 on F_0; nu.F > 1 and nu.E >= 1
/// on F_e with e >= 1.
SlopeCheck ample_gg_slope_hypotheses(const ChernCharacter& v);
/// As above but nu.H > 1 on P2. Equivalent to nu - H being big and nef.
SlopeCheck asymptotic_slope_hypotheses(const ChernCharacter& v);

/// Which numbered case of the global-generation classification fires for
/// the general L-prioritary sheaf of character v.
struct GGClassification {
  bool globally_generated = false;
  /// 1-based case number when globally generated, 0 otherwise.
  int case_id = 0;
  std::string backing;
  /// Firing case, or the first condition that rules global generation out.
  std::string detail;
  std::vector<Condition> evaluated;

  bool operator==(const GGClassification&) const = default;
};

/// Requires delta >= 0, r >= 2, and nu nef on F_e. Throws PreconditionError.
GGClassification classify_global_generation(const ChernCharacter& v);

/// One-sided criterion chi(v(-L)) >= 0; false means the criterion is silent.
/// Requires delta >= 0, r >= 2 and nu big and nef. Throws PreconditionError.
bool gg_quick_criterion(const ChernCharacter& v);

}  // namespace ampsurf
