#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ampsurf/ampleness.hpp"
#include "ampsurf/chern.hpp"
#include "ampsurf/cohomology.hpp"
#include "ampsurf/positivity.hpp"

namespace ampsurf {

inline constexpr std::string_view kReportSchema = "ampsurf-report/1";

enum class Command { Invariants, Obstructions, GlobalGeneration, AmpleGG, Asymptotic, BadCurves, Gieseker, Report };

std::string to_string(Command c);
/// Subcommand name (`invariants`, `ample-gg`, ...). Throws ParseError.
Command parse_command(std::string_view name);

struct Inputs {
  Surface surface;
  ChernCharacter character;
  /// The text the character was given as.
  std::string character_text;
  /// `ch` for r:c1:ch2, `log` for r:nu:delta, `gieseker` for the Gieseker family.
  std::string input_form = "ch";
  bool stability_asserted = true;
  AsymptoticMode mode = AsymptoticMode::Normalized;
  std::int64_t kernel_rank = 2;
  std::optional<std::int64_t> gieseker_d;

  bool operator==(const Inputs&) const = default;
};

/// Builds validated inputs from textual fields. Exactly one of `ch` and `log`
/// must be given. Throws ParseError for malformed tokens and
/// PreconditionError for characters violating integrality or rank.
Inputs make_inputs(std::string_view surface, std::optional<std::string_view> ch,
                   std::optional<std::string_view> log);
/// Inputs for the Gieseker family member with parameter d on P2.
Inputs make_gieseker_inputs(std::int64_t d);

struct InvariantsSection {
  LogInvariants log;
  Integer c2;
  std::int64_t chi = 0;
  bool bogomolov = false;
  FlCheck fulton_lazarsfeld;
  WbnCheck wbn;
  std::optional<CohomologyTriple> cohomology;

  bool operator==(const InvariantsSection&) const = default;
};

struct Report {
  std::string schema = std::string(kReportSchema);
  Command command = Command::Report;
  Inputs inputs;
  std::optional<InvariantsSection> invariants;
  std::optional<ObstructionReport> obstructions;
  std::optional<GGClassification> global_generation;
  std::optional<std::vector<BadCurve>> bad_curves;
  std::optional<AmpleGGCertificate> ample_gg;
  std::optional<AsymptoticCertificate> asymptotic;
  /// Requested sections whose preconditions failed, with the reason.
  std::map<std::string, std::string> omitted;
  std::vector<std::string> warnings;

  bool operator==(const Report&) const = default;
};

/// Runs the sections belonging to `command`. For Command::Report every
/// precondition failure becomes an `omitted` entry; for the focused commands
/// it propagates as PreconditionError.
Report run_report(const Inputs& inputs, Command command = Command::Report);

/// One-line summary, starting with `verdict:`.
std::string verdict_line(const Report& report);

enum class Format { Text, Structured };

/// Deterministic rendering. Structured output is JSON with exact rationals as
/// {"num": n, "den": d}; no floating point appears in either format.
std::string emit(const Report& report, Format format);

/// Inverse of emit(report, Format::Structured). Throws ParseError.
Report parse_structured(std::string_view json_text);

}  // namespace ampsurf
