#include "cli.hpp"

#include <map>
#include <optional>

#include "CLI11.hpp"
#include "ampsurf/errors.hpp"
#include "ampsurf/report.hpp"

namespace ampsurf::cli {
namespace {

struct Options {
  std::string surface = "P2";
  std::optional<std::string> ch;
  std::optional<std::string> log;
  std::string format = "text";
  std::int64_t s = 2;
  bool direct = false;
  bool not_stable = false;
  std::int64_t d = 0;
};

void add_character_options(CLI::App* sub, Options& o) {
  sub->add_option("--surface", o.surface, "P2 or F<e>, e.g. F1")->capture_default_str();
  auto* ch = sub->add_option("--ch", o.ch, "character r:c1:ch2, c1 = a (P2) or a,b (aE+bF)");
  auto* log = sub->add_option("--log", o.log, "character r:nu:delta, nu as for c1");
  ch->excludes(log);
  log->excludes(ch);
}

void add_common_options(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  sub->add_option("--s", o.s, "excess rank s of the kernel in the asymptotic construction")
      ->check(CLI::Range(std::int64_t{2}, std::int64_t{1000000}))
      ->capture_default_str();
  sub->add_flag("--direct", o.direct, "bound n for v itself instead of its normalization");
  sub->add_flag("--not-stable", o.not_stable, "do not assert that M(v) is nonempty");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact positivity verdicts for Chern characters on P2 and Hirzebruch surfaces", "ampsurf"};
  app.require_subcommand(1);
  Options o;

  const std::vector<std::pair<Command, std::string>> character_commands = {
      {Command::Invariants, "numerical invariants and general cohomology"},
      {Command::Obstructions, "necessary conditions for ampleness"},
      {Command::GlobalGeneration, "global generation of the general sheaf"},
      {Command::AmpleGG, "ampleness of the general globally generated bundle"},
      {Command::Asymptotic, "asymptotic ampleness certificate with minimal multiplier"},
      {Command::BadCurves, "irreducible classes D with chi(v(K+D)) < 0"},
      {Command::Report, "every section"},
  };
  std::map<CLI::App*, Command> commands;
  for (const auto& [cmd, help] : character_commands) {
    CLI::App* sub = app.add_subcommand(to_string(cmd), help);
    add_character_options(sub, o);
    add_common_options(sub, o);
    commands[sub] = cmd;
  }
  CLI::App* gieseker = app.add_subcommand("gieseker", "cokernel family O(-d)^2 -> O(-1)^4 on P2");
  gieseker->add_option("--d", o.d, "degree parameter, d >= 4")->required();
  add_common_options(gieseker, o);
  commands[gieseker] = Command::Gieseker;

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }

  Command command = Command::Report;
  for (const auto& [sub, cmd] : commands) {
    if (sub->parsed()) command = cmd;
  }
  try {
    Inputs inputs = command == Command::Gieseker
                        ? make_gieseker_inputs(o.d)
                        : make_inputs(o.surface, o.ch ? std::optional<std::string_view>(*o.ch) : std::nullopt,
                                      o.log ? std::optional<std::string_view>(*o.log) : std::nullopt);
    if (command != Command::Gieseker && o.direct) inputs.mode = AsymptoticMode::Direct;
    inputs.kernel_rank = o.s;
    inputs.stability_asserted = !o.not_stable;
    const Report report = run_report(inputs, command);
    out << emit(report, o.format == "json" ? Format::Structured : Format::Text);
    return kExitOk;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const PreconditionError& e) {
    // Integrality failures are input errors, not unmet hypotheses.
    const std::string what = e.what();
    err << "error: " << what << "\n";
    return what.rfind("integrality", 0) == 0 ? kExitParse : kExitPrecondition;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace ampsurf::cli
