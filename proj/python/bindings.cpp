#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "ampsurf/ampleness.hpp"
#include "ampsurf/errors.hpp"
#include "ampsurf/report.hpp"

namespace py = pybind11;
using namespace ampsurf;

namespace {

py::object fraction(const Rational& q) {
  py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(py::int_(py::str(q.get_num().get_str())), py::int_(py::str(q.get_den().get_str())));
}

py::list coords(const DivisorClass& d) {
  py::list out;
  out.append(fraction(d.x()));
  if (!d.surface().is_plane()) out.append(fraction(d.y()));
  return out;
}

ChernCharacter character(const std::string& surface, const std::string& ch) {
  return parse_character(Surface::parse(surface), ch);
}

AsymptoticMode mode_from(const std::string& mode) {
  if (mode == "normalized") return AsymptoticMode::Normalized;
  if (mode == "direct") return AsymptoticMode::Direct;
  throw ParseError("mode must be 'normalized' or 'direct', got '" + mode + "'");
}

Report build(const std::string& surface, std::optional<std::string> ch, std::optional<std::string> log,
             const std::string& command, const std::string& mode, std::int64_t s, bool stable) {
  Inputs in = make_inputs(surface, ch ? std::optional<std::string_view>(*ch) : std::nullopt,
                          log ? std::optional<std::string_view>(*log) : std::nullopt);
  in.mode = mode_from(mode);
  in.kernel_rank = s;
  in.stability_asserted = stable;
  return run_report(in, parse_command(command));
}

py::object as_dict(const Report& r) {
  py::object loads = py::module_::import("json").attr("loads");
  return loads(emit(r, Format::Structured));
}

}  // namespace

PYBIND11_MODULE(_ampsurf, m) {
  m.doc() = "Exact positivity verdicts for Chern characters on P2 and Hirzebruch surfaces";

  // Translators run most recent first, so subclasses are registered last.
  auto& base = py::register_exception<Error>(m, "AmpsurfError");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());

  m.attr("SCHEMA") = std::string(kReportSchema);

  m.def(
      "log_invariants",
      [](const std::string& surface, const std::string& ch) {
        const LogInvariants inv = log_invariants(character(surface, ch));
        py::dict out;
        out["mu"] = fraction(inv.mu);
        out["nu"] = coords(inv.nu);
        out["delta"] = fraction(inv.delta);
        return out;
      },
      py::arg("surface"), py::arg("ch"));

  m.def(
      "euler_characteristic",
      [](const std::string& surface, const std::string& ch) { return euler_characteristic(character(surface, ch)); },
      py::arg("surface"), py::arg("ch"));

  m.def(
      "ample_gg_verdict",
      [](const std::string& surface, const std::string& ch) {
        return to_string(ample_gg_verdict(character(surface, ch)).verdict);
      },
      py::arg("surface"), py::arg("ch"));

  m.def(
      "effective_n_bound",
      [](const std::string& surface, const std::string& ch, std::int64_t s) {
        const MultiplierBound b = effective_n_bound(character(surface, ch), s);
        return py::make_tuple(fraction(b.closed_form), b.n_min);
      },
      py::arg("surface"), py::arg("ch"), py::arg("s") = 2);

  m.def(
      "report",
      [](const std::string& surface, std::optional<std::string> ch, std::optional<std::string> log,
         const std::string& command, const std::string& mode, std::int64_t s, bool stable) {
        return as_dict(build(surface, std::move(ch), std::move(log), command, mode, s, stable));
      },
      py::arg("surface"), py::arg("ch") = py::none(), py::arg("log") = py::none(), py::arg("command") = "report",
      py::arg("mode") = "normalized", py::arg("s") = 2, py::arg("stable") = true);

  m.def(
      "report_text",
      [](const std::string& surface, std::optional<std::string> ch, std::optional<std::string> log,
         const std::string& command, const std::string& mode, std::int64_t s, bool stable) {
        return emit(build(surface, std::move(ch), std::move(log), command, mode, s, stable), Format::Text);
      },
      py::arg("surface"), py::arg("ch") = py::none(), py::arg("log") = py::none(), py::arg("command") = "report",
      py::arg("mode") = "normalized", py::arg("s") = 2, py::arg("stable") = true);

  m.def(
      "gieseker_report", [](std::int64_t d) { return as_dict(run_report(make_gieseker_inputs(d), Command::Gieseker)); },
      py::arg("d"));
}
