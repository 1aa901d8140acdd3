#include "doctest.h"

#include <functional>

#include "ampsurf/errors.hpp"
#include "ampsurf/report.hpp"
#include "ampsurf/tags.hpp"
#include "json.hpp"

using namespace ampsurf;
using nlohmann::json;

namespace {

std::size_t count_of(const std::string& haystack, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) ++n;
  return n;
}

void walk(const json& j, const std::function<void(const std::string&, const json&)>& fn) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      fn(k, v);
      walk(v, fn);
    }
  } else if (j.is_array()) {
    for (const auto& v : j) walk(v, fn);
  }
}

std::vector<Inputs> corpus() {
  return {
      make_inputs("P2", "2:3:3/2", std::nullopt),
      make_inputs("P2", "2:4:0", std::nullopt),
      make_inputs("P2", std::nullopt, "2:3/2:7/8"),
      make_inputs("F1", "2:3,5:5/2", std::nullopt),
      make_inputs("F0", "3:4,5:-1", std::nullopt),
      make_inputs("F2", "1:-1,3:-5", std::nullopt),
      make_inputs("P2", "2:0:1", std::nullopt),
      make_gieseker_inputs(12),
  };
}

}  // namespace

TEST_CASE("command names") {
  for (Command c : {Command::Invariants, Command::Obstructions, Command::GlobalGeneration, Command::AmpleGG,
                    Command::Asymptotic, Command::BadCurves, Command::Gieseker, Command::Report}) {
    CHECK(parse_command(to_string(c)) == c);
  }
  CHECK(to_string(Command::GlobalGeneration) == "gg");
  CHECK_THROWS_AS(parse_command("everything"), ParseError);
}

TEST_CASE("inputs") {
  const Inputs a = make_inputs("P2", "2:3:3/2", std::nullopt);
  CHECK(a.surface == Surface::projective_plane());
  CHECK(to_string(a.character) == "(2, 3H, 3/2)");
  const Inputs b = make_inputs("F1", "2:3,5:5/2", std::nullopt);
  CHECK(to_string(b.character) == "(2, 3E+5F, 5/2)");
  CHECK_THROWS_WITH_AS(make_inputs("F2", "2:3,5:1/3", std::nullopt), doctest::Contains("integrality"),
                       PreconditionError);
  CHECK_THROWS_AS(make_inputs("F2", std::nullopt, std::nullopt), ParseError);
  CHECK_THROWS_AS(make_inputs("P2", "2:3:3/2", "2:3/2:3/8"), ParseError);
  CHECK_THROWS_AS(make_inputs("Q2", "2:3:3/2", std::nullopt), ParseError);
}

TEST_CASE("report contents for worked examples") {
  const Report p2 = run_report(make_inputs("P2", "2:4:0", std::nullopt));
  REQUIRE(p2.ample_gg);
  CHECK(p2.ample_gg->verdict == AmpleGGVerdict::AmpleGeneral);
  CHECK(verdict_line(p2).find("ample-gg=AmpleGeneral") != std::string::npos);

  const Report intro = run_report(make_inputs("P2", std::nullopt, "2:3/2:7/8"));
  REQUIRE(intro.invariants);
  CHECK(intro.invariants->fulton_lazarsfeld.holds);
  REQUIRE(intro.obstructions);
  CHECK(intro.obstructions->verdict == ObstructionVerdict::Obstructed);
  CHECK(intro.asymptotic.has_value());
  CHECK(intro.omitted.count("bad_curves") == 1);

  const Report g = run_report(make_gieseker_inputs(12), Command::Gieseker);
  REQUIRE(g.asymptotic);
  CHECK(g.asymptotic->n_min == 2);
  CHECK(g.asymptotic->mode == AsymptoticMode::Direct);
  CHECK_FALSE(g.obstructions.has_value());
}

TEST_CASE("omitted sections name the failing precondition") {
  const Report r = run_report(make_inputs("P2", "2:0:1", std::nullopt));
  REQUIRE(r.omitted.count("global_generation"));
  CHECK(r.omitted.at("global_generation").find("delta") != std::string::npos);
  REQUIRE(r.omitted.count("asymptotic"));
  CHECK_FALSE(r.asymptotic.has_value());
}

TEST_CASE("focused commands propagate precondition failures") {
  const Inputs in = make_inputs("P2", "2:0:1", std::nullopt);
  CHECK_THROWS_AS(run_report(in, Command::GlobalGeneration), PreconditionError);
  CHECK_THROWS_AS(run_report(in, Command::Asymptotic), PreconditionError);
  CHECK_NOTHROW(run_report(in, Command::Invariants));
  CHECK_NOTHROW(run_report(in, Command::AmpleGG));
}

TEST_CASE("structured output round trips") {
  for (const Inputs& in : corpus()) {
    for (Command c : {Command::Report, Command::Invariants, Command::AmpleGG}) {
      const Report r = run_report(in, c);
      const std::string text = emit(r, Format::Structured);
      CAPTURE(text);
      const Report back = parse_structured(text);
      CHECK(back == r);
      CHECK(emit(back, Format::Structured) == text);
    }
  }
}

TEST_CASE("text output has exactly one verdict line") {
  for (const Inputs& in : corpus()) {
    const std::string text = emit(run_report(in), Format::Text);
    CHECK(count_of(text, "verdict:") == 1);
    CHECK(count_of(text, "\nverdict:") == 1);
  }
}

TEST_CASE("no floating point in either format") {
  for (const Inputs& in : corpus()) {
    const Report r = run_report(in);
    const json j = json::parse(emit(r, Format::Structured));
    walk(j, [](const std::string&, const json& v) { CHECK_FALSE(v.is_number_float()); });
    const std::string text = emit(r, Format::Text);
    for (std::size_t i = 1; i + 1 < text.size(); ++i) {
      const bool decimal = text[i] == '.' && std::isdigit(static_cast<unsigned char>(text[i - 1])) &&
                           std::isdigit(static_cast<unsigned char>(text[i + 1]));
      CHECK_FALSE(decimal);
    }
  }
}

TEST_CASE("every section cites a known tag") {
  for (const Inputs& in : corpus()) {
    const json j = json::parse(emit(run_report(in), Format::Structured));
    for (const auto& [name, section] : j.at("sections").items()) {
      CAPTURE(name);
      REQUIRE(section.contains("backing"));
      CHECK(tags::is_known(section.at("backing").get<std::string>()));
    }
    walk(j, [](const std::string& key, const json& v) {
      if (key == "backing" || key == "bound_backing" || key == "example_backing") {
        CHECK(tags::is_known(v.get<std::string>()));
      }
    });
  }
}

TEST_CASE("structured output carries the schema and exact rationals") {
  const json j = json::parse(emit(run_report(make_inputs("P2", "2:3:3/2", std::nullopt)), Format::Structured));
  CHECK(j.at("schema") == "ampsurf-report/1");
  const json delta = j.at("sections").at("invariants").at("log").at("delta");
  CHECK(delta.at("num") == 3);
  CHECK(delta.at("den") == 8);
}

TEST_CASE("parse_structured rejects bad documents") {
  CHECK_THROWS_AS(parse_structured("{"), ParseError);
  CHECK_THROWS_AS(parse_structured("{}"), ParseError);
  std::string text = emit(run_report(make_inputs("P2", "2:4:0", std::nullopt)), Format::Structured);
  const auto pos = text.find("ampsurf-report/1");
  text.replace(pos, 16, "ampsurf-report/9");
  CHECK_THROWS_AS(parse_structured(text), ParseError);
}

TEST_CASE("emission is deterministic") {
  for (const Inputs& in : corpus()) {
    CHECK(emit(run_report(in), Format::Structured) == emit(run_report(in), Format::Structured));
    CHECK(emit(run_report(in), Format::Text) == emit(run_report(in), Format::Text));
  }
}
