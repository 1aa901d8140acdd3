#include "ampsurf/report.hpp"

#include <sstream>

#include "ampsurf/errors.hpp"
#include "ampsurf/tags.hpp"
#include "json.hpp"

namespace ampsurf {
namespace {

using json = nlohmann::ordered_json;

constexpr std::array<std::pair<Command, std::string_view>, 8> kCommandNames = {{
    {Command::Invariants, "invariants"},
    {Command::Obstructions, "obstructions"},
    {Command::GlobalGeneration, "gg"},
    {Command::AmpleGG, "ample-gg"},
    {Command::Asymptotic, "asymptotic"},
    {Command::BadCurves, "bad-curves"},
    {Command::Gieseker, "gieseker"},
    {Command::Report, "report"},
}};

// ----- encoding -------------------------------------------------------------

json enc_integer(const Integer& z) {
  if (z.fits_slong_p()) return json(static_cast<std::int64_t>(z.get_si()));
  return json(z.get_str());
}

json enc(const Rational& q) {
  json j;
  j["num"] = enc_integer(q.get_num());
  j["den"] = enc_integer(q.get_den());
  return j;
}

json enc(const DivisorClass& d) {
  json j;
  j["text"] = to_string(d);
  j["coords"] = json::array();
  j["coords"].push_back(enc(d.x()));
  if (!d.surface().is_plane()) j["coords"].push_back(enc(d.y()));
  return j;
}

json enc(const ChernCharacter& v) {
  json j;
  j["text"] = to_text(v);
  j["rank"] = v.rank();
  j["c1"] = enc(v.c1());
  j["ch2"] = enc(v.ch2());
  return j;
}

json enc(const LogInvariants& inv) {
  json j;
  j["mu"] = enc(inv.mu);
  j["nu"] = enc(inv.nu);
  j["delta"] = enc(inv.delta);
  return j;
}

json enc(const Condition& c) {
  json j;
  j["id"] = c.id;
  j["inequality"] = c.inequality;
  j["holds"] = c.holds;
  j["margin"] = enc(c.margin);
  j["backing"] = c.backing;
  return j;
}

json enc(const CohomologyTriple& c);
json enc(const TraceStep& t);
json enc(const BadCurve& b);
json enc(const GGClassification& g);
json enc(const NonspecialTrace& t);

template <class T>
json enc_list(const std::vector<T>& items) {
  json j = json::array();
  for (const auto& item : items) j.push_back(enc(item));
  return j;
}

template <class T>
json enc_opt(const std::optional<T>& value) {
  return value ? enc(*value) : json(nullptr);
}

json enc(const FlCheck& fl) {
  json j;
  j["holds"] = fl.holds;
  j["margin"] = enc(fl.margin);
  j["backing"] = tags::kFultonLazarsfeld;
  return j;
}

json enc(const WbnCheck& w) {
  json j;
  j["applicable"] = w.applicable;
  j["reason"] = w.reason;
  j["backing"] = w.backing;
  j["converse_predicts_special"] = w.converse_predicts_special ? json(*w.converse_predicts_special) : json(nullptr);
  return j;
}

json enc(const CohomologyTriple& c) {
  json j;
  j["h0"] = c.h0;
  j["h1"] = c.h1;
  j["h2"] = c.h2;
  return j;
}

json enc(const InvariantsSection& s) {
  json j;
  j["backing"] = tags::kRiemannRoch;
  j["log"] = enc(s.log);
  j["c2"] = enc_integer(s.c2);
  j["chi"] = s.chi;
  j["bogomolov"] = s.bogomolov;
  j["fulton_lazarsfeld"] = enc(s.fulton_lazarsfeld);
  j["wbn"] = enc(s.wbn);
  j["cohomology"] = enc_opt(s.cohomology);
  return j;
}

json enc(const ObstructionReport& o) {
  json j;
  j["backing"] = tags::kStableSlopeBound;
  j["verdict"] = to_string(o.verdict);
  j["stability_assumed"] = o.stability_assumed;
  j["conditions"] = enc_list(o.conditions);
  j["notes"] = o.notes;
  return j;
}

json enc(const GGClassification& g) {
  json j;
  j["backing"] = g.backing;
  j["globally_generated"] = g.globally_generated;
  j["case"] = g.case_id;
  j["detail"] = g.detail;
  j["evaluated"] = enc_list(g.evaluated);
  return j;
}

json enc(const TraceStep& t) {
  json j;
  j["label"] = t.label;
  j["value"] = enc(t.value);
  j["bound"] = enc(t.bound);
  j["strict"] = t.strict;
  j["holds"] = t.holds;
  return j;
}

json enc(const NonspecialTrace& t) {
  json j;
  j["backing"] = tags::kNonspecialTwists;
  j["holds"] = t.holds;
  j["fiber_margin"] = enc(t.fiber_margin);
  j["section_margin"] = enc(t.section_margin);
  j["steps"] = enc_list(t.steps);
  return j;
}

json enc(const DimensionCount& c) {
  json j;
  j["backing"] = tags::kDimensionCount;
  j["d"] = c.d;
  j["c"] = enc(c.c);
  j["pass"] = c.pass;
  return j;
}

json enc(const BadCurve& b) {
  json j;
  j["curve"] = enc(b.curve);
  j["chi_twist"] = b.chi_twist;
  j["shape"] = b.shape;
  j["count"] = enc(b.count);
  return j;
}

json enc_bad_curves(const std::vector<BadCurve>& curves) {
  json j;
  j["backing"] = tags::kBadCurves;
  j["curves"] = enc_list(curves);
  return j;
}

json enc(const AmpleGGCertificate& c) {
  json j;
  j["backing"] = tags::kAmpleGlobalGeneration;
  j["verdict"] = to_string(c.verdict);
  j["reason"] = c.reason;
  j["slope_conditions"] = enc_list(c.slope_conditions);
  j["global_generation"] = enc_opt(c.gg);
  j["nonspecial"] = enc_opt(c.nonspecial);
  j["bad_curves"] = enc_list(c.bad_curves);
  j["notes"] = c.notes;
  return j;
}

json enc(const AsymptoticCertificate& c) {
  json j;
  j["backing"] = tags::kAsymptoticAmpleness;
  j["mode"] = to_string(c.mode);
  j["input"] = enc(c.input);
  j["normalized"] = enc(c.normalized);
  j["twist"] = enc(c.twist);
  j["twist_multiple"] = c.twist_multiple;
  j["b"] = enc(c.b);
  j["b_squared"] = enc(c.b_squared);
  j["s"] = c.s;
  j["bound_backing"] = tags::kEffectiveMultiplier;
  j["n_bound"] = enc(c.n_bound);
  j["n_min"] = c.n_min;
  j["n_search"] = c.n_search;
  j["kernel"] = enc(c.kernel);
  j["kernel_delta"] = enc(c.kernel_delta);
  j["kernel_delta_previous"] = enc_opt(c.kernel_delta_previous);
  j["dual_twist_chi"] = c.dual_twist_chi;
  j["kernel_dual_twist_chi"] = c.kernel_dual_twist_chi;
  j["kernel_dual_wbn"] = enc(c.kernel_dual_wbn);
  j["kernel_dual_twist_wbn"] = enc(c.kernel_dual_twist_wbn);
  j["kernel_dual_globally_generated"] = c.kernel_dual_globally_generated;
  j["verified"] = c.verified;
  j["notes"] = c.notes;
  return j;
}

json enc(const Inputs& in) {
  json j;
  j["surface"] = in.surface.name();
  j["character"] = enc(in.character);
  j["character_text"] = in.character_text;
  j["input_form"] = in.input_form;
  j["stability_asserted"] = in.stability_asserted;
  j["mode"] = to_string(in.mode);
  j["kernel_rank"] = in.kernel_rank;
  j["gieseker_d"] = in.gieseker_d ? json(*in.gieseker_d) : json(nullptr);
  return j;
}

json enc(const Report& r) {
  json j;
  j["schema"] = r.schema;
  j["command"] = to_string(r.command);
  j["inputs"] = enc(r.inputs);
  json sections = json::object();
  if (r.invariants) sections["invariants"] = enc(*r.invariants);
  if (r.obstructions) sections["obstructions"] = enc(*r.obstructions);
  if (r.global_generation) sections["global_generation"] = enc(*r.global_generation);
  if (r.bad_curves) sections["bad_curves"] = enc_bad_curves(*r.bad_curves);
  if (r.ample_gg) sections["ample_gg"] = enc(*r.ample_gg);
  if (r.asymptotic) {
    sections["asymptotic"] = enc(*r.asymptotic);
    if (r.inputs.input_form == "gieseker") sections["asymptotic"]["example_backing"] = tags::kGiesekerExample;
  }
  j["sections"] = std::move(sections);
  json omitted = json::object();
  for (const auto& [name, reason] : r.omitted) omitted[name] = reason;
  j["omitted"] = std::move(omitted);
  j["warnings"] = r.warnings;
  j["verdict"] = verdict_line(r);
  return j;
}

// ----- decoding -------------------------------------------------------------

[[noreturn]] void bad(const std::string& what) { throw ParseError("structured report: " + what); }

const json& at(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing key '") + key + "'");
  return j.at(key);
}

Integer dec_integer(const json& j) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return Integer(j.get<std::string>(), 10);
  bad("expected integer");
}

Rational dec_rational(const json& j) {
  Rational q(dec_integer(at(j, "num")), dec_integer(at(j, "den")));
  q.canonicalize();
  return q;
}

std::int64_t dec_i64(const json& j) {
  if (!j.is_number_integer()) bad("expected integer");
  return j.get<std::int64_t>();
}

bool dec_bool(const json& j) {
  if (!j.is_boolean()) bad("expected boolean");
  return j.get<bool>();
}

std::string dec_str(const json& j) {
  if (!j.is_string()) bad("expected string");
  return j.get<std::string>();
}

std::vector<std::string> dec_strings(const json& j) {
  std::vector<std::string> out;
  for (const auto& item : j) out.push_back(dec_str(item));
  return out;
}

DivisorClass dec_divisor(const json& j, const Surface& s) {
  const json& coords = at(j, "coords");
  if (!coords.is_array() || static_cast<int>(coords.size()) != s.picard_rank()) bad("divisor coordinate count");
  if (s.is_plane()) return DivisorClass(s, dec_rational(coords[0]));
  return DivisorClass(s, dec_rational(coords[0]), dec_rational(coords[1]));
}

ChernCharacter dec_character(const json& j, const Surface& s) {
  return ChernCharacter::make(dec_i64(at(j, "rank")), dec_divisor(at(j, "c1"), s), dec_rational(at(j, "ch2")));
}

Condition dec_condition(const json& j) {
  return {dec_str(at(j, "id")), dec_str(at(j, "inequality")), dec_bool(at(j, "holds")), dec_rational(at(j, "margin")),
          dec_str(at(j, "backing"))};
}

std::vector<Condition> dec_conditions(const json& j) {
  std::vector<Condition> out;
  for (const auto& item : j) out.push_back(dec_condition(item));
  return out;
}

WbnCheck dec_wbn(const json& j) {
  WbnCheck w;
  w.applicable = dec_bool(at(j, "applicable"));
  w.reason = dec_str(at(j, "reason"));
  w.backing = dec_str(at(j, "backing"));
  if (const json& c = at(j, "converse_predicts_special"); !c.is_null()) w.converse_predicts_special = dec_bool(c);
  return w;
}

InvariantsSection dec_invariants(const json& j, const Surface& s) {
  const json& log = at(j, "log");
  InvariantsSection out{
      .log = {dec_rational(at(log, "mu")), dec_divisor(at(log, "nu"), s), dec_rational(at(log, "delta"))},
      .c2 = dec_integer(at(j, "c2")),
      .chi = dec_i64(at(j, "chi")),
      .bogomolov = dec_bool(at(j, "bogomolov")),
      .fulton_lazarsfeld = {dec_bool(at(at(j, "fulton_lazarsfeld"), "holds")),
                            dec_rational(at(at(j, "fulton_lazarsfeld"), "margin"))},
      .wbn = dec_wbn(at(j, "wbn")),
      .cohomology = std::nullopt,
  };
  if (const json& c = at(j, "cohomology"); !c.is_null()) {
    out.cohomology = CohomologyTriple{dec_i64(at(c, "h0")), dec_i64(at(c, "h1")), dec_i64(at(c, "h2"))};
  }
  return out;
}

ObstructionVerdict dec_obstruction_verdict(const std::string& s) {
  for (auto v : {ObstructionVerdict::Unobstructed, ObstructionVerdict::Obstructed,
                 ObstructionVerdict::ExceptionalTangentBundle}) {
    if (to_string(v) == s) return v;
  }
  bad("unknown obstruction verdict '" + s + "'");
}

ObstructionReport dec_obstructions(const json& j) {
  ObstructionReport o;
  o.verdict = dec_obstruction_verdict(dec_str(at(j, "verdict")));
  o.stability_assumed = dec_bool(at(j, "stability_assumed"));
  o.conditions = dec_conditions(at(j, "conditions"));
  o.notes = dec_strings(at(j, "notes"));
  return o;
}

GGClassification dec_gg(const json& j) {
  GGClassification g;
  g.backing = dec_str(at(j, "backing"));
  g.globally_generated = dec_bool(at(j, "globally_generated"));
  g.case_id = static_cast<int>(dec_i64(at(j, "case")));
  g.detail = dec_str(at(j, "detail"));
  g.evaluated = dec_conditions(at(j, "evaluated"));
  return g;
}

NonspecialTrace dec_trace(const json& j) {
  NonspecialTrace t;
  t.holds = dec_bool(at(j, "holds"));
  t.fiber_margin = dec_rational(at(j, "fiber_margin"));
  t.section_margin = dec_rational(at(j, "section_margin"));
  for (const auto& step : at(j, "steps")) {
    t.steps.push_back({dec_str(at(step, "label")), dec_rational(at(step, "value")), dec_rational(at(step, "bound")),
                       dec_bool(at(step, "strict")), dec_bool(at(step, "holds"))});
  }
  return t;
}

std::vector<BadCurve> dec_bad_curve_list(const json& j, const Surface& s) {
  std::vector<BadCurve> out;
  for (const auto& item : j) {
    const json& count = at(item, "count");
    out.push_back({dec_divisor(at(item, "curve"), s), dec_i64(at(item, "chi_twist")), dec_str(at(item, "shape")),
                   {dec_i64(at(count, "d")), dec_rational(at(count, "c")), dec_bool(at(count, "pass"))}});
  }
  return out;
}

AmpleGGCertificate dec_ample(const json& j, const Surface& s) {
  AmpleGGCertificate c;
  const std::string verdict = dec_str(at(j, "verdict"));
  if (verdict == to_string(AmpleGGVerdict::AmpleGeneral)) {
    c.verdict = AmpleGGVerdict::AmpleGeneral;
  } else if (verdict == to_string(AmpleGGVerdict::HypothesesFail)) {
    c.verdict = AmpleGGVerdict::HypothesesFail;
  } else {
    bad("unknown ample-gg verdict '" + verdict + "'");
  }
  c.reason = dec_str(at(j, "reason"));
  c.slope_conditions = dec_conditions(at(j, "slope_conditions"));
  if (const json& g = at(j, "global_generation"); !g.is_null()) c.gg = dec_gg(g);
  if (const json& t = at(j, "nonspecial"); !t.is_null()) c.nonspecial = dec_trace(t);
  c.bad_curves = dec_bad_curve_list(at(j, "bad_curves"), s);
  c.notes = dec_strings(at(j, "notes"));
  return c;
}

AsymptoticMode dec_mode(const std::string& s) {
  if (s == to_string(AsymptoticMode::Normalized)) return AsymptoticMode::Normalized;
  if (s == to_string(AsymptoticMode::Direct)) return AsymptoticMode::Direct;
  bad("unknown mode '" + s + "'");
}

AsymptoticCertificate dec_asymptotic(const json& j, const Surface& s) {
  std::optional<Rational> previous;
  if (const json& p = at(j, "kernel_delta_previous"); !p.is_null()) previous = dec_rational(p);
  return AsymptoticCertificate{
      .mode = dec_mode(dec_str(at(j, "mode"))),
      .input = dec_character(at(j, "input"), s),
      .normalized = dec_character(at(j, "normalized"), s),
      .twist = dec_divisor(at(j, "twist"), s),
      .twist_multiple = dec_i64(at(j, "twist_multiple")),
      .b = dec_divisor(at(j, "b"), s),
      .b_squared = dec_rational(at(j, "b_squared")),
      .s = dec_i64(at(j, "s")),
      .n_bound = dec_rational(at(j, "n_bound")),
      .n_min = dec_i64(at(j, "n_min")),
      .n_search = dec_i64(at(j, "n_search")),
      .kernel = dec_character(at(j, "kernel"), s),
      .kernel_delta = dec_rational(at(j, "kernel_delta")),
      .kernel_delta_previous = std::move(previous),
      .dual_twist_chi = dec_i64(at(j, "dual_twist_chi")),
      .kernel_dual_twist_chi = dec_i64(at(j, "kernel_dual_twist_chi")),
      .kernel_dual_wbn = dec_wbn(at(j, "kernel_dual_wbn")),
      .kernel_dual_twist_wbn = dec_wbn(at(j, "kernel_dual_twist_wbn")),
      .kernel_dual_globally_generated = dec_bool(at(j, "kernel_dual_globally_generated")),
      .verified = dec_bool(at(j, "verified")),
      .notes = dec_strings(at(j, "notes")),
  };
}

Inputs dec_inputs(const json& j) {
  const Surface s = Surface::parse(dec_str(at(j, "surface")));
  std::optional<std::int64_t> d;
  if (const json& g = at(j, "gieseker_d"); !g.is_null()) d = dec_i64(g);
  return Inputs{
      .surface = s,
      .character = dec_character(at(j, "character"), s),
      .character_text = dec_str(at(j, "character_text")),
      .input_form = dec_str(at(j, "input_form")),
      .stability_asserted = dec_bool(at(j, "stability_asserted")),
      .mode = dec_mode(dec_str(at(j, "mode"))),
      .kernel_rank = dec_i64(at(j, "kernel_rank")),
      .gieseker_d = d,
  };
}

// ----- text -----------------------------------------------------------------

std::string mark(bool ok) { return ok ? "[ok]  " : "[FAIL]"; }

void text_conditions(std::ostringstream& out, const std::vector<Condition>& conditions) {
  for (const auto& c : conditions) {
    out << "  " << mark(c.holds) << " " << c.inequality << "  margin " << to_string(c.margin) << "  [" << c.backing
        << "]\n";
  }
}

void text_wbn(std::ostringstream& out, const char* label, const WbnCheck& w) {
  out << "  " << label << ": " << (w.applicable ? "applicable" : "not applicable") << " (" << w.reason << ") ["
      << w.backing << "]\n";
}

std::string text(const Report& r) {
  std::ostringstream out;
  const Inputs& in = r.inputs;
  out << "ampsurf " << to_string(r.command) << " (schema " << r.schema << ")\n";
  out << "surface: " << in.surface.name() << "\n";
  out << "character: " << to_string(in.character) << "  [" << to_text(in.character) << "]";
  if (in.input_form != "ch") out << "  from " << in.input_form << " " << in.character_text;
  out << "\n";
  out << "stability: " << (in.stability_asserted ? "asserted by caller, not verified" : "not asserted") << "\n";

  if (r.invariants) {
    const InvariantsSection& s = *r.invariants;
    out << "\n== invariants [" << tags::kRiemannRoch << "]\n";
    out << "  mu = " << to_string(s.log.mu) << "\n";
    out << "  nu = " << to_string(s.log.nu) << "\n";
    out << "  delta = " << to_string(s.log.delta) << "\n";
    out << "  c2 = " << s.c2.get_str() << "\n";
    out << "  chi = " << s.chi << "\n";
    out << "  " << mark(s.bogomolov) << " delta >= 0  [" << tags::kBogomolov << "]\n";
    out << "  " << mark(s.fulton_lazarsfeld.holds) << " nu^2/2 > delta/(r+1)  margin "
        << to_string(s.fulton_lazarsfeld.margin) << "  [" << tags::kFultonLazarsfeld << "]\n";
    text_wbn(out, "weak Brill-Noether", s.wbn);
    if (s.cohomology) {
      out << "  general cohomology: h0 = " << s.cohomology->h0 << ", h1 = " << s.cohomology->h1
          << ", h2 = " << s.cohomology->h2 << "\n";
    }
  }
  if (r.obstructions) {
    out << "\n== necessary conditions for ampleness\n";
    text_conditions(out, r.obstructions->conditions);
    out << "  result: " << to_string(r.obstructions->verdict) << "\n";
    for (const auto& n : r.obstructions->notes) out << "  note: " << n << "\n";
  }
  if (r.global_generation) {
    const GGClassification& g = *r.global_generation;
    out << "\n== global generation of the general sheaf [" << g.backing << "]\n";
    text_conditions(out, g.evaluated);
    if (g.globally_generated) {
      out << "  result: globally generated, case " << g.case_id << " (" << g.detail << ")\n";
    } else {
      out << "  result: not globally generated (" << g.detail << ")\n";
    }
  }
  auto text_bad = [&](const std::vector<BadCurve>& curves) {
    if (curves.empty()) out << "  no irreducible class D has chi(v(K+D)) < 0\n";
    for (const auto& b : curves) {
      out << "  D = " << to_string(b.curve) << " (" << b.shape << "): chi(v(K+D)) = " << b.chi_twist
          << ", d = " << b.count.d << (b.count.pass ? " < " : " >= ") << "c = " << to_string(b.count.c) << "  "
          << mark(b.count.pass) << "\n";
    }
  };
  if (r.bad_curves) {
    out << "\n== bad curves [" << tags::kBadCurves << "]\n";
    text_bad(*r.bad_curves);
  }
  if (r.ample_gg) {
    const AmpleGGCertificate& c = *r.ample_gg;
    out << "\n== ample and globally generated [" << tags::kAmpleGlobalGeneration << "]\n";
    text_conditions(out, c.slope_conditions);
    if (c.gg) {
      out << "  global generation: "
          << (c.gg->globally_generated ? "case " + std::to_string(c.gg->case_id) : "fails (" + c.gg->detail + ")")
          << " [" << c.gg->backing << "]\n";
    }
    if (c.nonspecial) {
      for (const auto& step : c.nonspecial->steps) {
        out << "  " << mark(step.holds) << " " << step.label << ": " << to_string(step.value) << "  ["
            << tags::kNonspecialTwists << "]\n";
      }
    }
    if (c.verdict == AmpleGGVerdict::AmpleGeneral) text_bad(c.bad_curves);
    out << "  result: " << to_string(c.verdict);
    if (!c.reason.empty()) out << " (" << c.reason << ")";
    out << "\n";
    for (const auto& n : c.notes) out << "  note: " << n << "\n";
  }
  if (r.asymptotic) {
    const AsymptoticCertificate& c = *r.asymptotic;
    out << "\n== asymptotic ampleness [" << tags::kAsymptoticAmpleness << "], " << to_string(c.mode) << " mode\n";
    if (c.mode == AsymptoticMode::Normalized) {
      out << "  normalized: " << to_string(c.normalized) << " = v(-N), N = " << to_string(c.twist) << "\n";
    }
    out << "  B = nu - H = " << to_string(c.b) << ", B^2 = " << to_string(c.b_squared) << "\n";
    out << "  bound: n >= " << to_string(c.n_bound) << "  [" << tags::kEffectiveMultiplier << "]\n";
    out << "  n_min = " << c.n_min << " (search: " << c.n_search << ")\n";
    out << "  kernel u = " << to_string(c.kernel) << ", delta(u) = " << to_string(c.kernel_delta) << "\n";
    if (c.kernel_delta_previous) {
      out << "  delta(u) at n_min - 1 = " << to_string(*c.kernel_delta_previous) << "\n";
    }
    out << "  " << mark(c.dual_twist_chi <= 0) << " chi(v*(H-L)) = " << c.dual_twist_chi << " <= 0\n";
    out << "  " << mark(c.kernel_dual_twist_chi >= 0) << " chi(u*(H-L)) = " << c.kernel_dual_twist_chi << " >= 0\n";
    text_wbn(out, "u*(H)", c.kernel_dual_wbn);
    text_wbn(out, "u*(H-L)", c.kernel_dual_twist_wbn);
    out << "  " << mark(c.kernel_dual_globally_generated) << " u*(H) globally generated  ["
        << tags::kGlobalGenerationCriterion << "]\n";
    out << "  result: " << (c.verified ? "verified" : "incomplete") << "\n";
    for (const auto& n : c.notes) out << "  note: " << n << "\n";
  }
  if (!r.omitted.empty()) {
    out << "\n== omitted sections\n";
    for (const auto& [name, reason] : r.omitted) out << "  " << name << ": " << reason << "\n";
  }
  if (!r.warnings.empty()) {
    out << "\n";
    for (const auto& w : r.warnings) out << "warning: " << w << "\n";
  }
  out << "\n" << verdict_line(r) << "\n";
  return out.str();
}

bool runs(Command section_owner, Command command) {
  return command == Command::Report || command == section_owner;
}

}  // namespace

std::string to_string(Command c) {
  for (const auto& [cmd, name] : kCommandNames) {
    if (cmd == c) return std::string(name);
  }
  return "?";
}

Command parse_command(std::string_view name) {
  for (const auto& [cmd, n] : kCommandNames) {
    if (n == name) return cmd;
  }
  throw ParseError("unknown command '" + std::string(name) + "'");
}

Inputs make_inputs(std::string_view surface, std::optional<std::string_view> ch,
                   std::optional<std::string_view> log) {
  if (ch.has_value() == log.has_value()) throw ParseError("give exactly one of --ch and --log");
  const Surface s = Surface::parse(surface);
  ChernCharacter v = ch ? parse_character(s, *ch) : parse_log_character(s, *log);
  return Inputs{
      .surface = s,
      .character = std::move(v),
      .character_text = std::string(ch ? *ch : *log),
      .input_form = ch ? "ch" : "log",
  };
}

Inputs make_gieseker_inputs(std::int64_t d) {
  ChernCharacter v = gieseker_character(d);
  std::string text = to_text(v);
  return Inputs{
      .surface = v.surface(),
      .character = std::move(v),
      .character_text = std::move(text),
      .input_form = "gieseker",
      .mode = AsymptoticMode::Direct,
      .gieseker_d = d,
  };
}

Report run_report(const Inputs& inputs, Command command) {
  Report rep{.command = command, .inputs = inputs};
  const ChernCharacter& v = inputs.character;
  const bool lenient = command == Command::Report;
  auto guarded = [&](const char* section, auto&& body) {
    if (!lenient) {
      body();
      return;
    }
    try {
      body();
    } catch (const PreconditionError& err) {
      rep.omitted[section] = err.what();
    }
  };

  InvariantsSection inv{
      .log = log_invariants(v),
      .c2 = v.c2(),
      .chi = euler_characteristic(v),
      .bogomolov = bogomolov_check(v),
      .fulton_lazarsfeld = fulton_lazarsfeld_check(v),
      .wbn = wbn_applicable(v),
      .cohomology = std::nullopt,
  };
  if (inv.wbn.applicable) inv.cohomology = wbn_cohomology(v);
  rep.invariants = std::move(inv);

  if (runs(Command::Obstructions, command)) {
    rep.obstructions = necessary_obstructions(v);
    rep.obstructions->stability_assumed = inputs.stability_asserted;
  }
  if (runs(Command::GlobalGeneration, command)) {
    guarded("global_generation", [&] { rep.global_generation = classify_global_generation(v); });
  }
  if (runs(Command::BadCurves, command)) {
    guarded("bad_curves", [&] { rep.bad_curves = enumerate_bad_curves(v); });
  }
  if (runs(Command::AmpleGG, command)) rep.ample_gg = ample_gg_verdict(v);
  if (runs(Command::Asymptotic, command) || command == Command::Gieseker) {
    guarded("asymptotic",
            [&] { rep.asymptotic = asymptotic_ample_certificate(v, inputs.kernel_rank, inputs.mode); });
  }

  if (inputs.stability_asserted) {
    rep.warnings.push_back("stability of the character is assumed by the caller, not verified");
  } else {
    rep.warnings.push_back("stability not asserted: verdicts about M(v) are vacuous when M(v) is empty");
  }
  if (!rep.invariants->bogomolov) rep.warnings.push_back("delta < 0: no semistable sheaf has this character");
  return rep;
}

std::string verdict_line(const Report& r) {
  std::string out = "verdict:";
  auto add = [&](const std::string& part) {
    out += out.back() == ':' ? " " : "; ";
    out += part;
  };
  if (r.obstructions) add("obstructions=" + to_string(r.obstructions->verdict));
  if (r.global_generation) {
    add(r.global_generation->globally_generated ? "gg=case-" + std::to_string(r.global_generation->case_id)
                                                : std::string("gg=no"));
  }
  if (r.bad_curves) add("bad-curves=" + std::to_string(r.bad_curves->size()));
  if (r.ample_gg) add("ample-gg=" + to_string(r.ample_gg->verdict));
  if (r.asymptotic) {
    add("asymptotic=" + std::string(r.asymptotic->verified ? "verified" : "incomplete") +
        " n_min=" + std::to_string(r.asymptotic->n_min));
  }
  if (out == "verdict:" && r.invariants) {
    add("delta=" + to_string(r.invariants->log.delta) + " chi=" + std::to_string(r.invariants->chi));
  }
  return out;
}

std::string emit(const Report& report, Format format) {
  if (format == Format::Text) return text(report);
  return enc(report).dump(2) + "\n";
}

Report parse_structured(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& err) {
    throw ParseError(std::string("structured report: ") + err.what());
  }
  try {
    Report rep{.schema = dec_str(at(j, "schema")),
               .command = parse_command(dec_str(at(j, "command"))),
               .inputs = dec_inputs(at(j, "inputs"))};
    if (rep.schema != kReportSchema) bad("unsupported schema '" + rep.schema + "'");
    const Surface s = rep.inputs.surface;
    const json& sections = at(j, "sections");
    if (sections.contains("invariants")) rep.invariants = dec_invariants(sections.at("invariants"), s);
    if (sections.contains("obstructions")) rep.obstructions = dec_obstructions(sections.at("obstructions"));
    if (sections.contains("global_generation")) rep.global_generation = dec_gg(sections.at("global_generation"));
    if (sections.contains("bad_curves")) {
      rep.bad_curves = dec_bad_curve_list(at(sections.at("bad_curves"), "curves"), s);
    }
    if (sections.contains("ample_gg")) rep.ample_gg = dec_ample(sections.at("ample_gg"), s);
    if (sections.contains("asymptotic")) rep.asymptotic = dec_asymptotic(sections.at("asymptotic"), s);
    for (const auto& [name, reason] : at(j, "omitted").items()) rep.omitted[name] = dec_str(reason);
    rep.warnings = dec_strings(at(j, "warnings"));
    return rep;
  } catch (const json::exception& err) {
    throw ParseError(std::string("structured report: ") + err.what());
  } catch (const PreconditionError& err) {
    throw ParseError(std::string("structured report: ") + err.what());
  }
}

}  // namespace ampsurf
