#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "aeroplane/coding.hpp"
#include "aeroplane/eau.hpp"
#include "aeroplane/exchange.hpp"
#include "aeroplane/families.hpp"
#include "aeroplane/lamination.hpp"
#include "aeroplane/report.hpp"
#include "aeroplane/svg.hpp"
#include "aeroplane/verify.hpp"

namespace {

using namespace aeroplane;

constexpr const char* kVersion = "0.1.0";

struct Globals {
  bool json = false;
  bool strict = false;
  bool timing = false;
  std::string out;
};

struct Output {
  Report report;
  Json result = nullptr;
  std::string text;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json arc_json(const Arc& a) { return Json{{"lo", to_string(a.lo)}, {"hi", to_string(a.hi)}}; }

void write_or_print(const Globals& g, const std::string& content) {
  if (g.out.empty()) {
    std::cout << content;
  } else {
    svg::write_file(g.out, content);
  }
}

int emit(const Globals& g, const std::string& command, const Output& o, double seconds) {
  std::string body;
  if (g.json) {
    Json doc{{"schema", 1}, {"tool", "aeroplane"}, {"version", kVersion}, {"command", command}};
    if (!o.result.is_null()) doc["result"] = o.result;
    doc["claims"] = o.report.claims_json();
    doc["summary"] = Json{{"pass", o.report.count(Status::Pass)},
                          {"fail", o.report.count(Status::Fail)},
                          {"flagged", o.report.count(Status::Flagged)}};
    if (g.timing) doc["timing"] = Json{{"seconds", seconds}};
    body = doc.dump(2) + "\n";
  } else {
    body = o.text;
    if (!o.report.empty()) body += o.report.to_text();
    if (g.timing) body += "time " + std::to_string(seconds) + " s\n";
  }
  write_or_print(g, body);
  std::size_t flagged = o.report.count(Status::Flagged);
  if (flagged > 0 && !g.strict) std::cerr << "warning: " << flagged << " flagged claim(s)\n";
  return o.report.passed(g.strict) ? 0 : 1;
}

ScenarioConfig scenario_from(const std::string& name, std::size_t k, std::size_t n) {
  if (name == "2.1" || name == "basic") return basic_capture_scenario();
  if (name == "2.5" || name == "level") return level_capture_scenario(k);
  if (k > n) throw UsageError("--k must not exceed --n");
  if (name == "2.7" || name == "substituted") {
    if (n == 0) throw UsageError("the substituted scenario needs --n >= 1");
    return substituted_capture_scenario(k, n);
  }
  if (name == "2.8" || name == "mating") return mating_scenario(k, n);
  throw UsageError("unknown scenario '" + name + "'");
}

std::string join_args(int argc, char** argv) {
  std::string out;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--timing") continue;
    if (!out.empty()) out += ' ';
    out += arg;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symbolic dynamics of the aeroplane lamination map"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  Globals g;
  app.add_flag("--json", g.json, "Emit a JSON report");
  app.add_flag("--strict", g.strict, "Treat flagged claims as failures");
  app.add_flag("--timing", g.timing, "Include wall time in the output");
  app.add_option("-o,--output", g.out, "Write output to a file");

  std::string angle_text;
  std::size_t depth = 12;
  bool refine_c = false;
  auto* itinerary_cmd = app.add_subcommand("itinerary", "Itinerary of an angle under doubling");
  itinerary_cmd->add_option("angle", angle_text, "Angle as num/den")->required();
  itinerary_cmd->add_option("--depth", depth, "Number of letters");
  itinerary_cmd->add_flag("--refine-c", refine_c, "Split C into UC and BC");

  std::string word_text;
  bool suffixes = false;
  auto* arc_cmd = app.add_subcommand("arc", "Upper trace of D(w)");
  arc_cmd->add_option("word", word_text, "Restricted admissible word")->required();
  arc_cmd->add_flag("--suffixes", suffixes, "Print the arc of every suffix");

  std::string first_text, second_text;
  auto* order_cmd = app.add_subcommand("order", "Left-right order of two precritical points");
  order_cmd->add_option("first", first_text)->required();
  order_cmd->add_option("second", second_text)->required();

  std::size_t level = 0;
  auto* family_cmd = app.add_subcommand("family", "Family words up to a level");
  family_cmd->add_option("--level", level, "Highest level");

  std::size_t max_level = 5;
  auto* lengths_cmd = app.add_subcommand("lengths", "Word lengths beside their closed forms");
  lengths_cmd->add_option("--max-level", max_level, "Highest level");

  std::string verify_what = "all";
  auto* verify_cmd = app.add_subcommand("verify", "Run verifiers");
  verify_cmd->add_option("what", verify_what, "order, occurrences, suffixes, eau or all")
      ->check(CLI::IsMember({"order", "occurrences", "suffixes", "eau", "all"}));
  verify_cmd->add_option("--max-level", max_level, "Highest level");

  auto* captures_cmd = app.add_subcommand("captures", "Capture words of a level");
  captures_cmd->add_option("--level", level, "Level n");

  auto* matings_cmd = app.add_subcommand("matings", "Mating angles of a level");
  matings_cmd->add_option("--level", level, "Level n");

  std::string scenario = "2.1";
  std::size_t k = 0, n = 0;
  auto* exchange_cmd = app.add_subcommand("exchange", "Trace disc exchanges");
  exchange_cmd->add_option("--scenario", scenario, "2.1|2.5|2.7|2.8 or basic|level|substituted|mating");
  exchange_cmd->add_option("--k", k, "Lower level");
  exchange_cmd->add_option("--n", n, "Upper level");

  std::size_t max_len = 500;
  auto* search_cmd = app.add_subcommand("search-eau", "Count e a u splits of v_n u_n");
  search_cmd->add_option("--max-len", max_len, "Longest word searched");

  std::string render_what;
  std::string minor_text = "3/7";
  std::size_t render_depth = 8;
  auto* render_cmd = app.add_subcommand("render", "Write an SVG scene");
  render_cmd->add_option("what", render_what, "lamination, scenario or regions")
      ->required()
      ->check(CLI::IsMember({"lamination", "scenario", "regions"}));
  render_cmd->add_option("--depth", render_depth, "Pullback depth");
  render_cmd->add_option("--angle", minor_text, "Angle of the minor leaf");
  render_cmd->add_option("--scenario", scenario, "Scenario to draw");
  render_cmd->add_option("--k", k, "Lower level");
  render_cmd->add_option("--n", n, "Upper level");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::string command = join_args(argc, argv);
  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); };

  try {
    Output o;
    if (*itinerary_cmd) {
      Angle theta = Angle::parse(angle_text);
      Word w = itinerary(theta, depth, refine_c);
      o.result = Json{{"angle", theta.str()}, {"depth", depth}, {"itinerary", w.str()}};
      o.text = w.str() + "\n";
    } else if (*arc_cmd) {
      Word w = Word::parse(word_text);
      if (suffixes) {
        auto arcs = suffix_arcs(w);
        o.result = Json::array();
        for (std::size_t i = 0; i < arcs.size(); ++i) {
          o.result.push_back(Json{{"suffix", w.suffix_from(i).str()}, {"arc", arc_json(arcs[i])}});
          o.text += to_string(arcs[i]) + "  " + w.suffix_from(i).str() + "\n";
        }
      } else {
        Arc a = upper_arc(w);
        o.result = Json{{"word", w.str()}, {"upper_arc", arc_json(a)}};
        o.text = to_string(a) + "\n";
      }
    } else if (*order_cmd) {
      Word a = Word::parse(first_text);
      Word b = Word::parse(second_text);
      bool less = word_less(a, b);
      std::string rel = less ? "<" : ">";
      o.result = Json{{"first", a.str()}, {"second", b.str()}, {"order", rel}};
      o.text = a.str() + " " + rel + " " + b.str() + "\n";
    } else if (*family_cmd) {
      o.result = Json::array();
      for (const auto& l : build_levels(level)) {
        o.result.push_back(Json{{"k", l.k}, {"v", l.v.str()}, {"w", l.w.str()}, {"u", l.u.str()}, {"t", l.t.str()}});
        o.text += "k=" + std::to_string(l.k) + "\n  v " + l.v.str() + "\n  w " + l.w.str() + "\n  u " + l.u.str() +
                  "\n  t " + l.t.str() + "\n";
      }
    } else if (*lengths_cmd) {
      o.report = length_report(max_level);
      o.result = Json::array();
      for (const auto& r : length_rows(max_level)) {
        o.result.push_back(Json{{"n", r.n}, {"v", r.v}, {"t", r.t}, {"u", r.u}});
        o.text += "n=" + std::to_string(r.n) + "  |v|=" + std::to_string(r.v) + "  |t|=" + std::to_string(r.t) +
                  "  |u|=" + std::to_string(r.u) + "\n";
      }
    } else if (*verify_cmd) {
      if (verify_what == "order") o.report = verify_order_chain(max_level);
      if (verify_what == "occurrences") o.report = verify_occurrences(max_level);
      if (verify_what == "suffixes") o.report = verify_suffixes(max_level);
      if (verify_what == "eau") o.report = verify_eau(max_level);
      if (verify_what == "all") o.report = verify_all(max_level);
    } else if (*captures_cmd) {
      o.report = capture_report(level);
      o.result = Json::array();
      for (const auto& c : capture_family(level)) {
        o.result.push_back(Json{{"label", c.label},
                                {"word", c.word.str()},
                                {"preperiod", c.preperiod},
                                {"crossing_arc", arc_json(c.crossing_arc)}});
        o.text += c.label + "  preperiod " + std::to_string(c.preperiod) + "  " + to_string(c.crossing_arc) + "\n";
      }
    } else if (*matings_cmd) {
      o.report = mating_report(level);
      o.result = Json::array();
      for (const auto& m : mating_family(level)) {
        Json k_json = m.k ? Json(*m.k) : Json(nullptr);
        o.result.push_back(Json{{"k", k_json}, {"q", m.q.str()}, {"period", m.orbit.period}, {"cycle", m.cycle.str()}});
        o.text += "q = " + m.q.str() + "  period " + std::to_string(m.orbit.period) + "\n";
      }
    } else if (*exchange_cmd) {
      ScenarioConfig cfg = scenario_from(scenario, k, n);
      Trace trace = trace_scenario(cfg);
      o.report = verify_predicates(cfg);
      if (g.json) {
        std::ostringstream lines;
        for (const auto& e : trace.events) lines << to_json(e).dump() << "\n";
        Json doc{{"schema", 1}, {"tool", "aeroplane"}, {"version", kVersion}, {"command", command}};
        doc["result"] = Json{{"first_step", trace.first_step}, {"final_endpoint", trace.final_endpoint.str()}};
        doc["claims"] = o.report.claims_json();
        write_or_print(g, lines.str() + doc.dump() + "\n");
        return o.report.passed(g.strict) ? 0 : 1;
      }
      for (const auto& e : trace.events) {
        o.text += std::to_string(e.step) + "  " + std::string(to_string(e.kind));
        if (!e.path.empty()) o.text += "(" + e.path + ")";
        o.text += "  " + e.component.row() + "\n";
      }
    } else if (*search_cmd) {
      o.report = decomposition_report(max_len);
    } else if (*render_cmd) {
      std::string svg_text;
      if (render_what == "lamination") {
        svg_text = svg::render_lamination(pullback_lamination(minor_leaf_of(Angle::parse(minor_text)), render_depth));
      } else if (render_what == "regions") {
        svg_text = svg::render_regions();
      } else {
        svg_text = svg::render_scenario(trace_scenario(scenario_from(scenario, k, n)));
      }
      write_or_print(g, svg_text);
      return 0;
    }
    return emit(g, command, o, elapsed());
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::Parse ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
