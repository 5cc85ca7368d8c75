#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "aeroplane/coding.hpp"
#include "aeroplane/families.hpp"
#include "aeroplane/report.hpp"

namespace aeroplane {

/// The region strictly between D(x) and D(y), by its upper trace.
struct DPrime {
  Arc upper;
  Word left_word;   // x
  Word right_word;  // y

  Rational midpoint() const { return (upper.lo + upper.hi) / 2; }

  /// Strict membership of the precritical point with word s.
  bool contains(const Word& s) const { return strictly_between(right_word, s, left_word); }
  /// Membership in D' together with D(x) and D(y).
  bool contains_closed(const Word& s) const { return s == left_word || s == right_word || contains(s); }
};

inline DPrime build_dprime(const Word& x, const Word& y) {
  for (const Word* w : {&x, &y}) {
    if (w->empty() || w->back() != Letter::C) throw Error(ErrorKind::MissingFinalC, w->str() + " does not end in C");
  }
  if (x == y) throw Error(ErrorKind::EmptyRegion, "x and y coincide");
  if (!word_less(y, x)) throw Error(ErrorKind::EmptyRegion, "D(y) is not to the right of D(x)");
  Arc upper{upper_arc(y).hi, upper_arc(x).lo};
  if (!(upper.lo < upper.hi)) throw Error(ErrorKind::EmptyRegion, "D(x) and D(y) touch");
  return DPrime{upper, x, y};
}

enum class Tag { Top, Bot };

constexpr std::string_view to_string(Tag t) { return t == Tag::Top ? "top" : "bot"; }

struct AttachedDisc {
  Word prefix;
  Tag tag = Tag::Top;
  Angle attach;

  friend bool operator==(const AttachedDisc& a, const AttachedDisc& b) {
    return a.prefix == b.prefix && a.tag == b.tag && a.attach == b.attach;
  }
};

/// Two lifted copies of D' joined by an exterior arc that starts at
/// left.attach and sweeps `sweep` turns to right.attach.
struct ExchangeComponent {
  AttachedDisc left;
  AttachedDisc right;
  Rational sweep;

  /// "L3 D'(bot) <-> (top) R3 D'"
  std::string row() const {
    return left.prefix.str() + " D'(" + std::string(to_string(left.tag)) + ") <-> (" +
           std::string(to_string(right.tag)) + ") " + right.prefix.str() + " D'";
  }

  bool has_prefix(const Word& p) const { return left.prefix == p || right.prefix == p; }

  const AttachedDisc& partner_of(const Word& p) const { return left.prefix == p ? right : left; }

  /// Whether the exterior arc passes over angle t (open interval).
  bool sweeps_over(const Rational& t) const {
    Rational offset = sweep > 0 ? detail::frac(t - left.attach.value()) : detail::frac(left.attach.value() - t);
    Rational extent = sweep > 0 ? sweep : Rational(-sweep);
    return offset > 0 && offset < extent;
  }
};

inline Tag tag_of(const Angle& t) {
  return (t.value() > 0 && t.value() < Rational(1, 2)) ? Tag::Top : Tag::Bot;
}

inline ExchangeComponent seed_component(const DPrime& dprime) {
  Rational m = dprime.midpoint();
  Angle left(m / 2 + Rational(1, 2));
  Angle right(m / 2);
  return ExchangeComponent{AttachedDisc{Word{region_of(left, false)}, tag_of(left), left},
                           AttachedDisc{Word{region_of(right, false)}, tag_of(right), right}, Rational(1, 2)};
}

namespace detail {

inline AttachedDisc lift_disc(const AttachedDisc& parent, const Angle& angle) {
  Letter e;
  try {
    e = region_of(angle, false);
  } catch (const Error&) {
    throw Error(ErrorKind::LiftMismatch, "lifted attach angle " + angle.str() + " is a chord endpoint");
  }
  if (!transition_allowed(e, parent.prefix[0])) {
    throw Error(ErrorKind::LiftMismatch, "lifted letter " + std::string(to_string(e)) + " cannot precede " +
                                             parent.prefix.str());
  }
  return AttachedDisc{e + parent.prefix, tag_of(angle), angle};
}

}  // namespace detail

/// The two preimage components, on the branches t/2 and t/2 + 1/2.
inline std::array<ExchangeComponent, 2> lift(const ExchangeComponent& c) {
  std::array<ExchangeComponent, 2> out;
  for (std::size_t i = 0; i < 2; ++i) {
    Rational branch = i == 0 ? Rational(0) : Rational(1, 2);
    Angle left(c.left.attach.value() / 2 + branch);
    Rational sweep = c.sweep / 2;
    Angle right(left.value() + sweep);
    out[i] = ExchangeComponent{detail::lift_disc(c.left, left), detail::lift_disc(c.right, right), sweep};
  }
  return out;
}

inline std::vector<ExchangeComponent> pullback_step(const std::vector<ExchangeComponent>& comps) {
  std::vector<ExchangeComponent> out;
  out.reserve(comps.size() * 2);
  for (const auto& c : comps) {
    auto kids = lift(c);
    out.push_back(kids[0]);
    out.push_back(kids[1]);
  }
  return out;
}

namespace detail {

/// The lift of `c` carrying a disc labelled `want`, where want minus its
/// first letter labels a disc of `c`.
inline std::optional<ExchangeComponent> lift_toward(const ExchangeComponent& c, const Word& want) {
  Word rest = want.suffix_from(1);
  bool on_left = c.left.prefix == rest;
  if (!on_left && c.right.prefix != rest) return std::nullopt;
  for (const auto& kid : lift(c)) {
    if ((on_left ? kid.left.prefix : kid.right.prefix) == want) return kid;
  }
  return std::nullopt;
}

}  // namespace detail

/// The component at depth |prefix| with a disc labelled by `prefix`, found
/// by following the chain of lifts from the seed.
inline std::optional<ExchangeComponent> component_containing(const ExchangeComponent& seed, const Word& prefix) {
  if (prefix.empty()) return std::nullopt;
  std::size_t n = prefix.size();
  if (!seed.has_prefix(prefix.suffix_from(n - 1))) return std::nullopt;
  std::optional<ExchangeComponent> current = seed;
  for (std::size_t len = 2; len <= n && current; ++len) {
    current = detail::lift_toward(*current, prefix.suffix_from(n - len));
  }
  return current;
}

enum class ScenarioKind { BasicCapture, LevelCapture, SubstitutedCapture, Mating };

constexpr std::string_view to_string(ScenarioKind k) {
  switch (k) {
    case ScenarioKind::BasicCapture: return "basic-capture";
    case ScenarioKind::LevelCapture: return "level-capture";
    case ScenarioKind::SubstitutedCapture: return "substituted-capture";
    case ScenarioKind::Mating: return "mating";
  }
  return "?";
}

struct ZRule {
  // Also stay right of every S^j(D' u D(x) u D(y)), S the inverse branch
  // along this prefix.
  std::optional<Word> s_prefix;
  std::size_t max_extra = 16;
};

struct ScenarioConfig {
  ScenarioKind kind = ScenarioKind::BasicCapture;
  std::size_t k = 0;
  std::size_t n = 0;
  Word x_word;
  Word y_word;
  Word v_prefix;  // prefix of y exchanged with w_prefix in the final swap
  Word w_prefix;
  ZRule z_rule;
  // Whether at most one component may meet O(y) per step.
  bool single_active = true;
  bool track_zeta = false;
  Word zeta_start;
  Word zeta_target;
  std::size_t max_step = 0;  // preperiod of y
};

inline ScenarioConfig basic_capture_scenario() {
  const auto& base = base_words();
  ScenarioConfig cfg;
  cfg.kind = ScenarioKind::BasicCapture;
  cfg.x_word = base.w0 + base.u0;
  cfg.y_word = base.v0 + base.u0;
  cfg.v_prefix = base.v0;
  cfg.w_prefix = base.w0;
  cfg.max_step = cfg.y_word.size() - 1;
  return cfg;
}

inline ScenarioConfig level_capture_scenario(std::size_t k) {
  auto level = build_level(k);
  ScenarioConfig cfg;
  cfg.kind = ScenarioKind::LevelCapture;
  cfg.k = k;
  cfg.n = k;
  cfg.x_word = level.w + level.u;
  cfg.y_word = level.v + level.u;
  cfg.v_prefix = level.v;
  cfg.w_prefix = level.w;
  cfg.z_rule.s_prefix = level.v;
  cfg.max_step = cfg.y_word.size() - 1;
  return cfg;
}

inline ScenarioConfig substituted_capture_scenario(std::size_t k, std::size_t n) {
  auto levels = build_levels(n);
  auto sub = substitute_all(k, n);
  ScenarioConfig cfg;
  cfg.kind = ScenarioKind::SubstitutedCapture;
  cfg.k = k;
  cfg.n = n;
  cfg.x_word = sub.w + sub.u;
  cfg.y_word = levels[n].v + levels[n].u;
  cfg.v_prefix = levels[k].v;
  cfg.w_prefix = levels[k].w;
  cfg.single_active = k == n;
  cfg.max_step = cfg.y_word.size() - 1;
  return cfg;
}

inline ScenarioConfig mating_scenario(std::size_t k, std::size_t n) {
  auto levels = build_levels(n);
  const auto& top = levels[n];
  auto sub = substitute_all(k, n, true);
  Word tail = mating_tail(top);
  ScenarioConfig cfg;
  cfg.kind = ScenarioKind::Mating;
  cfg.k = k;
  cfg.n = n;
  cfg.y_word = top.v + top.t + top.v + tail;
  cfg.x_word = sub.w + sub.r + sub.w + sub.u;
  cfg.v_prefix = levels[k].v;
  cfg.w_prefix = levels[k].w;
  std::size_t period = top.v.size() + top.t.size();
  cfg.single_active = k == n;
  cfg.track_zeta = true;
  cfg.zeta_start = cfg.y_word.suffix_from(period - 1);
  cfg.zeta_target = cfg.x_word.suffix_from(period - 1);
  cfg.max_step = cfg.y_word.size() - 1;
  return cfg;
}

namespace detail {

inline bool in_forbidden(const Word& w, const DPrime& dp) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (dp.contains_closed(w.suffix_from(i))) return true;
  }
  return false;
}

inline bool right_of_s_orbit(const Word& z, const Word& s_prefix, const DPrime& dp) {
  std::size_t reps = z.size() / s_prefix.size() + 2;
  Word power;
  for (std::size_t j = 0; j <= reps; ++j) {
    for (const Word* end : {&dp.right_word, &dp.left_word}) {
      auto c = compare_words(z, power + *end);
      if (!c || *c != std::strong_ordering::less) return false;
    }
    power += s_prefix;
  }
  auto c = compare_words(z, power);
  return c && *c == std::strong_ordering::less;
}

}  // namespace detail

/// Checks a candidate base point word against the choice rules.
inline bool valid_z(const Word& z, const ScenarioConfig& cfg, const DPrime& dp) {
  if (z.empty() || z[0] != Letter::L3 || z.back() != Letter::C) return false;
  for (std::size_t i = 0; i + 1 < z.size(); ++i) {
    if (!is_restricted(z[i])) return false;
  }
  if (!admissible(z)) return false;
  auto c = compare_words(z, cfg.y_word);
  if (!c || *c != std::strong_ordering::less) return false;
  if (detail::in_forbidden(z, dp)) return false;
  if (cfg.z_rule.s_prefix && !detail::right_of_s_orbit(z, *cfg.z_rule.s_prefix, dp)) return false;
  return true;
}

/// Shortest valid z branching off the word of y; ties go to the smallest
/// word in letter order.
inline Word choose_z(const ScenarioConfig& cfg) {
  DPrime dp = build_dprime(cfg.x_word, cfg.y_word);
  const Word& y = cfg.y_word;
  std::size_t limit = y.size() + cfg.z_rule.max_extra;
  for (std::size_t len = 2; len <= limit; ++len) {
    std::optional<Word> best;
    for (std::size_t j = 1; j < len && j < y.size(); ++j) {
      Word head = y.prefix(j);
      // Depth-first over restricted tails of length len - j ending in C.
      std::vector<Word> stack{head};
      while (!stack.empty()) {
        Word w = std::move(stack.back());
        stack.pop_back();
        if (w.size() == len - 1) {
          Word cand = w + Word{Letter::C};
          if (transition_allowed(w.back(), Letter::C) && valid_z(cand, cfg, dp) && (!best || cand < *best)) {
            best = cand;
          }
          continue;
        }
        for (Letter e : {Letter::L3, Letter::L2, Letter::R3}) {
          if (w.size() == j && e == y[j]) continue;
          if (!transition_allowed(w.back(), e)) continue;
          stack.push_back(w + Word{e});
        }
      }
    }
    if (best) return *best;
  }
  throw Error(ErrorKind::NotFound, "no base point word within " + std::to_string(limit) + " letters");
}

enum class EventKind { OrbitTouch, EndpointSwap, HookDouble, HookReduce, ZetaTouch };

constexpr std::string_view to_string(EventKind k) {
  switch (k) {
    case EventKind::OrbitTouch: return "orbitTouch";
    case EventKind::EndpointSwap: return "endpointSwap";
    case EventKind::HookDouble: return "hookDouble";
    case EventKind::HookReduce: return "hookReduce";
    case EventKind::ZetaTouch: return "zetaTouch";
  }
  return "?";
}

struct TraceEvent {
  std::size_t step = 0;
  std::size_t level = 0;  // prefix length of the component discs
  EventKind kind = EventKind::OrbitTouch;
  std::string path;       // "beta", "zeta" or empty for orbit touches
  ExchangeComponent component;
  Word endpoint_before;
  Word endpoint_after;
};

struct Trace {
  ScenarioConfig config;
  DPrime dprime;
  std::size_t first_step = 0;
  std::vector<TraceEvent> events;
  std::vector<std::size_t> active_counts;  // per step, components meeting O(y)
  Word final_endpoint;
  std::optional<Word> final_zeta;
  int hook_count = 0;

  std::vector<const TraceEvent*> path_events(std::string_view path) const {
    std::vector<const TraceEvent*> out;
    for (const auto& e : events) {
      if (e.path == path) out.push_back(&e);
    }
    return out;
  }
  std::vector<std::size_t> path_steps(std::string_view path) const {
    std::vector<std::size_t> out;
    for (const auto* e : path_events(path)) {
      if (out.empty() || out.back() != e->step) out.push_back(e->step);
    }
    return out;
  }
};

/// Replays the exchanges of steps first_step .. max_step - 1, where the
/// first step is the least preperiod of an orbit point inside D'. Each step
/// records the component meeting O(y), endpoint swaps of the tracked
/// endpoints, and crossings of the tracked paths by exterior arcs.
inline Trace trace_scenario(const ScenarioConfig& cfg) {
  Trace trace;
  trace.config = cfg;
  trace.dprime = build_dprime(cfg.x_word, cfg.y_word);
  const DPrime& dp = trace.dprime;
  const Word& y = cfg.y_word;
  const Word& x = cfg.x_word;

  std::vector<bool> y_in(y.size() + 1, false);
  std::vector<bool> x_in(x.size() + 1, false);
  std::optional<std::size_t> first;
  for (std::size_t i = 0; i < y.size(); ++i) {
    y_in[i] = dp.contains(y.suffix_from(i));
    if (y_in[i]) first = std::min(first.value_or(y.size()), y.size() - i - 1);
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    x_in[i] = dp.contains(x.suffix_from(i));
    if (x_in[i]) first = std::min(first.value_or(x.size()), x.size() - i - 1);
  }
  if (!first) throw Error(ErrorKind::EmptyRegion, "no orbit point lies in D'");
  trace.first_step = *first;

  const ExchangeComponent seed = seed_component(dp);
  Word beta = y;
  Word zeta = cfg.zeta_start;

  // The component carrying each length-`level` factor of y, if any.
  using ChainMap = std::unordered_map<Word, std::optional<ExchangeComponent>>;
  ChainMap chains;
  std::vector<const std::optional<ExchangeComponent>*> at(y.size(), nullptr);
  auto component_of = [&](const Word& prefix) {
    auto it = chains.find(prefix);
    return it != chains.end() ? it->second : component_containing(seed, prefix);
  };

  auto handle_path = [&](Word& endpoint, const std::string& path, std::size_t step, std::size_t level,
                         const std::vector<ExchangeComponent>& active) {
    if (endpoint.size() > level && dp.contains(endpoint.suffix_from(level))) {
      if (auto comp = component_of(endpoint.prefix(level))) {
        Word before = endpoint;
        endpoint = comp->partner_of(endpoint.prefix(level)).prefix + endpoint.suffix_from(level);
        EventKind kind = path == "zeta" ? EventKind::ZetaTouch : EventKind::EndpointSwap;
        trace.events.push_back(TraceEvent{step, level, kind, path, *comp, before, endpoint});
        return;
      }
    }
    if (active.empty()) return;
    Arc arc = upper_arc(endpoint);
    Rational crossing = (arc.lo + arc.hi) / 2;
    for (const auto& comp : active) {
      if (!comp.sweeps_over(crossing)) continue;
      EventKind kind = EventKind::ZetaTouch;
      if (path != "zeta") {
        bool both_top = comp.left.tag == Tag::Top && comp.right.tag == Tag::Top;
        kind = both_top ? EventKind::HookReduce : EventKind::HookDouble;
        if (kind == EventKind::HookDouble) trace.hook_count += 2;
      }
      trace.events.push_back(TraceEvent{step, level, kind, path, comp, endpoint, endpoint});
    }
  };

  for (std::size_t step = trace.first_step; step < cfg.max_step; ++step) {
    std::size_t level = step - trace.first_step + 1;
    ChainMap next;
    for (std::size_t i = 0; i + level <= y.size(); ++i) {
      Word factor = y.slice(i, i + level);
      auto it = next.find(factor);
      if (it == next.end()) {
        std::optional<ExchangeComponent> comp;
        if (level == 1) {
          if (seed.has_prefix(factor)) comp = seed;
        } else if (*at[i + 1]) {
          comp = detail::lift_toward(**at[i + 1], factor);
        }
        it = next.emplace(std::move(factor), std::move(comp)).first;
      }
      at[i] = &it->second;
    }
    chains = std::move(next);

    std::vector<ExchangeComponent> active;
    for (std::size_t i = 0; i + level < y.size(); ++i) {
      if (!y_in[i + level] || !*at[i]) continue;
      const auto& comp = **at[i];
      bool seen = std::any_of(active.begin(), active.end(),
                              [&](const ExchangeComponent& c) { return c.left.prefix == comp.left.prefix; });
      if (!seen) active.push_back(comp);
    }
    trace.active_counts.push_back(active.size());
    if (cfg.single_active && active.size() > 1) {
      throw Error(ErrorKind::MultipleActiveComponents,
                  std::to_string(active.size()) + " components meet O(y) at step " + std::to_string(step), step);
    }
    for (const auto& comp : active) {
      trace.events.push_back(TraceEvent{step, level, EventKind::OrbitTouch, "", comp, {}, {}});
    }
    handle_path(beta, "beta", step, level, active);
    if (cfg.track_zeta) handle_path(zeta, "zeta", step, level, active);
  }
  trace.final_endpoint = beta;
  if (cfg.track_zeta) trace.final_zeta = zeta;
  return trace;
}

namespace detail {

// Orbit points p(P s') with s' in D' u D(x) u D(y).
inline std::vector<std::size_t> image_points(const Word& orbit_word, const Word& prefix, const DPrime& dp) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < orbit_word.size(); ++i) {
    if (!orbit_word.matches_at(prefix, i)) continue;
    if (dp.contains_closed(orbit_word.suffix_from(i + prefix.size()))) out.push_back(i);
  }
  return out;
}

// Orbit points in P D' outside D' u D(x) u D(y).
inline std::vector<std::size_t> d1_points(const Word& orbit_word, const Word& prefix, const DPrime& dp) {
  std::vector<std::size_t> out;
  for (auto i : image_points(orbit_word, prefix, dp)) {
    if (!dp.contains_closed(orbit_word.suffix_from(i))) out.push_back(i);
  }
  return out;
}

}  // namespace detail

inline Json to_json(const ExchangeComponent& c) {
  return Json{{"left", {{"prefix", c.left.prefix.str()}, {"tag", to_string(c.left.tag)}, {"attach", c.left.attach.str()}}},
              {"right", {{"prefix", c.right.prefix.str()}, {"tag", to_string(c.right.tag)}, {"attach", c.right.attach.str()}}},
              {"sweep", to_string(c.sweep)}};
}

inline Json to_json(const TraceEvent& e) {
  Json out{{"step", e.step}, {"level", e.level}, {"kind", to_string(e.kind)}, {"path", e.path},
           {"component", to_json(e.component)}};
  if (!e.endpoint_before.empty()) {
    out["endpoint_before"] = e.endpoint_before.str();
    out["endpoint_after"] = e.endpoint_after.str();
  }
  return out;
}

/// The named predicates of the scenario, replayed on its trace.
inline Report verify_predicates(const ScenarioConfig& cfg) {
  Report report;
  const std::string name = std::string(to_string(cfg.kind)) + "/k-" + std::to_string(cfg.k) + "/n-" + std::to_string(cfg.n);
  const std::string locus = "disc exchange bookkeeping";
  DPrime dp = build_dprime(cfg.x_word, cfg.y_word);

  std::optional<Trace> trace;
  try {
    trace = trace_scenario(cfg);
    std::size_t max_active = *std::max_element(trace->active_counts.begin(), trace->active_counts.end());
    if (cfg.single_active) {
      report.check(name + "/single-active", locus, max_active <= 1,
                   Json{{"steps", trace->active_counts.size()}, {"max_active", max_active}});
    }
  } catch (const Error& err) {
    report.check(name + "/trace", locus, false, Json{{"error", err.what()}});
  }

  if (trace && cfg.kind != ScenarioKind::Mating) {
    report.check(name + "/endpoint-swap", locus, trace->final_endpoint == cfg.x_word,
                 Json{{"final", trace->final_endpoint.str()}, {"expected", cfg.x_word.str()}});
  }

  if (cfg.kind == ScenarioKind::BasicCapture || cfg.kind == ScenarioKind::LevelCapture) {
    auto vy = detail::d1_points(cfg.y_word, cfg.v_prefix, dp);
    auto vx = detail::d1_points(cfg.x_word, cfg.v_prefix, dp);
    auto wx = detail::d1_points(cfg.x_word, cfg.w_prefix, dp);
    report.check(name + "/vD1-misses-O(y)", locus, vy.empty(), Json{{"points", vy}});
    report.check(name + "/vD1-misses-O(x)", locus, vx.empty(), Json{{"points", vx}});
    report.check(name + "/wD1-misses-O(x)", locus, wx.empty(), Json{{"points", wx}});
  }

  if (cfg.kind == ScenarioKind::LevelCapture) {
    auto sx = detail::image_points(cfg.x_word, cfg.w_prefix, dp);
    auto sy = detail::image_points(cfg.y_word, cfg.v_prefix, dp);
    report.check(name + "/S-image-O(x)", locus, sx == std::vector<std::size_t>{0},
                 Json{{"branch", "w_k"}, {"points", sx}, {"expected", {0}}});
    report.check(name + "/S-image-O(y)", locus, sy == std::vector<std::size_t>{0},
                 Json{{"branch", "v_k"}, {"points", sy}, {"expected", {0}}});
    try {
      Word z = choose_z(cfg);
      report.check(name + "/z-right-of-S-orbit", locus,
                   detail::right_of_s_orbit(z, cfg.v_prefix, dp) && !detail::in_forbidden(z, dp),
                   Json{{"z", z.str()}});
    } catch (const Error& err) {
      report.check(name + "/z-right-of-S-orbit", locus, false, Json{{"error", err.what()}});
    }
  }

  if (trace && cfg.kind == ScenarioKind::SubstitutedCapture) {
    auto steps = trace->path_events("beta");
    std::optional<std::size_t> first_level;
    if (!steps.empty()) first_level = steps.front()->level;
    std::size_t max_active = *std::max_element(trace->active_counts.begin(), trace->active_counts.end());
    Json w{{"expected", cfg.v_prefix.size()}, {"hooks", trace->hook_count}, {"max_active", max_active}};
    w["first_level"] = first_level ? Json(*first_level) : Json(nullptr);
    report.check(name + "/first-move", locus, first_level && *first_level == cfg.v_prefix.size(), w);
  }

  if (trace && cfg.kind == ScenarioKind::Mating) {
    report.check(name + "/zeta-endpoint", locus, trace->final_zeta && *trace->final_zeta == cfg.zeta_target,
                 Json{{"final", trace->final_zeta ? trace->final_zeta->str() : ""}, {"expected", cfg.zeta_target.str()}});
    report.check(name + "/beta-endpoint", locus, trace->final_endpoint == cfg.x_word,
                 Json{{"final", trace->final_endpoint.str()}, {"expected", cfg.x_word.str()}});
  }
  return report;
}

}  // namespace aeroplane
