#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <string>
#include <vector>

#include "aeroplane/coding.hpp"
#include "aeroplane/exchange.hpp"
#include "aeroplane/lamination.hpp"

namespace aeroplane::svg {

inline constexpr double kSize = 1000.0;
inline constexpr double kCenter = 500.0;
inline constexpr double kRadius = 450.0;

struct Point {
  double x;
  double y;
};

/// Position on a circle of the given radius; angles run counterclockwise
/// from the positive real axis, in turns.
inline Point on_circle(const Rational& turns, double radius = kRadius) {
  double t = 2.0 * std::numbers::pi * to_double(turns);
  return Point{kCenter + radius * std::cos(t), kCenter - radius * std::sin(t)};
}

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

inline std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

class Canvas {
 public:
  Canvas() {
    body_ += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"1000\" viewBox=\"0 0 1000 1000\">\n";
    body_ += "<rect width=\"1000\" height=\"1000\" fill=\"white\"/>\n";
  }

  void unit_circle() {
    body_ += "<circle cx=\"" + num(kCenter) + "\" cy=\"" + num(kCenter) + "\" r=\"" + num(kRadius) +
             "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  }

  void line(Point a, Point b, const std::string& stroke, double width) {
    body_ += "<line x1=\"" + num(a.x) + "\" y1=\"" + num(a.y) + "\" x2=\"" + num(b.x) + "\" y2=\"" + num(b.y) +
             "\" stroke=\"" + stroke + "\" stroke-width=\"" + num(width) + "\"/>\n";
  }

  void chord(const Rational& a, const Rational& b, const std::string& stroke, double width) {
    line(on_circle(a), on_circle(b), stroke, width);
  }

  void text(Point at, const std::string& content, double size, const std::string& anchor = "middle") {
    body_ += "<text x=\"" + num(at.x) + "\" y=\"" + num(at.y) + "\" font-family=\"monospace\" font-size=\"" +
             num(size) + "\" text-anchor=\"" + anchor + "\">" + escape(content) + "</text>\n";
  }

  void rect(double x, double y, double w, double h, const std::string& fill) {
    body_ += "<rect x=\"" + num(x) + "\" y=\"" + num(y) + "\" width=\"" + num(w) + "\" height=\"" + num(h) +
             "\" fill=\"" + fill + "\"/>\n";
  }

  std::string finish() const { return body_ + "</svg>\n"; }

 private:
  std::string body_;
};

inline std::string render_lamination(const Lamination& lam) {
  Canvas canvas;
  canvas.unit_circle();
  for (const auto& leaf : lam.leaves()) {
    if (leaf == lam.minor) continue;
    canvas.chord(leaf.first.value(), leaf.second.value(), "navy", 0.6);
  }
  canvas.chord(lam.minor.first.value(), lam.minor.second.value(), "crimson", 2.0);
  return canvas.finish();
}

/// The seven regions cut out by the chords joining r/14 and -r/14.
inline std::string render_regions() {
  Canvas canvas;
  canvas.unit_circle();
  for (long r = 1; r <= 6; ++r) canvas.chord(Rational(r, 14), Rational(14 - r, 14), "black", 1.0);
  for (Letter e : kSlotLabels) {
    Arc upper = region_upper_arc(e);
    Point at = on_circle((upper.lo + upper.hi) / 2, kRadius + 25);
    canvas.text(Point{at.x, at.y + 6}, std::string(to_string(e)), 18);
  }
  for (long k = 1; k <= 13; ++k) {
    if (k == 7) continue;
    Point at = on_circle(Rational(k, 14), kRadius - 18);
    canvas.text(Point{at.x, at.y + 4}, std::to_string(k) + "/14", 10);
  }
  return canvas.finish();
}

/// One row per exchange component meeting the orbit, in step order, with
/// swaps and hooks on the tracked paths marked beside it.
inline std::string render_scenario(const Trace& trace) {
  struct Row {
    std::size_t step;
    std::string label;
    std::string marks;
  };
  std::vector<Row> rows;
  for (const auto& e : trace.events) {
    if (e.kind == EventKind::OrbitTouch) {
      rows.push_back(Row{e.step, e.component.row(), ""});
      continue;
    }
    std::string mark = e.path + ":" + std::string(to_string(e.kind));
    auto it = std::find_if(rows.begin(), rows.end(), [&](const Row& r) {
      return r.step == e.step && r.label == e.component.row();
    });
    if (it == rows.end()) {
      rows.push_back(Row{e.step, e.component.row(), mark});
    } else {
      it->marks += it->marks.empty() ? mark : " " + mark;
    }
  }

  Canvas canvas;
  const double top = 60.0;
  const double row_h = rows.empty() ? 40.0 : std::min(40.0, (kSize - top - 20.0) / static_cast<double>(rows.size()));
  const double font = std::max(3.0, std::min(14.0, row_h * 0.6));
  canvas.text(Point{kCenter, 35}, std::string(to_string(trace.config.kind)) + " k=" + std::to_string(trace.config.k) +
                                      " n=" + std::to_string(trace.config.n),
              20);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    double y = top + row_h * static_cast<double>(i);
    if (!rows[i].marks.empty()) canvas.rect(20, y, 960, row_h, "#fde8c8");
    double base = y + row_h * 0.7;
    canvas.text(Point{30, base}, std::to_string(rows[i].step), font, "start");
    std::string label = rows[i].label;
    if (label.size() > 110) label = label.substr(0, 50) + " ... " + label.substr(label.size() - 50);
    canvas.text(Point{80, base}, label, font, "start");
    if (!rows[i].marks.empty()) canvas.text(Point{970, base}, rows[i].marks, font, "end");
  }
  return canvas.finish();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << content;
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

}  // namespace aeroplane::svg
