#pragma once

#include <sstream>
#include <string>

#include "setsched/instance.hpp"
#include "setsched/schedule.hpp"

namespace setsched {

// Static SVG rendering: one row per machine, setups hatched dark, pieces
// colored by class, axis marks at T/3, 2T/3, T and 4/3 T.
inline std::string render_gantt(const Schedule& sched, const Instance& inst, const Rational& T) {
  const double width = 900.0, row_h = 28.0, gap = 6.0, left = 60.0, top_pad = 30.0;
  const int rows = static_cast<int>(sched.machines.size());
  Rational horizon = max(T * frac(4, 3), makespan(sched));
  double hx = horizon.approx();
  if (hx <= 0) hx = 1.0;
  auto x_of = [&](const Rational& t) { return left + t.approx() / hx * (width - left - 20.0); };
  auto color_of = [&](int ci) {
    static const char* palette[] = {"#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#76b7b2",
                                    "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac"};
    return palette[ci % 10];
  };

  double height = top_pad + rows * (row_h + gap) + 40.0;
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\">\n";
  svg << "<defs><pattern id=\"hatch\" width=\"6\" height=\"6\" patternTransform=\"rotate(45)\" "
         "patternUnits=\"userSpaceOnUse\"><rect width=\"6\" height=\"6\" fill=\"#555\"/>"
         "<line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"6\" stroke=\"#999\" stroke-width=\"2\"/>"
         "</pattern></defs>\n";

  for (int q = 0; q < rows; ++q) {
    double y = top_pad + q * (row_h + gap);
    svg << "<text x=\"6\" y=\"" << (y + row_h * 0.7) << "\" font-size=\"12\">m" << q << "</text>\n";
    for (const Segment& seg : sched.machines[static_cast<size_t>(q)]) {
      double x0 = x_of(seg.start), x1 = x_of(seg.end);
      if (seg.kind == Segment::Kind::Setup) {
        svg << "<rect x=\"" << x0 << "\" y=\"" << y << "\" width=\"" << (x1 - x0) << "\" height=\""
            << row_h << "\" fill=\"url(#hatch)\" stroke=\"#333\"/>\n";
      } else {
        svg << "<rect x=\"" << x0 << "\" y=\"" << y << "\" width=\"" << (x1 - x0) << "\" height=\""
            << row_h << "\" fill=\"" << color_of(seg.class_index)
            << "\" stroke=\"#333\"><title>job " << seg.job_index << " (class " << seg.class_index
            << ")</title></rect>\n";
      }
    }
  }

  double axis_y = top_pad + rows * (row_h + gap) + 10.0;
  svg << "<line x1=\"" << left << "\" y1=\"" << axis_y << "\" x2=\"" << (width - 20.0)
      << "\" y2=\"" << axis_y << "\" stroke=\"#000\"/>\n";
  const struct {
    Rational t;
    const char* label;
  } marks[] = {{T * frac(1, 3), "T/3"}, {T * frac(2, 3), "2T/3"}, {T, "T"}, {T * frac(4, 3), "4T/3"}};
  for (const auto& mk : marks) {
    double x = x_of(mk.t);
    svg << "<line x1=\"" << x << "\" y1=\"" << top_pad - 10.0 << "\" x2=\"" << x << "\" y2=\""
        << axis_y << "\" stroke=\"#aaa\" stroke-dasharray=\"4 3\"/>\n";
    svg << "<text x=\"" << x - 10.0 << "\" y=\"" << (axis_y + 16.0) << "\" font-size=\"12\">"
        << mk.label << "</text>\n";
  }
  (void)inst;
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace setsched
