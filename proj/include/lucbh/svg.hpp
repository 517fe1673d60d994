#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace lucbh {

// Minimal static SVG charts: one line chart with error bars for sweeps and one
// grouped bar chart for per-arm allocations. Output is a single self-contained
// <svg> document (fixed 800x500 viewBox, inline styling, no external
// references).

struct ChartSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> err;  // +/- half-length of the error bar; may be empty
};

namespace svg_detail {

inline const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                 "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};

inline std::string esc(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

inline std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

inline std::string tick_label(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// Round tick positions covering [lo, hi].
inline std::vector<double> nice_ticks(double lo, double hi, int want = 5) {
  if (!(hi > lo)) hi = lo + 1.0;
  const double raw = (hi - lo) / want;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double m : {1.0, 2.0, 2.5, 5.0, 10.0}) {
    if (mag * m >= raw) {
      step = mag * m;
      break;
    }
  }
  std::vector<double> ticks;
  for (double t = std::ceil(lo / step) * step; t <= hi + step * 1e-9; t += step)
    ticks.push_back(std::abs(t) < step * 1e-9 ? 0.0 : t);
  return ticks;
}

struct Frame {
  // plot area inside the 800x500 canvas
  double x0 = 80, y0 = 55, x1 = 770, y1 = 435;
  double xmin = 0, xmax = 1, ymin = 0, ymax = 1;

  double px(double x) const { return x0 + (x - xmin) / (xmax - xmin) * (x1 - x0); }
  double py(double y) const { return y1 - (y - ymin) / (ymax - ymin) * (y1 - y0); }
};

inline void open_doc(std::ostringstream& s, const std::string& title) {
  s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 500\" "
       "font-family=\"sans-serif\" font-size=\"13\">\n"
    << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"500\" fill=\"white\"/>\n"
    << "<text x=\"400\" y=\"28\" text-anchor=\"middle\" font-size=\"17\">" << esc(title)
    << "</text>\n";
}

inline void axes(std::ostringstream& s, const Frame& f, const std::string& x_label,
                 const std::string& y_label) {
  s << "<line x1=\"" << num(f.x0) << "\" y1=\"" << num(f.y1) << "\" x2=\"" << num(f.x1)
    << "\" y2=\"" << num(f.y1) << "\" stroke=\"black\"/>\n"
    << "<line x1=\"" << num(f.x0) << "\" y1=\"" << num(f.y0) << "\" x2=\"" << num(f.x0)
    << "\" y2=\"" << num(f.y1) << "\" stroke=\"black\"/>\n"
    << "<text x=\"" << num((f.x0 + f.x1) / 2) << "\" y=\"478\" text-anchor=\"middle\">"
    << esc(x_label) << "</text>\n"
    << "<text x=\"22\" y=\"" << num((f.y0 + f.y1) / 2)
    << "\" text-anchor=\"middle\" transform=\"rotate(-90 22 " << num((f.y0 + f.y1) / 2) << ")\">"
    << esc(y_label) << "</text>\n";
}

inline void y_ticks(std::ostringstream& s, const Frame& f) {
  for (double t : nice_ticks(f.ymin, f.ymax)) {
    const double y = f.py(t);
    s << "<line x1=\"" << num(f.x0 - 5) << "\" y1=\"" << num(y) << "\" x2=\"" << num(f.x0)
      << "\" y2=\"" << num(y) << "\" stroke=\"black\"/>\n"
      << "<line x1=\"" << num(f.x0) << "\" y1=\"" << num(y) << "\" x2=\"" << num(f.x1)
      << "\" y2=\"" << num(y) << "\" stroke=\"#dddddd\"/>\n"
      << "<text x=\"" << num(f.x0 - 9) << "\" y=\"" << num(y + 4)
      << "\" text-anchor=\"end\">" << tick_label(t) << "</text>\n";
  }
}

inline void legend(std::ostringstream& s, const std::vector<std::string>& labels) {
  double x = 96, y = 46;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    s << "<rect x=\"" << num(x) << "\" y=\"" << num(y) << "\" width=\"14\" height=\"14\" fill=\""
      << kPalette[i % 8] << "\"/>\n"
      << "<text x=\"" << num(x + 19) << "\" y=\"" << num(y + 11) << "\">" << esc(labels[i])
      << "</text>\n";
    x += 26.0 + 7.5 * static_cast<double>(labels[i].size());
  }
}

}  // namespace svg_detail

/// Line chart with +/- error bars. x_ticks supplies tick positions and labels
/// (callers plotting a log-spaced axis pass transformed positions).
inline std::string svg_line_chart(const std::string& title, const std::string& x_label,
                                  const std::string& y_label,
                                  const std::vector<ChartSeries>& series,
                                  const std::vector<std::pair<double, std::string>>& x_ticks) {
  using namespace svg_detail;
  Frame f;
  f.xmin = f.xmax = series.at(0).x.at(0);
  f.ymin = 0.0;
  f.ymax = 1.0;
  for (const auto& s : series) {
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      f.xmin = std::min(f.xmin, s.x[i]);
      f.xmax = std::max(f.xmax, s.x[i]);
      const double e = i < s.err.size() ? s.err[i] : 0.0;
      f.ymax = std::max(f.ymax, s.y[i] + e);
    }
  }
  if (f.xmax == f.xmin) {
    f.xmin -= 0.5;
    f.xmax += 0.5;
  }
  f.ymax *= 1.05;

  std::ostringstream out;
  open_doc(out, title);
  y_ticks(out, f);
  axes(out, f, x_label, y_label);
  for (const auto& [pos, label] : x_ticks) {
    const double x = f.px(pos);
    out << "<line x1=\"" << num(x) << "\" y1=\"" << num(f.y1) << "\" x2=\"" << num(x)
        << "\" y2=\"" << num(f.y1 + 5) << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << num(x) << "\" y=\"" << num(f.y1 + 20) << "\" text-anchor=\"middle\">"
        << esc(label) << "</text>\n";
  }
  std::vector<std::string> labels;
  for (std::size_t si = 0; si < series.size(); ++si) {
    const auto& s = series[si];
    const char* color = kPalette[si % 8];
    labels.push_back(s.label);
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < s.x.size(); ++i)
      out << num(f.px(s.x[i])) << ',' << num(f.py(s.y[i])) << ' ';
    out << "\"/>\n";
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      const double x = f.px(s.x[i]);
      out << "<circle cx=\"" << num(x) << "\" cy=\"" << num(f.py(s.y[i]))
          << "\" r=\"3\" fill=\"" << color << "\"/>\n";
      if (i < s.err.size() && s.err[i] > 0.0) {
        const double yl = f.py(s.y[i] - s.err[i]);
        const double yh = f.py(s.y[i] + s.err[i]);
        out << "<line x1=\"" << num(x) << "\" y1=\"" << num(yl) << "\" x2=\"" << num(x)
            << "\" y2=\"" << num(yh) << "\" stroke=\"" << color << "\"/>\n"
            << "<line x1=\"" << num(x - 4) << "\" y1=\"" << num(yl) << "\" x2=\"" << num(x + 4)
            << "\" y2=\"" << num(yl) << "\" stroke=\"" << color << "\"/>\n"
            << "<line x1=\"" << num(x - 4) << "\" y1=\"" << num(yh) << "\" x2=\"" << num(x + 4)
            << "\" y2=\"" << num(yh) << "\" stroke=\"" << color << "\"/>\n";
      }
    }
  }
  legend(out, labels);
  out << "</svg>\n";
  return out.str();
}

/// Grouped bar chart: one group per category (arm), one bar per series.
inline std::string svg_bar_chart(const std::string& title, const std::string& y_label,
                                 const std::vector<std::string>& groups,
                                 const std::vector<std::pair<std::string, std::vector<double>>>&
                                     series) {
  using namespace svg_detail;
  Frame f;
  f.xmin = 0.0;
  f.xmax = static_cast<double>(groups.size());
  f.ymin = 0.0;
  f.ymax = 1.0;
  for (const auto& [label, values] : series)
    for (double v : values) f.ymax = std::max(f.ymax, v);
  f.ymax *= 1.05;

  std::ostringstream out;
  open_doc(out, title);
  y_ticks(out, f);
  axes(out, f, "", y_label);
  const double group_w = (f.x1 - f.x0) / static_cast<double>(groups.size());
  const double bar_w = group_w * 0.8 / static_cast<double>(series.size());
  std::vector<std::string> labels;
  for (std::size_t si = 0; si < series.size(); ++si) {
    labels.push_back(series[si].first);
    const char* color = kPalette[si % 8];
    for (std::size_t g = 0; g < groups.size(); ++g) {
      const double v = series[si].second.at(g);
      const double x = f.x0 + group_w * (static_cast<double>(g) + 0.1) +
                       bar_w * static_cast<double>(si);
      out << "<rect x=\"" << num(x) << "\" y=\"" << num(f.py(v)) << "\" width=\"" << num(bar_w)
          << "\" height=\"" << num(f.y1 - f.py(v)) << "\" fill=\"" << color << "\"/>\n";
    }
  }
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const double x = f.x0 + group_w * (static_cast<double>(g) + 0.5);
    out << "<text x=\"" << num(x) << "\" y=\"" << num(f.y1 + 20) << "\" text-anchor=\"middle\">"
        << esc(groups[g]) << "</text>\n";
  }
  legend(out, labels);
  out << "</svg>\n";
  return out.str();
}

}  // namespace lucbh
