// Copyright 2026 The spinchain Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPINCHAIN_IO_SVG_HPP
#define SPINCHAIN_IO_SVG_HPP

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "spinchain/errors.hpp"
#include "spinchain/io/csv.hpp"

namespace spinchain::io {

struct PlotSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

namespace detail {

inline std::string fixed(double v, int decimals = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

inline std::string escape_xml(const std::string& s) {
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

inline std::string basename(const std::string& path) {
  const auto slash = path.find_last_of('/');
  return slash == std::string::npos ? path : path.substr(slash + 1);
}

}  // namespace detail

/// Line chart of the given series as a standalone SVG 1.1 document. A series
/// with a single point is drawn as a marker only.
inline std::string render_svg(const std::vector<PlotSeries>& series, const std::string& x_label) {
  constexpr double kWidth = 800, kHeight = 500;
  constexpr double kLeft = 70, kRight = 220, kTop = 30, kBottom = 60;
  static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                  "#9467bd", "#8c564b", "#e377c2", "#17becf"};

  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const auto& s : series) {
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
      xmin = std::min(xmin, s.x[i]);
      xmax = std::max(xmax, s.x[i]);
      ymin = std::min(ymin, s.y[i]);
      ymax = std::max(ymax, s.y[i]);
    }
  }
  if (!std::isfinite(xmin)) xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  if (xmax == xmin) xmax = xmin + 1.0;
  if (ymax == ymin) ymin -= 0.5, ymax += 0.5;

  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - xmin) / (xmax - xmin) * pw; };
  auto py = [&](double y) { return kTop + (ymax - y) / (ymax - ymin) * ph; };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"yes\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"500\" "
         "viewBox=\"0 0 800 500\">\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"500\" fill=\"white\"/>\n";
  svg += "<rect x=\"" + detail::fixed(kLeft) + "\" y=\"" + detail::fixed(kTop) + "\" width=\"" +
         detail::fixed(pw) + "\" height=\"" + detail::fixed(ph) +
         "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";

  for (int t = 0; t <= 5; ++t) {
    const double xv = xmin + (xmax - xmin) * t / 5.0;
    const double yv = ymin + (ymax - ymin) * t / 5.0;
    const std::string xs = detail::fixed(px(xv)), ys = detail::fixed(py(yv));
    svg += "<line x1=\"" + xs + "\" y1=\"" + detail::fixed(kTop + ph) + "\" x2=\"" + xs + "\" y2=\"" +
           detail::fixed(kTop + ph + 5) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + xs + "\" y=\"" + detail::fixed(kTop + ph + 20) +
           "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">" +
           format_number(std::round(xv * 1e4) / 1e4) + "</text>\n";
    svg += "<line x1=\"" + detail::fixed(kLeft - 5) + "\" y1=\"" + ys + "\" x2=\"" + detail::fixed(kLeft) +
           "\" y2=\"" + ys + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + detail::fixed(kLeft - 8) + "\" y=\"" + detail::fixed(py(yv) + 4) +
           "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"end\">" +
           format_number(std::round(yv * 1e4) / 1e4) + "</text>\n";
  }
  svg += "<text x=\"" + detail::fixed(kLeft + pw / 2) + "\" y=\"" + detail::fixed(kHeight - 15) +
         "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">" +
         detail::escape_xml(x_label) + "</text>\n";

  for (std::size_t s = 0; s < series.size(); ++s) {
    const auto& ser = series[s];
    const char* color = kColors[s % std::size(kColors)];
    std::string points;
    std::size_t count = 0;
    for (std::size_t i = 0; i < ser.x.size(); ++i) {
      if (!std::isfinite(ser.x[i]) || !std::isfinite(ser.y[i])) continue;
      if (!points.empty()) points += ' ';
      points += detail::fixed(px(ser.x[i])) + "," + detail::fixed(py(ser.y[i]));
      ++count;
    }
    if (count >= 2) {
      svg += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
             "\" stroke-width=\"1.5\" points=\"" + points + "\"/>\n";
    } else {
      for (std::size_t i = 0; i < ser.x.size(); ++i) {
        if (!std::isfinite(ser.x[i]) || !std::isfinite(ser.y[i])) continue;
        svg += "<circle cx=\"" + detail::fixed(px(ser.x[i])) + "\" cy=\"" + detail::fixed(py(ser.y[i])) +
               "\" r=\"3\" fill=\"" + color + "\"/>\n";
      }
    }
    const double ly = kTop + 10 + 20.0 * static_cast<double>(s);
    const double lx = kLeft + pw + 15;
    svg += "<line x1=\"" + detail::fixed(lx) + "\" y1=\"" + detail::fixed(ly) + "\" x2=\"" +
           detail::fixed(lx + 25) + "\" y2=\"" + detail::fixed(ly) + "\" stroke=\"" + color +
           "\" stroke-width=\"2\"/>\n";
    svg += "<text x=\"" + detail::fixed(lx + 30) + "\" y=\"" + detail::fixed(ly + 4) +
           "\" font-family=\"sans-serif\" font-size=\"11\">" + detail::escape_xml(ser.label) + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

/// One series per (table, column) against the `tau` column. Columns named
/// `gme` are drawn clamped at zero; the tables themselves are not modified.
inline std::string svg_from_tables(const std::vector<std::pair<std::string, CsvTable>>& tables,
                                   const std::vector<std::string>& columns) {
  if (columns.empty()) throw ArgumentError("no columns to plot");
  std::vector<PlotSeries> series;
  for (const auto& [label, table] : tables) {
    if (table.rows.empty()) throw ArgumentError(label + ": CSV has no data rows");
    const auto tau = table.column("tau");
    if (tau == CsvTable::npos) throw ArgumentError(label + ": missing column 'tau'");
    for (const auto& col : columns) {
      const auto c = table.column(col);
      if (c == CsvTable::npos) throw ArgumentError(label + ": missing column '" + col + "'");
      PlotSeries s;
      s.label = detail::basename(label) + ":" + col;
      for (const auto& row : table.rows) {
        s.x.push_back(row[tau]);
        s.y.push_back(col == "gme" ? std::max(0.0, row[c]) : row[c]);
      }
      series.push_back(std::move(s));
    }
  }
  return render_svg(series, "tau");
}

/// Reads the CSV files and writes the chart to `out_path`.
inline void emit_svg_plot(const std::vector<std::string>& csv_paths, const std::vector<std::string>& columns,
                          const std::string& out_path) {
  std::vector<std::pair<std::string, CsvTable>> tables;
  for (const auto& p : csv_paths) tables.emplace_back(p, read_csv_file(p));
  write_text_file(out_path, svg_from_tables(tables, columns));
}

}  // namespace spinchain::io

#endif  // SPINCHAIN_IO_SVG_HPP
