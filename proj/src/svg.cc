// Copyright 2026 The dynsyn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "dynsyn/svg.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace dynsyn {
namespace {

constexpr int kWidth = 480;
constexpr int kHeight = 360;
constexpr int kLeft = 64, kRight = 16, kTop = 32, kBottom = 48;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                                "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Axes {
  double x0, x1, y0, y1;
  int ox = 0;

  double px(double x) const { return ox + kLeft + (x - x0) / (x1 - x0) * (kWidth - kLeft - kRight); }
  double py(double y) const { return kTop + (y1 - y) / (y1 - y0) * (kHeight - kTop - kBottom); }
};

void pad(double& lo, double& hi) {
  if (!(hi > lo)) {
    lo -= 0.5;
    hi += 0.5;
  }
  const double m = 0.05 * (hi - lo);
  lo -= m;
  hi += m;
}

void frame(std::ostringstream& o, const Axes& a, const PlotSpec& spec) {
  const int x = a.ox + kLeft, w = kWidth - kLeft - kRight, h = kHeight - kTop - kBottom;
  o << "<rect x=\"" << x << "\" y=\"" << kTop << "\" width=\"" << w << "\" height=\"" << h
    << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int k = 0; k <= 4; ++k) {
    const double xv = a.x0 + (a.x1 - a.x0) * k / 4, yv = a.y0 + (a.y1 - a.y0) * k / 4;
    o << "<text x=\"" << num(a.px(xv)) << "\" y=\"" << kHeight - kBottom + 16
      << "\" font-size=\"11\" text-anchor=\"middle\">" << tick(xv) << "</text>\n";
    o << "<text x=\"" << x - 4 << "\" y=\"" << num(a.py(yv) + 4)
      << "\" font-size=\"11\" text-anchor=\"end\">" << tick(yv) << "</text>\n";
  }
  o << "<text x=\"" << x + w / 2 << "\" y=\"" << kHeight - 10 << "\" font-size=\"13\" text-anchor=\"middle\">"
    << escape(spec.x_label) << "</text>\n";
  o << "<text x=\"" << a.ox + 14 << "\" y=\"" << kTop + h / 2 << "\" font-size=\"13\" text-anchor=\"middle\" "
    << "transform=\"rotate(-90 " << a.ox + 14 << " " << kTop + h / 2 << ")\">" << escape(spec.y_label)
    << "</text>\n";
  o << "<text x=\"" << x + w / 2 << "\" y=\"20\" font-size=\"14\" text-anchor=\"middle\">" << escape(spec.title)
    << "</text>\n";
}

void curves(std::ostringstream& o, const std::vector<Series>& series, const PlotSpec& spec, int ox) {
  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
  for (const Series& s : series) {
    for (size_t i = 0; i < s.x.size(); ++i) {
      const double e = i < s.err.size() ? s.err[i] : 0.0;
      x0 = std::min(x0, s.x[i]);
      x1 = std::max(x1, s.x[i]);
      y0 = std::min(y0, s.y[i] - e);
      y1 = std::max(y1, s.y[i] + e);
    }
  }
  if (!std::isfinite(x0)) {
    x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  }
  pad(x0, x1);
  pad(y0, y1);
  const Axes a{x0, x1, y0, y1, ox};
  frame(o, a, spec);
  if (spec.vline && *spec.vline >= x0 && *spec.vline <= x1) {
    o << "<line x1=\"" << num(a.px(*spec.vline)) << "\" x2=\"" << num(a.px(*spec.vline)) << "\" y1=\"" << kTop
      << "\" y2=\"" << kHeight - kBottom << "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
  }
  for (size_t k = 0; k < series.size(); ++k) {
    const Series& s = series[k];
    const char* colour = kPalette[k % std::size(kPalette)];
    std::vector<size_t> order(s.x.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t i, size_t j) { return s.x[i] < s.x[j]; });
    if (order.size() > 1) {
      o << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1\" points=\"";
      for (size_t i : order) o << num(a.px(s.x[i])) << "," << num(a.py(s.y[i])) << " ";
      o << "\"/>\n";
    }
    for (size_t i : order) {
      const double e = i < s.err.size() ? s.err[i] : 0.0;
      if (e > 0) {
        o << "<line x1=\"" << num(a.px(s.x[i])) << "\" x2=\"" << num(a.px(s.x[i])) << "\" y1=\""
          << num(a.py(s.y[i] - e)) << "\" y2=\"" << num(a.py(s.y[i] + e)) << "\" stroke=\"" << colour << "\"/>\n";
      }
      o << "<circle cx=\"" << num(a.px(s.x[i])) << "\" cy=\"" << num(a.py(s.y[i])) << "\" r=\"2.5\" fill=\""
        << colour << "\"/>\n";
    }
    o << "<text x=\"" << ox + kWidth - kRight - 6 << "\" y=\"" << kTop + 14 + 14 * k
      << "\" font-size=\"11\" text-anchor=\"end\" fill=\"" << colour << "\">" << escape(s.label) << "</text>\n";
  }
}

void heatmap(std::ostringstream& o, const CollapseResult& r, const std::string& title, int ox) {
  const CostLandscape& l = r.landscape;
  PlotSpec spec{title, "p_c", "nu", std::nullopt};
  const Axes a{l.p_c_lo, l.p_c_hi, l.nu_lo, l.nu_hi, ox};
  if (l.n_p_c > 0 && l.n_nu > 0) {
    double lo = std::numeric_limits<double>::infinity(), hi = 0;
    for (double e : l.eps) {
      if (std::isfinite(e) && e > 0) {
        lo = std::min(lo, e);
        hi = std::max(hi, e);
      }
    }
    const double dx = (l.p_c_hi - l.p_c_lo) / std::max(1, l.n_p_c - 1);
    const double dy = (l.nu_hi - l.nu_lo) / std::max(1, l.n_nu - 1);
    for (int j = 0; j < l.n_nu; ++j) {
      for (int i = 0; i < l.n_p_c; ++i) {
        const double e = l.eps[static_cast<size_t>(j) * l.n_p_c + i];
        const double pc = l.p_c_lo + i * dx, nu = l.nu_lo + j * dy;
        std::string fill = "#000000";
        if (std::isfinite(e) && e <= 2 * r.eps_min) {
          fill = "#202020";
        } else if (std::isfinite(e) && hi > lo) {
          const double t = std::clamp(std::log(std::max(e, lo) / lo) / std::log(hi / lo), 0.0, 1.0);
          char buf[8];
          std::snprintf(buf, sizeof buf, "#%02x%02x%02x", static_cast<int>(255 * t), static_cast<int>(80 + 140 * t),
                        static_cast<int>(255 * (1 - t)));
          fill = buf;
        } else if (!std::isfinite(e)) {
          fill = "#ffffff";
        }
        const double x = a.px(std::max(l.p_c_lo, pc - dx / 2)), x2 = a.px(std::min(l.p_c_hi, pc + dx / 2));
        const double y = a.py(std::min(l.nu_hi, nu + dy / 2)), y2 = a.py(std::max(l.nu_lo, nu - dy / 2));
        o << "<rect x=\"" << num(x) << "\" y=\"" << num(y) << "\" width=\"" << num(x2 - x) << "\" height=\""
          << num(y2 - y) << "\" fill=\"" << fill << "\"/>\n";
      }
    }
  }
  frame(o, a, spec);
  o << "<circle cx=\"" << num(a.px(r.p_c)) << "\" cy=\"" << num(a.py(r.nu)) << "\" r=\"4\" fill=\"none\" "
    << "stroke=\"white\" stroke-width=\"2\"/>\n";
  o << "<rect x=\"" << num(a.px(r.p_c - r.p_c_err)) << "\" y=\"" << num(a.py(r.nu + r.nu_err)) << "\" width=\""
    << num(a.px(r.p_c + r.p_c_err) - a.px(r.p_c - r.p_c_err)) << "\" height=\""
    << num(a.py(r.nu - r.nu_err) - a.py(r.nu + r.nu_err)) << "\" fill=\"none\" stroke=\"white\" "
    << "stroke-dasharray=\"3 2\"/>\n";
}

std::string document(int width, const std::string& body) {
  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << kHeight
    << "\" font-family=\"sans-serif\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
    << body << "</svg>\n";
  return o.str();
}

}  // namespace

std::string line_plot_svg(const std::vector<Series>& series, const PlotSpec& spec) {
  std::ostringstream o;
  curves(o, series, spec, 0);
  return document(kWidth, o.str());
}

std::string landscape_svg(const CollapseResult& result, const std::string& title) {
  std::ostringstream o;
  heatmap(o, result, title, 0);
  return document(kWidth, o.str());
}

std::string collapse_svg(const std::vector<Series>& collapsed, const CollapseResult& result, const PlotSpec& spec) {
  std::ostringstream o;
  curves(o, collapsed, spec, 0);
  char title[128];
  std::snprintf(title, sizeof title, "cost: p_c=%.4g(%.2g) nu=%.3g(%.2g)", result.p_c, result.p_c_err, result.nu,
                result.nu_err);
  heatmap(o, result, title, kWidth);
  return document(2 * kWidth, o.str());
}

}  // namespace dynsyn
