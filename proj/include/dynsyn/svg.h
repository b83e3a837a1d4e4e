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


#ifndef DYNSYN_SVG_H
#define DYNSYN_SVG_H

#include <optional>
#include <string>
#include <vector>

#include "dynsyn/fss.h"

namespace dynsyn {

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  /// Error bars; empty for none.
  std::vector<double> err;
};

struct PlotSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::optional<double> vline;
};

/// Markers with error bars joined by lines, one colour per series.
std::string line_plot_svg(const std::vector<Series>& series, const PlotSpec& spec);

/// Cost landscape heat map (log scale) with the optimum marked and the 2 eps_min contour shaded.
std::string landscape_svg(const CollapseResult& result, const std::string& title);

/// Collapsed curves and the cost landscape side by side.
std::string collapse_svg(const std::vector<Series>& collapsed, const CollapseResult& result, const PlotSpec& spec);

}  // namespace dynsyn

#endif
