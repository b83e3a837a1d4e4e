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


#include "dynsyn/fss.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <iostream>
#include <limits>
#include <random>
#include <utility>

#include "dynsyn/parallel.h"
#include "dynsyn/rng.h"
#include "dynsyn/simplex.h"

namespace dynsyn {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kMaxRedraws = 100;

// Interior terms depend only on a point and its sorted neighbours, so a
// window's cost is a range sum over precomputed terms.
struct Terms {
  std::vector<double> x;
  std::vector<double> prefix;      // prefix[i] = sum of terms at indices < i
  std::vector<int> prefix_degen;  // same for degenerate flags
};

Terms build_terms(std::span<const Triple> s) {
  Terms t;
  const size_t n = s.size();
  t.x.resize(n);
  t.prefix.assign(n + 1, 0.0);
  t.prefix_degen.assign(n + 1, 0);
  for (size_t i = 0; i < n; ++i) {
    t.x[i] = s[i].x;
    double term = 0;
    int degen = 0;
    if (i > 0 && i + 1 < n) {
      const double span = s[i + 1].x - s[i - 1].x;
      if (span == 0) {
        degen = 1;
      } else {
        const double wl = (s[i + 1].x - s[i].x) / span;
        const double wr = (s[i - 1].x - s[i].x) / span;
        const double ybar = wl * s[i - 1].y - wr * s[i + 1].y;
        const double delta2 = s[i].d * s[i].d + wl * wl * s[i - 1].d * s[i - 1].d + wr * wr * s[i + 1].d * s[i + 1].d;
        const double r = s[i].y - ybar;
        term = r * r / delta2;
      }
    }
    t.prefix[i + 1] = t.prefix[i] + term;
    t.prefix_degen[i + 1] = t.prefix_degen[i] + degen;
  }
  return t;
}

// n_terms == 0 signals a window with fewer than 3 usable points.
CostDetail window_cost(const Terms& t, double x_min, double x_max) {
  const auto lo = static_cast<size_t>(std::lower_bound(t.x.begin(), t.x.end(), x_min) - t.x.begin());
  const auto hi = static_cast<size_t>(std::upper_bound(t.x.begin(), t.x.end(), x_max) - t.x.begin());
  CostDetail out;
  if (hi < lo + 3) {
    return out;
  }
  // Interior indices lo+1 .. hi-2.
  const double sum = t.prefix[hi - 1] - t.prefix[lo + 1];
  out.n_degenerate = static_cast<size_t>(t.prefix_degen[hi - 1] - t.prefix_degen[lo + 1]);
  out.n_terms = (hi - lo - 2) - out.n_degenerate;
  out.eps = out.n_terms > 0 ? sum / static_cast<double>(out.n_terms) : 0.0;
  return out;
}

double averaged(const Terms& t, const WindowSpec& spec, uint64_t seed) {
  if (spec.n_windows < 1) {
    throw std::invalid_argument("windowed_cost: n_windows must be at least 1");
  }
  Rng rng(derive_seed(seed, {0}));
  std::normal_distribution<double> lo_dist(spec.mu_min, spec.sigma_min);
  std::normal_distribution<double> hi_dist(spec.mu_max, spec.sigma_max);
  auto draw = [&rng](std::normal_distribution<double>& dist, double sigma) {
    return sigma > 0 ? dist(rng) : dist.mean();
  };
  double total = 0;
  for (int w = 0; w < spec.n_windows; ++w) {
    int attempts = 0;
    for (;;) {
      const double x_min = draw(lo_dist, spec.sigma_min);
      const double x_max = draw(hi_dist, spec.sigma_max);
      if (x_min < x_max) {
        const CostDetail c = window_cost(t, x_min, x_max);
        if (c.n_terms > 0) {
          total += c.eps;
          break;
        }
      }
      if (++attempts >= kMaxRedraws) {
        throw WindowError("windowed_cost: no window with 3 usable points after 100 draws");
      }
    }
  }
  return total / spec.n_windows;
}

void validate_points(std::span<const CollapsePoint> points) {
  for (const CollapsePoint& p : points) {
    if (!(p.d > 0)) {
      throw std::invalid_argument("collapse point with non-positive error bar");
    }
    if (!(p.scale > 0)) {
      throw std::invalid_argument("collapse point with non-positive scale");
    }
  }
}

double safe_cost(std::span<const CollapsePoint> points, double p_c, double nu, const WindowSpec& spec, uint64_t seed) {
  if (!(nu > 0)) {
    return kInf;
  }
  try {
    const std::vector<Triple> triples = rescale(points, p_c, nu);
    return averaged(build_terms(triples), spec, seed);
  } catch (const WindowError&) {
    return kInf;
  }
}

struct Grid {
  double p_lo, p_hi, n_lo, n_hi;
  int np, nn;
  std::vector<double> eps;

  double p_at(int i) const { return np == 1 ? p_lo : p_lo + (p_hi - p_lo) * i / (np - 1); }
  double nu_at(int j) const { return nn == 1 ? n_lo : n_lo + (n_hi - n_lo) * j / (nn - 1); }
  double at(int i, int j) const { return eps[static_cast<size_t>(j) * np + i]; }
};

Grid scan(std::span<const CollapsePoint> points, double p_lo, double p_hi, double n_lo, double n_hi, int np, int nn,
          const WindowSpec& spec, uint64_t seed, int workers) {
  Grid g{p_lo, p_hi, n_lo, n_hi, np, nn, std::vector<double>(static_cast<size_t>(np) * nn)};
  parallel_for(g.eps.size(), workers, [&](size_t k) {
    const int i = static_cast<int>(k % np);
    const int j = static_cast<int>(k / np);
    g.eps[k] = safe_cost(points, g.p_at(i), g.nu_at(j), spec, seed);
  });
  return g;
}

}  // namespace

std::vector<Triple> rescale(std::span<const CollapsePoint> points, double p_c, double nu) {
  if (nu == 0) {
    throw std::invalid_argument("rescale: nu must be nonzero");
  }
  std::vector<Triple> out;
  out.reserve(points.size());
  for (const CollapsePoint& p : points) {
    out.push_back({(p.control - p_c) * std::pow(p.scale, 1.0 / nu), p.y, p.d});
  }
  std::stable_sort(out.begin(), out.end(), [](const Triple& a, const Triple& b) { return a.x < b.x; });
  return out;
}

CostDetail cost_detail(std::span<const Triple> sorted, double x_min, double x_max) {
  if (!std::is_sorted(sorted.begin(), sorted.end(), [](const Triple& a, const Triple& b) { return a.x < b.x; })) {
    throw std::invalid_argument("cost: triples must be sorted by x");
  }
  const Terms t = build_terms(sorted);
  const CostDetail c = window_cost(t, x_min, x_max);
  if (c.n_terms == 0 && c.n_degenerate == 0) {
    throw WindowError("cost: fewer than 3 points inside the window");
  }
  if (c.n_terms == 0) {
    throw WindowError("cost: every interior point has x_{i+1} == x_{i-1}");
  }
  return c;
}

double cost(std::span<const Triple> sorted, double x_min, double x_max) {
  return cost_detail(sorted, x_min, x_max).eps;
}

double windowed_cost(std::span<const CollapsePoint> points, double p_c, double nu, const WindowSpec& spec,
                     uint64_t seed) {
  validate_points(points);
  const std::vector<Triple> triples = rescale(points, p_c, nu);
  return averaged(build_terms(triples), spec, seed);
}

CollapseResult minimize(std::span<const CollapsePoint> points, const SearchBox& box, const WindowSpec& spec,
                        uint64_t seed, int workers) {
  validate_points(points);
  if (!(box.p_c_lo < box.p_c_hi && box.nu_lo < box.nu_hi && box.nu_lo > 0)) {
    throw std::invalid_argument("minimize: empty or invalid search box");
  }
  if (box.grid < 2 || box.refine_grid < 3) {
    throw std::invalid_argument("minimize: grid resolutions too small");
  }

  const Grid coarse = scan(points, box.p_c_lo, box.p_c_hi, box.nu_lo, box.nu_hi, box.grid, box.grid, spec, seed,
                           workers);
  size_t best = 0;
  for (size_t k = 1; k < coarse.eps.size(); ++k) {
    if (coarse.eps[k] < coarse.eps[best]) {
      best = k;
    }
  }
  if (!std::isfinite(coarse.eps[best])) {
    throw WindowError("minimize: no feasible window anywhere in the search box");
  }
  const double dp = (box.p_c_hi - box.p_c_lo) / (box.grid - 1);
  const double dn = (box.nu_hi - box.nu_lo) / (box.grid - 1);

  auto in_box = [&](double p, double nu) {
    return p >= box.p_c_lo && p <= box.p_c_hi && nu >= box.nu_lo && nu <= box.nu_hi;
  };
  auto objective = [&](std::span<const double> v) {
    return in_box(v[0], v[1]) ? safe_cost(points, v[0], v[1], spec, seed) : kInf;
  };
  const std::vector<double> start{coarse.p_at(static_cast<int>(best % box.grid)),
                                  coarse.nu_at(static_cast<int>(best / box.grid))};
  SimplexResult refined = nelder_mead(objective, start, {dp / 2, dn / 2}, 2000, 1e-7);
  if (!(refined.value <= coarse.eps[best])) {
    refined.x = start;
    refined.value = coarse.eps[best];
  }

  CollapseResult result;
  result.p_c = refined.x[0];
  result.nu = refined.x[1];
  result.eps_min = refined.value;
  result.on_boundary = result.p_c - box.p_c_lo < dp || box.p_c_hi - result.p_c < dp || result.nu - box.nu_lo < dn ||
                       box.nu_hi - result.nu < dn;
  if (result.on_boundary) {
    std::cerr << "warning: collapse optimum (" << result.p_c << ", " << result.nu
              << ") lies on the search-box boundary\n";
  }
  result.landscape = {coarse.p_lo, coarse.p_hi, coarse.n_lo, coarse.n_hi, coarse.np, coarse.nn, coarse.eps};

  // Trace the connected 2 eps_min region, growing the refinement window until
  // the region no longer touches an edge that lies inside the search box.
  const double threshold = 2 * result.eps_min;
  double hp = 2 * dp;
  double hn = 2 * dn;
  const int r = box.refine_grid;
  for (int attempt = 0;; ++attempt) {
    const double p_lo = std::max(box.p_c_lo, result.p_c - hp);
    const double p_hi = std::min(box.p_c_hi, result.p_c + hp);
    const double n_lo = std::max(box.nu_lo, result.nu - hn);
    const double n_hi = std::min(box.nu_hi, result.nu + hn);
    const Grid g = scan(points, p_lo, p_hi, n_lo, n_hi, r, r, spec, seed, workers);
    auto nearest = [](double lo, double hi, int count, double v) {
      return std::clamp(static_cast<int>(std::lround((v - lo) / (hi - lo) * (count - 1))), 0, count - 1);
    };
    int ci = nearest(p_lo, p_hi, r, result.p_c);
    int cj = nearest(n_lo, n_hi, r, result.nu);
    // The grid point nearest the optimum can sit just above threshold on a
    // narrow valley; fall back to the lowest cell in its neighbourhood.
    if (!(g.at(ci, cj) <= threshold)) {
      double low = kInf;
      for (int dj = -2; dj <= 2; ++dj) {
        for (int di = -2; di <= 2; ++di) {
          const int i = ci + di, j = cj + dj;
          if (i >= 0 && i < r && j >= 0 && j < r && g.at(i, j) < low) {
            low = g.at(i, j);
            ci = i;
            cj = j;
          }
        }
      }
    }
    std::vector<char> seen(g.eps.size(), 0);
    int i_min = ci, i_max = ci, j_min = cj, j_max = cj;
    if (g.at(ci, cj) <= threshold) {
      std::deque<std::pair<int, int>> queue{{ci, cj}};
      seen[static_cast<size_t>(cj) * r + ci] = 1;
      while (!queue.empty()) {
        const auto [i, j] = queue.front();
        queue.pop_front();
        i_min = std::min(i_min, i);
        i_max = std::max(i_max, i);
        j_min = std::min(j_min, j);
        j_max = std::max(j_max, j);
        const std::pair<int, int> next[] = {{i + 1, j}, {i - 1, j}, {i, j + 1}, {i, j - 1}};
        for (const auto& [a, b] : next) {
          if (a < 0 || a >= r || b < 0 || b >= r) continue;
          const size_t k = static_cast<size_t>(b) * r + a;
          if (!seen[k] && g.eps[k] <= threshold) {
            seen[k] = 1;
            queue.emplace_back(a, b);
          }
        }
      }
    }
    const bool grow_p = (i_min == 0 && p_lo > box.p_c_lo) || (i_max == r - 1 && p_hi < box.p_c_hi);
    const bool grow_n = (j_min == 0 && n_lo > box.nu_lo) || (j_max == r - 1 && n_hi < box.nu_hi);
    if ((!grow_p && !grow_n) || attempt >= 8) {
      // Half a grid spacing on each side: a single cell still has finite resolution.
      const double sp = (p_hi - p_lo) / (r - 1);
      const double sn = (n_hi - n_lo) / (r - 1);
      result.p_c_err = (g.p_at(i_max) - g.p_at(i_min) + sp) / 2;
      result.nu_err = (g.nu_at(j_max) - g.nu_at(j_min) + sn) / 2;
      break;
    }
    if (grow_p) hp *= 2;
    if (grow_n) hn *= 2;
  }
  return result;
}

}  // namespace dynsyn
