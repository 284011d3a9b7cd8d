#pragma once

// Globally adaptive Gauss–Kronrod (7, 15) integration over a list of
// breakpoints. Internal to the quad module.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <queue>
#include <span>
#include <string>
#include <vector>

#include "etaint/error.hpp"

namespace etaint::quad::detail {

inline std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

struct Panel {
  double lo = 0.0;
  double hi = 0.0;
  double value = 0.0;
  double err = 0.0;
  bool roundoff_limited = false;
};

struct AdaptiveResult {
  double value = 0.0;
  double err = 0.0;
  long evals = 0;
  std::size_t panels = 0;
};

// Kronrod abscissae (descending), Kronrod weights, and Gauss weights for the
// odd-indexed Kronrod nodes (which are the 7 Gauss points).
inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

// Panels whose |K15 − G7| falls below this multiple of eps·∫|g| are at the
// rounding floor and are not split further.
inline constexpr double kRoundoffFactor = 20.0;

template <class F>
Panel gk15(const F& f, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = f(center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  double abs_sum = std::abs(kronrod);
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    kronrod += kWgk[j] * (f1 + f2);
    abs_sum += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }
  Panel p{lo, hi, kronrod * half, 0.0, false};
  const double diff = std::abs((kronrod - gauss) * half);
  const double floor =
      kRoundoffFactor * std::numeric_limits<double>::epsilon() * abs_sum * half;
  p.err = std::max(diff, floor);
  p.roundoff_limited = diff <= floor;
  return p;
}

struct ByError {
  bool operator()(const Panel& a, const Panel& b) const {
    if (a.err != b.err) return a.err < b.err;
    return a.lo > b.lo;
  }
};

/// Integrates f over [breaks.front(), breaks.back()] until the summed panel
/// error is at most `target`. Throws NonConvergence when `budget` function
/// evaluations would be exceeded, or when every remaining panel is at the
/// rounding floor while the target is still unmet.
template <class F>
AdaptiveResult adaptive_gk(const F& f, std::span<const double> breaks,
                           double target, long budget) {
  constexpr long kPerPanel = 15;
  std::priority_queue<Panel, std::vector<Panel>, ByError> heap;
  std::vector<Panel> settled;
  long evals = 0;
  double total_err = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (!(breaks[i + 1] > breaks[i])) continue;
    Panel p = gk15(f, breaks[i], breaks[i + 1]);
    evals += kPerPanel;
    total_err += p.err;
    heap.push(p);
  }

  while (total_err > target) {
    if (heap.empty()) {
      throw NonConvergence("adaptive quadrature: rounding floor reached at error " +
                           sci(total_err) + " (target " + sci(target) + ")");
    }
    Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (worst.roundoff_limited || !(mid > worst.lo && mid < worst.hi)) {
      settled.push_back(worst);
      continue;
    }
    if (evals + 2 * kPerPanel > budget) {
      throw NonConvergence("adaptive quadrature: evaluation budget of " +
                           std::to_string(budget) + " exhausted at error " +
                           sci(total_err) + " (target " + sci(target) + ")");
    }
    const Panel left = gk15(f, worst.lo, mid);
    const Panel right = gk15(f, mid, worst.hi);
    evals += 2 * kPerPanel;
    total_err += left.err + right.err - worst.err;
    heap.push(left);
    heap.push(right);
  }

  while (!heap.empty()) {
    settled.push_back(heap.top());
    heap.pop();
  }
  std::sort(settled.begin(), settled.end(),
            [](const Panel& a, const Panel& b) { return a.lo < b.lo; });
  AdaptiveResult out;
  for (const Panel& p : settled) {
    out.value += p.value;
    out.err += p.err;
  }
  out.evals = evals;
  out.panels = settled.size();
  return out;
}

}  // namespace etaint::quad::detail
