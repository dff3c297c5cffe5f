#pragma once

// Internal derivative-free simplex minimizer used by the fitters. The
// objectives here are cheap, smooth and 2-dimensional, so Nelder-Mead
// with tight convergence windows is plenty. Not installed.

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <vector>

namespace trigas::detail {

struct SimplexResult {
  std::vector<double> x;
  double fmin = 0.0;
  bool converged = false;
  int iterations = 0;
};

// Minimizes f starting from x0 with initial steps `step` per coordinate.
// Converged when both the relative parameter spread and the relative f
// spread of the simplex fall below the tolerances.
inline SimplexResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                                 std::vector<double> x0, const std::vector<double>& step,
                                 double xtol_rel = 1e-8, double ftol_rel = 1e-10,
                                 double ftol_abs = 1e-12, int max_iter = 20000) {
  const size_t n = x0.size();
  std::vector<std::vector<double>> pts(n + 1, x0);
  for (size_t i = 0; i < n; ++i) pts[i + 1][i] += step[i] != 0.0 ? step[i] : 1e-8;
  std::vector<double> fv(n + 1);
  for (size_t i = 0; i <= n; ++i) fv[i] = f(pts[i]);

  auto order = [&] {
    std::vector<size_t> idx(n + 1);
    std::iota(idx.begin(), idx.end(), size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return fv[a] < fv[b]; });
    std::vector<std::vector<double>> p2(n + 1);
    std::vector<double> f2(n + 1);
    for (size_t i = 0; i <= n; ++i) {
      p2[i] = pts[idx[i]];
      f2[i] = fv[idx[i]];
    }
    pts.swap(p2);
    fv.swap(f2);
  };

  SimplexResult res;
  int iter = 0;
  for (; iter < max_iter; ++iter) {
    order();

    double fspread = std::abs(fv[n] - fv[0]);
    double fscale = std::abs(fv[0]) + std::abs(fv[n]) + 1e-300;
    double xspread = 0.0;
    for (size_t i = 0; i < n; ++i) {
      double lo = pts[0][i], hi = pts[0][i];
      for (size_t k = 1; k <= n; ++k) {
        lo = std::min(lo, pts[k][i]);
        hi = std::max(hi, pts[k][i]);
      }
      const double scale = std::max({std::abs(lo), std::abs(hi), 1e-300});
      xspread = std::max(xspread, (hi - lo) / scale);
    }
    // The absolute floor matters for chi2-like objectives sitting at the
    // numerical noise floor, where relative spreads never settle.
    if (xspread < xtol_rel && (fspread / fscale < ftol_rel || fspread < ftol_abs)) {
      res.converged = true;
      break;
    }

    // Centroid of all but the worst vertex.
    std::vector<double> centroid(n, 0.0);
    for (size_t k = 0; k < n; ++k)
      for (size_t i = 0; i < n; ++i) centroid[i] += pts[k][i] / static_cast<double>(n);

    auto blend = [&](double coef) {
      std::vector<double> x(n);
      for (size_t i = 0; i < n; ++i) x[i] = centroid[i] + coef * (pts[n][i] - centroid[i]);
      return x;
    };

    std::vector<double> xr = blend(-1.0);  // reflection
    const double fr = f(xr);
    if (fr < fv[0]) {
      std::vector<double> xe = blend(-2.0);  // expansion
      const double fe = f(xe);
      if (fe < fr) {
        pts[n] = std::move(xe);
        fv[n] = fe;
      } else {
        pts[n] = std::move(xr);
        fv[n] = fr;
      }
    } else if (fr < fv[n - 1]) {
      pts[n] = std::move(xr);
      fv[n] = fr;
    } else {
      const bool outside = fr < fv[n];
      std::vector<double> xc = blend(outside ? -0.5 : 0.5);
      const double fc = f(xc);
      if (fc < std::min(fr, fv[n])) {
        pts[n] = std::move(xc);
        fv[n] = fc;
      } else {
        // Shrink toward the best vertex.
        for (size_t k = 1; k <= n; ++k) {
          for (size_t i = 0; i < n; ++i) pts[k][i] = pts[0][i] + 0.5 * (pts[k][i] - pts[0][i]);
          fv[k] = f(pts[k]);
        }
      }
    }
  }
  order();
  res.x = pts[0];
  res.fmin = fv[0];
  res.iterations = iter;
  return res;
}

}  // namespace trigas::detail
