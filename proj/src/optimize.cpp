#include "qcorr/optimize.hpp"

#include <algorithm>
#include <cmath>

namespace qcorr {

NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& f,
                             std::span<const double> start, double initial_step,
                             const NelderMeadOptions& options) {
  const std::size_t n = start.size();
  long evals = 0;
  auto eval = [&](const std::vector<double>& x) {
    ++evals;
    return f(x);
  };

  struct Vertex {
    std::vector<double> x;
    double fx;
  };
  std::vector<Vertex> simplex;
  simplex.reserve(n + 1);
  {
    std::vector<double> x0(start.begin(), start.end());
    simplex.push_back({x0, eval(x0)});
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<double> xi = x0;
      xi[i] += initial_step;
      simplex.push_back({xi, eval(xi)});
    }
  }
  auto by_value = [](const Vertex& a, const Vertex& b) { return a.fx < b.fx; };

  int iter = 0;
  for (; iter < options.max_iterations; ++iter) {
    std::stable_sort(simplex.begin(), simplex.end(), by_value);

    const double spread = simplex.back().fx - simplex.front().fx;
    double diameter = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double lo = simplex.front().x[i];
      double hi = lo;
      for (const Vertex& v : simplex) {
        lo = std::min(lo, v.x[i]);
        hi = std::max(hi, v.x[i]);
      }
      diameter = std::max(diameter, hi - lo);
    }
    if (spread < options.value_tolerance && diameter < options.point_tolerance) {
      break;
    }

    // centroid of all but the worst vertex
    std::vector<double> centroid(n, 0.0);
    for (std::size_t v = 0; v < n; ++v) {
      for (std::size_t i = 0; i < n; ++i) {
        centroid[i] += simplex[v].x[i];
      }
    }
    for (double& c : centroid) {
      c /= static_cast<double>(n);
    }
    Vertex& worst = simplex.back();

    auto blend = [&](double t) {
      std::vector<double> x(n);
      for (std::size_t i = 0; i < n; ++i) {
        x[i] = centroid[i] + t * (centroid[i] - worst.x[i]);
      }
      return x;
    };

    std::vector<double> reflected = blend(1.0);
    const double f_reflected = eval(reflected);
    if (f_reflected < simplex.front().fx) {
      std::vector<double> expanded = blend(2.0);
      const double f_expanded = eval(expanded);
      if (f_expanded < f_reflected) {
        worst = {std::move(expanded), f_expanded};
      } else {
        worst = {std::move(reflected), f_reflected};
      }
      continue;
    }
    if (f_reflected < simplex[simplex.size() - 2].fx) {
      worst = {std::move(reflected), f_reflected};
      continue;
    }
    std::vector<double> contracted = blend(f_reflected < worst.fx ? 0.5 : -0.5);
    const double f_contracted = eval(contracted);
    if (f_contracted < std::min(f_reflected, worst.fx)) {
      worst = {std::move(contracted), f_contracted};
      continue;
    }
    // shrink towards the best vertex
    for (std::size_t v = 1; v < simplex.size(); ++v) {
      for (std::size_t i = 0; i < n; ++i) {
        simplex[v].x[i] = simplex[0].x[i] + 0.5 * (simplex[v].x[i] - simplex[0].x[i]);
      }
      simplex[v].fx = eval(simplex[v].x);
    }
  }

  std::stable_sort(simplex.begin(), simplex.end(), by_value);
  return {simplex.front().x, simplex.front().fx, evals, iter};
}

}  // namespace qcorr
