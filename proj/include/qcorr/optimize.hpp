#pragma once

#include <functional>
#include <span>
#include <vector>

namespace qcorr {

struct NelderMeadOptions {
  int max_iterations = 400;
  double value_tolerance = 1e-13;  // spread of simplex values
  double point_tolerance = 1e-10;  // simplex diameter
};

struct NelderMeadResult {
  std::vector<double> point;
  double value = 0.0;
  long evaluations = 0;
  int iterations = 0;
};

// Downhill simplex with the standard coefficients (reflect 1, expand 2,
// contract 1/2, shrink 1/2). Unconstrained; callers embed constraints in the
// objective. Deterministic.
NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& f,
                             std::span<const double> start, double initial_step,
                             const NelderMeadOptions& options = {});

}  // namespace qcorr
