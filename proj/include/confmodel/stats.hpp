#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>

namespace confmodel {

/// Sample mean with its standard error (sample standard deviation / sqrt(reps)).
struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t reps = 0;
};

inline McEstimate summarize(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("summarize: no samples");
  McEstimate e;
  e.reps = values.size();
  double sum = 0.0;
  for (double v : values) sum += v;
  e.mean = sum / static_cast<double>(e.reps);
  if (e.reps > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - e.mean) * (v - e.mean);
    e.std_error = std::sqrt(ss / static_cast<double>(e.reps - 1) / static_cast<double>(e.reps));
  }
  return e;
}

/// Binomial standard deviation of a frequency estimated from `trials` draws at probability p (clipped to [0,1]).
inline double binomial_sigma(double p, std::size_t trials) {
  const double c = p < 0.0 ? 0.0 : (p > 1.0 ? 1.0 : p);
  return std::sqrt(c * (1.0 - c) / static_cast<double>(trials));
}

}  // namespace confmodel
