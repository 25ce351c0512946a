#pragma once

// Compute kernels. Each data-parallel kernel has an OpenMP version and a serial
// reference with an independent code path; the tests check that they agree and
// bench/ times them against each other.

#include <cstddef>
#include <cstdint>
#include <exception>
#include <span>
#include <type_traits>
#include <vector>

#include <omp.h>

#include "confmodel/multigraph.hpp"

namespace confmodel {

inline int default_workers() { return omp_get_max_threads(); }

namespace kernels {

/// Maximum cut by recomputing every bipartition from scratch.
std::size_t max_cut_reference(const Multigraph& g);
/// Maximum cut by Gray-code enumeration, chunks of the 2^(n-1) space spread over workers.
std::size_t max_cut_parallel(const Multigraph& g, int workers);

/// Spin system in log form: log_h[s], log_j[s * q + t].
struct LogWeights {
  std::size_t q;
  std::vector<double> log_h;
  std::vector<double> log_j;
};

/// log sum_sigma w(sigma), two-pass max-shift over all q^n states.
double log_partition_reference(const Multigraph& g, const LogWeights& w);
/// Same sum with per-worker online log-sum-exp and incremental odometer updates.
double log_partition_parallel(const Multigraph& g, const LogWeights& w, int workers);

/// Branch-and-bound maximum independent set size (n <= 64). Loop vertices are excluded.
std::size_t independent_set_branch_and_bound(const Multigraph& g);

/// out[i] = fn(i) evaluated in index order on the calling thread.
template <class Fn>
auto parallel_map_serial(std::size_t count, Fn&& fn) {
  using T = std::invoke_result_t<Fn&, std::size_t>;
  std::vector<T> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(fn(i));
  return out;
}

/// out[i] = fn(i) with indices spread over `workers` threads. fn must be pure in
/// the sense that fn(i) depends only on i, so the result matches the serial map.
template <class Fn>
auto parallel_map(std::size_t count, int workers, Fn&& fn) {
  using T = std::invoke_result_t<Fn&, std::size_t>;
  if (workers <= 1 || count <= 1) return parallel_map_serial(count, fn);
  std::vector<T> out(count);
  std::exception_ptr error;
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic) num_threads(workers)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(confmodel_parallel_map)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace kernels
}  // namespace confmodel
