#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "confmodel/kernels.hpp"

namespace confmodel::kernels {

namespace {

double log_weight(const Multigraph& g, const LogWeights& w, const std::vector<std::size_t>& sigma) {
  double x = 0.0;
  for (auto s : sigma) x += w.log_h[s];
  for (auto [i, j] : g.edges()) x += w.log_j[sigma[i] * w.q + sigma[j]];
  return x;
}

// Advances sigma as a base-q counter (digit 0 fastest). Returns false on wrap.
bool advance(std::vector<std::size_t>& sigma, std::size_t q) {
  for (auto& digit : sigma) {
    if (++digit < q) return true;
    digit = 0;
  }
  return false;
}

std::uint64_t state_count(std::size_t n, std::size_t q) {
  std::uint64_t states = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (states > std::numeric_limits<std::uint64_t>::max() / q) throw std::domain_error("state space overflow");
    states *= q;
  }
  return states;
}

struct LogSumExp {
  double max = -std::numeric_limits<double>::infinity();
  double sum = 0.0;  // relative to max

  void add(double x) {
    if (x <= max) {
      sum += std::exp(x - max);
    } else {
      sum = sum * std::exp(max - x) + 1.0;
      max = x;
    }
  }
  void merge(const LogSumExp& o) {
    if (o.sum == 0.0) return;
    if (sum == 0.0) {
      *this = o;
      return;
    }
    if (o.max <= max) {
      sum += o.sum * std::exp(o.max - max);
    } else {
      sum = sum * std::exp(max - o.max) + o.sum;
      max = o.max;
    }
  }
  double value() const { return max + std::log(sum); }
};

}  // namespace

double log_partition_reference(const Multigraph& g, const LogWeights& w) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return 0.0;
  std::vector<std::size_t> sigma(n, 0);
  double top = -std::numeric_limits<double>::infinity();
  do {
    top = std::max(top, log_weight(g, w, sigma));
  } while (advance(sigma, w.q));
  double sum = 0.0;
  do {
    sum += std::exp(log_weight(g, w, sigma) - top);
  } while (advance(sigma, w.q));
  return top + std::log(sum);
}

double log_partition_parallel(const Multigraph& g, const LogWeights& w, int workers) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return 0.0;
  const std::size_t q = w.q;
  const std::uint64_t states = state_count(n, q);

  // Incidence lists: neighbours of v other than itself, plus loop count.
  std::vector<std::vector<std::size_t>> nbrs(n);
  std::vector<std::size_t> loops(n, 0);
  for (auto [i, j] : g.edges()) {
    if (i == j) {
      ++loops[i];
    } else {
      nbrs[i].push_back(j);
      nbrs[j].push_back(i);
    }
  }

  // Chunks of consecutive counter values; each starts with a fresh evaluation
  // so rounding drift from incremental updates stays local. Partial sums are
  // merged in chunk order, which makes the result independent of thread count.
  const std::uint64_t chunk_size = 4096;
  const auto chunks = static_cast<std::int64_t>((states + chunk_size - 1) / chunk_size);
  std::vector<LogSumExp> partial(static_cast<std::size_t>(chunks));

#pragma omp parallel num_threads(std::max(workers, 1))
  {
    std::vector<std::size_t> sigma(n);
#pragma omp for schedule(static)
    for (std::int64_t c = 0; c < chunks; ++c) {
      LogSumExp acc;
      std::uint64_t start = static_cast<std::uint64_t>(c) * chunk_size;
      std::uint64_t stop = std::min(states, start + chunk_size);
      std::uint64_t code = start;
      for (std::size_t v = 0; v < n; ++v) {
        sigma[v] = static_cast<std::size_t>(code % q);
        code /= q;
      }
      double x = log_weight(g, w, sigma);
      acc.add(x);
      for (std::uint64_t s = start + 1; s < stop; ++s) {
        for (std::size_t v = 0; v < n; ++v) {
          const std::size_t old = sigma[v];
          const std::size_t now = old + 1 < q ? old + 1 : 0;
          x += w.log_h[now] - w.log_h[old];
          for (auto u : nbrs[v]) x += w.log_j[now * q + sigma[u]] - w.log_j[old * q + sigma[u]];
          x += static_cast<double>(loops[v]) * (w.log_j[now * q + now] - w.log_j[old * q + old]);
          sigma[v] = now;
          if (now != 0) break;
        }
        acc.add(x);
      }
      partial[static_cast<std::size_t>(c)] = acc;
    }
  }
  LogSumExp total;
  for (const auto& p : partial) total.merge(p);
  return total.value();
}

}  // namespace confmodel::kernels
