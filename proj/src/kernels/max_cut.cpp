#include <algorithm>
#include <bit>
#include <stdexcept>

#include "confmodel/kernels.hpp"

namespace confmodel::kernels {

namespace {

constexpr std::size_t kMaxEnumerated = 40;

// Loops never cross a cut, so they are dropped.
std::vector<Multigraph::Edge> cut_edges(const Multigraph& g) {
  std::vector<Multigraph::Edge> out;
  for (auto e : g.edges())
    if (e.first != e.second) out.push_back(e);
  return out;
}

}  // namespace

std::size_t max_cut_reference(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return 0;
  if (n > kMaxEnumerated) throw std::domain_error("instance too large for exact solver");
  const auto edges = cut_edges(g);
  std::size_t best = 0;
  // Vertex n-1 stays on side 0.
  const std::uint64_t states = std::uint64_t{1} << (n - 1);
  for (std::uint64_t s = 0; s < states; ++s) {
    std::size_t cut = 0;
    for (auto [i, j] : edges) cut += ((s >> i) & 1) != ((s >> j) & 1);
    best = std::max(best, cut);
  }
  return best;
}

std::size_t max_cut_parallel(const Multigraph& g, int workers) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return 0;
  if (n > kMaxEnumerated) throw std::domain_error("instance too large for exact solver");
  const auto edges = cut_edges(g);

  std::vector<long long> weight(n * n, 0);
  for (auto [i, j] : edges) {
    ++weight[i * n + j];
    ++weight[j * n + i];
  }

  const std::size_t free_bits = n - 1;
  const std::size_t low_bits = std::min<std::size_t>(free_bits, 14);
  const std::int64_t chunks = std::int64_t{1} << (free_bits - low_bits);
  const std::uint64_t chunk_states = std::uint64_t{1} << low_bits;

  long long best = 0;
#pragma omp parallel for schedule(static) reduction(max : best) num_threads(std::max(workers, 1))
  for (std::int64_t chunk = 0; chunk < chunks; ++chunk) {
    std::vector<char> side(n, 0);
    const std::uint64_t high = static_cast<std::uint64_t>(chunk) << low_bits;
    for (std::size_t v = 0; v < free_bits; ++v) side[v] = static_cast<char>((high >> v) & 1);
    long long cut = 0;
    for (auto [i, j] : edges) cut += side[i] != side[j];
    long long local = cut;
    for (std::uint64_t t = 1; t < chunk_states; ++t) {
      const auto v = static_cast<std::size_t>(std::countr_zero(t));
      const long long* row = &weight[v * n];
      long long delta = 0;
      for (std::size_t u = 0; u < n; ++u) {
        if (row[u] == 0) continue;
        delta += side[u] == side[v] ? row[u] : -row[u];
      }
      side[v] ^= 1;
      cut += delta;
      local = std::max(local, cut);
    }
    best = std::max(best, local);
  }
  return static_cast<std::size_t>(best);
}

}  // namespace confmodel::kernels
