#pragma once

// Brute-force reference implementations used only by the tests. They share no
// code with the library paths they check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "confmodel/config_model.hpp"
#include "confmodel/degree.hpp"
#include "confmodel/multigraph.hpp"
#include "confmodel/parameters.hpp"

namespace oracle {

using confmodel::Multigraph;

inline bool independent(const Multigraph& g, std::uint32_t set) {
  for (auto [i, j] : g.edges())
    if (((set >> i) & 1) && ((set >> j) & 1)) return false;  // also catches loops (i == j)
  return true;
}

inline std::size_t independence(const Multigraph& g) {
  std::size_t best = 0;
  for (std::uint32_t s = 0; s < (1u << g.vertex_count()); ++s)
    if (independent(g, s)) best = std::max<std::size_t>(best, std::popcount(s));
  return best;
}

inline std::vector<std::size_t> mis_core(const Multigraph& g) {
  const std::size_t alpha = oracle::independence(g);
  std::uint32_t core = (1u << g.vertex_count()) - 1;
  for (std::uint32_t s = 0; s < (1u << g.vertex_count()); ++s)
    if (std::popcount(s) == static_cast<int>(alpha) && independent(g, s)) core &= s;
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if ((core >> v) & 1) out.push_back(v);
  return out;
}

/// All 2^n side assignments (no symmetry reduction).
inline std::size_t max_cut(const Multigraph& g) {
  std::size_t best = 0;
  for (std::uint32_t s = 0; s < (1u << g.vertex_count()); ++s) {
    std::size_t cut = 0;
    for (auto [i, j] : g.edges()) cut += ((s >> i) & 1) != ((s >> j) & 1);
    best = std::max(best, cut);
  }
  return best;
}

/// Sides (bitmask) of every maximum cut.
inline std::vector<std::uint32_t> max_cuts(const Multigraph& g) {
  const std::size_t best = oracle::max_cut(g);
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = 0; s < (1u << g.vertex_count()); ++s) {
    std::size_t cut = 0;
    for (auto [i, j] : g.edges()) cut += ((s >> i) & 1) != ((s >> j) & 1);
    if (cut == best) out.push_back(s);
  }
  return out;
}

/// Depth-first search components.
inline std::vector<int> component_of(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::size_t>> adj(n);
  for (auto [i, j] : g.edges()) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  std::vector<int> comp(n, -1);
  int next = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> stack{s};
    comp[s] = next;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (auto u : adj[v])
        if (comp[u] < 0) {
          comp[u] = next;
          stack.push_back(u);
        }
    }
    ++next;
  }
  return comp;
}

inline std::size_t components(const Multigraph& g) {
  auto c = component_of(g);
  return c.empty() ? 0 : static_cast<std::size_t>(*std::max_element(c.begin(), c.end()) + 1);
}

/// Direct sum of weights in long double, no shifting.
inline double log_partition(const Multigraph& g, const confmodel::SpinModel& m) {
  const std::size_t n = g.vertex_count(), q = m.q();
  std::vector<std::size_t> sigma(n, 0);
  long double z = 0;
  while (true) {
    long double w = 1;
    for (auto s : sigma) w *= m.h(s);
    for (auto [i, j] : g.edges()) w *= m.j(sigma[i], sigma[j]);
    z += w;
    std::size_t k = 0;
    while (k < n && ++sigma[k] == q) sigma[k++] = 0;
    if (k == n) break;
  }
  return static_cast<double>(std::log(z));
}

/// CDF route: W = sum_{k>=0} |F(k) - F'(k)|.
inline double wasserstein_cdf(const confmodel::DegreeDistribution& a, const confmodel::DegreeDistribution& b) {
  const std::size_t top = std::max(a.max_degree(), b.max_degree());
  double fa = 0, fb = 0, w = 0;
  for (std::size_t k = 0; k <= top; ++k) {
    fa += a.probability(k);
    fb += b.probability(k);
    w += std::abs(fa - fb);
  }
  return w;
}

/// Every set of disjoint pairs of 0..h-1 (all partial matchings), by subset of the pair list.
inline std::vector<confmodel::Matching> all_partial_matchings(std::size_t h) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t x = 0; x < h; ++x)
    for (std::size_t y = x + 1; y < h; ++y) pairs.emplace_back(x, y);
  std::vector<confmodel::Matching> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << pairs.size()); ++s) {
    std::vector<std::pair<std::size_t, std::size_t>> chosen;
    std::uint64_t used = 0;
    bool ok = true;
    for (std::size_t k = 0; k < pairs.size() && ok; ++k) {
      if (!((s >> k) & 1)) continue;
      auto [x, y] = pairs[k];
      if (((used >> x) & 1) || ((used >> y) & 1)) ok = false;
      used |= (std::uint64_t{1} << x) | (std::uint64_t{1} << y);
      chosen.push_back(pairs[k]);
    }
    if (ok) out.push_back(confmodel::Matching::trusted(chosen));
  }
  return out;
}

/// Maximal matchings via all orderings of the half-edges paired consecutively,
/// with the number of orderings producing each one.
inline std::map<confmodel::Matching, std::size_t> maximal_by_permutation(std::size_t h) {
  std::vector<std::size_t> perm(h);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::map<confmodel::Matching, std::size_t> out;
  do {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t k = 0; k + 1 < h; k += 2) pairs.emplace_back(perm[k], perm[k + 1]);
    ++out[confmodel::Matching::trusted(pairs)];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

inline Multigraph cycle(std::size_t k) {
  Multigraph g(k);
  for (std::size_t v = 0; v < k; ++v) g.add_edge(v, (v + 1) % k);
  return g;
}

inline Multigraph path(std::size_t p) {
  Multigraph g(p);
  for (std::size_t v = 0; v + 1 < p; ++v) g.add_edge(v, v + 1);
  return g;
}

}  // namespace oracle
