#include <bit>
#include <stdexcept>

#include "confmodel/kernels.hpp"

namespace confmodel::kernels {

namespace {

using Mask = std::uint64_t;

struct Search {
  std::vector<Mask> adj;  // open neighbourhoods, loops removed
  std::size_t best = 0;

  // Greedy clique cover of P: an independent set picks at most one vertex per clique.
  std::size_t clique_cover_bound(Mask p) const {
    std::size_t cliques = 0;
    while (p) {
      const int v = std::countr_zero(p);
      Mask clique = Mask{1} << v;
      Mask cand = adj[v] & p;
      while (cand) {
        const int u = std::countr_zero(cand);
        clique |= Mask{1} << u;
        cand &= adj[u];
      }
      p &= ~clique;
      ++cliques;
    }
    return cliques;
  }

  void run(Mask p, std::size_t size) {
    // Vertices of degree 0 or 1 in P belong to some maximum independent set of G[P].
    bool reduced = true;
    while (reduced && p) {
      reduced = false;
      for (Mask rest = p; rest; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        const Mask nb = adj[v] & p;
        if (std::popcount(nb) <= 1) {
          p &= ~(nb | (Mask{1} << v));
          ++size;
          reduced = true;
          break;
        }
      }
    }
    if (!p) {
      if (size > best) best = size;
      return;
    }
    if (size + static_cast<std::size_t>(std::popcount(p)) <= best) return;
    if (size + clique_cover_bound(p) <= best) return;

    int pivot = -1, pivot_degree = -1;
    for (Mask rest = p; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const int deg = std::popcount(adj[v] & p);
      if (deg > pivot_degree) {
        pivot = v;
        pivot_degree = deg;
      }
    }
    const Mask bit = Mask{1} << pivot;
    run(p & ~(bit | adj[pivot]), size + 1);
    run(p & ~bit, size);
  }
};

}  // namespace

std::size_t independent_set_branch_and_bound(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  if (n > 64) throw std::domain_error("instance too large for exact solver");
  Search search;
  search.adj.assign(n, 0);
  Mask p = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  for (auto [i, j] : g.edges()) {
    if (i == j) {
      p &= ~(Mask{1} << i);
    } else {
      search.adj[i] |= Mask{1} << j;
      search.adj[j] |= Mask{1} << i;
    }
  }
  search.run(p, 0);
  return search.best;
}

}  // namespace confmodel::kernels
