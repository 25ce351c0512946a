#pragma once

// Small hand-rolled generators for property tests.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <vector>

#include <Eigen/Dense>

#include "confmodel/degree.hpp"
#include "confmodel/multigraph.hpp"
#include "confmodel/random.hpp"

namespace gen {

using confmodel::Multigraph;
using confmodel::RandomStream;

/// Calls fn on every multigraph with n vertices and at most max_edges edges
/// (each edge multiset once, loops included).
inline void for_each_multigraph(std::size_t n, std::size_t max_edges, const std::function<void(const Multigraph&)>& fn) {
  std::vector<Multigraph::Edge> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) slots.emplace_back(i, j);
  std::vector<Multigraph::Edge> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    fn(Multigraph(n, chosen));
    if (chosen.size() == max_edges) return;
    for (std::size_t s = from; s < slots.size(); ++s) {
      chosen.push_back(slots[s]);
      rec(s);
      chosen.pop_back();
    }
  };
  rec(0);
}

inline std::vector<std::size_t> permutation(std::size_t n, RandomStream& rng) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::shuffle(p.begin(), p.end(), rng.engine());
  return p;
}

inline Multigraph multigraph(std::size_t n, std::size_t edges, RandomStream& rng) {
  Multigraph g(n);
  for (std::size_t e = 0; e < edges; ++e) g.add_edge(rng.below(n), rng.below(n));
  return g;
}

inline confmodel::DegreeSequence degrees(std::size_t n, std::size_t max_degree, RandomStream& rng) {
  std::vector<std::size_t> d(n);
  for (auto& x : d) x = rng.below(max_degree + 1);
  return confmodel::DegreeSequence(d);
}

/// Random CND matrix u 1^T + 1 u^T - X X^T.
inline Eigen::MatrixXd cnd_matrix(std::size_t n, RandomStream& rng) {
  Eigen::VectorXd u(n);
  Eigen::MatrixXd x(n, 3);
  for (std::size_t i = 0; i < n; ++i) {
    u(i) = 4 * rng.uniform() - 2;
    for (int k = 0; k < 3; ++k) x(i, k) = 2 * rng.uniform() - 1;
  }
  Eigen::VectorXd one = Eigen::VectorXd::Ones(n);
  return u * one.transpose() + one * u.transpose() - x * x.transpose();
}

}  // namespace gen
