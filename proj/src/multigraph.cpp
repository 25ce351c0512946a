#include "confmodel/multigraph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace confmodel {

Multigraph::Multigraph(std::size_t n, std::vector<Edge> edges) : n_(n) {
  edges_.reserve(edges.size());
  for (auto [i, j] : edges) add_edge(i, j);
}

void Multigraph::add_edge(Vertex i, Vertex j) {
  if (i >= n_ || j >= n_)
    throw std::out_of_range("edge {" + std::to_string(i) + "," + std::to_string(j) + "} outside vertex range 0.." +
                            std::to_string(n_ == 0 ? 0 : n_ - 1));
  edges_.emplace_back(std::min(i, j), std::max(i, j));
}

Multigraph Multigraph::with_edge(Vertex i, Vertex j) const {
  Multigraph g = *this;
  g.add_edge(i, j);
  return g;
}

std::vector<std::size_t> Multigraph::degrees() const {
  std::vector<std::size_t> deg(n_, 0);
  for (auto [i, j] : edges_) {
    ++deg[i];
    ++deg[j];
  }
  return deg;
}

std::size_t Multigraph::max_degree() const {
  auto deg = degrees();
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

std::vector<bool> Multigraph::loop_vertices() const {
  std::vector<bool> loop(n_, false);
  for (auto [i, j] : edges_)
    if (i == j) loop[i] = true;
  return loop;
}

bool Multigraph::is_simple() const {
  auto e = canonical_edges();
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k].first == e[k].second) return false;
    if (k > 0 && e[k] == e[k - 1]) return false;
  }
  return true;
}

std::vector<std::size_t> Multigraph::component_labels() const {
  std::vector<std::size_t> parent(n_);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (auto [i, j] : edges_) {
    auto a = find(i), b = find(j);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> label(n_), root_label(n_, n_);
  std::size_t next = 0;
  for (std::size_t v = 0; v < n_; ++v) {
    auto r = find(v);
    if (root_label[r] == n_) root_label[r] = next++;
    label[v] = root_label[r];
  }
  return label;
}

std::vector<Multigraph> Multigraph::components() const {
  auto label = component_labels();
  std::size_t k = n_ == 0 ? 0 : *std::max_element(label.begin(), label.end()) + 1;
  std::vector<std::size_t> local(n_), sizes(k, 0);
  for (std::size_t v = 0; v < n_; ++v) local[v] = sizes[label[v]]++;
  std::vector<Multigraph> parts;
  parts.reserve(k);
  for (std::size_t c = 0; c < k; ++c) parts.emplace_back(sizes[c]);
  for (auto [i, j] : edges_) parts[label[i]].add_edge(local[i], local[j]);
  return parts;
}

Multigraph Multigraph::disjoint_union(const Multigraph& other) const {
  Multigraph g(n_ + other.n_);
  g.edges_ = edges_;
  for (auto [i, j] : other.edges_) g.edges_.emplace_back(i + n_, j + n_);
  return g;
}

Multigraph Multigraph::relabeled(std::span<const Vertex> perm) const {
  if (perm.size() != n_) throw std::invalid_argument("relabeled: permutation size mismatch");
  Multigraph g(n_);
  for (auto [i, j] : edges_) g.add_edge(perm[i], perm[j]);
  return g;
}

std::vector<Multigraph::Edge> Multigraph::canonical_edges() const {
  auto e = edges_;
  std::sort(e.begin(), e.end());
  return e;
}

}  // namespace confmodel
