#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace confmodel {

/// Finite undirected multigraph on vertices 0..n-1; loops and parallel edges allowed.
class Multigraph {
 public:
  using Vertex = std::size_t;
  using Edge = std::pair<Vertex, Vertex>;  // stored with first <= second

  explicit Multigraph(std::size_t n = 0) : n_(n) {}
  Multigraph(std::size_t n, std::vector<Edge> edges);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  void add_edge(Vertex i, Vertex j);
  /// G + ij.
  Multigraph with_edge(Vertex i, Vertex j) const;

  /// Degree with loops counted twice.
  std::vector<std::size_t> degrees() const;
  std::size_t max_degree() const;
  std::vector<bool> loop_vertices() const;
  bool is_simple() const;

  /// Component label per vertex, labels 0..k-1 in order of first vertex.
  std::vector<std::size_t> component_labels() const;
  /// Connected components as standalone graphs, in label order.
  std::vector<Multigraph> components() const;

  Multigraph disjoint_union(const Multigraph& other) const;
  /// Vertex v becomes perm[v].
  Multigraph relabeled(std::span<const Vertex> perm) const;

  /// Sorted edge list; equal for graphs with equal edge multisets.
  std::vector<Edge> canonical_edges() const;

  friend bool operator==(const Multigraph& a, const Multigraph& b) {
    return a.n_ == b.n_ && a.canonical_edges() == b.canonical_edges();
  }

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
};

}  // namespace confmodel
