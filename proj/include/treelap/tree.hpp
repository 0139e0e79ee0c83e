#pragma once

#include <utility>
#include <vector>

#include "treelap/matrix.hpp"
#include "treelap/rational.hpp"

namespace treelap {

/// Vertex ids are 1-based throughout, matching the labeling used by all
/// external interfaces (files, CLI, reports).
struct Edge {
  int u;
  int v;
  Rational w;
};

/// Immutable weighted tree on vertices {1..n}. Weights are stored exactly;
/// numeric backends convert on matrix construction.
class WeightedTree {
 public:
  /// Validates vertex ids, strict weight positivity, edge count n-1 and
  /// connectivity (together: acyclic). n = 1 is rejected.
  static WeightedTree build(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::pair<int, Rational>>& neighbors(int v) const;
  int degree(int v) const;
  bool is_pendant(int v) const;

  /// The unique simple path from a to b, inclusive; [a] when a = b.
  std::vector<int> path_vertices(int a, int b) const;

  Rational distance(int a, int b) const;

  /// All-pairs distances as an n x n exact matrix (row/col i is vertex i+1).
  Matrix<Rational> distance_matrix() const;

  /// Vertex sets of the components of T \ (v), each sorted ascending, the
  /// list ordered by smallest contained label. Exactly degree(v) parts.
  std::vector<std::vector<int>> components_after_deletion(int v) const;

  /// True iff x lies on the path connecting a and b (endpoints included).
  bool on_path(int x, int a, int b) const;

  void check_vertex(int v) const;

 private:
  WeightedTree() = default;

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<int, Rational>>> adj_;  // index 0 unused
};

}  // namespace treelap
