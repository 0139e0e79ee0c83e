#include "treelap/tree.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "treelap/error.hpp"

namespace treelap {

WeightedTree WeightedTree::build(int n, std::vector<Edge> edges) {
  require(n >= 2, Errc::not_a_tree, "a tree needs n >= 2 vertices, got n=" + std::to_string(n));
  require(static_cast<int>(edges.size()) == n - 1, Errc::not_a_tree,
          "a tree on " + std::to_string(n) + " vertices needs exactly " +
              std::to_string(n - 1) + " edges, got " + std::to_string(edges.size()));

  WeightedTree t;
  t.n_ = n;
  t.adj_.assign(static_cast<std::size_t>(n) + 1, {});
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : edges) {
    require(e.u >= 1 && e.u <= n && e.v >= 1 && e.v <= n, Errc::bad_vertex_id,
            "edge endpoint out of range 1.." + std::to_string(n));
    require(e.u != e.v, Errc::not_a_tree, "self-loop at vertex " + std::to_string(e.u));
    require(e.w.sign() > 0, Errc::non_positive_weight,
            "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                ") has non-positive weight " + e.w.str());
    auto key = std::minmax(e.u, e.v);
    require(seen.insert(key).second, Errc::not_a_tree,
            "duplicate edge (" + std::to_string(key.first) + "," + std::to_string(key.second) + ")");
    t.adj_[static_cast<std::size_t>(e.u)].emplace_back(e.v, e.w);
    t.adj_[static_cast<std::size_t>(e.v)].emplace_back(e.u, e.w);
  }
  t.edges_ = std::move(edges);

  // n-1 edges + connected <=> tree
  std::vector<char> vis(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> stack{1};
  vis[1] = 1;
  int count = 0;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    ++count;
    for (const auto& [y, w] : t.adj_[static_cast<std::size_t>(x)])
      if (!vis[static_cast<std::size_t>(y)]) {
        vis[static_cast<std::size_t>(y)] = 1;
        stack.push_back(y);
      }
  }
  require(count == n, Errc::not_a_tree, "edge set is disconnected (and therefore cyclic)");
  return t;
}

void WeightedTree::check_vertex(int v) const {
  require(v >= 1 && v <= n_, Errc::bad_vertex_id,
          "vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n_));
}

const std::vector<std::pair<int, Rational>>& WeightedTree::neighbors(int v) const {
  check_vertex(v);
  return adj_[static_cast<std::size_t>(v)];
}

int WeightedTree::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

bool WeightedTree::is_pendant(int v) const { return degree(v) == 1; }

std::vector<int> WeightedTree::path_vertices(int a, int b) const {
  check_vertex(a);
  check_vertex(b);
  if (a == b) return {a};
  std::vector<int> parent(static_cast<std::size_t>(n_) + 1, 0);
  std::vector<int> stack{a};
  parent[static_cast<std::size_t>(a)] = a;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    if (x == b) break;
    for (const auto& [y, w] : adj_[static_cast<std::size_t>(x)])
      if (parent[static_cast<std::size_t>(y)] == 0) {
        parent[static_cast<std::size_t>(y)] = x;
        stack.push_back(y);
      }
  }
  std::vector<int> path;
  for (int x = b; x != a; x = parent[static_cast<std::size_t>(x)]) path.push_back(x);
  path.push_back(a);
  std::reverse(path.begin(), path.end());
  return path;
}

Rational WeightedTree::distance(int a, int b) const {
  check_vertex(a);
  check_vertex(b);
  if (a == b) return Rational(0);
  // single BFS/DFS from a, accumulating weights along parent pointers
  std::vector<char> vis(static_cast<std::size_t>(n_) + 1, 0);
  std::vector<Rational> dist(static_cast<std::size_t>(n_) + 1, Rational(0));
  std::vector<int> stack{a};
  vis[static_cast<std::size_t>(a)] = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (const auto& [y, w] : adj_[static_cast<std::size_t>(x)])
      if (!vis[static_cast<std::size_t>(y)]) {
        vis[static_cast<std::size_t>(y)] = 1;
        dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + w;
        stack.push_back(y);
      }
  }
  return dist[static_cast<std::size_t>(b)];
}

Matrix<Rational> WeightedTree::distance_matrix() const {
  Matrix<Rational> d(static_cast<std::size_t>(n_), static_cast<std::size_t>(n_));
  for (int a = 1; a <= n_; ++a) {
    std::vector<char> vis(static_cast<std::size_t>(n_) + 1, 0);
    std::vector<int> stack{a};
    vis[static_cast<std::size_t>(a)] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (const auto& [y, w] : adj_[static_cast<std::size_t>(x)])
        if (!vis[static_cast<std::size_t>(y)]) {
          vis[static_cast<std::size_t>(y)] = 1;
          d(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(y - 1)) =
              d(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(x - 1)) + w;
          stack.push_back(y);
        }
    }
  }
  return d;
}

std::vector<std::vector<int>> WeightedTree::components_after_deletion(int v) const {
  check_vertex(v);
  std::vector<char> vis(static_cast<std::size_t>(n_) + 1, 0);
  vis[static_cast<std::size_t>(v)] = 1;
  std::vector<std::vector<int>> comps;
  for (const auto& [root, w0] : adj_[static_cast<std::size_t>(v)]) {
    if (vis[static_cast<std::size_t>(root)]) continue;
    std::vector<int> comp;
    std::vector<int> stack{root};
    vis[static_cast<std::size_t>(root)] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (const auto& [y, w] : adj_[static_cast<std::size_t>(x)])
        if (!vis[static_cast<std::size_t>(y)]) {
          vis[static_cast<std::size_t>(y)] = 1;
          stack.push_back(y);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  std::sort(comps.begin(), comps.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return comps;
}

bool WeightedTree::on_path(int x, int a, int b) const {
  check_vertex(x);
  std::vector<int> p = path_vertices(a, b);
  return std::find(p.begin(), p.end(), x) != p.end();
}

}  // namespace treelap
