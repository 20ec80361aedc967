#pragma once

#include <utility>
#include <vector>

namespace paretocom {

/// Undirected bipartite graph with explicit sides. Vertex ids are arbitrary
/// integers, unique across both sides.
class BipartiteGraph {
 public:
  using Edge = std::pair<int, int>;  // (left id, right id)

  /// Throws ValidationError on overlapping sides, edges whose endpoints are
  /// not on their declared side, or parallel edges.
  BipartiteGraph(std::vector<int> left, std::vector<int> right, std::vector<Edge> edges);

  const std::vector<int>& left() const noexcept { return left_; }
  const std::vector<int>& right() const noexcept { return right_; }
  /// Sorted ascending.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool is_left(int v) const;
  bool is_right(int v) const;

 private:
  std::vector<int> left_;
  std::vector<int> right_;
  std::vector<Edge> edges_;
};

/// Maximum-cardinality matching (Hopcroft–Karp), edges sorted ascending.
std::vector<BipartiteGraph::Edge> max_matching(const BipartiteGraph& g);

/// Minimum vertex cover via König's construction from a maximum matching.
/// Sorted ascending; isolated vertices never appear.
std::vector<int> min_vertex_cover(const BipartiteGraph& g);

}  // namespace paretocom
