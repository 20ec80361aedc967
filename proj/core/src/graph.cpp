#include "paretocom/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

#include "paretocom/errors.hpp"

namespace paretocom {
namespace {

constexpr int kNone = -1;
constexpr int kInf = std::numeric_limits<int>::max();

// Dense re-indexing of a BipartiteGraph: left vertices 0..L-1, right 0..R-1.
struct Dense {
  std::vector<std::vector<int>> adj;  // left -> right indices, ascending
  std::size_t right_size = 0;
};

std::size_t index_of(const std::vector<int>& sorted, int v) {
  return static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), v) -
                                  sorted.begin());
}

Dense densify(const BipartiteGraph& g) {
  Dense d;
  d.adj.resize(g.left().size());
  d.right_size = g.right().size();
  for (const auto& [u, v] : g.edges())
    d.adj[index_of(g.left(), u)].push_back(static_cast<int>(index_of(g.right(), v)));
  for (auto& row : d.adj) std::sort(row.begin(), row.end());
  return d;
}

struct HopcroftKarp {
  const Dense& d;
  std::vector<int> match_left;   // left -> right or kNone
  std::vector<int> match_right;  // right -> left or kNone
  std::vector<int> dist;

  explicit HopcroftKarp(const Dense& dense)
      : d(dense),
        match_left(dense.adj.size(), kNone),
        match_right(dense.right_size, kNone),
        dist(dense.adj.size(), kInf) {}

  bool bfs() {
    std::queue<int> q;
    bool found = false;
    for (std::size_t u = 0; u < d.adj.size(); ++u) {
      if (match_left[u] == kNone) {
        dist[u] = 0;
        q.push(static_cast<int>(u));
      } else {
        dist[u] = kInf;
      }
    }
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v : d.adj[static_cast<std::size_t>(u)]) {
        const int w = match_right[static_cast<std::size_t>(v)];
        if (w == kNone) {
          found = true;
        } else if (dist[static_cast<std::size_t>(w)] == kInf) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
          q.push(w);
        }
      }
    }
    return found;
  }

  bool dfs(int u) {
    for (int v : d.adj[static_cast<std::size_t>(u)]) {
      const int w = match_right[static_cast<std::size_t>(v)];
      if (w == kNone ||
          (dist[static_cast<std::size_t>(w)] == dist[static_cast<std::size_t>(u)] + 1 &&
           dfs(w))) {
        match_left[static_cast<std::size_t>(u)] = v;
        match_right[static_cast<std::size_t>(v)] = u;
        return true;
      }
    }
    dist[static_cast<std::size_t>(u)] = kInf;
    return false;
  }

  void run() {
    while (bfs())
      for (std::size_t u = 0; u < d.adj.size(); ++u)
        if (match_left[u] == kNone) dfs(static_cast<int>(u));
  }
};

}  // namespace

BipartiteGraph::BipartiteGraph(std::vector<int> left, std::vector<int> right,
                               std::vector<Edge> edges)
    : left_(std::move(left)), right_(std::move(right)), edges_(std::move(edges)) {
  std::sort(left_.begin(), left_.end());
  std::sort(right_.begin(), right_.end());
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(left_.begin(), left_.end()) != left_.end() ||
      std::adjacent_find(right_.begin(), right_.end()) != right_.end())
    throw ValidationError("duplicate vertex id");
  for (int v : left_)
    if (is_right(v))
      throw ValidationError("vertex " + std::to_string(v) + " is on both sides");
  for (const auto& [u, v] : edges_)
    if (!is_left(u) || !is_right(v))
      throw ValidationError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") does not cross left to right");
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw ValidationError("parallel edges");
}

bool BipartiteGraph::is_left(int v) const {
  return std::binary_search(left_.begin(), left_.end(), v);
}

bool BipartiteGraph::is_right(int v) const {
  return std::binary_search(right_.begin(), right_.end(), v);
}

std::vector<BipartiteGraph::Edge> max_matching(const BipartiteGraph& g) {
  const auto dense = densify(g);
  HopcroftKarp hk(dense);
  hk.run();
  std::vector<BipartiteGraph::Edge> matching;
  for (std::size_t u = 0; u < dense.adj.size(); ++u)
    if (hk.match_left[u] != kNone)
      matching.emplace_back(g.left()[u], g.right()[static_cast<std::size_t>(hk.match_left[u])]);
  return matching;
}

std::vector<int> min_vertex_cover(const BipartiteGraph& g) {
  const auto dense = densify(g);
  HopcroftKarp hk(dense);
  hk.run();

  // Z = vertices reachable from unmatched left vertices by alternating
  // paths (non-matching edges left->right, matching edges right->left).
  // Cover = (L \ Z) ∪ (R ∩ Z).
  std::vector<char> left_seen(dense.adj.size(), 0), right_seen(dense.right_size, 0);
  std::queue<int> q;
  for (std::size_t u = 0; u < dense.adj.size(); ++u)
    if (hk.match_left[u] == kNone) {
      left_seen[u] = 1;
      q.push(static_cast<int>(u));
    }
  while (!q.empty()) {
    const auto u = static_cast<std::size_t>(q.front());
    q.pop();
    for (int v : dense.adj[u]) {
      const auto vi = static_cast<std::size_t>(v);
      if (right_seen[vi] || hk.match_left[u] == v) continue;
      right_seen[vi] = 1;
      const int w = hk.match_right[vi];
      if (w != kNone && !left_seen[static_cast<std::size_t>(w)]) {
        left_seen[static_cast<std::size_t>(w)] = 1;
        q.push(w);
      }
    }
  }

  std::vector<int> cover;
  for (std::size_t u = 0; u < dense.adj.size(); ++u)
    if (!left_seen[u] && hk.match_left[u] != kNone) cover.push_back(g.left()[u]);
  for (std::size_t v = 0; v < dense.right_size; ++v)
    if (right_seen[v]) cover.push_back(g.right()[v]);
  std::sort(cover.begin(), cover.end());
  return cover;
}

}  // namespace paretocom
