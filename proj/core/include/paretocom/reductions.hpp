#pragma once

// Instance generators from the vertex-cover and hitting-set hardness
// constructions, plus exhaustive solvers used to cross-check them.

#include <istream>
#include <utility>
#include <vector>

#include "paretocom/model.hpp"

namespace paretocom {

/// Simple undirected graph on vertices 1..vertex_count.
class SimpleGraph {
 public:
  using Edge = std::pair<int, int>;  // u < v

  /// Normalizes edges to (min,max) and sorts them. Throws ValidationError
  /// on self-loops, out-of-range endpoints or repeated edges.
  SimpleGraph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

 private:
  int n_;
  std::vector<Edge> edges_;
};

/// Family of non-empty subsets of the ground set {1..ground_size}.
struct SetSystem {
  int ground_size = 0;
  std::vector<std::vector<int>> family;
};

struct VertexCoverInstance {
  Profile profile;
  Committee distinguished;  ///< D = {d_1..d_k}, ids vertex_count+1 .. vertex_count+k
};

/// Alternatives are the graph's vertices followed by k dummies D. For every
/// edge [u,v] there are k agents; the i-th approves {u, v, d_i}. One extra
/// agent approves the endpoints of the lexicographically least edge. D is
/// not RS-efficient iff the graph has a vertex cover of size <= k.
/// Throws PreconditionViolated unless 1 <= k <= vertex_count and the graph
/// has an edge.
VertexCoverInstance profile_from_vertex_cover(const SimpleGraph& g, int k);

/// One dichotomous agent per family member, approving exactly that member.
/// Throws PreconditionViolated unless 1 <= k <= ground_size.
Profile profile_from_hitting_set(const SetSystem& s, int k);

/// Exact minimum vertex cover size (vertex_count <= 16).
int brute_vertex_cover(const SimpleGraph& g);
/// Exact minimum hitting set size (ground_size <= 16). Throws
/// ValidationError if some member is empty.
int brute_hitting_set(const SetSystem& s);

/// One "u v" pair per line; '#' comments and blank lines skipped. The
/// vertex count is the largest endpoint unless `vertex_count` is positive.
SimpleGraph parse_edge_list(std::istream& in, int vertex_count = 0);
/// One comma-separated subset per line. The ground size is the largest
/// element unless `ground_size` is positive.
SetSystem parse_set_system(std::istream& in, int ground_size = 0);

}  // namespace paretocom
