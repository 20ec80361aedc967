#include "paretocom/reductions.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

#include "paretocom/errors.hpp"
#include "paretocom/generators.hpp"
#include "paretocom/profile_io.hpp"

namespace paretocom {

SimpleGraph::SimpleGraph(int vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
  if (n_ < 0) throw ValidationError("negative vertex count");
  for (auto& [u, v] : edges_) {
    if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (u < 1 || v > n_)
      throw ValidationError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") outside 1.." + std::to_string(n_));
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw ValidationError("repeated edge");
}

VertexCoverInstance profile_from_vertex_cover(const SimpleGraph& g, int k) {
  const int q = g.vertex_count();
  if (g.edges().empty()) throw PreconditionViolated("vertex-cover reduction needs an edge");
  if (k < 1 || k > q)
    throw PreconditionViolated("k must lie in 1.." + std::to_string(q));
  const int m = q + k;
  const auto dummy = [q](int i) { return q + i; };

  std::vector<WeakOrder> orders;
  orders.reserve(g.edges().size() * static_cast<std::size_t>(k) + 1);
  for (const auto& [u, v] : g.edges())
    for (int i = 1; i <= k; ++i) orders.push_back(dichotomous_order(m, {u, v, dummy(i)}));
  const auto [x, y] = g.edges().front();
  orders.push_back(dichotomous_order(m, {x, y}));

  std::vector<Alternative> d;
  for (int i = 1; i <= k; ++i) d.push_back(dummy(i));
  Profile profile(m, k, std::move(orders));
  if (topwidth(profile) != 3)
    throw std::logic_error("vertex-cover reduction must have topwidth 3");
  return {std::move(profile), Committee(std::move(d))};
}

Profile profile_from_hitting_set(const SetSystem& s, int k) {
  if (k < 1 || k > s.ground_size)
    throw PreconditionViolated("k must lie in 1.." + std::to_string(s.ground_size));
  if (s.family.empty()) throw PreconditionViolated("hitting-set reduction needs a set");
  std::vector<WeakOrder> orders;
  for (const auto& member : s.family) {
    if (member.empty()) throw ValidationError("empty set in family");
    orders.push_back(dichotomous_order(s.ground_size, member));
  }
  return Profile(s.ground_size, k, std::move(orders));
}

int brute_vertex_cover(const SimpleGraph& g) {
  const int n = g.vertex_count();
  if (n > 16) throw InstanceTooLarge("brute_vertex_cover supports at most 16 vertices");
  int best = n;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const int size = std::popcount(mask);
    if (size >= best) continue;
    const bool covers = std::all_of(g.edges().begin(), g.edges().end(), [&](const auto& e) {
      return ((mask >> (e.first - 1)) & 1u) || ((mask >> (e.second - 1)) & 1u);
    });
    if (covers) best = size;
  }
  return best;
}

int brute_hitting_set(const SetSystem& s) {
  const int n = s.ground_size;
  if (n > 16) throw InstanceTooLarge("brute_hitting_set supports a ground set of at most 16");
  std::vector<std::uint32_t> masks;
  for (const auto& member : s.family) {
    if (member.empty()) throw ValidationError("empty set in family");
    std::uint32_t mask = 0;
    for (int x : member) {
      if (x < 1 || x > n) throw ValidationError("set element outside the ground set");
      mask |= 1u << (x - 1);
    }
    masks.push_back(mask);
  }
  int best = n;
  for (std::uint32_t pick = 0; pick < (1u << n); ++pick) {
    const int size = std::popcount(pick);
    if (size >= best) continue;
    if (std::all_of(masks.begin(), masks.end(), [&](std::uint32_t m) { return (m & pick) != 0; }))
      best = size;
  }
  return best;
}

SimpleGraph parse_edge_list(std::istream& in, int vertex_count) {
  std::vector<SimpleGraph::Edge> edges;
  std::string line;
  std::size_t line_no = 0;
  int max_vertex = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream row(line);
    int u = 0, v = 0;
    std::string extra;
    if (!(row >> u >> v) || (row >> extra))
      throw ParseError(line_no, "expected 'u v'");
    edges.emplace_back(u, v);
    max_vertex = std::max({max_vertex, u, v});
  }
  return SimpleGraph(vertex_count > 0 ? vertex_count : max_vertex, std::move(edges));
}

SetSystem parse_set_system(std::istream& in, int ground_size) {
  SetSystem s;
  std::string line;
  std::size_t line_no = 0;
  int max_element = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::vector<int> member;
    try {
      member = parse_id_list(line);
    } catch (const ValidationError& e) {
      throw ParseError(line_no, e.what());
    }
    std::sort(member.begin(), member.end());
    member.erase(std::unique(member.begin(), member.end()), member.end());
    max_element = std::max(max_element, member.back());
    s.family.push_back(std::move(member));
  }
  s.ground_size = ground_size > 0 ? ground_size : max_element;
  for (const auto& member : s.family)
    if (member.front() < 1 || member.back() > s.ground_size)
      throw ValidationError("set element outside the ground set 1.." +
                            std::to_string(s.ground_size));
  return s;
}

}  // namespace paretocom
