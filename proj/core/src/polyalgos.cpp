#include "paretocom/polyalgos.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "paretocom/errors.hpp"
#include "paretocom/extensions.hpp"

namespace paretocom {
namespace {

bool subset_of(const std::vector<Alternative>& a, const Committee& c) {
  return std::all_of(a.begin(), a.end(), [&](Alternative x) { return c.contains(x); });
}

int count_in(const std::vector<Alternative>& a, const std::set<Alternative>& s) {
  return static_cast<int>(
      std::count_if(a.begin(), a.end(), [&](Alternative x) { return s.count(x) > 0; }));
}

BipartiteGraph with_pendants(const BipartiteGraph& g, const std::vector<Alternative>& pinned,
                             int first_free_id) {
  auto left = g.left();
  auto right = g.right();
  auto edges = g.edges();
  int next = first_free_id;
  for (Alternative x : pinned) {
    const int pendant = next++;
    if (g.is_left(x)) {
      right.push_back(pendant);
      edges.emplace_back(x, pendant);
    } else {
      left.push_back(pendant);
      edges.emplace_back(pendant, x);
    }
  }
  return BipartiteGraph(std::move(left), std::move(right), std::move(edges));
}

Committee checked_witness(const Profile& profile, const Committee& d,
                          std::set<Alternative> members) {
  Committee witness(std::vector<Alternative>(members.begin(), members.end()));
  if (static_cast<int>(witness.size()) != profile.committee_size() ||
      !pareto_dominates(profile, Extension::RS, witness, d))
    throw std::logic_error("topwidth-2 witness {" + witness.to_string() +
                           "} does not RS-dominate {" + d.to_string() + "}");
  return witness;
}

}  // namespace

bool rs_poly_applicable(const Profile& profile) {
  return is_dichotomous(profile) && topwidth(profile) <= 2;
}

Tw2Analysis analyze_rs_dichotomous_tw2(const Profile& profile, const Committee& d) {
  if (!is_dichotomous(profile))
    throw PreconditionViolated("polynomial RS test needs dichotomous preferences");
  if (topwidth(profile) > 2)
    throw PreconditionViolated("polynomial RS test needs topwidth <= 2, got " +
                               std::to_string(topwidth(profile)));
  profile.check_committee(d);

  Tw2Analysis analysis;
  const auto& orders = profile.orders();
  const int n = profile.num_agents();
  const int k = profile.committee_size();
  const int m = profile.num_alternatives();

  if (std::all_of(orders.begin(), orders.end(),
                  [&](const WeakOrder& o) { return subset_of(o.top(), d); })) {
    analysis.outcome = Tw2Outcome::AllTopsInside;
    analysis.verdict = Verdict::efficient_verdict();
    return analysis;
  }

  std::vector<AgentId> saturated;
  std::set<Alternative> locked;
  for (AgentId i = 1; i <= n; ++i)
    if (subset_of(profile.agent(i).top(), d)) {
      saturated.push_back(i);
      locked.insert(profile.agent(i).top().begin(), profile.agent(i).top().end());
    }

  std::vector<AgentId> edge_agents;
  std::set<Alternative> edge_alts;
  std::set<BipartiteGraph::Edge> edges;
  std::vector<char> is_edge_agent(static_cast<std::size_t>(n) + 1, 0);
  for (AgentId i = 1; i <= n; ++i) {
    const auto& top = profile.agent(i).top();
    if (subset_of(top, d)) continue;
    const bool meets_free_part = std::any_of(top.begin(), top.end(), [&](Alternative x) {
      return d.contains(x) && locked.count(x) == 0;
    });
    if (!meets_free_part) continue;
    // top ⊄ D with a member in D and |top| <= 2: exactly one member on each side.
    Alternative inside = top[0], outside = top[1];
    if (!d.contains(inside)) std::swap(inside, outside);
    if (top.size() != 2 || !d.contains(inside) || d.contains(outside))
      throw std::logic_error("edge agent top class is not split across D");
    edge_agents.push_back(i);
    is_edge_agent[static_cast<std::size_t>(i)] = 1;
    edge_alts.insert(top.begin(), top.end());
    edges.emplace(inside, outside);
  }

  std::vector<int> left, right;
  for (Alternative x : edge_alts) (d.contains(x) ? left : right).push_back(x);
  BipartiteGraph graph(left, right, std::vector<BipartiteGraph::Edge>(edges.begin(), edges.end()));

  const auto cover = min_vertex_cover(graph);
  const int cover_number = static_cast<int>(cover.size());
  const int slack = k - static_cast<int>(locked.size());

  analysis.decomposition = Tw2Decomposition{
      saturated,
      std::vector<Alternative>(locked.begin(), locked.end()),
      edge_agents,
      std::vector<Alternative>(edge_alts.begin(), edge_alts.end()),
      graph,
  };
  analysis.cover_size = cover_number;
  analysis.slack = slack;

  if (cover_number > slack) {
    analysis.outcome = Tw2Outcome::CoverExceedsSlack;
    analysis.verdict = Verdict::efficient_verdict();
    return analysis;
  }

  if (cover_number < slack) {
    std::set<Alternative> w = locked;
    w.insert(cover.begin(), cover.end());
    const auto strictly_better = [&](AgentId i) {
      const auto& top = profile.agent(i).top();
      const int in_d = static_cast<int>(
          std::count_if(top.begin(), top.end(), [&](Alternative x) { return d.contains(x); }));
      return count_in(top, w) > in_d;
    };
    bool strict = false;
    for (AgentId i = 1; i <= n && !strict; ++i) strict = strictly_better(i);
    // One extra member makes some agent strictly better: the missing end of
    // an edge agent's pair, or any top member of an agent whose top meets D
    // only inside `locked`.
    for (AgentId i = 1; i <= n && !strict; ++i) {
      const auto& top = profile.agent(i).top();
      if (subset_of(top, d)) continue;
      for (Alternative x : top)
        if (w.count(x) == 0) {
          w.insert(x);
          strict = strictly_better(i);
          break;
        }
    }
    std::set<Alternative> outside_tops;
    for (const auto& o : orders)
      for (Alternative x : o.top())
        if (!d.contains(x)) outside_tops.insert(x);
    for (Alternative x : outside_tops)
      if (static_cast<int>(w.size()) < k) w.insert(x);
    for (Alternative x = 1; x <= m && static_cast<int>(w.size()) < k; ++x) w.insert(x);

    analysis.outcome = Tw2Outcome::CoverBelowSlack;
    analysis.verdict = Verdict::dominated_by(checked_witness(profile, d, std::move(w)));
    return analysis;
  }

  // Tight case: look for a minimum cover that pins a vertex whose selection
  // makes somebody strictly better.
  const auto try_pinned = [&](AgentId agent, std::vector<Alternative> pinned) -> bool {
    const auto augmented = with_pendants(graph, pinned, m + 1);
    const auto aug_cover = min_vertex_cover(augmented);
    analysis.probes.push_back({agent, pinned, static_cast<int>(aug_cover.size())});
    if (static_cast<int>(aug_cover.size()) != cover_number) return false;
    std::set<Alternative> w = locked;
    for (int v : aug_cover)
      if (v <= m) w.insert(v);
    analysis.outcome = Tw2Outcome::TightCoverFound;
    analysis.verdict = Verdict::dominated_by(checked_witness(profile, d, std::move(w)));
    return true;
  };

  for (AgentId i = 1; i <= n; ++i) {
    if (is_edge_agent[static_cast<std::size_t>(i)] || subset_of(profile.agent(i).top(), d))
      continue;
    for (Alternative x : profile.agent(i).top())
      if (edge_alts.count(x) && try_pinned(i, {x})) return analysis;
  }
  for (AgentId i : edge_agents)
    if (try_pinned(i, profile.agent(i).top())) return analysis;

  analysis.outcome = Tw2Outcome::TightNoCandidate;
  analysis.verdict = Verdict::efficient_verdict();
  return analysis;
}

Verdict worst_verify(const Profile& profile, const Committee& w) {
  profile.check_committee(w);
  const int m = profile.num_alternatives();
  const int k = profile.committee_size();
  const auto& orders = profile.orders();

  std::vector<int> worst;
  worst.reserve(orders.size());
  for (const auto& o : orders) worst.push_back(rank_vector(o, w).back());

  // Alternatives that some agent ranks below its current worst member can
  // never enter an improvement.
  std::vector<char> admissible(static_cast<std::size_t>(m) + 1, 1);
  for (std::size_t j = 0; j < orders.size(); ++j)
    for (Alternative a = 1; a <= m; ++a)
      if (orders[j].rank(a) > worst[j]) admissible[static_cast<std::size_t>(a)] = 0;

  for (std::size_t i = 0; i < orders.size(); ++i) {
    std::vector<Alternative> pool;
    for (Alternative a = 1; a <= m; ++a)
      if (admissible[static_cast<std::size_t>(a)] && orders[i].rank(a) < worst[i])
        pool.push_back(a);
    if (static_cast<int>(pool.size()) >= k) {
      pool.resize(static_cast<std::size_t>(k));
      return Verdict::dominated_by(Committee(std::move(pool)));
    }
  }
  return Verdict::efficient_verdict();
}

std::vector<long long> rs_scores(const Profile& profile) {
  const int m = profile.num_alternatives();
  std::vector<long long> total(static_cast<std::size_t>(m) + 1, 0);
  for (const auto& o : profile.orders()) {
    int better = 0;
    long long previous = 0;
    for (int c = 1; c <= o.num_classes(); ++c) {
      const auto& cls = o.cls(c);
      const long long score =
          2LL * (m - better) - (static_cast<long long>(cls.size()) - 1);
      if (c > 1 && score >= previous)
        throw std::logic_error("score vector is not strictly decreasing across classes");
      for (Alternative a : cls) total[static_cast<std::size_t>(a)] += score;
      previous = score;
      better += static_cast<int>(cls.size());
    }
  }
  return total;
}

Committee rs_score_elect(const Profile& profile) {
  const auto scores = rs_scores(profile);
  std::vector<Alternative> alts(static_cast<std::size_t>(profile.num_alternatives()));
  std::iota(alts.begin(), alts.end(), 1);
  std::stable_sort(alts.begin(), alts.end(), [&](Alternative a, Alternative b) {
    return scores[static_cast<std::size_t>(a)] > scores[static_cast<std::size_t>(b)];
  });
  alts.resize(static_cast<std::size_t>(profile.committee_size()));
  return Committee(std::move(alts));
}

}  // namespace paretocom
