// Acceptance suite: one PASS/FAIL line per criterion. Usage:
//   paretocom_acceptance [criterion ...]   (no arguments = all)

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "paretocom/generators.hpp"
#include "paretocom/graph.hpp"
#include "paretocom/mechanisms.hpp"
#include "paretocom/oracle.hpp"
#include "paretocom/polyalgos.hpp"
#include "paretocom/reductions.hpp"
#include "paretocom/relations.hpp"

using namespace paretocom;
using namespace paretocom::testing;

namespace {

// Time budgets in seconds.
constexpr double kWorkedCaseBudget = 1.0;
constexpr double kOracleSweepBudget = 60.0;
constexpr double kMechanismBudget = 120.0;
constexpr double kStrategyBudget = 120.0;
constexpr double kReductionBudget = 120.0;
constexpr double kKonigBudget = 30.0;

// Sweep sizes.
constexpr int kRandomTw2Instances = 1000;
constexpr int kRandomWorstInstances = 1000;
constexpr int kMechanismInstances = 500;
constexpr int kRandomGraphs = 200;
constexpr int kBipartiteGraphs = 1000;
constexpr int kRelationInstances = 500;

struct Report {
  bool pass = true;
  std::vector<std::string> notes;

  void fail(const std::string& why) {
    if (pass || notes.size() < 20) notes.push_back("FAIL: " + why);
    pass = false;
  }
  void note(const std::string& text) { notes.push_back(text); }
  void expect(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
};

std::string join(const std::vector<Committee>& cs) {
  std::string s;
  for (const auto& c : cs) s += (s.empty() ? "{" : " {") + c.to_string() + "}";
  return s.empty() ? "(none)" : s;
}

bool contains(const std::vector<Committee>& cs, const Committee& w) {
  return std::find(cs.begin(), cs.end(), w) != cs.end();
}

std::vector<Committee> all_committees(int m, int k) {
  std::vector<Committee> out;
  for_each_committee(m, k, [&](const Committee& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  std::vector<Permutation> out;
  do out.emplace_back(order);
  while (std::next_permutation(order.begin(), order.end()));
  return out;
}

// Multisets of size n drawn from `pool`, as index vectors.
void for_each_multiset(std::size_t pool, int n, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
  while (true) {
    fn(idx);
    int pos = n - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] + 1 == pool) --pos;
    if (pos < 0) return;
    const auto next = idx[static_cast<std::size_t>(pos)] + 1;
    for (int j = pos; j < n; ++j) idx[static_cast<std::size_t>(j)] = next;
  }
}

// Every dichotomous order over m alternatives whose top class has one or two members.
std::vector<WeakOrder> dichotomous_tw2_orders(int m) {
  std::vector<WeakOrder> out;
  for (int x = 1; x <= m; ++x) {
    if (m > 1) out.push_back(dichotomous_order(m, {x}));
    for (int y = x + 1; y <= m; ++y)
      if (m > 2) out.push_back(dichotomous_order(m, {x, y}));
  }
  return out;
}

// Small instances with the given agent orders: every n-multiset for every k.
void for_each_small_profile(const std::vector<WeakOrder>& orders, int m, int max_n, int max_k,
                            const std::function<void(const Profile&)>& fn) {
  for (int n = 1; n <= max_n; ++n)
    for_each_multiset(orders.size(), n, [&](const std::vector<std::size_t>& idx) {
      std::vector<WeakOrder> agents;
      for (auto i : idx) agents.push_back(orders[i]);
      for (int k = 1; k <= std::min(m, max_k); ++k) fn(Profile(m, k, agents));
    });
}

// Random instances for the verifier sweeps: m <= 7, n <= 5, k <= 3.
Profile random_sweep_profile(int trial, bool dichotomous, Rng& rng) {
  const int m = 2 + trial % 6;
  const int n = 1 + (trial / 6) % 5;
  const int k = 1 + (trial / 30) % std::min(3, m);
  return dichotomous ? random_dichotomous_tw2(m, n, k, rng) : random_profile(m, n, k, 0, rng);
}

// ---------------------------------------------------------------------------

Report crossed_four_domination() {
  Report r;
  const auto p = crossed_four();
  const Committee ab{a, b}, cd{c, d};
  for (auto ext : kAllExtensions) {
    const std::string name(to_string(ext));
    r.expect(pareto_dominates(p, ext, ab, cd), "{a,b} does not dominate {c,d} under " + name);
    const auto v = verify_bruteforce(p, ext, cd);
    r.expect(!v.efficient, "{c,d} reported efficient under " + name);
    if (v.witness) {
      r.expect(pareto_dominates(p, ext, *v.witness, cd), "witness fails to dominate under " + name);
      r.note(name + ": witness {" + v.witness->to_string() + "}");
    }
  }
  return r;
}

Report five_pairs_trace() {
  Report r;
  const auto p = five_pairs();
  const auto t = analyze_rs_dichotomous_tw2(p, Committee{a, b});
  r.expect(!t.verdict.efficient, "D={a,b} reported efficient");
  if (t.verdict.witness) {
    const auto& w = *t.verdict.witness;
    r.expect(w == Committee{b, c} || w == Committee{c, d},
             "witness {" + w.to_string() + "} not in {{b,c},{c,d}}");
    r.note("witness {" + w.to_string() + "}");
  }
  r.expect(t.cover_size == 2, "cover size " + std::to_string(t.cover_size) + " != 2");
  r.expect(t.slack == 2, "slack " + std::to_string(t.slack) + " != 2");
  r.expect(t.outcome == Tw2Outcome::TightCoverFound, "outcome is not the tight-cover case");
  r.expect(t.decomposition.has_value(), "no decomposition recorded");
  if (t.decomposition) {
    r.expect(t.decomposition->saturated_agents.empty(), "saturated agents not empty");
    r.expect(t.decomposition->edge_agents == std::vector<int>{1, 2, 3}, "edge agents != {1,2,3}");
    r.expect(t.decomposition->edge_alternatives == std::vector<int>{a, b, c, d},
             "edge alternatives != {a,b,c,d}");
  }
  std::ostringstream probes;
  for (const auto& probe : t.probes) {
    probes << " agent " << probe.agent << " pins {";
    for (std::size_t i = 0; i < probe.pinned.size(); ++i) probes << (i ? "," : "") << probe.pinned[i];
    probes << "} cover " << probe.cover_size << ';';
  }
  r.note("cover size " + std::to_string(t.cover_size) + ", probes:" + probes.str());
  return r;
}

Report opposed_pair_sets() {
  Report r;
  const auto p = opposed_pair();
  const auto best = enumerate_efficient(p, Extension::Best);
  r.expect(best == std::vector<Committee>{Committee{a, d}}, "Best set is " + join(best));
  const std::map<Extension, std::vector<Committee>> listed = {
      {Extension::Worst, {Committee{b, c}}},
      {Extension::DL, {Committee{a, d}, Committee{a, b}, Committee{c, d}}},
      {Extension::UL, {Committee{b, c}, Committee{a, b}, Committee{c, d}}},
      {Extension::RS, {Committee{a, d}, Committee{b, c}, Committee{a, b}, Committee{c, d}}},
  };
  for (const auto& [ext, committees] : listed) {
    const auto full = enumerate_efficient(p, ext);
    for (const auto& w : committees)
      r.expect(verify_bruteforce(p, ext, w).efficient,
               "listed committee {" + w.to_string() + "} not " + std::string(to_string(ext)) + "-efficient");
    std::vector<Committee> extra;
    for (const auto& w : full)
      if (!contains(committees, w)) extra.push_back(w);
    r.note(std::string(to_string(ext)) + " efficient: " + join(full) + "; beyond the listed ones: " + join(extra));
  }
  return r;
}

Report tw2_equivalence() {
  Report r;
  long instances = 0, checks = 0;
  const auto check = [&](const Profile& p) {
    ++instances;
    for_each_committee(p.num_alternatives(), p.committee_size(), [&](const Committee& w) {
      ++checks;
      const auto fast = rs_improve_dichotomous_tw2(p, w);
      const auto slow = verify_bruteforce(p, Extension::RS, w);
      if (fast.efficient != slow.efficient)
        r.fail("disagreement on D={" + w.to_string() + "} for\n" + format_profile(p));
      else if (fast.witness && !pareto_dominates(p, Extension::RS, *fast.witness, w))
        r.fail("witness does not dominate on D={" + w.to_string() + "}");
      return true;
    });
  };
  Rng rng(20240501);
  for (int trial = 0; trial < kRandomTw2Instances; ++trial) check(random_sweep_profile(trial, true, rng));
  // Exhaustive: every multiset of top classes, m <= 5 (n <= 3), and n <= 4 for m <= 4.
  for (int m = 2; m <= 5; ++m)
    for_each_small_profile(dichotomous_tw2_orders(m), m, m <= 4 ? 4 : 3, 3, check);
  r.note(std::to_string(instances) + " instances, " + std::to_string(checks) + " committees compared");
  return r;
}

Report worst_equivalence() {
  Report r;
  long instances = 0, checks = 0;
  const auto check = [&](const Profile& p) {
    ++instances;
    for_each_committee(p.num_alternatives(), p.committee_size(), [&](const Committee& w) {
      ++checks;
      const auto fast = worst_verify(p, w);
      const auto slow = verify_bruteforce(p, Extension::Worst, w);
      if (fast.efficient != slow.efficient)
        r.fail("disagreement on W={" + w.to_string() + "} for\n" + format_profile(p));
      else if (fast.witness && !pareto_dominates(p, Extension::Worst, *fast.witness, w))
        r.fail("witness does not dominate on W={" + w.to_string() + "}");
      return true;
    });
  };
  Rng rng(20240502);
  for (int trial = 0; trial < kRandomWorstInstances; ++trial) check(random_sweep_profile(trial, false, rng));
  for (int m = 2; m <= 5; ++m)
    for_each_small_profile(dichotomous_tw2_orders(m), m, m <= 4 ? 4 : 3, 3, check);
  // Exhaustive over all weak orders: m <= 3 with n <= 3, m = 4 with n <= 2.
  for (int m = 1; m <= 4; ++m) for_each_small_profile(all_weak_orders(m), m, m <= 3 ? 3 : 2, 3, check);
  r.note(std::to_string(instances) + " instances, " + std::to_string(checks) + " committees compared");
  return r;
}

Report mechanism_efficiency() {
  Report r;
  Rng rng(20240503);
  long runs = 0;
  for (int trial = 0; trial < kMechanismInstances; ++trial) {
    const int m = 2 + trial % 6;
    const int n = 1 + (trial / 6) % 3;
    const int k = 1 + (trial / 18) % m;
    const auto p = random_profile(m, n, k, 0, rng);
    const auto strict = random_profile(m, n, k, m, rng);
    const auto check = [&](const Profile& q, Extension ext, const Committee& w, const char* who) {
      ++runs;
      if (!verify_bruteforce(q, ext, w).efficient)
        r.fail(std::string(who) + " output {" + w.to_string() + "} not " +
               std::string(to_string(ext)) + "-efficient for\n" + format_profile(q));
    };
    for (const auto& perm : all_permutations(n)) {
      const auto sd = committee_sd(p, perm);
      for (auto ext : {Extension::RS, Extension::DL, Extension::UL}) check(p, ext, sd, "committee_sd");
      check(p, Extension::Worst, worst_sd(p, perm), "worst_sd");
      check(strict, Extension::Best, best_greedy_strict(strict, perm), "best_greedy_strict");
    }
    check(p, Extension::RS, rs_score_elect(p), "rs_score_elect");
  }
  r.note(std::to_string(runs) + " outcomes checked");
  return r;
}

Report strategyproofness() {
  Report r;
  long profiles = 0;
  std::map<MechanismId, long> rs_hits, worst_hits;
  std::map<MechanismId, std::string> first;
  for (int m = 1; m <= 3; ++m) {
    const auto orders = all_weak_orders(m);
    for (int k = 1; k <= std::min(m, 2); ++k)
      for (int n = 1; n <= 2; ++n) {
        std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
        // All ordered n-tuples of orders.
        while (true) {
          std::vector<WeakOrder> agents;
          for (auto i : idx) agents.push_back(orders[i]);
          const Profile p(m, k, agents);
          ++profiles;
          const auto perm = Permutation::identity(n);
          for (auto id : {MechanismId::SD, MechanismId::WorstSD}) {
            if (auto hit = sp_check(id, p, perm)) {
              if (rs_hits[id]++ == 0)
                first[id] = "agent " + std::to_string(hit->agent) + " of\n" + format_profile(p) +
                            "  reports " + hit->misreport.to_string() + ": {" + hit->honest.to_string() +
                            "} -> {" + hit->manipulated.to_string() + "}";
            }
            SpCheckOptions worst_notion;
            worst_notion.notion = Extension::Worst;
            if (sp_check(id, p, perm, worst_notion)) ++worst_hits[id];
          }
          int pos = n - 1;
          while (pos >= 0 && idx[static_cast<std::size_t>(pos)] + 1 == orders.size())
            idx[static_cast<std::size_t>(pos--)] = 0;
          if (pos < 0) break;
          ++idx[static_cast<std::size_t>(pos)];
        }
      }
  }
  r.note(std::to_string(profiles) + " profiles, every misreport");
  for (auto id : {MechanismId::SD, MechanismId::WorstSD}) {
    const std::string name(to_string(id));
    r.note(name + ": " + std::to_string(rs_hits[id]) + " profiles with an RS-profitable misreport, " +
           std::to_string(worst_hits[id]) + " with a Worst-profitable misreport");
    if (rs_hits[id] > 0) r.fail(name + " is RS-manipulable, first case: " + first[id]);
  }

  const auto p = fair_sd_profile();
  const auto hit = sp_check(MechanismId::FairSD, p, Permutation({1, 2}));
  const bool exact = hit && hit->agent == 1 && hit->misreport.to_string() == "2,1,3" &&
                     hit->honest == Committee{a, c} && hit->manipulated == Committee{a, b};
  r.expect(exact, "fair_sd counterexample not reproduced");
  if (hit)
    r.note("fair_sd: agent " + std::to_string(hit->agent) + " reports " + hit->misreport.to_string() +
           ", {" + hit->honest.to_string() + "} -> {" + hit->manipulated.to_string() + "}");
  return r;
}

Report chain_bounds() {
  Report r;
  long chains = 0;
  std::map<Extension, std::size_t> longest;
  const auto observe = [&](const Profile& p) {
    const long m = p.num_alternatives(), n = p.num_agents();
    for (auto ext : kAllExtensions) {
      const long bound = (ext == Extension::Best || ext == Extension::Worst) ? m * n : m * m * n;
      const auto step = brute_force_step(p, ext);
      for_each_committee(static_cast<int>(m), p.committee_size(), [&](const Committee& w) {
        const auto chain = improvement_chain(p, ext, w, step);
        const auto steps = chain.size() - 1;
        ++chains;
        longest[ext] = std::max(longest[ext], steps);
        if (static_cast<long>(steps) > bound)
          r.fail(std::string(to_string(ext)) + " chain of " + std::to_string(steps) +
                 " steps exceeds " + std::to_string(bound) + " from {" + w.to_string() + "} on\n" +
                 format_profile(p));
        return true;
      });
    }
    if (rs_poly_applicable(p)) {
      const long bound = m * m * n;
      const ImprovementStep poly = [&p](const Committee& w) { return rs_improve_dichotomous_tw2(p, w).witness; };
      for_each_committee(static_cast<int>(m), p.committee_size(), [&](const Committee& w) {
        const auto steps = improvement_chain(p, Extension::RS, w, poly).size() - 1;
        ++chains;
        if (static_cast<long>(steps) > bound) r.fail("poly RS chain exceeds m^2 n");
        return true;
      });
    }
  };
  Rng rng(20240508);
  for (int trial = 0; trial < 300; ++trial) observe(random_sweep_profile(trial, trial % 2 == 0, rng));
  for (int m = 1; m <= 4; ++m) for_each_small_profile(all_weak_orders(m), m, m <= 3 ? 2 : 1, 3, observe);
  std::ostringstream s;
  s << chains << " chains from every start committee; longest:";
  for (auto ext : kAllExtensions) s << ' ' << to_string(ext) << '=' << longest[ext];
  r.note(s.str());

  // A single strict agent with m = 8, k = 4: the UL order is total on 70
  // committees, so lex-least improvements can walk most of it.
  const Profile lone(8, 4, {WeakOrder(8, {{8}, {7}, {6}, {5}, {4}, {3}, {2}, {1}})});
  observe(lone);
  std::ostringstream after;
  after << "with the m=8 single-agent instance, longest:";
  for (auto ext : kAllExtensions) after << ' ' << to_string(ext) << '=' << longest[ext];
  after << " (m^2 n = 64, m n = 8)";
  r.note(after.str());
  return r;
}

Report reduction_faithfulness() {
  Report r;
  long cases = 0;
  const auto check = [&](const SimpleGraph& g) {
    const int min_cover = brute_vertex_cover(g);
    for (int k = 1; k <= g.vertex_count(); ++k) {
      const auto inst = profile_from_vertex_cover(g, k);
      const bool improvable = !verify_bruteforce(inst.profile, Extension::RS, inst.distinguished).efficient;
      ++cases;
      if (improvable != (min_cover <= k))
        r.fail("graph with " + std::to_string(g.edges().size()) + " edges, k=" + std::to_string(k) +
               ": cover " + std::to_string(min_cover) + ", D improvable=" + (improvable ? "yes" : "no"));
    }
  };
  // Every graph with at least one edge on 2..5 vertices.
  for (int q = 2; q <= 5; ++q) {
    std::vector<SimpleGraph::Edge> slots;
    for (int u = 1; u <= q; ++u)
      for (int v = u + 1; v <= q; ++v) slots.emplace_back(u, v);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << slots.size()); ++mask) {
      std::vector<SimpleGraph::Edge> edges;
      for (std::size_t i = 0; i < slots.size(); ++i)
        if ((mask >> i) & 1) edges.push_back(slots[i]);
      check(SimpleGraph(q, edges));
    }
  }
  Rng rng(20240509);
  for (int trial = 0; trial < kRandomGraphs; ++trial) {
    const int q = 6 + trial % 3;
    const auto density = std::uniform_int_distribution<int>(10, 60)(rng);
    std::vector<SimpleGraph::Edge> edges;
    for (int u = 1; u <= q; ++u)
      for (int v = u + 1; v <= q; ++v)
        if (std::uniform_int_distribution<int>(0, 99)(rng) < density) edges.emplace_back(u, v);
    if (edges.empty()) edges.emplace_back(1, 2);
    check(SimpleGraph(q, edges));
  }
  r.note(std::to_string(cases) + " (graph, k) pairs");
  return r;
}

Report konig_invariant() {
  Report r;
  Rng rng(20240510);
  for (int trial = 0; trial < kBipartiteGraphs; ++trial) {
    const int total = 2 + static_cast<int>(rng() % 11);
    const int nl = 1 + static_cast<int>(rng() % static_cast<unsigned>(total - 1));
    std::vector<int> left, right;
    for (int v = 1; v <= total; ++v) (v <= nl ? left : right).push_back(v);
    const auto density = rng() % 101;
    std::vector<BipartiteGraph::Edge> edges;
    for (int u : left)
      for (int v : right)
        if (rng() % 100 < density) edges.emplace_back(u, v);
    const BipartiteGraph g(left, right, edges);
    const auto matching = max_matching(g);
    const auto cover = min_vertex_cover(g);
    int brute = total;
    for (std::uint32_t mask = 0; mask < (1u << total); ++mask) {
      bool ok = true;
      for (const auto& [u, v] : edges) ok = ok && (((mask >> (u - 1)) & 1u) || ((mask >> (v - 1)) & 1u));
      if (ok) brute = std::min(brute, __builtin_popcount(mask));
    }
    bool covers = true;
    for (const auto& [u, v] : edges)
      covers = covers && (std::binary_search(cover.begin(), cover.end(), u) ||
                          std::binary_search(cover.begin(), cover.end(), v));
    if (!covers || cover.size() != matching.size() || static_cast<int>(cover.size()) != brute)
      r.fail("graph " + std::to_string(trial) + ": cover " + std::to_string(cover.size()) + ", matching " +
             std::to_string(matching.size()) + ", brute " + std::to_string(brute));
  }
  r.note(std::to_string(kBipartiteGraphs) + " graphs");
  return r;
}

Report relation_checks() {
  Report r;
  Rng rng(20240511);
  long rows = 0;
  for (int trial = 0; trial < kRelationInstances; ++trial) {
    const int m = 2 + trial % 5;
    const int n = 1 + (trial / 5) % 4;
    const int k = 1 + (trial / 20) % std::min(3, m);
    const auto p = random_profile(m, n, k, 0, rng);
    for (const auto& c : run_relations(p).checks) {
      ++rows;
      if (!c.pass) r.fail(c.name + " on\n" + format_profile(p));
    }
  }
  r.note(std::to_string(rows) + " check rows");
  return r;
}

struct Criterion {
  int id;
  const char* title;
  double budget;
  std::function<Report()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "crossed-four profile: {a,b} dominates {c,d} under all extensions", kWorkedCaseBudget, crossed_four_domination},
      {2, "five-pairs profile: topwidth-2 RS trace for D={a,b}", kWorkedCaseBudget, five_pairs_trace},
      {3, "opposed-pair profile: efficient sets", kWorkedCaseBudget, opposed_pair_sets},
      {4, "topwidth-2 RS test agrees with oracle", kOracleSweepBudget, tw2_equivalence},
      {5, "worst verifier agrees with oracle", kOracleSweepBudget, worst_equivalence},
      {6, "mechanism outputs are efficient", kMechanismBudget, mechanism_efficiency},
      {7, "strategyproofness of SD and WorstSD; FairSD counterexample", kStrategyBudget, strategyproofness},
      {8, "improvement chain length bounds", kMechanismBudget, chain_bounds},
      {9, "vertex-cover reduction faithfulness", kReductionBudget, reduction_faithfulness},
      {10, "Konig invariant on bipartite graphs", kKonigBudget, konig_invariant},
      {11, "efficient-set relations", kMechanismBudget, relation_checks},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  bool all_pass = true;
  for (const auto& c : criteria) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Report report;
    try {
      report = c.run();
    } catch (const std::exception& e) {
      report.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget) report.fail("took " + std::to_string(secs) + " s, budget " + std::to_string(c.budget) + " s");
    all_pass = all_pass && report.pass;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::cout << "criterion " << c.id << ": " << (report.pass ? "PASS" : "FAIL") << "  " << c.title << " ("
              << timing << ")\n";
    for (const auto& n : report.notes) {
      std::istringstream lines(n);
      for (std::string line; std::getline(lines, line);) std::cout << "    " << line << '\n';
    }
  }
  return all_pass ? 0 : 1;
}
