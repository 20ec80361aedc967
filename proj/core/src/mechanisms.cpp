#include "paretocom/mechanisms.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "paretocom/errors.hpp"
#include "paretocom/generators.hpp"
#include "paretocom/oracle.hpp"
#include "paretocom/polyalgos.hpp"

namespace paretocom {
namespace {

void check_perm(const Profile& profile, const Permutation& perm) {
  if (perm.size() != profile.num_agents())
    throw ValidationError("permutation has " + std::to_string(perm.size()) +
                          " entries for " + std::to_string(profile.num_agents()) + " agents");
}

// Adds the `count` lexicographically least members of `pool` to `out`.
void take_least(const std::set<Alternative>& pool, int count, std::set<Alternative>& out) {
  for (auto it = pool.begin(); it != pool.end() && count > 0; ++it, --count) out.insert(*it);
}

Committee to_committee(const std::set<Alternative>& s) {
  return Committee(std::vector<Alternative>(s.begin(), s.end()));
}

}  // namespace

Permutation::Permutation(std::vector<AgentId> order) : order_(std::move(order)) {
  auto sorted = order_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<AgentId>(i) + 1)
      throw ValidationError("not a permutation of 1.." + std::to_string(order_.size()));
}

Permutation Permutation::identity(int n) {
  std::vector<AgentId> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(order));
}

std::string_view to_string(MechanismId id) {
  switch (id) {
    case MechanismId::SD: return "sd";
    case MechanismId::WorstSD: return "worst-sd";
    case MechanismId::BestGreedyStrict: return "best-greedy";
    case MechanismId::FairSD: return "fair-sd";
    case MechanismId::Score: return "score";
  }
  return "?";
}

std::optional<MechanismId> parse_mechanism(std::string_view text) {
  for (auto id : {MechanismId::SD, MechanismId::WorstSD, MechanismId::BestGreedyStrict,
                  MechanismId::FairSD, MechanismId::Score})
    if (text == to_string(id)) return id;
  return std::nullopt;
}

Committee committee_sd(const Profile& profile, const Permutation& perm) {
  check_perm(profile, perm);
  std::set<Alternative> pool;
  for (Alternative a = 1; a <= profile.num_alternatives(); ++a) pool.insert(a);
  int needed = profile.committee_size();
  std::set<Alternative> fixed;

  for (AgentId i : perm) {
    if (needed == 0) break;
    std::set<Alternative> better;  // pool members in classes before the boundary
    for (const auto& cls : profile.agent(i).classes()) {
      std::set<Alternative> here;
      for (Alternative a : cls)
        if (pool.count(a)) here.insert(a);
      if (static_cast<int>(better.size() + here.size()) >= needed) {
        fixed.insert(better.begin(), better.end());
        needed -= static_cast<int>(better.size());
        pool = std::move(here);
        break;
      }
      better.insert(here.begin(), here.end());
    }
  }
  take_least(pool, needed, fixed);
  return to_committee(fixed);
}

Committee worst_sd(const Profile& profile, const Permutation& perm) {
  check_perm(profile, perm);
  const int k = profile.committee_size();
  std::set<Alternative> pool;
  for (Alternative a = 1; a <= profile.num_alternatives(); ++a) pool.insert(a);

  for (AgentId i : perm) {
    const auto& classes = profile.agent(i).classes();
    for (auto it = classes.rbegin(); it != classes.rend(); ++it) {
      const auto present = static_cast<int>(
          std::count_if(it->begin(), it->end(), [&](Alternative a) { return pool.count(a) > 0; }));
      if (static_cast<int>(pool.size()) - present < k) break;
      for (Alternative a : *it) pool.erase(a);
    }
  }

  std::set<Alternative> chosen;
  take_least(pool, k, chosen);
  const auto chain = improvement_chain(profile, Extension::Worst, to_committee(chosen),
                                       [&](const Committee& w) {
                                         return worst_verify(profile, w).witness;
                                       });
  return chain.back();
}

Committee best_greedy_strict(const Profile& profile, const Permutation& perm) {
  if (!is_strict(profile))
    throw PreconditionViolated("best-greedy needs strict preferences");
  check_perm(profile, perm);
  const int k = profile.committee_size();
  std::set<Alternative> chosen;
  // After one pass every agent's top alternative is either chosen or the
  // committee is full, so a single pass suffices before padding.
  for (AgentId i : perm) {
    if (static_cast<int>(chosen.size()) == k) break;
    chosen.insert(profile.agent(i).top().front());
  }
  for (Alternative a = 1; a <= profile.num_alternatives() && static_cast<int>(chosen.size()) < k;
       ++a)
    chosen.insert(a);
  return to_committee(chosen);
}

Committee fair_sd(const Profile& profile, const Permutation& perm) {
  check_perm(profile, perm);
  const int k = profile.committee_size();
  const int n = profile.num_agents();
  const int quota = (k + n - 1) / n;
  std::set<Alternative> chosen;
  while (static_cast<int>(chosen.size()) < k) {
    for (AgentId i : perm) {
      int turn = 0;
      for (const auto& cls : profile.agent(i).classes()) {
        for (Alternative a : cls) {
          if (turn == quota || static_cast<int>(chosen.size()) == k) break;
          if (chosen.insert(a).second) ++turn;
        }
      }
      if (static_cast<int>(chosen.size()) == k) break;
    }
  }
  return to_committee(chosen);
}

Committee run_mechanism(MechanismId id, const Profile& profile, const Permutation& perm) {
  switch (id) {
    case MechanismId::SD: return committee_sd(profile, perm);
    case MechanismId::WorstSD: return worst_sd(profile, perm);
    case MechanismId::BestGreedyStrict: return best_greedy_strict(profile, perm);
    case MechanismId::FairSD: return fair_sd(profile, perm);
    case MechanismId::Score: return rs_score_elect(profile);
  }
  throw ValidationError("unknown mechanism");
}

std::optional<Manipulation> sp_check(MechanismId id, const Profile& profile,
                                     const Permutation& perm, const SpCheckOptions& options) {
  const int m = profile.num_alternatives();
  // best-greedy is only defined on strict profiles, so misreports stay strict.
  const bool strict_only = id == MechanismId::BestGreedyStrict;

  std::vector<WeakOrder> reports;
  if (!options.samples) {
    if (m > options.max_exhaustive_m)
      throw InstanceTooLarge("exhaustive misreport search limited to m <= " +
                             std::to_string(options.max_exhaustive_m) +
                             "; pass a sample budget");
    reports = strict_only ? all_strict_orders(m) : all_weak_orders(m);
  }

  const auto honest = run_mechanism(id, profile, perm);
  std::mt19937_64 rng(options.seed);
  for (AgentId i = 1; i <= profile.num_agents(); ++i) {
    const auto& truth = profile.agent(i);
    if (options.samples) {
      std::set<WeakOrder> drawn;
      for (std::uint64_t s = 0; s < *options.samples; ++s)
        drawn.insert(strict_only ? random_weak_order(m, m, rng) : random_weak_order(m, 0, rng));
      reports.assign(drawn.begin(), drawn.end());
    }
    for (const auto& lie : reports) {
      if (lie == truth) continue;
      auto outcome = run_mechanism(id, profile.with_agent(i, lie), perm);
      if (compare(options.notion, truth, outcome, honest) == Comparison::Better)
        return Manipulation{i, lie, honest, std::move(outcome)};
    }
  }
  return std::nullopt;
}

}  // namespace paretocom
