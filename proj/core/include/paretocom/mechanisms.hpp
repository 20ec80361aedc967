#pragma once

// Serial-dictatorship style committee mechanisms and a brute-force
// strategyproofness checker.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "paretocom/extensions.hpp"
#include "paretocom/model.hpp"

namespace paretocom {

/// Priority order over agents 1..n.
class Permutation {
 public:
  /// Throws ValidationError unless `order` is a permutation of 1..n.
  explicit Permutation(std::vector<AgentId> order);
  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(order_.size()); }
  const std::vector<AgentId>& order() const noexcept { return order_; }
  auto begin() const noexcept { return order_.begin(); }
  auto end() const noexcept { return order_.end(); }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<AgentId> order_;
};

enum class MechanismId { SD, WorstSD, BestGreedyStrict, FairSD, Score };

std::string_view to_string(MechanismId id);
/// Accepts the CLI names sd|worst-sd|best-greedy|fair-sd|score.
std::optional<MechanismId> parse_mechanism(std::string_view text);

/// Committee voting serial dictatorship. Each agent in turn fixes its
/// strictly preferred alternatives from the current pool and narrows the
/// pool to its boundary class; the remaining seats go to the
/// lexicographically least pool members. RS-, DL- and UL-efficient.
Committee committee_sd(const Profile& profile, const Permutation& perm);

/// Each agent in turn deletes as many of its worst classes as possible
/// while keeping at least k alternatives; the k lexicographically least
/// survivors are then driven to W-efficiency with worst_verify.
Committee worst_sd(const Profile& profile, const Permutation& perm);

/// Agents in turn add their top alternative; leftover seats are filled
/// lexicographically. Best-efficient for strict profiles. Throws
/// PreconditionViolated on non-strict input.
Committee best_greedy_strict(const Profile& profile, const Permutation& perm);

/// Round-robin: each turn an agent takes up to ceil(k/n) of its most
/// preferred remaining alternatives. Not strategyproof.
Committee fair_sd(const Profile& profile, const Permutation& perm);

/// Dispatches to the mechanism; Score ignores `perm`.
Committee run_mechanism(MechanismId id, const Profile& profile, const Permutation& perm);

struct Manipulation {
  AgentId agent;
  WeakOrder misreport;
  Committee honest;
  Committee manipulated;
};

struct SpCheckOptions {
  /// When set, draw this many random misreports per agent instead of
  /// enumerating every weak order.
  std::optional<std::uint64_t> samples;
  std::uint64_t seed = 0;
  /// Exhaustive enumeration is allowed up to this many alternatives.
  int max_exhaustive_m = 4;
  /// Preference extension used to judge whether a misreport pays off.
  Extension notion = Extension::RS;
};

/// Searches misreports agent by agent (ascending id), each agent's
/// misreports in lexicographic order, and returns the first one that makes
/// the outcome strictly better for the agent's true order. Throws
/// InstanceTooLarge when m exceeds max_exhaustive_m and no sample budget is
/// given.
std::optional<Manipulation> sp_check(MechanismId id, const Profile& profile,
                                     const Permutation& perm, const SpCheckOptions& options = {});

}  // namespace paretocom
