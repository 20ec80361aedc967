#pragma once

// Polynomial-time verification and election algorithms.

#include <optional>
#include <vector>

#include "paretocom/graph.hpp"
#include "paretocom/model.hpp"
#include "paretocom/oracle.hpp"

namespace paretocom {

/// Structure used to decide RS-efficiency of a committee D when every agent
/// is dichotomous with a top class of at most two alternatives.
struct Tw2Decomposition {
  /// Agents whose whole top class lies inside D.
  std::vector<AgentId> saturated_agents;
  /// Union of the saturated agents' top classes (a subset of D).
  std::vector<Alternative> locked;
  /// Remaining agents whose top class meets D outside `locked`.
  std::vector<AgentId> edge_agents;
  /// Union of the edge agents' top classes.
  std::vector<Alternative> edge_alternatives;
  /// One edge per distinct edge-agent top class; left side = members of D.
  BipartiteGraph graph;
};

enum class Tw2Outcome {
  AllTopsInside,     ///< every top class is inside D
  CoverExceedsSlack, ///< cover number > k - |locked|; efficient
  CoverBelowSlack,   ///< cover number < k - |locked|; improvable
  TightCoverFound,   ///< cover number = k - |locked| and an augmented graph keeps it
  TightNoCandidate,  ///< cover number = k - |locked| and no augmented graph keeps it
};

struct AugmentationProbe {
  AgentId agent;
  std::vector<Alternative> pinned;  ///< vertices that received a pendant
  int cover_size;
};

struct Tw2Analysis {
  std::optional<Tw2Decomposition> decomposition;  ///< absent for AllTopsInside
  int cover_size = 0;
  int slack = 0;  ///< k - |locked|
  std::vector<AugmentationProbe> probes;
  Tw2Outcome outcome = Tw2Outcome::AllTopsInside;
  Verdict verdict;
};

/// Full trace of the dichotomous topwidth-≤2 RS test. Throws
/// PreconditionViolated when the profile is not dichotomous or has
/// topwidth > 2, SizeMismatch when |d| != k.
Tw2Analysis analyze_rs_dichotomous_tw2(const Profile& profile, const Committee& d);

inline Verdict rs_improve_dichotomous_tw2(const Profile& profile, const Committee& d) {
  return analyze_rs_dichotomous_tw2(profile, d).verdict;
}

/// True when analyze_rs_dichotomous_tw2 accepts the profile.
bool rs_poly_applicable(const Profile& profile);

/// Worst-extension efficiency test. The witness is the k lexicographically
/// least alternatives of the first agent's improvement pool that is large
/// enough.
Verdict worst_verify(const Profile& profile, const Committee& w);

/// Per-agent score of each alternative: 2(m - #strictly better) - (class
/// size - 1), i.e. doubled average Borda. Index 0 unused.
std::vector<long long> rs_scores(const Profile& profile);

/// The k alternatives with the highest total score, ties by ascending id.
/// The result is RS-efficient.
Committee rs_score_elect(const Profile& profile);

}  // namespace paretocom
