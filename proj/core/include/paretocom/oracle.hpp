#pragma once

// Exhaustive ground truth over S_k(A). Everything here is exponential in k
// and guarded by OracleLimits.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "paretocom/extensions.hpp"
#include "paretocom/model.hpp"

namespace paretocom {

/// Efficiency answer. A non-efficient verdict carries a committee that
/// Pareto-dominates the queried one.
struct Verdict {
  bool efficient = true;
  std::optional<Committee> witness;

  static Verdict efficient_verdict() { return {true, std::nullopt}; }
  static Verdict dominated_by(Committee w) { return {false, std::move(w)}; }

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct OracleLimits {
  /// Upper bound on C(m, k) for any exhaustive scan.
  std::uint64_t max_committees = 10'000'000;
};

/// Every agent weakly prefers w to v and at least one strictly.
bool pareto_dominates(const Profile& profile, Extension ext, const Committee& w,
                      const Committee& v);

/// Scans S_k(A) in lexicographic order; the witness is the
/// lexicographically least dominating committee.
Verdict verify_bruteforce(const Profile& profile, Extension ext, const Committee& w,
                          const OracleLimits& limits = {});

/// All ext-efficient committees, sorted lexicographically.
std::vector<Committee> enumerate_efficient(const Profile& profile, Extension ext,
                                           const OracleLimits& limits = {});

/// Returns a dominating committee, or nullopt when the input is efficient.
using ImprovementStep = std::function<std::optional<Committee>(const Committee&)>;

/// Step backed by verify_bruteforce.
ImprovementStep brute_force_step(const Profile& profile, Extension ext,
                                 const OracleLimits& limits = {});

/// Follows `step` from w until it reports efficiency. The result starts at
/// w; each element is dominated by its successor. Throws NonImprovingStep
/// when the step returns something that does not dominate its input.
std::vector<Committee> improvement_chain(const Profile& profile, Extension ext,
                                         const Committee& w, const ImprovementStep& step);

/// Throws InstanceTooLarge when C(m,k) exceeds the cap.
void check_enumerable(const Profile& profile, const OracleLimits& limits);

}  // namespace paretocom
