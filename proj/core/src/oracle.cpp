#include "paretocom/oracle.hpp"

#include <string>

#include "paretocom/errors.hpp"

namespace paretocom {
bool pareto_dominates(const Profile& profile, Extension ext, const Committee& w,
                      const Committee& v) {
  bool strict = false;
  for (const auto& order : profile.orders()) {
    switch (compare(ext, order, w, v)) {
      case Comparison::Better: strict = true; break;
      case Comparison::Equal: break;
      case Comparison::Worse:
      case Comparison::Incomparable: return false;
    }
  }
  return strict;
}

void check_enumerable(const Profile& profile, const OracleLimits& limits) {
  const auto count = binomial(profile.num_alternatives(), profile.committee_size());
  if (count > limits.max_committees)
    throw InstanceTooLarge("C(" + std::to_string(profile.num_alternatives()) + "," +
                           std::to_string(profile.committee_size()) + ") = " +
                           std::to_string(count) + " committees exceeds cap " +
                           std::to_string(limits.max_committees));
}

Verdict verify_bruteforce(const Profile& profile, Extension ext, const Committee& w,
                          const OracleLimits& limits) {
  profile.check_committee(w);
  check_enumerable(profile, limits);
  std::optional<Committee> witness;
  for_each_committee(profile.num_alternatives(), profile.committee_size(),
                     [&](const Committee& v) {
                       if (pareto_dominates(profile, ext, v, w)) {
                         witness = v;
                         return false;
                       }
                       return true;
                     });
  return witness ? Verdict::dominated_by(*witness) : Verdict::efficient_verdict();
}

std::vector<Committee> enumerate_efficient(const Profile& profile, Extension ext,
                                           const OracleLimits& limits) {
  check_enumerable(profile, limits);
  std::vector<Committee> all;
  for_each_committee(profile.num_alternatives(), profile.committee_size(),
                     [&](const Committee& c) { all.push_back(c); });

  std::vector<Committee> efficient;
  for (const auto& w : all) {
    bool dominated = false;
    for (const auto& v : all) {
      if (pareto_dominates(profile, ext, v, w)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) efficient.push_back(w);
  }
  return efficient;
}

ImprovementStep brute_force_step(const Profile& profile, Extension ext,
                                 const OracleLimits& limits) {
  return [&profile, ext, limits](const Committee& w) -> std::optional<Committee> {
    return verify_bruteforce(profile, ext, w, limits).witness;
  };
}

std::vector<Committee> improvement_chain(const Profile& profile, Extension ext,
                                         const Committee& w, const ImprovementStep& step) {
  profile.check_committee(w);
  std::vector<Committee> chain{w};
  while (auto next = step(chain.back())) {
    profile.check_committee(*next);
    if (!pareto_dominates(profile, ext, *next, chain.back()))
      throw NonImprovingStep("step proposed {" + next->to_string() +
                             "}, which does not dominate {" + chain.back().to_string() +
                             "} under " + std::string(to_string(ext)));
    chain.push_back(std::move(*next));
  }
  return chain;
}

}  // namespace paretocom
