#include "paretocom/relations.hpp"

#include <algorithm>

namespace paretocom {
namespace {

bool subset(const std::vector<Committee>& a, const std::vector<Committee>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool meets(const std::vector<Committee>& a, const std::vector<Committee>& b) {
  return std::any_of(a.begin(), a.end(), [&](const Committee& c) {
    return std::binary_search(b.begin(), b.end(), c);
  });
}

}  // namespace

bool RelationsReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const RelationCheck& c) { return c.pass; });
}

RelationsReport run_relations(const Profile& profile, const OracleLimits& limits) {
  RelationsReport report;
  for (Extension ext : kAllExtensions)
    report.efficient[static_cast<std::size_t>(ext)] = enumerate_efficient(profile, ext, limits);

  const auto& rs = report.of(Extension::RS);
  const auto& dl = report.of(Extension::DL);
  const auto& ul = report.of(Extension::UL);
  const auto& best = report.of(Extension::Best);
  const auto& worst = report.of(Extension::Worst);
  report.checks = {
      {"DL_subset_RS", subset(dl, rs)},  {"UL_subset_RS", subset(ul, rs)},
      {"B_meets_DL", meets(best, dl)},   {"W_meets_UL", meets(worst, ul)},
      {"DL_meets_UL", meets(dl, ul)},    {"B_meets_RS", meets(best, rs)},
      {"W_meets_RS", meets(worst, rs)},
  };
  return report;
}

}  // namespace paretocom
