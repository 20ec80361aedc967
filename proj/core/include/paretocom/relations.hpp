#pragma once

#include <array>
#include <string>
#include <vector>

#include "paretocom/extensions.hpp"
#include "paretocom/oracle.hpp"

namespace paretocom {

struct RelationCheck {
  std::string name;  ///< e.g. "DL_subset_RS", "B_meets_DL"
  bool pass = false;
};

/// The five efficient sets of a profile and the seven structural
/// relations that must hold between them: DL ⊆ RS, UL ⊆ RS, and non-empty
/// intersections B∩DL, W∩UL, DL∩UL, B∩RS, W∩RS.
struct RelationsReport {
  std::array<std::vector<Committee>, 5> efficient;  ///< indexed like kAllExtensions
  std::vector<RelationCheck> checks;

  const std::vector<Committee>& of(Extension ext) const {
    return efficient[static_cast<std::size_t>(ext)];
  }
  bool all_pass() const;
};

RelationsReport run_relations(const Profile& profile, const OracleLimits& limits = {});

}  // namespace paretocom
