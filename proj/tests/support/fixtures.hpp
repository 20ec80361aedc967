#pragma once

#include <string>

#include "paretocom/model.hpp"
#include "paretocom/profile_io.hpp"

namespace paretocom::testing {

// Alternatives a..f are 1..6 throughout.
inline constexpr int a = 1, b = 2, c = 3, d = 4, e = 5, f = 6;

// 1: a,b,c,d   2: d,c,b,a   (k = 2)
inline constexpr const char* kOpposedPair = "4 2 2\n1,2,3,4\n4,3,2,1\n";

// {c,d} consists of Pareto optimal alternatives yet {a,b} dominates it.
inline constexpr const char* kCrossedFour = "4 2 4\n1,3,2,4\n1,4,2,3\n2,3,1,4\n2,4,1,3\n";

// Dichotomous, topwidth 2; D = {a,b} is not RS-efficient.
inline constexpr const char* kFivePairs =
    "6 2 5\n{1,3},{2,4,5,6}\n{2,3},{1,4,5,6}\n{2,4},{1,3,5,6}\n{4,5},{1,2,3,6}\n{5,6},{1,2,3,4}\n";

// 1: a,b,c   2: a,c,b   (k = 2); the fair serial dictatorship is manipulable here.
inline constexpr const char* kFairSdProfile = "3 2 2\n1,2,3\n1,3,2\n";

inline Profile opposed_pair() { return parse_profile(std::string_view{kOpposedPair}); }
inline Profile crossed_four() { return parse_profile(std::string_view{kCrossedFour}); }
inline Profile five_pairs() { return parse_profile(std::string_view{kFivePairs}); }
inline Profile fair_sd_profile() { return parse_profile(std::string_view{kFairSdProfile}); }

inline WeakOrder order(int m, std::string_view text) { return parse_weak_order(text, m); }

}  // namespace paretocom::testing
