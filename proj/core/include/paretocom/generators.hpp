#pragma once

// Random and exhaustive preference generators.

#include <random>
#include <vector>

#include "paretocom/model.hpp"

namespace paretocom {

using Rng = std::mt19937_64;

/// Every weak order on {1..m}, sorted lexicographically by class sequence.
/// There are 1, 3, 13, 75, 541 of them for m = 1..5.
std::vector<WeakOrder> all_weak_orders(int m);
/// Every linear order on {1..m}, sorted lexicographically.
std::vector<WeakOrder> all_strict_orders(int m);

/// Uniform random ranking of {1..m} cut into classes. With classes = 0 each
/// of the m-1 gaps is cut independently with probability 1/2; otherwise
/// exactly `classes` non-empty classes with uniformly chosen cut points.
WeakOrder random_weak_order(int m, int classes, Rng& rng);

/// Impartial-culture profile of n agents.
Profile random_profile(int m, int n, int k, int classes, Rng& rng);

/// Dichotomous profile whose top classes have size 1 or 2 (m >= 2).
Profile random_dichotomous_tw2(int m, int n, int k, Rng& rng);

/// Weak order with the given top class and everything else tied below it.
WeakOrder dichotomous_order(int m, std::vector<Alternative> top);

}  // namespace paretocom
