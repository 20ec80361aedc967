#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace paretocom {

/// Alternatives are dense integer ids 1..m.
using Alternative = int;

/// Agents are addressed by 1-based ids in every public result.
using AgentId = int;

/// A fixed-size set of alternatives, kept in ascending order.
class Committee {
 public:
  Committee() = default;
  /// Sorts the members; throws ValidationError on duplicates or ids < 1.
  explicit Committee(std::vector<Alternative> members);
  Committee(std::initializer_list<Alternative> members)
      : Committee(std::vector<Alternative>(members)) {}

  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Alternative a) const noexcept;

  const std::vector<Alternative>& members() const noexcept { return members_; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  /// "1,3,4"
  std::string to_string() const;

  friend bool operator==(const Committee&, const Committee&) = default;
  friend auto operator<=>(const Committee& a, const Committee& b) {
    return a.members_ <=> b.members_;
  }

 private:
  std::vector<Alternative> members_;
};

/// One agent's preferences: an ordered partition of {1..m} into
/// indifference classes, best class first.
class WeakOrder {
 public:
  /// Validates that `classes` partitions {1..m} into non-empty classes.
  WeakOrder(int m, std::vector<std::vector<Alternative>> classes);

  int num_alternatives() const noexcept { return m_; }
  int num_classes() const noexcept { return static_cast<int>(classes_.size()); }

  /// Classes in preference order; each sorted ascending.
  const std::vector<std::vector<Alternative>>& classes() const noexcept {
    return classes_;
  }
  /// 1-based class index.
  const std::vector<Alternative>& cls(int index) const { return classes_.at(index - 1); }
  const std::vector<Alternative>& top() const { return classes_.front(); }

  /// 1-based index of the class holding `a`.
  int rank(Alternative a) const { return rank_.at(static_cast<std::size_t>(a)); }

  /// "{1,3},2,4"
  std::string to_string() const;

  friend bool operator==(const WeakOrder& a, const WeakOrder& b) {
    return a.m_ == b.m_ && a.classes_ == b.classes_;
  }
  /// Lexicographic on the class sequence.
  friend auto operator<=>(const WeakOrder& a, const WeakOrder& b) {
    return a.classes_ <=> b.classes_;
  }

 private:
  int m_;
  std::vector<std::vector<Alternative>> classes_;
  std::vector<int> rank_;  // indexed by alternative; slot 0 unused
};

/// n weak orders over a common alternative set plus the committee size k.
class Profile {
 public:
  Profile(int m, int k, std::vector<WeakOrder> orders);

  int num_alternatives() const noexcept { return m_; }
  int committee_size() const noexcept { return k_; }
  int num_agents() const noexcept { return static_cast<int>(orders_.size()); }

  const std::vector<WeakOrder>& orders() const noexcept { return orders_; }
  /// 1-based agent access.
  const WeakOrder& agent(AgentId i) const { return orders_.at(static_cast<std::size_t>(i - 1)); }

  /// Copy with agent i's order replaced.
  Profile with_agent(AgentId i, WeakOrder order) const;

  /// Throws SizeMismatch unless |w| = k, ValidationError on ids > m.
  void check_committee(const Committee& w) const;

  friend bool operator==(const Profile&, const Profile&) = default;

 private:
  int m_;
  int k_;
  std::vector<WeakOrder> orders_;
};

int topwidth(const Profile& profile);
/// Every agent has exactly two classes.
bool is_dichotomous(const Profile& profile);
/// Every class of every agent is a singleton.
bool is_strict(const Profile& profile);

/// Class indices of w's members under `order`, sorted ascending.
std::vector<int> rank_vector(const WeakOrder& order, const Committee& w);

/// All of {1..m}.
Committee full_committee(int m);

/// Number of k-subsets of an m-set, saturating at UINT64_MAX.
std::uint64_t binomial(int m, int k);

/// Calls fn(const Committee&) for every k-subset of {1..m} in
/// lexicographic order; stops early when fn returns false.
template <typename Fn>
void for_each_committee(int m, int k, Fn&& fn);

}  // namespace paretocom

#include "paretocom/detail/combinations.hpp"
