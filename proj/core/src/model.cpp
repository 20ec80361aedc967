#include "paretocom/model.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "paretocom/errors.hpp"

namespace paretocom {

Committee::Committee(std::vector<Alternative> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
    throw ValidationError("duplicate alternative in committee");
  if (!members_.empty() && members_.front() < 1)
    throw ValidationError("alternative ids start at 1");
}

bool Committee::contains(Alternative a) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), a);
}

std::string Committee::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) out << ',';
    out << members_[i];
  }
  return out.str();
}

WeakOrder::WeakOrder(int m, std::vector<std::vector<Alternative>> classes)
    : m_(m), classes_(std::move(classes)), rank_(static_cast<std::size_t>(m) + 1, 0) {
  if (m < 1) throw ValidationError("need at least one alternative");
  int seen = 0;
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    auto& cls = classes_[c];
    if (cls.empty()) throw ValidationError("empty indifference class");
    std::sort(cls.begin(), cls.end());
    for (Alternative a : cls) {
      if (a < 1 || a > m)
        throw ValidationError("alternative " + std::to_string(a) + " out of range 1.." +
                              std::to_string(m));
      auto& slot = rank_[static_cast<std::size_t>(a)];
      if (slot != 0) throw ValidationError("duplicate alternative " + std::to_string(a));
      slot = static_cast<int>(c) + 1;
      ++seen;
    }
  }
  if (seen != m)
    throw ValidationError("classes cover " + std::to_string(seen) + " of " +
                          std::to_string(m) + " alternatives");
}

std::string WeakOrder::to_string() const {
  std::ostringstream out;
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    if (c) out << ',';
    const auto& cls = classes_[c];
    if (cls.size() == 1) {
      out << cls.front();
      continue;
    }
    out << '{';
    for (std::size_t j = 0; j < cls.size(); ++j) {
      if (j) out << ',';
      out << cls[j];
    }
    out << '}';
  }
  return out.str();
}

Profile::Profile(int m, int k, std::vector<WeakOrder> orders)
    : m_(m), k_(k), orders_(std::move(orders)) {
  if (m < 1) throw ValidationError("m must be at least 1");
  if (k < 1 || k > m)
    throw ValidationError("committee size k=" + std::to_string(k) + " outside 1.." +
                          std::to_string(m));
  if (orders_.empty()) throw ValidationError("profile needs at least one agent");
  for (const auto& o : orders_)
    if (o.num_alternatives() != m)
      throw ValidationError("weak order over a different alternative set");
}

Profile Profile::with_agent(AgentId i, WeakOrder order) const {
  auto orders = orders_;
  orders.at(static_cast<std::size_t>(i - 1)) = std::move(order);
  return Profile(m_, k_, std::move(orders));
}

void Profile::check_committee(const Committee& w) const {
  if (static_cast<int>(w.size()) != k_)
    throw SizeMismatch("committee {" + w.to_string() + "} has size " +
                       std::to_string(w.size()) + ", expected " + std::to_string(k_));
  if (!w.empty() && w.members().back() > m_)
    throw ValidationError("committee member " + std::to_string(w.members().back()) +
                          " exceeds m=" + std::to_string(m_));
}

int topwidth(const Profile& profile) {
  int width = 0;
  for (const auto& o : profile.orders())
    width = std::max(width, static_cast<int>(o.top().size()));
  return width;
}

bool is_dichotomous(const Profile& profile) {
  return std::all_of(profile.orders().begin(), profile.orders().end(),
                     [](const WeakOrder& o) { return o.num_classes() == 2; });
}

bool is_strict(const Profile& profile) {
  return std::all_of(profile.orders().begin(), profile.orders().end(), [](const WeakOrder& o) {
    return o.num_classes() == o.num_alternatives();
  });
}

std::vector<int> rank_vector(const WeakOrder& order, const Committee& w) {
  std::vector<int> ranks;
  ranks.reserve(w.size());
  for (Alternative a : w) ranks.push_back(order.rank(a));
  std::sort(ranks.begin(), ranks.end());
  return ranks;
}

Committee full_committee(int m) {
  std::vector<Alternative> all(static_cast<std::size_t>(m));
  for (int a = 1; a <= m; ++a) all[static_cast<std::size_t>(a - 1)] = a;
  return Committee(std::move(all));
}

std::uint64_t binomial(int m, int k) {
  if (k < 0 || k > m) return 0;
  k = std::min(k, m - k);
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    // result * (m - k + i) / i is exact at every step.
    const auto num = static_cast<std::uint64_t>(m - k + i);
    if (result > kMax / num) return kMax;
    result = result * num / static_cast<std::uint64_t>(i);
  }
  return result;
}

}  // namespace paretocom
