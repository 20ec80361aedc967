#include "paretocom/generators.hpp"

#include <algorithm>
#include <numeric>

#include "paretocom/errors.hpp"

namespace paretocom {
namespace {

void ordered_partitions(std::vector<Alternative>& rest,
                        std::vector<std::vector<Alternative>>& prefix, int m,
                        std::vector<WeakOrder>& out) {
  if (rest.empty()) {
    out.emplace_back(m, prefix);
    return;
  }
  const auto size = rest.size();
  // Every non-empty subset of `rest` as the next class.
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << size); ++mask) {
    std::vector<Alternative> cls, remaining;
    for (std::size_t b = 0; b < size; ++b)
      ((mask >> b) & 1 ? cls : remaining).push_back(rest[b]);
    prefix.push_back(std::move(cls));
    ordered_partitions(remaining, prefix, m, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<WeakOrder> all_weak_orders(int m) {
  if (m < 1 || m > 8) throw ValidationError("all_weak_orders supports 1 <= m <= 8");
  std::vector<Alternative> all(static_cast<std::size_t>(m));
  std::iota(all.begin(), all.end(), 1);
  std::vector<std::vector<Alternative>> prefix;
  std::vector<WeakOrder> out;
  ordered_partitions(all, prefix, m, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<WeakOrder> all_strict_orders(int m) {
  if (m < 1 || m > 10) throw ValidationError("all_strict_orders supports 1 <= m <= 10");
  std::vector<Alternative> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<WeakOrder> out;
  do {
    std::vector<std::vector<Alternative>> classes;
    for (Alternative a : perm) classes.push_back({a});
    out.emplace_back(m, std::move(classes));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

WeakOrder random_weak_order(int m, int classes, Rng& rng) {
  if (m < 1) throw ValidationError("m must be at least 1");
  if (classes < 0 || classes > m)
    throw ValidationError("class count must lie in 0..m");
  std::vector<Alternative> ranking(static_cast<std::size_t>(m));
  std::iota(ranking.begin(), ranking.end(), 1);
  std::shuffle(ranking.begin(), ranking.end(), rng);

  std::vector<char> cut(static_cast<std::size_t>(m), 0);  // cut[g]: boundary after position g
  if (classes == 0) {
    std::bernoulli_distribution coin(0.5);
    for (int g = 0; g + 1 < m; ++g) cut[static_cast<std::size_t>(g)] = coin(rng);
  } else {
    std::vector<int> gaps(static_cast<std::size_t>(m - 1));
    std::iota(gaps.begin(), gaps.end(), 0);
    std::shuffle(gaps.begin(), gaps.end(), rng);
    for (int c = 0; c + 1 < classes; ++c) cut[static_cast<std::size_t>(gaps[static_cast<std::size_t>(c)])] = 1;
  }

  std::vector<std::vector<Alternative>> out(1);
  for (int p = 0; p < m; ++p) {
    out.back().push_back(ranking[static_cast<std::size_t>(p)]);
    if (p + 1 < m && cut[static_cast<std::size_t>(p)]) out.emplace_back();
  }
  return WeakOrder(m, std::move(out));
}

Profile random_profile(int m, int n, int k, int classes, Rng& rng) {
  std::vector<WeakOrder> orders;
  orders.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) orders.push_back(random_weak_order(m, classes, rng));
  return Profile(m, k, std::move(orders));
}

WeakOrder dichotomous_order(int m, std::vector<Alternative> top) {
  std::vector<Alternative> rest;
  for (Alternative a = 1; a <= m; ++a)
    if (std::find(top.begin(), top.end(), a) == top.end()) rest.push_back(a);
  std::vector<std::vector<Alternative>> classes{std::move(top)};
  if (!rest.empty()) classes.push_back(std::move(rest));
  return WeakOrder(m, std::move(classes));
}

Profile random_dichotomous_tw2(int m, int n, int k, Rng& rng) {
  if (m < 2) throw ValidationError("dichotomous profiles need m >= 2");
  std::uniform_int_distribution<int> pick(1, m);
  std::vector<WeakOrder> orders;
  for (int i = 0; i < n; ++i) {
    const bool pair = m >= 3 && std::bernoulli_distribution(0.5)(rng);
    std::vector<Alternative> top{pick(rng)};
    if (pair) {
      Alternative b = pick(rng);
      while (b == top[0]) b = pick(rng);
      top.push_back(b);
    }
    orders.push_back(dichotomous_order(m, std::move(top)));
  }
  return Profile(m, k, std::move(orders));
}

}  // namespace paretocom
