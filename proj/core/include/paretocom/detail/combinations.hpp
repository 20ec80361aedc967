#pragma once

#include <type_traits>
#include <utility>
#include <vector>

namespace paretocom {

template <typename Fn>
void for_each_committee(int m, int k, Fn&& fn) {
  if (k < 0 || k > m) return;
  std::vector<Alternative> cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    Committee c(cur);
    if constexpr (std::is_same_v<std::invoke_result_t<Fn&, const Committee&>, bool>) {
      if (!fn(c)) return;
    } else {
      fn(c);
    }
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == m - k + i + 1) --i;
    if (i < 0) return;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace paretocom
