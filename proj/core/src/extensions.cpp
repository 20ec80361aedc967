#include "paretocom/extensions.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "paretocom/errors.hpp"

namespace paretocom {
namespace {

Comparison from_order(int lhs_key, int rhs_key) {
  // Smaller key is better.
  if (lhs_key < rhs_key) return Comparison::Better;
  if (lhs_key > rhs_key) return Comparison::Worse;
  return Comparison::Equal;
}

// w >=RS v iff the i-th best member of w is at least as good as the i-th
// best member of v for every i.
Comparison compare_responsive(const std::vector<int>& w, const std::vector<int>& v) {
  bool w_geq = true, v_geq = true;
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (w[j] > v[j]) w_geq = false;
    if (v[j] > w[j]) v_geq = false;
  }
  if (w_geq && v_geq) return Comparison::Equal;
  if (w_geq) return Comparison::Better;
  if (v_geq) return Comparison::Worse;
  return Comparison::Incomparable;
}

}  // namespace

std::string_view to_string(Extension ext) {
  switch (ext) {
    case Extension::RS: return "rs";
    case Extension::DL: return "dl";
    case Extension::UL: return "ul";
    case Extension::Best: return "best";
    case Extension::Worst: return "worst";
  }
  return "?";
}

std::string_view to_string(Comparison cmp) {
  switch (cmp) {
    case Comparison::Better: return "BETTER";
    case Comparison::Equal: return "EQUAL";
    case Comparison::Worse: return "WORSE";
    case Comparison::Incomparable: return "INCOMPARABLE";
  }
  return "?";
}

std::optional<Extension> parse_extension(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (Extension ext : kAllExtensions)
    if (lower == to_string(ext)) return ext;
  if (lower == "b") return Extension::Best;
  if (lower == "w") return Extension::Worst;
  return std::nullopt;
}

ClassSignature signature(const WeakOrder& order, const Committee& w) {
  ClassSignature sig{std::vector<int>(static_cast<std::size_t>(order.num_classes()), 0)};
  for (Alternative a : w) ++sig.counts[static_cast<std::size_t>(order.rank(a) - 1)];
  return sig;
}

Comparison compare(Extension ext, const WeakOrder& order, const Committee& w,
                   const Committee& v) {
  if (w.size() != v.size())
    throw SizeMismatch("cannot compare committees of sizes " + std::to_string(w.size()) +
                       " and " + std::to_string(v.size()));
  if (w.empty()) return Comparison::Equal;

  switch (ext) {
    case Extension::RS:
      return compare_responsive(rank_vector(order, w), rank_vector(order, v));
    case Extension::Best:
      return from_order(rank_vector(order, w).front(), rank_vector(order, v).front());
    case Extension::Worst:
      return from_order(rank_vector(order, w).back(), rank_vector(order, v).back());
    case Extension::DL: {
      const auto sw = signature(order, w).counts;
      const auto sv = signature(order, v).counts;
      for (std::size_t l = 0; l < sw.size(); ++l)
        if (sw[l] != sv[l]) return sw[l] > sv[l] ? Comparison::Better : Comparison::Worse;
      return Comparison::Equal;
    }
    case Extension::UL: {
      const auto sw = signature(order, w).counts;
      const auto sv = signature(order, v).counts;
      for (std::size_t l = sw.size(); l-- > 0;)
        if (sw[l] != sv[l]) return sw[l] < sv[l] ? Comparison::Better : Comparison::Worse;
      return Comparison::Equal;
    }
  }
  return Comparison::Incomparable;
}

}  // namespace paretocom
