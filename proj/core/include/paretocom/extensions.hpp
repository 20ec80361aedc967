#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "paretocom/model.hpp"

namespace paretocom {

/// Set extensions lifting a weak order on alternatives to equal-size sets.
enum class Extension { RS, DL, UL, Best, Worst };

inline constexpr std::array<Extension, 5> kAllExtensions = {
    Extension::RS, Extension::DL, Extension::UL, Extension::Best, Extension::Worst};

enum class Comparison { Better, Equal, Worse, Incomparable };

std::string_view to_string(Extension ext);
std::string_view to_string(Comparison cmp);
/// Accepts rs|dl|ul|best|worst (case-insensitive).
std::optional<Extension> parse_extension(std::string_view text);

/// counts[l-1] = |w ∩ E^l| for each class l of the order.
struct ClassSignature {
  std::vector<int> counts;
  friend bool operator==(const ClassSignature&, const ClassSignature&) = default;
};

ClassSignature signature(const WeakOrder& order, const Committee& w);

/// How one agent ranks w against v under `ext`. Incomparable is only
/// possible for RS; the other four extensions are total preorders.
/// Throws SizeMismatch when |w| != |v|.
Comparison compare(Extension ext, const WeakOrder& order, const Committee& w,
                   const Committee& v);

inline bool weakly_prefers(Extension ext, const WeakOrder& order, const Committee& w,
                           const Committee& v) {
  const auto c = compare(ext, order, w, v);
  return c == Comparison::Better || c == Comparison::Equal;
}

}  // namespace paretocom
