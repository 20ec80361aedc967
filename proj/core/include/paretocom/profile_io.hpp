#pragma once

// Plain-text profile format.
//
//   # comment lines start with '#'
//   m k n
//   <agent 1>
//   ...
//   <agent n>
//
// An agent line lists classes best to worst, comma separated. A tie class
// is brace-delimited (`{1,3}`); braces are optional for singletons.
// Example: `{1,3},2,{4}`.

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "paretocom/model.hpp"

namespace paretocom {

/// Throws ParseError (with line number) or ValidationError.
Profile parse_profile(std::istream& in);
Profile parse_profile(std::string_view text);
Profile load_profile(const std::string& path);

/// Canonical text form; parse_profile(format_profile(p)) == p.
std::string format_profile(const Profile& profile);

/// Parses one agent line such as "{1,3},2,{4}".
WeakOrder parse_weak_order(std::string_view line, int m);

/// "1,3,4" -> {1,3,4}. Throws ValidationError on malformed input.
std::vector<int> parse_id_list(std::string_view text);
Committee parse_committee(std::string_view text);

}  // namespace paretocom
