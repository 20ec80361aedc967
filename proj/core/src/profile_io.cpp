#include "paretocom/profile_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "paretocom/errors.hpp"

namespace paretocom {
namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

bool parse_int(std::string_view s, int& out) {
  s = trim(s);
  if (s.empty()) return false;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && ptr == end;
}

// Thrown by the line-level parsers; rewrapped with a line number.
struct SyntaxError {
  std::string what;
};

std::vector<std::vector<Alternative>> split_classes(std::string_view line) {
  std::vector<std::vector<Alternative>> classes;
  std::size_t pos = 0;
  const auto skip_spaces = [&] {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
  };
  const auto read_int = [&]() -> int {
    skip_spaces();
    const auto start = pos;
    while (pos < line.size() && line[pos] >= '0' && line[pos] <= '9') ++pos;
    int value = 0;
    if (start == pos || !parse_int(line.substr(start, pos - start), value))
      throw SyntaxError{"expected an alternative id at column " + std::to_string(start + 1)};
    skip_spaces();
    return value;
  };

  line = trim(line);
  if (line.empty()) throw SyntaxError{"empty preference line"};
  while (true) {
    skip_spaces();
    std::vector<Alternative> cls;
    if (pos < line.size() && line[pos] == '{') {
      ++pos;
      cls.push_back(read_int());
      while (pos < line.size() && line[pos] == ',') {
        ++pos;
        cls.push_back(read_int());
      }
      if (pos >= line.size() || line[pos] != '}')
        throw SyntaxError{"unterminated '{' class"};
      ++pos;
      skip_spaces();
    } else {
      cls.push_back(read_int());
    }
    classes.push_back(std::move(cls));
    if (pos == line.size()) break;
    if (line[pos] != ',')
      throw SyntaxError{std::string("unexpected '") + line[pos] + "' at column " +
                        std::to_string(pos + 1)};
    ++pos;
  }
  return classes;
}

}  // namespace

WeakOrder parse_weak_order(std::string_view line, int m) {
  try {
    return WeakOrder(m, split_classes(line));
  } catch (const SyntaxError& e) {
    throw ParseError(1, e.what);
  }
}

Profile parse_profile(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  int m = 0, k = 0, n = 0;
  std::vector<WeakOrder> orders;

  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (!have_header) {
      std::istringstream header{std::string(line)};
      std::string a, b, c, extra;
      if (!(header >> a >> b >> c) || (header >> extra) || !parse_int(a, m) ||
          !parse_int(b, k) || !parse_int(c, n))
        throw ParseError(line_no, "header must be three integers 'm k n'");
      if (m < 1) throw ValidationError("m must be at least 1");
      if (n < 1) throw ValidationError("n must be at least 1");
      if (k < 1 || k > m)
        throw ValidationError("committee size k=" + std::to_string(k) + " outside 1.." +
                              std::to_string(m));
      have_header = true;
      continue;
    }
    if (static_cast<int>(orders.size()) == n)
      throw ParseError(line_no, "more than n=" + std::to_string(n) + " agent lines");
    std::vector<std::vector<Alternative>> classes;
    try {
      classes = split_classes(line);
    } catch (const SyntaxError& e) {
      throw ParseError(line_no, e.what);
    }
    try {
      orders.emplace_back(m, std::move(classes));
    } catch (const ValidationError& e) {
      throw ValidationError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!have_header) throw ParseError(line_no, "missing 'm k n' header");
  if (static_cast<int>(orders.size()) != n)
    throw ParseError(line_no, "expected " + std::to_string(n) + " agent lines, found " +
                                  std::to_string(orders.size()));
  return Profile(m, k, std::move(orders));
}

Profile parse_profile(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_profile(in);
}

Profile load_profile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return parse_profile(in);
}

std::string format_profile(const Profile& profile) {
  std::ostringstream out;
  out << profile.num_alternatives() << ' ' << profile.committee_size() << ' '
      << profile.num_agents() << '\n';
  for (const auto& o : profile.orders()) out << o.to_string() << '\n';
  return out.str();
}

std::vector<int> parse_id_list(std::string_view text) {
  std::vector<int> ids;
  text = trim(text);
  if (text.empty()) throw ValidationError("empty id list");
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto token = text.substr(start, comma == std::string_view::npos ? text.npos
                                                                            : comma - start);
    int id = 0;
    if (!parse_int(token, id))
      throw ValidationError("bad id '" + std::string(trim(token)) + "' in list '" +
                            std::string(text) + "'");
    ids.push_back(id);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return ids;
}

Committee parse_committee(std::string_view text) { return Committee(parse_id_list(text)); }

}  // namespace paretocom
