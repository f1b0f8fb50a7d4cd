#include "solvrad/group_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace solvrad {

namespace {

std::string_view trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

PermGroup read_group_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  uint32_t degree = 0;
  bool have_degree = false;
  std::vector<Permutation> gens;
  while (std::getline(in, line)) {
    std::string_view s = trim(line);
    if (s.empty() || s.front() == '#') continue;
    if (!have_degree) {
      if (s.substr(0, 6) != "degree")
        throw Error(ErrorCode::parse_error, "group file: first line must be \"degree N\"");
      std::string_view num = trim(s.substr(6));
      uint64_t value = 0;
      auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), value);
      if (ec != std::errc() || ptr != num.data() + num.size() || value == 0)
        throw Error(ErrorCode::parse_error, "group file: bad degree \"" + std::string(num) + "\"");
      degree = static_cast<uint32_t>(value);
      have_degree = true;
      continue;
    }
    gens.push_back(parse_cycles(s, degree));
  }
  if (!have_degree)
    throw Error(ErrorCode::parse_error, "group file: missing \"degree N\" line");
  return PermGroup::from_generators(degree, gens);
}

PermGroup read_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io_error, "cannot open group file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_group_text(buf.str());
}

}  // namespace solvrad
