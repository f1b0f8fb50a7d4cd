#include "solvrad/perm.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace solvrad {

Permutation::Permutation(uint32_t degree) {
  if (degree == 0)
    throw Error(ErrorCode::invalid_argument, "permutation degree must be >= 1");
  images_.resize(degree);
  for (uint32_t i = 0; i < degree; ++i) images_[i] = i;
}

Permutation::Permutation(std::vector<uint32_t> images) : images_(std::move(images)) {
  if (images_.empty())
    throw Error(ErrorCode::invalid_argument, "permutation degree must be >= 1");
  std::vector<bool> seen(images_.size(), false);
  for (uint32_t img : images_) {
    if (img >= images_.size() || seen[img])
      throw Error(ErrorCode::invalid_argument, "image table is not a bijection");
    seen[img] = true;
  }
}

bool Permutation::is_identity() const noexcept {
  for (uint32_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

uint32_t Permutation::least_moved() const noexcept {
  for (uint32_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return i;
  return degree();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw Error(ErrorCode::degree_mismatch, "compose: degree mismatch");
  std::vector<uint32_t> r(p.degree());
  for (uint32_t i = 0; i < p.degree(); ++i) r[i] = q[p[i]];
  return Permutation(std::move(r));
}

Permutation inverse(const Permutation& p) {
  std::vector<uint32_t> r(p.degree());
  for (uint32_t i = 0; i < p.degree(); ++i) r[p[i]] = i;
  return Permutation(std::move(r));
}

Permutation conjugate(const Permutation& p, const Permutation& g) {
  if (p.degree() != g.degree())
    throw Error(ErrorCode::degree_mismatch, "conjugate: degree mismatch");
  // (g^-1 p g)(g(i)) = g(p(i))
  std::vector<uint32_t> r(p.degree());
  for (uint32_t i = 0; i < p.degree(); ++i) r[g[i]] = g[p[i]];
  return Permutation(std::move(r));
}

Permutation commutator(const Permutation& p, const Permutation& q) {
  return compose(compose(compose(inverse(p), inverse(q)), p), q);
}

uint64_t element_order(const Permutation& p) {
  uint64_t result = 1;
  std::vector<bool> seen(p.degree(), false);
  for (uint32_t i = 0; i < p.degree(); ++i) {
    if (seen[i]) continue;
    uint64_t len = 0;
    for (uint32_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::vector<std::vector<uint32_t>> disjoint_cycles(const Permutation& p) {
  std::vector<std::vector<uint32_t>> cycles;
  std::vector<bool> seen(p.degree(), false);
  for (uint32_t i = 0; i < p.degree(); ++i) {
    if (seen[i] || !p.moves(i)) continue;
    std::vector<uint32_t> cycle;
    for (uint32_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      cycle.push_back(j);
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

namespace {

[[noreturn]] void parse_fail(const std::string& what) {
  throw Error(ErrorCode::parse_error, "cycle notation: " + what);
}

}  // namespace

Permutation parse_cycles(std::string_view text, uint32_t degree) {
  if (degree == 0)
    throw Error(ErrorCode::invalid_argument, "degree must be >= 1");

  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
      ++pos;
  };

  skip_ws();
  if (pos < text.size() && text[pos] == 'e') {
    ++pos;
    skip_ws();
    if (pos != text.size()) parse_fail("trailing input after 'e'");
    return Permutation(degree);
  }

  Permutation result(degree);
  bool saw_cycle = false;
  while (true) {
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '(') parse_fail(std::string("expected '(' but found '") + text[pos] + "'");
    ++pos;

    std::vector<uint32_t> cycle;  // 0-based
    std::vector<bool> in_cycle(degree, false);
    while (true) {
      skip_ws();
      if (pos == text.size()) parse_fail("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        parse_fail(std::string("unexpected character '") + text[pos] + "'");
      uint64_t value = 0;
      auto [next, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
      if (ec != std::errc()) parse_fail("bad number");
      pos = static_cast<size_t>(next - text.data());
      if (value < 1 || value > degree)
        parse_fail("point " + std::to_string(value) + " out of range for degree " + std::to_string(degree));
      uint32_t point = static_cast<uint32_t>(value - 1);
      if (in_cycle[point])
        parse_fail("repeated point " + std::to_string(value) + " within one cycle");
      in_cycle[point] = true;
      cycle.push_back(point);
    }
    saw_cycle = true;
    if (cycle.size() >= 2) {
      std::vector<uint32_t> images(degree);
      for (uint32_t i = 0; i < degree; ++i) images[i] = i;
      for (size_t k = 0; k < cycle.size(); ++k)
        images[cycle[k]] = cycle[(k + 1) % cycle.size()];
      result = compose(result, Permutation(std::move(images)));
    }
  }
  if (!saw_cycle) parse_fail("empty input");
  return result;
}

std::string print_cycles(const Permutation& p) {
  auto cycles = disjoint_cycles(p);
  if (cycles.empty()) return "()";
  std::ostringstream out;
  for (const auto& cycle : cycles) {
    out << '(';
    for (size_t k = 0; k < cycle.size(); ++k) {
      if (k) out << ' ';
      out << cycle[k] + 1;
    }
    out << ')';
  }
  return out.str();
}

size_t PermHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the image words.
  uint64_t h = 14695981039346656037ull;
  for (uint32_t img : p.images()) {
    h ^= img;
    h *= 1099511628211ull;
  }
  return static_cast<size_t>(h);
}

}  // namespace solvrad
