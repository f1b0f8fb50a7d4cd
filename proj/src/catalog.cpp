#include "solvrad/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace solvrad {

namespace {

Permutation cycle_on(uint32_t degree, uint32_t first, uint32_t last) {
  // (first first+1 ... last), 0-based endpoints.
  std::vector<uint32_t> images(degree);
  for (uint32_t i = 0; i < degree; ++i) images[i] = i;
  for (uint32_t i = first; i < last; ++i) images[i] = i + 1;
  images[last] = first;
  return Permutation(std::move(images));
}

Permutation transposition(uint32_t degree, uint32_t a, uint32_t b) {
  std::vector<uint32_t> images(degree);
  for (uint32_t i = 0; i < degree; ++i) images[i] = i;
  std::swap(images[a], images[b]);
  return Permutation(std::move(images));
}

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

uint32_t mod_inverse(uint32_t a, uint32_t p) {
  // Fermat: a^(p-2) mod p.
  uint64_t result = 1, base = a % p;
  uint32_t e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<uint32_t>(result);
}

}  // namespace

PermGroup symmetric(uint32_t n) {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "symmetric(n): n must be >= 1");
  if (n == 1) return PermGroup::trivial(1);
  return PermGroup::from_generators(n, {transposition(n, 0, 1), cycle_on(n, 0, n - 1)});
}

PermGroup alternating(uint32_t n) {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "alternating(n): n must be >= 1");
  if (n <= 2) return PermGroup::trivial(n);
  Permutation three_cycle = cycle_on(n, 0, 2);
  if (n % 2 == 1) return PermGroup::from_generators(n, {three_cycle, cycle_on(n, 0, n - 1)});
  return PermGroup::from_generators(n, {three_cycle, cycle_on(n, 1, n - 1)});
}

PermGroup cyclic(uint32_t n) {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "cyclic(n): n must be >= 1");
  if (n == 1) return PermGroup::trivial(1);
  return PermGroup::from_generators(n, {cycle_on(n, 0, n - 1)});
}

PermGroup dihedral(uint32_t n) {
  if (n < 3) throw Error(ErrorCode::invalid_argument, "dihedral(n): n must be >= 3");
  std::vector<uint32_t> reflection(n);
  for (uint32_t i = 0; i < n; ++i) reflection[i] = n - 1 - i;
  return PermGroup::from_generators(n, {cycle_on(n, 0, n - 1), Permutation(std::move(reflection))});
}

PermGroup psl2(uint32_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::invalid_argument, "psl2(p): p must be prime");
  uint32_t degree = p + 1;
  uint32_t inf = p;  // points 0..p-1 are field elements, p is infinity

  std::vector<uint32_t> shift(degree);  // z -> z+1
  for (uint32_t z = 0; z < p; ++z) shift[z] = (z + 1) % p;
  shift[inf] = inf;

  std::vector<uint32_t> flip(degree);  // z -> -1/z
  flip[0] = inf;
  flip[inf] = 0;
  for (uint32_t z = 1; z < p; ++z) flip[z] = (p - mod_inverse(z, p)) % p;

  return PermGroup::from_generators(degree, {Permutation(std::move(shift)), Permutation(std::move(flip))});
}

PermGroup direct_product(const PermGroup& g, const PermGroup& h) {
  uint32_t degree = g.degree() + h.degree();
  std::vector<Permutation> gens;
  for (const Permutation& p : g.generators()) {
    std::vector<uint32_t> images(degree);
    for (uint32_t i = 0; i < g.degree(); ++i) images[i] = p[i];
    for (uint32_t i = g.degree(); i < degree; ++i) images[i] = i;
    gens.emplace_back(std::move(images));
  }
  for (const Permutation& p : h.generators()) {
    std::vector<uint32_t> images(degree);
    for (uint32_t i = 0; i < g.degree(); ++i) images[i] = i;
    for (uint32_t i = 0; i < h.degree(); ++i) images[g.degree() + i] = g.degree() + p[i];
    gens.emplace_back(std::move(images));
  }
  return PermGroup::from_generators(degree, gens);
}

Permutation block_swap(uint32_t inner_degree) {
  std::vector<uint32_t> images(2 * inner_degree);
  for (uint32_t i = 0; i < inner_degree; ++i) {
    images[i] = i + inner_degree;
    images[i + inner_degree] = i;
  }
  return Permutation(std::move(images));
}

PermGroup wreath_swap(const PermGroup& g) {
  uint32_t degree = 2 * g.degree();
  std::vector<Permutation> gens;
  for (const Permutation& p : g.generators()) {
    std::vector<uint32_t> images(degree);
    for (uint32_t i = 0; i < g.degree(); ++i) images[i] = p[i];
    for (uint32_t i = g.degree(); i < degree; ++i) images[i] = i;
    gens.emplace_back(std::move(images));
  }
  gens.push_back(block_swap(g.degree()));
  return PermGroup::from_generators(degree, gens);
}

namespace {

uint32_t parse_number(std::string_view s, const std::string& name) {
  uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || value == 0 || value > 1u << 20)
    throw Error(ErrorCode::parse_error, "catalog: bad parameter in \"" + name + "\"");
  return static_cast<uint32_t>(value);
}

PermGroup base_from_name(std::string_view term, const std::string& full) {
  if (term.size() >= 2 && (term[0] == 'S' || term[0] == 'A' || term[0] == 'C' || term[0] == 'D') &&
      std::isdigit(static_cast<unsigned char>(term[1]))) {
    uint32_t n = parse_number(term.substr(1), full);
    switch (term[0]) {
      case 'S': return symmetric(n);
      case 'A': return alternating(n);
      case 'C': return cyclic(n);
      case 'D': return dihedral(n);
    }
  }
  if (term.substr(0, 6) == "PSL(2," && term.back() == ')')
    return psl2(parse_number(term.substr(6, term.size() - 7), full));
  throw Error(ErrorCode::parse_error, "catalog: unknown group name \"" + full + "\"");
}

}  // namespace

PermGroup group_from_name(const std::string& name) {
  std::string s;
  for (char c : name)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(std::toupper(static_cast<unsigned char>(c)));
  if (s.empty()) throw Error(ErrorCode::parse_error, "catalog: empty group name");

  // Split into product terms on 'X', but not inside parentheses.
  std::vector<std::string> terms;
  std::string current;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == 'X' && depth == 0) {
      terms.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  terms.push_back(current);

  PermGroup result = PermGroup::trivial(1);
  bool first = true;
  for (std::string term : terms) {
    if (term.empty()) throw Error(ErrorCode::parse_error, "catalog: empty product term in \"" + name + "\"");
    bool wreath = false;
    if (term.size() > 3 && term.substr(term.size() - 3) == "WR2") {
      wreath = true;
      term = term.substr(0, term.size() - 3);
    }
    PermGroup g = base_from_name(term, name);
    if (wreath) g = wreath_swap(g);
    result = first ? std::move(g) : direct_product(result, g);
    first = false;
  }
  return result;
}

std::vector<std::pair<std::string, std::string>> group_catalog_summary() {
  return {
      {"S<n>", "symmetric group on n points, order n!"},
      {"A<n>", "alternating group on n points, order n!/2"},
      {"C<n>", "cyclic group of order n"},
      {"D<n>", "dihedral group on n points, order 2n (n >= 3)"},
      {"PSL(2,<p>)", "projective line action of degree p+1, p prime"},
      {"<G>x<H>", "direct product on the disjoint union of points"},
      {"<G>wr2", "wreath-type extension (G x G) by the block swap"},
  };
}

}  // namespace solvrad
