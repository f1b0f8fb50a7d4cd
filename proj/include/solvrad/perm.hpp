#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "solvrad/error.hpp"

namespace solvrad {

// Composition is left-to-right throughout the project:
//
//   compose(p, q)(i) = q(p(i))
//
// i.e. p acts first. Every identity tested anywhere (commutators,
// conjugation, sifting) assumes this convention. Points are 0-based
// internally; cycle notation is 1-based.
class Permutation {
public:
  // Identity on `degree` points. degree >= 1.
  explicit Permutation(uint32_t degree);

  // Takes ownership of an image table; must be a bijection on
  // {0,...,n-1} with n >= 1.
  explicit Permutation(std::vector<uint32_t> images);

  uint32_t degree() const noexcept { return static_cast<uint32_t>(images_.size()); }

  // Image of a point.
  uint32_t operator[](uint32_t point) const { return images_[point]; }

  const std::vector<uint32_t>& images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  bool moves(uint32_t point) const { return images_[point] != point; }

  // Least point moved; returns degree() for the identity.
  uint32_t least_moved() const noexcept;

  bool operator==(const Permutation& other) const = default;

private:
  std::vector<uint32_t> images_;
};

// r = p then q; degrees must match.
Permutation compose(const Permutation& p, const Permutation& q);

Permutation inverse(const Permutation& p);

// g^-1 * p * g under the left-to-right convention.
Permutation conjugate(const Permutation& p, const Permutation& g);

// p^-1 * q^-1 * p * q.
Permutation commutator(const Permutation& p, const Permutation& q);

// Least m >= 1 with p^m = identity; the lcm of the cycle lengths.
uint64_t element_order(const Permutation& p);

// Disjoint cycles of length >= 2, each starting at its least point,
// ordered by least point. 0-based.
std::vector<std::vector<uint32_t>> disjoint_cycles(const Permutation& p);

// Parses 1-based cycle notation, e.g. "(2 3)(4 5)". Cycles need not be
// disjoint; overlapping cycles compose left to right. "()" and "e" denote
// the identity. Commas and extra whitespace between points are accepted.
Permutation parse_cycles(std::string_view text, uint32_t degree);

// Canonical form: disjoint cycles, each starting at its least point,
// cycles ordered by least point, fixed points omitted, identity printed
// as "()". parse_cycles(print_cycles(p), p.degree()) == p.
std::string print_cycles(const Permutation& p);

struct PermHash {
  size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace solvrad
