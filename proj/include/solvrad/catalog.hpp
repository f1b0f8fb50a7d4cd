#pragma once

#include <string>
#include <utility>
#include <vector>

#include "solvrad/perm_group.hpp"

namespace solvrad {

// Benchmark group constructors with fixed generator choices, so BSGS bases,
// enumeration order and class representatives are reproducible across runs.

// <(1 2), (1 2 ... n)>, order n!. n >= 1.
PermGroup symmetric(uint32_t n);

// <(1 2 3), (1 2 ... n)> for odd n, <(1 2 3), (2 3 ... n)> for even n;
// order n!/2 for n >= 2.
PermGroup alternating(uint32_t n);

// <(1 2 ... n)>, order n.
PermGroup cyclic(uint32_t n);

// Rotation (1 2 ... n) and the reflection i -> n+1-i on n points; order 2n.
// n >= 3.
PermGroup dihedral(uint32_t n);

// Action on the projective line {0,...,p-1,infinity} (degree p+1),
// generated by z -> z+1 and z -> -1/z. p prime. Order p(p^2-1)/2 for
// p >= 5; psl2(2) is S3 and psl2(3) is A4.
PermGroup psl2(uint32_t p);

// Acts on the disjoint union of the point sets; order |G|*|H|.
PermGroup direct_product(const PermGroup& g, const PermGroup& h);

// (G x G) extended by the block swap, on two disjoint copies of G's
// points; order 2*|G|^2.
PermGroup wreath_swap(const PermGroup& g);

// The block-swap element of wreath_swap: i <-> i + inner_degree.
Permutation block_swap(uint32_t inner_degree);

// Catalog name grammar: terms joined by "x" (direct product), each term a
// base name "S<n>", "A<n>", "C<n>", "D<n>" or "PSL(2,<p>)" optionally
// suffixed with "wr2" (wreath swap). Case-insensitive. Examples: "A5",
// "PSL(2,7)", "A5xC3", "A5wr2", "S4xA5".
PermGroup group_from_name(const std::string& name);

// (pattern, description) rows for `catalog list`.
std::vector<std::pair<std::string, std::string>> group_catalog_summary();

}  // namespace solvrad
