#pragma once

#include <cstdint>
#include <vector>

#include "solvrad/rational.hpp"

namespace solvrad {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

bool is_zero_vec(const RatVec& v);

// Canonical reduced row echelon form; zero rows dropped. Unique for a given
// row space, so subspace equality is row-by-row comparison.
RatMat rref(RatMat m);

// Rows spanning {x : m x^T = 0} in n variables, in canonical form.
RatMat nullspace(const RatMat& m, uint32_t n);

// Linear subspace of Q^n held in canonical reduced echelon form.
class Subspace {
public:
  explicit Subspace(uint32_t ambient_dim) : ambient_(ambient_dim) {}

  static Subspace span(uint32_t ambient_dim, const RatMat& vectors);

  uint32_t ambient_dim() const noexcept { return ambient_; }
  uint32_t dim() const noexcept { return static_cast<uint32_t>(rows_.size()); }
  const RatMat& basis() const noexcept { return rows_; }

  bool contains(const RatVec& v) const;

  // Residue of v after eliminating against the basis rows; zero iff v is a
  // member. The residue has zeros in every pivot column.
  RatVec reduce(RatVec v) const;

  std::vector<uint32_t> pivot_columns() const;

  Subspace sum(const Subspace& other) const;

  bool operator==(const Subspace& other) const = default;

private:
  uint32_t ambient_;
  RatMat rows_;
};

}  // namespace solvrad
