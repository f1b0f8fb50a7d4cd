#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "solvrad/linalg.hpp"

namespace solvrad {

// Coordinate vector in the owning algebra's basis.
using LieElement = RatVec;

// Finite-dimensional Lie algebra over Q given by exact-rational structure
// constants. Antisymmetry and the Jacobi identity are validated on
// construction; validation errors name the failing basis triple.
class LieAlgebra {
public:
  struct BracketTerm {
    uint32_t k;
    Rat coeff;
  };
  struct BracketEntry {
    uint32_t i, j;  // i < j
    std::vector<BracketTerm> terms;
  };

  // Entries list [e_i, e_j] for i < j only; the rest follows by
  // antisymmetry. Missing labels default to "e<index>".
  LieAlgebra(uint32_t dim, std::vector<std::string> labels, const std::vector<BracketEntry>& entries);

  uint32_t dim() const noexcept { return dim_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  LieElement zero() const { return LieElement(dim_, Rat(0)); }
  LieElement basis_element(uint32_t i) const;
  const LieElement& basis_bracket(uint32_t i, uint32_t j) const { return table_[i][j]; }

  LieElement bracket(const LieElement& x, const LieElement& y) const;

  // Column j is the coordinate vector of [x, e_j].
  RatMat ad_matrix(const LieElement& x) const;

  // kappa(x, y) = trace(ad x * ad y).
  Rat killing(const LieElement& x, const LieElement& y) const;
  RatMat killing_matrix() const;

  // Span of all basis brackets: the derived subalgebra [L, L].
  Subspace derived_span() const;

  // Least subspace containing gens and closed under bracket.
  Subspace subalgebra_closure(const std::vector<LieElement>& gens) const;

  bool is_subalgebra(const Subspace& s) const;
  bool is_ideal(const Subspace& s) const;

  // Derived series of s reaches zero within dim steps. Throws
  // precondition_failed when s is not closed under bracket.
  bool is_solvable_subalgebra(const Subspace& s) const;

  // {x : kappa(x, [L,L]) = 0}, the maximal solvable ideal in characteristic
  // zero. Postcondition-checked (ideal and solvable); throws
  // internal_inconsistency on failure.
  Subspace killing_radical() const;

  // Structure constants induced on the complement of the ideal's pivot
  // coordinates; the result is re-validated. Throws when `ideal` is not an
  // ideal.
  LieAlgebra quotient(const Subspace& ideal) const;

  // v_1 = x, v_{n+1} = [v_n, [x, y]]. n >= 1.
  LieElement v_word(const LieElement& x, const LieElement& y, uint32_t n) const;

  // "(1, -1/2, 0)"
  std::string element_str(const LieElement& x) const;
  // Comma-separated rationals, e.g. "1,-1/2,0"; length must equal dim.
  LieElement parse_element(std::string_view text) const;

private:
  void check_element(const LieElement& x, const char* where) const;

  uint32_t dim_;
  std::vector<std::string> labels_;
  std::vector<std::vector<LieElement>> table_;  // table_[i][j] = [e_i, e_j]
};

// One-sided radical membership test via the v-word sequence: a sampled x
// with v_n(x,y) != 0 for all n <= nmax and a nonsolvable closure certifies
// y outside the radical. No sample outcome can certify membership; the
// exact oracle is killing_radical.
struct VTestResult {
  bool certified_out;
  LieElement witness;     // the certifying x when certified_out
  uint64_t samples_used;
};

VTestResult radical_membership_vtest(const LieAlgebra& l, const LieElement& y, uint32_t nmax,
                                     uint32_t samples, uint64_t seed);

// Samples y until the closure of {x, y} is nonsolvable for every x in xs
// simultaneously. Every x must lie outside the Killing radical (checked;
// the error names the offending index). Never refutes: a failed search is
// budget exhaustion.
struct LiePairsResult {
  bool found;
  LieElement witness;
  uint64_t samples_used;
};

LiePairsResult pairs_witness_search(const LieAlgebra& l, const std::vector<LieElement>& xs,
                                    uint32_t samples, uint64_t seed);

}  // namespace solvrad
