#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "solvrad/perm_group.hpp"

namespace solvrad {

enum class VerifyStatus {
  verified,          // full coverage of the quantified domain, certificate everywhere
  refuted,           // an exhaustively searched instance has no certificate
  budget_exhausted,  // a sampled search ran out of trials; inconclusive, never a refutation
};

const char* to_string(VerifyStatus status);

// Exit-code convention shared with the CLI: 0 / 2 / 3.
int exit_code(VerifyStatus status);

struct TheoremReport {
  std::string check;
  std::string group_label;
  uint32_t degree = 1;
  uint64_t group_order = 1;
  VerifyStatus status = VerifyStatus::verified;
  uint64_t domain_size = 0;   // quantified instances examined
  uint64_t witness_count = 0; // total certificates found
  // First kMaxStoredWitnesses certificates in scan order: the quantified
  // inputs plus the certifying elements, all in cycle notation.
  struct Witness {
    std::vector<std::string> inputs;
    std::vector<std::string> certifiers;
  };
  std::vector<Witness> witnesses;
  std::vector<std::string> counterexamples;  // inputs with no certificate
  nlohmann::json extra;                      // per-check details

  void add_witness(std::vector<std::string> inputs, std::vector<std::string> certifiers);
  nlohmann::json to_json() const;

  static constexpr size_t kMaxStoredWitnesses = 200;
};

// Socle is a nonabelian simple group with trivial centralizer; throws
// precondition_failed with a reason otherwise.
PermGroup almost_simple_socle(const PermGroup& g, uint64_t cap);

// For every nonidentity class representative y, finds x with
// socle <= <x,y> (exhaustive x-scan in enumeration order, early exit).
TheoremReport verify_one_and_half(const PermGroup& g, uint64_t cap);

// For every pair of nonidentity elements (x up to conjugacy, y exhaustive),
// finds s in the socle with socle <= <x,s> and socle <= <y,s>.
TheoremReport verify_bgk_common_mate(const PermGroup& g, uint64_t cap);

// For every pair x, y outside the solvable radical (x up to conjugacy,
// y exhaustive), finds s with <x,s> and <y,s> both nonsolvable.
TheoremReport verify_pairs(const PermGroup& g, uint64_t cap);

// Searches x in N with <x,y> = g, where N is a minimal normal subgroup,
// <N u {y}> = g, and y does not centralize N (all checked). Exhaustive when
// |N| <= cap, otherwise seeded sampling up to `trials`. A failed sampled
// search is budget_exhausted, never refuted.
TheoremReport verify_lemma_minimal_normal(const PermGroup& g, const PermGroup& n,
                                          const Permutation& y, uint64_t cap, uint64_t trials,
                                          uint64_t seed);

// Scans every y in g and reports verified when for every y at least one
// <x_i,y> is solvable. Also reports the quantitative subclaims: the pairwise
// product orders, and for each y of order 5 whether exactly one i yields
// <x_i,y> solvable of order 10.
TheoremReport verify_triple_counterexample(const PermGroup& g, const Permutation& x1,
                                           const Permutation& x2, const Permutation& x3,
                                           uint64_t cap);

}  // namespace solvrad
