#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "solvrad/perm_group.hpp"

namespace solvrad {

struct RadicalElementCheck {
  bool radical;                        // <x,y> solvable for every x in G
  std::optional<Permutation> witness;  // first x (enumeration order) with <x,y> nonsolvable
};

// Exhaustive x-scan with early exit on the first nonsolvable witness.
RadicalElementCheck is_radical_element(const PermGroup& g, const Permutation& y, uint64_t cap);

// Radical elements as a union of conjugacy classes; one is_radical_element
// run per class representative (the property is conjugation-invariant).
struct RadicalScan {
  ConjugacyClasses cc;
  std::vector<bool> class_radical;   // parallel to cc.classes
  uint64_t element_count = 0;        // total radical elements
  // (y, x) per nonradical class representative.
  std::vector<std::pair<Permutation, Permutation>> witnesses;
};

RadicalScan radical_elements(const PermGroup& g, uint64_t cap);

// Subgroup generated by every class representative whose normal closure is
// solvable. Postcondition-checked: the result must be normal in g and
// solvable, otherwise internal_inconsistency is thrown. This is a different
// algorithm from the radical_elements scan, so comparing the two is a
// genuine cross-check.
PermGroup oracle_solvable_radical(const PermGroup& g, uint64_t cap);

struct ThompsonResult {
  RadicalScan scan;
  PermGroup s_group;         // subgroup generated by the radical elements
  PermGroup oracle_radical;  // independent oracle
  bool equal;                // the radical-element set coincides with the oracle's element set

  // {order, classes, s_size, radical_order, verdict, witnesses}
  nlohmann::json to_json() const;
};

ThompsonResult verify_thompson(const PermGroup& g, uint64_t cap);

}  // namespace solvrad
