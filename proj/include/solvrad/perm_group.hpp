#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "solvrad/perm.hpp"

namespace solvrad {

// Finite permutation group backed by a base and strong generating set.
//
// Construction is a deterministic (non-randomized) Schreier-Sims: base
// points are chosen as the least point moved, generators are processed in
// the order given, orbits are explored breadth-first. The same input always
// produces the same base, the same transversals, and the same element
// enumeration order; witnesses reported by the higher layers depend on
// this.
//
// A PermGroup is immutable after construction and safe to share between
// threads read-only.
class PermGroup {
public:
  struct Level {
    uint32_t base_point = 0;
    std::vector<Permutation> gens;          // strong generators fixing all earlier base points
    std::vector<uint32_t> orbit;            // discovery order; orbit[0] == base_point
    std::vector<int32_t> slot;              // point -> index into orbit/transversal, -1 if outside
    std::vector<Permutation> transversal;   // transversal[k] maps base_point to orbit[k]
  };

  // Trivial group on `degree` points.
  static PermGroup trivial(uint32_t degree);

  // Builds the BSGS. Identity generators are dropped, duplicates removed
  // (first occurrence wins). Throws on degree mismatch.
  static PermGroup from_generators(uint32_t degree, const std::vector<Permutation>& gens);

  uint32_t degree() const noexcept { return degree_; }
  uint64_t order() const noexcept { return order_; }
  bool is_trivial() const noexcept { return order_ == 1; }

  // The deduplicated input generators (not the strong generators).
  const std::vector<Permutation>& generators() const noexcept { return generators_; }

  std::vector<uint32_t> base() const;
  const std::vector<Level>& levels() const noexcept { return levels_; }

  // Membership by sifting through the transversals.
  bool contains(const Permutation& p) const;

  // All elements, each exactly once, in the fixed order induced by
  // transversal traversal (level-0 transversal varies slowest; the first
  // element is the identity). Throws cap_exceeded carrying order() when
  // order() > cap.
  std::vector<Permutation> elements(uint64_t cap) const;

  // Uniformly random element: one transversal representative per level.
  Permutation random_element(std::mt19937_64& rng) const;

  // Least subgroup containing `seeds` that is closed under conjugation by
  // the generators of *this. Seeds must be members.
  PermGroup normal_closure(const std::vector<Permutation>& seeds) const;

  // Normal closure of the commutators of generator pairs.
  PermGroup derived_subgroup() const;

  bool is_solvable() const;

  // Subgroup generated by x and y; both must be members.
  PermGroup two_generated(const Permutation& x, const Permutation& y) const;

  // All of sub's generators are members of *this.
  bool contains_group(const PermGroup& sub) const;

  // Equal order and mutual generator membership.
  bool same_group(const PermGroup& other) const;

  // Closed under conjugation by the ambient group's generators.
  bool is_normal_in(const PermGroup& ambient) const;

  bool is_abelian() const;

private:
  PermGroup() = default;

  void rebuild_level(Level& level) const;
  // Sifts p through levels starting at `from`; returns the residue and the
  // level where sifting stopped (levels_.size() if it ran through).
  std::pair<Permutation, size_t> sift(Permutation p, size_t from) const;
  // Checks every Schreier generator of level i against the deeper chain.
  // Returns levels_.size() when all sift to the identity; otherwise installs
  // the residue as a strong generator and returns the level to re-verify.
  size_t verify_level(size_t i);
  void schreier_sims();

  uint32_t degree_ = 1;
  uint64_t order_ = 1;
  std::vector<Permutation> generators_;
  std::vector<Level> levels_;
};

// Derived series G = terms[0] > terms[1] > ... with strictly decreasing
// orders; the final term equals its own derived subgroup.
struct DerivedSeries {
  std::vector<PermGroup> terms;
  bool solvable() const { return terms.back().order() == 1; }
  std::vector<uint64_t> orders() const;
};

DerivedSeries derived_series(const PermGroup& g);

// Conjugation orbits over the full element list. Classes are ordered by
// ascending representative index; the representative is the
// enumeration-least member of its class.
struct ConjugacyClasses {
  struct Class {
    uint32_t rep_index;
    std::vector<uint32_t> members;  // indices into `elements`
    uint64_t size() const { return members.size(); }
  };
  std::vector<Permutation> elements;  // enumeration order of the group
  std::vector<Class> classes;

  const Permutation& rep(size_t c) const { return elements[classes[c].rep_index]; }
};

ConjugacyClasses conjugacy_classes(const PermGroup& g, uint64_t cap);

// Inclusion-minimal among the normal closures of nonidentity class
// representatives; these are exactly the minimal normal subgroups.
std::vector<PermGroup> minimal_normal_subgroups(const PermGroup& g, uint64_t cap);

// Subgroup generated by all minimal normal subgroups.
PermGroup socle(const PermGroup& g, uint64_t cap);

// No nonidentity class representative has the whole group as a proper
// normal closure; order > 1 required.
bool is_simple(const PermGroup& g, uint64_t cap);

// Subgroup generated by an arbitrary member list; members already
// contained in the partial subgroup are skipped, so the generator set
// stays small.
PermGroup subgroup_generated(uint32_t degree, const std::vector<Permutation>& members);

}  // namespace solvrad
