#include "solvrad/perm_group.hpp"

#include <algorithm>
#include <unordered_map>

namespace solvrad {

PermGroup PermGroup::trivial(uint32_t degree) {
  if (degree == 0)
    throw Error(ErrorCode::invalid_argument, "group degree must be >= 1");
  PermGroup g;
  g.degree_ = degree;
  g.order_ = 1;
  return g;
}

PermGroup PermGroup::from_generators(uint32_t degree, const std::vector<Permutation>& gens) {
  PermGroup g = trivial(degree);
  for (const Permutation& p : gens) {
    if (p.degree() != degree)
      throw Error(ErrorCode::degree_mismatch, "generator degree does not match group degree");
    if (p.is_identity()) continue;
    if (std::find(g.generators_.begin(), g.generators_.end(), p) == g.generators_.end())
      g.generators_.push_back(p);
  }
  if (!g.generators_.empty()) g.schreier_sims();
  return g;
}

std::vector<uint32_t> PermGroup::base() const {
  std::vector<uint32_t> b;
  b.reserve(levels_.size());
  for (const Level& level : levels_) b.push_back(level.base_point);
  return b;
}

void PermGroup::rebuild_level(Level& level) const {
  level.orbit.clear();
  level.transversal.clear();
  level.slot.assign(degree_, -1);
  level.orbit.push_back(level.base_point);
  level.transversal.emplace_back(degree_);
  level.slot[level.base_point] = 0;
  for (size_t head = 0; head < level.orbit.size(); ++head) {
    for (const Permutation& g : level.gens) {
      uint32_t image = g[level.orbit[head]];
      if (level.slot[image] < 0) {
        level.slot[image] = static_cast<int32_t>(level.orbit.size());
        level.orbit.push_back(image);
        level.transversal.push_back(compose(level.transversal[head], g));
      }
    }
  }
}

std::pair<Permutation, size_t> PermGroup::sift(Permutation p, size_t from) const {
  for (size_t i = from; i < levels_.size(); ++i) {
    if (p.is_identity()) return {std::move(p), levels_.size()};
    const Level& level = levels_[i];
    uint32_t image = p[level.base_point];
    if (level.slot[image] < 0) return {std::move(p), i};
    p = compose(p, inverse(level.transversal[level.slot[image]]));
  }
  return {std::move(p), levels_.size()};
}

size_t PermGroup::verify_level(size_t i) {
  for (size_t k = 0; k < levels_[i].orbit.size(); ++k) {
    for (size_t gi = 0; gi < levels_[i].gens.size(); ++gi) {
      Permutation schreier(degree_);
      {
        const Level& level = levels_[i];
        const Permutation& g = level.gens[gi];
        uint32_t target = g[level.orbit[k]];
        schreier = compose(compose(level.transversal[k], g),
                           inverse(level.transversal[level.slot[target]]));
      }
      if (schreier.is_identity()) continue;
      auto [residue, stop] = sift(std::move(schreier), i + 1);
      if (residue.is_identity()) continue;
      if (stop == levels_.size()) {
        // Residue fixes the whole base: extend it with the least moved point.
        Level fresh;
        fresh.base_point = residue.least_moved();
        levels_.push_back(std::move(fresh));
      }
      for (size_t t = i + 1; t <= stop; ++t) {
        levels_[t].gens.push_back(residue);
        rebuild_level(levels_[t]);
      }
      return stop;
    }
  }
  return levels_.size();
}

void PermGroup::schreier_sims() {
  // Initial base: every generator must move some base point; base points
  // are the least moved points, in generator order.
  for (const Permutation& g : generators_) {
    bool covered = false;
    for (const Level& level : levels_)
      if (g.moves(level.base_point)) {
        covered = true;
        break;
      }
    if (!covered) {
      Level level;
      level.base_point = g.least_moved();
      levels_.push_back(std::move(level));
    }
  }
  for (size_t i = 0; i < levels_.size(); ++i) {
    for (const Permutation& g : generators_) {
      bool fixes_earlier = true;
      for (size_t j = 0; j < i; ++j)
        if (g.moves(levels_[j].base_point)) {
          fixes_earlier = false;
          break;
        }
      if (fixes_earlier) levels_[i].gens.push_back(g);
    }
    rebuild_level(levels_[i]);
  }

  // Deepest level first; levels deeper than the one being verified are
  // already complete and only ever receive new generators at or above the
  // restart point.
  size_t i = levels_.size() - 1;
  while (true) {
    size_t restart = verify_level(i);
    if (restart != levels_.size()) {
      i = restart;
      continue;
    }
    if (i == 0) break;
    --i;
  }

  order_ = 1;
  for (const Level& level : levels_) order_ *= level.orbit.size();
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_)
    throw Error(ErrorCode::degree_mismatch, "membership test: degree mismatch");
  auto [residue, stop] = sift(p, 0);
  return stop == levels_.size() && residue.is_identity();
}

std::vector<Permutation> PermGroup::elements(uint64_t cap) const {
  if (order_ > cap)
    throw Error(ErrorCode::cap_exceeded,
                "group order " + std::to_string(order_) + " exceeds cap " + std::to_string(cap),
                order_);
  std::vector<Permutation> out;
  out.reserve(order_);
  // acc holds the composition of the transversal picks for levels < i; the
  // element is (deeper picks) * acc, so the level-0 pick varies slowest and
  // the first element emitted is the identity.
  auto rec = [&](auto&& self, size_t i, const Permutation& acc) -> void {
    if (i == levels_.size()) {
      out.push_back(acc);
      return;
    }
    for (const Permutation& t : levels_[i].transversal) self(self, i + 1, compose(t, acc));
  };
  rec(rec, 0, Permutation(degree_));
  return out;
}

Permutation PermGroup::random_element(std::mt19937_64& rng) const {
  Permutation acc(degree_);
  for (const Level& level : levels_) {
    size_t pick = static_cast<size_t>(rng() % level.transversal.size());
    acc = compose(level.transversal[pick], acc);
  }
  return acc;
}

PermGroup PermGroup::normal_closure(const std::vector<Permutation>& seeds) const {
  std::vector<Permutation> closure_gens;
  for (const Permutation& s : seeds) {
    if (!contains(s))
      throw Error(ErrorCode::not_member, "normal closure seed is not a member of the ambient group");
    if (!s.is_identity()) closure_gens.push_back(s);
  }
  PermGroup current = from_generators(degree_, closure_gens);
  while (true) {
    std::vector<Permutation> fresh;
    for (const Permutation& s : current.generators())
      for (const Permutation& a : generators_) {
        Permutation c = conjugate(s, a);
        if (!current.contains(c) && std::find(fresh.begin(), fresh.end(), c) == fresh.end())
          fresh.push_back(c);
      }
    if (fresh.empty()) return current;
    std::vector<Permutation> next = current.generators();
    next.insert(next.end(), fresh.begin(), fresh.end());
    current = from_generators(degree_, next);
  }
}

PermGroup PermGroup::derived_subgroup() const {
  std::vector<Permutation> seeds;
  for (size_t i = 0; i < generators_.size(); ++i)
    for (size_t j = i + 1; j < generators_.size(); ++j) {
      Permutation c = commutator(generators_[i], generators_[j]);
      if (!c.is_identity()) seeds.push_back(std::move(c));
    }
  return normal_closure(seeds);
}

DerivedSeries derived_series(const PermGroup& g) {
  DerivedSeries series;
  series.terms.push_back(g);
  while (true) {
    PermGroup next = series.terms.back().derived_subgroup();
    if (next.order() == series.terms.back().order()) break;
    series.terms.push_back(std::move(next));
  }
  return series;
}

std::vector<uint64_t> DerivedSeries::orders() const {
  std::vector<uint64_t> out;
  out.reserve(terms.size());
  for (const PermGroup& t : terms) out.push_back(t.order());
  return out;
}

bool PermGroup::is_solvable() const { return derived_series(*this).solvable(); }

PermGroup PermGroup::two_generated(const Permutation& x, const Permutation& y) const {
  if (!contains(x) || !contains(y))
    throw Error(ErrorCode::not_member, "two_generated: element is not a member of the ambient group");
  return from_generators(degree_, {x, y});
}

bool PermGroup::contains_group(const PermGroup& sub) const {
  for (const Permutation& g : sub.generators())
    if (!contains(g)) return false;
  return true;
}

bool PermGroup::same_group(const PermGroup& other) const {
  return order_ == other.order() && contains_group(other) && other.contains_group(*this);
}

bool PermGroup::is_normal_in(const PermGroup& ambient) const {
  for (const Permutation& s : generators_)
    for (const Permutation& a : ambient.generators())
      if (!contains(conjugate(s, a))) return false;
  return true;
}

bool PermGroup::is_abelian() const {
  for (size_t i = 0; i < generators_.size(); ++i)
    for (size_t j = i + 1; j < generators_.size(); ++j)
      if (compose(generators_[i], generators_[j]) != compose(generators_[j], generators_[i]))
        return false;
  return true;
}

ConjugacyClasses conjugacy_classes(const PermGroup& g, uint64_t cap) {
  ConjugacyClasses cc;
  cc.elements = g.elements(cap);
  std::unordered_map<Permutation, uint32_t, PermHash> index;
  index.reserve(cc.elements.size() * 2);
  for (uint32_t i = 0; i < cc.elements.size(); ++i) index.emplace(cc.elements[i], i);

  std::vector<bool> seen(cc.elements.size(), false);
  for (uint32_t i = 0; i < cc.elements.size(); ++i) {
    if (seen[i]) continue;
    ConjugacyClasses::Class cls;
    cls.rep_index = i;
    std::vector<uint32_t> stack{i};
    seen[i] = true;
    while (!stack.empty()) {
      uint32_t j = stack.back();
      stack.pop_back();
      cls.members.push_back(j);
      for (const Permutation& a : g.generators()) {
        uint32_t k = index.at(conjugate(cc.elements[j], a));
        if (!seen[k]) {
          seen[k] = true;
          stack.push_back(k);
        }
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    cc.classes.push_back(std::move(cls));
  }
  return cc;
}

std::vector<PermGroup> minimal_normal_subgroups(const PermGroup& g, uint64_t cap) {
  ConjugacyClasses cc = conjugacy_classes(g, cap);
  std::vector<PermGroup> candidates;
  for (const auto& cls : cc.classes) {
    const Permutation& rep = cc.elements[cls.rep_index];
    if (rep.is_identity()) continue;
    PermGroup closure = g.normal_closure({rep});
    bool duplicate = false;
    for (const PermGroup& seenGroup : candidates)
      if (seenGroup.same_group(closure)) {
        duplicate = true;
        break;
      }
    if (!duplicate) candidates.push_back(std::move(closure));
  }
  std::vector<PermGroup> minimal;
  for (const PermGroup& n : candidates) {
    bool has_smaller = false;
    for (const PermGroup& m : candidates)
      if (m.order() < n.order() && n.contains_group(m)) {
        has_smaller = true;
        break;
      }
    if (!has_smaller) minimal.push_back(n);
  }
  return minimal;
}

PermGroup socle(const PermGroup& g, uint64_t cap) {
  std::vector<Permutation> gens;
  for (const PermGroup& n : minimal_normal_subgroups(g, cap))
    gens.insert(gens.end(), n.generators().begin(), n.generators().end());
  return PermGroup::from_generators(g.degree(), gens);
}

bool is_simple(const PermGroup& g, uint64_t cap) {
  if (g.order() == 1) return false;
  ConjugacyClasses cc = conjugacy_classes(g, cap);
  for (const auto& cls : cc.classes) {
    const Permutation& rep = cc.elements[cls.rep_index];
    if (rep.is_identity()) continue;
    if (g.normal_closure({rep}).order() != g.order()) return false;
  }
  return true;
}

PermGroup subgroup_generated(uint32_t degree, const std::vector<Permutation>& members) {
  PermGroup current = PermGroup::trivial(degree);
  std::vector<Permutation> gens;
  for (const Permutation& m : members) {
    if (m.degree() != degree)
      throw Error(ErrorCode::degree_mismatch, "subgroup member degree mismatch");
    if (!current.contains(m)) {
      gens.push_back(m);
      current = PermGroup::from_generators(degree, gens);
    }
  }
  return current;
}

}  // namespace solvrad
