#include "solvrad/radical.hpp"

namespace solvrad {

RadicalElementCheck is_radical_element(const PermGroup& g, const Permutation& y, uint64_t cap) {
  if (!g.contains(y))
    throw Error(ErrorCode::not_member, "is_radical_element: y is not a member of the group");
  for (const Permutation& x : g.elements(cap))
    if (!g.two_generated(x, y).is_solvable()) return {false, x};
  return {true, std::nullopt};
}

RadicalScan radical_elements(const PermGroup& g, uint64_t cap) {
  RadicalScan scan;
  scan.cc = conjugacy_classes(g, cap);
  scan.class_radical.resize(scan.cc.classes.size());
  for (size_t c = 0; c < scan.cc.classes.size(); ++c) {
    const Permutation& y = scan.cc.rep(c);
    bool radical = true;
    for (const Permutation& x : scan.cc.elements) {
      if (g.two_generated(x, y).is_solvable()) continue;
      radical = false;
      scan.witnesses.emplace_back(y, x);
      break;
    }
    scan.class_radical[c] = radical;
    if (radical) scan.element_count += scan.cc.classes[c].size();
  }
  return scan;
}

PermGroup oracle_solvable_radical(const PermGroup& g, uint64_t cap) {
  ConjugacyClasses cc = conjugacy_classes(g, cap);
  std::vector<Permutation> gens;
  for (const auto& cls : cc.classes) {
    const Permutation& y = cc.elements[cls.rep_index];
    if (y.is_identity()) continue;
    if (g.normal_closure({y}).is_solvable()) gens.push_back(y);
  }
  PermGroup radical = PermGroup::from_generators(g.degree(), gens);
  if (!radical.is_normal_in(g))
    throw Error(ErrorCode::internal_inconsistency,
                "oracle radical postcondition failed: result is not normal");
  if (!radical.is_solvable())
    throw Error(ErrorCode::internal_inconsistency,
                "oracle radical postcondition failed: result is not solvable");
  return radical;
}

ThompsonResult verify_thompson(const PermGroup& g, uint64_t cap) {
  ThompsonResult result{radical_elements(g, cap), PermGroup::trivial(g.degree()),
                        oracle_solvable_radical(g, cap), false};

  std::vector<Permutation> radical_members;
  for (size_t c = 0; c < result.scan.cc.classes.size(); ++c)
    if (result.scan.class_radical[c])
      for (uint32_t idx : result.scan.cc.classes[c].members)
        radical_members.push_back(result.scan.cc.elements[idx]);
  result.s_group = subgroup_generated(g.degree(), radical_members);

  // Exact set equality, not just equal generated subgroups.
  result.equal = result.scan.element_count == result.oracle_radical.order();
  if (result.equal)
    for (const Permutation& m : radical_members)
      if (!result.oracle_radical.contains(m)) {
        result.equal = false;
        break;
      }
  return result;
}

nlohmann::json ThompsonResult::to_json() const {
  nlohmann::json classes = nlohmann::json::array();
  for (size_t c = 0; c < scan.cc.classes.size(); ++c)
    classes.push_back({{"rep", print_cycles(scan.cc.rep(c))},
                       {"size", scan.cc.classes[c].size()},
                       {"radical", static_cast<bool>(scan.class_radical[c])}});
  nlohmann::json witnesses = nlohmann::json::array();
  for (const auto& [y, x] : scan.witnesses)
    witnesses.push_back({{"y", print_cycles(y)}, {"x", print_cycles(x)}});
  return {{"order", scan.cc.elements.size()},
          {"classes", std::move(classes)},
          {"s_size", scan.element_count},
          {"radical_order", oracle_radical.order()},
          {"verdict", equal ? "equal" : "mismatch"},
          {"witnesses", std::move(witnesses)}};
}

}  // namespace solvrad
