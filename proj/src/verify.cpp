#include "solvrad/verify.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

#include "solvrad/radical.hpp"

namespace solvrad {

const char* to_string(VerifyStatus status) {
  switch (status) {
    case VerifyStatus::verified: return "verified";
    case VerifyStatus::refuted: return "refuted";
    case VerifyStatus::budget_exhausted: return "budget-exhausted";
  }
  return "unknown";
}

int exit_code(VerifyStatus status) {
  switch (status) {
    case VerifyStatus::verified: return 0;
    case VerifyStatus::refuted: return 2;
    case VerifyStatus::budget_exhausted: return 3;
  }
  return 2;
}

void TheoremReport::add_witness(std::vector<std::string> inputs, std::vector<std::string> certifiers) {
  ++witness_count;
  if (witnesses.size() < kMaxStoredWitnesses)
    witnesses.push_back({std::move(inputs), std::move(certifiers)});
}

nlohmann::json TheoremReport::to_json() const {
  nlohmann::json ws = nlohmann::json::array();
  for (const Witness& w : witnesses)
    ws.push_back({{"inputs", w.inputs}, {"certifiers", w.certifiers}});
  nlohmann::json j{{"check", check},
                   {"group", group_label},
                   {"degree", degree},
                   {"order", group_order},
                   {"status", to_string(status)},
                   {"domain", domain_size},
                   {"witness_count", witness_count},
                   {"witnesses", std::move(ws)},
                   {"counterexamples", counterexamples}};
  if (!extra.is_null()) j["detail"] = extra;
  return j;
}

namespace {

TheoremReport make_report(const char* check, const PermGroup& g) {
  TheoremReport report;
  report.check = check;
  report.degree = g.degree();
  report.group_order = g.order();
  report.group_label = "degree " + std::to_string(g.degree()) + ", order " + std::to_string(g.order());
  return report;
}

// Solvability of two-generated subgroups memoized on element indices;
// the subgroup <a,b> = <b,a>, so the key is symmetric.
class PairSolvability {
public:
  PairSolvability(const PermGroup& g, const std::vector<Permutation>& elements)
      : g_(g), elements_(elements) {}

  bool solvable(uint32_t a, uint32_t b) {
    uint64_t key = a < b ? (uint64_t(a) << 32 | b) : (uint64_t(b) << 32 | a);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    bool value = g_.two_generated(elements_[a], elements_[b]).is_solvable();
    cache_.emplace(key, value);
    return value;
  }

private:
  const PermGroup& g_;
  const std::vector<Permutation>& elements_;
  std::unordered_map<uint64_t, bool> cache_;
};

}  // namespace

PermGroup almost_simple_socle(const PermGroup& g, uint64_t cap) {
  PermGroup t = socle(g, cap);
  if (t.is_abelian())
    throw Error(ErrorCode::precondition_failed, "group is not almost simple: socle is abelian");
  if (!is_simple(t, cap))
    throw Error(ErrorCode::precondition_failed, "group is not almost simple: socle is not simple");
  ConjugacyClasses cc = conjugacy_classes(g, cap);
  for (const auto& cls : cc.classes) {
    const Permutation& rep = cc.elements[cls.rep_index];
    if (rep.is_identity()) continue;
    bool centralizes = true;
    for (const Permutation& s : t.generators())
      if (compose(rep, s) != compose(s, rep)) {
        centralizes = false;
        break;
      }
    if (centralizes)
      throw Error(ErrorCode::precondition_failed,
                  "group is not almost simple: " + print_cycles(rep) + " centralizes the socle");
  }
  return t;
}

TheoremReport verify_one_and_half(const PermGroup& g, uint64_t cap) {
  PermGroup t = almost_simple_socle(g, cap);
  TheoremReport report = make_report("onehalf", g);
  report.extra["socle_order"] = t.order();

  ConjugacyClasses cc = conjugacy_classes(g, cap);
  for (const auto& cls : cc.classes) {
    const Permutation& y = cc.elements[cls.rep_index];
    if (y.is_identity()) continue;
    ++report.domain_size;
    bool found = false;
    for (const Permutation& x : cc.elements) {
      if (g.two_generated(x, y).contains_group(t)) {
        report.add_witness({print_cycles(y)}, {print_cycles(x)});
        found = true;
        break;
      }
    }
    if (!found) report.counterexamples.push_back(print_cycles(y));
  }
  report.status = report.counterexamples.empty() ? VerifyStatus::verified : VerifyStatus::refuted;
  return report;
}

TheoremReport verify_bgk_common_mate(const PermGroup& g, uint64_t cap) {
  PermGroup s = almost_simple_socle(g, cap);
  TheoremReport report = make_report("bgk", g);
  report.extra["socle_order"] = s.order();

  ConjugacyClasses cc = conjugacy_classes(g, cap);
  std::vector<Permutation> socle_elements = s.elements(cap);

  // socle <= <a, s_candidate>, memoized on (element index, candidate index)
  std::unordered_map<uint64_t, bool> cache;
  auto generates_over_socle = [&](uint32_t a, uint32_t si) {
    uint64_t key = uint64_t(a) << 32 | si;
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    bool value = g.two_generated(cc.elements[a], socle_elements[si]).contains_group(s);
    cache.emplace(key, value);
    return value;
  };

  for (const auto& cls : cc.classes) {
    uint32_t xi = cls.rep_index;
    if (cc.elements[xi].is_identity()) continue;
    for (uint32_t yi = 0; yi < cc.elements.size(); ++yi) {
      if (cc.elements[yi].is_identity()) continue;
      ++report.domain_size;
      bool found = false;
      for (uint32_t si = 0; si < socle_elements.size(); ++si) {
        if (generates_over_socle(xi, si) && generates_over_socle(yi, si)) {
          report.add_witness({print_cycles(cc.elements[xi]), print_cycles(cc.elements[yi])},
                             {print_cycles(socle_elements[si])});
          found = true;
          break;
        }
      }
      if (!found)
        report.counterexamples.push_back(print_cycles(cc.elements[xi]) + " , " +
                                         print_cycles(cc.elements[yi]));
    }
  }
  report.status = report.counterexamples.empty() ? VerifyStatus::verified : VerifyStatus::refuted;
  return report;
}

TheoremReport verify_pairs(const PermGroup& g, uint64_t cap) {
  TheoremReport report = make_report("pairs", g);
  PermGroup radical = oracle_solvable_radical(g, cap);
  report.extra["radical_order"] = radical.order();

  ConjugacyClasses cc = conjugacy_classes(g, cap);
  std::vector<bool> outside(cc.elements.size());
  for (uint32_t i = 0; i < cc.elements.size(); ++i) outside[i] = !radical.contains(cc.elements[i]);

  PairSolvability solvability(g, cc.elements);
  for (const auto& cls : cc.classes) {
    uint32_t xi = cls.rep_index;
    if (!outside[xi]) continue;
    for (uint32_t yi = 0; yi < cc.elements.size(); ++yi) {
      if (!outside[yi]) continue;
      ++report.domain_size;
      bool found = false;
      for (uint32_t si = 0; si < cc.elements.size(); ++si) {
        if (!solvability.solvable(xi, si) && !solvability.solvable(yi, si)) {
          report.add_witness({print_cycles(cc.elements[xi]), print_cycles(cc.elements[yi])},
                             {print_cycles(cc.elements[si])});
          found = true;
          break;
        }
      }
      if (!found)
        report.counterexamples.push_back(print_cycles(cc.elements[xi]) + " , " +
                                         print_cycles(cc.elements[yi]));
    }
  }
  report.status = report.counterexamples.empty() ? VerifyStatus::verified : VerifyStatus::refuted;
  return report;
}

namespace {

// Minimality of N in G, tiered by what the cap allows to enumerate. The
// sampled tier can only spot-check; it reports which tier ran.
const char* check_minimal_normal(const PermGroup& g, const PermGroup& n, uint64_t cap,
                                 uint64_t seed) {
  if (n.order() == 1)
    throw Error(ErrorCode::precondition_failed, "N is trivial");
  if (!n.is_normal_in(g))
    throw Error(ErrorCode::precondition_failed, "N is not normal in G");
  if (g.order() <= cap) {
    for (const PermGroup& m : minimal_normal_subgroups(g, cap))
      if (m.same_group(n)) return "full";
    throw Error(ErrorCode::precondition_failed, "N is not a minimal normal subgroup of G");
  }
  if (n.order() <= cap) {
    // <m^G> = N for every nonidentity m in N, checked on N-class reps
    // (the closure is constant on N-classes).
    ConjugacyClasses cc = conjugacy_classes(n, cap);
    for (const auto& cls : cc.classes) {
      const Permutation& rep = cc.elements[cls.rep_index];
      if (rep.is_identity()) continue;
      if (!g.normal_closure({rep}).same_group(n))
        throw Error(ErrorCode::precondition_failed, "N is not a minimal normal subgroup of G");
    }
    return "classwise";
  }
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  for (int trial = 0; trial < 32; ++trial) {
    Permutation m = n.random_element(rng);
    if (m.is_identity()) continue;
    if (!g.normal_closure({m}).same_group(n))
      throw Error(ErrorCode::precondition_failed, "N is not a minimal normal subgroup of G");
  }
  return "spot-checked";
}

}  // namespace

TheoremReport verify_lemma_minimal_normal(const PermGroup& g, const PermGroup& n,
                                          const Permutation& y, uint64_t cap, uint64_t trials,
                                          uint64_t seed) {
  if (!g.contains(y))
    throw Error(ErrorCode::precondition_failed, "y is not a member of G");
  if (!g.contains_group(n))
    throw Error(ErrorCode::precondition_failed, "N is not a subgroup of G");
  TheoremReport report = make_report("lemma34", g);
  report.extra["minimality_check"] = check_minimal_normal(g, n, cap, seed);

  std::vector<Permutation> gens = n.generators();
  gens.push_back(y);
  if (PermGroup::from_generators(g.degree(), gens).order() != g.order())
    throw Error(ErrorCode::precondition_failed, "<N u {y}> is not all of G");

  bool centralizes = true;
  for (const Permutation& s : n.generators())
    if (compose(y, s) != compose(s, y)) {
      centralizes = false;
      break;
    }
  if (centralizes && !n.is_trivial())
    throw Error(ErrorCode::precondition_failed, "y centralizes N");

  report.extra["subgroup_order"] = n.order();
  report.domain_size = 1;
  if (n.order() <= cap) {
    report.extra["mode"] = "exhaustive";
    uint64_t tried = 0;
    for (const Permutation& x : n.elements(cap)) {
      ++tried;
      if (g.two_generated(x, y).order() == g.order()) {
        report.add_witness({print_cycles(y)}, {print_cycles(x)});
        report.extra["trials_used"] = tried;
        report.status = VerifyStatus::verified;
        return report;
      }
    }
    report.extra["trials_used"] = tried;
    report.counterexamples.push_back(print_cycles(y));
    report.status = VerifyStatus::refuted;
    return report;
  }

  report.extra["mode"] = "sampled";
  std::mt19937_64 rng(seed);
  for (uint64_t trial = 1; trial <= trials; ++trial) {
    Permutation x = n.random_element(rng);
    if (g.two_generated(x, y).order() == g.order()) {
      report.add_witness({print_cycles(y)}, {print_cycles(x)});
      report.extra["trials_used"] = trial;
      report.status = VerifyStatus::verified;
      return report;
    }
  }
  report.extra["trials_used"] = trials;
  report.status = VerifyStatus::budget_exhausted;
  return report;
}

TheoremReport verify_triple_counterexample(const PermGroup& g, const Permutation& x1,
                                           const Permutation& x2, const Permutation& x3,
                                           uint64_t cap) {
  const Permutation* xs[3] = {&x1, &x2, &x3};
  for (const Permutation* x : xs)
    if (!g.contains(*x))
      throw Error(ErrorCode::not_member, "triple element is not a member of the group");

  TheoremReport report = make_report("triple", g);
  report.extra["triple"] = {print_cycles(x1), print_cycles(x2), print_cycles(x3)};

  uint64_t order5_count = 0;
  bool order5_unique_dihedral = true;
  for (const Permutation& y : g.elements(cap)) {
    ++report.domain_size;
    int solvable_with = -1;
    for (int i = 0; i < 3; ++i)
      if (g.two_generated(*xs[i], y).is_solvable()) {
        solvable_with = i;
        break;
      }
    if (solvable_with < 0)
      report.counterexamples.push_back(print_cycles(y));
    else
      report.add_witness({print_cycles(y)}, {print_cycles(*xs[solvable_with])});

    if (element_order(y) == 5) {
      ++order5_count;
      int dihedral10 = 0;
      for (const Permutation* x : xs) {
        PermGroup h = g.two_generated(*x, y);
        if (h.order() == 10 && h.is_solvable()) ++dihedral10;
      }
      if (dihedral10 != 1) order5_unique_dihedral = false;
    }
  }

  uint64_t o12 = element_order(compose(x1, x2));
  uint64_t o13 = element_order(compose(x1, x3));
  uint64_t o23 = element_order(compose(x2, x3));
  report.extra["product_orders"] = {o12, o13, o23};
  report.extra["products_all_order_3"] = (o12 == 3 && o13 == 3 && o23 == 3);
  report.extra["order_5_count"] = order5_count;
  report.extra["order_5_unique_dihedral_10"] = order5_unique_dihedral;

  report.status = report.counterexamples.empty() ? VerifyStatus::verified : VerifyStatus::refuted;
  return report;
}

}  // namespace solvrad
