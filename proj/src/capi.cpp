#include "solvrad.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include <json.hpp>

#include "solvrad/catalog.hpp"
#include "solvrad/group_io.hpp"
#include "solvrad/lie.hpp"
#include "solvrad/lie_catalog.hpp"
#include "solvrad/radical.hpp"
#include "solvrad/verify.hpp"

using nlohmann::json;

struct sr_group_t {
  solvrad::PermGroup group;
  std::string label;
};

struct sr_lie_t {
  solvrad::LieAlgebra algebra;
  std::string label;
};

namespace {

thread_local std::string g_last_error;

sr_status map_code(solvrad::ErrorCode code) {
  using solvrad::ErrorCode;
  switch (code) {
    case ErrorCode::invalid_argument: return SR_ERR_ARGUMENT;
    case ErrorCode::parse_error: return SR_ERR_PARSE;
    case ErrorCode::degree_mismatch: return SR_ERR_DEGREE_MISMATCH;
    case ErrorCode::cap_exceeded: return SR_ERR_CAP_EXCEEDED;
    case ErrorCode::not_member: return SR_ERR_NOT_MEMBER;
    case ErrorCode::precondition_failed: return SR_ERR_PRECONDITION;
    case ErrorCode::internal_inconsistency: return SR_ERR_INCONSISTENT;
    case ErrorCode::io_error: return SR_ERR_IO;
  }
  return SR_ERR_ARGUMENT;
}

template <typename F>
sr_status guarded(F&& f) {
  try {
    f();
    return SR_OK;
  } catch (const solvrad::Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SR_ERR_ARGUMENT;
  }
}

sr_status require(bool ok, const char* message) {
  if (ok) return SR_OK;
  g_last_error = message;
  return SR_ERR_ARGUMENT;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(char** out_json, const json& doc) { *out_json = dup_string(doc.dump()); }

sr_verdict verdict_of(solvrad::VerifyStatus status) {
  switch (status) {
    case solvrad::VerifyStatus::verified: return SR_VERIFIED;
    case solvrad::VerifyStatus::refuted: return SR_REFUTED;
    case solvrad::VerifyStatus::budget_exhausted: return SR_BUDGET_EXHAUSTED;
  }
  return SR_REFUTED;
}

json report_with_label(solvrad::TheoremReport report, const std::string& label) {
  report.group_label = label;
  return report.to_json();
}

json subspace_json(const solvrad::LieAlgebra& algebra, const solvrad::Subspace& s) {
  json rows = json::array();
  for (const auto& row : s.basis()) {
    json coords = json::array();
    for (const auto& q : row) coords.push_back(solvrad::rational_str(q));
    rows.push_back(std::move(coords));
  }
  return json{{"dim", s.dim()}, {"basis", std::move(rows)}, {"labels", algebra.labels()}};
}

}  // namespace

extern "C" {

const char* sr_version(void) { return "1.0.0"; }

const char* sr_last_error(void) { return g_last_error.c_str(); }

void sr_string_free(char* s) { std::free(s); }

sr_status sr_group_from_catalog(sr_group** out, const char* name) {
  if (auto bad = require(out && name, "null argument")) return bad;
  return guarded([&] { *out = new sr_group_t{solvrad::group_from_name(name), name}; });
}

sr_status sr_group_from_file(sr_group** out, const char* path) {
  if (auto bad = require(out && path, "null argument")) return bad;
  return guarded([&] { *out = new sr_group_t{solvrad::read_group_file(path), path}; });
}

sr_status sr_group_from_text(sr_group** out, const char* text, const char* label) {
  if (auto bad = require(out && text, "null argument")) return bad;
  return guarded(
      [&] { *out = new sr_group_t{solvrad::read_group_text(text), label ? label : "inline"}; });
}

void sr_group_free(sr_group* g) { delete g; }

sr_status sr_group_degree(const sr_group* g, uint32_t* out) {
  if (auto bad = require(g && out, "null argument")) return bad;
  *out = g->group.degree();
  return SR_OK;
}

sr_status sr_group_order(const sr_group* g, uint64_t* out) {
  if (auto bad = require(g && out, "null argument")) return bad;
  *out = g->group.order();
  return SR_OK;
}

sr_status sr_group_is_solvable(const sr_group* g, int* out) {
  if (auto bad = require(g && out, "null argument")) return bad;
  return guarded([&] { *out = g->group.is_solvable() ? 1 : 0; });
}

sr_status sr_group_derived_series_json(const sr_group* g, char** out_json) {
  if (auto bad = require(g && out_json, "null argument")) return bad;
  return guarded([&] {
    solvrad::DerivedSeries series = solvrad::derived_series(g->group);
    emit(out_json, json{{"group", g->label},
                        {"orders", series.orders()},
                        {"solvable", series.solvable()}});
  });
}

sr_status sr_group_classes_json(const sr_group* g, uint64_t cap, char** out_json) {
  if (auto bad = require(g && out_json, "null argument")) return bad;
  return guarded([&] {
    solvrad::ConjugacyClasses cc = solvrad::conjugacy_classes(g->group, cap);
    json classes = json::array();
    for (size_t c = 0; c < cc.classes.size(); ++c)
      classes.push_back(
          {{"rep", solvrad::print_cycles(cc.rep(c))}, {"size", cc.classes[c].size()}});
    emit(out_json, json{{"group", g->label},
                        {"order", g->group.order()},
                        {"class_count", cc.classes.size()},
                        {"classes", std::move(classes)}});
  });
}

sr_status sr_catalog_list_json(char** out_json) {
  if (auto bad = require(out_json != nullptr, "null argument")) return bad;
  return guarded([&] {
    json groups = json::array();
    for (const auto& [pattern, what] : solvrad::group_catalog_summary())
      groups.push_back({{"name", pattern}, {"description", what}});
    json algebras = json::array();
    for (const auto& [pattern, what] : solvrad::lie_catalog_summary())
      algebras.push_back({{"name", pattern}, {"description", what}});
    emit(out_json, json{{"groups", std::move(groups)}, {"algebras", std::move(algebras)}});
  });
}

sr_status sr_radical_elements_json(const sr_group* g, uint64_t cap, char** out_json) {
  if (auto bad = require(g && out_json, "null argument")) return bad;
  return guarded([&] {
    solvrad::RadicalScan scan = solvrad::radical_elements(g->group, cap);
    json classes = json::array();
    for (size_t c = 0; c < scan.cc.classes.size(); ++c)
      classes.push_back({{"rep", solvrad::print_cycles(scan.cc.rep(c))},
                         {"size", scan.cc.classes[c].size()},
                         {"radical", static_cast<bool>(scan.class_radical[c])}});
    json witnesses = json::array();
    for (const auto& [y, x] : scan.witnesses)
      witnesses.push_back({{"y", solvrad::print_cycles(y)}, {"x", solvrad::print_cycles(x)}});
    emit(out_json, json{{"group", g->label},
                        {"order", g->group.order()},
                        {"s_size", scan.element_count},
                        {"classes", std::move(classes)},
                        {"witnesses", std::move(witnesses)}});
  });
}

sr_status sr_radical_oracle_json(const sr_group* g, uint64_t cap, char** out_json) {
  if (auto bad = require(g && out_json, "null argument")) return bad;
  return guarded([&] {
    solvrad::PermGroup radical = solvrad::oracle_solvable_radical(g->group, cap);
    json gens = json::array();
    for (const auto& p : radical.generators()) gens.push_back(solvrad::print_cycles(p));
    emit(out_json, json{{"group", g->label},
                        {"order", g->group.order()},
                        {"radical_order", radical.order()},
                        {"radical_generators", std::move(gens)}});
  });
}

sr_status sr_radical_thompson_json(const sr_group* g, uint64_t cap, char** out_json,
                                   sr_verdict* verdict) {
  if (auto bad = require(g && out_json && verdict, "null argument")) return bad;
  return guarded([&] {
    solvrad::ThompsonResult result = solvrad::verify_thompson(g->group, cap);
    json doc = result.to_json();
    doc["group"] = g->label;
    emit(out_json, doc);
    *verdict = result.equal ? SR_VERIFIED : SR_REFUTED;
  });
}

sr_status sr_verify_onehalf(const sr_group* g, uint64_t cap, char** out_json,
                            sr_verdict* verdict) {
  if (auto bad = require(g && out_json && verdict, "null argument")) return bad;
  return guarded([&] {
    solvrad::TheoremReport report = solvrad::verify_one_and_half(g->group, cap);
    emit(out_json, report_with_label(report, g->label));
    *verdict = verdict_of(report.status);
  });
}

sr_status sr_verify_bgk(const sr_group* g, uint64_t cap, char** out_json, sr_verdict* verdict) {
  if (auto bad = require(g && out_json && verdict, "null argument")) return bad;
  return guarded([&] {
    solvrad::TheoremReport report = solvrad::verify_bgk_common_mate(g->group, cap);
    emit(out_json, report_with_label(report, g->label));
    *verdict = verdict_of(report.status);
  });
}

sr_status sr_verify_pairs(const sr_group* g, uint64_t cap, char** out_json, sr_verdict* verdict) {
  if (auto bad = require(g && out_json && verdict, "null argument")) return bad;
  return guarded([&] {
    solvrad::TheoremReport report = solvrad::verify_pairs(g->group, cap);
    emit(out_json, report_with_label(report, g->label));
    *verdict = verdict_of(report.status);
  });
}

sr_status sr_verify_lemma34(const sr_group* g, const char* y_cycles, const char* n_seed,
                            uint64_t cap, uint64_t trials, uint64_t seed, char** out_json,
                            sr_verdict* verdict) {
  if (auto bad = require(g && y_cycles && out_json && verdict, "null argument")) return bad;
  return guarded([&] {
    solvrad::Permutation y = solvrad::parse_cycles(y_cycles, g->group.degree());
    solvrad::PermGroup n = solvrad::PermGroup::trivial(g->group.degree());
    if (n_seed) {
      n = g->group.normal_closure({solvrad::parse_cycles(n_seed, g->group.degree())});
    } else {
      // First minimal normal subgroup compatible with the hypotheses.
      bool found = false;
      for (solvrad::PermGroup& candidate : solvrad::minimal_normal_subgroups(g->group, cap)) {
        std::vector<solvrad::Permutation> gens = candidate.generators();
        gens.push_back(y);
        if (solvrad::PermGroup::from_generators(g->group.degree(), gens).order() !=
            g->group.order())
          continue;
        bool centralizes = true;
        for (const auto& s : candidate.generators())
          if (solvrad::compose(y, s) != solvrad::compose(s, y)) {
            centralizes = false;
            break;
          }
        if (centralizes) continue;
        n = std::move(candidate);
        found = true;
        break;
      }
      if (!found)
        throw solvrad::Error(solvrad::ErrorCode::precondition_failed,
                             "no minimal normal subgroup fits the hypotheses for this y");
    }
    solvrad::TheoremReport report =
        solvrad::verify_lemma_minimal_normal(g->group, n, y, cap, trials, seed);
    emit(out_json, report_with_label(report, g->label));
    *verdict = verdict_of(report.status);
  });
}

sr_status sr_verify_triple(const sr_group* g, const char* x1, const char* x2, const char* x3,
                           uint64_t cap, char** out_json, sr_verdict* verdict) {
  if (auto bad = require(g && x1 && x2 && x3 && out_json && verdict, "null argument")) return bad;
  return guarded([&] {
    uint32_t degree = g->group.degree();
    solvrad::TheoremReport report = solvrad::verify_triple_counterexample(
        g->group, solvrad::parse_cycles(x1, degree), solvrad::parse_cycles(x2, degree),
        solvrad::parse_cycles(x3, degree), cap);
    emit(out_json, report_with_label(report, g->label));
    *verdict = verdict_of(report.status);
  });
}

sr_status sr_lie_from_catalog(sr_lie** out, const char* name) {
  if (auto bad = require(out && name, "null argument")) return bad;
  return guarded([&] { *out = new sr_lie_t{solvrad::lie_from_name(name), name}; });
}

sr_status sr_lie_from_file(sr_lie** out, const char* path) {
  if (auto bad = require(out && path, "null argument")) return bad;
  return guarded([&] { *out = new sr_lie_t{solvrad::lie_from_file(path), path}; });
}

sr_status sr_lie_from_text(sr_lie** out, const char* json_text, const char* label) {
  if (auto bad = require(out && json_text, "null argument")) return bad;
  return guarded([&] {
    *out = new sr_lie_t{solvrad::lie_from_json_text(json_text), label ? label : "inline"};
  });
}

void sr_lie_free(sr_lie* l) { delete l; }

sr_status sr_lie_dim(const sr_lie* l, uint32_t* out) {
  if (auto bad = require(l && out, "null argument")) return bad;
  *out = l->algebra.dim();
  return SR_OK;
}

sr_status sr_lie_radical_json(const sr_lie* l, char** out_json) {
  if (auto bad = require(l && out_json, "null argument")) return bad;
  return guarded([&] {
    solvrad::Subspace radical = l->algebra.killing_radical();
    emit(out_json, json{{"algebra", l->label},
                        {"algebra_dim", l->algebra.dim()},
                        {"radical", subspace_json(l->algebra, radical)}});
  });
}

sr_status sr_lie_solvable_json(const sr_lie* l, const char* const* elements, size_t n_elements,
                               char** out_json) {
  if (auto bad = require(l && out_json && (n_elements == 0 || elements), "null argument"))
    return bad;
  return guarded([&] {
    std::vector<solvrad::LieElement> gens;
    for (size_t i = 0; i < n_elements; ++i) gens.push_back(l->algebra.parse_element(elements[i]));
    if (n_elements == 0)
      for (uint32_t i = 0; i < l->algebra.dim(); ++i) gens.push_back(l->algebra.basis_element(i));
    solvrad::Subspace closure = l->algebra.subalgebra_closure(gens);
    emit(out_json, json{{"algebra", l->label},
                        {"subalgebra_dim", closure.dim()},
                        {"solvable", l->algebra.is_solvable_subalgebra(closure)}});
  });
}

sr_status sr_lie_vword_json(const sr_lie* l, const char* x, const char* y, uint32_t nmax,
                            char** out_json) {
  if (auto bad = require(l && x && y && out_json, "null argument")) return bad;
  return guarded([&] {
    if (nmax == 0) nmax = 10 * std::max(1u, l->algebra.dim());
    solvrad::LieElement xe = l->algebra.parse_element(x);
    solvrad::LieElement ye = l->algebra.parse_element(y);
    json values = json::array();
    int64_t first_zero = -1;
    solvrad::LieElement w = l->algebra.bracket(xe, ye);
    solvrad::LieElement v = xe;
    for (uint32_t n = 1; n <= nmax; ++n) {
      if (n > 1) v = l->algebra.bracket(v, w);
      values.push_back(l->algebra.element_str(v));
      if (first_zero < 0 && solvrad::is_zero_vec(v)) first_zero = n;
    }
    json doc{{"algebra", l->label},
             {"x", l->algebra.element_str(xe)},
             {"y", l->algebra.element_str(ye)},
             {"nmax", nmax},
             {"v", std::move(values)}};
    if (first_zero >= 0)
      doc["first_zero_n"] = first_zero;
    else
      doc["first_zero_n"] = nullptr;
    emit(out_json, doc);
  });
}

sr_status sr_lie_pairs_json(const sr_lie* l, const char* const* xs, size_t n_xs, uint32_t samples,
                            uint64_t seed, char** out_json, sr_verdict* verdict) {
  if (auto bad = require(l && out_json && verdict && (n_xs == 0 || xs), "null argument"))
    return bad;
  return guarded([&] {
    std::vector<solvrad::LieElement> elements;
    for (size_t i = 0; i < n_xs; ++i) elements.push_back(l->algebra.parse_element(xs[i]));
    solvrad::LiePairsResult result = solvrad::pairs_witness_search(l->algebra, elements, samples, seed);
    json doc{{"algebra", l->label},
             {"status", result.found ? "verified" : "budget-exhausted"},
             {"samples_used", result.samples_used}};
    if (result.found)
      doc["witness"] = l->algebra.element_str(result.witness);
    else
      doc["witness"] = nullptr;
    emit(out_json, doc);
    *verdict = result.found ? SR_VERIFIED : SR_BUDGET_EXHAUSTED;
  });
}

}  // extern "C"
