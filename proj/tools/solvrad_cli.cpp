// Batch CLI over the solvrad C API. Exit codes: 0 success/verified,
// 1 usage or input error, 2 refuted, 3 budget-exhausted.

#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "solvrad.h"

using nlohmann::json;

namespace {

struct Options {
  uint64_t cap = 10000;
  uint64_t seed = 0;
  uint64_t trials = 100000;
  uint32_t nmax = 0;  // 0 = 10 * dim
  bool emit_json = false;
};

[[noreturn]] void fail(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  std::exit(1);
}

void check(sr_status status) {
  if (status != SR_OK) fail(sr_last_error());
}

struct GroupHandle {
  sr_group* ptr = nullptr;
  ~GroupHandle() { sr_group_free(ptr); }
};

struct LieHandle {
  sr_lie* ptr = nullptr;
  ~LieHandle() { sr_lie_free(ptr); }
};

struct JsonString {
  char* ptr = nullptr;
  ~JsonString() { sr_string_free(ptr); }
  json parse() const { return json::parse(ptr); }
};

// <spec> is a catalog name or @file path.
void open_group(GroupHandle& handle, const std::string& spec) {
  if (!spec.empty() && spec.front() == '@')
    check(sr_group_from_file(&handle.ptr, spec.c_str() + 1));
  else
    check(sr_group_from_catalog(&handle.ptr, spec.c_str()));
}

void open_lie(LieHandle& handle, const std::string& spec) {
  if (!spec.empty() && spec.front() == '@')
    check(sr_lie_from_file(&handle.ptr, spec.c_str() + 1));
  else
    check(sr_lie_from_catalog(&handle.ptr, spec.c_str()));
}

void print_doc(const Options& opt, const JsonString& doc,
               const std::function<void(const json&)>& text_renderer) {
  if (opt.emit_json) {
    std::cout << doc.ptr << "\n";
    return;
  }
  text_renderer(doc.parse());
}

int report_exit(sr_verdict verdict) { return static_cast<int>(verdict); }

void render_report(const json& doc) {
  std::cout << "check: " << doc["check"].get<std::string>() << "\n"
            << "group: " << doc["group"].get<std::string>() << " (order "
            << doc["order"].get<uint64_t>() << ")\n"
            << "status: " << doc["status"].get<std::string>() << "\n"
            << "domain: " << doc["domain"].get<uint64_t>()
            << ", witnesses: " << doc["witness_count"].get<uint64_t>()
            << ", counterexamples: " << doc["counterexamples"].size() << "\n";
  if (doc.contains("detail")) std::cout << "detail: " << doc["detail"].dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-group and Lie-algebra solvable radical toolkit"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--cap", opt.cap, "element-enumeration cap")->capture_default_str();
  app.add_option("--seed", opt.seed, "seed for sampled searches")->capture_default_str();
  app.add_option("--trials", opt.trials, "trial budget for sampled searches")->capture_default_str();
  app.add_option("--nmax", opt.nmax, "v-word sequence cap (0 = 10*dim)")->capture_default_str();
  app.add_flag("--json", opt.emit_json, "emit one JSON document instead of text");
  app.fallthrough();

  std::string spec, arg_y, arg_nseed, arg_x1, arg_x2, arg_x3, arg_vx, arg_vy;
  std::vector<std::string> arg_elems;

  auto* group_cmd = app.add_subcommand("group", "group structure queries");
  group_cmd->require_subcommand(1);
  group_cmd->fallthrough();
  auto* group_order = group_cmd->add_subcommand("order", "order of the group");
  auto* group_solvable = group_cmd->add_subcommand("solvable", "derived series reaches 1");
  auto* group_series = group_cmd->add_subcommand("derived-series", "orders along the derived series");
  auto* group_classes = group_cmd->add_subcommand("classes", "conjugacy classes");
  for (auto* cmd : {group_order, group_solvable, group_series, group_classes}) {
    cmd->add_option("spec", spec, "catalog name or @file")->required();
    cmd->fallthrough();
  }

  auto* radical_cmd = app.add_subcommand("radical", "radical elements vs the oracle radical");
  radical_cmd->require_subcommand(1);
  radical_cmd->fallthrough();
  auto* radical_elements = radical_cmd->add_subcommand("elements", "the set of radical elements");
  auto* radical_oracle = radical_cmd->add_subcommand("oracle", "solvable radical via normal closures");
  auto* radical_thompson = radical_cmd->add_subcommand("thompson", "compare the two computations");
  for (auto* cmd : {radical_elements, radical_oracle, radical_thompson}) {
    cmd->add_option("spec", spec, "catalog name or @file")->required();
    cmd->fallthrough();
  }

  auto* verify_cmd = app.add_subcommand("verify", "generation theorem checks");
  verify_cmd->require_subcommand(1);
  verify_cmd->fallthrough();
  auto* verify_onehalf = verify_cmd->add_subcommand("onehalf", "every nontrivial y has a mate covering the socle");
  auto* verify_bgk = verify_cmd->add_subcommand("bgk", "common socle mate for every pair");
  auto* verify_pairs = verify_cmd->add_subcommand("pairs", "common nonsolvable mate outside the radical");
  auto* verify_lemma = verify_cmd->add_subcommand("lemma34", "generating mate inside a minimal normal subgroup");
  auto* verify_triple = verify_cmd->add_subcommand("triple", "three-involution obstruction scan");
  for (auto* cmd : {verify_onehalf, verify_bgk, verify_pairs, verify_lemma, verify_triple}) {
    cmd->add_option("spec", spec, "catalog name or @file")->required();
    cmd->fallthrough();
  }
  verify_lemma->add_option("y", arg_y, "element in cycle notation")->required();
  verify_lemma->add_option("nseed", arg_nseed, "seed element for the normal subgroup");
  verify_triple->add_option("x1", arg_x1, "first element")->required();
  verify_triple->add_option("x2", arg_x2, "second element")->required();
  verify_triple->add_option("x3", arg_x3, "third element")->required();

  auto* lie_cmd = app.add_subcommand("lie", "rational Lie algebra computations");
  lie_cmd->require_subcommand(1);
  lie_cmd->fallthrough();
  auto* lie_radical = lie_cmd->add_subcommand("radical", "Killing-form solvable radical");
  auto* lie_solvable = lie_cmd->add_subcommand("solvable", "solvability of a generated subalgebra");
  auto* lie_vword = lie_cmd->add_subcommand("vword", "iterated bracket word sequence");
  auto* lie_pairs = lie_cmd->add_subcommand("pairs", "common nonsolvable mate for a finite set");
  for (auto* cmd : {lie_radical, lie_solvable, lie_vword, lie_pairs}) {
    cmd->add_option("file", spec, "catalog name or @file")->required();
    cmd->fallthrough();
  }
  lie_solvable->add_option("elements", arg_elems, "comma-separated rational coordinates");
  lie_vword->add_option("x", arg_vx, "element")->required();
  lie_vword->add_option("y", arg_vy, "element")->required();
  lie_pairs->add_option("elements", arg_elems, "comma-separated rational coordinates")->required();

  auto* catalog_cmd = app.add_subcommand("catalog", "built-in constructions");
  catalog_cmd->fallthrough();
  auto* catalog_list = catalog_cmd->add_subcommand("list", "list catalog names");
  catalog_cmd->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  if (group_order->parsed() || group_solvable->parsed() || group_series->parsed() ||
      group_classes->parsed()) {
    GroupHandle g;
    open_group(g, spec);
    if (group_order->parsed()) {
      uint64_t order = 0;
      check(sr_group_order(g.ptr, &order));
      if (opt.emit_json)
        std::cout << json{{"group", spec}, {"order", order}}.dump() << "\n";
      else
        std::cout << order << "\n";
      return 0;
    }
    if (group_solvable->parsed()) {
      int solvable = 0;
      check(sr_group_is_solvable(g.ptr, &solvable));
      if (opt.emit_json)
        std::cout << json{{"group", spec}, {"solvable", solvable != 0}}.dump() << "\n";
      else
        std::cout << (solvable ? "true" : "false") << "\n";
      return 0;
    }
    JsonString doc;
    if (group_series->parsed()) {
      check(sr_group_derived_series_json(g.ptr, &doc.ptr));
      print_doc(opt, doc, [](const json& j) {
        for (size_t i = 0; i < j["orders"].size(); ++i)
          std::cout << (i ? " " : "") << j["orders"][i].get<uint64_t>();
        std::cout << "\n";
      });
      return 0;
    }
    check(sr_group_classes_json(g.ptr, opt.cap, &doc.ptr));
    print_doc(opt, doc, [](const json& j) {
      for (const auto& cls : j["classes"])
        std::cout << cls["size"].get<uint64_t>() << "\t" << cls["rep"].get<std::string>() << "\n";
    });
    return 0;
  }

  if (radical_elements->parsed() || radical_oracle->parsed() || radical_thompson->parsed()) {
    GroupHandle g;
    open_group(g, spec);
    JsonString doc;
    if (radical_elements->parsed()) {
      check(sr_radical_elements_json(g.ptr, opt.cap, &doc.ptr));
      print_doc(opt, doc, [](const json& j) {
        std::cout << "radical elements: " << j["s_size"].get<uint64_t>() << " of "
                  << j["order"].get<uint64_t>() << "\n";
        for (const auto& cls : j["classes"])
          if (cls["radical"].get<bool>())
            std::cout << "  class " << cls["rep"].get<std::string>() << " x"
                      << cls["size"].get<uint64_t>() << "\n";
      });
      return 0;
    }
    if (radical_oracle->parsed()) {
      check(sr_radical_oracle_json(g.ptr, opt.cap, &doc.ptr));
      print_doc(opt, doc, [](const json& j) {
        std::cout << "radical order: " << j["radical_order"].get<uint64_t>() << "\n";
      });
      return 0;
    }
    sr_verdict verdict = SR_VERIFIED;
    check(sr_radical_thompson_json(g.ptr, opt.cap, &doc.ptr, &verdict));
    print_doc(opt, doc, [](const json& j) {
      std::cout << "order: " << j["order"].get<uint64_t>()
                << ", radical elements: " << j["s_size"].get<uint64_t>()
                << ", oracle radical order: " << j["radical_order"].get<uint64_t>()
                << ", verdict: " << j["verdict"].get<std::string>() << "\n";
    });
    return report_exit(verdict);
  }

  if (verify_onehalf->parsed() || verify_bgk->parsed() || verify_pairs->parsed() ||
      verify_lemma->parsed() || verify_triple->parsed()) {
    GroupHandle g;
    open_group(g, spec);
    JsonString doc;
    sr_verdict verdict = SR_VERIFIED;
    if (verify_onehalf->parsed())
      check(sr_verify_onehalf(g.ptr, opt.cap, &doc.ptr, &verdict));
    else if (verify_bgk->parsed())
      check(sr_verify_bgk(g.ptr, opt.cap, &doc.ptr, &verdict));
    else if (verify_pairs->parsed())
      check(sr_verify_pairs(g.ptr, opt.cap, &doc.ptr, &verdict));
    else if (verify_lemma->parsed())
      check(sr_verify_lemma34(g.ptr, arg_y.c_str(), arg_nseed.empty() ? nullptr : arg_nseed.c_str(),
                              opt.cap, opt.trials, opt.seed, &doc.ptr, &verdict));
    else
      check(sr_verify_triple(g.ptr, arg_x1.c_str(), arg_x2.c_str(), arg_x3.c_str(), opt.cap,
                             &doc.ptr, &verdict));
    print_doc(opt, doc, render_report);
    return report_exit(verdict);
  }

  if (lie_radical->parsed() || lie_solvable->parsed() || lie_vword->parsed() ||
      lie_pairs->parsed()) {
    LieHandle l;
    open_lie(l, spec);
    JsonString doc;
    if (lie_radical->parsed()) {
      check(sr_lie_radical_json(l.ptr, &doc.ptr));
      print_doc(opt, doc, [](const json& j) {
        std::cout << "radical dim: " << j["radical"]["dim"].get<uint32_t>() << " of "
                  << j["algebra_dim"].get<uint32_t>() << "\n";
        for (const auto& row : j["radical"]["basis"]) {
          std::cout << " ";
          for (const auto& q : row) std::cout << " " << q.get<std::string>();
          std::cout << "\n";
        }
      });
      return 0;
    }
    if (lie_solvable->parsed()) {
      std::vector<const char*> raw;
      for (const std::string& e : arg_elems) raw.push_back(e.c_str());
      check(sr_lie_solvable_json(l.ptr, raw.data(), raw.size(), &doc.ptr));
      print_doc(opt, doc, [](const json& j) {
        std::cout << (j["solvable"].get<bool>() ? "true" : "false") << "\n";
      });
      return 0;
    }
    if (lie_vword->parsed()) {
      check(sr_lie_vword_json(l.ptr, arg_vx.c_str(), arg_vy.c_str(), opt.nmax, &doc.ptr));
      print_doc(opt, doc, [](const json& j) {
        uint32_t n = 1;
        for (const auto& v : j["v"]) std::cout << "v" << n++ << " = " << v.get<std::string>() << "\n";
        if (j["first_zero_n"].is_null())
          std::cout << "no vanishing up to nmax\n";
        else
          std::cout << "first zero at n = " << j["first_zero_n"].get<uint64_t>() << "\n";
      });
      return 0;
    }
    std::vector<const char*> raw;
    for (const std::string& e : arg_elems) raw.push_back(e.c_str());
    sr_verdict verdict = SR_VERIFIED;
    uint32_t samples = static_cast<uint32_t>(opt.trials > 0xffffffffull ? 0xffffffffull : opt.trials);
    check(sr_lie_pairs_json(l.ptr, raw.data(), raw.size(), samples, opt.seed, &doc.ptr, &verdict));
    print_doc(opt, doc, [](const json& j) {
      std::cout << "status: " << j["status"].get<std::string>() << "\n";
      if (!j["witness"].is_null())
        std::cout << "witness: " << j["witness"].get<std::string>() << " after "
                  << j["samples_used"].get<uint64_t>() << " samples\n";
    });
    return report_exit(verdict);
  }

  if (catalog_list->parsed()) {
    JsonString doc;
    check(sr_catalog_list_json(&doc.ptr));
    print_doc(opt, doc, [](const json& j) {
      std::cout << "groups:\n";
      for (const auto& row : j["groups"])
        std::printf("  %-12s %s\n", row["name"].get<std::string>().c_str(),
                    row["description"].get<std::string>().c_str());
      std::cout << "algebras:\n";
      for (const auto& row : j["algebras"])
        std::printf("  %-12s %s\n", row["name"].get<std::string>().c_str(),
                    row["description"].get<std::string>().c_str());
    });
    return 0;
  }

  fail("unknown subcommand");
}
