#include "solvrad/lie_catalog.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace solvrad {

LieAlgebra lie_abelian(uint32_t n) {
  std::vector<std::string> labels;
  for (uint32_t i = 0; i < n; ++i) labels.push_back("a" + std::to_string(i + 1));
  return LieAlgebra(n, std::move(labels), {});
}

LieAlgebra lie_nonabelian2() {
  return LieAlgebra(2, {"e", "f"}, {{0, 1, {{1, Rat(1)}}}});
}

LieAlgebra lie_heisenberg() {
  return LieAlgebra(3, {"x", "y", "z"}, {{0, 1, {{2, Rat(1)}}}});
}

LieAlgebra lie_sl2() {
  // basis order (e, h, f): [e,h] = -2e, [e,f] = h, [h,f] = -2f
  return LieAlgebra(3, {"e", "h", "f"},
                    {{0, 1, {{0, Rat(-2)}}}, {0, 2, {{1, Rat(1)}}}, {1, 2, {{2, Rat(-2)}}}});
}

LieAlgebra lie_gl2() {
  return LieAlgebra(4, {"e", "h", "f", "z"},
                    {{0, 1, {{0, Rat(-2)}}}, {0, 2, {{1, Rat(1)}}}, {1, 2, {{2, Rat(-2)}}}});
}

LieAlgebra lie_borel_sl2() {
  return LieAlgebra(2, {"h", "e"}, {{0, 1, {{1, Rat(2)}}}});
}

LieAlgebra lie_direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  uint32_t dim = a.dim() + b.dim();
  std::vector<std::string> labels = a.labels();
  for (const std::string& label : b.labels()) {
    std::string candidate = label;
    int suffix = 2;
    while (std::find(labels.begin(), labels.end(), candidate) != labels.end())
      candidate = label + std::to_string(suffix++);
    labels.push_back(candidate);
  }
  std::vector<LieAlgebra::BracketEntry> entries;
  auto copy_block = [&](const LieAlgebra& src, uint32_t offset) {
    for (uint32_t i = 0; i < src.dim(); ++i)
      for (uint32_t j = i + 1; j < src.dim(); ++j) {
        const LieElement& v = src.basis_bracket(i, j);
        LieAlgebra::BracketEntry entry{i + offset, j + offset, {}};
        for (uint32_t k = 0; k < src.dim(); ++k)
          if (v[k] != 0) entry.terms.push_back({k + offset, v[k]});
        if (!entry.terms.empty()) entries.push_back(std::move(entry));
      }
  };
  copy_block(a, 0);
  copy_block(b, a.dim());
  return LieAlgebra(dim, std::move(labels), entries);
}

namespace {

LieAlgebra lie_base_from_name(const std::string& term, const std::string& full) {
  if (term == "sl2") return lie_sl2();
  if (term == "gl2") return lie_gl2();
  if (term == "h3") return lie_heisenberg();
  if (term == "nonabelian2") return lie_nonabelian2();
  if (term == "borel2") return lie_borel_sl2();
  if (term.rfind("abelian", 0) == 0) {
    std::string_view num(term);
    num.remove_prefix(7);
    uint64_t n = 0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), n);
    if (ec == std::errc() && ptr == num.data() + num.size() && n >= 1 && n <= 64)
      return lie_abelian(static_cast<uint32_t>(n));
  }
  throw Error(ErrorCode::parse_error, "catalog: unknown algebra name \"" + full + "\"");
}

}  // namespace

LieAlgebra lie_from_name(const std::string& name) {
  std::string s;
  for (char c : name)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(std::tolower(static_cast<unsigned char>(c)));
  if (s.empty()) throw Error(ErrorCode::parse_error, "catalog: empty algebra name");
  std::vector<LieAlgebra> summands;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t plus = s.find('+', pos);
    if (plus == std::string::npos) plus = s.size();
    summands.push_back(lie_base_from_name(s.substr(pos, plus - pos), name));
    pos = plus + 1;
    if (plus == s.size()) break;
  }
  LieAlgebra result = summands.front();
  for (size_t i = 1; i < summands.size(); ++i) result = lie_direct_sum(result, summands[i]);
  return result;
}

LieAlgebra lie_from_json_text(std::string_view text) {
  nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object())
    throw Error(ErrorCode::parse_error, "algebra file: not a JSON object");
  if (!doc.contains("dim") || !doc["dim"].is_number_unsigned())
    throw Error(ErrorCode::parse_error, "algebra file: missing or bad \"dim\"");
  uint32_t dim = doc["dim"].get<uint32_t>();

  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    if (!doc["labels"].is_array())
      throw Error(ErrorCode::parse_error, "algebra file: \"labels\" must be an array");
    for (const auto& l : doc["labels"]) {
      if (!l.is_string()) throw Error(ErrorCode::parse_error, "algebra file: labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  }

  std::vector<LieAlgebra::BracketEntry> entries;
  if (doc.contains("brackets")) {
    if (!doc["brackets"].is_array())
      throw Error(ErrorCode::parse_error, "algebra file: \"brackets\" must be an array");
    for (const auto& row : doc["brackets"]) {
      if (!row.is_array() || row.size() != 3 || !row[0].is_number_unsigned() ||
          !row[1].is_number_unsigned() || !row[2].is_array())
        throw Error(ErrorCode::parse_error,
                    "algebra file: each bracket must be [i, j, [[k, num, den], ...]]");
      LieAlgebra::BracketEntry entry{row[0].get<uint32_t>(), row[1].get<uint32_t>(), {}};
      for (const auto& term : row[2]) {
        if (!term.is_array() || term.size() != 3 || !term[0].is_number_unsigned() ||
            !term[1].is_number_integer() || !term[2].is_number_integer())
          throw Error(ErrorCode::parse_error,
                      "algebra file: bracket term at (" + std::to_string(entry.i) + "," +
                          std::to_string(entry.j) + ") must be [k, num, den]");
        int64_t num = term[1].get<int64_t>();
        int64_t den = term[2].get<int64_t>();
        if (den == 0)
          throw Error(ErrorCode::parse_error,
                      "algebra file: zero denominator at (" + std::to_string(entry.i) + "," +
                          std::to_string(entry.j) + "," + std::to_string(term[0].get<uint32_t>()) + ")");
        Rat coeff(num, den);
        coeff.canonicalize();
        entry.terms.push_back({term[0].get<uint32_t>(), std::move(coeff)});
      }
      entries.push_back(std::move(entry));
    }
  }
  try {
    return LieAlgebra(dim, std::move(labels), entries);
  } catch (const Error& e) {
    throw Error(ErrorCode::parse_error, std::string("algebra file: ") + e.what());
  }
}

LieAlgebra lie_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io_error, "cannot open algebra file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return lie_from_json_text(buf.str());
}

std::vector<std::pair<std::string, std::string>> lie_catalog_summary() {
  return {
      {"abelian<n>", "abelian algebra of dimension n"},
      {"nonabelian2", "2-dimensional algebra with [e,f] = f"},
      {"h3", "Heisenberg algebra, [x,y] = z"},
      {"sl2", "simple 3-dimensional algebra (e, h, f)"},
      {"gl2", "sl2 plus a central scalar line"},
      {"borel2", "solvable subalgebra (h, e) of sl2"},
      {"<A>+<B>", "direct sum of catalog algebras"},
  };
}

}  // namespace solvrad
