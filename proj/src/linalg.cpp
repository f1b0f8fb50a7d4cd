#include "solvrad/linalg.hpp"

#include <algorithm>
#include <cctype>

namespace solvrad {

Rat parse_rational(std::string_view text) {
  size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string s(text.substr(b, e - b));
  if (s.empty()) throw Error(ErrorCode::parse_error, "empty rational");
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    bool ok = std::isdigit(static_cast<unsigned char>(c)) || c == '/' ||
              ((c == '-' || c == '+') && (i == 0 || s[i - 1] == '/'));
    if (!ok) throw Error(ErrorCode::parse_error, "bad rational \"" + s + "\"");
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw Error(ErrorCode::parse_error, "bad rational \"" + s + "\"");
  if (q.get_den() == 0) throw Error(ErrorCode::parse_error, "zero denominator in \"" + s + "\"");
  q.canonicalize();
  return q;
}

std::string rational_str(const Rat& value) {
  Rat canonical = value;
  canonical.canonicalize();
  return canonical.get_str();  // "p" or "p/q"
}

bool is_zero_vec(const RatVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

RatMat rref(RatMat m) {
  if (m.empty()) return m;
  const size_t cols = m[0].size();
  size_t pivot_row = 0;
  for (size_t col = 0; col < cols && pivot_row < m.size(); ++col) {
    size_t found = pivot_row;
    while (found < m.size() && m[found][col] == 0) ++found;
    if (found == m.size()) continue;
    std::swap(m[pivot_row], m[found]);
    Rat inv = 1 / m[pivot_row][col];
    for (size_t c = col; c < cols; ++c) m[pivot_row][c] *= inv;
    for (size_t r = 0; r < m.size(); ++r) {
      if (r == pivot_row || m[r][col] == 0) continue;
      Rat factor = m[r][col];
      for (size_t c = col; c < cols; ++c) m[r][c] -= factor * m[pivot_row][c];
    }
    ++pivot_row;
  }
  m.erase(std::remove_if(m.begin(), m.end(), is_zero_vec), m.end());
  return m;
}

RatMat nullspace(const RatMat& m, uint32_t n) {
  RatMat reduced = rref(m);
  std::vector<int64_t> pivot_of_col(n, -1);
  for (size_t r = 0; r < reduced.size(); ++r)
    for (uint32_t c = 0; c < n; ++c)
      if (reduced[r][c] != 0) {
        pivot_of_col[c] = static_cast<int64_t>(r);
        break;
      }
  RatMat basis;
  for (uint32_t free = 0; free < n; ++free) {
    if (pivot_of_col[free] >= 0) continue;
    RatVec v(n, Rat(0));
    v[free] = 1;
    for (uint32_t c = 0; c < n; ++c)
      if (pivot_of_col[c] >= 0) v[c] = -reduced[static_cast<size_t>(pivot_of_col[c])][free];
    basis.push_back(std::move(v));
  }
  return rref(std::move(basis));
}

Subspace Subspace::span(uint32_t ambient_dim, const RatMat& vectors) {
  for (const RatVec& v : vectors)
    if (v.size() != ambient_dim)
      throw Error(ErrorCode::invalid_argument, "span: vector length does not match ambient dimension");
  Subspace s(ambient_dim);
  s.rows_ = rref(vectors);
  return s;
}

RatVec Subspace::reduce(RatVec v) const {
  if (v.size() != ambient_)
    throw Error(ErrorCode::invalid_argument, "reduce: vector length does not match ambient dimension");
  for (const RatVec& row : rows_) {
    uint32_t pivot = 0;
    while (pivot < ambient_ && row[pivot] == 0) ++pivot;
    if (pivot == ambient_ || v[pivot] == 0) continue;
    Rat factor = v[pivot];  // pivot entries are 1
    for (uint32_t c = pivot; c < ambient_; ++c) v[c] -= factor * row[c];
  }
  return v;
}

bool Subspace::contains(const RatVec& v) const { return is_zero_vec(reduce(v)); }

std::vector<uint32_t> Subspace::pivot_columns() const {
  std::vector<uint32_t> pivots;
  for (const RatVec& row : rows_)
    for (uint32_t c = 0; c < ambient_; ++c)
      if (row[c] != 0) {
        pivots.push_back(c);
        break;
      }
  return pivots;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_ != ambient_)
    throw Error(ErrorCode::invalid_argument, "sum: ambient dimensions differ");
  RatMat all = rows_;
  all.insert(all.end(), other.rows_.begin(), other.rows_.end());
  return span(ambient_, all);
}

}  // namespace solvrad
