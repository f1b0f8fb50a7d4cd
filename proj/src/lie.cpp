#include "solvrad/lie.hpp"

#include <sstream>

namespace solvrad {

LieAlgebra::LieAlgebra(uint32_t dim, std::vector<std::string> labels,
                       const std::vector<BracketEntry>& entries)
    : dim_(dim), labels_(std::move(labels)) {
  if (labels_.empty())
    for (uint32_t i = 0; i < dim_; ++i) labels_.push_back("e" + std::to_string(i));
  if (labels_.size() != dim_)
    throw Error(ErrorCode::invalid_argument, "label count does not match dimension");

  table_.assign(dim_, std::vector<LieElement>(dim_, zero()));
  std::vector<std::vector<bool>> filled(dim_, std::vector<bool>(dim_, false));
  for (const BracketEntry& entry : entries) {
    if (entry.i >= entry.j)
      throw Error(ErrorCode::invalid_argument,
                  "bracket entry (" + std::to_string(entry.i) + "," + std::to_string(entry.j) +
                      "): indices must satisfy i < j");
    if (entry.j >= dim_)
      throw Error(ErrorCode::invalid_argument,
                  "bracket entry (" + std::to_string(entry.i) + "," + std::to_string(entry.j) +
                      "): index out of range");
    if (filled[entry.i][entry.j])
      throw Error(ErrorCode::invalid_argument,
                  "duplicate bracket entry (" + std::to_string(entry.i) + "," +
                      std::to_string(entry.j) + ")");
    filled[entry.i][entry.j] = true;
    for (const BracketTerm& term : entry.terms) {
      if (term.k >= dim_)
        throw Error(ErrorCode::invalid_argument,
                    "bracket entry (" + std::to_string(entry.i) + "," + std::to_string(entry.j) +
                        "," + std::to_string(term.k) + "): target index out of range");
      table_[entry.i][entry.j][term.k] += term.coeff;
    }
    for (uint32_t k = 0; k < dim_; ++k) table_[entry.j][entry.i][k] = -table_[entry.i][entry.j][k];
  }

  // Jacobi on basis triples i < j < k; together with the antisymmetry built
  // in above this covers all triples.
  for (uint32_t i = 0; i < dim_; ++i)
    for (uint32_t j = i + 1; j < dim_; ++j)
      for (uint32_t k = j + 1; k < dim_; ++k) {
        LieElement sum = bracket(table_[i][j], basis_element(k));
        LieElement t2 = bracket(table_[j][k], basis_element(i));
        LieElement t3 = bracket(table_[k][i], basis_element(j));
        for (uint32_t c = 0; c < dim_; ++c) sum[c] += t2[c] + t3[c];
        if (!is_zero_vec(sum))
          throw Error(ErrorCode::invalid_argument,
                      "jacobi identity fails on basis triple (" + std::to_string(i) + "," +
                          std::to_string(j) + "," + std::to_string(k) + ")");
      }
}

LieElement LieAlgebra::basis_element(uint32_t i) const {
  if (i >= dim_) throw Error(ErrorCode::invalid_argument, "basis index out of range");
  LieElement e = zero();
  e[i] = 1;
  return e;
}

void LieAlgebra::check_element(const LieElement& x, const char* where) const {
  if (x.size() != dim_)
    throw Error(ErrorCode::invalid_argument,
                std::string(where) + ": element length does not match algebra dimension");
}

LieElement LieAlgebra::bracket(const LieElement& x, const LieElement& y) const {
  check_element(x, "bracket");
  check_element(y, "bracket");
  LieElement out = zero();
  for (uint32_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (uint32_t j = 0; j < dim_; ++j) {
      if (y[j] == 0 || i == j) continue;
      Rat scale = x[i] * y[j];
      const LieElement& basis = table_[i][j];
      for (uint32_t k = 0; k < dim_; ++k)
        if (basis[k] != 0) out[k] += scale * basis[k];
    }
  }
  return out;
}

RatMat LieAlgebra::ad_matrix(const LieElement& x) const {
  check_element(x, "ad_matrix");
  RatMat m(dim_, RatVec(dim_, Rat(0)));
  for (uint32_t j = 0; j < dim_; ++j) {
    LieElement col = bracket(x, basis_element(j));
    for (uint32_t r = 0; r < dim_; ++r) m[r][j] = col[r];
  }
  return m;
}

Rat LieAlgebra::killing(const LieElement& x, const LieElement& y) const {
  RatMat a = ad_matrix(x), b = ad_matrix(y);
  Rat trace = 0;
  for (uint32_t r = 0; r < dim_; ++r)
    for (uint32_t c = 0; c < dim_; ++c) trace += a[r][c] * b[c][r];
  return trace;
}

RatMat LieAlgebra::killing_matrix() const {
  std::vector<RatMat> ads;
  ads.reserve(dim_);
  for (uint32_t i = 0; i < dim_; ++i) ads.push_back(ad_matrix(basis_element(i)));
  RatMat k(dim_, RatVec(dim_, Rat(0)));
  for (uint32_t i = 0; i < dim_; ++i)
    for (uint32_t j = i; j < dim_; ++j) {
      Rat trace = 0;
      for (uint32_t r = 0; r < dim_; ++r)
        for (uint32_t c = 0; c < dim_; ++c) trace += ads[i][r][c] * ads[j][c][r];
      k[i][j] = trace;
      k[j][i] = trace;
    }
  return k;
}

Subspace LieAlgebra::derived_span() const {
  RatMat vectors;
  for (uint32_t i = 0; i < dim_; ++i)
    for (uint32_t j = i + 1; j < dim_; ++j) vectors.push_back(table_[i][j]);
  return Subspace::span(dim_, vectors);
}

Subspace LieAlgebra::subalgebra_closure(const std::vector<LieElement>& gens) const {
  for (const LieElement& g : gens) check_element(g, "subalgebra_closure");
  Subspace current = Subspace::span(dim_, gens);
  while (true) {
    RatMat fresh;
    const RatMat& basis = current.basis();
    for (size_t a = 0; a < basis.size(); ++a)
      for (size_t b = a + 1; b < basis.size(); ++b) {
        LieElement v = bracket(basis[a], basis[b]);
        if (!current.contains(v)) fresh.push_back(std::move(v));
      }
    if (fresh.empty()) return current;
    for (const RatVec& row : basis) fresh.push_back(row);
    current = Subspace::span(dim_, fresh);
  }
}

bool LieAlgebra::is_subalgebra(const Subspace& s) const {
  const RatMat& basis = s.basis();
  for (size_t a = 0; a < basis.size(); ++a)
    for (size_t b = a + 1; b < basis.size(); ++b)
      if (!s.contains(bracket(basis[a], basis[b]))) return false;
  return true;
}

bool LieAlgebra::is_ideal(const Subspace& s) const {
  for (uint32_t i = 0; i < dim_; ++i)
    for (const RatVec& row : s.basis())
      if (!s.contains(bracket(basis_element(i), row))) return false;
  return true;
}

bool LieAlgebra::is_solvable_subalgebra(const Subspace& s) const {
  if (!is_subalgebra(s))
    throw Error(ErrorCode::precondition_failed, "subspace is not closed under bracket");
  Subspace current = s;
  for (uint32_t step = 0; step <= dim_; ++step) {
    if (current.dim() == 0) return true;
    RatMat brackets;
    const RatMat& basis = current.basis();
    for (size_t a = 0; a < basis.size(); ++a)
      for (size_t b = a + 1; b < basis.size(); ++b) brackets.push_back(bracket(basis[a], basis[b]));
    Subspace next = Subspace::span(dim_, brackets);
    if (next.dim() == current.dim()) return false;  // perfect nonzero term
    current = std::move(next);
  }
  return current.dim() == 0;
}

Subspace LieAlgebra::killing_radical() const {
  Subspace derived = derived_span();
  RatMat constraints;
  for (const RatVec& d : derived.basis()) {
    RatVec row(dim_);
    for (uint32_t i = 0; i < dim_; ++i) row[i] = killing(basis_element(i), d);
    constraints.push_back(std::move(row));
  }
  // With no constraints ([L,L] = 0) the nullspace is the whole space.
  Subspace radical = Subspace::span(dim_, nullspace(constraints, dim_));
  if (!is_ideal(radical))
    throw Error(ErrorCode::internal_inconsistency, "killing radical postcondition failed: not an ideal");
  if (!is_solvable_subalgebra(radical))
    throw Error(ErrorCode::internal_inconsistency, "killing radical postcondition failed: not solvable");
  return radical;
}

LieAlgebra LieAlgebra::quotient(const Subspace& ideal) const {
  if (ideal.ambient_dim() != dim_)
    throw Error(ErrorCode::invalid_argument, "quotient: ambient dimension mismatch");
  if (!is_ideal(ideal)) throw Error(ErrorCode::precondition_failed, "quotient: subspace is not an ideal");

  std::vector<uint32_t> pivots = ideal.pivot_columns();
  std::vector<uint32_t> complement;
  for (uint32_t i = 0; i < dim_; ++i)
    if (std::find(pivots.begin(), pivots.end(), i) == pivots.end()) complement.push_back(i);

  uint32_t qdim = static_cast<uint32_t>(complement.size());
  std::vector<std::string> qlabels;
  for (uint32_t c : complement) qlabels.push_back(labels_[c]);

  std::vector<BracketEntry> entries;
  for (uint32_t a = 0; a < qdim; ++a)
    for (uint32_t b = a + 1; b < qdim; ++b) {
      LieElement reduced = ideal.reduce(table_[complement[a]][complement[b]]);
      BracketEntry entry{a, b, {}};
      for (uint32_t k = 0; k < qdim; ++k)
        if (reduced[complement[k]] != 0) entry.terms.push_back({k, reduced[complement[k]]});
      if (!entry.terms.empty()) entries.push_back(std::move(entry));
    }
  return LieAlgebra(qdim, std::move(qlabels), entries);
}

LieElement LieAlgebra::v_word(const LieElement& x, const LieElement& y, uint32_t n) const {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "v_word: n must be >= 1");
  check_element(x, "v_word");
  check_element(y, "v_word");
  LieElement v = x;
  if (n == 1) return v;
  LieElement w = bracket(x, y);
  for (uint32_t step = 2; step <= n; ++step) v = bracket(v, w);
  return v;
}

std::string LieAlgebra::element_str(const LieElement& x) const {
  std::ostringstream out;
  out << '(';
  for (uint32_t i = 0; i < x.size(); ++i) {
    if (i) out << ", ";
    out << rational_str(x[i]);
  }
  out << ')';
  return out.str();
}

LieElement LieAlgebra::parse_element(std::string_view text) const {
  LieElement out;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    out.push_back(parse_rational(text.substr(pos, comma - pos)));
    pos = comma + 1;
    if (comma == text.size()) break;
  }
  if (out.size() != dim_)
    throw Error(ErrorCode::parse_error, "element has " + std::to_string(out.size()) +
                                            " coordinates, algebra dimension is " + std::to_string(dim_));
  return out;
}

VTestResult radical_membership_vtest(const LieAlgebra& l, const LieElement& y, uint32_t nmax,
                                     uint32_t samples, uint64_t seed) {
  if (nmax == 0 || samples == 0)
    throw Error(ErrorCode::invalid_argument, "vtest: nmax and samples must be >= 1");
  SmallRationalSampler sampler(seed);
  for (uint64_t trial = 1; trial <= samples; ++trial) {
    LieElement x = sampler.vector(l.dim());
    bool vanished = is_zero_vec(x);
    if (!vanished) {
      LieElement w = l.bracket(x, y);
      LieElement v = x;
      for (uint32_t n = 2; n <= nmax; ++n) {
        v = l.bracket(v, w);
        if (is_zero_vec(v)) {
          vanished = true;
          break;
        }
      }
    }
    if (!vanished && !l.is_solvable_subalgebra(l.subalgebra_closure({x, y})))
      return {true, std::move(x), trial};
  }
  return {false, l.zero(), samples};
}

LiePairsResult pairs_witness_search(const LieAlgebra& l, const std::vector<LieElement>& xs,
                                    uint32_t samples, uint64_t seed) {
  Subspace radical = l.killing_radical();
  for (size_t i = 0; i < xs.size(); ++i)
    if (radical.contains(xs[i]))
      throw Error(ErrorCode::precondition_failed,
                  "pairs witness search: element #" + std::to_string(i) +
                      " lies in the solvable radical");
  SmallRationalSampler sampler(seed);
  for (uint64_t trial = 1; trial <= samples; ++trial) {
    LieElement y = sampler.vector(l.dim());
    bool good = true;
    for (const LieElement& x : xs)
      if (l.is_solvable_subalgebra(l.subalgebra_closure({x, y}))) {
        good = false;
        break;
      }
    if (good) return {true, std::move(y), trial};
  }
  return {false, l.zero(), samples};
}

}  // namespace solvrad
