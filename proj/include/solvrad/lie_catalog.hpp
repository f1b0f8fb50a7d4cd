#pragma once

#include <string>
#include <utility>
#include <vector>

#include "solvrad/lie.hpp"

namespace solvrad {

// Built-in algebras with fixed structure-constant tables.

// Zero brackets on n basis vectors a1..an.
LieAlgebra lie_abelian(uint32_t n);

// Basis (e, f) with [e, f] = f; the 2-dimensional nonabelian algebra.
LieAlgebra lie_nonabelian2();

// Heisenberg basis (x, y, z): [x, y] = z, z central.
LieAlgebra lie_heisenberg();

// Basis (e, h, f): [h, e] = 2e, [h, f] = -2f, [e, f] = h.
LieAlgebra lie_sl2();

// sl2 plus a central scalar line z; basis (e, h, f, z).
LieAlgebra lie_gl2();

// The upper-triangular subalgebra of sl2; basis (h, e) with [h, e] = 2e.
LieAlgebra lie_borel_sl2();

// Block direct sum; duplicate labels from the right summand get a numeric
// suffix.
LieAlgebra lie_direct_sum(const LieAlgebra& a, const LieAlgebra& b);

// Name grammar: summands joined by "+", each one of "abelian<n>",
// "nonabelian2", "h3", "sl2", "gl2", "borel2". Case-insensitive.
// Examples: "sl2", "sl2+h3", "abelian3".
LieAlgebra lie_from_name(const std::string& name);

// JSON format: {"dim": n, "labels": [...], "brackets": [[i, j,
// [[k, num, den], ...]], ...]} with 0-based indices and i < j only;
// antisymmetry is completed automatically. Labels are optional.
LieAlgebra lie_from_json_text(std::string_view text);
LieAlgebra lie_from_file(const std::string& path);

// (name, description) rows for `catalog list`.
std::vector<std::pair<std::string, std::string>> lie_catalog_summary();

}  // namespace solvrad
