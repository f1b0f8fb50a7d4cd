#pragma once

#include <gmpxx.h>

#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "solvrad/error.hpp"

namespace solvrad {

// Exact rational scalar. All Lie computations are rank decisions over these;
// no floating point anywhere.
using Rat = mpq_class;

// "3", "-1/2"; throws parse_error on malformed input or zero denominator.
Rat parse_rational(std::string_view text);

// Canonical form, "p/q" with q > 1 omitted when q == 1.
std::string rational_str(const Rat& value);

// Seeded generator of small rationals: numerators uniform on [-9, 9],
// denominators uniform on [1, 9]. The mt19937_64 stream is pinned by the
// standard, so sampled vectors are identical across platforms.
class SmallRationalSampler {
public:
  explicit SmallRationalSampler(uint64_t seed) : rng_(seed) {}

  Rat next() {
    int64_t num = static_cast<int64_t>(rng_() % 19) - 9;
    int64_t den = static_cast<int64_t>(rng_() % 9) + 1;
    Rat q(num, den);
    q.canonicalize();
    return q;
  }

  std::vector<Rat> vector(uint32_t n) {
    std::vector<Rat> v;
    v.reserve(n);
    for (uint32_t i = 0; i < n; ++i) v.push_back(next());
    return v;
  }

private:
  std::mt19937_64 rng_;
};

}  // namespace solvrad
