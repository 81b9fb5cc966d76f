#pragma once

#include "gu3/gate_sets.hpp"
#include "gu3/similitude.hpp"

#include <cstdint>

namespace gu3 {

/// Binomial coefficient with the convention C(n, k) = 0 whenever n < k (including n < 0).
Int binomial(std::int64_t n, std::int64_t k);

/// Size of the ℓ-sphere of the spherical operator: the full gate set for either
/// prime type, or the split half S'_p for p = 1 mod 4. Exact; throws ValidationError
/// for l < 1, Variant::Super, or Variant::Split with p = 3 mod 4.
Int lambda_triv(std::int64_t p, int l, Variant variant);

/// Ramanujan bound on the nontrivial spectrum of the same operator.
Rational lambda_ram(std::int64_t p, int l, Variant variant);

struct SphereStats {
  std::int64_t p = 0;
  int l = 0;
  Variant variant = Variant::Full;
  Int lambda_triv;
  Rational lambda_ram;
};

SphereStats sphere_stats(std::int64_t p, int l, Variant variant);

}  // namespace gu3
