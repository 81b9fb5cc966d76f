#include "gu3/spectral_formulas.hpp"

#include "gu3/error.hpp"

namespace gu3 {

namespace {

Rational rpow(std::int64_t p, std::int64_t e) {
  Int a = 1;
  for (std::int64_t k = 0; k < (e < 0 ? -e : e); ++k) a *= p;
  return e >= 0 ? Rational(a) : Rational(Int(1), a);
}

void validate(std::int64_t p, int l, Variant variant) {
  if (p < 3 || !is_prime(p)) throw ValidationError("p must be an odd prime, got " + std::to_string(p));
  if (l < 1) throw ValidationError("sphere radius must be >= 1");
  if (variant == Variant::Super) throw ValidationError("no spherical formulas for the super gate set");
  if (variant == Variant::Split && p % 4 != 1) throw ValidationError("split variant requires p = 1 mod 4");
}

Int require_integral(const Rational& r) {
  if (boost::multiprecision::denominator(r) != 1) {
    throw std::logic_error("closed form evaluated to a non-integer");
  }
  return boost::multiprecision::numerator(r);
}

}  // namespace

Int binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  Int r = 1;
  for (std::int64_t j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

Int lambda_triv(std::int64_t p, int l, Variant variant) {
  validate(p, l, variant);
  const std::int64_t L = l;
  Rational v;
  if (p % 4 == 3) {
    v = rpow(p, 4 * L) + rpow(p, 4 * L - 3);
  } else if (variant == Variant::Full) {
    v = Rational(L + 1) * rpow(p, 2 * L) + Rational(2 * L) * rpow(p, 2 * L - 1) +
        Rational(2 * L) * rpow(p, 2 * L - 2) + Rational(L - 1) * rpow(p, 2 * L - 3);
  } else {
    Rational tail = 1;
    for (std::int64_t i = 2; i <= L; ++i) tail += rpow(p, -i);
    v = (rpow(p, 2 * L) + rpow(p, 2 * L - 1) + rpow(p, 2 * L - 2)) * tail;
  }
  return require_integral(v);
}

Rational lambda_ram(std::int64_t p, int l, Variant variant) {
  validate(p, l, variant);
  const std::int64_t L = l;
  auto b = [](std::int64_t n, std::int64_t k) { return Rational(binomial(n, k)); };
  if (p % 4 == 3) {
    return Rational(L + 1) * rpow(p, 2 * L) + Rational(L) * rpow(p, 2 * L - 3) * Rational(p * p - p - 1) +
           rpow(p, 2 * L - 3);
  }
  if (variant == Variant::Full) {
    const Rational half(1, 2);
    return b(L + 3, 3) * Rational(L + 2) * half * rpow(p, L) -
           b(L + 1, 3) * Rational(3 * L + 8) * half * rpow(p, L - 1) +
           b(L + 1, 3) * Rational(3 * L - 8) * half * rpow(p, L - 2) -
           b(L - 1, 3) * Rational(L - 2) * half * rpow(p, L - 3);
  }
  return b(L + 2, 2) * rpow(p, L) - b(L - 1, 2) * rpow(p, L - 3);
}

SphereStats sphere_stats(std::int64_t p, int l, Variant variant) {
  return {p, l, variant, lambda_triv(p, l, variant), lambda_ram(p, l, variant)};
}

}  // namespace gu3
