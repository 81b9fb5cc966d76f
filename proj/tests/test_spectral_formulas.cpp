#include "gu3/error.hpp"
#include "gu3/gate_sets.hpp"
#include "gu3/spectral_formulas.hpp"

#include <doctest.h>

using namespace gu3;

TEST_CASE("binomials vanish below the diagonal") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 3) == 1);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(2, 3) == 0);
  CHECK(binomial(-1, 3) == 0);
  CHECK(binomial(40, 20) == Int("137846528820"));
}

TEST_CASE("sphere sizes at small radius") {
  CHECK(lambda_triv(5, 1, Variant::Full) == 62);
  CHECK(lambda_triv(3, 1, Variant::Full) == 84);
  CHECK(lambda_triv(5, 1, Variant::Split) == 31);
  CHECK(lambda_triv(5, 2, Variant::Full) == 3 * 625 + 4 * 125 + 4 * 25 + 5);
  CHECK(lambda_triv(13, 1, Variant::Full) == 366);
}

TEST_CASE("Ramanujan bounds at radius one") {
  for (std::int64_t p : {5, 13, 17}) {
    CHECK(lambda_ram(p, 1, Variant::Full) == 6 * p);
    CHECK(lambda_ram(p, 1, Variant::Split) == 3 * p);
  }
  for (std::int64_t p : {3, 7, 11}) CHECK(lambda_ram(p, 1, Variant::Full) == 2 * p * p + p - 1);
}

TEST_CASE("closed forms count the word spheres") {
  struct Case {
    std::int64_t p;
    Variant v;
  };
  for (const Case c : {Case{5, Variant::Split}, Case{5, Variant::Full}, Case{3, Variant::Full}}) {
    CAPTURE(c.p);
    const WordBall ball(make_gate_set(c.p, c.v), 3);
    for (int l = 1; l <= 3; ++l) CHECK(Int(ball.sphere(l).size()) == lambda_triv(c.p, l, c.v));
  }
}

TEST_CASE("spheres grow at least by p^2 per step") {
  for (std::int64_t p : {3, 5, 13}) {
    for (int l = 1; l <= 10; ++l) {
      CHECK(lambda_triv(p, l + 1, Variant::Full) >= Int(p * p) * lambda_triv(p, l, Variant::Full));
      if (p % 4 == 1) CHECK(lambda_triv(p, l + 1, Variant::Split) >= Int(p * p) * lambda_triv(p, l, Variant::Split));
    }
  }
}

TEST_CASE("the Ramanujan bound is a vanishing fraction of the degree") {
  for (std::int64_t p : {3, 5, 13}) {
    for (Variant v : {Variant::Full, Variant::Split}) {
      if (v == Variant::Split && p % 4 != 1) continue;
      Rational prev = 2;
      for (int l = 1; l <= 12; ++l) {
        const Rational ram = lambda_ram(p, l, v);
        const Rational triv = Rational(lambda_triv(p, l, v));
        CHECK(ram > 0);
        // lambda_ram^2 <= C l^c lambda_triv with C = 20, c = 6 over this range.
        CHECK(ram * ram <= Rational(20) * Rational(Int(l) * l * l * l * l * l) * triv);
        CHECK(ram / triv < prev);
        prev = ram / triv;
      }
    }
  }
}

TEST_CASE("invalid requests") {
  CHECK_THROWS_AS(lambda_triv(5, 0, Variant::Full), ValidationError);
  CHECK_THROWS_AS(lambda_triv(3, 1, Variant::Split), ValidationError);
  CHECK_THROWS_AS(lambda_ram(5, 1, Variant::Super), ValidationError);
  const SphereStats s = sphere_stats(5, 2, Variant::Split);
  CHECK(s.lambda_triv == 806);
  CHECK(s.lambda_ram == lambda_ram(5, 2, Variant::Split));
}
