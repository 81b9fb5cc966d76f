#include "gu3/error.hpp"
#include "gu3/gaussian.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <set>

using namespace gu3;

TEST_CASE("norm of small Gaussian integers") {
  CHECK(GaussInt(2, 1).norm() == 5);
  CHECK(GaussInt(0, 0).norm() == 0);
  const GaussInt prod = GaussInt(2, 1) * GaussInt(3, 2);
  CHECK(prod == GaussInt(4, 7));
  CHECK(prod.norm() == 65);
}

TEST_CASE("norm is multiplicative, including on large entries") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 1000; ++t) {
    GaussInt a = testing::random_gauss(rng, 1'000'000);
    GaussInt b = testing::random_gauss(rng, 1'000'000);
    // Push well past 64 bits.
    if (t % 2 == 0) a = a * a * a * a;
    CHECK((a * b).norm() == a.norm() * b.norm());
    CHECK(a.conj().conj() == a);
  }
}

TEST_CASE("text encoding round-trips") {
  for (const GaussInt& z : {GaussInt(3, -4), GaussInt(0, 0), GaussInt(-7, 2), GaussInt(Int("123456789012345678901234567890"), Int(-1))}) {
    CHECK(GaussInt::parse(z.to_string()) == z);
  }
  CHECK(GaussInt(2, -1).to_string() == "2-1i");
  CHECK_THROWS_AS(GaussInt::parse("2+x"), ValidationError);
}

TEST_CASE("residues modulo 2+2i") {
  std::set<int> units;
  for (const GaussInt& u : {GaussInt(1), GaussInt(0, 1), GaussInt(-1), GaussInt(0, -1)}) {
    units.insert(residue_2p2i(u).class_id);
  }
  CHECK(units.size() == 4);
  CHECK(residue_2p2i(GaussInt(3, 2)) == residue_2p2i(GaussInt(1)));
  CHECK(residue_2p2i(GaussInt(2, 2)) == residue_2p2i(GaussInt(0)));

  std::set<int> all;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) all.insert(residue_2p2i(GaussInt(a, b)).class_id);
  }
  CHECK(all.size() == 8);

  std::mt19937_64 rng(11);
  for (int t = 0; t < 500; ++t) {
    const GaussInt a = testing::random_gauss(rng, 10'000);
    const GaussInt b = testing::random_gauss(rng, 10'000);
    CHECK(residue_2p2i(a + GaussInt(2, 2) * b) == residue_2p2i(a));
  }
}

TEST_CASE("splitting of rational primes") {
  CHECK(*split_prime(5) == GaussInt(2, 1));
  CHECK(*split_prime(13) == GaussInt(3, 2));
  CHECK(!split_prime(3).has_value());
  CHECK(!split_prime(7).has_value());
  for (std::int64_t p : {5, 13, 17, 29, 37, 41}) {
    const GaussInt pi = *split_prime(p);
    CHECK(pi.norm() == p);
    CHECK(pi.re() > pi.im());
    CHECK(pi.im() > 0);
  }
  CHECK_THROWS_AS(split_prime(15), ValidationError);
  CHECK_THROWS_AS(split_prime(2), ValidationError);
}

TEST_CASE("valuations at Gaussian primes") {
  const GaussInt pi(2, 1);
  CHECK(ord(pi, GaussInt(5)) == 1);
  CHECK(ord(pi, GaussInt(25)) == 2);
  CHECK(ord(pi, GaussInt(2, -1)) == 0);
  CHECK(ord(pi, pi * pi * pi * GaussInt(3, 0)) == 3);
}

TEST_CASE("pi and its conjugate together account for the p-part of the norm") {
  std::mt19937_64 rng(3);
  for (std::int64_t p : {5, 13}) {
    const GaussInt pi = *split_prime(p);
    std::uniform_int_distribution<int> e(0, 4);
    for (int t = 0; t < 250; ++t) {
      GaussInt alpha = testing::random_gauss(rng, 50);
      if (alpha.is_zero()) alpha = GaussInt(1);
      for (int k = e(rng); k > 0; --k) alpha = alpha * pi;
      for (int k = e(rng); k > 0; --k) alpha = alpha * pi.conj();
      CHECK(ord(pi, alpha) + ord(pi.conj(), alpha) == ord_int(p, alpha.norm()));
    }
  }
}

TEST_CASE("exact division and gcd") {
  const GaussInt a = GaussInt(2, 1) * GaussInt(3, 2);
  CHECK(*divide_exact(a, GaussInt(2, 1)) == GaussInt(3, 2));
  CHECK(!divide_exact(GaussInt(3, 0), GaussInt(2, 1)).has_value());
  const GaussInt g = gcd(a * GaussInt(7), GaussInt(2, 1) * GaussInt(11));
  CHECK(g.norm() == 5);
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK(!is_prime(91));
  CHECK(!is_prime(1));
}
