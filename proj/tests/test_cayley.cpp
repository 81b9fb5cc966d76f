#include "gu3/cayley.hpp"
#include "gu3/error.hpp"
#include "gu3/gate_sets.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

using namespace gu3;

namespace {

std::vector<double> sorted_real(const std::vector<Complex>& zs) {
  std::vector<double> out;
  for (const auto& z : zs) out.push_back(z.real());
  std::sort(out.begin(), out.end());
  return out;
}

/// perm, perm^-1 and a fixed-point-free involution: a random 3-regular multigraph.
CayleyGraph random_cubic(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::uint32_t> inv(n);
  for (std::size_t v = 0; v < n; ++v) inv[perm[v]] = static_cast<std::uint32_t>(v);
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::uint32_t> matching(n);
  for (std::size_t k = 0; k + 1 < n; k += 2) {
    matching[order[k]] = order[k + 1];
    matching[order[k + 1]] = order[k];
  }
  return CayleyGraph(n, {perm, inv, matching});
}

struct Instance {
  FiniteField f{3};
  Closure group;
  CayleyGraph split;
  CayleyGraph full;
};

const Instance& psu3() {
  static const Instance inst = [] {
    Instance in;
    std::vector<FinMat> full_gens;
    for (const auto& s : enumerate_sp(5).lifts) full_gens.push_back(reduce_gate(in.f, s.entries()));
    std::vector<FinMat> split_gens;
    for (const auto& s : enumerate_sp_prime(5).lifts) split_gens.push_back(reduce_gate(in.f, s.entries()));
    in.group = closure(in.f, full_gens);
    in.split = build_cayley(in.f, in.group, split_gens);
    in.full = build_cayley(in.f, in.group, full_gens);
    return in;
  }();
  return inst;
}

}  // namespace

TEST_CASE("graph construction validates permutations") {
  CHECK_THROWS_AS(CayleyGraph(3, {{0, 0, 1}}), ValidationError);
  CHECK_THROWS_AS(CayleyGraph(3, {{0, 1}}), ValidationError);
  const CayleyGraph g = circulant_graph(5, {1, 4});
  CHECK(g.size() == 5);
  CHECK(g.degree() == 2);
  CHECK(g.symmetric());
  CHECK(g.connected());
  CHECK_FALSE(circulant_graph(5, {1}).symmetric());
  CHECK_FALSE(circulant_graph(6, {2, 4}).connected());
  CayleyGraph h = circulant_graph(6, {1, 5});
  // Reversal does not commute with translation by 1.
  CHECK_THROWS_AS(h.set_left_symmetry({0, 5, 4, 3, 2, 1}), ValidationError);
}

TEST_CASE("edge and vertex export") {
  const CayleyGraph g = circulant_graph(4, {1, 3});
  std::ostringstream os;
  g.write_edges(os);
  CHECK(os.str() == "0 1 0\n0 3 1\n1 2 0\n1 0 1\n2 3 0\n2 1 1\n3 0 0\n3 2 1\n");
}

TEST_CASE("cycle spectrum") {
  for (std::size_t n : {7, 12, 50}) {
    const SpectrumReport r = spectrum_dense(circulant_graph(n, {1, n - 1}));
    CHECK_FALSE(r.complex_spectrum);
    std::vector<double> expect;
    for (std::size_t k = 0; k < n; ++k) expect.push_back(2.0 * std::cos(2.0 * M_PI * k / n));
    std::sort(expect.begin(), expect.end());
    const auto got = sorted_real(r.eigenvalues);
    REQUIRE(got.size() == n);
    for (std::size_t k = 0; k < n; ++k) CHECK(got[k] == doctest::Approx(expect[k]).epsilon(1e-12));
    CHECK(r.max_residual < 1e-10);
  }
}

TEST_CASE("complete graph spectrum") {
  const std::size_t n = 9;
  std::vector<std::size_t> steps(n - 1);
  std::iota(steps.begin(), steps.end(), 1);
  const auto got = sorted_real(spectrum_dense(circulant_graph(n, steps)).eigenvalues);
  for (std::size_t k = 0; k + 1 < n; ++k) CHECK(got[k] == doctest::Approx(-1.0));
  CHECK(got.back() == doctest::Approx(n - 1.0));
}

TEST_CASE("directed cycle has the roots of unity as spectrum") {
  const std::size_t n = 10;
  const CayleyGraph g = circulant_graph(n, {1});
  CHECK(normality_defect(g) == 0.0);
  const SpectrumReport r = spectrum_dense(g);
  CHECK(r.complex_spectrum);
  for (const auto& z : r.eigenvalues) {
    CHECK(std::abs(z) == doctest::Approx(1.0));
    CHECK(std::abs(std::pow(z, static_cast<int>(n)) - 1.0) < 1e-10);
  }
}

TEST_CASE("a non-normal operator is refused") {
  // x -> x+1 and x -> 2x on Z/5 do not give a normal sum.
  const CayleyGraph g(5, {{1, 2, 3, 4, 0}, {0, 2, 4, 1, 3}});
  CHECK(normality_defect(g) > 0.0);
  CHECK_THROWS_AS(spectrum_dense(g), ValidationError);
}

TEST_CASE("block decomposition agrees with the unblocked solve") {
  const std::size_t n = 24;
  const CayleyGraph blocked = circulant_graph(n, {1, 5, 19, 23});
  CayleyGraph plain(n, {blocked.permutation(0), blocked.permutation(1), blocked.permutation(2), blocked.permutation(3)});
  CHECK(blocked.left_order() == n);
  CHECK(plain.left_order() == 1);
  const auto a = sorted_real(spectrum_dense(blocked).eigenvalues);
  const auto b = sorted_real(spectrum_dense(plain).eigenvalues);
  for (std::size_t k = 0; k < n; ++k) CHECK(a[k] == doctest::Approx(b[k]).epsilon(1e-12));
}

TEST_CASE("Lanczos on the cycle") {
  const SpectrumReport r = extremal_sparse(circulant_graph(1000, {1, 999}), SparseOptions{});
  CHECK(r.converged);
  CHECK(r.eigenvalues.front().real() == doctest::Approx(2.0).epsilon(1e-8));
  CHECK(r.eigenvalues.back().real() == doctest::Approx(-2.0).epsilon(1e-8));
  CHECK(r.eigenvalues[1].real() == doctest::Approx(2.0 * std::cos(2.0 * M_PI / 1000)).epsilon(1e-8));
}

TEST_CASE("Lanczos extremes match the dense spectrum of a random cubic graph") {
  const CayleyGraph g = random_cubic(1000, 99);
  REQUIRE(g.symmetric());
  REQUIRE(g.connected());
  auto dense = sorted_real(spectrum_dense(g).eigenvalues);
  std::reverse(dense.begin(), dense.end());
  SparseOptions opt;
  opt.k = 5;
  const SpectrumReport r = extremal_sparse(g, opt);
  CHECK(r.converged);
  REQUIRE(r.eigenvalues.size() == 11);
  // Descending: the constant-vector 3, then the 5 next largest, then the 5 smallest.
  for (std::size_t k = 0; k < 6; ++k) CHECK(r.eigenvalues[k].real() == doctest::Approx(dense[k]).epsilon(1e-7));
  for (std::size_t k = 0; k < 5; ++k) {
    CHECK(r.eigenvalues[10 - k].real() == doctest::Approx(dense[dense.size() - 1 - k]).epsilon(1e-7));
  }
}

TEST_CASE("Lanczos residuals on a larger random cubic graph") {
  const CayleyGraph g = random_cubic(10'000, 7);
  const SpectrumReport r = extremal_sparse(g, SparseOptions{});
  CHECK(r.converged);
  CHECK(r.max_residual <= 1e-10 * 3);
  CHECK(r.eigenvalues.front().real() == 3.0);
  // Second eigenvalue of a random cubic graph is close to 2 sqrt(2).
  CHECK(r.eigenvalues[1].real() < 3.0);
  CHECK(r.eigenvalues[1].real() > 2.5);
  CHECK_THROWS_AS(extremal_sparse(circulant_graph(10, {1}), SparseOptions{}), ValidationError);
}

TEST_CASE("deltoid membership") {
  const std::int64_t p = 5;
  CHECK(deltoid_test(Complex(3.0 * p, 0), p, 1e-8));
  CHECK(deltoid_test(Complex(0, 0), p, 1e-8));
  CHECK_FALSE(deltoid_test(Complex(3.5 * p, 0), p, 1e-8));
  CHECK(deltoid_distance(Complex(3.5 * p, 0), p) == doctest::Approx(0.5 * p).epsilon(1e-9));
  CHECK(deltoid_distance(Complex(1.0, 2.0), p) == 0.0);

  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  std::uniform_real_distribution<double> radius(3.0 * p + 1e-6, 10.0 * p);
  int inside_failures = 0;
  int outside_failures = 0;
  for (int t = 0; t < 100'000; ++t) {
    const Complex a = std::polar(1.0, angle(rng));
    const Complex b = std::polar(1.0, angle(rng));
    const Complex z = static_cast<double>(p) * (a + b + std::conj(a * b));
    inside_failures += !deltoid_test(z, p, 1e-8);
    outside_failures += deltoid_test(std::polar(radius(rng), angle(rng)), p, 1e-8);
  }
  CHECK(inside_failures == 0);
  CHECK(outside_failures == 0);
}

TEST_CASE("classification of eigenvalues for the interval checks") {
  SpectrumReport r;
  r.complex_spectrum = false;
  r.eigenvalues = {Complex(84, 0), Complex(20, 0), Complex(-16, 0), Complex(-28, 0)};
  ramanujan_check(r, 3, RamanujanMode::Inert, 1e-6);
  CHECK(r.pass);
  CHECK(r.trivial.size() == 1);
  CHECK(r.zero_class.size() == 1);
  CHECK(*r.nontrivial_max == 20.0);
  r.eigenvalues.push_back(Complex(20.1, 0));
  ramanujan_check(r, 3, RamanujanMode::Inert, 1e-6);
  CHECK_FALSE(r.pass);
  CHECK(r.failing.size() == 1);
  CHECK_THROWS_AS(ramanujan_check(r, 5, RamanujanMode::Inert, 1e-6), ValidationError);

  SpectrumReport s;
  s.complex_spectrum = false;
  s.eigenvalues = {Complex(62, 0), Complex(30, 0), Complex(-30, 0)};
  ramanujan_check(s, 5, RamanujanMode::Split, 1e-8);
  CHECK(s.pass);
  s.eigenvalues.push_back(Complex(30.001, 0));
  ramanujan_check(s, 5, RamanujanMode::Split, 1e-8);
  CHECK_FALSE(s.pass);
}

TEST_CASE("Cayley graphs of PSU_3(F_3)") {
  const Instance& in = psu3();
  CHECK(in.group.order() == 6048);
  CHECK(in.split.size() == 6048);
  CHECK(in.split.degree() == 31);
  CHECK_FALSE(in.split.symmetric());
  CHECK(in.full.degree() == 62);
  CHECK(in.full.symmetric());
  CHECK(in.full.connected());
  CHECK(in.split.left_order() > 1);
  CHECK(normality_defect(in.split) < 1e-10);
}

TEST_CASE("the symmetric operator is A1 + A1* on PSU_3(F_3)") {
  const Instance& in = psu3();
  SpectrumReport a1 = spectrum_dense(in.split);
  SpectrumReport a = spectrum_dense(in.full);
  REQUIRE(a1.complex_spectrum);
  REQUIRE_FALSE(a.complex_spectrum);
  CHECK(a1.max_residual < 1e-9);
  CHECK(a.max_residual < 1e-9);

  std::vector<double> doubled;
  for (const auto& z : a1.eigenvalues) doubled.push_back(2.0 * z.real());
  std::sort(doubled.begin(), doubled.end());
  const auto direct = sorted_real(a.eigenvalues);
  REQUIRE(direct.size() == doubled.size());
  double worst = 0.0;
  for (std::size_t k = 0; k < direct.size(); ++k) worst = std::max(worst, std::abs(direct[k] - doubled[k]));
  CHECK(worst < 1e-8);

  ramanujan_check(a1, 5, RamanujanMode::Split, 1e-8);
  CHECK(a1.pass);
  REQUIRE(a1.trivial.size() == 1);
  CHECK(std::abs(a1.trivial.front() - Complex(31, 0)) < 1e-8);

  ramanujan_check(a, 5, RamanujanMode::Split, 1e-8);
  CHECK(a.pass);
  CHECK(a.trivial.size() == 1);
  CHECK(*a.nontrivial_max <= 30.0 + 1e-8);
  CHECK(*a.nontrivial_min >= -30.0 - 1e-8);
}
