#include "gu3/covering.hpp"
#include "gu3/error.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

using namespace gu3;

namespace {

double frobenius_gap(const Eigen::Matrix3cd& a, const Eigen::Matrix3cd& b) { return (a - b).norm(); }

/// Two-sample Kolmogorov-Smirnov statistic.
double ks_two_sample(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double d = 0.0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / a.size() - static_cast<double>(j) / b.size()));
  }
  return d;
}

/// 1% critical value of the two-sample statistic.
double ks_critical(std::size_t n, std::size_t m) {
  return 1.628 * std::sqrt(static_cast<double>(n + m) / (static_cast<double>(n) * static_cast<double>(m)));
}

std::vector<PU3Point> haar_points(std::uint64_t master, std::size_t n) {
  std::vector<PU3Point> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(haar_sample(derive_seed(master, i)));
  return out;
}

/// Number of classes after merging points closer than tol. Points are sorted by a
/// phase-invariant Lipschitz key so only near neighbours in key order are compared.
std::size_t float_classes(const std::vector<PU3Point>& pts, double tol) {
  double w[9];
  double wnorm = 0.0;
  for (int k = 0; k < 9; ++k) {
    w[k] = std::sqrt(2.0 + k);  // distinct irrational weights
    wnorm += w[k] * w[k];
  }
  wnorm = std::sqrt(wnorm);
  std::vector<std::pair<double, std::size_t>> keyed;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    double f = 0.0;
    for (int k = 0; k < 9; ++k) f += w[k] * std::abs(pts[i].u(k / 3, k % 3));
    keyed.emplace_back(f, i);
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<std::size_t> parent(pts.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t a = 0; a < keyed.size(); ++a) {
    for (std::size_t b = a + 1; b < keyed.size() && keyed[b].first - keyed[a].first <= wnorm * tol; ++b) {
      if (distance(pts[keyed[a].second], pts[keyed[b].second]) <= tol) parent[find(keyed[a].second)] = find(keyed[b].second);
    }
  }
  std::size_t classes = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) classes += find(i) == i;
  return classes;
}

}  // namespace

TEST_CASE("unitary normalization") {
  const PU3Point id = to_unitary(identity3());
  CHECK(frobenius_gap(id.u, Eigen::Matrix3cd::Identity()) < 1e-15);
  for (const auto& s : enumerate_sp(5).lifts) {
    const PU3Point x = to_unitary(s.entries());
    CHECK(frobenius_gap(x.u * x.u.adjoint(), Eigen::Matrix3cd::Identity()) < 1e-12);
  }
  const GateSet s5 = enumerate_sp(5);
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> len(1, 4);
  for (int t = 0; t < 100; ++t) {
    const Mat3 g = testing::raw_product(testing::random_word(s5, len(rng), rng), s5);
    const Mat3 h = testing::raw_product(testing::random_word(s5, len(rng), rng), s5);
    const PU3Point prod{to_unitary(g).u * to_unitary(h).u};
    CHECK(distance(to_unitary(g * h), prod) < 1e-10);
    CHECK(distance(to_unitary(canonicalize(g * h)), prod) < 1e-10);
  }
}

TEST_CASE("projective distance") {
  const PU3Point id;
  const PU3Point x = haar_sample(1);
  CHECK(distance(x, x) < 1e-14);
  for (double th : {0.3, 1.0, 2.5, -1.2}) CHECK(distance(id, PU3Point{std::polar(1.0, th) * Eigen::Matrix3cd::Identity()}) < 1e-14);
  // Close points keep their digits.
  const PU3Point near{x.u * Eigen::Matrix3cd(Eigen::Vector3cd(std::polar(1.0, 1e-9), 1.0, 1.0).asDiagonal())};
  CHECK(distance(x, near) == doctest::Approx(std::sqrt(2.0 / 3.0) * 1e-9).epsilon(1e-4));
  CHECK(distance(id, PU3Point{Eigen::Matrix3cd(Eigen::Vector3cd(1, -1, -1).asDiagonal())}) ==
        doctest::Approx(std::sqrt(4.0)));

  for (int t = 0; t < 100; ++t) {
    const PU3Point g = haar_sample(derive_seed(10, t));
    const PU3Point a = haar_sample(derive_seed(11, t));
    const PU3Point b = haar_sample(derive_seed(12, t));
    const double d = distance(a, b);
    CHECK(std::abs(distance(PU3Point{g.u * a.u}, PU3Point{g.u * b.u}) - d) < 1e-10);
    CHECK(std::abs(distance(PU3Point{a.u * g.u}, PU3Point{b.u * g.u}) - d) < 1e-10);
  }
  int violations = 0;
  for (int t = 0; t < 10'000; ++t) {
    const PU3Point a = haar_sample(derive_seed(20, t));
    const PU3Point b = haar_sample(derive_seed(21, t));
    const PU3Point c = haar_sample(derive_seed(22, t));
    violations += distance(a, c) > distance(a, b) + distance(b, c) + 1e-12;
  }
  CHECK(violations == 0);
}

TEST_CASE("Haar samples are deterministic and unitary") {
  const PU3Point a = haar_sample(77);
  const PU3Point b = haar_sample(77);
  CHECK(a.u == b.u);
  CHECK(frobenius_gap(a.u * a.u.adjoint(), Eigen::Matrix3cd::Identity()) < 1e-12);
  CHECK(derive_seed(1, 0) != derive_seed(1, 1));
  CHECK(derive_seed(1, 0) != derive_seed(2, 0));
}

TEST_CASE("second moment of the trace is one") {
  const std::size_t n = 100'000;
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum += std::norm(haar_sample(derive_seed(5, i)).u.trace());
  const double mean = sum / static_cast<double>(n);
  // |tr u|^2 has variance 1 under Haar measure on U(3).
  CHECK(std::abs(mean - 1.0) < 3.0 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("left translation preserves the trace-modulus distribution") {
  const std::size_t n = 10'000;
  const PU3Point g = to_unitary(enumerate_sp(5).lifts[3].entries());
  std::vector<double> plain;
  std::vector<double> moved;
  for (std::size_t i = 0; i < n; ++i) {
    plain.push_back(std::abs(haar_sample(derive_seed(30, i)).u.trace()));
    moved.push_back(std::abs((g.u * haar_sample(derive_seed(31, i)).u).trace()));
  }
  CHECK(ks_two_sample(plain, moved) < ks_critical(n, n));
}

TEST_CASE("determinant phase is uniform") {
  const std::size_t n = 10'000;
  std::vector<double> phase;
  for (std::size_t i = 0; i < n; ++i) {
    phase.push_back((std::arg(haar_sample(derive_seed(40, i)).u.determinant()) + M_PI) / (2.0 * M_PI));
  }
  std::sort(phase.begin(), phase.end());
  double d = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    d = std::max(d, std::max(static_cast<double>(i + 1) / n - phase[i], phase[i] - static_cast<double>(i) / n));
  }
  CHECK(d < 1.628 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("vantage-point search is exact") {
  const auto pts = haar_points(50, 2000);
  const VPTree tree(pts);
  CHECK(tree.size() == 2000);
  for (int t = 0; t < 200; ++t) {
    const PU3Point q = haar_sample(derive_seed(51, t));
    double best = 1e9;
    for (const auto& x : pts) best = std::min(best, distance(q, x));
    const auto [d, idx] = tree.nearest(q);
    CHECK(d == best);
    CHECK(distance(q, pts[static_cast<std::size_t>(idx)]) == best);
  }
  const VPTree empty(std::vector<PU3Point>{});
  CHECK(empty.nearest(PU3Point{}).second == -1);
}

TEST_CASE("word balls have no floating-point collisions") {
  struct Case {
    std::int64_t p;
    Variant v;
    int l;
  };
  for (const Case c : {Case{5, Variant::Split, 3}, Case{3, Variant::Full, 2}}) {
    const WordBall ball(make_gate_set(c.p, c.v), c.l);
    std::vector<PU3Point> pts;
    double nearest_to_identity = 10.0;
    for (int l = 0; l <= c.l; ++l) {
      for (const auto& e : ball.sphere(l)) {
        pts.push_back(to_unitary(e));
        if (l > 0) nearest_to_identity = std::min(nearest_to_identity, distance(PU3Point{}, pts.back()));
      }
    }
    CHECK(pts.size() == ball.ball_size(c.l));
    CHECK(float_classes(pts, 1e-8) == pts.size());
    // Control: a phase-shifted copy of an element must merge with it.
    pts.push_back(PU3Point{std::polar(1.0, 0.7) * pts[5].u});
    CHECK(float_classes(pts, 1e-8) == pts.size() - 1);
    CHECK(nearest_to_identity > 1e-3);
  }
}

TEST_CASE("covering statistics on fixed samples") {
  const CoveringReport r = covering_stats(enumerate_sp(3), 2, 1000, 42);
  REQUIRE(r.summary.size() == 3);
  CHECK(r.sphere_sizes == std::vector<std::size_t>{1, 84, 6804});
  CHECK(r.summary[2].ball_size == 1 + 84 + 6804);

  // Radius 0 is the distance to the identity.
  double mean0 = 0.0;
  for (std::size_t i = 0; i < 1000; ++i) mean0 += distance(PU3Point{}, haar_sample(derive_seed(42, i)));
  CHECK(r.summary[0].mean == doctest::Approx(mean0 / 1000).epsilon(1e-12));

  for (int l = 1; l <= 2; ++l) {
    CHECK(r.summary[static_cast<std::size_t>(l)].max <= r.summary[static_cast<std::size_t>(l - 1)].max);
    CHECK(r.summary[static_cast<std::size_t>(l)].mean < r.summary[static_cast<std::size_t>(l - 1)].mean);
    for (std::size_t i = 0; i < 1000; ++i) CHECK(r.distances[static_cast<std::size_t>(l)][i] <= r.distances[static_cast<std::size_t>(l - 1)][i]);
  }
  const auto& s = r.summary[1];
  CHECK(s.q50 <= s.q90);
  CHECK(s.q90 <= s.q99);
  CHECK(s.q99 <= s.max);

  REQUIRE(r.radial_cdf.size() == 101);
  CHECK(r.radial_cdf.front().second == 0.0);
  CHECK(r.radial_cdf.back().second == 1.0);
  for (std::size_t k = 1; k < r.radial_cdf.size(); ++k) CHECK(r.radial_cdf[k].second >= r.radial_cdf[k - 1].second);

  CHECK_THROWS_AS(covering_stats(enumerate_sp(3), 3, 10, 1, 1000), ResourceLimit);
  CHECK_THROWS_AS(covering_stats(enumerate_sp(3), 1, 0, 1), ValidationError);
}
