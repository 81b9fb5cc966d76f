#include "gu3/covering.hpp"

#include "gu3/error.hpp"
#include "gu3/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <random>

namespace gu3 {

PU3Point to_unitary(const Mat3& g) {
  const double lambda = static_cast<double>(similitude_factor(g));
  const double scale = 1.0 / std::sqrt(lambda);
  PU3Point x;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      const auto& e = g[3 * r + c];
      x.u(r, c) = {static_cast<double>(e.re()) * scale, static_cast<double>(e.im()) * scale};
    }
  }
  return x;
}

PU3Point to_unitary(const ProjElement& g) { return to_unitary(g.matrix()); }

double distance(const PU3Point& x, const PU3Point& y) {
  // Equal to sqrt(6 - 2|t|) with t = tr(x* y), evaluated as |x - c y| at the optimal
  // phase c = conj(t)/|t| so that close points keep their digits.
  const std::complex<double> t = (x.u.adjoint() * y.u).trace();
  const double at = std::abs(t);
  const std::complex<double> c = at > 0.0 ? std::conj(t) / at : std::complex<double>(1.0, 0.0);
  return (x.u - c * y.u).norm();
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

PU3Point haar_sample(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Eigen::Matrix3cd z;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) z(r, c) = {normal(rng), normal(rng)};
  }
  // Modified Gram-Schmidt on columns: Q R with R_ii > 0, the Haar-invariant convention.
  for (int c = 0; c < 3; ++c) {
    for (int k = 0; k < c; ++k) z.col(c) -= z.col(k).dot(z.col(c)) * z.col(k);
    z.col(c) /= z.col(c).norm();
  }
  return {z};
}

VPTree::VPTree(std::vector<PU3Point> points) : points_(std::move(points)) {
  std::vector<std::size_t> idx(points_.size());
  std::iota(idx.begin(), idx.end(), 0);
  nodes_.reserve(points_.size());
  root_ = build(idx, 0, idx.size());
}

std::ptrdiff_t VPTree::build(std::vector<std::size_t>& idx, std::size_t lo, std::size_t hi) {
  if (lo >= hi) return -1;
  // Vantage point: the element at lo (input order is deterministic).
  const std::size_t vp = idx[lo];
  const auto id = static_cast<std::ptrdiff_t>(nodes_.size());
  nodes_.push_back({vp, 0.0, -1, -1});
  if (hi - lo == 1) return id;
  std::vector<std::pair<double, std::size_t>> d;
  d.reserve(hi - lo - 1);
  for (std::size_t k = lo + 1; k < hi; ++k) d.emplace_back(distance(points_[vp], points_[idx[k]]), idx[k]);
  const std::size_t mid = d.size() / 2;
  std::nth_element(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(mid), d.end());
  const double radius = d[mid].first;
  // inside: distance <= radius
  std::size_t w = lo + 1;
  for (const auto& [dist, i] : d) {
    if (dist <= radius) idx[w++] = i;
  }
  const std::size_t split = w;
  for (const auto& [dist, i] : d) {
    if (dist > radius) idx[w++] = i;
  }
  nodes_[static_cast<std::size_t>(id)].radius = radius;
  const auto inside = build(idx, lo + 1, split);
  const auto outside = build(idx, split, hi);
  nodes_[static_cast<std::size_t>(id)].inside = inside;
  nodes_[static_cast<std::size_t>(id)].outside = outside;
  return id;
}

std::pair<double, std::ptrdiff_t> VPTree::nearest(const PU3Point& q) const {
  double best = std::numeric_limits<double>::infinity();
  std::ptrdiff_t best_idx = -1;
  std::vector<std::ptrdiff_t> stack;
  if (root_ >= 0) stack.push_back(root_);
  while (!stack.empty()) {
    const auto& node = nodes_[static_cast<std::size_t>(stack.back())];
    stack.pop_back();
    const double d = distance(q, points_[node.point]);
    if (d < best) {
      best = d;
      best_idx = static_cast<std::ptrdiff_t>(node.point);
    }
    // Visit the nearer side last so it is popped first.
    const bool in_first = d <= node.radius;
    const std::ptrdiff_t near = in_first ? node.inside : node.outside;
    const std::ptrdiff_t far = in_first ? node.outside : node.inside;
    const bool far_possible = in_first ? d + best > node.radius : d - best <= node.radius;
    if (far >= 0 && far_possible) stack.push_back(far);
    if (near >= 0) stack.push_back(near);
  }
  return {best, best_idx};
}

double empirical_cdf(const std::vector<double>& sorted, double r) {
  if (sorted.empty()) return 0.0;
  const auto it = std::upper_bound(sorted.begin(), sorted.end(), r);
  return static_cast<double>(it - sorted.begin()) / static_cast<double>(sorted.size());
}

namespace {

double quantile(std::vector<double> v, double q) {
  std::sort(v.begin(), v.end());
  const auto k = static_cast<std::size_t>(std::ceil(q * static_cast<double>(v.size())));
  return v[std::min(v.size() - 1, k == 0 ? 0 : k - 1)];
}

}  // namespace

CoveringReport covering_stats(const GateSet& gates, int l_max, std::size_t n_samples, std::uint64_t seed,
                              std::size_t cap) {
  if (l_max < 0) throw ValidationError("lmax must be non-negative");
  if (n_samples == 0) throw ValidationError("need at least one sample");
  WordBall ball(gates, l_max, cap);

  CoveringReport r;
  r.p = gates.p;
  r.variant = gates.variant;
  r.l_max = l_max;
  r.samples = n_samples;
  r.seed = seed;

  std::vector<PU3Point> samples(n_samples);
  parallel_for(n_samples, [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) samples[i] = haar_sample(derive_seed(seed, i));
  });

  // The radial CDF extends the same sample stream so small balls still get resolved.
  const std::size_t n_radial = std::max<std::size_t>(n_samples, kRadialSamples);
  std::vector<double> radii(n_radial);
  const PU3Point id;
  parallel_for(n_radial, [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      radii[i] = distance(id, i < n_samples ? samples[i] : haar_sample(derive_seed(seed, i)));
    }
  });
  std::sort(radii.begin(), radii.end());
  constexpr int kGrid = 100;
  const double top = std::sqrt(6.0);
  for (int k = 0; k <= kGrid; ++k) {
    const double rad = top * k / kGrid;
    r.radial_cdf.emplace_back(rad, empirical_cdf(radii, rad));
  }

  std::vector<double> best(n_samples, std::numeric_limits<double>::infinity());
  std::size_t total = 0;
  for (int l = 0; l <= l_max; ++l) {
    const auto& sphere_elems = ball.sphere(l);
    r.sphere_sizes.push_back(sphere_elems.size());
    total += sphere_elems.size();
    std::vector<PU3Point> pts(sphere_elems.size());
    parallel_for(pts.size(), [&](std::size_t b, std::size_t e) {
      for (std::size_t k = b; k < e; ++k) pts[k] = to_unitary(sphere_elems[k]);
    });
    const VPTree tree(std::move(pts));
    parallel_for(n_samples, [&](std::size_t b, std::size_t e) {
      for (std::size_t i = b; i < e; ++i) best[i] = std::min(best[i], tree.nearest(samples[i]).first);
    });
    r.distances.push_back(best);

    LevelSummary s;
    s.l = l;
    s.ball_size = total;
    s.max = *std::max_element(best.begin(), best.end());
    s.mean = std::accumulate(best.begin(), best.end(), 0.0) / static_cast<double>(n_samples);
    s.q50 = quantile(best, 0.5);
    s.q90 = quantile(best, 0.9);
    s.q99 = quantile(best, 0.99);
    s.ball_volume_at_max = empirical_cdf(radii, s.max);
    s.volume_ratio = s.ball_volume_at_max * static_cast<double>(total);
    r.summary.push_back(s);
  }
  return r;
}

}  // namespace gu3
