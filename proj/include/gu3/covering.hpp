#pragma once

#include "gu3/gate_sets.hpp"
#include "gu3/similitude.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <utility>
#include <vector>

namespace gu3 {

/// A unitary 3x3 matrix standing for its class in PU(3).
struct PU3Point {
  Eigen::Matrix3cd u = Eigen::Matrix3cd::Identity();
};

/// g / sqrt(lambda) for g g* = lambda I.
PU3Point to_unitary(const Mat3& g);
PU3Point to_unitary(const ProjElement& g);

/// sqrt(6 - 2 |tr(x* y)|): the Frobenius distance minimized over global phase.
/// Accurate to rounding even for nearly equal arguments.
double distance(const PU3Point& x, const PU3Point& y);

/// SplitMix64 step, used to derive independent per-sample seeds from a master seed.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// Haar-random element: Gram-Schmidt of a complex Gaussian matrix (positive R diagonal).
PU3Point haar_sample(std::uint64_t seed);

/// Vantage-point tree over a fixed point set for exact nearest-neighbour queries.
class VPTree {
 public:
  VPTree() = default;
  explicit VPTree(std::vector<PU3Point> points);
  std::size_t size() const { return points_.size(); }
  /// (distance, index) of the nearest point; {inf, -1} when empty.
  std::pair<double, std::ptrdiff_t> nearest(const PU3Point& q) const;

 private:
  struct Node {
    std::size_t point = 0;
    double radius = 0.0;
    std::ptrdiff_t inside = -1;
    std::ptrdiff_t outside = -1;
  };
  std::ptrdiff_t build(std::vector<std::size_t>& idx, std::size_t lo, std::size_t hi);

  std::vector<PU3Point> points_;
  std::vector<Node> nodes_;
  std::ptrdiff_t root_ = -1;
};

struct LevelSummary {
  int l = 0;
  std::size_t ball_size = 0;  // |S^(<=l)|
  double max = 0.0;
  double mean = 0.0;
  double q50 = 0.0;
  double q90 = 0.0;
  double q99 = 0.0;
  /// Empirical Haar volume of a ball of radius max, and ball_size times it.
  double ball_volume_at_max = 0.0;
  double volume_ratio = 0.0;
};

struct CoveringReport {
  std::int64_t p = 0;
  Variant variant = Variant::Full;
  int l_max = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<std::size_t> sphere_sizes;
  /// distances[l][i]: nearest distance from sample i to S^(<=l).
  std::vector<std::vector<double>> distances;
  std::vector<LevelSummary> summary;
  /// (r, fraction of Haar draws x with d(I, x) <= r) on a uniform grid up to sqrt(6).
  std::vector<std::pair<double, double>> radial_cdf;
};

/// Number of draws (continuing the sample seed stream) behind the radial CDF.
inline constexpr std::size_t kRadialSamples = 200'000;

/// Fraction of the sorted sample radii that are <= r.
double empirical_cdf(const std::vector<double>& sorted, double r);

/// Nearest-word distances of fixed Haar samples to the word balls of the gate set.
CoveringReport covering_stats(const GateSet& gates, int l_max, std::size_t n_samples, std::uint64_t seed,
                              std::size_t cap = 20'000'000);

}  // namespace gu3
