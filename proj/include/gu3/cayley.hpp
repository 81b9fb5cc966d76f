#pragma once

#include "gu3/finite_field.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace gu3 {

using Complex = std::complex<double>;

/// Union of permutations: vertex v has out-neighbours out[s][v], one per generator s.
class CayleyGraph {
 public:
  CayleyGraph() = default;
  /// Every entry of perms must be a permutation of [0, n).
  CayleyGraph(std::size_t n, std::vector<std::vector<std::uint32_t>> perms, std::vector<MatKey> keys = {});

  std::size_t size() const { return n_; }
  std::size_t degree() const { return out_.size(); }
  /// S = S^-1 as multisets of permutations.
  bool symmetric() const { return symmetric_; }
  std::uint32_t neighbor(std::size_t s, std::size_t v) const { return out_[s][v]; }
  const std::vector<std::uint32_t>& permutation(std::size_t s) const { return out_[s]; }
  /// Sorted canonical keys when built from a group closure; empty otherwise.
  const std::vector<MatKey>& keys() const { return keys_; }

  /// y(v) = sum_s x(v s).
  void apply(const double* x, double* y) const;
  /// y(v) = sum_s x(v s^-1).
  void apply_adjoint(const double* x, double* y) const;
  bool connected() const;

  /// Attaches a permutation commuting with every generator (left multiplication by a
  /// group element) whose orbits all have the same length. spectrum_dense splits the
  /// space along its eigenspaces. Throws ValidationError when the conditions fail.
  void set_left_symmetry(std::vector<std::uint32_t> perm);
  const std::vector<std::uint32_t>& left_symmetry() const { return left_; }
  /// Orbit length of the left symmetry (1 when none is attached).
  std::size_t left_order() const { return left_order_; }

  /// "u v gen_index" lines, sorted by (u, gen_index).
  void write_edges(std::ostream& os) const;
  /// "index key" lines, the key in hex.
  void write_vertices(std::ostream& os) const;

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<std::uint32_t>> out_;
  std::vector<std::vector<std::uint32_t>> in_;
  std::vector<MatKey> keys_;
  std::vector<std::uint32_t> left_;
  std::size_t left_order_ = 1;
  bool symmetric_ = false;
};

/// Vertices are the closure elements in sorted key order; edges v -> v s. Left
/// multiplication by an element of maximal order among the first few vertices is
/// attached as the left symmetry.
CayleyGraph build_cayley(const FiniteField& f, const Closure& group, const std::vector<FinMat>& gens);

/// Z/n with the given additive generators (cycle: {1, n-1}; complete graph: {1..n-1}),
/// with translation by 1 as left symmetry.
CayleyGraph circulant_graph(std::size_t n, const std::vector<std::size_t>& steps);

enum class RamanujanMode { Split, Inert };

struct SpectrumReport {
  std::size_t vertices = 0;
  std::size_t degree = 0;
  bool dense = true;
  /// Spectrum of the non-self-adjoint operator A_1 (complex) or of a symmetric A (real).
  bool complex_spectrum = false;
  std::vector<Complex> eigenvalues;
  /// Residual norms ||A v - lambda v|| of the returned eigenpairs.
  std::vector<double> residuals;
  double max_residual = 0.0;
  bool converged = true;
  int iterations = 0;

  // Filled by ramanujan_check.
  double tol = 0.0;
  std::string bound;
  std::vector<Complex> trivial;
  std::vector<Complex> zero_class;
  std::vector<Complex> failing;
  std::optional<double> nontrivial_max;  // largest real part (or modulus for complex spectra)
  std::optional<double> nontrivial_min;  // smallest real part
  bool pass = false;
};

/// Largest block (vertices / left_order) accepted by spectrum_dense.
inline constexpr std::size_t kDenseBlockLimit = 4000;

/// Full spectrum of A = sum_s R_s, one dense block per character of the left symmetry.
/// A symmetric generating set gives a real spectrum; otherwise A must be normal and the
/// spectrum is complex. Throws ResourceLimit above kDenseBlockLimit and ValidationError
/// when A is not normal.
SpectrumReport spectrum_dense(const CayleyGraph& g);

/// max |(A A* - A* A)_{uv}|, computed exactly from the permutations.
double normality_defect(const CayleyGraph& g);

struct SparseOptions {
  int k = 6;
  int basis = 40;
  int max_restarts = 400;
  double tol = 1e-10;  // on residual / degree
  std::uint64_t seed = 1;
  bool deflate_constant = true;
};

/// k largest and k smallest distinct eigenvalues of a symmetric graph by thick-restart
/// Lanczos with full reorthogonalization. Eigenvalues are sorted descending.
SpectrumReport extremal_sparse(const CayleyGraph& g, const SparseOptions& opt);

/// Cubic-root criterion: z lies in the p-scaled deltoid iff the roots of
/// X^3 - (z/p) X^2 + conj(z/p) X - 1 are unimodular. Points within tol of the
/// region also pass.
bool deltoid_test(Complex z, std::int64_t p, double tol);
/// Distance from z to the closed p-scaled deltoid region (0 inside).
double deltoid_distance(Complex z, std::int64_t p);

/// Classifies each eigenvalue as trivial / zero-class / nontrivial and tests the
/// nontrivial ones against the deltoid (complex spectra), [-6p, 6p] (real, split), or
/// [-2p^2+p-1, 2p^2+p-1] (inert).
void ramanujan_check(SpectrumReport& report, std::int64_t p, RamanujanMode mode, double tol);

}  // namespace gu3
