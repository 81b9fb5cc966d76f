#include "gu3/cayley.hpp"

#include "gu3/error.hpp"
#include "gu3/parallel.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_map>

namespace gu3 {

namespace {

std::vector<std::uint32_t> invert(const std::vector<std::uint32_t>& perm) {
  std::vector<std::uint32_t> inv(perm.size());
  for (std::size_t v = 0; v < perm.size(); ++v) inv[perm[v]] = static_cast<std::uint32_t>(v);
  return inv;
}

std::string hex128(MatKey k) {
  std::ostringstream os;
  os << std::hex << std::setfill('0') << std::setw(16) << static_cast<std::uint64_t>(k >> 64) << std::setw(16)
     << static_cast<std::uint64_t>(k);
  return os.str();
}

}  // namespace

CayleyGraph::CayleyGraph(std::size_t n, std::vector<std::vector<std::uint32_t>> perms, std::vector<MatKey> keys)
    : n_(n), out_(std::move(perms)), keys_(std::move(keys)) {
  if (n_ > std::numeric_limits<std::uint32_t>::max()) throw ResourceLimit("graph too large for 32-bit indices");
  if (!keys_.empty() && keys_.size() != n_) throw ValidationError("vertex key count does not match graph size");
  std::vector<char> hit(n_);
  for (const auto& p : out_) {
    if (p.size() != n_) throw ValidationError("generator permutation has wrong length");
    std::fill(hit.begin(), hit.end(), 0);
    for (auto w : p) {
      if (w >= n_ || hit[w]) throw ValidationError("generator map is not a permutation");
      hit[w] = 1;
    }
    in_.push_back(invert(p));
  }
  // S = S^-1 as a multiset: match every permutation against an unused inverse.
  std::vector<char> used(out_.size(), 0);
  symmetric_ = true;
  for (std::size_t s = 0; s < out_.size() && symmetric_; ++s) {
    bool matched = false;
    for (std::size_t t = 0; t < out_.size(); ++t) {
      if (!used[t] && out_[t] == in_[s]) {
        used[t] = 1;
        matched = true;
        break;
      }
    }
    symmetric_ = matched;
  }
}

void CayleyGraph::apply(const double* x, double* y) const {
  parallel_for(n_, [&](std::size_t b, std::size_t e) {
    for (std::size_t v = b; v < e; ++v) {
      double acc = 0.0;
      for (const auto& p : out_) acc += x[p[v]];
      y[v] = acc;
    }
  });
}

void CayleyGraph::apply_adjoint(const double* x, double* y) const {
  parallel_for(n_, [&](std::size_t b, std::size_t e) {
    for (std::size_t v = b; v < e; ++v) {
      double acc = 0.0;
      for (const auto& p : in_) acc += x[p[v]];
      y[v] = acc;
    }
  });
}

bool CayleyGraph::connected() const {
  if (n_ == 0) return true;
  std::vector<char> seen(n_, 0);
  std::vector<std::uint32_t> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (const auto* adj : {&out_, &in_}) {
      for (const auto& p : *adj) {
        auto w = p[v];
        if (!seen[w]) {
          seen[w] = 1;
          ++count;
          stack.push_back(w);
        }
      }
    }
  }
  return count == n_;
}

void CayleyGraph::set_left_symmetry(std::vector<std::uint32_t> perm) {
  if (perm.size() != n_) throw ValidationError("left symmetry has wrong length");
  for (const auto& p : out_) {
    for (std::size_t v = 0; v < n_; ++v) {
      if (perm[v] >= n_ || perm[p[v]] != p[perm[v]]) {
        throw ValidationError("left symmetry does not commute with the generators");
      }
    }
  }
  std::size_t order = 0;
  std::vector<char> seen(n_, 0);
  for (std::size_t v = 0; v < n_; ++v) {
    if (seen[v]) continue;
    std::size_t len = 0;
    std::size_t x = v;
    do {
      if (seen[x]) throw ValidationError("left symmetry is not a permutation");
      seen[x] = 1;
      x = perm[x];
      ++len;
    } while (x != v);
    if (order == 0) order = len;
    if (len != order) throw ValidationError("left symmetry orbits differ in length");
  }
  left_ = std::move(perm);
  left_order_ = std::max<std::size_t>(order, 1);
}

void CayleyGraph::write_edges(std::ostream& os) const {
  for (std::size_t v = 0; v < n_; ++v) {
    for (std::size_t s = 0; s < out_.size(); ++s) os << v << ' ' << out_[s][v] << ' ' << s << '\n';
  }
}

void CayleyGraph::write_vertices(std::ostream& os) const {
  for (std::size_t v = 0; v < n_; ++v) {
    os << v << ' ' << (keys_.empty() ? std::to_string(v) : hex128(keys_[v])) << '\n';
  }
}

CayleyGraph build_cayley(const FiniteField& f, const Closure& group, const std::vector<FinMat>& gens) {
  if (group.exceeded_cap) throw ResourceLimit("group closure exceeded its cap; graph not built");
  const auto& keys = group.elements;
  const std::size_t n = keys.size();
  std::unordered_map<MatKey, std::uint32_t, MatKeyHash> index;
  index.reserve(n);
  for (std::size_t v = 0; v < n; ++v) index.emplace(keys[v], static_cast<std::uint32_t>(v));

  std::vector<FinMat> canon;
  for (const auto& g : gens) canon.push_back(canonical(f, g));
  std::vector<std::vector<std::uint32_t>> perms(canon.size(), std::vector<std::uint32_t>(n));
  std::vector<char> missing(shard_count(n), 0);
  parallel_for_shards(n, [&](std::size_t shard, std::size_t b, std::size_t e) {
    for (std::size_t v = b; v < e; ++v) {
      FinMat x = unpack(f, keys[v]);
      for (std::size_t s = 0; s < canon.size(); ++s) {
        auto it = index.find(pack(f, canonical(f, mat_mul(f, x, canon[s]))));
        if (it == index.end()) {
          missing[shard] = 1;
          return;
        }
        perms[s][v] = it->second;
      }
    }
  });
  if (std::any_of(missing.begin(), missing.end(), [](char c) { return c != 0; })) {
    throw ValidationError("generators leave the supplied group");
  }
  CayleyGraph graph(n, std::move(perms), keys);

  // Left multiplication by h commutes with every right translation.
  std::size_t best = 0;
  std::size_t best_order = 1;
  const FinMat id = mat_identity(f);
  for (std::size_t v = 0; v < std::min<std::size_t>(n, 4096); ++v) {
    const FinMat h = unpack(f, keys[v]);
    FinMat x = h;
    std::size_t order = 1;
    while (x != id && order <= n) {
      x = canonical(f, mat_mul(f, x, h));
      ++order;
    }
    if (order > best_order) {
      best_order = order;
      best = v;
    }
  }
  if (best_order > 1) {
    const FinMat h = unpack(f, keys[best]);
    std::vector<std::uint32_t> left(n);
    for (std::size_t v = 0; v < n; ++v) {
      left[v] = index.at(pack(f, canonical(f, mat_mul(f, h, unpack(f, keys[v])))));
    }
    graph.set_left_symmetry(std::move(left));
  }
  return graph;
}

CayleyGraph circulant_graph(std::size_t n, const std::vector<std::size_t>& steps) {
  if (n == 0) throw ValidationError("circulant graph needs at least one vertex");
  std::vector<std::vector<std::uint32_t>> perms;
  for (auto s : steps) {
    std::vector<std::uint32_t> p(n);
    for (std::size_t v = 0; v < n; ++v) p[v] = static_cast<std::uint32_t>((v + s) % n);
    perms.push_back(std::move(p));
  }
  CayleyGraph graph(n, std::move(perms));
  if (n > 1) {
    std::vector<std::uint32_t> shift(n);
    for (std::size_t v = 0; v < n; ++v) shift[v] = static_cast<std::uint32_t>((v + 1) % n);
    graph.set_left_symmetry(std::move(shift));
  }
  return graph;
}

double normality_defect(const CayleyGraph& g) {
  const std::size_t n = g.size();
  const std::size_t d = g.degree();
  std::vector<std::vector<std::uint32_t>> inv;
  for (std::size_t s = 0; s < d; ++s) inv.push_back(invert(g.permutation(s)));
  std::vector<int> worst(shard_count(n), 0);
  parallel_for_shards(n, [&](std::size_t shard, std::size_t b, std::size_t e) {
    std::map<std::uint32_t, int> diff;
    for (std::size_t u = b; u < e; ++u) {
      diff.clear();
      // (A A*)_{uv} counts u s t^-1 = v; (A* A)_{uv} counts u s^-1 t = v.
      for (std::size_t s = 0; s < d; ++s) {
        const auto us = g.neighbor(s, u);
        const auto usi = inv[s][u];
        for (std::size_t t = 0; t < d; ++t) {
          ++diff[inv[t][us]];
          --diff[g.neighbor(t, usi)];
        }
      }
      for (const auto& [v, c] : diff) worst[shard] = std::max(worst[shard], std::abs(c));
    }
  });
  return *std::max_element(worst.begin(), worst.end());
}

SpectrumReport spectrum_dense(const CayleyGraph& g) {
  const std::size_t n = g.size();
  const std::size_t m = g.left_order();
  const std::size_t block = n / m;
  if (block > kDenseBlockLimit) {
    throw ResourceLimit("dense block of size " + std::to_string(block) + " exceeds limit " +
                        std::to_string(kDenseBlockLimit));
  }
  if (!g.symmetric() && normality_defect(g) != 0) {
    throw ValidationError("operator is not normal; dense complex spectrum unsupported");
  }
  SpectrumReport r;
  r.vertices = n;
  r.degree = g.degree();
  r.dense = true;
  r.complex_spectrum = !g.symmetric();

  // Orbits of the left symmetry h: vertex x = h^t(rep). The vectors
  // e_{r,k} = m^{-1/2} sum_t w^{-tk} delta_{h^t r} (w = exp(2 pi i / m)) span A-invariant
  // blocks, and A e_{r,k} = sum_s w^{t k} e_{r',k} where r s^-1 = h^t r'.
  std::vector<std::uint32_t> rep(n, std::numeric_limits<std::uint32_t>::max());
  std::vector<std::uint32_t> expo(n, 0);
  std::vector<std::uint32_t> rep_vertex;
  for (std::size_t v = 0; v < n; ++v) {
    if (rep[v] != std::numeric_limits<std::uint32_t>::max()) continue;
    const auto id = static_cast<std::uint32_t>(rep_vertex.size());
    rep_vertex.push_back(static_cast<std::uint32_t>(v));
    std::size_t x = v;
    for (std::size_t t = 0; t < m; ++t) {
      rep[x] = id;
      expo[x] = static_cast<std::uint32_t>(t);
      x = m == 1 ? x : g.left_symmetry()[x];
    }
  }
  std::vector<std::vector<std::uint32_t>> inv;
  for (std::size_t s = 0; s < g.degree(); ++s) inv.push_back(invert(g.permutation(s)));

  std::vector<std::vector<Complex>> values(m);
  std::vector<std::vector<double>> residuals(m);
  parallel_for(m, [&](std::size_t kb, std::size_t ke) {
    for (std::size_t k = kb; k < ke; ++k) {
      Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(block), static_cast<Eigen::Index>(block));
      for (std::size_t ri = 0; ri < block; ++ri) {
        for (std::size_t s = 0; s < g.degree(); ++s) {
          const auto w = inv[s][rep_vertex[ri]];
          const double angle = 2.0 * M_PI * static_cast<double>((static_cast<std::uint64_t>(expo[w]) * k) % m) /
                               static_cast<double>(m);
          b(rep[w], static_cast<Eigen::Index>(ri)) += std::polar(1.0, angle);
        }
      }
      if (g.symmetric()) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(b);
        if (es.info() != Eigen::Success) throw Error("block eigensolver failed");
        const Eigen::MatrixXcd res = b * es.eigenvectors() - es.eigenvectors() * es.eigenvalues().asDiagonal();
        for (Eigen::Index c = 0; c < es.eigenvalues().size(); ++c) {
          values[k].emplace_back(es.eigenvalues()(c), 0.0);
          residuals[k].push_back(res.col(c).norm());
        }
      } else {
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(b);
        if (es.info() != Eigen::Success) throw Error("block eigensolver failed");
        for (Eigen::Index c = 0; c < es.eigenvalues().size(); ++c) {
          const auto y = es.eigenvectors().col(c);
          values[k].push_back(es.eigenvalues()(c));
          residuals[k].push_back((b * y - es.eigenvalues()(c) * y).norm() / y.norm());
        }
      }
    }
  });

  std::vector<std::pair<Complex, double>> all;
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t c = 0; c < values[k].size(); ++c) all.emplace_back(values[k][c], residuals[k][c]);
  }
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    const auto& x = a.first;
    const auto& y = b.first;
    return x.real() != y.real() ? x.real() > y.real() : x.imag() > y.imag();
  });
  for (const auto& [z, res] : all) {
    r.eigenvalues.push_back(z);
    r.residuals.push_back(res);
  }
  r.max_residual = r.residuals.empty() ? 0.0 : *std::max_element(r.residuals.begin(), r.residuals.end());
  return r;
}

namespace {

struct LanczosResult {
  std::vector<double> values;  // descending
  std::vector<double> residuals;
  bool converged = false;
  int iterations = 0;
};

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

void axpy(double alpha, const std::vector<double>& x, std::vector<double>& y) {
  for (std::size_t k = 0; k < x.size(); ++k) y[k] += alpha * x[k];
}

void remove_constant(std::vector<double>& x) {
  const double mean = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
  for (auto& v : x) v -= mean;
}

/// Largest eigenvalues of sign * A restricted to the complement of the constant vector
/// (when deflate is set).
LanczosResult lanczos_top(const CayleyGraph& g, double sign, const SparseOptions& opt, std::uint64_t seed) {
  const std::size_t n = g.size();
  const int m = std::min<int>(opt.basis, static_cast<int>(n) - (opt.deflate_constant ? 1 : 0));
  const int k = std::min(opt.k, m - 1);
  if (k < 1) throw ValidationError("graph too small for iterative eigensolver");
  const double scale = std::max<double>(1.0, static_cast<double>(g.degree()));

  std::vector<std::vector<double>> v(static_cast<std::size_t>(m + 1), std::vector<double>(n));
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  for (auto& x : v[0]) x = normal(rng);
  if (opt.deflate_constant) remove_constant(v[0]);
  {
    const double nv = std::sqrt(dot(v[0], v[0]));
    for (auto& x : v[0]) x /= nv;
  }

  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
  int kept = 0;
  std::vector<double> w(n);
  LanczosResult out;
  for (int restart = 0; restart < opt.max_restarts; ++restart) {
    out.iterations = restart + 1;
    int filled = m;
    double beta = 0.0;
    for (int j = kept; j < m; ++j) {
      g.apply(v[static_cast<std::size_t>(j)].data(), w.data());
      if (sign < 0) {
        for (auto& x : w) x = -x;
      }
      if (opt.deflate_constant) remove_constant(w);
      std::vector<double> h(static_cast<std::size_t>(j + 1), 0.0);
      for (int pass = 0; pass < 2; ++pass) {
        for (int i = 0; i <= j; ++i) {
          const double c = dot(v[static_cast<std::size_t>(i)], w);
          h[static_cast<std::size_t>(i)] += c;
          axpy(-c, v[static_cast<std::size_t>(i)], w);
        }
      }
      for (int i = 0; i <= j; ++i) {
        if (i >= kept || j >= kept) {
          t(i, j) = h[static_cast<std::size_t>(i)];
          t(j, i) = h[static_cast<std::size_t>(i)];
        }
      }
      beta = std::sqrt(dot(w, w));
      if (beta < 1e-12 * scale) {
        // Invariant subspace: restart vector is irrelevant, spectrum on it is exact.
        filled = j + 1;
        beta = 0.0;
        break;
      }
      auto& next = v[static_cast<std::size_t>(j + 1)];
      for (std::size_t x = 0; x < n; ++x) next[x] = w[x] / beta;
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t.topLeftCorner(filled, filled));
    const Eigen::VectorXd theta = es.eigenvalues();     // ascending
    const Eigen::MatrixXd y = es.eigenvectors();
    const int want = std::min(k, filled);
    out.values.clear();
    out.residuals.clear();
    bool done = true;
    for (int c = 0; c < want; ++c) {
      const int idx = filled - 1 - c;
      out.values.push_back(theta(idx));
      const double res = beta * std::abs(y(filled - 1, idx));
      out.residuals.push_back(res);
      if (res > opt.tol * scale) done = false;
    }
    if (done || filled < m) {
      out.converged = true;
      return out;
    }

    // Thick restart: keep the top Ritz vectors plus the residual direction.
    const int keep = std::min(m - 2, std::max(k + 2, m / 2));
    std::vector<std::vector<double>> u(static_cast<std::size_t>(keep), std::vector<double>(n, 0.0));
    for (int c = 0; c < keep; ++c) {
      const int idx = filled - 1 - c;
      for (int i = 0; i < filled; ++i) axpy(y(i, idx), v[static_cast<std::size_t>(i)], u[static_cast<std::size_t>(c)]);
    }
    std::vector<double> residual_dir = std::move(v[static_cast<std::size_t>(m)]);
    for (int c = 0; c < keep; ++c) v[static_cast<std::size_t>(c)] = std::move(u[static_cast<std::size_t>(c)]);
    v[static_cast<std::size_t>(keep)] = std::move(residual_dir);
    for (int c = keep + 1; c <= m; ++c) v[static_cast<std::size_t>(c)].assign(n, 0.0);
    t.setZero();
    for (int c = 0; c < keep; ++c) t(c, c) = theta(filled - 1 - c);
    kept = keep;
  }
  out.converged = false;
  return out;
}

}  // namespace

SpectrumReport extremal_sparse(const CayleyGraph& g, const SparseOptions& opt) {
  if (!g.symmetric()) throw ValidationError("iterative solver requires a symmetric generating set");
  if (opt.k < 1 || opt.basis < opt.k + 3) throw ValidationError("need k >= 1 and basis >= k + 3");
  SpectrumReport r;
  r.vertices = g.size();
  r.degree = g.degree();
  r.dense = false;
  r.complex_spectrum = false;
  auto top = lanczos_top(g, 1.0, opt, opt.seed);
  auto bottom = lanczos_top(g, -1.0, opt, opt.seed ^ 0x9E3779B97F4A7C15ULL);
  r.converged = top.converged && bottom.converged;
  r.iterations = top.iterations + bottom.iterations;
  std::vector<std::pair<double, double>> pairs;
  if (opt.deflate_constant) pairs.emplace_back(static_cast<double>(g.degree()), 0.0);  // constant vector, exact
  for (std::size_t c = 0; c < top.values.size(); ++c) pairs.emplace_back(top.values[c], top.residuals[c]);
  for (std::size_t c = 0; c < bottom.values.size(); ++c) pairs.emplace_back(-bottom.values[c], bottom.residuals[c]);
  std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  for (const auto& [val, res] : pairs) {
    r.eigenvalues.emplace_back(val, 0.0);
    r.residuals.push_back(res);
  }
  r.max_residual = r.residuals.empty() ? 0.0 : *std::max_element(r.residuals.begin(), r.residuals.end());
  return r;
}

double deltoid_distance(Complex z, std::int64_t p) {
  const double pp = static_cast<double>(p);
  const Complex a = z / pp;
  const double n2 = std::norm(a);
  // Discriminant of the self-inversive cubic; <= 0 exactly on the closed region.
  const double disc = n2 * n2 - 8.0 * std::pow(a, 3).real() + 18.0 * n2 - 27.0;
  if (disc <= 0.0) return 0.0;
  auto boundary = [&](double th) { return pp * (2.0 * std::polar(1.0, th) + std::polar(1.0, -2.0 * th)); };
  constexpr int kGrid = 3600;
  const double step = 2.0 * M_PI / kGrid;
  double best_th = 0.0;
  double best = std::abs(z - boundary(0.0));
  for (int s = 1; s < kGrid; ++s) {
    const double d = std::abs(z - boundary(s * step));
    if (d < best) {
      best = d;
      best_th = s * step;
    }
  }
  double lo = best_th - step;
  double hi = best_th + step;
  for (int it = 0; it < 100; ++it) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    if (std::abs(z - boundary(m1)) < std::abs(z - boundary(m2))) {
      hi = m2;
    } else {
      lo = m1;
    }
  }
  return std::min(best, std::abs(z - boundary(0.5 * (lo + hi))));
}

bool deltoid_test(Complex z, std::int64_t p, double tol) {
  const Complex a = z / static_cast<double>(p);
  Eigen::Matrix3cd companion = Eigen::Matrix3cd::Zero();
  // X^3 - a X^2 + conj(a) X - 1
  companion(0, 0) = a;
  companion(0, 1) = -std::conj(a);
  companion(0, 2) = 1.0;
  companion(1, 0) = 1.0;
  companion(2, 1) = 1.0;
  Eigen::ComplexEigenSolver<Eigen::Matrix3cd> es(companion, false);
  bool unimodular = true;
  for (int k = 0; k < 3; ++k) {
    Complex x = es.eigenvalues()(k);
    for (int it = 0; it < 3; ++it) {  // Newton polish
      const Complex f = ((x - a) * x + std::conj(a)) * x - 1.0;
      const Complex df = (3.0 * x - 2.0 * a) * x + std::conj(a);
      if (std::abs(df) < 1e-12) break;
      x -= f / df;
    }
    if (std::abs(std::abs(x) - 1.0) > tol) unimodular = false;
  }
  // Near cusps the roots coalesce and move like the cube root of the perturbation;
  // the region itself is closed, so points within tol of it pass.
  return unimodular || deltoid_distance(z, p) <= tol;
}

void ramanujan_check(SpectrumReport& r, std::int64_t p, RamanujanMode mode, double tol) {
  r.tol = tol;
  r.trivial.clear();
  r.zero_class.clear();
  r.failing.clear();
  r.nontrivial_max.reset();
  r.nontrivial_min.reset();
  const double P = static_cast<double>(p);
  std::vector<Complex> trivial_values;
  double lo = 0.0;
  double hi = 0.0;
  bool use_deltoid = false;
  std::optional<double> zero_value;
  if (mode == RamanujanMode::Split) {
    if (p % 4 != 1) throw ValidationError("split mode requires p = 1 mod 4");
    const double d = P * P + P + 1;
    if (r.complex_spectrum) {
      use_deltoid = true;
      for (int j = 0; j < 3; ++j) trivial_values.push_back(std::polar(d, 2.0 * M_PI * j / 3.0));
      r.bound = "deltoid p=" + std::to_string(p);
    } else {
      trivial_values = {Complex(2 * d, 0), Complex(-d, 0)};
      lo = -6 * P;
      hi = 6 * P;
    }
  } else {
    if (p % 4 != 3) throw ValidationError("inert mode requires p = 3 mod 4");
    if (r.complex_spectrum) throw ValidationError("inert mode expects a real spectrum");
    const double top = P * P * P * P + P;
    trivial_values = {Complex(top, 0), Complex(-top, 0)};
    lo = -2 * P * P + P - 1;
    hi = 2 * P * P + P - 1;
    zero_value = -(P * P * P + 1);
  }
  if (!use_deltoid) {
    std::ostringstream os;
    os << '[' << lo << ", " << hi << ']';
    r.bound = os.str();
  }
  r.pass = true;
  for (const auto& z : r.eigenvalues) {
    bool trivial = false;
    for (const auto& t : trivial_values) trivial = trivial || std::abs(z - t) <= tol;
    if (trivial) {
      r.trivial.push_back(z);
      continue;
    }
    if (zero_value && std::abs(z.real() - *zero_value) <= tol) {
      r.zero_class.push_back(z);
      continue;
    }
    const double key_max = use_deltoid ? std::abs(z) : z.real();
    r.nontrivial_max = r.nontrivial_max ? std::max(*r.nontrivial_max, key_max) : key_max;
    r.nontrivial_min = r.nontrivial_min ? std::min(*r.nontrivial_min, z.real()) : z.real();
    const bool ok = use_deltoid ? deltoid_test(z, p, tol) : (z.real() >= lo - tol && z.real() <= hi + tol);
    if (!ok) {
      r.failing.push_back(z);
      r.pass = false;
    }
  }
}

}  // namespace gu3
