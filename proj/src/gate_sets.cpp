#include "gu3/gate_sets.hpp"

#include "gu3/error.hpp"
#include "gu3/parallel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <unordered_set>

namespace gu3 {

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::Full: return "full";
    case Variant::Split: return "split";
    case Variant::Super: return "super";
  }
  return "?";
}

Variant parse_variant(std::string_view s) {
  if (s == "full") return Variant::Full;
  if (s == "split") return Variant::Split;
  if (s == "super") return Variant::Super;
  throw ValidationError("unknown variant '" + std::string(s) + "' (expected full, split or super)");
}

std::int64_t p_prime(std::int64_t p) { return p % 4 == 1 ? p : p * p; }

int GateSet::index_of(const ProjElement& e) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), e);
  if (variant != Variant::Super && it != elements.end() && *it == e) {
    return static_cast<int>(it - elements.begin());
  }
  if (variant == Variant::Super) {
    for (std::size_t k = 0; k < elements.size(); ++k) {
      if (elements[k] == e) return static_cast<int>(k);
    }
  }
  return -1;
}

namespace {

struct G64 {
  std::int64_t re = 0;
  std::int64_t im = 0;
  std::int64_t norm() const { return re * re + im * im; }
};

G64 mul_conj(G64 a, G64 b) {  // a * conj(b)
  return {a.re * b.re + a.im * b.im, a.im * b.re - a.re * b.im};
}

bool is_one_mod_2p2i(G64 z) {
  // (z - 1) / (2 + 2i) = ((a-1) + b i)(2 - 2i) / 8
  std::int64_t a = z.re - 1;
  std::int64_t b = z.im;
  auto mod4 = [](std::int64_t x) { return ((x % 4) + 4) % 4; };
  return mod4(a + b) == 0 && mod4(b - a) == 0;
}

GaussInt to_gauss(G64 z) { return {static_cast<long long>(z.re), static_cast<long long>(z.im)}; }

void validate_odd_prime(std::int64_t p) {
  if (p < 3 || !is_prime(p)) {
    throw ValidationError("p must be an odd prime, got " + std::to_string(p));
  }
}

}  // namespace

GateSet enumerate_sp(std::int64_t p) {
  validate_odd_prime(p);
  const std::int64_t target = p_prime(p);
  const auto bound = static_cast<std::int64_t>(std::sqrt(static_cast<double>(target))) + 1;

  std::vector<std::vector<G64>> by_norm(static_cast<std::size_t>(target + 1));
  for (std::int64_t a = -bound; a <= bound; ++a) {
    for (std::int64_t b = -bound; b <= bound; ++b) {
      std::int64_t n = a * a + b * b;
      if (n <= target) by_norm[static_cast<std::size_t>(n)].push_back({a, b});
    }
  }
  std::vector<G64> diag_ok;  // norm <= p', = 1 mod 2+2i
  for (const auto& bucket : by_norm) {
    for (G64 z : bucket) {
      if (is_one_mod_2p2i(z)) diag_ok.push_back(z);
    }
  }

  // First rows: (alpha, beta, gamma) with alpha = 1 mod 2+2i and total norm p'.
  std::vector<std::array<G64, 3>> first_rows;
  for (G64 a : diag_ok) {
    for (std::int64_t nb = 0; nb + a.norm() <= target; ++nb) {
      std::int64_t nc = target - a.norm() - nb;
      for (G64 b : by_norm[static_cast<std::size_t>(nb)]) {
        for (G64 c : by_norm[static_cast<std::size_t>(nc)]) first_rows.push_back({a, b, c});
      }
    }
  }

  std::map<std::string, Mat3> found;
  std::vector<std::vector<Mat3>> shard_results(shard_count(first_rows.size()));
  parallel_for_shards(first_rows.size(), [&](std::size_t shard, std::size_t begin, std::size_t end) {
    auto& out = shard_results[shard];
    for (std::size_t k = begin; k < end; ++k) {
      const auto& r1 = first_rows[k];
      for (G64 eps : diag_ok) {
        const std::int64_t ne = eps.norm();
        for (std::int64_t nd = 0; nd + ne <= target; ++nd) {
          const std::int64_t rem = target - nd - ne;
          for (G64 del : by_norm[static_cast<std::size_t>(nd)]) {
            // <r1, r2> = alpha conj(delta) + beta conj(eps) + gamma conj(zeta) = 0
            G64 s1 = mul_conj(r1[0], del);
            G64 s2 = mul_conj(r1[1], eps);
            G64 s{s1.re + s2.re, s1.im + s2.im};
            std::vector<G64> zetas;
            if (r1[2].norm() != 0) {
              // conj(zeta) = -s / gamma
              G64 num = mul_conj({-s.re, -s.im}, r1[2]);
              std::int64_t n = r1[2].norm();
              if (num.re % n != 0 || num.im % n != 0) continue;
              G64 zc{num.re / n, num.im / n};
              if (zc.norm() != rem) continue;
              zetas.push_back({zc.re, -zc.im});
            } else {
              if (s.re != 0 || s.im != 0) continue;
              zetas = by_norm[static_cast<std::size_t>(rem)];
            }
            for (G64 zeta : zetas) {
              // r3 is an integral multiple of the primitive part of conj(r1 x r2).
              GaussInt a0 = to_gauss(r1[0]), a1 = to_gauss(r1[1]), a2 = to_gauss(r1[2]);
              GaussInt b0 = to_gauss(del), b1 = to_gauss(eps), b2 = to_gauss(zeta);
              std::array<GaussInt, 3> v{(a1 * b2 - a2 * b1).conj(), (a2 * b0 - a0 * b2).conj(),
                                        (a0 * b1 - a1 * b0).conj()};
              GaussInt g;
              for (const auto& x : v) g = gcd(g, x);
              if (g.is_zero()) continue;
              for (auto& x : v) x = *divide_exact(x, g);
              Int nv = v[0].norm() + v[1].norm() + v[2].norm();
              if (Int(target) % nv != 0) continue;
              auto nm = static_cast<std::int64_t>(Int(target) / nv);
              if (nm >= static_cast<std::int64_t>(by_norm.size())) continue;
              for (G64 m64 : by_norm[static_cast<std::size_t>(nm)]) {
                GaussInt m = to_gauss(m64);
                std::array<GaussInt, 3> r3{v[0] * m, v[1] * m, v[2] * m};
                if (residue_2p2i(r3[2]) != residue_2p2i(GaussInt(1))) continue;
                Mat3 a{a0, a1, a2, b0, b1, b2, r3[0], r3[1], r3[2]};
                if (as_scalar(a)) continue;
                out.push_back(std::move(a));
              }
            }
          }
        }
      }
    }
  });
  for (auto& shard : shard_results) {
    for (auto& a : shard) {
      auto e = canonicalize(a);
      found.emplace(e.key(), std::move(a));
    }
  }

  GateSet gs;
  gs.p = p;
  gs.variant = Variant::Full;
  for (auto& [key, a] : found) {
    gs.elements.push_back(canonicalize(a));
    gs.lifts.emplace_back(std::move(a), p);
  }
  return gs;
}

GateSet enumerate_sp_prime(std::int64_t p) {
  validate_odd_prime(p);
  if (p % 4 != 1) throw ValidationError("S'_p is defined only for p = 1 mod 4");
  GateSet full = enumerate_sp(p);
  GateSet gs;
  gs.p = p;
  gs.variant = Variant::Split;
  for (std::size_t k = 0; k < full.size(); ++k) {
    if (pi_height(full.lifts[k]) == 1) {
      gs.elements.push_back(full.elements[k]);
      gs.lifts.push_back(full.lifts[k]);
    }
  }
  return gs;
}

GateSet super_gates() {
  const GaussInt o(0), one(1), i(0, 1);
  Mat3 sigma{o, one, o, o, o, one, one, o, o};
  Mat3 tau{GaussInt(-1), one, o, i, i, o, o, o, GaussInt(1, -1)};
  GateSet gs;
  gs.p = 2;
  gs.variant = Variant::Super;
  gs.elements = {canonicalize(sigma), canonicalize(tau)};
  gs.lifts = {SimilitudeMatrix(sigma, 2), SimilitudeMatrix(tau, 2)};
  return gs;
}

SuperGateCheck check_super_gates(int max_syllables) {
  if (max_syllables < 0) throw ValidationError("syllable bound must be non-negative");
  const GateSet gs = super_gates();
  const Mat3& sigma = gs.lifts[0].entries();
  const Mat3& tau = gs.lifts[1].entries();
  SuperGateCheck out;
  out.max_syllables = max_syllables;
  out.sigma_cubed = as_scalar(sigma * sigma * sigma);
  out.tau_cubed = as_scalar(tau * tau * tau);

  // powers[letter][a - 1] = letter^a
  const std::array<std::array<Mat3, 2>, 2> powers{{{sigma, sigma * sigma}, {tau, tau * tau}}};
  struct Partial {
    Mat3 m;
    int last;  // letter of the final syllable
  };
  std::unordered_set<std::string> seen;
  seen.insert(canonicalize(identity3()).key());
  out.words = 1;
  std::vector<Partial> layer;
  for (int letter = 0; letter < 2; ++letter) {
    for (const Mat3& pw : powers[letter]) layer.push_back({pw, letter});
  }
  for (int k = 1; k <= max_syllables; ++k) {
    std::vector<Partial> next;
    for (const auto& w : layer) {
      ++out.words;
      seen.insert(canonicalize(w.m).key());
      if (k == max_syllables) continue;
      for (const Mat3& pw : powers[1 - w.last]) next.push_back({canonicalize(w.m * pw).matrix(), 1 - w.last});
    }
    layer = std::move(next);
  }
  out.distinct = seen.size();
  return out;
}

GateSet make_gate_set(std::int64_t p, Variant v) {
  switch (v) {
    case Variant::Full: return enumerate_sp(p);
    case Variant::Split: return enumerate_sp_prime(p);
    case Variant::Super: return super_gates();
  }
  throw ValidationError("unknown variant");
}

WordBall::WordBall(const GateSet& gates, int max_length, std::size_t cap) {
  if (max_length < 0) throw ValidationError("word length must be non-negative");
  auto id = canonicalize(identity3());
  distance_.emplace(id.key(), 0);
  spheres_.push_back({std::move(id)});
  std::size_t stored = 1;

  constexpr std::size_t kChunk = 4096;
  for (int l = 1; l <= max_length; ++l) {
    const auto& prev = spheres_.back();
    std::vector<ProjElement> next;
    for (std::size_t start = 0; start < prev.size(); start += kChunk) {
      const std::size_t stop = std::min(prev.size(), start + kChunk);
      std::vector<ProjElement> products((stop - start) * gates.size());
      parallel_for(stop - start, [&](std::size_t b, std::size_t e) {
        for (std::size_t k = b; k < e; ++k) {
          for (std::size_t s = 0; s < gates.size(); ++s) {
            products[k * gates.size() + s] =
                canonicalize(prev[start + k].matrix() * gates.lifts[s].entries());
          }
        }
      });
      for (auto& prod : products) {
        if (distance_.emplace(prod.key(), l).second) {
          if (++stored > cap) {
            throw ResourceLimit("word ball exceeds cap of " + std::to_string(cap) + " elements");
          }
          next.push_back(std::move(prod));
        }
      }
    }
    spheres_.push_back(std::move(next));
  }
}

std::size_t WordBall::ball_size(int l) const {
  std::size_t n = 0;
  for (int t = 0; t <= l && t <= max_length(); ++t) n += spheres_[static_cast<std::size_t>(t)].size();
  return n;
}

int WordBall::distance(const ProjElement& e) const {
  auto it = distance_.find(e.key());
  return it == distance_.end() ? -1 : it->second;
}

std::vector<ProjElement> sphere(const GateSet& gates, int l, std::size_t cap) {
  WordBall ball(gates, l, cap);
  return ball.sphere(l);
}

}  // namespace gu3
