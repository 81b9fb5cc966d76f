#pragma once

#include "gu3/similitude.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace gu3 {

enum class Variant { Full, Split, Super };

std::string_view to_string(Variant v);
Variant parse_variant(std::string_view s);

/// p' = p for p = 1 mod 4, p^2 for p = 3 mod 4.
std::int64_t p_prime(std::int64_t p);

/// A finite gate set. elements[k] is the projective class of lifts[k]; for the
/// full and split variants the order is the sorted order of canonical keys, which
/// is the generator index used by words. The super variant is ordered (sigma, tau).
struct GateSet {
  std::int64_t p = 0;
  Variant variant = Variant::Full;
  std::vector<ProjElement> elements;
  std::vector<SimilitudeMatrix> lifts;

  std::size_t size() const { return elements.size(); }
  /// Index of the generator with the given projective class, or -1.
  int index_of(const ProjElement& e) const;
};

/// All A in M_3(Z[i]) with A A* = p' I, A not scalar and diagonal entries = 1 mod 2+2i.
GateSet enumerate_sp(std::int64_t p);
/// The members of S_p with pi-height 1 (p = 1 mod 4 only).
GateSet enumerate_sp_prime(std::int64_t p);
/// The order-3 pair sigma, tau in PGU_3(Z[1/2]).
GateSet super_gates();

GateSet make_gate_set(std::int64_t p, Variant v);

struct SuperGateCheck {
  /// sigma^3 and tau^3 as exact scalars, when they are scalar.
  std::optional<GaussInt> sigma_cubed;
  std::optional<GaussInt> tau_cubed;
  int max_syllables = 0;
  /// Alternating words including the empty one: 1 + 2 (2 + 4 + ... + 2^L).
  std::size_t words = 0;
  std::size_t distinct = 0;
  bool pass() const { return sigma_cubed && tau_cubed && words == distinct; }
};

/// Exact check of the free-product relations of <sigma, tau>: both generators have
/// projective order 3 and the alternating words sigma^a1 tau^b1 ... (a_i, b_i in {1, 2},
/// either letter first) with at most max_syllables syllables are pairwise distinct.
SuperGateCheck check_super_gates(int max_syllables);

/// Breadth-first word spheres: spheres[l] holds the elements whose shortest word
/// over the gate set (as a semigroup, right multiplication) has length exactly l.
class WordBall {
 public:
  /// Throws ResourceLimit when more than `cap` elements would be stored.
  WordBall(const GateSet& gates, int max_length, std::size_t cap = 20'000'000);

  int max_length() const { return static_cast<int>(spheres_.size()) - 1; }
  const std::vector<ProjElement>& sphere(int l) const { return spheres_.at(static_cast<std::size_t>(l)); }
  std::size_t ball_size(int l) const;
  /// Word length of e, or -1 when e lies outside the ball.
  int distance(const ProjElement& e) const;

 private:
  std::vector<std::vector<ProjElement>> spheres_;
  std::unordered_map<std::string, int> distance_;
};

/// Convenience: sphere(gates, l) with a fresh BFS.
std::vector<ProjElement> sphere(const GateSet& gates, int l, std::size_t cap = 20'000'000);

}  // namespace gu3
