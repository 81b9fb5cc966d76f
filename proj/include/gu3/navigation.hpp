#pragma once

#include "gu3/gate_sets.hpp"
#include "gu3/similitude.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace gu3 {

/// An element of Z/p^N, read as a p-adic integer known to N digits.
struct PadicScalar {
  std::int64_t p = 0;
  int precision = 0;
  Int value;  // in [0, p^N)
};

/// x with x^2 = -1 mod p^N and x = the smaller square root of -1 mod p.
PadicScalar hensel_sqrt_minus_one(std::int64_t p, int precision);
/// The square root of -1 mod p^N under which pi = a+bi (the split factor) maps to a
/// multiple of p, so ord_p of the image equals ord_pi.
PadicScalar uniformizer_sqrt_minus_one(std::int64_t p, int precision);

/// b = [[p^m1, x, y], [0, p^m2, z], [0, 0, p^m3]] with 0 <= x, y < p^m1, 0 <= z < p^m2.
struct IwasawaForm {
  std::array<int, 3> m{};
  Int x, y, z;
  std::array<Int, 9> matrix(std::int64_t p) const;
  int height() const { return m[0] + m[1] + m[2]; }
};

/// Column-reduces an integer matrix over Z/p^N (a primitive p-adic matrix) to the
/// Iwasawa form of its column lattice. Throws PrecisionExceeded when a row has no
/// pivot below p^N.
IwasawaForm iwasawa_form(const std::array<Int, 9>& g, std::int64_t p, int precision);

/// Image of a Gaussian matrix under Z[i] -> Z/p^N, i -> sqrt.
std::array<Int, 9> embed_padic(const Mat3& g, const PadicScalar& sqrt_minus_one);

struct Letter {
  int index = 0;
  bool inverse = false;
  friend bool operator==(const Letter&, const Letter&) = default;
};
using Word = std::vector<Letter>;

/// Product of the lifts (adjoints for inverse letters), canonicalized.
/// Throws ValidationError on an index out of range.
ProjElement evaluate_word(const Word& word, const GateSet& gates);

/// Membership in the lattice generated by the gates: similitude factor of the primitive
/// representative a power of p, and a unit multiple with diagonal = 1 mod 2+2i.
bool in_lattice(const ProjElement& g, std::int64_t p);

struct NavigationTrace {
  int steps = 0;
  /// Steps where the row-matching rule did not give a unique descending generator and
  /// the level scan decided instead.
  int fallback_steps = 0;
  int precision_raises = 0;
};

/// Shortest word for g: over S'_p (Variant::Split) by p-adic row matching, or over the
/// full S_p by a level scan. Each step multiplies by s* on the left and lowers
/// h_pi by 1 (split) or the level by ord_p(p') (full). Throws NotInLattice or
/// PrecisionExceeded.
class Navigator {
 public:
  explicit Navigator(GateSet gates);
  const GateSet& gates() const { return gates_; }
  Word navigate(const ProjElement& g, NavigationTrace* trace = nullptr) const;

 private:
  int select_split(const Mat3& g, int h, NavigationTrace* trace) const;
  int select_scan(const Mat3& g, int target) const;
  int measure(const Mat3& g) const;

  GateSet gates_;
  std::vector<Mat3> adjoints_;
  std::vector<IwasawaForm> forms_;  // split variant only
  int step_ = 1;                    // height or level drop per letter
};

Word navigate(const ProjElement& g, const GateSet& gates, NavigationTrace* trace = nullptr);

}  // namespace gu3
