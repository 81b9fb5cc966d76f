#pragma once

#include "gu3/gaussian.hpp"
#include "gu3/similitude.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gu3 {

/// Element a + b*w of F_q (b = 0) or F_{q^2} = F_q[w]/(w^2 + 1).
struct Fe {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  friend bool operator==(const Fe&, const Fe&) = default;
};

/// The field into which Z[i] is reduced modulo a rational prime q:
/// F_q with i -> sqrt(-1) when q = 1 mod 4, F_q[w]/(w^2+1) with i -> w when q = 3 mod 4.
class FiniteField {
 public:
  explicit FiniteField(std::int64_t q);

  std::int64_t q() const { return q_; }
  bool is_extension() const { return extension_; }
  /// Number of elements.
  std::int64_t size() const { return extension_ ? q_ * q_ : q_; }
  /// Image of i (sqrt(-1) in F_q, or w).
  Fe image_of_i() const { return iota_; }

  Fe zero() const { return {0, 0}; }
  Fe one() const { return {1, 0}; }
  Fe from_int(const Int& n) const;
  Fe reduce(const GaussInt& z) const;

  Fe add(Fe x, Fe y) const;
  Fe sub(Fe x, Fe y) const;
  Fe neg(Fe x) const;
  Fe mul(Fe x, Fe y) const;
  Fe inv(Fe x) const;
  Fe pow(Fe x, std::uint64_t e) const;
  /// x -> x^q; the identity on F_q, a + bw -> a - bw on F_{q^2}.
  Fe frobenius(Fe x) const;
  bool is_zero(Fe x) const { return x.a == 0 && x.b == 0; }

  /// Index in [0, size()).
  std::uint32_t index(Fe x) const { return x.a + x.b * static_cast<std::uint32_t>(q_); }
  Fe from_index(std::uint32_t k) const;

 private:
  std::int64_t q_;
  bool extension_;
  Fe iota_;
  std::vector<Fe> inverse_;  // by index; empty when the field is too large to tabulate
};

/// Smallest x in [1, q) with x^2 = -1 mod q. Throws ValidationError unless q = 1 mod 4.
std::int64_t sqrt_minus_one(std::int64_t q);

using FinMat = std::array<Fe, 9>;
using MatKey = unsigned __int128;

struct MatKeyHash {
  std::size_t operator()(MatKey k) const noexcept {
    auto lo = static_cast<std::uint64_t>(k);
    auto hi = static_cast<std::uint64_t>(k >> 64);
    std::uint64_t h = lo * 0x9E3779B97F4A7C15ULL ^ (hi + 0x632BE59BD9B4E019ULL + (lo << 6) + (lo >> 2));
    h ^= h >> 31;
    return static_cast<std::size_t>(h * 0xBF58476D1CE4E5B9ULL);
  }
};

FinMat mat_mul(const FiniteField& f, const FinMat& x, const FinMat& y);
FinMat mat_adjoint(const FiniteField& f, const FinMat& x);
Fe mat_det(const FiniteField& f, const FinMat& x);
FinMat mat_identity(const FiniteField& f);
/// Scales so that the first nonzero entry (row-major) is 1.
FinMat canonical(const FiniteField& f, FinMat x);
/// Packs a matrix into 128 bits (base |F| digits). Requires |F|^9 < 2^128.
MatKey pack(const FiniteField& f, const FinMat& x);
FinMat unpack(const FiniteField& f, MatKey k);
bool packable(const FiniteField& f);

/// S_p mod q: reduction with i mapped per FiniteField, projectively canonicalized.
FinMat reduce_gate(const FiniteField& f, const Mat3& s);

/// Cube-residue symbol in the multiplicative group of f: 1 iff x is a cube.
/// Throws ValidationError for x = 0.
int cubic_residue(const FiniteField& f, Fe x);
/// (a/q)_3 for a rational integer a and prime q.
int cubic_residue(std::int64_t a, std::int64_t q);

enum class GroupKind { PSL, PGL, PSU, PU };

struct GroupPrediction {
  GroupKind kind = GroupKind::PSL;
  std::string label;  // e.g. "PSU_3(F_3)"
  bool tri_partite = false;
  /// The cube symbol evaluated when the table needs one, else empty.
  std::optional<int> symbol;
};

std::string group_label(GroupKind kind, std::int64_t q);
/// Group generated by S_p mod q, read off the case table in p mod 4, q mod 12 and the
/// symbols (p*pi/q)_3 or (p*pi/q^2)_3.
GroupPrediction predict_group(std::int64_t p, std::int64_t q);
/// Standard order formula for the named group over F_q.
Int group_order(GroupKind kind, std::int64_t q);

/// True iff every generator determinant lies in the cube class (the subgroup
/// PSL_3 / PSU_3 of the projective group).
bool det_class_test(const FiniteField& f, const std::vector<FinMat>& gens);

struct Closure {
  bool exceeded_cap = false;
  /// Sorted packed keys of the group elements (complete unless exceeded_cap).
  std::vector<MatKey> elements;
  std::size_t order() const { return elements.size(); }
};

/// Breadth-first closure of the generated group under right multiplication.
Closure closure(const FiniteField& f, const std::vector<FinMat>& gens, std::size_t cap = 10'000'000);

}  // namespace gu3
