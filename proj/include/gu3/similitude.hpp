#pragma once

#include "gu3/gaussian.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include <array>
#include <cstdint>
#include <functional>
#include <string>

namespace gu3 {

using Rational = boost::multiprecision::cpp_rational;

/// Row-major 3x3 matrix over Z[i].
using Mat3 = std::array<GaussInt, 9>;

Mat3 identity3();
Mat3 scalar3(const GaussInt& c);
Mat3 operator*(const Mat3& a, const Mat3& b);
Mat3 scale(const Mat3& a, const GaussInt& c);
/// Conjugate transpose.
Mat3 adjoint(const Mat3& a);
GaussInt det(const Mat3& a);
bool is_zero(const Mat3& a);
/// Returns the scalar c when a = c*I.
std::optional<GaussInt> as_scalar(const Mat3& a);
/// min over nonzero entries of ord_pi; throws std::domain_error on the zero matrix.
int ord(const GaussInt& pi, const Mat3& a);

/// A 3x3 matrix g = entries / p^denom_exp over Z[i, 1/p] with g g* = lambda I.
class SimilitudeMatrix {
 public:
  SimilitudeMatrix() : entries_(identity3()) {}
  SimilitudeMatrix(Mat3 entries, std::int64_t p, int denom_exp = 0);

  const Mat3& entries() const { return entries_; }
  std::int64_t p() const { return p_; }
  int denom_exp() const { return denom_exp_; }

  const GaussInt& operator()(int r, int c) const { return entries_[3 * r + c]; }

  friend SimilitudeMatrix operator*(const SimilitudeMatrix& a, const SimilitudeMatrix& b);

 private:
  Mat3 entries_;
  std::int64_t p_ = 0;
  int denom_exp_ = 0;
};

SimilitudeMatrix adjoint(const SimilitudeMatrix& g);

/// lambda with g g* = lambda I. Throws NotSimilitude otherwise, including when
/// lambda is not a positive rational.
Rational similitude_factor(const SimilitudeMatrix& g);
/// Integer similitude factor of the numerator matrix (entries * entries*).
Int similitude_factor(const Mat3& a);

/// l(g) = ord_p(g g*) - ord_pi(g) - ord_pibar(g). Projectively invariant.
int level(const SimilitudeMatrix& g);
/// h_pi(g) = ord_pi(det g) - 3 ord_pi(g), for split p only (throws ValidationError for inert p).
int pi_height(const SimilitudeMatrix& g);

/// g * h* is scalar.
bool projective_equal(const SimilitudeMatrix& g, const SimilitudeMatrix& h);
bool projective_equal(const Mat3& g, const Mat3& h);

/// Canonical representative of a matrix modulo Z[i, 1/p]^x scalars: the content
/// (gcd of entries) is divided out and the first nonzero entry is rotated into the
/// quadrant re > 0, im >= 0.
class ProjElement {
 public:
  ProjElement() = default;

  const Mat3& matrix() const { return matrix_; }
  const std::string& key() const { return key_; }

  friend bool operator==(const ProjElement& a, const ProjElement& b) { return a.key_ == b.key_; }
  friend bool operator<(const ProjElement& a, const ProjElement& b) { return a.key_ < b.key_; }

 private:
  friend ProjElement canonicalize(const Mat3& g);
  Mat3 matrix_;
  std::string key_;
};

/// Throws ValidationError on the zero matrix.
ProjElement canonicalize(const Mat3& g);
ProjElement canonicalize(const SimilitudeMatrix& g);

/// Deterministic byte encoding of a matrix (used as canonical key).
std::string encode_key(const Mat3& a);

/// {"p": int, "denom_exp": int, "rows": [["a+bi", ...] x3]}
nlohmann::json to_json(const SimilitudeMatrix& g);
SimilitudeMatrix similitude_from_json(const nlohmann::json& j);

}  // namespace gu3

template <>
struct std::hash<gu3::ProjElement> {
  std::size_t operator()(const gu3::ProjElement& e) const noexcept {
    return std::hash<std::string>{}(e.key());
  }
};
