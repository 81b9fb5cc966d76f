#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <concepts>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace gu3 {

using Int = boost::multiprecision::cpp_int;

/// Gaussian integer re + im*i with arbitrary-precision components.
class GaussInt {
 public:
  GaussInt() = default;
  GaussInt(Int re, Int im = 0) : re_(std::move(re)), im_(std::move(im)) {}
  template <std::integral T>
  GaussInt(T re, T im = 0) : re_(re), im_(im) {}

  const Int& re() const { return re_; }
  const Int& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_unit() const { return norm() == 1; }

  Int norm() const { return re_ * re_ + im_ * im_; }
  GaussInt conj() const { return {re_, -im_}; }

  GaussInt operator-() const { return {-re_, -im_}; }
  GaussInt& operator+=(const GaussInt& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussInt& operator-=(const GaussInt& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussInt& operator*=(const GaussInt& o);

  friend GaussInt operator+(GaussInt a, const GaussInt& b) { return a += b; }
  friend GaussInt operator-(GaussInt a, const GaussInt& b) { return a -= b; }
  friend GaussInt operator*(GaussInt a, const GaussInt& b) { return a *= b; }
  friend bool operator==(const GaussInt&, const GaussInt&) = default;

  /// "a+bi" / "a-bi" with decimal components.
  std::string to_string() const;
  static GaussInt parse(std::string_view text);

 private:
  Int re_;
  Int im_;
};

std::ostream& operator<<(std::ostream& os, const GaussInt& z);

inline Int norm(const GaussInt& z) { return z.norm(); }
inline GaussInt conj(const GaussInt& z) { return z.conj(); }

/// a / b when b divides a exactly in Z[i].
std::optional<GaussInt> divide_exact(const GaussInt& a, const GaussInt& b);
bool divides(const GaussInt& d, const GaussInt& a);

/// Remainder of a modulo b with the nearest-integer quotient; norm(r) <= norm(b)/2.
GaussInt mod_nearest(const GaussInt& a, const GaussInt& b);
GaussInt gcd(GaussInt a, GaussInt b);

/// The associate of z lying in the quadrant re > 0, im >= 0 (z itself when zero),
/// together with the unit u such that associate = u * z.
struct Associate {
  GaussInt value;
  GaussInt unit;
};
Associate normalize_associate(const GaussInt& z);

/// Residue class modulo 2+2i. Z[i]/(2+2i) has 8 elements.
struct Residue8 {
  int class_id = 0;  // 0..7
  friend bool operator==(const Residue8&, const Residue8&) = default;
};

Residue8 residue_2p2i(const GaussInt& z);

bool is_prime(std::int64_t n);

/// For p = 1 mod 4 the canonical factor pi = a+bi of p with a > b > 0;
/// std::nullopt for p = 3 mod 4 (p stays prime in Z[i]).
/// Throws ValidationError for even or composite p.
std::optional<GaussInt> split_prime(std::int64_t p);

/// The fixed prime of Z[i] above p: the split factor, or p itself when inert.
GaussInt prime_above(std::int64_t p);

/// Exact valuation of alpha at the Gaussian prime pi. Throws std::domain_error for alpha = 0.
int ord(const GaussInt& pi, const GaussInt& alpha);

/// Exact p-adic valuation of a rational integer (n != 0).
int ord_int(std::int64_t p, const Int& n);

}  // namespace gu3
