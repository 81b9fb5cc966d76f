#include "gu3/gaussian.hpp"

#include "gu3/error.hpp"

#include <charconv>
#include <stdexcept>

namespace gu3 {

namespace {

// floor(a / b) for b > 0; cpp_int division truncates toward zero.
Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (a.sign() < 0 && q * b != a) --q;
  return q;
}

Int round_div(const Int& a, const Int& b) { return floor_div(2 * a + b, 2 * b); }

Int parse_int(std::string_view s) {
  if (s.empty()) throw ValidationError("empty integer in Gaussian integer literal");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw ValidationError("bad integer '" + std::string(s) + "'");
  for (std::size_t k = start; k < s.size(); ++k) {
    if (s[k] < '0' || s[k] > '9') throw ValidationError("bad integer '" + std::string(s) + "'");
  }
  Int v(std::string(s.substr(start)));
  return s[0] == '-' ? Int(-v) : v;
}

}  // namespace

GaussInt& GaussInt::operator*=(const GaussInt& o) {
  Int r = re_ * o.re_ - im_ * o.im_;
  im_ = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  return *this;
}

std::string GaussInt::to_string() const {
  std::string out = re_.str();
  if (im_.sign() < 0) {
    out += '-';
    out += Int(-im_).str();
  } else {
    out += '+';
    out += im_.str();
  }
  out += 'i';
  return out;
}

GaussInt GaussInt::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c != ' ') s.push_back(c);
  }
  if (s.empty()) throw ValidationError("empty Gaussian integer literal");
  if (s.back() != 'i') return {parse_int(s), Int(0)};
  // Split at the last sign that is not the leading one.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size() - 1; k > 0; --k) {
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  }
  std::string_view body(s.data(), s.size() - 1);
  if (split == std::string::npos) {
    // pure imaginary: "bi", "-i", "i"
    if (body.empty() || body == "+") return {Int(0), Int(1)};
    if (body == "-") return {Int(0), Int(-1)};
    return {Int(0), parse_int(body)};
  }
  std::string_view re_part = body.substr(0, split);
  std::string_view im_part = body.substr(split);
  Int im;
  if (im_part == "+") {
    im = 1;
  } else if (im_part == "-") {
    im = -1;
  } else {
    im = parse_int(im_part);
  }
  return {parse_int(re_part), im};
}

std::ostream& operator<<(std::ostream& os, const GaussInt& z) { return os << z.to_string(); }

std::optional<GaussInt> divide_exact(const GaussInt& a, const GaussInt& b) {
  if (b.is_zero()) throw std::domain_error("division by zero Gaussian integer");
  Int n = b.norm();
  GaussInt num = a * b.conj();
  if (n == 1) return num;
  Int qr, rr, qi, ri;
  divide_qr(num.re(), n, qr, rr);
  if (!rr.is_zero()) return std::nullopt;
  divide_qr(num.im(), n, qi, ri);
  if (!ri.is_zero()) return std::nullopt;
  return GaussInt(std::move(qr), std::move(qi));
}

bool divides(const GaussInt& d, const GaussInt& a) { return divide_exact(a, d).has_value(); }

GaussInt mod_nearest(const GaussInt& a, const GaussInt& b) {
  Int n = b.norm();
  GaussInt num = a * b.conj();
  GaussInt q(round_div(num.re(), n), round_div(num.im(), n));
  return a - q * b;
}

GaussInt gcd(GaussInt a, GaussInt b) {
  while (!b.is_zero()) {
    GaussInt r = mod_nearest(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Associate normalize_associate(const GaussInt& z) {
  if (z.is_zero()) return {z, GaussInt(1)};
  // Rotate by i until re > 0 and im >= 0.
  GaussInt unit(1);
  GaussInt v = z;
  const GaussInt i(0, 1);
  for (int k = 0; k < 4; ++k) {
    if (v.re().sign() > 0 && v.im().sign() >= 0) return {v, unit};
    v *= i;
    unit *= i;
  }
  throw std::logic_error("normalize_associate: no associate in first quadrant");
}

Residue8 residue_2p2i(const GaussInt& z) {
  // 2i = -2 and 4 = 0 modulo 2+2i, so a+bi = (a - 2k) + b0*i with b = 2k + b0.
  Int k = floor_div(z.im(), Int(2));
  Int b0 = z.im() - 2 * k;
  Int a = z.re() - 2 * k;
  Int a4 = a - 4 * floor_div(a, Int(4));
  return {static_cast<int>(a4) * 2 + static_cast<int>(b0)};
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<GaussInt> split_prime(std::int64_t p) {
  if (p % 2 == 0 || !is_prime(p)) {
    throw ValidationError("split_prime: " + std::to_string(p) + " is not an odd prime");
  }
  if (p % 4 == 3) return std::nullopt;
  for (std::int64_t a = 1; a * a < p; ++a) {
    std::int64_t b2 = p - a * a;
    std::int64_t b = 0;
    while ((b + 1) * (b + 1) <= b2) ++b;
    if (b * b == b2) {
      std::int64_t hi = std::max(a, b);
      std::int64_t lo = std::min(a, b);
      return GaussInt(hi, lo);
    }
  }
  throw std::logic_error("split_prime: no two-square decomposition for p = 1 mod 4");
}

GaussInt prime_above(std::int64_t p) {
  auto pi = split_prime(p);
  return pi ? *pi : GaussInt(p);
}

int ord(const GaussInt& pi, const GaussInt& alpha) {
  if (alpha.is_zero()) throw std::domain_error("ord: valuation of zero is undefined");
  if (pi.is_unit() || pi.is_zero()) throw std::domain_error("ord: pi must be a non-unit prime");
  int k = 0;
  GaussInt a = alpha;
  while (auto q = divide_exact(a, pi)) {
    a = std::move(*q);
    ++k;
  }
  return k;
}

int ord_int(std::int64_t p, const Int& n) {
  if (n.is_zero()) throw std::domain_error("ord_int: valuation of zero is undefined");
  int k = 0;
  Int v = n;
  Int q, r;
  for (;;) {
    divide_qr(v, Int(p), q, r);
    if (!r.is_zero()) return k;
    v = q;
    ++k;
  }
}

}  // namespace gu3
