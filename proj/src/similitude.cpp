#include "gu3/similitude.hpp"

#include "gu3/error.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace gu3 {

Mat3 identity3() { return scalar3(GaussInt(1)); }

Mat3 scalar3(const GaussInt& c) {
  Mat3 m;
  for (int k = 0; k < 3; ++k) m[4 * k] = c;
  return m;
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
  Mat3 c;
  for (int r = 0; r < 3; ++r) {
    for (int col = 0; col < 3; ++col) {
      GaussInt acc;
      for (int k = 0; k < 3; ++k) {
        const GaussInt& x = a[3 * r + k];
        const GaussInt& y = b[3 * k + col];
        if (x.is_zero() || y.is_zero()) continue;
        acc += x * y;
      }
      c[3 * r + col] = std::move(acc);
    }
  }
  return c;
}

Mat3 scale(const Mat3& a, const GaussInt& c) {
  Mat3 out;
  for (int k = 0; k < 9; ++k) out[k] = a[k] * c;
  return out;
}

Mat3 adjoint(const Mat3& a) {
  Mat3 out;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) out[3 * r + c] = a[3 * c + r].conj();
  }
  return out;
}

GaussInt det(const Mat3& a) {
  return a[0] * (a[4] * a[8] - a[5] * a[7]) - a[1] * (a[3] * a[8] - a[5] * a[6]) +
         a[2] * (a[3] * a[7] - a[4] * a[6]);
}

bool is_zero(const Mat3& a) {
  for (const auto& z : a) {
    if (!z.is_zero()) return false;
  }
  return true;
}

std::optional<GaussInt> as_scalar(const Mat3& a) {
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      if (r != c && !a[3 * r + c].is_zero()) return std::nullopt;
    }
  }
  if (a[0] != a[4] || a[0] != a[8]) return std::nullopt;
  return a[0];
}

int ord(const GaussInt& pi, const Mat3& a) {
  int best = std::numeric_limits<int>::max();
  for (const auto& z : a) {
    if (z.is_zero()) continue;
    best = std::min(best, ord(pi, z));
    if (best == 0) break;
  }
  if (best == std::numeric_limits<int>::max()) throw std::domain_error("ord of the zero matrix");
  return best;
}

SimilitudeMatrix::SimilitudeMatrix(Mat3 entries, std::int64_t p, int denom_exp)
    : entries_(std::move(entries)), p_(p), denom_exp_(denom_exp) {}

SimilitudeMatrix operator*(const SimilitudeMatrix& a, const SimilitudeMatrix& b) {
  if (a.p_ != b.p_ && a.p_ != 0 && b.p_ != 0) {
    throw ValidationError("product of similitude matrices over different primes");
  }
  return SimilitudeMatrix(a.entries_ * b.entries_, a.p_ != 0 ? a.p_ : b.p_,
                          a.denom_exp_ + b.denom_exp_);
}

SimilitudeMatrix adjoint(const SimilitudeMatrix& g) {
  return SimilitudeMatrix(adjoint(g.entries()), g.p(), g.denom_exp());
}

Int similitude_factor(const Mat3& a) {
  auto lambda = as_scalar(a * adjoint(a));
  if (!lambda) throw NotSimilitude("g g* is not a scalar matrix");
  if (!lambda->im().is_zero() || lambda->re().sign() <= 0) {
    throw NotSimilitude("similitude factor is not a positive rational");
  }
  return lambda->re();
}

Rational similitude_factor(const SimilitudeMatrix& g) {
  Int num = similitude_factor(g.entries());
  if (g.denom_exp() == 0) return Rational(num);
  if (g.p() == 0) throw ValidationError("denominator exponent without a prime");
  Int den = boost::multiprecision::pow(Int(g.p()), 2 * static_cast<unsigned>(std::abs(g.denom_exp())));
  if (g.denom_exp() > 0) return Rational(num, den);
  return Rational(num * den);
}

int level(const SimilitudeMatrix& g) {
  const std::int64_t p = g.p();
  if (p < 3) throw ValidationError("level requires an odd working prime");
  Int lambda = similitude_factor(g.entries());
  int ord_lambda = ord_int(p, lambda);
  auto pi = split_prime(p);
  if (!pi) return ord_lambda - 2 * ord(GaussInt(p), g.entries());
  return ord_lambda - ord(*pi, g.entries()) - ord(pi->conj(), g.entries());
}

int pi_height(const SimilitudeMatrix& g) {
  auto pi = split_prime(g.p());
  if (!pi) throw ValidationError("pi_height is defined only for split primes (p = 1 mod 4)");
  GaussInt d = det(g.entries());
  if (d.is_zero()) throw NotSimilitude("singular matrix has no pi-height");
  return ord(*pi, d) - 3 * ord(*pi, g.entries());
}

bool projective_equal(const Mat3& g, const Mat3& h) {
  if (is_zero(g) || is_zero(h)) return false;
  return as_scalar(g * adjoint(h)).has_value();
}

bool projective_equal(const SimilitudeMatrix& g, const SimilitudeMatrix& h) {
  return projective_equal(g.entries(), h.entries());
}

namespace {

constexpr std::int64_t kSmallLimit = std::int64_t{1} << 62;

void append_int(std::string& out, const Int& v) {
  if (v > -kSmallLimit && v < kSmallLimit) {
    auto x = static_cast<std::int64_t>(v);
    out.push_back('s');
    // Big-endian with the sign bit flipped so byte order matches numeric order.
    auto u = static_cast<std::uint64_t>(x) ^ (std::uint64_t{1} << 63);
    for (int b = 7; b >= 0; --b) out.push_back(static_cast<char>((u >> (8 * b)) & 0xff));
  } else {
    out.push_back('b');
    out += v.str();
    out.push_back(';');
  }
}

GaussInt content(const Mat3& g) {
  // N(content) divides every entry norm; a trivial integer gcd settles the common case.
  Int norm_gcd = 0;
  for (const auto& z : g) {
    if (z.is_zero()) continue;
    norm_gcd = boost::multiprecision::gcd(norm_gcd, z.norm());
    if (norm_gcd == 1) return GaussInt(1);
  }
  GaussInt c;
  for (const auto& z : g) {
    if (z.is_zero()) continue;
    c = gcd(c, z);
    if (c.is_unit()) return GaussInt(1);
  }
  return c;
}

}  // namespace

std::string encode_key(const Mat3& a) {
  std::string out;
  out.reserve(9 * 18);
  for (const auto& z : a) {
    append_int(out, z.re());
    append_int(out, z.im());
  }
  return out;
}

ProjElement canonicalize(const Mat3& g) {
  if (is_zero(g)) throw ValidationError("canonicalize: zero matrix has no projective class");
  ProjElement e;
  GaussInt c = content(g);
  if (c == GaussInt(1)) {
    e.matrix_ = g;
  } else {
    for (int k = 0; k < 9; ++k) e.matrix_[k] = *divide_exact(g[k], c);
  }
  for (const auto& z : e.matrix_) {
    if (z.is_zero()) continue;
    GaussInt u = normalize_associate(z).unit;
    if (u != GaussInt(1)) {
      for (auto& w : e.matrix_) w *= u;
    }
    break;
  }
  e.key_ = encode_key(e.matrix_);
  return e;
}

ProjElement canonicalize(const SimilitudeMatrix& g) { return canonicalize(g.entries()); }

nlohmann::json to_json(const SimilitudeMatrix& g) {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < 3; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < 3; ++c) row.push_back(g(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return {{"p", g.p()}, {"denom_exp", g.denom_exp()}, {"rows", std::move(rows)}};
}

SimilitudeMatrix similitude_from_json(const nlohmann::json& j) {
  try {
    Mat3 m;
    const auto& rows = j.at("rows");
    if (!rows.is_array() || rows.size() != 3) throw ValidationError("matrix JSON needs 3 rows");
    for (int r = 0; r < 3; ++r) {
      const auto& row = rows.at(r);
      if (!row.is_array() || row.size() != 3) throw ValidationError("matrix JSON rows need 3 entries");
      for (int c = 0; c < 3; ++c) m[3 * r + c] = GaussInt::parse(row.at(c).get<std::string>());
    }
    std::int64_t p = j.value("p", std::int64_t{0});
    int k = j.value("denom_exp", 0);
    return SimilitudeMatrix(std::move(m), p, k);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed matrix JSON: ") + e.what());
  }
}

}  // namespace gu3
