#include "gu3/navigation.hpp"

#include "gu3/error.hpp"

#include <algorithm>
#include <utility>

namespace gu3 {

namespace {

Int ipow(std::int64_t p, int e) {
  Int r = 1;
  for (int k = 0; k < e; ++k) r *= p;
  return r;
}

Int mod(const Int& a, const Int& m) {
  Int r = a % m;
  if (r.sign() < 0) r += m;
  return r;
}

/// Inverse of a p-adic unit modulo p^N.
Int inv_mod(const Int& u, std::int64_t p, int n) {
  const Int modulus = ipow(p, n);
  const Int phi = ipow(p, n - 1) * (p - 1);
  return boost::multiprecision::powm(mod(u, modulus), phi - 1, modulus);
}

int valuation(const Int& a, std::int64_t p, int n) {
  if (a.is_zero()) return n;
  return std::min(n, ord_int(p, a));
}

PadicScalar lift_root(std::int64_t p, int precision, std::int64_t root_mod_p) {
  if (precision < 1) throw ValidationError("p-adic precision must be >= 1");
  const Int modulus = ipow(p, precision);
  Int x = root_mod_p;
  for (int digits = 1; digits < precision; digits *= 2) {
    // Newton step x <- x - (x^2 + 1) / (2x); 2x is a unit since p is odd.
    x = mod(x - (x * x + 1) * inv_mod(2 * x, p, precision), modulus);
  }
  return {p, precision, mod(x, modulus)};
}

void require_split(std::int64_t p) {
  if (p < 3 || !is_prime(p)) throw ValidationError("p must be an odd prime, got " + std::to_string(p));
  if (p % 4 != 1) throw ValidationError("sqrt(-1) exists in Z_p only for p = 1 mod 4");
}

}  // namespace

PadicScalar hensel_sqrt_minus_one(std::int64_t p, int precision) {
  require_split(p);
  std::int64_t r = 1;
  while ((r * r + 1) % p != 0) ++r;
  return lift_root(p, precision, r);
}

PadicScalar uniformizer_sqrt_minus_one(std::int64_t p, int precision) {
  require_split(p);
  const GaussInt pi = *split_prime(p);
  // a + b x = 0 mod p
  const Int a = pi.re();
  const Int b = pi.im();
  const Int x = mod(-a * inv_mod(b, p, 1), Int(p));
  return lift_root(p, precision, static_cast<std::int64_t>(x));
}

std::array<Int, 9> IwasawaForm::matrix(std::int64_t p) const {
  return {ipow(p, m[0]), x, y, Int(0), ipow(p, m[1]), z, Int(0), Int(0), ipow(p, m[2])};
}

std::array<Int, 9> embed_padic(const Mat3& g, const PadicScalar& s) {
  const Int modulus = ipow(s.p, s.precision);
  std::array<Int, 9> out;
  for (int e = 0; e < 9; ++e) out[e] = mod(g[e].re() + g[e].im() * s.value, modulus);
  return out;
}

IwasawaForm iwasawa_form(const std::array<Int, 9>& g, std::int64_t p, int n) {
  const Int modulus = ipow(p, n);
  std::array<Int, 9> a;
  for (int e = 0; e < 9; ++e) a[e] = mod(g[e], modulus);
  auto at = [&](int r, int c) -> Int& { return a[3 * r + c]; };
  auto swap_cols = [&](int c1, int c2) {
    for (int r = 0; r < 3; ++r) std::swap(at(r, c1), at(r, c2));
  };
  auto scale_col = [&](int c, const Int& f) {
    for (int r = 0; r < 3; ++r) at(r, c) = mod(at(r, c) * f, modulus);
  };
  auto sub_col = [&](int dst, const Int& f, int src) {  // col dst -= f * col src
    for (int r = 0; r < 3; ++r) at(r, dst) = mod(at(r, dst) - f * at(r, src), modulus);
  };

  IwasawaForm out;
  for (int r = 2; r >= 0; --r) {
    int pivot = 0;
    int best = n;
    for (int c = 0; c <= r; ++c) {
      const int v = valuation(at(r, c), p, n);
      if (v < best) {
        best = v;
        pivot = c;
      }
    }
    if (best >= n) throw PrecisionExceeded("no pivot below p^" + std::to_string(n) + " in row " + std::to_string(r + 1));
    swap_cols(pivot, r);
    const Int pv = ipow(p, best);
    scale_col(r, inv_mod(at(r, r) / pv, p, n));
    for (int c = 0; c < r; ++c) sub_col(c, at(r, c) / pv, r);
    out.m[static_cast<std::size_t>(r)] = best;
  }
  const Int p1 = ipow(p, out.m[0]);
  const Int p2 = ipow(p, out.m[1]);
  sub_col(2, at(1, 2) / p2, 1);
  sub_col(1, at(0, 1) / p1, 0);
  sub_col(2, at(0, 2) / p1, 0);
  out.x = at(0, 1);
  out.y = at(0, 2);
  out.z = at(1, 2);
  return out;
}

ProjElement evaluate_word(const Word& word, const GateSet& gates) {
  Mat3 acc = identity3();
  for (const auto& letter : word) {
    if (letter.index < 0 || static_cast<std::size_t>(letter.index) >= gates.size()) {
      throw ValidationError("word letter index " + std::to_string(letter.index) + " out of range");
    }
    const Mat3& s = gates.lifts[static_cast<std::size_t>(letter.index)].entries();
    acc = canonicalize(acc * (letter.inverse ? adjoint(s) : s)).matrix();
  }
  return canonicalize(acc);
}

bool in_lattice(const ProjElement& g, std::int64_t p) {
  const Mat3& m = g.matrix();
  Int lambda;
  try {
    lambda = similitude_factor(m);
  } catch (const NotSimilitude&) {
    return false;
  }
  while (lambda % p == 0) lambda /= p;
  if (lambda != 1) return false;
  const Residue8 one = residue_2p2i(GaussInt(1));
  for (const GaussInt& u : {GaussInt(1), GaussInt(0, 1), GaussInt(-1), GaussInt(0, -1)}) {
    bool ok = true;
    for (int j = 0; j < 3 && ok; ++j) ok = residue_2p2i(u * m[4 * j]) == one;
    if (ok) return true;
  }
  return false;
}

Navigator::Navigator(GateSet gates) : gates_(std::move(gates)) {
  if (gates_.variant == Variant::Super) throw ValidationError("navigation over the super gate set is not supported");
  for (const auto& lift : gates_.lifts) adjoints_.push_back(adjoint(lift.entries()));
  if (gates_.variant == Variant::Split) {
    auto root = uniformizer_sqrt_minus_one(gates_.p, 4);
    for (const auto& e : gates_.elements) forms_.push_back(iwasawa_form(embed_padic(e.matrix(), root), gates_.p, 4));
    step_ = 1;
  } else {
    step_ = gates_.p % 4 == 1 ? 1 : 2;  // ord_p(p')
  }
}

int Navigator::measure(const Mat3& g) const {
  SimilitudeMatrix sm(g, gates_.p);
  return gates_.variant == Variant::Split ? pi_height(sm) : level(sm);
}

int Navigator::select_scan(const Mat3& g, int target) const {
  for (std::size_t s = 0; s < gates_.size(); ++s) {
    if (measure(canonicalize(adjoints_[s] * g).matrix()) == target) return static_cast<int>(s);
  }
  throw NotInLattice("no generator lowers the height; element is outside the lattice");
}

int Navigator::select_split(const Mat3& g, int h, NavigationTrace* trace) const {
  const std::int64_t p = gates_.p;
  int precision = h + 2;
  IwasawaForm b;
  for (int attempt = 0;; ++attempt) {
    try {
      b = iwasawa_form(embed_padic(g, uniformizer_sqrt_minus_one(p, precision)), p, precision);
      if (b.height() == h) break;
    } catch (const PrecisionExceeded&) {
      if (attempt >= 4) throw;
    }
    if (attempt >= 4) throw PrecisionExceeded("Iwasawa height disagrees with h_pi at precision " + std::to_string(precision));
    precision += h + 2;
    if (trace) ++trace->precision_raises;
  }
  int j = 2;
  while (b.m[static_cast<std::size_t>(j)] == 0) --j;
  const auto bg = b.matrix(p);
  int found = -1;
  int matches = 0;
  for (std::size_t s = 0; s < forms_.size(); ++s) {
    const auto bs = forms_[s].matrix(p);
    bool same = true;
    for (int c = 0; c < 3 && same; ++c) same = mod(bg[3 * j + c] - bs[3 * j + c], Int(p)).is_zero();
    if (same) {
      found = static_cast<int>(s);
      ++matches;
    }
  }
  if (matches == 1 && measure(canonicalize(adjoints_[static_cast<std::size_t>(found)] * g).matrix()) == h - 1) {
    return found;
  }
  if (trace) ++trace->fallback_steps;
  return select_scan(g, h - 1);
}

Word Navigator::navigate(const ProjElement& g, NavigationTrace* trace) const {
  if (!in_lattice(g, gates_.p)) throw NotInLattice("element is not in the lattice generated by S_p");
  Mat3 cur = g.matrix();
  int m = measure(cur);
  if (m % step_ != 0) throw NotInLattice("level is not a multiple of the generator level");
  Word word;
  while (m > 0) {
    const int s = gates_.variant == Variant::Split ? select_split(cur, m, trace) : select_scan(cur, m - step_);
    word.push_back({s, false});
    cur = canonicalize(adjoints_[static_cast<std::size_t>(s)] * cur).matrix();
    m -= step_;
    if (trace) ++trace->steps;
  }
  if (!(canonicalize(cur) == canonicalize(identity3()))) {
    throw NotInLattice("descent ended at a non-identity element of height 0");
  }
  return word;
}

Word navigate(const ProjElement& g, const GateSet& gates, NavigationTrace* trace) {
  return Navigator(gates).navigate(g, trace);
}

}  // namespace gu3
