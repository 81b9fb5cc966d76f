#include "gu3/finite_field.hpp"

#include "gu3/error.hpp"
#include "gu3/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

namespace gu3 {

namespace {

std::uint32_t mod_u(const Int& n, std::int64_t q) {
  Int r = n % q;
  if (r.sign() < 0) r += q;
  return static_cast<std::uint32_t>(r);
}

void validate_field_prime(std::int64_t q) {
  if (q < 3 || !is_prime(q)) throw ValidationError("q must be an odd prime, got " + std::to_string(q));
}

}  // namespace

std::int64_t sqrt_minus_one(std::int64_t q) {
  validate_field_prime(q);
  if (q % 4 != 1) throw ValidationError("sqrt(-1) exists in F_q only for q = 1 mod 4");
  for (std::int64_t x = 1; x < q; ++x) {
    if ((x * x + 1) % q == 0) return x;
  }
  throw std::logic_error("sqrt_minus_one: no root found");
}

FiniteField::FiniteField(std::int64_t q) : q_(q), extension_(q % 4 == 3) {
  validate_field_prime(q);
  if (q > 46340) throw ValidationError("q too large for 32-bit field arithmetic");
  iota_ = extension_ ? Fe{0, 1} : Fe{static_cast<std::uint32_t>(sqrt_minus_one(q)), 0};
  if (size() <= (1 << 20)) {
    inverse_.assign(static_cast<std::size_t>(size()), zero());
    for (std::uint32_t k = 1; k < static_cast<std::uint32_t>(size()); ++k) {
      Fe x = from_index(k);
      inverse_[k] = pow(x, static_cast<std::uint64_t>(size() - 2));
    }
  }
}

Fe FiniteField::from_int(const Int& n) const { return {mod_u(n, q_), 0}; }

Fe FiniteField::reduce(const GaussInt& z) const {
  return add(from_int(z.re()), mul(from_int(z.im()), iota_));
}

Fe FiniteField::add(Fe x, Fe y) const {
  auto q = static_cast<std::uint32_t>(q_);
  return {(x.a + y.a) % q, (x.b + y.b) % q};
}

Fe FiniteField::neg(Fe x) const {
  auto q = static_cast<std::uint32_t>(q_);
  return {(q - x.a) % q, (q - x.b) % q};
}

Fe FiniteField::sub(Fe x, Fe y) const { return add(x, neg(y)); }

Fe FiniteField::mul(Fe x, Fe y) const {
  const auto q = static_cast<std::uint64_t>(q_);
  if (!extension_) return {static_cast<std::uint32_t>(std::uint64_t{x.a} * y.a % q), 0};
  // (a + bw)(c + dw) = (ac - bd) + (ad + bc)w
  std::uint64_t ac = std::uint64_t{x.a} * y.a % q;
  std::uint64_t bd = std::uint64_t{x.b} * y.b % q;
  std::uint64_t ad = std::uint64_t{x.a} * y.b % q;
  std::uint64_t bc = std::uint64_t{x.b} * y.a % q;
  return {static_cast<std::uint32_t>((ac + q - bd) % q), static_cast<std::uint32_t>((ad + bc) % q)};
}

Fe FiniteField::pow(Fe x, std::uint64_t e) const {
  Fe r = one();
  while (e > 0) {
    if (e & 1) r = mul(r, x);
    x = mul(x, x);
    e >>= 1;
  }
  return r;
}

Fe FiniteField::inv(Fe x) const {
  if (is_zero(x)) throw std::domain_error("inverse of zero in finite field");
  if (!inverse_.empty()) return inverse_[index(x)];
  return pow(x, static_cast<std::uint64_t>(size() - 2));
}

Fe FiniteField::frobenius(Fe x) const {
  if (!extension_) return x;
  auto q = static_cast<std::uint32_t>(q_);
  return {x.a, (q - x.b) % q};
}

Fe FiniteField::from_index(std::uint32_t k) const {
  auto q = static_cast<std::uint32_t>(q_);
  return {k % q, k / q};
}

FinMat mat_mul(const FiniteField& f, const FinMat& x, const FinMat& y) {
  FinMat z;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      Fe acc = f.zero();
      for (int k = 0; k < 3; ++k) acc = f.add(acc, f.mul(x[3 * r + k], y[3 * k + c]));
      z[3 * r + c] = acc;
    }
  }
  return z;
}

FinMat mat_adjoint(const FiniteField& f, const FinMat& x) {
  FinMat z;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) z[3 * r + c] = f.frobenius(x[3 * c + r]);
  }
  return z;
}

Fe mat_det(const FiniteField& f, const FinMat& a) {
  auto m = [&](Fe x, Fe y) { return f.mul(x, y); };
  Fe t0 = m(a[0], f.sub(m(a[4], a[8]), m(a[5], a[7])));
  Fe t1 = m(a[1], f.sub(m(a[3], a[8]), m(a[5], a[6])));
  Fe t2 = m(a[2], f.sub(m(a[3], a[7]), m(a[4], a[6])));
  return f.add(f.sub(t0, t1), t2);
}

FinMat mat_identity(const FiniteField& f) {
  FinMat z;
  z.fill(f.zero());
  z[0] = z[4] = z[8] = f.one();
  return z;
}

FinMat canonical(const FiniteField& f, FinMat x) {
  for (const Fe& e : x) {
    if (f.is_zero(e)) continue;
    if (e == f.one()) return x;
    Fe s = f.inv(e);
    for (Fe& y : x) y = f.mul(y, s);
    return x;
  }
  throw ValidationError("zero matrix has no projective class");
}

bool packable(const FiniteField& f) {
  // |F|^9 < 2^128  <=>  9 log2|F| < 128
  long double bits = 9.0L * std::log2(static_cast<long double>(f.size()));
  return bits < 127.0L;
}

MatKey pack(const FiniteField& f, const FinMat& x) {
  const auto base = static_cast<MatKey>(f.size());
  MatKey k = 0;
  for (int e = 8; e >= 0; --e) k = k * base + f.index(x[e]);
  return k;
}

FinMat unpack(const FiniteField& f, MatKey k) {
  const auto base = static_cast<MatKey>(f.size());
  FinMat x;
  for (int e = 0; e < 9; ++e) {
    x[e] = f.from_index(static_cast<std::uint32_t>(k % base));
    k /= base;
  }
  return x;
}

FinMat reduce_gate(const FiniteField& f, const Mat3& s) {
  FinMat x;
  for (int e = 0; e < 9; ++e) x[e] = f.reduce(s[e]);
  return canonical(f, x);
}

int cubic_residue(const FiniteField& f, Fe x) {
  if (f.is_zero(x)) throw ValidationError("cubic residue symbol of zero");
  const std::int64_t n = f.size() - 1;
  if (n % 3 != 0) return 1;
  return f.pow(x, static_cast<std::uint64_t>(n / 3)) == f.one() ? 1 : -1;
}

int cubic_residue(std::int64_t a, std::int64_t q) {
  validate_field_prime(q);
  std::int64_t r = ((a % q) + q) % q;
  if (r == 0) throw ValidationError("cubic residue symbol of zero");
  if ((q - 1) % 3 != 0) return 1;
  std::int64_t acc = 1;
  std::int64_t base = r;
  for (std::int64_t e = (q - 1) / 3; e > 0; e >>= 1) {
    if (e & 1) acc = acc * base % q;
    base = base * base % q;
  }
  return acc == 1 ? 1 : -1;
}

std::string group_label(GroupKind kind, std::int64_t q) {
  const char* name = "";
  switch (kind) {
    case GroupKind::PSL: name = "PSL"; break;
    case GroupKind::PGL: name = "PGL"; break;
    case GroupKind::PSU: name = "PSU"; break;
    case GroupKind::PU: name = "PU"; break;
  }
  return std::string(name) + "_3(F_" + std::to_string(q) + ")";
}

GroupPrediction predict_group(std::int64_t p, std::int64_t q) {
  validate_field_prime(p);
  validate_field_prime(q);
  if (p == q) throw ValidationError("p and q must be distinct");
  GroupPrediction g;
  if (p % 4 == 3) {
    g.kind = q % 4 == 1 ? GroupKind::PSL : GroupKind::PSU;
  } else {
    const GaussInt pi = *split_prime(p);
    const GaussInt p_pi = GaussInt(p) * pi;
    switch (q % 12) {
      case 1: {
        FiniteField f(q);
        g.symbol = cubic_residue(f, f.reduce(p_pi));
        g.kind = *g.symbol == 1 ? GroupKind::PSL : GroupKind::PGL;
        break;
      }
      case 5: g.kind = GroupKind::PSL; break;
      case 3:
      case 7: g.kind = GroupKind::PSU; break;
      case 11: {
        FiniteField f(q);  // F_{q^2}
        g.symbol = cubic_residue(f, f.reduce(p_pi));
        g.kind = *g.symbol == 1 ? GroupKind::PSU : GroupKind::PU;
        break;
      }
      default: throw std::logic_error("predict_group: impossible residue of q mod 12");
    }
  }
  g.tri_partite = g.kind == GroupKind::PGL || g.kind == GroupKind::PU;
  g.label = group_label(g.kind, q);
  return g;
}

Int group_order(GroupKind kind, std::int64_t q) {
  const Int Q(q);
  const Int q3 = Q * Q * Q;
  switch (kind) {
    case GroupKind::PGL: return q3 * (q3 - 1) * (Q * Q - 1);
    case GroupKind::PSL: return q3 * (q3 - 1) * (Q * Q - 1) / std::gcd<std::int64_t>(3, q - 1);
    case GroupKind::PU: return q3 * (q3 + 1) * (Q * Q - 1);
    case GroupKind::PSU: return q3 * (q3 + 1) * (Q * Q - 1) / std::gcd<std::int64_t>(3, q + 1);
  }
  return 0;
}

bool det_class_test(const FiniteField& f, const std::vector<FinMat>& gens) {
  const std::int64_t q = f.q();
  if (!f.is_extension()) {
    // PGL_3 / PSL_3 = F_q^x / cubes
    if ((q - 1) % 3 != 0) return true;
    for (const auto& m : gens) {
      if (f.pow(mat_det(f, m), static_cast<std::uint64_t>((q - 1) / 3)) != f.one()) return false;
    }
    return true;
  }
  // PU_3 / PSU_3 = U_1 / U_1^3. For M M* = lambda I, scaling by c with N(c) = 1/lambda
  // lands in U_3, and det(cM)^((q+1)/3) = det(M)^((q+1)/3) / lambda.
  if ((q + 1) % 3 != 0) return true;
  for (const auto& m : gens) {
    FinMat mm = mat_mul(f, m, mat_adjoint(f, m));
    Fe lambda = mm[0];
    if (f.is_zero(lambda) || lambda.b != 0 || mm[4] != lambda || mm[8] != lambda) {
      throw NotSimilitude("reduced generator is not a unitary similitude");
    }
    if (f.pow(mat_det(f, m), static_cast<std::uint64_t>((q + 1) / 3)) != lambda) return false;
  }
  return true;
}

Closure closure(const FiniteField& f, const std::vector<FinMat>& gens, std::size_t cap) {
  if (!packable(f)) throw ResourceLimit("field too large for packed 128-bit matrix keys");
  Closure out;
  std::unordered_set<MatKey, MatKeyHash> seen;
  std::vector<FinMat> frontier{mat_identity(f)};
  seen.insert(pack(f, frontier.front()));
  std::vector<FinMat> canon_gens;
  for (const auto& g : gens) canon_gens.push_back(canonical(f, g));

  while (!frontier.empty()) {
    std::vector<FinMat> next;
    constexpr std::size_t kChunk = 1 << 14;
    for (std::size_t start = 0; start < frontier.size(); start += kChunk) {
      const std::size_t stop = std::min(frontier.size(), start + kChunk);
      std::vector<FinMat> products((stop - start) * canon_gens.size());
      parallel_for(stop - start, [&](std::size_t b, std::size_t e) {
        for (std::size_t k = b; k < e; ++k) {
          for (std::size_t s = 0; s < canon_gens.size(); ++s) {
            products[k * canon_gens.size() + s] =
                canonical(f, mat_mul(f, frontier[start + k], canon_gens[s]));
          }
        }
      });
      for (const auto& m : products) {
        if (seen.insert(pack(f, m)).second) {
          if (seen.size() > cap) {
            out.exceeded_cap = true;
            out.elements.assign(seen.begin(), seen.end());
            std::sort(out.elements.begin(), out.elements.end());
            return out;
          }
          next.push_back(m);
        }
      }
    }
    frontier = std::move(next);
  }
  out.elements.assign(seen.begin(), seen.end());
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

}  // namespace gu3
