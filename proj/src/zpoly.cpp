#include "zpoly.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>

namespace qgr::detail {

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void trim(ZPoly2& p) {
  for (auto& row : p) trim(row);
  while (!p.empty() && p.back().empty()) p.pop_back();
}

int degree(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }
int degree(const ZPoly2& p) { return static_cast<int>(p.size()) - 1; }

ZPoly add(const ZPoly& a, const ZPoly& b) {
  ZPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  trim(out);
  return out;
}

ZPoly sub(const ZPoly& a, const ZPoly& b) {
  ZPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

ZPoly scale(const ZPoly& a, const mpz_class& c) {
  if (c == 0) return {};
  ZPoly out(a);
  for (auto& x : out) x *= c;
  return out;
}

mpz_class content(const ZPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

namespace {

ZPoly divexact_scalar(const ZPoly& a, const mpz_class& c) {
  ZPoly out(a);
  for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return out;
}

ZPoly primitive(const ZPoly& p) {
  if (p.empty()) return p;
  mpz_class c = content(p);
  if (p.back() < 0) c = -c;
  return c == 1 ? p : divexact_scalar(p, c);
}

// Pseudo-remainder of a by b over Z.
ZPoly prem(ZPoly a, const ZPoly& b) {
  const int db = degree(b);
  const mpz_class& lb = b.back();
  int steps = degree(a) - db + 1;
  while (!a.empty() && degree(a) >= db) {
    const int shift = degree(a) - db;
    mpz_class la = a.back();
    for (auto& x : a) x *= lb;
    for (int i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    trim(a);
    --steps;
  }
  if (steps > 0 && !a.empty()) {
    mpz_class f;
    mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(steps));
    for (auto& x : a) x *= f;
  }
  return a;
}

}  // namespace

std::optional<ZPoly> divexact(const ZPoly& a, const ZPoly& b) {
  if (b.empty()) return std::nullopt;
  if (a.empty()) return ZPoly{};
  if (degree(a) < degree(b)) return std::nullopt;
  ZPoly r(a);
  ZPoly q(a.size() - b.size() + 1);
  const mpz_class& lb = b.back();
  while (!r.empty() && degree(r) >= degree(b)) {
    const int shift = degree(r) - degree(b);
    if (!mpz_divisible_p(r.back().get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    mpz_class c;
    mpz_divexact(c.get_mpz_t(), r.back().get_mpz_t(), lb.get_mpz_t());
    q[shift] = c;
    for (int i = 0; i <= degree(b); ++i) r[i + shift] -= c * b[i];
    trim(r);
  }
  if (!r.empty()) return std::nullopt;
  trim(q);
  return q;
}

ZPoly gcd(const ZPoly& a, const ZPoly& b) {
  if (a.empty()) return primitive_sign(b);
  if (b.empty()) return primitive_sign(a);
  mpz_class c;
  {
    mpz_class ca = content(a), cb = content(b);
    mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  }
  ZPoly x = primitive(a), y = primitive(b);
  if (degree(x) < degree(y)) std::swap(x, y);
  while (!y.empty()) {
    if (degree(y) == 0) {
      x = ZPoly{1};
      break;
    }
    ZPoly rem = prem(x, y);
    x = std::move(y);
    y = primitive(rem);
  }
  x = primitive(x);
  return scale(x, c);
}

ZPoly primitive_sign(const ZPoly& p) {
  ZPoly out(p);
  if (!out.empty() && out.back() < 0)
    for (auto& x : out) x = -x;
  return out;
}

// ---------------------------------------------------------------------------
// Bivariate.

namespace {

ZPoly2 add_shifted_mul(ZPoly2 acc, const ZPoly& c, int shift, const ZPoly2& b, bool subtract) {
  if (acc.size() < b.size() + shift) acc.resize(b.size() + shift);
  for (std::size_t i = 0; i < b.size(); ++i) {
    ZPoly t = mul(c, b[i]);
    acc[i + shift] = subtract ? sub(acc[i + shift], t) : add(acc[i + shift], t);
  }
  trim(acc);
  return acc;
}

ZPoly content_v(const ZPoly2& p) {
  ZPoly g;
  for (const auto& row : p) {
    g = gcd(g, row);
    if (degree(g) == 0 && g[0] == 1) break;
  }
  return g;
}

ZPoly2 divexact_rows(const ZPoly2& p, const ZPoly& c) {
  ZPoly2 out;
  out.reserve(p.size());
  for (const auto& row : p) out.push_back(*divexact(row, c));
  return out;
}

ZPoly2 prem(ZPoly2 a, const ZPoly2& b) {
  const int db = degree(b);
  const ZPoly& lb = b.back();
  int steps = degree(a) - db + 1;
  while (!a.empty() && degree(a) >= db) {
    const int shift = degree(a) - db;
    ZPoly la = a.back();
    for (auto& row : a) row = mul(row, lb);
    a = add_shifted_mul(std::move(a), la, shift, b, true);
    --steps;
  }
  for (; steps > 0 && !a.empty(); --steps)
    for (auto& row : a) row = mul(row, lb);
  return a;
}

// ---- modular filter ------------------------------------------------------

constexpr std::uint64_t kPrime = 2147483629ULL;  // < 2^31

std::uint64_t mod_of(const mpz_class& x) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), kPrime);
  return r.get_ui();
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  b %= kPrime;
  while (e) {
    if (e & 1) r = r * b % kPrime;
    b = b * b % kPrime;
    e >>= 1;
  }
  return r;
}

using ModPoly = std::vector<std::uint64_t>;

void trim(ModPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

ModPoly image(const ZPoly2& p, std::uint64_t v0) {
  ModPoly out(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = p[i].size(); j-- > 0;) acc = (acc * v0 + mod_of(p[i][j])) % kPrime;
    out[i] = acc;
  }
  return out;
}

int mod_gcd_degree(ModPoly a, ModPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    const std::uint64_t inv = powmod(b.back(), kPrime - 2);
    while (!a.empty() && a.size() >= b.size()) {
      const std::uint64_t f = a.back() * inv % kPrime;
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i)
        a[i + shift] = (a[i + shift] + kPrime - f * b[i] % kPrime) % kPrime;
      trim(a);
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

// True when the gcd of a and b provably has degree 0 in the main variable.
bool coprime_in_main_variable(const ZPoly2& a, const ZPoly2& b) {
  for (std::uint64_t v0 : {1234577ULL, 7654321ULL}) {
    ModPoly ia = image(a, v0), ib = image(b, v0);
    if (ia.empty() || ib.empty() || ia.back() == 0 || ib.back() == 0) continue;
    if (mod_gcd_degree(ia, ib) == 0) return true;
  }
  return false;
}

}  // namespace

ZPoly2 mul(const ZPoly2& a, const ZPoly2& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly2 out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].empty()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = add(out[i + j], mul(a[i], b[j]));
  }
  trim(out);
  return out;
}

std::optional<ZPoly2> divexact(const ZPoly2& a, const ZPoly2& b) {
  if (b.empty()) return std::nullopt;
  if (a.empty()) return ZPoly2{};
  if (degree(a) < degree(b)) return std::nullopt;
  ZPoly2 r(a);
  ZPoly2 q(a.size() - b.size() + 1);
  while (!r.empty() && degree(r) >= degree(b)) {
    const int shift = degree(r) - degree(b);
    auto c = divexact(r.back(), b.back());
    if (!c) return std::nullopt;
    q[shift] = *c;
    r = add_shifted_mul(std::move(r), *c, shift, b, true);
  }
  if (!r.empty()) return std::nullopt;
  trim(q);
  return q;
}

ZPoly2 gcd(const ZPoly2& a, const ZPoly2& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  ZPoly ca = content_v(a), cb = content_v(b);
  ZPoly c = gcd(ca, cb);
  ZPoly2 x = divexact_rows(a, ca), y = divexact_rows(b, cb);
  if (degree(x) == 0 || degree(y) == 0 || coprime_in_main_variable(x, y)) return ZPoly2{c};
  if (degree(x) < degree(y)) std::swap(x, y);
  while (!y.empty()) {
    if (degree(y) == 0) {
      x = ZPoly2{ZPoly{1}};
      break;
    }
    ZPoly2 rem = prem(x, y);
    x = std::move(y);
    if (rem.empty()) break;
    y = divexact_rows(rem, content_v(rem));
  }
  if (!x.empty() && degree(x) > 0) x = divexact_rows(x, content_v(x));
  for (auto& row : x) row = mul(row, c);
  trim(x);
  return x;
}

}  // namespace qgr::detail
