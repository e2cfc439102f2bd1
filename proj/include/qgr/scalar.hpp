// Exact coefficients: the field Q(u, v) with r = u^2 and s = v^2.
#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qgr/error.hpp"

namespace qgr {

/// u^a v^b.
struct Monomial {
  int a = 0;
  int b = 0;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  Monomial operator*(const Monomial& o) const { return {a + o.a, b + o.b}; }
  Monomial inverse() const { return {-a, -b}; }
};

/// Canonical monomial order: descending in (a+b, a). Returns true when x
/// comes before y.
inline bool canonical_before(const Monomial& x, const Monomial& y) {
  const int dx = x.a + x.b, dy = y.a + y.b;
  if (dx != dy) return dx > dy;
  return x.a > y.a;
}

/// Laurent polynomial in u, v with rational coefficients. Terms are kept in
/// canonical order with no zero coefficients.
class LaurentPoly {
 public:
  using Term = std::pair<Monomial, mpq_class>;

  LaurentPoly() = default;
  explicit LaurentPoly(const mpq_class& c, Monomial m = {});
  static LaurentPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_one() const;
  const Term& leading() const { return terms_.front(); }

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly& x, const LaurentPoly& y);
  friend LaurentPoly operator-(const LaurentPoly& x, const LaurentPoly& y);
  friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y);
  LaurentPoly scaled(const mpq_class& c, Monomial m = {}) const;

  friend bool operator==(const LaurentPoly& x, const LaurentPoly& y);

  /// Exponent-wise minimum over all terms (0,0 for the zero polynomial).
  Monomial min_exponents() const;
  mpq_class evaluate(const mpq_class& u0, const mpq_class& v0) const;
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

/// Element of Q(u, v), kept as num/den in lowest terms. The denominator is
/// an integer polynomial with content 1, no monomial factor, and positive
/// leading coefficient; the numerator carries every unit factor.
class Scalar {
 public:
  Scalar() : num_(), den_(mpq_class(1)) {}
  Scalar(long c) : Scalar(mpq_class(c)) {}  // NOLINT(google-explicit-constructor)
  Scalar(const mpq_class& c);               // NOLINT(google-explicit-constructor)
  explicit Scalar(LaurentPoly p);
  Scalar(LaurentPoly num, LaurentPoly den);

  static Scalar u() { return Scalar(LaurentPoly(1, {1, 0})); }
  static Scalar v() { return Scalar(LaurentPoly(1, {0, 1})); }
  static Scalar r() { return Scalar(LaurentPoly(1, {2, 0})); }
  static Scalar s() { return Scalar(LaurentPoly(1, {0, 2})); }
  static Scalar monomial(int a, int b, const mpq_class& c = 1) { return Scalar(LaurentPoly(c, {a, b})); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  /// True when the value lies in Q.
  bool is_rational() const;
  mpq_class rational_value() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }
  friend bool operator==(const Scalar& x, const Scalar& y) { return x.num_ == y.num_ && x.den_ == y.den_; }

  Scalar inverse() const;
  Scalar pow(long k) const;

  /// Exact value at u = u0, v = v0.
  mpq_class specialize(const mpq_class& u0, const mpq_class& v0) const;

  /// "(<num>)/(<den>)", or "(<num>)" when den = 1.
  std::string to_string() const;
  static Scalar parse(std::string_view text);

 private:
  struct Raw {};
  Scalar(Raw, LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {}
  void canonicalize();

  LaurentPoly num_;
  LaurentPoly den_;
};

/// (rs^-1)^(k/2) = (u v^-1)^k.
Scalar half_power(long twice_exponent);

/// Total order on canonical forms, for deterministic sorting only.
bool canonical_less(const Scalar& x, const Scalar& y);

}  // namespace qgr
