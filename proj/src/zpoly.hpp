// Dense integer polynomials in one and two variables. Internal to the scalar
// layer: used to reduce rational functions to lowest terms.
#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace qgr::detail {

/// Univariate polynomial over Z, coefficients low to high, no trailing zeros.
using ZPoly = std::vector<mpz_class>;

/// Bivariate polynomial over Z viewed as a polynomial in the main variable
/// with ZPoly coefficients (in the second variable). No trailing zero rows.
using ZPoly2 = std::vector<ZPoly>;

void trim(ZPoly& p);
void trim(ZPoly2& p);
int degree(const ZPoly& p);
int degree(const ZPoly2& p);

ZPoly add(const ZPoly& a, const ZPoly& b);
ZPoly sub(const ZPoly& a, const ZPoly& b);
ZPoly mul(const ZPoly& a, const ZPoly& b);
ZPoly scale(const ZPoly& a, const mpz_class& c);
mpz_class content(const ZPoly& p);
/// Exact quotient a / b, or nullopt when b does not divide a.
std::optional<ZPoly> divexact(const ZPoly& a, const ZPoly& b);
/// Greatest common divisor with positive leading coefficient.
ZPoly gcd(const ZPoly& a, const ZPoly& b);
/// p or -p, whichever has positive leading coefficient.
ZPoly primitive_sign(const ZPoly& p);

ZPoly2 mul(const ZPoly2& a, const ZPoly2& b);
std::optional<ZPoly2> divexact(const ZPoly2& a, const ZPoly2& b);
/// Greatest common divisor up to sign.
ZPoly2 gcd(const ZPoly2& a, const ZPoly2& b);

}  // namespace qgr::detail
