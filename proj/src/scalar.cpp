#include "qgr/scalar.hpp"

#include <algorithm>
#include <cctype>

#include "zpoly.hpp"

namespace qgr {

namespace {

bool term_before(const LaurentPoly::Term& x, const LaurentPoly::Term& y) {
  return canonical_before(x.first, y.first);
}

mpq_class pow_q(const mpq_class& x, int k) {
  mpq_class base = x;
  if (k < 0) {
    base = 1 / base;
    k = -k;
  }
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(k));
  mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(k));
  mpq_class out(n, d);
  out.canonicalize();
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(const mpq_class& c, Monomial m) {
  if (c != 0) terms_.emplace_back(m, c);
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_before);
  LaurentPoly out;
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().first == t.first) {
      out.terms_.back().second += t.second;
    } else {
      if (!out.terms_.empty() && out.terms_.back().second == 0) out.terms_.pop_back();
      out.terms_.push_back(std::move(t));
    }
  }
  if (!out.terms_.empty() && out.terms_.back().second == 0) out.terms_.pop_back();
  return out;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].first == Monomial{} && terms_[0].second == 1;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(*this);
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

namespace {

LaurentPoly merge(const LaurentPoly& x, const LaurentPoly& y, bool subtract) {
  std::vector<LaurentPoly::Term> out;
  out.reserve(x.terms().size() + y.terms().size());
  auto i = x.terms().begin(), ie = x.terms().end();
  auto j = y.terms().begin(), je = y.terms().end();
  while (i != ie || j != je) {
    if (j == je || (i != ie && canonical_before(i->first, j->first))) {
      out.push_back(*i++);
    } else if (i == ie || canonical_before(j->first, i->first)) {
      out.emplace_back(j->first, subtract ? mpq_class(-j->second) : j->second);
      ++j;
    } else {
      mpq_class c = subtract ? mpq_class(i->second - j->second) : mpq_class(i->second + j->second);
      if (c != 0) out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  return LaurentPoly::from_terms(std::move(out));
}

}  // namespace

LaurentPoly operator+(const LaurentPoly& x, const LaurentPoly& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  return merge(x, y, false);
}

LaurentPoly operator-(const LaurentPoly& x, const LaurentPoly& y) {
  if (y.is_zero()) return x;
  if (x.is_zero()) return -y;
  return merge(x, y, true);
}

LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
  if (x.is_zero() || y.is_zero()) return {};
  if (x.is_monomial()) return y.scaled(x.leading().second, x.leading().first);
  if (y.is_monomial()) return x.scaled(y.leading().second, y.leading().first);
  std::vector<LaurentPoly::Term> out;
  out.reserve(x.terms().size() * y.terms().size());
  for (const auto& [mx, cx] : x.terms())
    for (const auto& [my, cy] : y.terms()) out.emplace_back(mx * my, cx * cy);
  return LaurentPoly::from_terms(std::move(out));
}

LaurentPoly LaurentPoly::scaled(const mpq_class& c, Monomial m) const {
  if (c == 0) return {};
  LaurentPoly out(*this);
  for (auto& t : out.terms_) {
    t.first = t.first * m;
    t.second *= c;
  }
  return out;
}

bool operator==(const LaurentPoly& x, const LaurentPoly& y) {
  if (x.terms_.size() != y.terms_.size()) return false;
  for (std::size_t i = 0; i < x.terms_.size(); ++i)
    if (!(x.terms_[i].first == y.terms_[i].first) || x.terms_[i].second != y.terms_[i].second) return false;
  return true;
}

Monomial LaurentPoly::min_exponents() const {
  if (terms_.empty()) return {};
  Monomial m = terms_.front().first;
  for (const auto& t : terms_) {
    m.a = std::min(m.a, t.first.a);
    m.b = std::min(m.b, t.first.b);
  }
  return m;
}

mpq_class LaurentPoly::evaluate(const mpq_class& u0, const mpq_class& v0) const {
  mpq_class acc = 0;
  for (const auto& [m, c] : terms_) acc += c * pow_q(u0, m.a) * pow_q(v0, m.b);
  return acc;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first && c > 0) out += '+';
    out += c.get_str();
    if (m.a != 0) out += "*u^" + std::to_string(m.a);
    if (m.b != 0) out += "*v^" + std::to_string(m.b);
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Conversion to integer polynomials for gcd.

namespace {

// Write p (min exponents zero) as q * z with z an integer polynomial of
// content 1.
mpq_class split_content(const LaurentPoly& p) {
  mpz_class lcm_den = 1, gcd_num = 0;
  for (const auto& t : p.terms()) {
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), t.second.get_den_mpz_t());
    mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), t.second.get_num_mpz_t());
  }
  mpq_class q(gcd_num, lcm_den);
  q.canonicalize();
  return q;
}

detail::ZPoly2 to_zpoly2(const LaurentPoly& p, const mpq_class& q) {
  detail::ZPoly2 out;
  for (const auto& [m, c] : p.terms()) {
    if (static_cast<int>(out.size()) <= m.a) out.resize(m.a + 1);
    auto& row = out[m.a];
    if (static_cast<int>(row.size()) <= m.b) row.resize(m.b + 1);
    mpq_class z = c / q;
    row[m.b] = z.get_num();
  }
  detail::trim(out);
  return out;
}

LaurentPoly from_zpoly2(const detail::ZPoly2& p) {
  std::vector<LaurentPoly::Term> terms;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p[a].size(); ++b)
      if (p[a][b] != 0) terms.emplace_back(Monomial{static_cast<int>(a), static_cast<int>(b)}, mpq_class(p[a][b]));
  return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(const mpq_class& c) : num_(c), den_(mpq_class(1)) {}

Scalar::Scalar(LaurentPoly p) : num_(std::move(p)), den_(mpq_class(1)) {}

Scalar::Scalar(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) { canonicalize(); }

void Scalar::canonicalize() {
  if (den_.is_zero()) throw ZeroDivisor("zero divisor");
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  if (den_.is_monomial()) {
    const auto& [m, c] = den_.leading();
    num_ = num_.scaled(1 / c, m.inverse());
    den_ = LaurentPoly(1);
    return;
  }
  const Monomial dm = den_.min_exponents();
  const Monomial nm = num_.min_exponents();
  LaurentPoly d = den_.scaled(1, dm.inverse());
  LaurentPoly n = num_.scaled(1, nm.inverse());
  const mpq_class qd = split_content(d);
  const mpq_class qn = split_content(n);
  detail::ZPoly2 dz = to_zpoly2(d, qd);
  detail::ZPoly2 nz = to_zpoly2(n, qn);
  detail::ZPoly2 g = detail::gcd(nz, dz);
  if (!(g.size() == 1 && g[0].size() == 1)) {
    dz = *detail::divexact(dz, g);
    nz = *detail::divexact(nz, g);
  }
  LaurentPoly dn = from_zpoly2(dz);
  LaurentPoly nn = from_zpoly2(nz);
  mpq_class unit = qn / qd;
  // The integer gcd may carry a sign.
  const mpq_class lead = dn.leading().second;
  if (lead < 0) {
    dn = -dn;
    unit = -unit;
  }
  num_ = nn.scaled(unit, nm * dm.inverse());
  den_ = std::move(dn);
  if (den_.is_monomial()) {
    const auto& [m, c] = den_.leading();
    num_ = num_.scaled(1 / c, m.inverse());
    den_ = LaurentPoly(1);
  }
}

bool Scalar::is_rational() const {
  return den_.is_one() && (num_.is_zero() || (num_.is_monomial() && num_.leading().first == Monomial{}));
}

mpq_class Scalar::rational_value() const {
  if (!is_rational()) throw Error("scalar is not rational: " + to_string());
  return num_.is_zero() ? mpq_class(0) : num_.leading().second;
}

Scalar Scalar::operator-() const { return Scalar(Raw{}, -num_, den_); }

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ + o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ = num_ + o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  canonicalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_zero() || o.is_zero()) return *this = Scalar();
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    return *this;
  }
  if (o.num_.is_monomial() && o.den_.is_one()) {
    num_ = num_.scaled(o.num_.leading().second, o.num_.leading().first);
    return *this;
  }
  if (num_.is_monomial() && den_.is_one()) {
    num_ = o.num_.scaled(num_.leading().second, num_.leading().first);
    den_ = o.den_;
    return *this;
  }
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  canonicalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw ZeroDivisor("zero divisor");
  if (num_.is_monomial()) {
    const auto& [m, c] = num_.leading();
    return Scalar(Raw{}, den_.scaled(1 / c, m.inverse()), LaurentPoly(1));
  }
  return Scalar(den_, num_);
}

Scalar Scalar::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  Scalar result(1);
  Scalar base = *this;
  if (!den_.is_one()) {
    // num and den stay coprime under powers; den keeps a positive leading
    // coefficient.
    LaurentPoly n(1), d(1), bn = num_, bd = den_;
    while (k > 0) {
      if (k & 1) {
        n = n * bn;
        d = d * bd;
      }
      k >>= 1;
      if (k > 0) {
        bn = bn * bn;
        bd = bd * bd;
      }
    }
    return Scalar(Raw{}, std::move(n), std::move(d));
  }
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

mpq_class Scalar::specialize(const mpq_class& u0, const mpq_class& v0) const {
  if (u0 == 0 || v0 == 0) throw ZeroDivisor("zero divisor at specialization: u and v must be nonzero");
  const mpq_class d = den_.evaluate(u0, v0);
  if (d == 0) throw ZeroDivisor("zero divisor at specialization: denominator (" + den_.to_string() + ") vanishes");
  if (u0 * u0 == v0 * v0) throw Error("specialization violates r != s");
  return num_.evaluate(u0, v0) / d;
}

std::string Scalar::to_string() const {
  if (den_.is_one()) return "(" + num_.to_string() + ")";
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view t) : t_(t) {}

  Scalar scalar() {
    expect('(');
    LaurentPoly n = poly();
    expect(')');
    LaurentPoly d(1);
    if (pos_ < t_.size()) {
      expect('/');
      expect('(');
      d = poly();
      expect(')');
    }
    if (pos_ != t_.size()) fail();
    return Scalar(std::move(n), std::move(d));
  }

 private:
  [[noreturn]] void fail() const { throw Error("malformed scalar text: " + std::string(t_)); }

  void expect(char c) {
    if (pos_ >= t_.size() || t_[pos_] != c) fail();
    ++pos_;
  }

  bool peek(char c) const { return pos_ < t_.size() && t_[pos_] == c; }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[pos_]))) ++pos_;
    if (start == pos_) fail();
    return std::string(t_.substr(start, pos_ - start));
  }

  int exponent() {
    bool neg = false;
    if (peek('-')) {
      neg = true;
      ++pos_;
    }
    int e = std::stoi(digits());
    return neg ? -e : e;
  }

  LaurentPoly poly() {
    std::vector<LaurentPoly::Term> terms;
    bool first = true;
    while (!peek(')')) {
      std::string sign;
      if (peek('-')) {
        sign = "-";
        ++pos_;
      } else if (peek('+')) {
        if (first) fail();
        ++pos_;
      } else if (!first) {
        fail();
      }
      std::string coeff = sign + digits();
      if (peek('/')) {
        ++pos_;
        coeff += "/" + digits();
      }
      mpq_class c(coeff);
      c.canonicalize();
      Monomial m;
      while (peek('*')) {
        ++pos_;
        if (peek('u')) {
          ++pos_;
          expect('^');
          m.a += exponent();
        } else if (peek('v')) {
          ++pos_;
          expect('^');
          m.b += exponent();
        } else {
          fail();
        }
      }
      terms.emplace_back(m, c);
      first = false;
    }
    if (first) fail();
    return LaurentPoly::from_terms(std::move(terms));
  }

  std::string_view t_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(std::string_view text) { return PolyParser(text).scalar(); }

Scalar half_power(long twice_exponent) {
  return Scalar::monomial(static_cast<int>(twice_exponent), static_cast<int>(-twice_exponent));
}

bool canonical_less(const Scalar& x, const Scalar& y) { return x.to_string() < y.to_string(); }

}  // namespace qgr
