#include "mh/motivic.hpp"

#include <sstream>

namespace mh {

BigInt DimSeries::coeff_at_dim(int dim) const {
  int i = anchor - dim;
  if (i < 0 || i >= (int)coeffs.size()) return 0;
  return coeffs[i];
}

std::string DimSeries::str() const {
  LaurentPoly p;
  for (size_t i = 0; i < coeffs.size(); ++i) p.set_coeff(anchor - (int)i, coeffs[i]);
  std::ostringstream os;
  os << p.str();
  if (!exact) os << " + O(L^" << anchor - (int)coeffs.size() << ")";
  return os.str();
}

MotivicClass::MotivicClass(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw NotInvertible("zero denominator");
  if (num.is_zero()) { num_ = LaurentPoly(); den_ = LaurentPoly(1); return; }
  LaurentPoly n = num, d = den;
  // Cancel the unit L^k out of the denominator.
  int shift = d.low_degree();
  d = d.shifted(-shift);
  n = n.shifted(-shift);
  LaurentPoly g = laurent_gcd(n, d);
  if (!g.is_one() && !g.is_zero()) {
    n = laurent_divexact(n, g);
    d = laurent_divexact(d, g);
    int s2 = d.low_degree();
    d = d.shifted(-s2);
    n = n.shifted(-s2);
  }
  if (d.leading_coeff() != 1 && d.leading_coeff() != -1)
    throw NotInvertible("denominator top coefficient must be a unit, got " +
                        d.leading_coeff().str());
  if (d.leading_coeff() == -1) { d = -d; n = -n; }
  num_ = std::move(n);
  den_ = std::move(d);
}

int MotivicClass::dimension() const {
  if (num_.is_zero()) return LaurentPoly::kNegInfinity;
  return num_.degree() - den_.degree();
}

MotivicClass MotivicClass::operator-() const {
  MotivicClass r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

MotivicClass operator+(const MotivicClass& a, const MotivicClass& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return MotivicClass(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

MotivicClass operator-(const MotivicClass& a, const MotivicClass& b) { return a + (-b); }

MotivicClass operator*(const MotivicClass& a, const MotivicClass& b) {
  if (a.is_zero() || b.is_zero()) return MotivicClass();
  // Cross-reduce before multiplying to keep intermediate degrees low.
  MotivicClass x(a.num_, b.den_), y(b.num_, a.den_);
  MotivicClass r;
  r.num_ = x.num_ * y.num_;
  r.den_ = x.den_ * y.den_;
  int s = r.den_.low_degree();
  if (s != 0) { r.den_ = r.den_.shifted(-s); r.num_ = r.num_.shifted(-s); }
  return r;
}

MotivicClass MotivicClass::inverse() const {
  if (is_zero()) throw NotInvertible("zero has no inverse");
  const BigInt& lead = num_.leading_coeff();
  if (lead != 1 && lead != -1)
    throw NotInvertible("leading coefficient " + lead.str() + " is not a unit");
  MotivicClass r;
  int shift = num_.low_degree();
  r.den_ = num_.shifted(-shift);
  r.num_ = den_.shifted(-shift);
  if (r.den_.leading_coeff() == -1) { r.den_ = -r.den_; r.num_ = -r.num_; }
  return r;
}

MotivicClass MotivicClass::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  MotivicClass r(1), base = *this;
  unsigned k = (unsigned)n;
  while (k) {
    if (k & 1) r *= base;
    base *= base;
    k >>= 1;
  }
  return r;
}

std::string MotivicClass::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

MotivicClass add(const MotivicClass& a, const MotivicClass& b) { return a + b; }
MotivicClass mul(const MotivicClass& a, const MotivicClass& b) { return a * b; }
MotivicClass invert(const MotivicClass& a) { return a.inverse(); }

DimSeries to_series(const MotivicClass& a, int n) {
  if (a.is_zero()) throw NotInvertible("to_series of 0 has no anchor dimension");
  if (n < 0) throw OutOfRange("to_series needs n >= 0");
  DimSeries s;
  s.anchor = a.dimension();
  s.coeffs.assign(n + 1, 0);
  // Write num = L^dn * ntilde(u), den = L^dd * dtilde(u) with u = L^-1 and
  // nonzero constant terms; divide the power series.  dtilde(0) = +1 by the
  // canonical form, so the division stays over the integers.
  int dn = a.num().degree(), dd = a.den().degree();
  std::vector<BigInt> nu(n + 1), de(n + 1);
  for (auto& [e, c] : a.num().terms())
    if (dn - e <= n) nu[dn - e] = c;
  for (auto& [e, c] : a.den().terms())
    if (dd - e <= n) de[dd - e] = c;
  for (int i = 0; i <= n; ++i) {
    BigInt c = nu[i];
    for (int j = 1; j <= i; ++j) c -= de[j] * s.coeffs[i - j];
    s.coeffs[i] = c;  // de[0] == 1
  }
  // Canonical form has gcd(num, den) = 1, so the expansion terminates iff
  // den == 1 and every term of num sits inside the window.
  s.exact = a.den().is_one() && a.num().low_degree() >= s.anchor - n;
  return s;
}

bool eq_mod_codim(const MotivicClass& a, const MotivicClass& b, int ref_dim, int n) {
  MotivicClass d = a - b;
  if (d.is_zero()) return true;
  return d.dimension() <= ref_dim - n;
}

Rational evaluate(const MotivicClass& a, const Rational& q) {
  if (a.is_zero()) return 0;
  Rational den = a.den().evaluate(q);
  if (den == 0) throw PoleAtQ("denominator vanishes at q = " + rational_str(q));
  return a.num().evaluate(q) / den;
}

std::string rational_str(const Rational& q) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(q);
  if (boost::multiprecision::denominator(q) != 1)
    os << "/" << boost::multiprecision::denominator(q);
  return os.str();
}

}  // namespace mh
