#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <climits>
#include <map>
#include <string>

#include "mh/errors.hpp"

namespace mh {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Laurent polynomial in the Lefschetz class L with integer coefficients,
// stored sparsely as exponent -> coefficient.  No zero coefficient is ever
// stored, so structural equality is semantic equality.
class LaurentPoly {
public:
  // degree() of the zero polynomial.
  static constexpr int kNegInfinity = INT_MIN;

  LaurentPoly() = default;
  LaurentPoly(long c) { if (c != 0) coeffs_[0] = c; }
  LaurentPoly(const BigInt& c) { if (c != 0) coeffs_[0] = c; }

  static LaurentPoly term(const BigInt& c, int e);
  // L^e, default the Lefschetz class itself.
  static LaurentPoly lefschetz(int e = 1) { return term(1, e); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  int degree() const { return coeffs_.empty() ? kNegInfinity : coeffs_.rbegin()->first; }
  int low_degree() const { return coeffs_.empty() ? kNegInfinity : coeffs_.begin()->first; }
  const BigInt& leading_coeff() const;
  BigInt coeff(int e) const;
  size_t term_count() const { return coeffs_.size(); }
  const std::map<int, BigInt>& terms() const { return coeffs_; }

  void set_coeff(int e, const BigInt& c);

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  // Multiply by L^k.
  LaurentPoly shifted(int k) const;
  LaurentPoly pow(unsigned n) const;

  // gcd of the coefficients (non-negative; 0 for the zero polynomial).
  BigInt content() const;

  Rational evaluate(const Rational& q) const;

  // Canonical textual form, e.g. "L^3 - L", "2*L^-2 + 1".
  std::string str() const;
  static LaurentPoly parse(const std::string& s);

private:
  std::map<int, BigInt> coeffs_;
};

// gcd of two Laurent polynomials up to units (powers of L and signs):
// the result is an ordinary polynomial with nonzero constant term, primitive
// over the integers, with positive leading coefficient.
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);

// Exact division a / b; throws Mismatch if b does not divide a in the
// Laurent ring over the rationals or the quotient is not integral.
LaurentPoly laurent_divexact(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace mh
