#pragma once

#include <string>
#include <vector>

#include "mh/laurent.hpp"

namespace mh {

// Truncated Laurent expansion at L = infinity, anchored at a dimension:
// sum_i coeffs[i] * L^(anchor - i)  +  O(L^(anchor - coeffs.size())).
// exact means the expansion terminates inside the stored window.
struct DimSeries {
  int anchor = 0;
  std::vector<BigInt> coeffs;  // c0 .. cN
  bool exact = false;

  int order() const { return (int)coeffs.size() - 1; }
  BigInt coeff_at_dim(int dim) const;
  bool operator==(const DimSeries& o) const = default;
  std::string str() const;
};

// Element of the L-rational subring of the completed Grothendieck ring:
// a reduced fraction num/den of Laurent polynomials in L.  Canonical form:
//  - den is an ordinary polynomial with nonzero constant term,
//  - den has leading coefficient +1 (denominators are units of the
//    completed ring; construction enforces a +/-1 top coefficient),
//  - gcd(num, den) = 1 over the rationals.
class MotivicClass {
public:
  MotivicClass() = default;
  MotivicClass(long c) : num_(c), den_(1) {}
  MotivicClass(const BigInt& c) : num_(c), den_(1) {}
  MotivicClass(const LaurentPoly& p) : num_(p), den_(1) {}
  MotivicClass(const LaurentPoly& num, const LaurentPoly& den);

  static MotivicClass lefschetz(int e = 1) { return MotivicClass(LaurentPoly::lefschetz(e)); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  // degree(num) - degree(den); kNegInfinity for 0.
  int dimension() const;

  MotivicClass operator-() const;
  friend MotivicClass operator+(const MotivicClass& a, const MotivicClass& b);
  friend MotivicClass operator-(const MotivicClass& a, const MotivicClass& b);
  friend MotivicClass operator*(const MotivicClass& a, const MotivicClass& b);
  MotivicClass& operator+=(const MotivicClass& o) { return *this = *this + o; }
  MotivicClass& operator-=(const MotivicClass& o) { return *this = *this - o; }
  MotivicClass& operator*=(const MotivicClass& o) { return *this = *this * o; }
  bool operator==(const MotivicClass& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const MotivicClass& o) const { return !(*this == o); }

  MotivicClass inverse() const;
  MotivicClass pow(int n) const;

  std::string str() const;

private:
  LaurentPoly num_;       // any Laurent polynomial
  LaurentPoly den_ = LaurentPoly(1);
};

MotivicClass add(const MotivicClass& a, const MotivicClass& b);
MotivicClass mul(const MotivicClass& a, const MotivicClass& b);
MotivicClass invert(const MotivicClass& a);

// Laurent expansion of a at L = infinity through codimension n relative to
// dimension(a).  Preconditions: a != 0, n >= 0.
DimSeries to_series(const MotivicClass& a, int n);

// true iff dimension(a - b) <= ref_dim - n.
bool eq_mod_codim(const MotivicClass& a, const MotivicClass& b, int ref_dim, int n);

Rational evaluate(const MotivicClass& a, const Rational& q);

std::string rational_str(const Rational& q);

}  // namespace mh
