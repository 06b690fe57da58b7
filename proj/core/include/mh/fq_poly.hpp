#pragma once

#include <utility>
#include <vector>

#include "mh/fq.hpp"

namespace mh {

// Univariate polynomial over a fixed FqField, coefficients low to high with
// no trailing zeros.
class FqPoly {
public:
  FqPoly() : F_(nullptr) {}
  explicit FqPoly(const FqField& F) : F_(&F) {}
  FqPoly(const FqField& F, std::vector<FqField::Elem> c) : F_(&F), c_(std::move(c)) {
    trim();
  }

  const FqField& field() const { return *F_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return (int)c_.size() - 1; }  // -1 for 0
  FqField::Elem coeff(int i) const {
    return i >= 0 && i < (int)c_.size() ? c_[i] : 0;
  }
  const std::vector<FqField::Elem>& coeffs() const { return c_; }
  FqField::Elem leading() const { return c_.empty() ? 0 : c_.back(); }

  void set_coeff(int i, FqField::Elem v);
  void trim();

  FqPoly operator+(const FqPoly& o) const;
  FqPoly operator-(const FqPoly& o) const;
  FqPoly operator*(const FqPoly& o) const;
  bool operator==(const FqPoly& o) const { return c_ == o.c_; }

  FqPoly scaled(FqField::Elem s) const;
  FqPoly monic() const;
  FqPoly derivative() const;
  FqField::Elem eval(FqField::Elem x) const;

  // quotient/remainder by a nonzero divisor
  std::pair<FqPoly, FqPoly> divrem(const FqPoly& d) const;

  static FqPoly x_power(const FqField& F, int n);

private:
  const FqField* F_;
  std::vector<FqField::Elem> c_;
};

FqPoly fq_gcd(FqPoly a, FqPoly b);  // monic gcd

struct FqFactor {
  FqPoly poly;  // monic irreducible
  int mult = 0;
};

// Full factorization into monic irreducibles with multiplicities (the
// leading coefficient of the input is dropped).  Deterministically seeded.
std::vector<FqFactor> fq_factor(const FqPoly& f);

// Roots in the coefficient field, with multiplicities.
std::vector<std::pair<FqField::Elem, int>> fq_roots(const FqPoly& f);

bool fq_is_squarefree(const FqPoly& f);

// Map coefficients into an extension field.
FqPoly fq_lift(const FqPoly& f, const FqField& dst);

}  // namespace mh
