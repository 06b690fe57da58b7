#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "mh/errors.hpp"

namespace mh {

// F_{p^m} for an odd prime p.  Elements are uint32_t indices whose base-p
// digits are the coefficients of the polynomial representation with respect
// to a defining irreducible f(x) chosen so that x is a primitive element.
// Small fields get exp/log tables; larger ones use direct polynomial
// arithmetic on the digit vectors.
class FqField {
public:
  using Elem = std::uint32_t;

  static const FqField& get(std::uint32_t p, std::uint32_t m);

  std::uint32_t p() const { return p_; }
  std::uint32_t m() const { return m_; }
  std::uint64_t size() const { return size_; }
  bool tabled() const { return tabled_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(std::uint64_t n) const { return (Elem)(n % p_); }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const;
  Elem frobenius(Elem a) const { return pow(a, p_); }

  // The defining root x of this field's irreducible polynomial (primitive).
  Elem generator() const { return m_ == 1 ? gen_ : (Elem)p_; }
  // Coefficients (low to high) of the degree-m defining polynomial.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  // Embedding into a field with the same p and m | dst.m: the image of an
  // element with digits c_i is sum c_i R^i for a fixed root R of modulus()
  // in dst.  Embeddings are cached and consistent per (src, dst) pair.
  Elem embed_into(const FqField& dst, Elem a) const;

private:
  FqField(std::uint32_t p, std::uint32_t m);

  std::vector<std::uint32_t> decode(Elem a) const;
  Elem encode(const std::vector<std::uint32_t>& digits) const;
  Elem mul_generic(Elem a, Elem b) const;

  std::uint32_t p_ = 0, m_ = 0;
  std::uint64_t size_ = 0;
  bool tabled_ = false;
  Elem gen_ = 0;                        // primitive element (== x for m > 1)
  std::vector<std::uint32_t> modulus_;  // defining polynomial, length m+1
  std::vector<Elem> exp_;               // tabled backend
  std::vector<std::uint32_t> log_;
  mutable std::vector<std::vector<Elem>> embed_cache_;  // guarded by registry mutex

  friend class FqRegistry;
};

// An element a + b*eps of the dual numbers over some FqField (eps^2 = 0).
struct DualElem {
  FqField::Elem a = 0;
  FqField::Elem b = 0;
};

}  // namespace mh
