#include "mh/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

namespace mh {

LaurentPoly LaurentPoly::term(const BigInt& c, int e) {
  LaurentPoly p;
  if (c != 0) p.coeffs_[e] = c;
  return p;
}

bool LaurentPoly::is_one() const {
  return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second == 1;
}

const BigInt& LaurentPoly::leading_coeff() const {
  static const BigInt zero = 0;
  return coeffs_.empty() ? zero : coeffs_.rbegin()->second;
}

BigInt LaurentPoly::coeff(int e) const {
  auto it = coeffs_.find(e);
  return it == coeffs_.end() ? BigInt(0) : it->second;
}

void LaurentPoly::set_coeff(int e, const BigInt& c) {
  if (c == 0)
    coeffs_.erase(e);
  else
    coeffs_[e] = c;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (auto& [e, c] : o.coeffs_) {
    auto it = coeffs_.find(e);
    if (it == coeffs_.end()) {
      coeffs_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (auto& [e, c] : o.coeffs_) {
    auto it = coeffs_.find(e);
    if (it == coeffs_.end()) {
      coeffs_.emplace(e, -c);
    } else {
      it->second -= c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  for (auto& [ea, ca] : a.coeffs_)
    for (auto& [eb, cb] : b.coeffs_) {
      BigInt& slot = r.coeffs_[ea + eb];
      slot += ca * cb;
    }
  for (auto it = r.coeffs_.begin(); it != r.coeffs_.end();)
    it = it->second == 0 ? r.coeffs_.erase(it) : std::next(it);
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r;
  for (auto& [e, c] : coeffs_) r.coeffs_[e + k] = c;
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly r(1), base = *this;
  while (n) {
    if (n & 1) r *= base;
    base *= base;
    n >>= 1;
  }
  return r;
}

BigInt LaurentPoly::content() const {
  BigInt g = 0;
  for (auto& [e, c] : coeffs_) {
    g = boost::multiprecision::gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

Rational LaurentPoly::evaluate(const Rational& q) const {
  if (coeffs_.empty()) return 0;
  if (q == 0) {
    if (low_degree() < 0) throw PoleAtQ("negative power of L evaluated at 0");
    Rational v = coeff(0);
    return v;
  }
  // Horner over the exponent range [low, high].
  int lo = low_degree(), hi = degree();
  Rational acc = 0;
  for (int e = hi; e >= lo; --e) {
    acc *= q;
    acc += Rational(coeff(e));
  }
  if (lo < 0) {
    Rational scale = 1;
    for (int i = 0; i < -lo; ++i) scale *= q;
    acc /= scale;
  }
  return acc;
}

std::string LaurentPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const int e = it->first;
    BigInt c = it->second;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    if (e == 0) {
      os << c;
    } else {
      if (c != 1) os << c << "*";
      os << "L";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;
  void skip_ws() { while (i < s.size() && std::isspace((unsigned char)s[i])) ++i; }
  bool done() { skip_ws(); return i >= s.size(); }
  char peek() { skip_ws(); return i < s.size() ? s[i] : '\0'; }
};

// Accepts the canonical form plus tolerant variants: optional '*', an
// optional coefficient, "L"/"L^e", unicode minus.
bool take_minus(Cursor& c) {
  c.skip_ws();
  if (c.i < c.s.size() && c.s[c.i] == '-') { ++c.i; return true; }
  // U+2212 encoded in UTF-8 as 0xE2 0x88 0x92.
  if (c.i + 2 < c.s.size() && (unsigned char)c.s[c.i] == 0xE2 &&
      (unsigned char)c.s[c.i + 1] == 0x88 && (unsigned char)c.s[c.i + 2] == 0x92) {
    c.i += 3;
    return true;
  }
  return false;
}

BigInt parse_int(Cursor& c) {
  c.skip_ws();
  bool neg = take_minus(c);
  if (!neg && c.peek() == '+') ++c.i;
  c.skip_ws();
  std::string digits;
  while (c.i < c.s.size() && std::isdigit((unsigned char)c.s[c.i])) digits += c.s[c.i++];
  if (digits.empty()) throw ParseError("expected integer in '" + c.s + "'");
  BigInt v(digits);
  return neg ? -v : v;
}

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& s) {
  Cursor c{s};
  LaurentPoly p;
  bool first = true;
  while (!c.done()) {
    bool neg = false;
    if (!first || c.peek() == '+' || c.peek() == '-' || (unsigned char)c.peek() == 0xE2) {
      if (take_minus(c)) {
        neg = true;
      } else if (c.peek() == '+') {
        ++c.i;
      } else if (!first) {
        throw ParseError("expected '+' or '-' in '" + s + "'");
      }
    }
    first = false;
    c.skip_ws();
    BigInt coeff = 1;
    bool saw_coeff = false;
    if (c.i < c.s.size() && std::isdigit((unsigned char)c.s[c.i])) {
      std::string digits;
      while (c.i < c.s.size() && std::isdigit((unsigned char)c.s[c.i])) digits += c.s[c.i++];
      coeff = BigInt(digits);
      saw_coeff = true;
      c.skip_ws();
      if (c.i < c.s.size() && c.s[c.i] == '*') { ++c.i; c.skip_ws(); }
    }
    int e = 0;
    if (c.i < c.s.size() && (c.s[c.i] == 'L' || c.s[c.i] == 'l')) {
      ++c.i;
      e = 1;
      c.skip_ws();
      if (c.i < c.s.size() && c.s[c.i] == '^') {
        ++c.i;
        BigInt ee = parse_int(c);
        if (ee > INT_MAX / 2 || ee < INT_MIN / 2) throw ParseError("exponent out of range");
        e = (int)ee.convert_to<long>();
      }
    } else if (!saw_coeff) {
      throw ParseError("expected term in '" + s + "'");
    }
    if (neg) coeff = -coeff;
    p.set_coeff(e, p.coeff(e) + coeff);
  }
  return p;
}

// ---------------------------------------------------------------------------
// gcd / exact division via ordinary (non-Laurent) dense polynomials.

namespace {

using Dense = std::vector<BigInt>;  // c[0] + c[1] x + ...

Dense to_dense(const LaurentPoly& p, int shift) {
  Dense d(p.degree() + shift + 1);
  for (auto& [e, c] : p.terms()) d[e + shift] = c;
  return d;
}

void trim(Dense& d) {
  while (!d.empty() && d.back() == 0) d.pop_back();
}

BigInt dense_content(const Dense& d) {
  BigInt g = 0;
  for (auto& c : d) g = boost::multiprecision::gcd(g, c);
  return g;
}

void make_primitive(Dense& d) {
  BigInt g = dense_content(d);
  if (g == 0) return;
  if (d.back() < 0) g = -g;
  for (auto& c : d) c /= g;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a  mod  b.
Dense prem(Dense a, const Dense& b) {
  const BigInt& lb = b.back();
  int db = (int)b.size() - 1;
  while ((int)a.size() - 1 >= db && !a.empty()) {
    BigInt top = a.back();
    int da = (int)a.size() - 1;
    for (auto& c : a) c *= lb;
    for (int i = 0; i <= db; ++i) a[da - db + i] -= top * b[i];
    trim(a);
  }
  return a;
}

Dense dense_gcd(Dense a, Dense b) {
  trim(a);
  trim(b);
  if (a.empty()) { make_primitive(b); return b; }
  if (b.empty()) { make_primitive(a); return a; }
  make_primitive(a);
  make_primitive(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    Dense r = prem(a, b);
    make_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return LaurentPoly();
  Dense da = a.is_zero() ? Dense() : to_dense(a, -a.low_degree());
  Dense db = b.is_zero() ? Dense() : to_dense(b, -b.low_degree());
  Dense g = dense_gcd(std::move(da), std::move(db));
  LaurentPoly r;
  for (size_t i = 0; i < g.size(); ++i)
    if (g[i] != 0) r.set_coeff((int)i, g[i]);
  // Normalize away the power of L so the constant term is nonzero.
  if (!r.is_zero() && r.low_degree() != 0) r = r.shifted(-r.low_degree());
  return r;
}

LaurentPoly laurent_divexact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw Mismatch("division by zero polynomial");
  if (a.is_zero()) return LaurentPoly();
  // Long division over Q on ordinary polynomials, tracking exactness.
  int sa = -a.low_degree(), sb = -b.low_degree();
  Dense num = to_dense(a, sa), den = to_dense(b, sb);
  std::vector<Rational> rem(num.begin(), num.end());
  int dd = (int)den.size() - 1;
  std::vector<Rational> quot((int)rem.size() - 1 >= dd ? rem.size() - dd : 0);
  Rational lead = Rational(den.back());
  for (int i = (int)rem.size() - 1; i >= dd; --i) {
    Rational f = rem[i] / lead;
    if (f == 0) continue;
    quot[i - dd] = f;
    for (int j = 0; j <= dd; ++j) rem[i - j] -= f * Rational(den[dd - j]);
  }
  for (auto& r : rem)
    if (r != 0) throw Mismatch("polynomial division is not exact");
  LaurentPoly q;
  for (size_t i = 0; i < quot.size(); ++i) {
    if (quot[i] == 0) continue;
    if (boost::multiprecision::denominator(quot[i]) != 1)
      throw Mismatch("polynomial quotient is not integral");
    q.set_coeff((int)i - sa + sb, BigInt(boost::multiprecision::numerator(quot[i])));
  }
  return q;
}

}  // namespace mh
