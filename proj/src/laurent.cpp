#include "soleknot/laurent.hpp"

#include <stdexcept>

namespace soleknot {

LaurentPoly::LaurentPoly(BigInt constant) {
  if (constant != 0)
    c_.push_back(std::move(constant));
}

LaurentPoly::LaurentPoly(std::int64_t low, std::vector<BigInt> coeffs) : low_(low), c_(std::move(coeffs)) {
  trim();
}

LaurentPoly LaurentPoly::monomial(const BigInt &c, std::int64_t exp) { return LaurentPoly(exp, {c}); }

void LaurentPoly::trim() {
  std::size_t hi = c_.size();
  while (hi > 0 && c_[hi - 1] == 0)
    --hi;
  std::size_t lo = 0;
  while (lo < hi && c_[lo] == 0)
    ++lo;
  if (lo == hi) {
    c_.clear();
    low_ = 0;
    return;
  }
  c_.resize(hi);
  c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lo));
  low_ += static_cast<std::int64_t>(lo);
}

BigInt LaurentPoly::coeff(std::int64_t exp) const {
  if (is_zero() || exp < low_ || exp > high_exp())
    return 0;
  return c_[static_cast<std::size_t>(exp - low_)];
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto &c : r.c_)
    c = -c;
  return r;
}

LaurentPoly operator+(const LaurentPoly &a, const LaurentPoly &b) {
  if (a.is_zero())
    return b;
  if (b.is_zero())
    return a;
  const std::int64_t lo = std::min(a.low_, b.low_);
  const std::int64_t hi = std::max(a.high_exp(), b.high_exp());
  std::vector<BigInt> c(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    c[static_cast<std::size_t>(a.low_ - lo) + i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i)
    c[static_cast<std::size_t>(b.low_ - lo) + i] += b.c_[i];
  return LaurentPoly(lo, std::move(c));
}

LaurentPoly operator-(const LaurentPoly &a, const LaurentPoly &b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b) {
  if (a.is_zero() || b.is_zero())
    return {};
  std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0)
      continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      c[i + j] += a.c_[i] * b.c_[j];
  }
  return LaurentPoly(a.low_ + b.low_, std::move(c));
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly &a, const LaurentPoly &b) {
  if (b.is_zero())
    throw std::domain_error("division by the zero polynomial");
  if (a.is_zero())
    return {};
  if (a.c_.size() < b.c_.size())
    throw std::domain_error("inexact polynomial division");
  std::vector<BigInt> rem = a.c_;
  const std::size_t qn = a.c_.size() - b.c_.size() + 1;
  std::vector<BigInt> q(qn);
  const BigInt &lead = b.c_.back();
  for (std::size_t k = qn; k-- > 0;) {
    BigInt &top = rem[k + b.c_.size() - 1];
    if (top == 0)
      continue;
    if (top % lead != 0)
      throw std::domain_error("inexact polynomial division");
    q[k] = top / lead;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      rem[k + j] -= q[k] * b.c_[j];
  }
  for (const auto &r : rem)
    if (r != 0)
      throw std::domain_error("inexact polynomial division");
  return LaurentPoly(a.low_ - b.low_, std::move(q));
}

LaurentPoly LaurentPoly::substitute_power(std::int64_t n) const {
  if (n == 0)
    return LaurentPoly(at_one());
  if (n < 0)
    return mirror().substitute_power(-n);
  if (is_zero())
    return {};
  std::vector<BigInt> c((c_.size() - 1) * static_cast<std::size_t>(n) + 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    c[i * static_cast<std::size_t>(n)] = c_[i];
  return LaurentPoly(low_ * n, std::move(c));
}

LaurentPoly LaurentPoly::mirror() const {
  if (is_zero())
    return {};
  return LaurentPoly(-high_exp(), std::vector<BigInt>(c_.rbegin(), c_.rend()));
}

BigInt LaurentPoly::at_one() const {
  BigInt s = 0;
  for (const auto &c : c_)
    s += c;
  return s;
}

LaurentPoly LaurentPoly::normalized() const {
  if (is_zero())
    return {};
  LaurentPoly r(0, c_);
  return r.c_.back() < 0 ? -r : r;
}

namespace {

using Poly = std::vector<BigInt>; // ascending, trimmed

void trim(Poly &p) {
  while (!p.empty() && p.back() == 0)
    p.pop_back();
}

BigInt content(const Poly &p) {
  BigInt g = 0;
  for (const auto &c : p)
    g = gcd(g, c);
  return g;
}

Poly primitive(Poly p) {
  const BigInt g = content(p);
  if (g > 1)
    for (auto &c : p)
      c /= g;
  return p;
}

// Pseudo-remainder of a by b.
Poly prem(Poly a, const Poly &b) {
  const BigInt &lead = b.back();
  while (a.size() >= b.size()) {
    const BigInt top = a.back();
    const std::size_t shift = a.size() - b.size();
    for (auto &c : a)
      c *= lead;
    for (std::size_t j = 0; j < b.size(); ++j)
      a[shift + j] -= top * b[j];
    trim(a);
  }
  return a;
}

} // namespace

LaurentPoly poly_gcd(const LaurentPoly &a, const LaurentPoly &b) {
  if (a.is_zero())
    return b.normalized();
  if (b.is_zero())
    return a.normalized();
  Poly x = a.normalized().coeffs(), y = b.normalized().coeffs();
  const BigInt g = gcd(content(x), content(y));
  x = primitive(std::move(x));
  y = primitive(std::move(y));
  if (x.size() < y.size())
    std::swap(x, y);
  while (!y.empty()) {
    Poly r = primitive(prem(x, y));
    x = std::move(y);
    y = std::move(r);
  }
  for (auto &c : x)
    c *= g;
  return LaurentPoly(0, std::move(x)).normalized();
}

std::string to_string(const LaurentPoly &p) {
  if (p.is_zero())
    return "0";
  std::string out;
  for (std::int64_t e = p.high_exp(); e >= p.low_exp(); --e) {
    BigInt c = p.coeff(e);
    if (c == 0)
      continue;
    const bool neg = c < 0;
    if (neg)
      c = -c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    const bool unit = c == 1;
    if (!unit || e == 0)
      out += c.str();
    if (e != 0) {
      out += "t";
      if (e != 1)
        out += "^" + std::to_string(e);
    }
  }
  return out;
}

} // namespace soleknot
