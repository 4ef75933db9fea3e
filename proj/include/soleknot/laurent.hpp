#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "soleknot/snf.hpp"

namespace soleknot {

/// Integer Laurent polynomial in one variable t. Stored trimmed: no zero
/// coefficient at either end; the zero polynomial has no coefficients.
class LaurentPoly {
public:
  LaurentPoly() = default;
  LaurentPoly(BigInt constant);
  LaurentPoly(int constant) : LaurentPoly(BigInt(constant)) {}
  /// coeffs[i] is the coefficient of t^(low + i).
  LaurentPoly(std::int64_t low, std::vector<BigInt> coeffs);

  static LaurentPoly monomial(const BigInt &c, std::int64_t exp);

  bool is_zero() const noexcept { return c_.empty(); }
  std::int64_t low_exp() const noexcept { return low_; }
  std::int64_t high_exp() const noexcept { return low_ + static_cast<std::int64_t>(c_.size()) - 1; }
  BigInt coeff(std::int64_t exp) const;
  const std::vector<BigInt> &coeffs() const noexcept { return c_; }

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly &a, const LaurentPoly &b);
  friend LaurentPoly operator-(const LaurentPoly &a, const LaurentPoly &b);
  friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b);
  LaurentPoly &operator+=(const LaurentPoly &b) { return *this = *this + b; }

  /// a / b when b divides a exactly; throws std::domain_error otherwise.
  static LaurentPoly divide_exact(const LaurentPoly &a, const LaurentPoly &b);

  /// p(t^n).
  LaurentPoly substitute_power(std::int64_t n) const;
  /// p(1/t).
  LaurentPoly mirror() const;
  BigInt at_one() const;
  /// Shifted so the lowest exponent is 0 and signed so the top coefficient is
  /// positive.
  LaurentPoly normalized() const;

  friend bool operator==(const LaurentPoly &, const LaurentPoly &) = default;

private:
  void trim();

  std::int64_t low_ = 0;
  std::vector<BigInt> c_;
};

/// Greatest common divisor in Z[t] of the normalized inputs, normalized.
LaurentPoly poly_gcd(const LaurentPoly &a, const LaurentPoly &b);

/// `t^2 - t + 1`, highest power first.
std::string to_string(const LaurentPoly &p);

} // namespace soleknot
