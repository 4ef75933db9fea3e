#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace soleknot {

using BigInt = boost::multiprecision::cpp_int;

/// Dense row-major integer matrix.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  BigInt &operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const BigInt &operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  friend bool operator==(const IntMatrix &, const IntMatrix &) = default;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<BigInt> a_;
};

IntMatrix operator*(const IntMatrix &a, const IntMatrix &b);
std::string to_string(const IntMatrix &m);

/// U * A * V = D with U, V unimodular and D diagonal, each diagonal entry
/// non-negative and dividing the next.
struct SmithForm {
  IntMatrix U, D, V;
  std::size_t rank = 0;
};

SmithForm smith_normal_form(const IntMatrix &a);

/// Determinant by fraction-free elimination.
BigInt determinant(IntMatrix m);

} // namespace soleknot
