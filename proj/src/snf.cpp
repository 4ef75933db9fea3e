#include "soleknot/snf.hpp"

#include <stdexcept>
#include <utility>

namespace soleknot {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix &a, const IntMatrix &b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("matrix dimensions do not match");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0)
        continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

std::string to_string(const IntMatrix &m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j)
        out += ' ';
      out += m(i, j).str();
    }
    out += "]\n";
  }
  return out;
}

namespace {

struct Reducer {
  IntMatrix &A, &U, &V;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j)
      return;
    for (std::size_t c = 0; c < A.cols(); ++c)
      std::swap(A(i, c), A(j, c));
    for (std::size_t c = 0; c < U.cols(); ++c)
      std::swap(U(i, c), U(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j)
      return;
    for (std::size_t r = 0; r < A.rows(); ++r)
      std::swap(A(r, i), A(r, j));
    for (std::size_t r = 0; r < V.rows(); ++r)
      std::swap(V(r, i), V(r, j));
  }
  // row_i += q * row_j
  void add_row(std::size_t i, std::size_t j, const BigInt &q) {
    for (std::size_t c = 0; c < A.cols(); ++c)
      A(i, c) += q * A(j, c);
    for (std::size_t c = 0; c < U.cols(); ++c)
      U(i, c) += q * U(j, c);
  }
  // col_i += q * col_j
  void add_col(std::size_t i, std::size_t j, const BigInt &q) {
    for (std::size_t r = 0; r < A.rows(); ++r)
      A(r, i) += q * A(r, j);
    for (std::size_t r = 0; r < V.rows(); ++r)
      V(r, i) += q * V(r, j);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < A.cols(); ++c)
      A(i, c) = -A(i, c);
    for (std::size_t c = 0; c < U.cols(); ++c)
      U(i, c) = -U(i, c);
  }
};

} // namespace

SmithForm smith_normal_form(const IntMatrix &a) {
  SmithForm out{IntMatrix::identity(a.rows()), a, IntMatrix::identity(a.cols()), 0};
  IntMatrix &A = out.D;
  Reducer red{A, out.U, out.V};
  const std::size_t m = A.rows(), n = A.cols();

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pr = m, pc = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (A(i, j) != 0 && (pr == m || abs(A(i, j)) < abs(A(pr, pc)))) {
            pr = i;
            pc = j;
          }
      if (pr == m) {
        out.rank = t;
        return out;
      }
      red.swap_rows(t, pr);
      red.swap_cols(t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (A(i, t) == 0)
          continue;
        const BigInt q = A(i, t) / A(t, t);
        red.add_row(i, t, -q);
        if (A(i, t) != 0)
          clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (A(t, j) == 0)
          continue;
        const BigInt q = A(t, j) / A(t, t);
        red.add_col(j, t, -q);
        if (A(t, j) != 0)
          clean = false;
      }
      if (!clean)
        continue;

      // Enforce divisibility of the remaining block by the pivot.
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (A(i, j) % A(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad != m) {
        red.add_row(t, bad, 1);
        continue;
      }
      if (A(t, t) < 0)
        red.negate_row(t);
      break;
    }
    out.rank = t + 1;
  }
  return out;
}

BigInt determinant(IntMatrix m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0)
    return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t p = i;
    while (p < n && m(p, i) == 0)
      ++p;
    if (p == n)
      return 0;
    if (p != i) {
      for (std::size_t c = 0; c < n; ++c)
        std::swap(m(i, c), m(p, c));
      sign = -sign;
    }
    for (std::size_t r = i + 1; r < n; ++r) {
      for (std::size_t c = i + 1; c < n; ++c)
        m(r, c) = (m(r, c) * m(i, i) - m(r, i) * m(i, c)) / prev;
      m(r, i) = 0;
    }
    prev = m(i, i);
  }
  return sign * m(n - 1, n - 1);
}

} // namespace soleknot
