#include "locert/bigint.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace locert {

namespace {

using boost::multiprecision::abs;

// Smallest nonzero |entry| in the block [t.., t..]; false when the block is zero.
bool find_pivot(const BigMatrix& m, std::size_t t, std::size_t& row, std::size_t& col) {
  bool found = false;
  BigInt best;
  for (std::size_t i = t; i < m.size(); ++i) {
    for (std::size_t j = t; j < m[i].size(); ++j) {
      if (m[i][j] == 0) continue;
      BigInt a = abs(m[i][j]);
      if (!found || a < best) {
        best = std::move(a);
        row = i;
        col = j;
        found = true;
        if (best == 1) return true;
      }
    }
  }
  return found;
}

void swap_columns(BigMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (auto& row : m) std::swap(row[a], row[b]);
}

}  // namespace

std::vector<BigInt> smith_invariants(BigMatrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  for (const auto& r : m) {
    if (r.size() != cols) throw std::invalid_argument("ragged matrix");
  }

  std::vector<BigInt> diagonal;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    std::size_t pr = 0, pc = 0;
    if (!find_pivot(m, t, pr, pc)) break;
    std::swap(m[t], m[pr]);
    swap_columns(m, t, pc);

    for (;;) {
      // Clear column t and row t by division with remainder. A nonzero
      // remainder is strictly smaller than the pivot and becomes the next one.
      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        const BigInt q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        const BigInt q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) dirty = true;
      }
      if (dirty) {
        find_pivot(m, t, pr, pc);
        std::swap(m[t], m[pr]);
        swap_columns(m, t, pc);
        continue;
      }
      // Row and column are clear; enforce divisibility of the remaining block.
      bool divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
            divisible = false;
            break;
          }
        }
      }
      if (divisible) break;
    }
    diagonal.push_back(abs(m[t][t]));
  }
  return diagonal;
}

BigInt determinant(BigMatrix m) {
  const std::size_t n = m.size();
  for (const auto& r : m) {
    if (r.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  }
  if (n == 0) return 1;
  int sign = 1;
  BigInt previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / previous;
      }
    }
    previous = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace locert
