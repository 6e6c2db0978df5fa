#include "lab/linear.hpp"

#include <functional>
#include <utility>

namespace lrlab::lab::detail {

int rank(Matrix m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  int r = 0;
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(r) < rows; ++c) {
    std::size_t pivot = static_cast<std::size_t>(r);
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[static_cast<std::size_t>(r)]);
    for (std::size_t i = static_cast<std::size_t>(r) + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[static_cast<std::size_t>(r)][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[static_cast<std::size_t>(r)][j];
    }
    ++r;
  }
  return r;
}

std::optional<Matrix> inverse(const Matrix& m) {
  const std::size_t n = m.size();
  Matrix a = m;
  Matrix inv(n, Vector(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot][c] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[c]);
    std::swap(inv[pivot], inv[c]);
    const Rational p = a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] /= p;
      inv[c][j] /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[c][j];
        inv[i][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

Matrix submatrix(const Matrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  Matrix out;
  out.reserve(rows.size());
  for (std::size_t r : rows) {
    Vector row;
    row.reserve(cols.size());
    for (std::size_t c : cols) row.push_back(m[r][c]);
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

Rational floor(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  BigInt f = num / den;  // truncates toward zero
  if (num < 0 && f * den != num) f -= 1;
  return Rational(f);
}

}  // namespace lrlab::lab::detail
