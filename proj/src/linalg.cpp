#include "gralg/linalg.hpp"

#include <cstdint>

namespace gralg {

namespace {

// Barrett-style reduction: a 64x64 high multiply in place of the hardware
// divide. Valid for x < 2^64 and odd p < 2^31; quotient error is at most one,
// fixed by a single conditional subtract.
struct Reducer {
  explicit Reducer(coeff_t prime)
      : p(static_cast<std::uint64_t>(prime)),
        magic(~std::uint64_t(0) / static_cast<std::uint64_t>(prime)) {}

  coeff_t reduce(std::uint64_t x) const {
    std::uint64_t q =
        static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * magic) >> 64);
    std::uint64_t r = x - q * p;
    return static_cast<coeff_t>(r >= p ? r - p : r);
  }

  std::uint64_t p;
  std::uint64_t magic;
};

// v -= f * row, elementwise mod p; entries stay canonical
template <typename T>
void axpy(const Reducer& red, coeff_t* v, coeff_t f, const T* row, size_t from, size_t n) {
  const std::uint64_t nf = red.p - static_cast<std::uint64_t>(f);
  for (size_t j = from; j < n; ++j)
    if (row[j] != 0)
      v[j] = red.reduce(static_cast<std::uint64_t>(v[j]) +
                        nf * static_cast<std::uint64_t>(row[j]));
}

int first_nonzero(const std::vector<coeff_t>& v) {
  for (size_t j = 0; j < v.size(); ++j)
    if (v[j] != 0) return static_cast<int>(j);
  return -1;
}

} // namespace

void RowSpace::reduce(std::vector<coeff_t>& v) const {
  Reducer red(K_->p());
  for (size_t i = 0; i < rows_.size(); ++i) {
    coeff_t f = v[pivots_[i]];
    if (f != 0) axpy(red, v.data(), f, rows_[i].data(), pivots_[i], v.size());
  }
}

bool RowSpace::insert(std::vector<coeff_t> v) {
  reduce(v);
  int piv = first_nonzero(v);
  if (piv < 0) return false;
  Reducer red(K_->p());
  std::uint64_t inv = static_cast<std::uint64_t>(K_->inv(v[piv]));
  std::vector<std::uint32_t> row(v.size(), 0);
  for (size_t j = piv; j < v.size(); ++j)
    if (v[j] != 0)
      row[j] = static_cast<std::uint32_t>(
          red.reduce(static_cast<std::uint64_t>(v[j]) * inv));
  rows_.push_back(std::move(row));
  pivots_.push_back(piv);
  return true;
}

bool RowSpace::contains(std::vector<coeff_t> v) const {
  reduce(v);
  return first_nonzero(v) < 0;
}

std::vector<std::vector<coeff_t>> nullspace(const PrimeField& K,
                                            std::vector<std::vector<coeff_t>> A,
                                            int ncols) {
  // row echelon with unit pivots
  Reducer red(K.p());
  std::vector<int> pivot_of_row;
  int r = 0;
  int nrows = static_cast<int>(A.size());
  for (int col = 0; col < ncols && r < nrows; ++col) {
    int sel = -1;
    for (int i = r; i < nrows; ++i)
      if (A[i][col] != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(A[r], A[sel]);
    std::uint64_t inv = static_cast<std::uint64_t>(K.inv(A[r][col]));
    for (int j = col; j < ncols; ++j)
      if (A[r][j] != 0)
        A[r][j] = red.reduce(static_cast<std::uint64_t>(A[r][j]) * inv);
    for (int i = 0; i < nrows; ++i) {
      if (i == r) continue;
      coeff_t f = A[i][col];
      if (f != 0) axpy(red, A[i].data(), f, A[r].data(), col, ncols);
    }
    pivot_of_row.push_back(col);
    ++r;
  }
  std::vector<bool> is_pivot(ncols, false);
  for (int c : pivot_of_row) is_pivot[c] = true;

  std::vector<std::vector<coeff_t>> basis;
  for (int col = 0; col < ncols; ++col) {
    if (is_pivot[col]) continue;
    std::vector<coeff_t> x(ncols, 0);
    x[col] = 1;
    for (int i = 0; i < r; ++i) {
      coeff_t a = A[i][col];
      if (a != 0) x[pivot_of_row[i]] = K.neg(a);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

} // namespace gralg
