#include "oddab/bitmatrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace oddab {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), data_(rows * wpr_, 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<std::string>& rows) {
  if (rows.empty()) return {};
  BitMatrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw std::invalid_argument("ragged rows");
    for (std::size_t c = 0; c < m.cols_; ++c)
      if (rows[r][c] == '1') m.set(r, c, true);
  }
  return m;
}

bool BitMatrix::get(std::size_t r, std::size_t c) const {
  return (data_[r * wpr_ + c / 64] >> (c % 64)) & 1u;
}
void BitMatrix::set(std::size_t r, std::size_t c, bool v) {
  std::uint64_t& w = data_[r * wpr_ + c / 64];
  if (v) w |= (std::uint64_t{1} << (c % 64));
  else   w &= ~(std::uint64_t{1} << (c % 64));
}
void BitMatrix::flip(std::size_t r, std::size_t c) {
  data_[r * wpr_ + c / 64] ^= (std::uint64_t{1} << (c % 64));
}

void BitMatrix::xor_row_into(std::size_t src, std::size_t dst) {
  for (std::size_t w = 0; w < wpr_; ++w) data_[dst * wpr_ + w] ^= data_[src * wpr_ + w];
}
void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t w = 0; w < wpr_; ++w) std::swap(data_[a * wpr_ + w], data_[b * wpr_ + w]);
}

BitMatrix BitMatrix::operator*(const BitMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("dim mismatch in product");
  BitMatrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (get(r, c)) {
        for (std::size_t w = 0; w < rhs.wpr_; ++w)
          out.data_[r * out.wpr_ + w] ^= rhs.data_[c * rhs.wpr_ + w];
      }
    }
  }
  return out;
}

BitMatrix BitMatrix::operator+(const BitMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("dim mismatch in sum");
  BitMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] ^= rhs.data_[i];
  return out;
}

bool BitMatrix::operator==(const BitMatrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (get(r, c)) out.set(c, r, true);
  return out;
}

BitMatrix BitMatrix::pow(std::uint64_t e) const {
  if (rows_ != cols_) throw std::invalid_argument("pow of non-square matrix");
  BitMatrix acc = identity(rows_), base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

std::size_t BitMatrix::rref() {
  std::size_t piv = 0;
  for (std::size_t c = 0; c < cols_ && piv < rows_; ++c) {
    std::size_t r = piv;
    while (r < rows_ && !get(r, c)) ++r;
    if (r == rows_) continue;
    swap_rows(r, piv);
    for (std::size_t i = 0; i < rows_; ++i)
      if (i != piv && get(i, c)) xor_row_into(piv, i);
    ++piv;
  }
  return piv;
}

std::size_t BitMatrix::rank() const {
  BitMatrix tmp = *this;
  return tmp.rref();
}

bool BitMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::uint64_t w) { return w == 0; });
}

bool BitMatrix::is_invertible() const {
  return rows_ == cols_ && rank() == rows_;
}

BitMatrix BitMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
  BitMatrix work = *this, inv = identity(rows_);
  std::size_t piv = 0;
  for (std::size_t c = 0; c < cols_; ++c) {
    std::size_t r = piv;
    while (r < rows_ && !work.get(r, c)) ++r;
    if (r == rows_) throw std::domain_error("singular matrix");
    work.swap_rows(r, piv);
    inv.swap_rows(r, piv);
    for (std::size_t i = 0; i < rows_; ++i)
      if (i != piv && work.get(i, c)) { work.xor_row_into(piv, i); inv.xor_row_into(piv, i); }
    ++piv;
  }
  return inv;
}

BitMatrix BitMatrix::kernel() const {
  BitMatrix ech = *this;
  ech.rref();
  std::vector<std::size_t> pivot_col;
  std::vector<bool> is_pivot(cols_, false);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    if (ech.get(r, c)) { pivot_col.push_back(c); is_pivot[c] = true; ++r; }
  }
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < cols_; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  BitMatrix ker(free_cols.size(), cols_);
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::size_t fc = free_cols[k];
    ker.set(k, fc, true);
    for (std::size_t p = 0; p < pivot_col.size(); ++p)
      if (ech.get(p, fc)) ker.set(k, pivot_col[p], true);
  }
  return ker;
}

BitMatrix BitMatrix::row_basis() const {
  BitMatrix ech = *this;
  std::size_t rk = ech.rref();
  BitMatrix out(rk, cols_);
  for (std::size_t r = 0; r < rk; ++r)
    for (std::size_t w = 0; w < wpr_; ++w)
      out.data_[r * wpr_ + w] = ech.data_[r * wpr_ + w];
  return out;
}

BitMatrix BitMatrix::vstack(const BitMatrix& top, const BitMatrix& bottom) {
  if (top.rows_ == 0) return bottom;
  if (bottom.rows_ == 0) return top;
  if (top.cols_ != bottom.cols_) throw std::invalid_argument("vstack col mismatch");
  BitMatrix out(top.rows_ + bottom.rows_, top.cols_);
  std::copy(top.data_.begin(), top.data_.end(), out.data_.begin());
  std::copy(bottom.data_.begin(), bottom.data_.end(), out.data_.begin() + top.data_.size());
  return out;
}

std::vector<std::uint64_t> BitMatrix::apply(const std::vector<std::uint64_t>& v) const {
  std::vector<std::uint64_t> out((rows_ + 63) / 64, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < wpr_; ++w) acc ^= data_[r * wpr_ + w] & v[w];
    if (__builtin_parityll(acc)) out[r / 64] |= (std::uint64_t{1} << (r % 64));
  }
  return out;
}

bool BitMatrix::trace() const {
  bool t = false;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t ^= get(i, i);
  return t;
}

std::string BitMatrix::to_string() const {
  std::string s;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) s += get(r, c) ? '1' : '0';
    s += '\n';
  }
  return s;
}

BitMatrix row_space_intersection(const BitMatrix& a, const BitMatrix& b) {
  // Zassenhaus: echelonize [A|A; B|0], intersection basis sits in the right
  // block of rows whose left block is zero.
  if (a.cols() != b.cols()) throw std::invalid_argument("ambient mismatch");
  std::size_t n = a.cols();
  BitMatrix big(a.rows() + b.rows(), 2 * n);
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (a.get(r, c)) { big.set(r, c, true); big.set(r, n + c, true); }
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (b.get(r, c)) big.set(a.rows() + r, c, true);
  big.rref();
  std::vector<std::string> rows;
  for (std::size_t r = 0; r < big.rows(); ++r) {
    bool left_zero = true, right_zero = true;
    for (std::size_t c = 0; c < n; ++c) {
      if (big.get(r, c)) left_zero = false;
      if (big.get(r, n + c)) right_zero = false;
    }
    if (left_zero && !right_zero) {
      std::string row(n, '0');
      for (std::size_t c = 0; c < n; ++c)
        if (big.get(r, n + c)) row[c] = '1';
      rows.push_back(row);
    }
  }
  if (rows.empty()) return BitMatrix(0, n);
  return BitMatrix::from_rows(rows).row_basis();
}

bool row_space_contains(const BitMatrix& space, const std::uint64_t* v, std::size_t cols) {
  BitMatrix aug(space.rows() + 1, cols);
  for (std::size_t r = 0; r < space.rows(); ++r)
    for (std::size_t w = 0; w < space.words_per_row(); ++w)
      aug.row(r)[w] = space.row(r)[w];
  for (std::size_t w = 0; w < space.words_per_row(); ++w) aug.row(space.rows())[w] = v[w];
  return aug.rank() == space.rank();
}

}  // namespace oddab
