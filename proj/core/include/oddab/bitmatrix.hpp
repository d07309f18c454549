#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace oddab {

/// Dense matrix over GF(2), rows packed into 64-bit words.
///
/// Rows are the primary axis: row spaces, echelon forms and rank profiles
/// are what the callers care about. Dimensions stay small (a few hundred
/// at most), so everything is plain Gaussian elimination.
class BitMatrix {
public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  static BitMatrix identity(std::size_t n);
  /// Builds from row strings of '0'/'1', e.g. {"101","010"}.
  static BitMatrix from_rows(const std::vector<std::string>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, bool v);
  void flip(std::size_t r, std::size_t c);

  /// Row r as a packed word vector (shared layout with words_per_row()).
  const std::uint64_t* row(std::size_t r) const { return data_.data() + r * wpr_; }
  std::uint64_t* row(std::size_t r) { return data_.data() + r * wpr_; }
  std::size_t words_per_row() const { return wpr_; }

  void xor_row_into(std::size_t src, std::size_t dst);
  void swap_rows(std::size_t a, std::size_t b);

  BitMatrix operator*(const BitMatrix& rhs) const;
  BitMatrix operator+(const BitMatrix& rhs) const;  // XOR
  bool operator==(const BitMatrix& rhs) const;

  BitMatrix transpose() const;
  BitMatrix pow(std::uint64_t e) const;

  /// In-place reduced row echelon form; returns rank.
  std::size_t rref();
  std::size_t rank() const;
  bool is_zero() const;
  bool is_invertible() const;
  BitMatrix inverse() const;  // throws if singular

  /// Basis for the right kernel {v : M v = 0}, one row per basis vector.
  BitMatrix kernel() const;
  /// Basis of the row space in canonical (RREF, zero rows dropped) form.
  BitMatrix row_basis() const;

  /// Stack rows of two matrices with equal column count.
  static BitMatrix vstack(const BitMatrix& top, const BitMatrix& bottom);

  /// v (len cols) -> M v over GF(2); vectors as packed words.
  std::vector<std::uint64_t> apply(const std::vector<std::uint64_t>& v) const;

  /// Trace (sum of diagonal) over GF(2).
  bool trace() const;

  std::string to_string() const;

private:
  std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
  std::vector<std::uint64_t> data_;
};

/// Row space intersection of two row-bases (rows of a and b span subspaces
/// of the same ambient space); returns canonical row basis.
BitMatrix row_space_intersection(const BitMatrix& a, const BitMatrix& b);

/// Does the row space of `space` contain vector `v` (packed words)?
bool row_space_contains(const BitMatrix& space, const std::uint64_t* v,
                        std::size_t cols);

}  // namespace oddab
