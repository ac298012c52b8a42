#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "phantomkit/field.hpp"

namespace phantomkit {

using Vec = std::vector<Residue>;

/// Dense row-major matrix over F_p. Entries are always reduced.
class Mat {
 public:
  Mat(Field field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  /// Entries are reduced mod p; `entries.size()` must equal rows * cols.
  static Mat from_entries(Field field, std::size_t rows, std::size_t cols,
                          std::span<const long long> entries);
  static Mat from_rows(Field field, std::size_t cols, const std::vector<Vec>& rows);
  static Mat identity(Field field, std::size_t n);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Residue operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Residue v) { data_[r * cols_ + c] = v % field_.p(); }
  void add_to(std::size_t r, std::size_t c, Residue v) {
    auto& e = data_[r * cols_ + c];
    e = field_.add(e, v % field_.p());
  }

  std::span<const Residue> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Residue> row_mut(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  Vec row_vec(std::size_t r) const { return Vec(row(r).begin(), row(r).end()); }
  void set_row(std::size_t r, std::span<const Residue> v);

  std::span<const Residue> data() const noexcept { return data_; }

  bool is_zero() const;
  bool is_identity() const;

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Residue> data_;
};

Mat operator*(const Mat& a, const Mat& b);
Mat operator+(const Mat& a, const Mat& b);
Mat operator-(const Mat& a, const Mat& b);
Mat scaled(const Mat& a, Residue c);
Mat transpose(const Mat& a);

/// Row vector times matrix: v * m.
Vec row_times(std::span<const Residue> v, const Mat& m);
/// m * column vector.
Vec times_col(const Mat& m, std::span<const Residue> v);
bool is_zero(std::span<const Residue> v);

Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);
Mat block_diag(const Mat& a, const Mat& b);
/// `copies` copies of m along the diagonal.
Mat block_diag_power(const Mat& m, std::size_t copies);
Mat select_rows(const Mat& m, std::span<const std::size_t> rows);
Mat select_cols(const Mat& m, std::span<const std::size_t> cols);
Mat col_range(const Mat& m, std::size_t begin, std::size_t count);
Mat row_range(const Mat& m, std::size_t begin, std::size_t count);
/// Writes `src` into `dst` with its top-left corner at (r0, c0).
void paste(Mat& dst, const Mat& src, std::size_t r0, std::size_t c0);

}  // namespace phantomkit
