#include "phantomkit/matrix.hpp"

#include <algorithm>
#include <string>

#include "phantomkit/error.hpp"
#include "phantomkit/kernels.hpp"

namespace phantomkit {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorKind::ShapeMismatch, what);
}

}  // namespace

Mat Mat::from_entries(Field field, std::size_t rows, std::size_t cols,
                      std::span<const long long> entries) {
  require(entries.size() == rows * cols, "entry count does not match shape");
  Mat m(field, rows, cols);
  for (std::size_t i = 0; i < entries.size(); ++i) m.data_[i] = field.reduce(entries[i]);
  return m;
}

Mat Mat::from_rows(Field field, std::size_t cols, const std::vector<Vec>& rows) {
  Mat m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return m;
}

Mat Mat::identity(Field field, std::size_t n) {
  Mat m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1 % field.p();
  return m;
}

void Mat::set_row(std::size_t r, std::span<const Residue> v) {
  require(v.size() == cols_, "row length mismatch");
  for (std::size_t c = 0; c < cols_; ++c) data_[r * cols_ + c] = v[c] % field_.p();
}

bool Mat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Residue x) { return x == 0; });
}

bool Mat::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != (r == c ? 1u : 0u)) return false;
  return true;
}

Mat operator*(const Mat& a, const Mat& b) {
  require(a.cols() == b.rows(), "product shape mismatch");
  require(a.field() == b.field(), "product over different fields");
  const auto p = a.field().p();
  Mat out(a.field(), a.rows(), b.cols());
  if (b.cols() == 0) return out;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    auto dst = out.row_mut(r);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      Residue c = a(r, k);
      if (c != 0) simd::axpy_mod(dst, b.row(k), c, p);
    }
  }
  return out;
}

Mat operator+(const Mat& a, const Mat& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "sum shape mismatch");
  Mat out = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    if (a.cols() > 0) simd::axpy_mod(out.row_mut(r), b.row(r), 1, a.field().p());
  return out;
}

Mat operator-(const Mat& a, const Mat& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "difference shape mismatch");
  Mat out = a;
  const Residue minus_one = a.field().neg(1);
  for (std::size_t r = 0; r < a.rows(); ++r)
    if (a.cols() > 0) simd::axpy_mod(out.row_mut(r), b.row(r), minus_one, a.field().p());
  return out;
}

Mat scaled(const Mat& a, Residue c) {
  Mat out = a;
  c %= a.field().p();
  for (std::size_t r = 0; r < a.rows(); ++r)
    if (a.cols() > 0) simd::scale_mod(out.row_mut(r), c, a.field().p());
  return out;
}

Mat transpose(const Mat& a) {
  Mat out(a.field(), a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out.set(c, r, a(r, c));
  return out;
}

Vec row_times(std::span<const Residue> v, const Mat& m) {
  require(v.size() == m.rows(), "vector-matrix shape mismatch");
  Vec out(m.cols(), 0);
  if (m.cols() == 0) return out;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k] != 0) simd::axpy_mod(out, m.row(k), v[k], m.field().p());
  return out;
}

Vec times_col(const Mat& m, std::span<const Residue> v) {
  require(v.size() == m.cols(), "matrix-vector shape mismatch");
  Vec out(m.rows(), 0);
  const Field& f = m.field();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Residue acc = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) acc = f.add(acc, f.mul(m(r, c), v[c]));
    out[r] = acc;
  }
  return out;
}

bool is_zero(std::span<const Residue> v) {
  return std::all_of(v.begin(), v.end(), [](Residue x) { return x == 0; });
}

Mat hstack(const Mat& a, const Mat& b) {
  require(a.rows() == b.rows(), "hstack row mismatch");
  Mat out(a.field(), a.rows(), a.cols() + b.cols());
  paste(out, a, 0, 0);
  paste(out, b, 0, a.cols());
  return out;
}

Mat vstack(const Mat& a, const Mat& b) {
  require(a.cols() == b.cols(), "vstack column mismatch");
  Mat out(a.field(), a.rows() + b.rows(), a.cols());
  paste(out, a, 0, 0);
  paste(out, b, a.rows(), 0);
  return out;
}

Mat block_diag(const Mat& a, const Mat& b) {
  Mat out(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  paste(out, a, 0, 0);
  paste(out, b, a.rows(), a.cols());
  return out;
}

Mat block_diag_power(const Mat& m, std::size_t copies) {
  Mat out(m.field(), m.rows() * copies, m.cols() * copies);
  for (std::size_t i = 0; i < copies; ++i) paste(out, m, i * m.rows(), i * m.cols());
  return out;
}

Mat select_rows(const Mat& m, std::span<const std::size_t> rows) {
  Mat out(m.field(), rows.size(), m.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) out.set_row(i, m.row(rows[i]));
  return out;
}

Mat select_cols(const Mat& m, std::span<const std::size_t> cols) {
  Mat out(m.field(), m.rows(), cols.size());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t i = 0; i < cols.size(); ++i) out.set(r, i, m(r, cols[i]));
  return out;
}

Mat col_range(const Mat& m, std::size_t begin, std::size_t count) {
  require(begin + count <= m.cols(), "column range out of bounds");
  Mat out(m.field(), m.rows(), count);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t i = 0; i < count; ++i) out.set(r, i, m(r, begin + i));
  return out;
}

Mat row_range(const Mat& m, std::size_t begin, std::size_t count) {
  require(begin + count <= m.rows(), "row range out of bounds");
  Mat out(m.field(), count, m.cols());
  for (std::size_t i = 0; i < count; ++i) out.set_row(i, m.row(begin + i));
  return out;
}

void paste(Mat& dst, const Mat& src, std::size_t r0, std::size_t c0) {
  require(r0 + src.rows() <= dst.rows() && c0 + src.cols() <= dst.cols(), "paste out of bounds");
  for (std::size_t r = 0; r < src.rows(); ++r) {
    auto d = dst.row_mut(r0 + r);
    auto s = src.row(r);
    std::copy(s.begin(), s.end(), d.begin() + static_cast<std::ptrdiff_t>(c0));
  }
}

}  // namespace phantomkit
