#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "h1forge/gf.hpp"

namespace h1f {

using Vec = std::vector<Fel>;

struct Mat {
  FieldRef F;
  uint32_t rows = 0;
  uint32_t cols = 0;
  std::vector<Fel> a;  // row-major

  Mat() = default;
  Mat(FieldRef f, uint32_t r, uint32_t c) : F(std::move(f)), rows(r), cols(c), a(size_t(r) * c, 0) {}

  Fel& at(uint32_t r, uint32_t c) { return a[size_t(r) * cols + c]; }
  Fel at(uint32_t r, uint32_t c) const { return a[size_t(r) * cols + c]; }

  static Mat identity(FieldRef f, uint32_t n);
  bool is_identity() const;
  bool is_zero() const;

  bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
  bool operator!=(const Mat& o) const { return !(*this == o); }
};

Mat operator*(const Mat& x, const Mat& y);
Mat operator+(const Mat& x, const Mat& y);
Mat operator-(const Mat& x, const Mat& y);
Mat transpose(const Mat& x);
Mat scale(const Mat& x, Fel c);

// Row-major Kronecker convention: basis vector e_i (x) f_j of V1 (x) V2 maps
// to index i * dim(V2) + j.
Mat kron(const Mat& x, const Mat& y);

Vec mat_vec(const Mat& x, const Vec& v);
Vec vec_add(const Field& F, const Vec& x, const Vec& y);
Vec vec_sub(const Field& F, const Vec& x, const Vec& y);
Vec vec_scale(const Field& F, const Vec& x, Fel c);
bool vec_is_zero(const Vec& x);

struct Rref {
  Mat r;
  uint32_t rank = 0;
  std::vector<uint32_t> pivots;  // pivot column per pivot row
};

// Reduced row echelon form with deterministic first-nonzero pivot selection
// (columns scanned left to right, first row with a nonzero entry wins).
Rref rref(Mat x);

uint32_t rank_of(const Mat& x);

// Columns form the canonical kernel basis (one per free column, ascending).
Mat kernel(const Mat& x);

// Particular solution of A x = b with free variables set to zero; the result
// is re-verified against A before returning.
std::optional<Vec> solve(const Mat& A, const Vec& b);

std::optional<Mat> inverse(const Mat& x);

Mat stack_rows(const std::vector<Mat>& parts);

// Multiplicative order of an invertible matrix; throws CapExceeded past cap.
uint64_t matrix_order(const Mat& x, uint64_t cap);

uint64_t mat_hash(const Mat& x);

// Span with a unique canonical basis: rows of `rr` are in RREF, so two
// subspaces are equal iff their reps are equal.
class Subspace {
 public:
  Subspace() = default;
  // vectors = spanning list (need not be independent)
  Subspace(FieldRef F, uint32_t ambient, const std::vector<Vec>& vectors);
  explicit Subspace(const Rref& row_space, FieldRef F, uint32_t ambient);

  uint32_t dim() const { return rr_.rows; }
  uint32_t ambient() const { return ambient_; }
  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  // ambient x dim matrix whose columns are the canonical basis
  Mat basis() const;
  const Mat& row_rep() const { return rr_; }

  bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && rr_ == o.rr_; }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

 private:
  uint32_t ambient_ = 0;
  Mat rr_;  // dim x ambient, RREF rows
};

// Incremental reduced row echelon basis. insert returns the reduced
// representative when the vector enlarged the span, nullopt otherwise.
class RowEchelon {
 public:
  RowEchelon(FieldRef F, uint32_t n) : F_(std::move(F)), n_(n) {}

  uint32_t dim() const { return uint32_t(rows_.size()); }
  const std::vector<Vec>& rows() const { return rows_; }
  std::optional<Vec> insert(Vec v);
  Mat as_matrix() const;

 private:
  FieldRef F_;
  uint32_t n_;
  std::vector<Vec> rows_;
  std::vector<uint32_t> piv_;
};

// Matrix text codec: rows separated by ';', entries by ',' (commas inside
// '[..]' element literals do not split).
Mat parse_matrix(const FieldRef& F, const std::string& text);
std::string show_matrix(const Mat& x);

}  // namespace h1f
