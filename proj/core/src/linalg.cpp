#include "h1forge/linalg.hpp"

#include <algorithm>

#include "h1forge/errors.hpp"

namespace h1f {

namespace {

void check_same_field(const Mat& x, const Mat& y) {
  if (!x.F || !y.F || !x.F->same(*y.F)) throw MismatchedField();
}

}  // namespace

Mat Mat::identity(FieldRef f, uint32_t n) {
  Mat m(std::move(f), n, n);
  for (uint32_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool Mat::is_identity() const {
  if (rows != cols) return false;
  for (uint32_t i = 0; i < rows; ++i)
    for (uint32_t j = 0; j < cols; ++j)
      if (at(i, j) != (i == j ? 1u : 0u)) return false;
  return true;
}

bool Mat::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](Fel v) { return v == 0; });
}

Mat operator*(const Mat& x, const Mat& y) {
  check_same_field(x, y);
  if (x.cols != y.rows) throw DimensionMismatch("matrix product shape mismatch");
  const Field& F = *x.F;
  Mat z(x.F, x.rows, y.cols);
  for (uint32_t i = 0; i < x.rows; ++i) {
    for (uint32_t k = 0; k < x.cols; ++k) {
      Fel xv = x.at(i, k);
      if (xv == 0) continue;
      const Fel* yrow = &y.a[size_t(k) * y.cols];
      Fel* zrow = &z.a[size_t(i) * z.cols];
      for (uint32_t j = 0; j < y.cols; ++j) {
        if (yrow[j] != 0) zrow[j] = F.add(zrow[j], F.mul(xv, yrow[j]));
      }
    }
  }
  return z;
}

Mat operator+(const Mat& x, const Mat& y) {
  check_same_field(x, y);
  if (x.rows != y.rows || x.cols != y.cols) throw DimensionMismatch("matrix sum shape mismatch");
  Mat z(x.F, x.rows, x.cols);
  for (size_t i = 0; i < x.a.size(); ++i) z.a[i] = x.F->add(x.a[i], y.a[i]);
  return z;
}

Mat operator-(const Mat& x, const Mat& y) {
  check_same_field(x, y);
  if (x.rows != y.rows || x.cols != y.cols) throw DimensionMismatch("matrix difference shape mismatch");
  Mat z(x.F, x.rows, x.cols);
  for (size_t i = 0; i < x.a.size(); ++i) z.a[i] = x.F->sub(x.a[i], y.a[i]);
  return z;
}

Mat transpose(const Mat& x) {
  Mat z(x.F, x.cols, x.rows);
  for (uint32_t i = 0; i < x.rows; ++i)
    for (uint32_t j = 0; j < x.cols; ++j) z.at(j, i) = x.at(i, j);
  return z;
}

Mat scale(const Mat& x, Fel c) {
  Mat z(x.F, x.rows, x.cols);
  for (size_t i = 0; i < x.a.size(); ++i) z.a[i] = x.F->mul(x.a[i], c);
  return z;
}

Mat kron(const Mat& x, const Mat& y) {
  check_same_field(x, y);
  Mat z(x.F, x.rows * y.rows, x.cols * y.cols);
  for (uint32_t ia = 0; ia < x.rows; ++ia)
    for (uint32_t ja = 0; ja < x.cols; ++ja) {
      Fel v = x.at(ia, ja);
      if (v == 0) continue;
      for (uint32_t ib = 0; ib < y.rows; ++ib)
        for (uint32_t jb = 0; jb < y.cols; ++jb)
          z.at(ia * y.rows + ib, ja * y.cols + jb) = x.F->mul(v, y.at(ib, jb));
    }
  return z;
}

Vec mat_vec(const Mat& x, const Vec& v) {
  if (x.cols != v.size()) throw DimensionMismatch("matrix-vector shape mismatch");
  const Field& F = *x.F;
  Vec out(x.rows, 0);
  for (uint32_t i = 0; i < x.rows; ++i) {
    Fel acc = 0;
    const Fel* row = &x.a[size_t(i) * x.cols];
    for (uint32_t j = 0; j < x.cols; ++j) {
      if (row[j] != 0 && v[j] != 0) acc = F.add(acc, F.mul(row[j], v[j]));
    }
    out[i] = acc;
  }
  return out;
}

Vec vec_add(const Field& F, const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw DimensionMismatch("vector sum shape mismatch");
  Vec z(x.size());
  for (size_t i = 0; i < x.size(); ++i) z[i] = F.add(x[i], y[i]);
  return z;
}

Vec vec_sub(const Field& F, const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw DimensionMismatch("vector difference shape mismatch");
  Vec z(x.size());
  for (size_t i = 0; i < x.size(); ++i) z[i] = F.sub(x[i], y[i]);
  return z;
}

Vec vec_scale(const Field& F, const Vec& x, Fel c) {
  Vec z(x.size());
  for (size_t i = 0; i < x.size(); ++i) z[i] = F.mul(x[i], c);
  return z;
}

bool vec_is_zero(const Vec& x) {
  return std::all_of(x.begin(), x.end(), [](Fel v) { return v == 0; });
}

Rref rref(Mat x) {
  const Field& F = *x.F;
  Rref out;
  uint32_t r = 0;
  for (uint32_t c = 0; c < x.cols && r < x.rows; ++c) {
    uint32_t piv = r;
    while (piv < x.rows && x.at(piv, c) == 0) ++piv;
    if (piv == x.rows) continue;
    if (piv != r) {
      for (uint32_t j = 0; j < x.cols; ++j) std::swap(x.at(piv, j), x.at(r, j));
    }
    Fel inv = F.inv(x.at(r, c));
    if (inv != 1) {
      for (uint32_t j = c; j < x.cols; ++j) x.at(r, j) = F.mul(x.at(r, j), inv);
    }
    for (uint32_t i = 0; i < x.rows; ++i) {
      if (i == r) continue;
      Fel f = x.at(i, c);
      if (f == 0) continue;
      for (uint32_t j = c; j < x.cols; ++j) {
        x.at(i, j) = F.sub(x.at(i, j), F.mul(f, x.at(r, j)));
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.r = std::move(x);
  return out;
}

uint32_t rank_of(const Mat& x) { return rref(x).rank; }

Mat kernel(const Mat& x) {
  Rref e = rref(x);
  std::vector<uint32_t> free_cols;
  {
    size_t pi = 0;
    for (uint32_t c = 0; c < x.cols; ++c) {
      if (pi < e.pivots.size() && e.pivots[pi] == c) {
        ++pi;
      } else {
        free_cols.push_back(c);
      }
    }
  }
  Mat basis(x.F, x.cols, uint32_t(free_cols.size()));
  for (uint32_t bi = 0; bi < free_cols.size(); ++bi) {
    uint32_t fc = free_cols[bi];
    basis.at(fc, bi) = 1;
    for (uint32_t r = 0; r < e.rank; ++r) {
      Fel v = e.r.at(r, fc);
      if (v != 0) basis.at(e.pivots[r], bi) = x.F->neg(v);
    }
  }
  return basis;
}

std::optional<Vec> solve(const Mat& A, const Vec& b) {
  if (A.rows != b.size()) throw DimensionMismatch("solve shape mismatch");
  Mat aug(A.F, A.rows, A.cols + 1);
  for (uint32_t i = 0; i < A.rows; ++i) {
    for (uint32_t j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols) = b[i];
  }
  Rref e = rref(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == A.cols) return std::nullopt;
  Vec x(A.cols, 0);
  for (uint32_t r = 0; r < e.rank; ++r) x[e.pivots[r]] = e.r.at(r, A.cols);
  if (mat_vec(A, x) != b) throw InvariantError("solve verification failed");
  return x;
}

std::optional<Mat> inverse(const Mat& x) {
  if (x.rows != x.cols) throw DimensionMismatch("inverse of non-square matrix");
  uint32_t n = x.rows;
  Mat aug(x.F, n, 2 * n);
  for (uint32_t i = 0; i < n; ++i) {
    for (uint32_t j = 0; j < n; ++j) aug.at(i, j) = x.at(i, j);
    aug.at(i, n + i) = 1;
  }
  Rref e = rref(std::move(aug));
  if (e.rank < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Mat inv(x.F, n, n);
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j) inv.at(i, j) = e.r.at(i, n + j);
  return inv;
}

Mat stack_rows(const std::vector<Mat>& parts) {
  if (parts.empty()) throw DimensionMismatch("stack of zero matrices");
  uint32_t total = 0;
  for (const Mat& m : parts) {
    check_same_field(parts.front(), m);
    if (m.cols != parts.front().cols) throw DimensionMismatch("stack width mismatch");
    total += m.rows;
  }
  Mat z(parts.front().F, total, parts.front().cols);
  uint32_t r = 0;
  for (const Mat& m : parts) {
    std::copy(m.a.begin(), m.a.end(), z.a.begin() + size_t(r) * z.cols);
    r += m.rows;
  }
  return z;
}

uint64_t matrix_order(const Mat& x, uint64_t cap) {
  if (x.rows != x.cols) throw DimensionMismatch("order of non-square matrix");
  Mat acc = x;
  uint64_t k = 1;
  while (!acc.is_identity()) {
    if (++k > cap) throw CapExceeded("matrix order exceeds cap " + std::to_string(cap));
    acc = acc * x;
  }
  return k;
}

uint64_t mat_hash(const Mat& x) {
  // FNV-1a over the shape and entries
  uint64_t h = 1469598103934665603ull;
  auto mix = [&h](uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(x.rows);
  mix(x.cols);
  for (Fel v : x.a) mix(v);
  return h;
}

Subspace::Subspace(FieldRef F, uint32_t ambient, const std::vector<Vec>& vectors)
    : ambient_(ambient) {
  Mat rows(F, uint32_t(vectors.size()), ambient);
  for (uint32_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != ambient) throw DimensionMismatch("subspace vector length mismatch");
    for (uint32_t j = 0; j < ambient; ++j) rows.at(i, j) = vectors[i][j];
  }
  Rref e = rref(std::move(rows));
  rr_ = Mat(F, e.rank, ambient);
  std::copy(e.r.a.begin(), e.r.a.begin() + size_t(e.rank) * ambient, rr_.a.begin());
}

Subspace::Subspace(const Rref& row_space, FieldRef F, uint32_t ambient) : ambient_(ambient) {
  rr_ = Mat(std::move(F), row_space.rank, ambient);
  std::copy(row_space.r.a.begin(), row_space.r.a.begin() + size_t(row_space.rank) * ambient,
            rr_.a.begin());
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("containment test length mismatch");
  if (ambient_ == 0) return true;
  const Field& F = *rr_.F;
  Vec w = v;
  // reduce against the RREF rows; each row's pivot is its first nonzero entry
  for (uint32_t r = 0; r < rr_.rows; ++r) {
    uint32_t c = 0;
    while (c < ambient_ && rr_.at(r, c) == 0) ++c;
    if (c == ambient_ || w[c] == 0) continue;
    Fel f = w[c];
    for (uint32_t j = c; j < ambient_; ++j) w[j] = F.sub(w[j], F.mul(f, rr_.at(r, j)));
  }
  return vec_is_zero(w);
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("containment test ambient mismatch");
  for (uint32_t i = 0; i < other.rr_.rows; ++i) {
    Vec v(ambient_);
    for (uint32_t j = 0; j < ambient_; ++j) v[j] = other.rr_.at(i, j);
    if (!contains(v)) return false;
  }
  return true;
}

Mat Subspace::basis() const { return transpose(rr_); }

std::optional<Vec> RowEchelon::insert(Vec v) {
  const Field& F = *F_;
  if (v.size() != n_) throw DimensionMismatch("echelon insert length mismatch");
  for (uint32_t i = 0; i < rows_.size(); ++i) {
    Fel f = v[piv_[i]];
    if (f == 0) continue;
    for (uint32_t j = piv_[i]; j < n_; ++j) v[j] = F.sub(v[j], F.mul(f, rows_[i][j]));
  }
  uint32_t p = 0;
  while (p < n_ && v[p] == 0) ++p;
  if (p == n_) return std::nullopt;
  Fel inv = F.inv(v[p]);
  if (inv != 1)
    for (uint32_t j = p; j < n_; ++j) v[j] = F.mul(v[j], inv);
  for (uint32_t i = 0; i < rows_.size(); ++i) {
    Fel f = rows_[i][p];
    if (f == 0) continue;
    for (uint32_t j = p; j < n_; ++j) rows_[i][j] = F.sub(rows_[i][j], F.mul(f, v[j]));
  }
  rows_.push_back(v);
  piv_.push_back(p);
  return v;
}

Mat RowEchelon::as_matrix() const {
  Mat z(F_, uint32_t(rows_.size()), n_);
  for (uint32_t i = 0; i < rows_.size(); ++i)
    for (uint32_t j = 0; j < n_; ++j) z.at(i, j) = rows_[i][j];
  return z;
}

Mat parse_matrix(const FieldRef& F, const std::string& text) {
  std::vector<std::vector<Fel>> rows;
  std::vector<Fel> cur;
  std::string token;
  int bracket_depth = 0;
  auto flush_token = [&]() {
    if (token.find_first_not_of(" \t\r\n") == std::string::npos)
      throw ParseError("empty matrix entry");
    cur.push_back(F->parse(token));
    token.clear();
  };
  auto flush_row = [&]() {
    flush_token();
    if (!rows.empty() && rows.front().size() != cur.size())
      throw ParseError("ragged matrix rows");
    rows.push_back(std::move(cur));
    cur.clear();
  };
  for (char ch : text) {
    if (ch == '[') ++bracket_depth;
    if (ch == ']') --bracket_depth;
    if (bracket_depth == 0 && ch == ',') {
      flush_token();
    } else if (bracket_depth == 0 && ch == ';') {
      flush_row();
    } else {
      token += ch;
    }
  }
  if (bracket_depth != 0) throw ParseError("unbalanced brackets in matrix");
  flush_row();
  Mat m(F, uint32_t(rows.size()), uint32_t(rows.front().size()));
  for (uint32_t i = 0; i < m.rows; ++i)
    for (uint32_t j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
  return m;
}

std::string show_matrix(const Mat& x) {
  std::string out;
  for (uint32_t i = 0; i < x.rows; ++i) {
    if (i) out += ';';
    for (uint32_t j = 0; j < x.cols; ++j) {
      if (j) out += ',';
      out += x.F->show(x.at(i, j));
    }
  }
  return out;
}

}  // namespace h1f
