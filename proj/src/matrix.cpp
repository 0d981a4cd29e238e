#include "modrep/matrix.hpp"

#include "modrep/error.hpp"

namespace modrep {

namespace {

void require_same_field(const Matrix& a, const Matrix& b) {
  if (!same_field(a.field(), b.field())) throw InputError("matrices over different fields");
}

}  // namespace

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, Scalar{0}) {}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field->one();
  return m;
}

Matrix Matrix::from_ints(FieldPtr field, std::initializer_list<std::initializer_list<long long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  Matrix m(field, r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw InputError("ragged matrix literal");
    std::size_t j = 0;
    for (long long v : row) m(i, j++) = field->from_int(v);
    ++i;
  }
  return m;
}

Matrix Matrix::column(FieldPtr field, const Vector& v) {
  Matrix m(std::move(field), v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

Matrix Matrix::row(FieldPtr field, const Vector& v) {
  Matrix m(std::move(field), 1, v.size());
  for (std::size_t i = 0; i < v.size(); ++i) m(0, i) = v[i];
  return m;
}

Vector Matrix::row_vector(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::col_vector(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw InputError("block out of range");
  Matrix b(field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  }
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw InputError("block out of range");
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Matrix Matrix::scaled(Scalar s) const {
  Matrix out(*this);
  for (auto& x : out.data_) x = field_->mul(x, s);
  return out;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw InputError("vector length mismatch");
  Vector out(rows_, Scalar{0});
  const FiniteField& f = *field_;
  for (std::size_t i = 0; i < rows_; ++i) {
    Scalar acc{0};
    for (std::size_t j = 0; j < cols_; ++j) {
      const Scalar a = (*this)(i, j);
      if (a.code != 0 && v[j].code != 0) acc = f.add(acc, f.mul(a, v[j]));
    }
    out[i] = acc;
  }
  return out;
}

bool Matrix::is_zero() const {
  for (Scalar x : data_) {
    if (x.code != 0) return false;
  }
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if ((*this)(i, j).code != (i == j ? 1u : 0u)) return false;
    }
  }
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw InputError("matrix product shape mismatch");
  const FieldPtr& fp = a.field_ ? a.field_ : b.field_;
  Matrix out(fp, a.rows_, b.cols_);
  if (a.rows_ == 0 || b.cols_ == 0 || a.cols_ == 0) return out;
  require_same_field(a, b);
  const FiniteField& f = *fp;
  for (std::size_t i = 0; i < a.rows_; ++i) {
    Scalar* orow = out.data_.data() + i * out.cols_;
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar x = a(i, k);
      if (x.code == 0) continue;
      const Scalar* brow = b.data_.data() + k * b.cols_;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (brow[j].code != 0) orow[j] = f.add(orow[j], f.mul(x, brow[j]));
      }
    }
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix sum shape mismatch");
  Matrix out(a);
  if (out.data_.empty()) return out;
  require_same_field(a, b);
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = a.field_->add(a.data_[i], b.data_[i]);
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix difference shape mismatch");
  Matrix out(a);
  if (out.data_.empty()) return out;
  require_same_field(a, b);
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = a.field_->sub(a.data_[i], b.data_[i]);
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix hstack(std::span<const Matrix> parts) {
  if (parts.empty()) return {};
  std::size_t cols = 0;
  for (const auto& p : parts) {
    if (p.rows() != parts[0].rows()) throw InputError("hstack row mismatch");
    cols += p.cols();
  }
  Matrix out(parts[0].field(), parts[0].rows(), cols);
  std::size_t c = 0;
  for (const auto& p : parts) {
    out.set_block(0, c, p);
    c += p.cols();
  }
  return out;
}

Matrix vstack(std::span<const Matrix> parts) {
  if (parts.empty()) return {};
  std::size_t rows = 0;
  for (const auto& p : parts) {
    if (p.cols() != parts[0].cols()) throw InputError("vstack column mismatch");
    rows += p.rows();
  }
  Matrix out(parts[0].field(), rows, parts[0].cols());
  std::size_t r = 0;
  for (const auto& p : parts) {
    out.set_block(r, 0, p);
    r += p.rows();
  }
  return out;
}

Matrix block_diag(std::span<const Matrix> parts) {
  if (parts.empty()) return {};
  std::size_t rows = 0, cols = 0;
  for (const auto& p : parts) {
    rows += p.rows();
    cols += p.cols();
  }
  Matrix out(parts[0].field(), rows, cols);
  std::size_t r = 0, c = 0;
  for (const auto& p : parts) {
    out.set_block(r, c, p);
    r += p.rows();
    c += p.cols();
  }
  return out;
}

Vector flatten(const Matrix& m) { return m.data(); }

Matrix unflatten(FieldPtr field, const Vector& v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols) throw InputError("unflatten size mismatch");
  Matrix m(std::move(field), rows, cols);
  for (std::size_t i = 0; i < v.size(); ++i) m(i / cols, i % cols) = v[i];
  return m;
}

std::vector<std::size_t> rref_in_place(Matrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const FiniteField& f = *m.field();
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> nz;
  nz.reserve(cols);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (m(i, c).code != 0) {
        piv = i;
        break;
      }
    }
    if (piv == rows) continue;
    if (piv != r) {
      auto a = m.row_span(piv), b = m.row_span(r);
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[j], b[j]);
    }
    auto prow = m.row_span(r);
    const Scalar inv = f.inv(prow[c]);
    nz.clear();
    for (std::size_t j = c; j < cols; ++j) {
      if (prow[j].code != 0) {
        prow[j] = f.mul(prow[j], inv);
        nz.push_back(j);
      }
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      auto row = m.row_span(i);
      const Scalar factor = row[c];
      if (factor.code == 0) continue;
      const Scalar negf = f.neg(factor);
      for (std::size_t j : nz) row[j] = f.add(row[j], f.mul(negf, prow[j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(const Matrix& m) {
  Matrix copy(m);
  return rref_in_place(copy).size();
}

Subspace kernel(const Matrix& m) {
  const FieldPtr& field = m.field();
  Matrix r(m);
  const auto pivots = rref_in_place(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vector> vecs;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector x(m.cols(), Scalar{0});
    x[free] = field->one();
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = field->neg(r(i, free));
    vecs.push_back(std::move(x));
  }
  return Subspace::span(field, m.cols(), vecs);
}

Reduction mat_reduce(const Matrix& m) {
  Reduction out;
  out.rref = m;
  out.pivots = rref_in_place(out.rref);
  out.rank = out.pivots.size();
  out.kernel = kernel(m);
  std::vector<Vector> cols;
  for (auto c : out.pivots) cols.push_back(m.col_vector(c));
  out.image = Subspace::span(m.field(), m.rows(), cols);
  return out;
}

std::optional<Matrix> linear_solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw InputError("linear_solve: A and B row counts differ");
  const FieldPtr& field = a.field() ? a.field() : b.field();
  const std::size_t n = a.cols(), s = b.cols();
  Matrix aug(field, a.rows(), n + s);
  aug.set_block(0, 0, a);
  aug.set_block(0, n, b);
  const auto pivots = rref_in_place(aug);
  Matrix x(field, n, s);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] >= n) return std::nullopt;
    for (std::size_t j = 0; j < s; ++j) x(pivots[i], j) = aug(i, n + j);
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  if (m.rows() == 0) return m;
  if (rank(m) != m.rows()) return std::nullopt;
  return linear_solve(m, Matrix::identity(m.field(), m.rows()));
}

// ---------------------------------------------------------------- Subspace

Subspace Subspace::zero(FieldPtr field, std::size_t ambient) {
  Subspace s;
  s.field_ = field;
  s.ambient_ = ambient;
  s.basis_ = Matrix(std::move(field), 0, ambient);
  return s;
}

Subspace Subspace::full(FieldPtr field, std::size_t ambient) {
  Subspace s;
  s.field_ = field;
  s.ambient_ = ambient;
  s.basis_ = Matrix::identity(field, ambient);
  for (std::size_t i = 0; i < ambient; ++i) s.pivots_.push_back(i);
  return s;
}

Subspace Subspace::span(const Matrix& rows) {
  Subspace s;
  s.field_ = rows.field();
  s.ambient_ = rows.cols();
  Matrix r(rows);
  s.pivots_ = rref_in_place(r);
  s.basis_ = r.block(0, 0, s.pivots_.size(), rows.cols());
  return s;
}

Subspace Subspace::span(FieldPtr field, std::size_t ambient, std::span<const Vector> vectors) {
  Matrix rows(field, vectors.size(), ambient);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != ambient) throw InputError("span: vector length mismatch");
    for (std::size_t j = 0; j < ambient; ++j) rows(i, j) = vectors[i][j];
  }
  return span(rows);
}

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != ambient_) throw InputError("reduce: vector length mismatch");
  Vector out(v);
  if (pivots_.empty()) return out;
  const FiniteField& f = *field_;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Scalar c = out[pivots_[i]];
    if (c.code == 0) continue;
    const Scalar negc = f.neg(c);
    auto brow = basis_.row_span(i);
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (brow[j].code != 0) out[j] = f.add(out[j], f.mul(negc, brow[j]));
    }
  }
  return out;
}

bool Subspace::contains(const Vector& v) const {
  for (Scalar x : reduce(v)) {
    if (x.code != 0) return false;
  }
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t i = 0; i < other.dim(); ++i) {
    if (!contains(other.basis_vector(i))) return false;
  }
  return true;
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) return std::nullopt;
  Vector c(pivots_.size());
  for (std::size_t i = 0; i < pivots_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw InputError("subspace sum: ambient mismatch");
  if (dim() == 0) return other;
  if (other.dim() == 0) return *this;
  const Matrix parts[] = {basis_, other.basis_};
  return span(vstack(parts));
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw InputError("subspace intersection: ambient mismatch");
  if (dim() == 0 || other.dim() == 0) return zero(field_ ? field_ : other.field_, ambient_);
  // a^T B_self = b^T B_other  <=>  [B_self; -B_other]^T (a; b) = 0
  const Matrix parts[] = {basis_, other.basis_.scaled(field_->neg(field_->one()))};
  const Subspace rel = kernel(vstack(parts).transpose());
  std::vector<Vector> vecs;
  for (std::size_t i = 0; i < rel.dim(); ++i) {
    Vector a(rel.basis().row_span(i).begin(), rel.basis().row_span(i).begin() + static_cast<std::ptrdiff_t>(dim()));
    vecs.push_back(basis_.transpose().apply(a));
  }
  return span(field_, ambient_, vecs);
}

}  // namespace modrep
