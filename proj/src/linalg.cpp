#include "dgbrauer/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace dgb {

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_columns(Field f, std::size_t rows, const std::vector<Vector>& cols) {
  Matrix m(f, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw DimensionMismatch("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = cols[c][r];
  }
  return m;
}

Matrix Matrix::from_rows(Field f, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("matrix product dimension mismatch");
  Matrix p(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (!o.at(k, j).is_zero()) p.at(i, j) += a * o.at(k, j);
    }
  return p;
}

Vector Matrix::operator*(const Vector& v) const {
  if (cols_ != v.size()) throw DimensionMismatch("matrix-vector dimension mismatch");
  Vector out(rows_, Scalar::zero(field_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      if (!v[k].is_zero() && !at(i, k).is_zero()) out[i] += at(i, k) * v[k];
  return out;
}

bool is_zero_vector(std::span<const Scalar> v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

namespace {

Echelon reduce_mod_p(const Matrix& m) {
  const Field f = m.field();
  const std::uint64_t p = f.characteristic();
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<std::uint32_t> a(R * C);
  for (std::size_t r = 0; r < R; ++r)
    for (std::size_t c = 0; c < C; ++c) a[r * C + c] = m.at(r, c).residue_value();
  auto inv = [p](std::uint64_t x) {
    std::uint64_t r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = r * x % p;
      x = x * x % p;
      e >>= 1;
    }
    return r;
  };
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < C && row < R; ++col) {
    std::size_t piv = row;
    while (piv < R && a[piv * C + col] == 0) ++piv;
    if (piv == R) continue;
    if (piv != row)
      std::swap_ranges(a.begin() + piv * C, a.begin() + (piv + 1) * C, a.begin() + row * C);
    const std::uint64_t s = inv(a[row * C + col]);
    for (std::size_t c = col; c < C; ++c) a[row * C + c] = std::uint32_t(a[row * C + c] * s % p);
    for (std::size_t r = 0; r < R; ++r) {
      if (r == row || a[r * C + col] == 0) continue;
      const std::uint64_t factor = p - a[r * C + col];
      for (std::size_t c = col; c < C; ++c)
        if (a[row * C + c])
          a[r * C + c] = std::uint32_t((a[r * C + c] + factor * a[row * C + c]) % p);
    }
    pivots.push_back(col);
    ++row;
  }
  Matrix out(f, row, C);
  for (std::size_t r = 0; r < row; ++r)
    for (std::size_t c = 0; c < C; ++c) out.at(r, c) = Scalar::residue(f, a[r * C + c]);
  return {std::move(out), std::move(pivots)};
}

Echelon reduce_rational(const Matrix& m) {
  const Field f = m.field();
  const std::size_t R = m.rows(), C = m.cols();
  // Clear denominators row by row.
  std::vector<mpz_class> a(R * C);
  for (std::size_t r = 0; r < R; ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < C; ++c) {
      const mpq_class& q = m.at(r, c).rational();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    }
    for (std::size_t c = 0; c < C; ++c) {
      const mpq_class& q = m.at(r, c).rational();
      a[r * C + c] = q.get_num() * (l / q.get_den());
    }
  }
  // Bareiss forward elimination: every division below is exact.
  std::vector<std::size_t> pivots;
  mpz_class prev = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < C && row < R; ++col) {
    std::size_t piv = row;
    while (piv < R && a[piv * C + col] == 0) ++piv;
    if (piv == R) continue;
    if (piv != row)
      for (std::size_t c = 0; c < C; ++c) std::swap(a[piv * C + c], a[row * C + c]);
    const mpz_class pv = a[row * C + col];
    for (std::size_t r = row + 1; r < R; ++r) {
      const mpz_class lead = a[r * C + col];
      for (std::size_t c = col + 1; c < C; ++c) {
        mpz_class t = pv * a[r * C + c] - lead * a[row * C + c];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[r * C + c] = std::move(t);
      }
      a[r * C + col] = 0;
    }
    prev = pv;
    pivots.push_back(col);
    ++row;
  }
  // Back substitution to reduced form over Q on the rank rows only.
  std::vector<mpq_class> q(row * C);
  for (std::size_t r = 0; r < row; ++r) {
    const mpz_class& pv = a[r * C + pivots[r]];
    for (std::size_t c = 0; c < C; ++c) {
      q[r * C + c] = mpq_class(a[r * C + c], pv);
      q[r * C + c].canonicalize();
    }
  }
  for (std::size_t r = row; r-- > 0;) {
    const std::size_t pc = pivots[r];
    for (std::size_t up = 0; up < r; ++up) {
      mpq_class factor = q[up * C + pc];
      if (factor == 0) continue;
      for (std::size_t c = pc; c < C; ++c)
        if (q[r * C + c] != 0) q[up * C + c] -= factor * q[r * C + c];
    }
  }
  Matrix out(f, row, C);
  for (std::size_t r = 0; r < row; ++r)
    for (std::size_t c = 0; c < C; ++c) out.at(r, c) = Scalar::from_rational(f, q[r * C + c]);
  return {std::move(out), std::move(pivots)};
}

}  // namespace

Echelon row_reduce(const Matrix& m) {
  return m.field().is_rationals() ? reduce_rational(m) : reduce_mod_p(m);
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

namespace {

std::vector<Vector> kernel_from_echelon(const Echelon& e, std::size_t cols, Field f) {
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols, Scalar::zero(f));
    v[free] = Scalar::one(f);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced.at(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

std::vector<Vector> nullspace(const Matrix& m) {
  return kernel_from_echelon(row_reduce(m), m.cols(), m.field());
}

SolveReport solve_report(const Matrix& m, const Matrix* b) {
  SolveReport out;
  const Field f = m.field();
  if (!b) {
    Echelon e = row_reduce(m);
    out.rank = e.pivots.size();
    out.nullspace_basis = kernel_from_echelon(e, m.cols(), f);
    return out;
  }
  if (b->rows() != m.rows())
    throw DimensionMismatch("right-hand side has " + std::to_string(b->rows()) +
                            " rows, matrix has " + std::to_string(m.rows()));
  if (!(b->field() == f)) throw FieldMismatch("right-hand side over a different field");
  const std::size_t C = m.cols(), K = b->cols();
  Matrix aug(f, m.rows(), C + K);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < C; ++c) aug.at(r, c) = m.at(r, c);
    for (std::size_t k = 0; k < K; ++k) aug.at(r, C + k) = b->at(r, k);
  }
  Echelon e = row_reduce(aug);
  // Pivots among the coefficient columns give the rank of m; a pivot in an
  // augmented column means that system is inconsistent.
  std::size_t r = 0;
  bool consistent = true;
  for (auto p : e.pivots) {
    if (p < C)
      ++r;
    else
      consistent = false;
  }
  out.rank = r;
  Echelon coeff{Matrix(f, r, C), {}};
  for (std::size_t i = 0; i < r; ++i) {
    coeff.pivots.push_back(e.pivots[i]);
    for (std::size_t c = 0; c < C; ++c) coeff.reduced.at(i, c) = e.reduced.at(i, c);
  }
  out.nullspace_basis = kernel_from_echelon(coeff, C, f);
  if (consistent) {
    Matrix x(f, C, K);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t k = 0; k < K; ++k) x.at(e.pivots[i], k) = e.reduced.at(i, C + k);
    out.particular_solution = std::move(x);
  }
  return out;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  Matrix rhs = Matrix::from_columns(m.field(), b.size(), {b});
  auto rep = solve_report(m, &rhs);
  if (!rep.particular_solution) return std::nullopt;
  return rep.particular_solution->column(0);
}

Vector RowSpace::reduce(Vector v) const {
  if (v.size() != ambient_) throw DimensionMismatch("vector outside ambient space");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar c = v[pivots_[i]];
    if (c.is_zero()) continue;
    for (std::size_t k = 0; k < ambient_; ++k)
      if (!rows_[i][k].is_zero()) v[k] -= c * rows_[i][k];
  }
  return v;
}

bool RowSpace::contains(const Vector& v) const { return is_zero_vector(reduce(v)); }

bool RowSpace::insert(Vector v) {
  v = reduce(std::move(v));
  std::size_t piv = 0;
  while (piv < ambient_ && v[piv].is_zero()) ++piv;
  if (piv == ambient_) return false;
  const Scalar s = v[piv].inverse();
  for (auto& x : v) x *= s;
  for (auto& row : rows_) {
    const Scalar c = row[piv];
    if (c.is_zero()) continue;
    for (std::size_t k = 0; k < ambient_; ++k)
      if (!v[k].is_zero()) row[k] -= c * v[k];
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(piv);
  return true;
}

}  // namespace dgb
