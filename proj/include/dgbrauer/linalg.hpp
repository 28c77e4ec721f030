#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "dgbrauer/scalar.hpp"

namespace dgb {

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over a single Field.
class Matrix {
 public:
  Matrix(Field f, std::size_t rows, std::size_t cols);
  static Matrix identity(Field f, std::size_t n);
  /// Builds a matrix whose columns are the given vectors (all of length rows).
  static Matrix from_columns(Field f, std::size_t rows, const std::vector<Vector>& cols);
  static Matrix from_rows(Field f, std::size_t cols, const std::vector<Vector>& rows);

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const Scalar> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  Vector column(std::size_t c) const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Vector operator*(const Vector& v) const;
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form together with its pivot columns.
struct Echelon {
  Matrix reduced;                   // rank rows, RREF
  std::vector<std::size_t> pivots;  // pivot column of each row
};

/// Exact RREF. Over Q the forward pass is fraction-free (Bareiss on integers
/// after clearing row denominators); over F_p plain Gauss-Jordan.
Echelon row_reduce(const Matrix& m);

std::size_t rank(const Matrix& m);

struct SolveReport {
  std::size_t rank = 0;
  std::vector<Vector> nullspace_basis;
  /// One column per right-hand side column; present iff every system is consistent.
  std::optional<Matrix> particular_solution;
};

/// Rank, kernel basis and (when b is given) a particular solution of M x = b.
/// The particular solution sets every free variable to zero.
SolveReport solve_report(const Matrix& m, const Matrix* b = nullptr);

std::vector<Vector> nullspace(const Matrix& m);

/// Single right-hand side convenience: nullopt when inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

bool is_zero_vector(std::span<const Scalar> v);

/// Incrementally maintained subspace of F^n kept in reduced echelon form.
class RowSpace {
 public:
  RowSpace(Field f, std::size_t ambient) : field_(f), ambient_(ambient) {}

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  /// Adds v; returns true when the dimension grew.
  bool insert(Vector v);
  bool contains(const Vector& v) const;
  /// Residue of v after reduction by the current basis (zero iff contained).
  Vector reduce(Vector v) const;
  const std::vector<Vector>& basis() const { return rows_; }

 private:
  Field field_;
  std::size_t ambient_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace dgb
