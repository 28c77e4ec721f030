#include <random>

#include "doctest.h"
#include "dgbrauer/linalg.hpp"

using namespace dgb;

namespace {

const Field Q = Field::rationals();

Matrix int_matrix(Field f, std::vector<std::vector<long>> rows) {
  Matrix m(f, rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = Scalar::from_int(f, rows[r][c]);
  return m;
}

// Textbook Gauss-Jordan over mpq, used only as an oracle for the Bareiss path.
std::size_t naive_rank(const Matrix& m) {
  std::vector<std::vector<mpq_class>> a(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m.at(r, c).rational();
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && a[p][col] == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[row]);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || a[r][col] == 0) continue;
      mpq_class f = a[r][col] / a[row][col];
      for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] -= f * a[row][c];
    }
    ++row;
  }
  return row;
}

Matrix random_matrix(Field f, std::mt19937& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> num(-3, 3), den(1, 4), shape(0, 3);
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      if (shape(rng) == 0) continue;  // keep some sparsity so ranks vary
      const int d = f.is_rationals() ? den(rng) : 1;
      m.at(r, c) = Scalar::from_rational(f, mpq_class(num(rng), d));
    }
  // Force rank deficiency in about half the cases by copying a row.
  if (rows > 1 && shape(rng) < 2)
    for (std::size_t c = 0; c < cols; ++c) m.at(rows - 1, c) = m.at(0, c) + m.at(0, c);
  return m;
}

}  // namespace

TEST_CASE("scalar arithmetic examples") {
  CHECK(Scalar::from_int(Q, 2).inverse().to_string() == "1/2");
  const Field F5 = Field::prime(5);
  CHECK(Scalar::from_int(F5, 2).inverse().to_string() == "3");
  CHECK((Scalar::parse(Q, "1/2") + Scalar::parse(Q, "1/3")).to_string() == "5/6");
  CHECK((-Scalar::from_int(F5, 2)).to_string() == "3");
  CHECK(Scalar::parse(Q, "-4/2") == Scalar::from_int(Q, -2));
  CHECK_THROWS(Scalar::parse(Q, "4/-2"));
}

TEST_CASE("scalar errors") {
  CHECK_THROWS_AS(Scalar::zero(Q).inverse(), DivisionByZero);
  CHECK_THROWS_AS(Scalar::one(Q) + Scalar::one(Field::prime(3)), FieldMismatch);
  CHECK_THROWS_AS(Field::prime(4), std::invalid_argument);
  CHECK_THROWS_AS(Scalar::parse(Q, "1/0"), DivisionByZero);
  CHECK_THROWS_AS(Scalar::parse(Q, "x"), std::invalid_argument);
  CHECK_THROWS_AS(Scalar::parse(Field::prime(3), "1/3"), DivisionByZero);
}

TEST_CASE("field parsing") {
  CHECK(Field::parse("Q") == Q);
  CHECK(Field::parse("Fp:7") == Field::prime(7));
  CHECK(Field::parse("F3") == Field::prime(3));
  CHECK(Field::parse("Fp:7").to_string() == "Fp:7");
  CHECK_THROWS(Field::parse("Fp:9"));
  CHECK_THROWS(Field::parse("R"));
}

TEST_CASE("fraction over F_p reads as a * b^-1") {
  const Field F7 = Field::prime(7);
  CHECK(Scalar::parse(F7, "3/2") == Scalar::from_int(F7, 5));
  CHECK(Scalar::parse(F7, "-1").to_string() == "6");
}

TEST_CASE("solve_report examples") {
  auto id = Matrix::identity(Q, 2);
  auto rep = solve_report(id);
  CHECK(rep.rank == 2);
  CHECK(rep.nullspace_basis.empty());

  auto m = int_matrix(Q, {{1, 2}, {2, 4}});
  rep = solve_report(m);
  CHECK(rep.rank == 1);
  REQUIRE(rep.nullspace_basis.size() == 1);
  CHECK(rep.nullspace_basis[0] == Vector{Scalar::from_int(Q, -2), Scalar::from_int(Q, 1)});

  Matrix b = int_matrix(Q, {{1}, {3}});
  rep = solve_report(m, &b);
  CHECK_FALSE(rep.particular_solution.has_value());
  Matrix b2 = int_matrix(Q, {{1}, {2}});
  rep = solve_report(m, &b2);
  REQUIRE(rep.particular_solution.has_value());
  CHECK((m * *rep.particular_solution) == b2);

  Matrix wrong(Q, 3, 1);
  CHECK_THROWS_AS(solve_report(m, &wrong), DimensionMismatch);
}

TEST_CASE("quaternion two-sided multiplication matrix has full rank 16") {
  // Structure constants of (-1,-1)/Q written out by hand: e_a e_b = sign * e_c.
  const int prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  auto build = [&](Field f) {
    Matrix m(f, 16, 16);
    for (int p = 0; p < 4; ++p)
      for (int q = 0; q < 4; ++q)
        for (int x = 0; x < 4; ++x) {
          // p * x * q
          int px = prod[p][x], s1 = sign[p][x];
          int r = prod[px][q], s = s1 * sign[px][q];
          m.at(x * 4 + r, p * 4 + q) = Scalar::from_int(f, s);
        }
    return m;
  };
  Matrix mq = build(Q);
  CHECK(rank(mq) == 16);
  // Independent oracle: integer matrix rank over Q is at least its rank mod p.
  CHECK(rank(build(Field::prime(101))) == 16);
  CHECK(naive_rank(mq) == 16);
}

TEST_CASE("property: rank(M) == rank(M^T) and Bareiss matches naive elimination") {
  std::mt19937 rng(20261017);
  std::uniform_int_distribution<int> dim(1, 7);
  for (int trial = 0; trial < 200; ++trial) {
    Matrix m = random_matrix(Q, rng, dim(rng), dim(rng));
    const std::size_t r = rank(m);
    CHECK(r == rank(m.transpose()));
    CHECK(r == naive_rank(m));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t c = 0; c < m.cols(); ++c) CHECK(m.at(i, c).is_canonical());
    Echelon e = row_reduce(m);
    for (std::size_t i = 0; i < e.reduced.rows(); ++i)
      for (std::size_t c = 0; c < e.reduced.cols(); ++c) CHECK(e.reduced.at(i, c).is_canonical());
  }
}

TEST_CASE("property: nullspace vectors are annihilated and independent") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dim(1, 6);
  for (const Field f : {Q, Field::prime(3), Field::prime(5)}) {
    for (int trial = 0; trial < 60; ++trial) {
      Matrix m = random_matrix(f, rng, dim(rng), dim(rng));
      auto rep = solve_report(m);
      CHECK(rep.rank + rep.nullspace_basis.size() == m.cols());
      for (const auto& v : rep.nullspace_basis) CHECK(is_zero_vector(m * v));
      if (!rep.nullspace_basis.empty())
        CHECK(rank(Matrix::from_rows(f, m.cols(), rep.nullspace_basis)) == rep.nullspace_basis.size());
    }
  }
}

TEST_CASE("property: invertible systems are solved exactly") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> dim(1, 6), val(-5, 5);
  int solved = 0;
  for (const Field f : {Q, Field::prime(7)}) {
    for (int trial = 0; trial < 80; ++trial) {
      const std::size_t n = dim(rng);
      Matrix m(f, n, n);
      Matrix b(f, n, 1);
      for (std::size_t r = 0; r < n; ++r) {
        b.at(r, 0) = Scalar::from_int(f, val(rng));
        for (std::size_t c = 0; c < n; ++c) m.at(r, c) = Scalar::from_int(f, val(rng));
      }
      if (rank(m) != n) continue;
      auto rep = solve_report(m, &b);
      REQUIRE(rep.particular_solution.has_value());
      CHECK((m * *rep.particular_solution) == b);
      ++solved;
    }
  }
  CHECK(solved > 50);
}

TEST_CASE("row space insertion") {
  RowSpace s(Q, 3);
  CHECK(s.insert({Scalar::from_int(Q, 1), Scalar::from_int(Q, 2), Scalar::from_int(Q, 0)}));
  CHECK_FALSE(s.insert({Scalar::from_int(Q, 2), Scalar::from_int(Q, 4), Scalar::from_int(Q, 0)}));
  CHECK(s.insert({Scalar::from_int(Q, 0), Scalar::from_int(Q, 1), Scalar::from_int(Q, 1)}));
  CHECK(s.contains({Scalar::from_int(Q, 1), Scalar::from_int(Q, 3), Scalar::from_int(Q, 1)}));
  CHECK(s.dim() == 2);
}
