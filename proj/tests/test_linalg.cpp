#include <doctest.h>

#include <numeric>

#include "qci/errors.hpp"
#include "qci/matrix.hpp"
#include "support.hpp"

using namespace qci;
using qci::testing::random_matrix;
using qci::testing::Rng;

TEST_CASE("prime field arithmetic") {
  const PrimeField f(32003);
  CHECK(f.add(32002, 5) == 4);
  CHECK(f.sub(3, 5) == 32001);
  CHECK(f.neg(0) == 0);
  CHECK(f.from_int(-1) == 32002);
  CHECK(f.to_signed(32002) == -1);
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    const Scalar a = 1 + testing::random_scalar(f, rng) % 32002;
    CHECK(f.mul(a, f.inv(a)) == 1);
  }
  CHECK_THROWS_AS(f.inv(0), GuardError);
}

TEST_CASE("prime guard") {
  CHECK_NOTHROW(PrimeField(31013));
  CHECK_THROWS_AS(PrimeField(32001), GuardError);  // 3 * 10667
  CHECK_THROWS_AS(PrimeField(1), GuardError);
  CHECK(is_prime(2));
  CHECK_FALSE(is_prime(91));
}

TEST_CASE("rank examples") {
  const PrimeField f;
  CHECK(rank(f, DenseMatrix(3, 3)) == 0);
  CHECK(rank(f, DenseMatrix::identity(3)) == 3);
  CHECK(rank(f, DenseMatrix(2, 3, {1, 2, 3, 2, 4, 6})) == 1);
  CHECK(rank(f, DenseMatrix(0, 4)) == 0);
  CHECK(rank(f, DenseMatrix(4, 0)) == 0);
}

TEST_CASE("kernel examples") {
  const PrimeField f;
  CHECK(kernel_basis(f, DenseMatrix::identity(2)).empty());

  const auto k = kernel_basis(f, DenseMatrix(1, 2, {1, 1}));
  REQUIRE(k.size() == 1);
  CHECK(k[0] == std::vector<Scalar>{1, f.prime() - 1});

  // (A, B) -> A*x + B*(-x) on linear A, B; rows index S_2, columns S_1 + S_1
  const auto s1 = graded_basis(1);
  DenseMatrix m(dim_S(2), 6);
  for (std::size_t j = 0; j < 3; ++j) {
    const auto row = monomial_index(s1[j] * Monomial{1, 0, 0});
    m(row, j) = 1;
    m(row, 3 + j) = f.neg(1);
  }
  CHECK(kernel_basis(f, m).size() == 3);
}

TEST_CASE("rank-nullity and echelon shape on random matrices") {
  const PrimeField f(101);
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t rows = 1 + rng() % 12, cols = 1 + rng() % 12;
    const DenseMatrix m = random_matrix(f, rows, cols, rng, 0.4);
    const std::size_t rk = rank(f, m);
    const auto ker = kernel_basis(f, m);
    CHECK(rk + ker.size() == cols);
    CHECK(rk <= std::min(rows, cols));
    CHECK(rk == rank(f, m.transpose()));
    for (const auto& v : ker) {
      const auto image = multiply(f, m, v);
      CHECK(std::all_of(image.begin(), image.end(), [](Scalar s) { return s == 0; }));
    }
  }
}

TEST_CASE("rank is invariant under row and column permutations") {
  const PrimeField f(32003);
  Rng rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = 2 + rng() % 8, cols = 2 + rng() % 8;
    // low-rank product so permutations are not trivially full rank
    const std::size_t inner = 1 + rng() % 4;
    const DenseMatrix a = random_matrix(f, rows, inner, rng), b = random_matrix(f, inner, cols, rng);
    DenseMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t k = 0; k < inner; ++k) m(i, j) = f.fma(m(i, j), a(i, k), b(k, j));

    std::vector<std::size_t> rp(rows), cp(cols);
    std::iota(rp.begin(), rp.end(), 0);
    std::iota(cp.begin(), cp.end(), 0);
    std::shuffle(rp.begin(), rp.end(), rng);
    std::shuffle(cp.begin(), cp.end(), rng);
    DenseMatrix permuted(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) permuted(i, j) = m(rp[i], cp[j]);
    CHECK(rank(f, m) == rank(f, permuted));
    CHECK(rank(f, m) <= inner);
  }
}

TEST_CASE("echelon and kernel are deterministic") {
  const PrimeField f;
  Rng rng(17);
  const DenseMatrix m = random_matrix(f, 9, 14, rng, 0.5);
  const auto e1 = row_echelon(f, m), e2 = row_echelon(f, m);
  CHECK(e1.reduced == e2.reduced);
  CHECK(e1.pivots == e2.pivots);
  CHECK(kernel_basis(f, m) == kernel_basis(f, m));
}

TEST_CASE("quotient projector") {
  const PrimeField f(7);
  // span of (1,1,0) in F_7^3: quotient dim 2, (1,1,0) projects to zero
  const QuotientProjector proj(f, row_echelon(f, DenseMatrix(1, 3, {1, 1, 0})), 3);
  CHECK(proj.quotient_dim() == 2);
  CHECK(proj.project({1, 1, 0}) == std::vector<Scalar>{0, 0});
  CHECK(proj.project({1, 0, 0}) == std::vector<Scalar>{6, 0});
  CHECK(proj.project({0, 0, 3}) == std::vector<Scalar>{0, 3});
}
