#include <vector>

#include "doctest.h"
#include "ratcurve/matrix.hpp"
#include "test_support.hpp"

using namespace ratcurve;
using ratcurve::testing::fp;
using ratcurve::testing::fq;

namespace {

template <class F>
Matrix<F> int_matrix(const F& f, std::vector<std::vector<long>> rows) {
  Matrix<F> m(f, rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = f.from_int(rows[i][j]);
  }
  return m;
}

template <class F>
Matrix<F> random_matrix(const F& f, Rng& rng, std::size_t r, std::size_t c, long lo, long hi) {
  Matrix<F> m(f, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m(i, j) = f.from_int(rng.between(lo, hi));
  }
  return m;
}

// Low-rank integer matrix: product of r x k and k x c factors.
template <class F>
Matrix<F> random_low_rank(const F& f, Rng& rng, std::size_t r, std::size_t c, std::size_t k) {
  return random_matrix(f, rng, r, k, -3, 3) * random_matrix(f, rng, k, c, -3, 3);
}

}  // namespace

TEST_SUITE("exact-arith") {
  TEST_CASE("rref of the identity and of a rank-one matrix") {
    const auto id = Matrix<PrimeField>::identity(fp(), 2);
    const auto r = rref(id);
    CHECK(r.reduced == id);
    CHECK(r.pivots == std::vector<std::size_t>{0, 1});

    const auto q = rref(int_matrix(fq(), {{1, 2}, {2, 4}}));
    CHECK(q.reduced == int_matrix(fq(), {{1, 2}, {0, 0}}));
    CHECK(q.pivots == std::vector<std::size_t>{0});
  }

  TEST_CASE("empty matrix reduces to itself") {
    Matrix<PrimeField> m(fp(), 0, 0);
    const auto r = rref(m);
    CHECK(r.rank() == 0);
    CHECK(r.reduced.rows() == 0);
  }

  TEST_CASE("random 10x10 over F_p: full rank, and the recorded row operations reproduce rref") {
    Rng rng(2024);
    const auto& f = fp();
    const std::size_t n = 10;
    Matrix<PrimeField> m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) = f.random(rng);
    }
    // rref([M | I]) = [R | E] with E * M = R.
    Matrix<PrimeField> aug(f, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
      aug(i, n + i) = f.one();
    }
    const auto ra = rref(aug);
    Matrix<PrimeField> r(f, n, n), e(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        r(i, j) = ra.reduced(i, j);
        e(i, j) = ra.reduced(i, n + j);
      }
    }
    CHECK(e * m == r);
    CHECK(rref(m).rank() == n);
    CHECK(r == Matrix<PrimeField>::identity(f, n));
  }

  TEST_CASE("kernel basis examples") {
    const auto k0 = kernel_basis(Matrix<RationalField>(fq(), 2, 3));
    CHECK(k0 == Matrix<RationalField>::identity(fq(), 3));

    const auto k1 = kernel_basis(int_matrix(fq(), {{1, 1}}));
    REQUIRE(k1.cols() == 1);
    CHECK(k1(0, 0) == -k1(1, 0));
    CHECK(sgn(k1(0, 0)) != 0);
  }

  TEST_CASE("property: M * kernel(M) = 0 and rank + nullity = cols") {
    Rng rng(31);
    for (int trial = 0; trial < 40; ++trial) {
      const auto r = static_cast<std::size_t>(rng.between(1, 7));
      const auto c = static_cast<std::size_t>(rng.between(1, 7));
      const auto k = static_cast<std::size_t>(rng.between(1, 4));
      const auto mp = random_low_rank(fp(), rng, r, c, k);
      const auto kp = kernel_basis(mp);
      CHECK((mp * kp).is_zero());
      CHECK(rank(mp) + kp.cols() == c);
      CHECK(rank(kp) == kp.cols());

      const auto mq = random_low_rank(fq(), rng, r, c, k);
      const auto kq = kernel_basis(mq);
      CHECK((mq * kq).is_zero());
      CHECK(rank(mq) + kq.cols() == c);
    }
  }

  TEST_CASE("property: rref is idempotent") {
    Rng rng(8);
    for (int trial = 0; trial < 30; ++trial) {
      const auto m = random_low_rank(fp(), rng, 6, 8, static_cast<std::size_t>(rng.between(1, 6)));
      const auto once = rref(m);
      const auto twice = rref(once.reduced);
      CHECK(twice.reduced == once.reduced);
      CHECK(twice.pivots == once.pivots);
    }
  }

  TEST_CASE("property: prime and rational ranks agree on small integer matrices (three primes)") {
    const PrimeField fields[] = {PrimeField(2147483647ULL), PrimeField(4294967291ULL),
                                 PrimeField(1048583ULL)};
    Rng rng(77);
    for (int trial = 0; trial < 40; ++trial) {
      const auto r = static_cast<std::size_t>(rng.between(1, 8));
      const auto c = static_cast<std::size_t>(rng.between(1, 8));
      std::vector<std::vector<long>> ints(r, std::vector<long>(c));
      for (auto& row : ints) {
        for (auto& v : row) v = rng.between(-10, 10);
      }
      const auto q_rank = rank(int_matrix(fq(), ints));
      for (const auto& f : fields) CHECK(rank(int_matrix(f, ints)) == q_rank);
    }
  }

  TEST_CASE("solve: identity, inconsistent system, and construct-then-solve") {
    const auto& f = fq();
    const std::vector<mpq_class> b{3, mpq_class(1, 2)};
    const auto x = solve(Matrix<RationalField>::identity(f, 2), std::span<const mpq_class>(b));
    REQUIRE(x);
    CHECK(*x == b);

    const std::vector<mpq_class> b2{1, 2};
    CHECK_FALSE(solve(int_matrix(f, {{1}, {1}}), std::span<const mpq_class>(b2)));

    Rng rng(5);
    for (int trial = 0; trial < 25; ++trial) {
      const auto m = random_low_rank(fp(), rng, 5, 7, static_cast<std::size_t>(rng.between(1, 5)));
      std::vector<PrimeField::Element> x0(7);
      for (auto& v : x0) v = fp().random(rng);
      const auto rhs = m.apply(x0);
      const auto sol = solve(m, std::span<const PrimeField::Element>(rhs));
      REQUIRE(sol);
      CHECK(m.apply(*sol) == rhs);
    }
  }

  TEST_CASE("solve rejects a right-hand side of the wrong length") {
    const std::vector<mpq_class> b{1, 2, 3};
    CHECK_THROWS_AS(solve(Matrix<RationalField>::identity(fq(), 2), std::span<const mpq_class>(b)), Error);
  }

  TEST_CASE("determinant against cofactor expansion") {
    const auto m = int_matrix(fq(), {{2, -1, 0}, {1, 3, 4}, {0, 5, -2}});
    // 2*(3*-2 - 4*5) - (-1)*(1*-2 - 0) + 0 = 2*(-26) + (-2) = -54
    CHECK(determinant(m) == -54);
    CHECK(determinant(int_matrix(fq(), {{1, 2}, {2, 4}})) == 0);
    CHECK(determinant(int_matrix(fp(), {{0, 1}, {1, 0}})) == fp().from_int(-1));
  }

  TEST_CASE("echelon builder tracks span membership") {
    const auto& f = fq();
    EchelonBuilder<RationalField> eb(f, 3);
    CHECK(eb.insert({1, 2, 3}));
    CHECK(eb.insert({0, 1, 1}));
    CHECK_FALSE(eb.insert({1, 3, 4}));
    CHECK(eb.contains({2, 5, 7}));
    CHECK_FALSE(eb.contains({0, 0, 1}));
    CHECK(eb.insert({0, 0, 5}));
    CHECK(eb.full());
  }
}
