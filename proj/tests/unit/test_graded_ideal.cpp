#include <vector>

#include "doctest.h"
#include "ratcurve/graded_ideal.hpp"
#include "test_support.hpp"

using namespace ratcurve;
using ratcurve::testing::forms;
using ratcurve::testing::fp;
using ratcurve::testing::fq;

namespace {

GradedIdeal<RationalField> ideal(const std::vector<std::string>& gens) {
  return GradedIdeal<RationalField>(fq(), forms(fq(), gens));
}

// Brute-force slice dimension for a monomial ideal: count degree-n
// monomials divisible by some generator.
std::size_t monomial_slice_count(const std::vector<std::pair<int, int>>& gens, int n) {
  std::size_t count = 0;
  for (int b = 0; b <= n; ++b) {
    for (const auto& [ga, gb] : gens) {
      if (n - b >= ga && b >= gb) {
        ++count;
        break;
      }
    }
  }
  return count;
}

}  // namespace

TEST_SUITE("graded-ideals") {
  TEST_CASE("slice bases") {
    CHECK(slice_basis(ideal({"x^2", "y^2"}), 2).size() == 2);
    CHECK(slice_basis(ideal({"x^2", "y^2"}), 3).size() == 4);
    CHECK(slice_dim(ideal({"x^3", "x^2*y", "y^3"}), 4) == 5);
    CHECK(hf_quotient(ideal({"x^3", "x^2*y", "y^3"}), 4) == 0);
    CHECK(slice_dim(ideal({"x^2", "y^2"}), 1) == 0);
  }

  TEST_CASE("slice dimensions agree with monomial counting") {
    const std::vector<std::pair<int, int>> gens{{5, 0}, {3, 1}, {1, 4}, {0, 6}};
    std::vector<std::string> text{"x^5", "x^3*y", "x*y^4", "y^6"};
    const auto j = ideal(text);
    for (int n = 0; n <= 10; ++n) CHECK(slice_dim(j, n) == monomial_slice_count(gens, n));
  }

  TEST_CASE("Hilbert function of quotients") {
    const auto m = ideal({"x", "y"});
    CHECK(hf_quotient(m, 0) == 1);
    for (int n = 1; n < 5; ++n) CHECK(hf_quotient(m, n) == 0);

    const std::vector<std::size_t> ci{1, 2, 3, 2, 1, 0, 0};
    const auto j = ideal({"x^3", "y^3"});
    for (int n = 0; n < 7; ++n) CHECK(hf_quotient(j, n) == ci[static_cast<std::size_t>(n)]);

    for (int d = 1; d <= 5; ++d) {
      const auto md = maximal_ideal_power(fq(), d);
      for (int n = 0; n < d + 3; ++n) {
        CHECK(hf_quotient(md, n) == (n < d ? static_cast<std::size_t>(n) + 1 : 0));
      }
    }
  }

  TEST_CASE("length of the quotient") {
    CHECK(length_quotient(ideal({"x", "y"})) == 1);
    CHECK(length_quotient(ideal({"x^3", "y^3"})) == 9);
    CHECK(length_quotient(ideal({"x^4", "x^2*y^2", "y^4"})) == 12);
    CHECK_THROWS_AS(length_quotient(ideal({"x^2", "x*y"})), Error);
  }

  TEST_CASE("property: complete intersections have length equal to the product of degrees") {
    Rng rng(4);
    for (int trial = 0; trial < 10; ++trial) {
      const int a = static_cast<int>(rng.between(1, 5));
      const int b = static_cast<int>(rng.between(1, 5));
      std::vector<PrimeField::Element> ca(static_cast<std::size_t>(a) + 1), cb(static_cast<std::size_t>(b) + 1);
      for (auto& v : ca) v = fp().random(rng);
      for (auto& v : cb) v = fp().random(rng);
      const auto fa = BinaryForm<PrimeField>::from_coeffs(fp(), ca);
      const auto fb = BinaryForm<PrimeField>::from_coeffs(fp(), cb);
      if (!gcd_forms({fa, fb}).is_constant()) continue;
      CHECK(length_quotient(GradedIdeal<PrimeField>(fp(), {fa, fb})) == static_cast<std::size_t>(a * b));
    }
  }

  TEST_CASE("minimal number of generators") {
    CHECK(min_gens(ideal({"x^2", "2*x^2"})) == 1);
    CHECK(min_gens(ideal({"x^2", "x*y", "y^2"})) == 3);
    CHECK(min_gens(ideal({"x^3", "x^2*y", "y^3"})) == 3);
    CHECK(min_gens(ideal({"x", "y", "x^2", "x*y"})) == 2);
  }

  TEST_CASE("ideal powers") {
    CHECK(ideal_equals(power(ideal({"x", "y"}), 2), ideal({"x^2", "x*y", "y^2"})));
    const auto cube = power(ideal({"x^2", "y^2"}), 3);
    CHECK(ideal_equals(cube, ideal({"x^6", "x^4*y^2", "x^2*y^4", "y^6"})));
    CHECK(cube.gens().size() == 4);
    for (int t = 1; t <= 6; ++t) {
      const auto mt = power(ideal({"x", "y"}), t);
      for (int n = t; n <= t + 2; ++n) CHECK(slice_dim(mt, n) == static_cast<std::size_t>(n) + 1);
      CHECK(slice_dim(mt, t - 1) == 0);
    }
  }

  TEST_CASE("ideal equality") {
    CHECK(ideal_equals(ideal({"x", "y"}), ideal({"y", "x + y"})));
    CHECK_FALSE(ideal_equals(ideal({"x^2", "y^2"}), maximal_ideal_power(fq(), 2)));
    const auto cube = power(ideal({"x^2", "y^2"}), 3);
    const auto m6 = maximal_ideal_power(fq(), 6);
    CHECK_FALSE(ideal_equals(cube, m6));
    CHECK(slice_dim(cube, 6) == 4);
    CHECK(slice_dim(m6, 6) == 7);
    CHECK_FALSE(contains(cube, BinaryForm<RationalField>::monomial(fq(), 5, 1)));
    CHECK(contains(m6, BinaryForm<RationalField>::monomial(fq(), 5, 1)));
  }

  TEST_CASE("property: HF of the quotient is eventually zero and then stays zero") {
    Rng rng(12);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<BinaryForm<PrimeField>> gens;
      for (int k = 0; k < 3; ++k) {
        const int deg = static_cast<int>(rng.between(1, 5));
        std::vector<PrimeField::Element> c(static_cast<std::size_t>(deg) + 1);
        for (auto& v : c) v = fp().random(rng);
        gens.push_back(BinaryForm<PrimeField>::from_coeffs(fp(), c));
      }
      const GradedIdeal<PrimeField> j(fp(), gens);
      bool hit_zero = false;
      for (int n = 0; n < 14; ++n) {
        const auto h = hf_quotient(j, n);
        if (hit_zero) CHECK(h == 0);
        hit_zero = hit_zero || h == 0;
      }
      CHECK(hit_zero);
    }
  }

  TEST_CASE("monomial recognition") {
    const auto j = GradedIdeal<RationalField>(fq(), forms(fq(), {"x^2 + y^2", "x^2 - y^2"}));
    const auto mono = as_monomial_ideal(j);
    REQUIRE(mono);
    CHECK(ideal_equals(*mono, ideal({"x^2", "y^2"})));
    CHECK_FALSE(as_monomial_ideal(ideal({"x^2 + y^2"})));
  }

  TEST_CASE("zero ideal is rejected") {
    CHECK_THROWS_AS(GradedIdeal<RationalField>(fq(), {BinaryForm<RationalField>::zero(fq())}), Error);
  }
}
