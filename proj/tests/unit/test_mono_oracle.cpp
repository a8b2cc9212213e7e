#include <vector>

#include "doctest.h"
#include "ratcurve/fiber.hpp"
#include "ratcurve/mono_oracle.hpp"
#include "test_support.hpp"

using namespace ratcurve;
using ratcurve::testing::form;
using ratcurve::testing::forms;
using ratcurve::testing::fp;
using ratcurve::testing::fq;

namespace {

GradedIdeal<RationalField> ideal(const std::vector<std::string>& gens) {
  return GradedIdeal<RationalField>(fq(), forms(fq(), gens));
}

}  // namespace

TEST_SUITE("mono-oracle") {
  TEST_CASE("oracle matrices") {
    const auto m1 = MonomialParam::create(1, {0, 1});
    const auto phi1 = oracle_phi(fq(), m1);
    CHECK(phi1.column(0) == forms(fq(), {"y", "-x"}));

    const auto m4 = MonomialParam::create(4, {0, 2, 4});
    const auto phi4 = oracle_phi(fq(), m4);
    CHECK(phi4.column(0) == forms(fq(), {"y^2", "-x^2", "0"}));
    CHECK(phi4.column(1) == forms(fq(), {"0", "y^2", "-x^2"}));
    CHECK(verify_hilbert_burch(to_parameterization(fq(), m4), phi4));

    CHECK(MonomialParam::create(3, {0, 2, 3}).col_degrees() == std::vector<int>{2, 1});
  }

  TEST_CASE("oracle degree") {
    CHECK(oracle_degree(MonomialParam::create(4, {0, 2, 4})) == 2);
    CHECK(oracle_degree(MonomialParam::create(3, {0, 2, 3})) == 1);
    for (int d = 1; d <= 6; ++d) CHECK(oracle_degree(MonomialParam::create(d, {0, d})) == d);
  }

  TEST_CASE("invalid exponent lists") {
    CHECK_THROWS_AS(MonomialParam::create(3, {0}), Error);
    CHECK_THROWS_AS(MonomialParam::create(3, {1, 3}), Error);
    CHECK_THROWS_AS(MonomialParam::create(3, {0, 2, 2, 3}), Error);
  }

  TEST_CASE("property: oracle matrices verify, exhaustively for d <= 8") {
    for (int d = 1; d <= 8; ++d) {
      for (const auto& m : monomial_corpus_exhaustive(d, 8)) {
        CHECK(verify_hilbert_burch(to_parameterization(fp(), m), oracle_phi(fp(), m)));
      }
    }
  }

  TEST_CASE("exhaustive corpus sizes") {
    // Subsets of the d-1 interior exponents.
    for (int d = 1; d <= 10; ++d) {
      CHECK(monomial_corpus_exhaustive(d, 100).size() == (std::size_t{1} << (d - 1)));
    }
    // n <= 3 at d = 6: the empty subset plus the five singletons.
    CHECK(monomial_corpus_exhaustive(6, 3).size() == 6);
  }

  TEST_CASE("property: map degree equals the oracle on random monomial maps") {
    Rng rng(40);
    for (int trial = 0; trial < 40; ++trial) {
      const auto m = random_monomial_param(rng, static_cast<int>(rng.between(1, 20)), 8);
      CHECK(m.size() <= 8);
      const auto p = to_parameterization(fp(), m);
      CHECK(map_degree(p, hilbert_burch(p), rng).r == oracle_degree(m));
    }
  }

  TEST_CASE("Newton polygon closure") {
    for (int t = 1; t <= 6; ++t) {
      const auto mt = maximal_ideal_power(fq(), t);
      CHECK(ideal_equals(newton_closure(mt), mt));
    }
    CHECK(ideal_equals(newton_closure(ideal({"x^6", "x^4*y^2", "x^2*y^4", "y^6"})), maximal_ideal_power(fq(), 6)));
    CHECK(ideal_equals(newton_closure(ideal({"x^2", "y^2"})), maximal_ideal_power(fq(), 2)));
    CHECK(ideal_equals(newton_closure(ideal({"x^3", "y"})), ideal({"x^3", "y"})));
    CHECK(ideal_equals(newton_closure(ideal({"x^4", "y^2"})), ideal({"x^4", "x^2*y", "y^2"})));
    CHECK_THROWS_AS(newton_closure(ideal({"x^2 + y^2", "x*y"})), Error);
  }

  TEST_CASE("property: Newton closure contains its input and is idempotent") {
    Rng rng(41);
    for (int trial = 0; trial < 30; ++trial) {
      const auto m = random_monomial_param(rng, static_cast<int>(rng.between(1, 12)), 6);
      const auto j = GradedIdeal<RationalField>(fq(), to_parameterization(fq(), m).gens());
      const auto c = newton_closure(j);
      for (const auto& g : j.gens()) CHECK(contains(c, g));
      CHECK(ideal_equals(newton_closure(c), c));
    }
  }
}
