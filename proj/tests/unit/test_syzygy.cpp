#include <vector>

#include "doctest.h"
#include "ratcurve/syzygy.hpp"
#include "test_support.hpp"

using namespace ratcurve;
using ratcurve::testing::form;
using ratcurve::testing::forms;
using ratcurve::testing::fp;
using ratcurve::testing::fq;
using ratcurve::testing::param;

namespace {

template <class F>
bool annihilates(const Parameterization<F>& p, const std::vector<BinaryForm<F>>& col) {
  auto acc = BinaryForm<F>::zero(p.field());
  for (std::size_t i = 0; i < p.size(); ++i) acc = acc + p[i] * col[i];
  return acc.is_zero();
}

Parameterization<PrimeField> random_param(Rng& rng, int n, int d) {
  for (;;) {
    std::vector<BinaryForm<PrimeField>> gens;
    for (int i = 0; i < n; ++i) {
      std::vector<PrimeField::Element> c(static_cast<std::size_t>(d) + 1);
      for (auto& v : c) v = fp().random(rng);
      gens.push_back(BinaryForm<PrimeField>::from_coeffs(fp(), c));
    }
    try {
      return Parameterization<PrimeField>::create(gens);
    } catch (const Error&) {
    }
  }
}

}  // namespace

TEST_SUITE("syzygy") {
  TEST_CASE("syzygies in a fixed degree") {
    const auto koszul = syzygies_in_degree(param(fq(), {"x", "y"}), 1);
    REQUIRE(koszul.size() == 1);
    CHECK(proportional(koszul[0][0], form(fq(), "-y")));
    CHECK(proportional(koszul[0][1], form(fq(), "x")));

    const auto p = param(fq(), {"x^4", "x^2*y^2", "y^4"});
    CHECK(detail::multiplication_matrix(p, 2).rows() == 7);
    CHECK(detail::multiplication_matrix(p, 2).cols() == 9);
    const auto s2 = syzygies_in_degree(p, 2);
    CHECK(s2.size() == 2);
    for (const auto& col : s2) CHECK(annihilates(p, col));

    CHECK(syzygies_in_degree(param(fq(), {"x^3", "x^2*y", "y^3"}), 0).empty());
  }

  TEST_CASE("Hilbert-Burch matrices of the worked examples") {
    const auto lin = hilbert_burch(param(fq(), {"x", "y"}));
    CHECK(lin.col_degrees() == std::vector<int>{1});
    CHECK(proportional(lin.entry(0, 0), form(fq(), "y")));
    CHECK(proportional(lin.entry(1, 0), form(fq(), "x")));

    const auto v = hilbert_burch(param(fq(), {"x^4", "x^2*y^2", "y^4"}));
    CHECK(v.rows() == 3);
    CHECK(v.col_degrees() == std::vector<int>{2, 2});
    CHECK(v.column(0) == forms(fq(), {"y^2", "-x^2", "0"}));
    CHECK(v.column(1) == forms(fq(), {"0", "y^2", "-x^2"}));

    CHECK(hilbert_burch(param(fq(), {"x^3", "x^2*y", "y^3"})).col_degrees() == std::vector<int>{1, 2});
  }

  TEST_CASE("verification accepts the output and rejects perturbations") {
    const auto p = param(fq(), {"x^4", "x^2*y^2", "y^4"});
    const auto phi = hilbert_burch(p);
    CHECK(verify_hilbert_burch(p, phi));
    CHECK_FALSE(verify_hilbert_burch(p, phi.with_entry(0, 0, form(fq(), "y^2 + x*y"))));
    CHECK_FALSE(verify_hilbert_burch(p, phi.with_entry(2, 1, form(fq(), "-2*x^2"))));
    CHECK(verify_hilbert_burch(p, phi.with_columns_permuted({1, 0})));
  }

  TEST_CASE("column permutations on a 3x2 case change the minors by a global sign") {
    const auto p = param(fq(), {"x^3", "x^2*y", "y^3"});
    const auto phi = hilbert_burch(p);
    // Brute force: the signed minors of the permuted matrix are the negatives
    // of the original ones, and both pass verification.
    const auto swapped = phi.with_columns_permuted({1, 0});
    for (std::size_t del = 0; del < 3; ++del) {
      std::vector<std::size_t> keep;
      for (std::size_t i = 0; i < 3; ++i) {
        if (i != del) keep.push_back(i);
      }
      const auto m = phi.entry(keep[0], 0) * phi.entry(keep[1], 1) - phi.entry(keep[1], 0) * phi.entry(keep[0], 1);
      const auto s = swapped.entry(keep[0], 0) * swapped.entry(keep[1], 1) -
                     swapped.entry(keep[1], 0) * swapped.entry(keep[0], 1);
      CHECK((m + s).is_zero());
    }
    CHECK(verify_hilbert_burch(p, swapped));
  }

  TEST_CASE("property: random parameterizations give valid minimal matrices") {
    Rng rng(99);
    for (int trial = 0; trial < 30; ++trial) {
      const int n = static_cast<int>(rng.between(2, 5));
      const int d = static_cast<int>(rng.between(n - 1, 9));
      const auto p = random_param(rng, n, d);
      const auto phi = hilbert_burch(p);
      CHECK(verify_hilbert_burch(p, phi));
      CHECK(phi.degree_sum() == d);
      CHECK(std::is_sorted(phi.col_degrees().begin(), phi.col_degrees().end()));
      for (std::size_t j = 0; j < phi.cols(); ++j) {
        CHECK(annihilates(p, phi.column(j)));
        for (const auto& e : phi.column(j)) {
          if (!e.is_zero()) {
            CHECK(fp().is_one(e.leading()));
            break;
          }
        }
      }
    }
  }

  TEST_CASE("wrong shapes fail verification") {
    const auto p = param(fq(), {"x^2", "x*y", "y^2"});
    const auto phi = hilbert_burch(p);
    CHECK_FALSE(verify_hilbert_burch(param(fq(), {"x^2", "y^2"}), phi));
    const SyzygyMatrix<RationalField> one_col({phi.column(0)}, {phi.col_degrees()[0]});
    CHECK_FALSE(verify_hilbert_burch(p, one_col));
  }
}
