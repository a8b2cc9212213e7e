#include <algorithm>
#include <vector>

#include "doctest.h"
#include "ratcurve/binary_form.hpp"
#include "ratcurve/fiber.hpp"
#include "test_support.hpp"

using namespace ratcurve;
using ratcurve::testing::form;
using ratcurve::testing::fp;
using ratcurve::testing::fq;
using ratcurve::testing::param;

namespace {

using FormP = BinaryForm<PrimeField>;

FormP random_form(Rng& rng, int degree) {
  std::vector<PrimeField::Element> c(static_cast<std::size_t>(degree) + 1);
  for (auto& v : c) v = fp().random(rng);
  if (fp().is_zero(c.front())) c.front() = fp().one();
  return FormP::from_coeffs(fp(), std::move(c));
}

// Divisibility oracle: long division after setting y = 1, plus the power of y.
std::size_t y_power(const FormP& h) {
  std::size_t k = 0;
  while (k < h.coeffs().size() && fp().is_zero(h.coeffs()[h.coeffs().size() - 1 - k])) ++k;
  return k;
}

bool divides(const FormP& g, const FormP& h) {
  if (g.is_constant()) return true;
  if (y_power(g) > y_power(h)) return false;
  const auto r = detail::poly_rem(fp(), std::vector<PrimeField::Element>(h.coeffs().rbegin(), h.coeffs().rend()),
                                  std::vector<PrimeField::Element>(g.coeffs().rbegin(), g.coeffs().rend()));
  return detail::trim(fp(), r).empty();
}

}  // namespace

TEST_SUITE("binary-forms") {
  TEST_CASE("multiplication examples") {
    CHECK(form(fq(), "x") * form(fq(), "y") == form(fq(), "x*y"));
    const auto s = form(fq(), "x + y");
    CHECK(s * s == form(fq(), "x^2 + 2*x*y + y^2"));
  }

  TEST_CASE("zero form behaves as an absorbing element and has no degree") {
    const auto z = BinaryForm<RationalField>::zero(fq());
    CHECK((z * form(fq(), "x^3")).is_zero());
    CHECK(z.is_zero());
    CHECK_THROWS_AS(z.degree(), Error);
  }

  TEST_CASE("adding forms of different degree is rejected") {
    CHECK_THROWS_AS(form(fq(), "x") + form(fq(), "x^2"), Error);
  }

  TEST_CASE("evaluation examples") {
    const auto& f = fq();
    CHECK(eval(form(f, "x"), ProjPoint1<RationalField>(f, 1, 0)) == 1);
    CHECK(eval(form(f, "x^2*y"), ProjPoint1<RationalField>(f, 1, 2)) == 2);
  }

  TEST_CASE("property: evaluation is multiplicative at random points") {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
      const auto a = random_form(rng, static_cast<int>(rng.between(0, 8)));
      const auto b = random_form(rng, static_cast<int>(rng.between(0, 8)));
      for (int k = 0; k < 5; ++k) {
        const auto q = ProjPoint1<PrimeField>::random(fp(), rng);
        CHECK(eval(a * b, q) == fp().mul(eval(a, q), eval(b, q)));
      }
    }
  }

  TEST_CASE("projective image does not depend on the representative of q") {
    const auto& f = fp();
    const auto p = param(f, {"x^4", "x^2*y^2", "y^4"});
    Rng rng(3);
    for (int k = 0; k < 10; ++k) {
      const auto u = f.random(rng);
      const auto v = f.random(rng);
      const auto lambda = f.add(f.random(rng), f.one());
      if (f.is_zero(u) && f.is_zero(v)) continue;
      const ProjPoint1<PrimeField> q(f, u, v);
      const ProjPoint1<PrimeField> lq(f, f.mul(lambda, u), f.mul(lambda, v));
      CHECK(apply_map(p, q) == apply_map(p, lq));
    }
  }

  TEST_CASE("gcd examples") {
    const auto& f = fq();
    CHECK(gcd_forms({form(f, "x^2*y"), form(f, "x*y^2")}) == form(f, "x*y"));
    CHECK(gcd_forms({form(f, "x^3"), form(f, "y^3")}).is_constant());
    const auto g = gcd_forms({form(f, "y^2 - x^2"), form(f, "y^2 - x^2")});
    CHECK(proportional(g, form(f, "y^2 - x^2")));
    CHECK(g.degree() == 2);
    CHECK_THROWS_AS(gcd_forms({BinaryForm<RationalField>::zero(f)}), Error);
  }

  TEST_CASE("gcd handles powers of x and of y") {
    const auto& f = fq();
    CHECK(gcd_forms({form(f, "x^3*y^2 + x^2*y^3"), form(f, "x^2*y^4")}) == form(f, "x^2*y^2"));
    CHECK(gcd_forms({form(f, "x^5"), form(f, "x^3*y^2")}) == form(f, "x^3"));
    CHECK(gcd_forms({form(f, "y^4"), form(f, "x*y^3 - y^4")}) == form(f, "y^3"));
    CHECK(gcd_forms({form(f, "x^2 + 3*x*y"), BinaryForm<RationalField>::zero(f)}) == form(f, "x^2 + 3*x*y"));
  }

  TEST_CASE("property: gcd of products with a common factor, checked by divisibility") {
    Rng rng(19);
    for (int trial = 0; trial < 30; ++trial) {
      const auto c = random_form(rng, static_cast<int>(rng.between(0, 4)));
      const auto a = random_form(rng, static_cast<int>(rng.between(1, 5))) * c;
      const auto b = random_form(rng, static_cast<int>(rng.between(1, 5))) * c;
      const auto g = gcd_forms({a, b});
      CHECK(divides(g, a));
      CHECK(divides(g, b));
      CHECK(divides(c, g));
      // Order and scaling do not matter.
      CHECK(gcd_forms({b, a}) == g);
      CHECK(gcd_forms({a.scaled(fp().from_int(7)), b.scaled(fp().from_int(-3))}) == g);
      CHECK(fp().is_one(g.leading()));
    }
  }

  TEST_CASE("li_dim examples") {
    const auto& f = fq();
    CHECK(li_dim(std::vector{form(f, "x^2"), form(f, "y^2"), form(f, "x^2 + 2*x*y + y^2")}, 2) == 3);
    CHECK(li_dim(std::vector{form(f, "x^2"), form(f, "2*x^2")}, 2) == 1);
    CHECK_THROWS_AS(li_dim(std::vector{form(f, "x^2"), form(f, "y")}, 2), Error);
  }

  TEST_CASE("property: random forms of degree d >= n-1 are independent") {
    Rng rng(21);
    for (int trial = 0; trial < 20; ++trial) {
      const int n = static_cast<int>(rng.between(1, 6));
      const int d = static_cast<int>(rng.between(n - 1, 10));
      std::vector<FormP> hs;
      for (int i = 0; i < n; ++i) hs.push_back(random_form(rng, d));
      CHECK(li_dim(hs, d) == static_cast<std::size_t>(n));
    }
  }

  TEST_CASE("monic normalisation uses the highest power of x") {
    const auto h = form(fq(), "3*x*y - 6*y^2").monic();
    CHECK(h == form(fq(), "x*y - 2*y^2"));
    CHECK(form(fq(), "2*y^3").monic() == form(fq(), "y^3"));
  }
}
