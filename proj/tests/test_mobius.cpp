#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ev/mobius.hpp"
#include "random_values.hpp"

using namespace ev;

namespace {

Mobius random_mobius(std::mt19937& rng) {
  for (;;) {
    Cyclo8 p = testing::random_cyclo(rng), q = testing::random_cyclo(rng), r = testing::random_cyclo(rng),
           s = testing::random_cyclo(rng);
    if (!(p * s - q * r).is_zero()) return {p, q, r, s};
  }
}

const Cyclo8 half(Rational(1, 2));

}  // namespace

TEST_CASE("apply") {
  Cyclo8 z = Cyclo8::gaussian(2, 3);
  CHECK(apply(Mobius::identity(), ExtComplex::finite(z)) == ExtComplex::finite(z));
  CHECK(apply(Mobius::identity(), ExtComplex::infinity()).is_infinity());
  Mobius psi(1, half, half, 1);
  CHECK(apply(psi, ExtComplex::finite(Cyclo8::i())) ==
        ExtComplex::finite(Cyclo8::gaussian(Rational(4, 5), Rational(3, 5))));
  // phi(z) = (c z + d)/(w z + z') has a pole at -z'/w
  Mobius phi(2, 3, 5, 7);
  CHECK(apply(phi, ExtComplex::finite(Cyclo8(Rational(-7, 5)))).is_infinity());
  CHECK(apply(phi, ExtComplex::infinity()) == ExtComplex::finite(Cyclo8(Rational(2, 5))));
  CHECK(apply(Mobius(1, 1, 0, 1), ExtComplex::infinity()).is_infinity());
  CHECK_THROWS(Mobius(1, 2, 2, 4));

  std::mt19937 rng(7);
  for (int it = 0; it < 100; ++it) {
    Mobius m1 = random_mobius(rng), m2 = random_mobius(rng);
    ExtComplex p = it % 10 == 0 ? ExtComplex::infinity() : ExtComplex::finite(testing::random_cyclo(rng));
    CHECK(apply(m1 * m2, p) == apply(m1, apply(m2, p)));
  }
}

TEST_CASE("circle form") {
  auto cf = circle_form(Mobius(1, half, half, 1));
  REQUIRE(cf.has_value());
  CHECK(cf->lambda == half);
  CHECK(cf->phase == Cyclo8(1));
  CHECK_FALSE(circle_form(Mobius(1, 0, 0, 2)).has_value());
  auto id = circle_form(Mobius::identity());
  REQUIRE(id.has_value());
  CHECK(id->lambda == Cyclo8(0));
  CHECK(id->phase == Cyclo8(1));
  // scaled copies are recognized
  CHECK(circle_form(Mobius(Cyclo8(3), Cyclo8(Rational(3, 2)), Cyclo8(Rational(3, 2)), Cyclo8(3))).has_value());

  std::mt19937 rng(3);
  for (int it = 0; it < 40; ++it) {
    Cyclo8 e = testing::random_unit(rng);
    Cyclo8 lam = Cyclo8::gaussian(testing::random_rational(rng), testing::random_rational(rng));
    if (lam * lam.conj() == Cyclo8(1)) continue;
    Cyclo8 mu = testing::random_unit(rng) * Cyclo8(2);
    Mobius m(mu * e, mu * e * lam, mu * lam.conj(), mu);
    auto got = circle_form(m);
    REQUIRE(got.has_value());
    CHECK(got->lambda == lam);
    CHECK(got->phase == e);
    for (int k = 0; k < 8; ++k) {
      ExtComplex img = apply(m, ExtComplex::finite(Cyclo8::zeta(k)));
      REQUIRE_FALSE(img.is_infinity());
      CHECK(unit_modulus(*img.v));
    }
  }
}

TEST_CASE("projective order") {
  auto inf = projective_order(Mobius(1, half, half, 1));
  CHECK_FALSE(inf.finite);
  REQUIRE(inf.eigenvalues.has_value());
  CHECK(((inf.eigenvalues->first == Cyclo8(Rational(3, 2)) && inf.eigenvalues->second == half) ||
         (inf.eigenvalues->second == Cyclo8(Rational(3, 2)) && inf.eigenvalues->first == half)));
  CHECK(projective_order(Mobius::identity()).finite);
  CHECK(projective_order(Mobius::identity()).n == 1);
  CHECK(projective_order(Mobius(0, 1, 1, 0)).n == 2);
  CHECK(projective_order(Mobius(0, -1, 1, 1)).n == 3);
  CHECK(projective_order(Mobius(1, -1, 1, 1)).n == 4);
  CHECK(projective_order(Mobius(1, -1, 1, 2)).n == 6);
  CHECK(projective_order(Mobius(1, 0, 0, Cyclo8::zeta(1))).n == 8);
  CHECK_FALSE(projective_order(Mobius(1, 1, 0, 1)).finite);  // parabolic

  // the reported order is the true projective order
  std::mt19937 rng(5);
  int finite_seen = 0;
  for (int it = 0; it < 300; ++it) {
    Mobius m = it % 3 == 0 ? Mobius(0, -1, 1, testing::random_rational(rng)) : random_mobius(rng);
    auto po = projective_order(m);
    if (!po.finite) continue;
    ++finite_seen;
    CHECK(m.pow(po.n).is_scalar());
    for (int j = 1; j < po.n; ++j) CHECK_FALSE(m.pow(j).is_scalar());
  }
  CHECK(finite_seen > 10);
}

TEST_CASE("orbits") {
  Mobius psi(1, half, half, 1);
  auto o = orbit(psi, ExtComplex::finite(Cyclo8::i()), 32);
  CHECK(o.points.size() == 32);
  CHECK(o.distinct);
  for (const auto& p : o.points) {
    REQUIRE_FALSE(p.is_infinity());
    CHECK(unit_modulus(*p.v));
  }
  auto c = orbit(Mobius::identity(), ExtComplex::finite(Cyclo8(5)), 6);
  CHECK_FALSE(c.distinct);
  for (const auto& p : c.points) CHECK(p == ExtComplex::finite(Cyclo8(5)));

  Mobius m3(0, -1, 1, 1);
  auto o3 = orbit(m3, ExtComplex::finite(Cyclo8(Rational(2, 7))), 9);
  for (int k = 3; k < 9; ++k) CHECK(o3.points[k] == o3.points[k - 3]);
}

TEST_CASE("fixed points") {
  CHECK(fixed_points(Mobius::identity()).kind == FixedPoints::Kind::All);
  auto tr = fixed_points(Mobius(1, 1, 0, 1));
  REQUIRE(tr.points.size() == 1);
  CHECK(tr.points[0].is_infinity());
  auto sw = fixed_points(Mobius(0, 1, 1, 0));
  REQUIRE(sw.points.size() == 2);
  CHECK(((sw.points[0] == ExtComplex::finite(1) && sw.points[1] == ExtComplex::finite(-1)) ||
         (sw.points[1] == ExtComplex::finite(1) && sw.points[0] == ExtComplex::finite(-1))));
  auto nf = fixed_points(Mobius(0, 3, 1, 0));  // z^2 = 3
  CHECK(nf.kind == FixedPoints::Kind::NotInField);
  CHECK(nf.count == 2);

  std::mt19937 rng(9);
  for (int it = 0; it < 100; ++it) {
    Mobius m = random_mobius(rng);
    auto fp = fixed_points(m);
    if (fp.kind == FixedPoints::Kind::All) {
      CHECK(m.is_scalar());
      continue;
    }
    CHECK(fp.count <= 2);
    for (const auto& p : fp.points) CHECK(apply(m, p) == p);
    // three fixed points force the identity
    ExtComplex third = ExtComplex::finite(testing::random_cyclo(rng));
    if (apply(m, third) == third && fp.kind == FixedPoints::Kind::Points) {
      bool among = false;
      for (const auto& p : fp.points) among = among || p == third;
      CHECK(among);
    }
  }
}
