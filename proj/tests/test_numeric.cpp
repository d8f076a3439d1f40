#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ev/numeric.hpp"
#include "random_values.hpp"

using namespace ev;

TEST_CASE("field operations") {
  Cyclo8 a = Cyclo8::alpha();
  CHECK(a * a == Cyclo8::i());
  Cyclo8 z = Cyclo8::zeta(1), z3 = Cyclo8::zeta(3);
  CHECK((z - z3) * (z - z3) == Cyclo8(2));
  CHECK(Cyclo8::sqrt2() * Cyclo8::sqrt2() == Cyclo8(2));
  Cyclo8 one_i = Cyclo8::gaussian(1, 1);
  CHECK(one_i.inverse() == Cyclo8::gaussian(Rational(1, 2), Rational(-1, 2)));
  CHECK_THROWS_AS(Cyclo8().inverse(), DivisionByZero);
  CHECK(Cyclo8::zeta(8) == Cyclo8(1));
  CHECK(Cyclo8::zeta(4) == Cyclo8(-1));
  CHECK(Cyclo8::zeta(-1) == Cyclo8::zeta(7));
}

TEST_CASE("conjugation") {
  CHECK(conjugate(Cyclo8::i()) == -Cyclo8::i());
  CHECK(conjugate(Cyclo8::zeta(1)) == -Cyclo8::zeta(3));
  CHECK(conjugate(Cyclo8(Rational(3, 2))) == Cyclo8(Rational(3, 2)));
}

TEST_CASE("unit modulus and roots of unity") {
  CHECK(unit_modulus(Cyclo8::i()));
  CHECK(unit_modulus(Cyclo8::zeta(1)));
  CHECK_FALSE(unit_modulus(Cyclo8(2)));
  CHECK(unit_modulus(Cyclo8::gaussian(Rational(3, 5), Rational(4, 5))));

  CHECK(as_power_of_i(Cyclo8(-1)) == 2);
  CHECK(as_power_of_i(Cyclo8::i()) == 1);
  CHECK_FALSE(as_power_of_i(Cyclo8::zeta(1)).has_value());
  CHECK_FALSE(as_power_of_i(Cyclo8(2)).has_value());

  CHECK(root_of_unity_order(Cyclo8::zeta(1)) == 8);
  CHECK(root_of_unity_order(-Cyclo8::i()) == 4);
  CHECK(root_of_unity_order(Cyclo8(1)) == 1);
  CHECK(root_of_unity_order(Cyclo8(-1)) == 2);
  CHECK_FALSE(root_of_unity_order(Cyclo8(Rational(1, 2))).has_value());
  // unit modulus but not a root of unity
  CHECK_FALSE(root_of_unity_order(Cyclo8::gaussian(Rational(3, 5), Rational(4, 5))).has_value());
}

TEST_CASE("random field identities") {
  std::mt19937 rng(11);
  for (int it = 0; it < 300; ++it) {
    Cyclo8 x = testing::random_cyclo(rng), y = testing::random_cyclo(rng), w = testing::random_cyclo(rng);
    CHECK(x * y == y * x);
    CHECK((x * y) * w == x * (y * w));
    CHECK((x + y) * w == x * w + y * w);
    if (!x.is_zero()) {
      CHECK(x * x.inverse() == Cyclo8(1));
      CHECK(x / x == Cyclo8(1));
    }
    CHECK((x * y).conj() == x.conj() * y.conj());
    CHECK((x + y).conj() == x.conj() + y.conj());
    CHECK(x.conj().conj() == x);
    for (int k : {3, 5, 7}) CHECK((x * y).galois(k) == x.galois(k) * y.galois(k));
  }
}

TEST_CASE("power of i implies order divides 4") {
  for (int k = 0; k < 8; ++k) {
    Cyclo8 z = Cyclo8::zeta(k);
    if (auto p = as_power_of_i(z)) {
      CHECK(z.pow(4) == Cyclo8(1));
      CHECK(4 % *root_of_unity_order(z) == 0);
    }
    CHECK(z.pow(*root_of_unity_order(z)) == Cyclo8(1));
  }
}

TEST_CASE("unit modulus is multiplicative") {
  std::mt19937 rng(5);
  for (int it = 0; it < 50; ++it) {
    Cyclo8 u = testing::random_unit(rng), v = testing::random_unit(rng);
    CHECK(unit_modulus(u));
    CHECK(unit_modulus(u * v));
  }
}

TEST_CASE("real sign") {
  Cyclo8 r2 = Cyclo8::sqrt2();
  CHECK((r2 - Cyclo8(1)).real_sign() == 1);
  CHECK((r2 * Cyclo8(3) - Cyclo8(5)).real_sign() == -1);  // 4.24 - 5
  CHECK((Cyclo8(3) - Cyclo8(2) * r2).real_sign() == 1);   // 3 - 2.83
  CHECK(Cyclo8().real_sign() == 0);
  CHECK_THROWS(Cyclo8::i().real_sign());
}

TEST_CASE("square roots in the field") {
  std::mt19937 rng(3);
  for (int it = 0; it < 200; ++it) {
    Cyclo8 x = testing::random_cyclo(rng);
    auto r = sqrt_in_field(x * x);
    REQUIRE(r.has_value());
    CHECK(*r * *r == x * x);
  }
  CHECK(sqrt_in_field(Cyclo8::i()) .has_value());
  CHECK(*sqrt_in_field(Cyclo8(2)) * *sqrt_in_field(Cyclo8(2)) == Cyclo8(2));
  CHECK_FALSE(sqrt_in_field(Cyclo8(3)).has_value());
  CHECK_FALSE(sqrt_in_field(Cyclo8::alpha()).has_value());
}

TEST_CASE("parsing and formatting") {
  CHECK(Cyclo8::parse("3/2,0,-1,0") == Cyclo8(Rational(3, 2), 0, -1, 0));
  CHECK(Cyclo8::parse("i") == Cyclo8::i());
  CHECK(Cyclo8::parse("a") == Cyclo8::alpha());
  CHECK(Cyclo8::parse("1/2+3i") == Cyclo8::gaussian(Rational(1, 2), 3));
  CHECK(Cyclo8::parse("-2/3i") == Cyclo8::gaussian(0, Rational(-2, 3)));
  CHECK(Cyclo8::parse("a^3") == Cyclo8::zeta(3));
  CHECK(Cyclo8::parse("a^-1") == Cyclo8::zeta(7));
  CHECK(Cyclo8::parse("2*(1+i)/(1-i)") == Cyclo8::gaussian(0, 2));
  CHECK(Cyclo8::parse("r2") == Cyclo8::sqrt2());
  CHECK(Cyclo8::parse("[1,2,3,4]") == Cyclo8(1, 2, 3, 4));
  CHECK(Cyclo8::parse(" -i ") == -Cyclo8::i());
  CHECK_THROWS_AS(Cyclo8::parse("1+"), ParseError);
  CHECK_THROWS_AS(Cyclo8::parse("q"), ParseError);
  CHECK_THROWS_AS(Cyclo8::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Cyclo8::parse("1,2"), ParseError);
  CHECK_THROWS_AS(Cyclo8::parse("(1"), ParseError);

  CHECK(Cyclo8(Rational(3, 2)).str() == "3/2");
  CHECK(Cyclo8::gaussian(1, -1).str() == "1-i");
  CHECK(Cyclo8::gaussian(Rational(1, 2), Rational(1, 2)).str() == "1/2+1/2i");

  std::mt19937 rng(9);
  for (int it = 0; it < 200; ++it) {
    Cyclo8 x = testing::random_cyclo(rng);
    CHECK(Cyclo8::parse(x.str()) == x);
  }
}

TEST_CASE("scalar modes") {
  Scalar e = Scalar::parse("1+i");
  CHECK(e.is_exact());
  Scalar f = Scalar::parse("0.5");
  CHECK_FALSE(f.is_exact());
  Scalar g = e * f;
  CHECK_FALSE(g.is_exact());
  CHECK(g == Scalar::approx({0.5, 0.5}));
  CHECK_THROWS_AS(g.exact(), NotExact);
  CHECK(Scalar::parse(g.str()) == g);
  CHECK(Scalar::parse("1.5-2.25i") == Scalar::approx({1.5, -2.25}));
}

TEST_CASE("exact and approximate arithmetic agree") {
  std::mt19937 rng(21);
  for (int it = 0; it < 100; ++it) {
    Scalar ex = testing::random_cyclo(rng);
    Scalar ap = Scalar::approx(ex.to_complex());
    for (int depth = 0; depth < 20; ++depth) {
      Cyclo8 y = testing::random_cyclo(rng);
      if (y.is_zero()) y = Cyclo8(1);
      Scalar ya = Scalar::approx(y.to_complex());
      switch (rng() % 4) {
        case 0: ex = ex + y; ap = ap + ya; break;
        case 1: ex = ex - y; ap = ap - ya; break;
        case 2: ex = ex * y; ap = ap * ya; break;
        default: ex = ex / y; ap = ap / ya; break;
      }
    }
    auto d = ex.to_complex() - ap.to_complex();
    double scale = std::max(1.0, std::abs(ex.to_complex()));
    CHECK(std::abs(d) / scale < 1e-9);
  }
}
