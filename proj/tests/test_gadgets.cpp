#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ev/gadgets.hpp"
#include "gadget_regression.hpp"

using namespace ev;
using testing::ev8;
using testing::mat;

TEST_CASE("binary chains") {
  // inner block [[0,1],[t,0]] composed through N gives [[0,1],[t^2,0]]
  Scalar t(Rational(3, 2));
  Signature f = ev8(0, 0, 0, 1, t, 0, 0, 0);
  CHECK(connect_via_N(f, {}, f, {}) == ev8(0, 0, 0, 1, t * t, 0, 0, 0));
}

TEST_CASE("connect via N") {
  Scalar c(2), d(3), w(5), z(7);
  Signature f = ev8(1, 0, c, d, w, z, 0, 1);
  Matrix4 m = matrix_view(connect_via_N(f, {}, f, {}));
  CHECK(m[1][1] == c * (d + w));
  CHECK(m[1][2] == c * z + d * d);
  CHECK(m[2][1] == c * z + w * w);
  CHECK(m[2][2] == z * (d + w));
  CHECK(connect_via_N(f, {}, Signature(4), {}).is_zero());
}

TEST_CASE("loops") {
  Scalar a(2), b(3), c(5), d(7), w(11), z(13), y(17), x(19);
  Signature f = ev8(a, b, c, d, w, z, y, x);
  CHECK(loop_binary(f, {}, BinarySig{{0, 1, 1, 0}}) == BinarySig{{0, c + d, w + z, 0}});
  // M N g carries an extra sign here: -(0, c-d, w-z, 0)
  CHECK(loop_binary(f, {}, BinarySig{{0, 1, -1, 0}}) == BinarySig{{0, d - c, z - w, 0}});
  CHECK(loop_binary(f, {}, BinarySig{{0, 1, -1, 0}}).to_signature().proportional(Signature(2, {0, c - d, w - z, 0})));
  CHECK(loop_binary(f, {}, BinarySig{{0, 0, 0, 0}}).is_zero());
}

TEST_CASE("binary modifications") {
  Scalar a(2), b(3), d(7), w(11), z(13), y(17);
  Signature f = ev8(a, b, 1, d, w, z, y, a);
  Signature f1 = binary_modify(binary_modify(f, 1, Scalar(1) / w), 3, Scalar(1) / d);
  CHECK(matrix_view(f1) == mat({{a, 0, 0, b / d}, {0, 1, 1, 0}, {0, 1, z / (d * w), 0}, {y / w, 0, 0, a / (d * w)}}));
  Scalar t(Rational(-4, 9));
  CHECK(binary_modify(binary_modify(f, 2, t), 2, Scalar(1) / t) == f);
  CHECK(binary_modify(binary_modify(f, 2, t), 4, a) == binary_modify(binary_modify(f, 4, a), 2, t));
  Matrix4 m = matrix_view(binary_modify(f, 1, t));
  Matrix4 m0 = matrix_view(f);
  for (int j = 0; j < 4; ++j) {
    CHECK(m[0][j] == m0[0][j]);
    CHECK(m[2][j] == t * m0[2][j]);
    CHECK(m[3][j] == t * m0[3][j]);
  }
  CHECK_THROWS(binary_modify(f, 5, t));
}

TEST_CASE("pins") {
  Scalar d(7), w(11), z(13);
  Signature f = ev8(2, 3, 1, d, w, z, 17, 2);
  // x1 = 0, x2 = 1 leaves (f0100, f0101, f0110, f0111)
  CHECK(pin(f, 2, 1) == BinarySig{{0, 1, d, 0}});
  // x3 = 0, x4 = 1 leaves (f0001, f0101, f1001, f1101)
  CHECK(pin(f, 4, 3) == BinarySig{{0, 1, w, 0}});
  CHECK(pin(Signature(4), 1, 2).is_zero());
  CHECK_THROWS(pin(f, 1, 1));
}

TEST_CASE("chain powers") {
  Scalar t(3);
  Signature f = ev8(t, 0, 1, 0, 0, 1, 0, t);
  for (long s = 1; s <= 3; ++s) {
    Matrix4 m = matrix_view(f);
    Matrix4 p = m;
    for (int k = 0; k < 2 * s; ++k) p = matmul(p, m);
    CHECK(matrix_view(chain_power(f, {}, 2 * s + 1)) == p);
  }
  std::mt19937 rng(8);
  Signature g = ev8(1, 2, testing::nz(rng), testing::nz(rng), 3, testing::nz(rng), 5, 7);
  CHECK(chain_power(g, {}, 1) == g);
  for (long k1 = 1; k1 <= 3; ++k1)
    for (long k2 = 1; k2 <= 3; ++k2)
      CHECK(chain_power(g, {}, k1 + k2) == connect_via_N(chain_power(g, {}, k1), {}, chain_power(g, {}, k2), {}));
}

TEST_CASE("eigen report") {
  for (int r = 0; r < 4; ++r)
    for (int eps : {1, -1}) {
      Scalar t(Rational(2, 1) + r), ir(Cyclo8::zeta(2 * r));
      Signature f = ev8(1, t, ir, Scalar(eps) * ir * t, Scalar(eps) * ir * t, ir, t, 1);
      for (long k : {1, 2, 4, 8}) {
        auto rep = eigen_report(f, {}, k);
        CHECK(rep.verified);
        CHECK(rep.r == r);
        CHECK(rep.eps == eps);
        CHECK(rep.factored == matrix_view(chain_power(f, {}, k)));
      }
    }
  // D_{4s} = (t+1)^{4s} P diag(1,1,-rho^{4s},-rho^{4s}) P
  Scalar t(2);
  Signature f = ev8(1, t, 1, t, t, 1, t, 1);
  auto rep = eigen_report(f, {}, 4);
  CHECK(rep.rho == Scalar(Rational(1, 3)));
  Scalar rho4 = rep.rho.pow(4), s4 = (t + 1).pow(4);
  Matrix4 pdp = mat({{Scalar(1) - rho4, 0, 0, Scalar(1) + rho4},
                     {0, Scalar(1) - rho4, Scalar(1) + rho4, 0},
                     {0, Scalar(1) + rho4, Scalar(1) - rho4, 0},
                     {Scalar(1) + rho4, 0, 0, Scalar(1) - rho4}});
  CHECK(rep.factored == testing::times(pdp, s4 / Scalar(2)));

  CHECK_THROWS_AS(eigen_report(ev8(1, 2, 3, 4, 5, 6, 7, 8), {}, 2), ChainFormUnsupported);
  // the plain power is still available
  CHECK(chain_power(ev8(1, 2, 3, 4, 5, 6, 7, 8), {}, 2).arity() == 4);
}

TEST_CASE("gadget regression suite") {
  for (const auto& r : testing::gadget_regression_suite(2024)) {
    INFO(r.name);
    CHECK(r.instances >= 10);
    CHECK(r.failures == 0);
  }
}
