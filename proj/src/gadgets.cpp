#include "ev/gadgets.hpp"

namespace ev {

bool BinarySig::is_zero() const {
  for (const auto& v : g)
    if (!v.is_zero()) return false;
  return true;
}

Matrix4 double_disequality() {
  Matrix4 n;
  for (int i = 0; i < 4; ++i) n[i][3 - i] = 1;
  return n;
}

namespace {

Matrix4 identity4() {
  Matrix4 m;
  for (int i = 0; i < 4; ++i) m[i][i] = 1;
  return m;
}

Matrix4 diag4(const std::array<Scalar, 4>& d) {
  Matrix4 m;
  for (int i = 0; i < 4; ++i) m[i][i] = d[i];
  return m;
}

Matrix4 scaled(Matrix4 m, const Scalar& s) {
  for (auto& row : m)
    for (auto& v : row) v *= s;
  return m;
}

Matrix4 mat_pow(Matrix4 base, long e) {
  Matrix4 acc = identity4();
  while (e > 0) {
    if (e & 1) acc = matmul(acc, base);
    e >>= 1;
    if (e) base = matmul(base, base);
  }
  return acc;
}

}  // namespace

Signature connect_via_N(const Signature& fA, View viewA, const Signature& fB, View viewB) {
  Matrix4 m = matmul(matmul(matrix_view(fA, viewA.rows, viewA.cols), double_disequality()),
                     matrix_view(fB, viewB.rows, viewB.cols));
  return from_matrix_view(m);
}

BinarySig loop_binary(const Signature& f, View view, const BinarySig& g) {
  Matrix4 m = matmul(matrix_view(f, view.rows, view.cols), double_disequality());
  BinarySig h;
  for (int i = 0; i < 4; ++i) {
    Scalar s;
    for (int k = 0; k < 4; ++k)
      if (!m[i][k].is_zero() && !g.g[k].is_zero()) s += m[i][k] * g.g[k];
    h.g[i] = s;
  }
  return h;
}

Signature binary_modify(const Signature& f, int var, const Scalar& t) {
  if (var < 1 || var > f.arity()) throw std::invalid_argument("binary_modify: variable out of range");
  Signature g = f;
  for (uint32_t x = 0; x < f.size(); ++x)
    if (f.bit(x, var)) g[x] = f[x] * t;
  return g;
}

BinarySig pin(const Signature& f, int var_one, int var_zero) {
  if (f.arity() != 4) throw std::invalid_argument("pin needs arity 4");
  if (var_one == var_zero || var_one < 1 || var_one > 4 || var_zero < 1 || var_zero > 4)
    throw std::invalid_argument("pin needs two distinct variables");
  std::array<int, 2> rest{};
  int n = 0;
  for (int v = 1; v <= 4; ++v)
    if (v != var_one && v != var_zero) rest[n++] = v;
  BinarySig h;
  for (int p = 0; p < 2; ++p)
    for (int q = 0; q < 2; ++q) {
      uint32_t idx = (1u << (4 - var_one)) | (static_cast<uint32_t>(p) << (4 - rest[0])) |
                     (static_cast<uint32_t>(q) << (4 - rest[1]));
      h.g[2 * p + q] = f[idx];
    }
  return h;
}

Signature chain_power(const Signature& f, View view, long k) {
  if (k < 1) throw std::invalid_argument("chain_power needs k >= 1");
  Matrix4 m = matrix_view(f, view.rows, view.cols);
  Matrix4 mn = matmul(m, double_disequality());
  return from_matrix_view(matmul(mat_pow(mn, k - 1), m));
}

EigenReport eigen_report(const Signature& f, View view, long k) {
  if (k < 1) throw std::invalid_argument("eigen_report needs k >= 1");
  Matrix4 m = matrix_view(f, view.rows, view.cols);
  if (m[0][0].is_zero() || !m[0][0].is_exact()) throw ChainFormUnsupported("chain form needs a nonzero exact corner");
  Scalar scale = m[0][0];
  Matrix4 u = scaled(m, Scalar(1) / scale);
  EigenReport rep;
  rep.t = u[0][3];
  auto unsupported = [] { throw ChainFormUnsupported("matrix is not of the symmetric chain form"); };
  auto r = as_power_of_i(u[1][1].exact());
  if (!r) unsupported();
  rep.r = *r;
  Scalar ir = u[1][1];
  if (u[1][2] == ir * rep.t && !rep.t.is_zero())
    rep.eps = 1;
  else if (u[1][2] == -(ir * rep.t))
    rep.eps = -1;
  else
    unsupported();
  Matrix4 expect;
  expect[0] = {1, 0, 0, rep.t};
  expect[1] = {0, ir, Scalar(rep.eps) * ir * rep.t, 0};
  expect[2] = {0, Scalar(rep.eps) * ir * rep.t, ir, 0};
  expect[3] = {rep.t, 0, 0, 1};
  if (!(expect == u)) unsupported();
  if (rep.t == Scalar(-1)) unsupported();
  rep.rho = (rep.t - 1) / (rep.t + 1);

  // B = sqrt2 * P, so P X P = B X B / 2
  Matrix4 b;
  b[0] = {1, 0, 0, 1};
  b[1] = {0, 1, 1, 0};
  b[2] = {0, 1, -1, 0};
  b[3] = {1, 0, 0, -1};
  Matrix4 nm = matmul(double_disequality(), u);
  // N M B = B Lambda: read Lambda off column by column
  Matrix4 nmb = matmul(nm, b);
  for (int c = 0; c < 4; ++c) {
    int row = c == 0 || c == 3 ? 0 : 1;
    rep.lambda[c] = nmb[row][c] / b[row][c];
  }
  if (!(nmb == matmul(b, diag4(rep.lambda)))) unsupported();

  std::array<Scalar, 4> dk;
  for (int c = 0; c < 4; ++c) dk[c] = rep.lambda[c].pow(k) * Scalar(c < 2 ? 1 : -1);
  rep.factored = scaled(matmul(matmul(b, diag4(dk)), b), Scalar(Rational(1, 2)));
  Matrix4 direct = matrix_view(chain_power(from_matrix_view(u), {}, k));
  rep.verified = rep.factored == direct;
  // undo the normalization so factored matches the caller's chain
  rep.factored = scaled(rep.factored, scale.pow(k));
  return rep;
}

}  // namespace ev
