#pragma once

#include <array>
#include <optional>

#include "ev/signature.hpp"

namespace ev {

struct ChainFormUnsupported : std::domain_error {
  using std::domain_error::domain_error;
};

// Binary signature (g00, g01, g10, g11).
struct BinarySig {
  std::array<Scalar, 4> g;
  Scalar at(int i, int j) const { return g[2 * i + j]; }
  bool is_zero() const;
  friend bool operator==(const BinarySig& p, const BinarySig& q) { return p.g == q.g; }
  Signature to_signature() const { return Signature(2, {g[0], g[1], g[2], g[3]}); }
};

struct View {
  VarPair rows{1, 2};
  VarPair cols{3, 4};
};

// Double disequality, the anti-diagonal permutation matrix.
Matrix4 double_disequality();

// M(h) = M_viewA(fA) N M_viewB(fB), returned in the standard view.
Signature connect_via_N(const Signature& fA, View viewA, const Signature& fB, View viewB);
BinarySig loop_binary(const Signature& f, View view, const BinarySig& g);
Signature binary_modify(const Signature& f, int var, const Scalar& t);
BinarySig pin(const Signature& f, int var_one, int var_zero);

// k-step chain M (N M)^(k-1).
Signature chain_power(const Signature& f, View view, long k);

struct EigenReport {
  Scalar t;
  int r = 0;    // middle block carries i^r
  int eps = 1;  // sign of the off-diagonal middle entries
  Scalar rho;   // (t-1)/(t+1)
  std::array<Scalar, 4> lambda;  // eigenvalues of N M on the columns of P
  Matrix4 factored;              // P diag(1,1,-1,-1) Lambda^k P
  bool verified = false;         // factored == chain_power, up to the input scale^k
};

// For M proportional to [[1,0,0,t],[0,i^r,eps i^r t,0],[0,eps i^r t,i^r,0],[t,0,0,1]].
EigenReport eigen_report(const Signature& f, View view, long k);

}  // namespace ev
