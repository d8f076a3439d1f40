#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ev/numeric.hpp"

namespace ev {

struct BadPermutation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct OddSupportWithHalfTransform : std::domain_error {
  using std::domain_error::domain_error;
};

// Value table of an arity-n function; index bits read x1 as the most significant.
class Signature {
 public:
  Signature() = default;
  explicit Signature(int arity);
  Signature(int arity, std::vector<Scalar> values);

  int arity() const { return arity_; }
  size_t size() const { return v_.size(); }
  const Scalar& operator[](size_t idx) const { return v_[idx]; }
  Scalar& operator[](size_t idx) { return v_[idx]; }
  const std::vector<Scalar>& values() const { return v_; }

  // value of variable var (1-based) inside index idx
  int bit(uint32_t idx, int var) const { return (idx >> (arity_ - var)) & 1; }

  bool is_exact() const;
  bool is_zero() const;
  std::vector<uint32_t> support() const;
  Signature scaled(const Scalar& s) const;
  // Equal up to a nonzero scalar factor.
  bool proportional(const Signature& o) const;
  friend bool operator==(const Signature& x, const Signature& y) { return x.arity_ == y.arity_ && x.v_ == y.v_; }

  std::string str() const;

 private:
  int arity_ = 0;
  std::vector<Scalar> v_;
};

Signature tensor(const Signature& f, const Signature& g);
Signature equality(int arity);
Signature disequality2();

struct EightVertexSig {
  Scalar a, b, c, d, w, z, y, x;

  Signature to_signature() const;
  // Only succeeds when odd-weight entries vanish.
  static std::optional<EightVertexSig> from_signature(const Signature& f);
  static EightVertexSig parse(std::string_view text);
  std::array<Scalar, 8> entries() const { return {a, b, c, d, w, z, y, x}; }
  static EightVertexSig from_entries(const std::array<Scalar, 8>& e);
  bool is_exact() const;
  std::string str() const;
  friend bool operator==(const EightVertexSig& p, const EightVertexSig& q) { return p.entries() == q.entries(); }
};

using Matrix4 = std::array<std::array<Scalar, 4>, 4>;
using VarPair = std::pair<int, int>;

// Rows indexed by (x_i x_j), columns by (x_k x_l); variables are 1-based.
Matrix4 matrix_view(const Signature& f, VarPair rows = {1, 2}, VarPair cols = {3, 4});
Signature from_matrix_view(const Matrix4& m, VarPair rows = {1, 2}, VarPair cols = {3, 4});
Matrix4 matmul(const Matrix4& p, const Matrix4& q);

// sigma[k-1] = image of k.  Result g satisfies g(x_{sigma(1)},...,x_{sigma(n)}) = f(x_1,...,x_n).
using VarPerm = std::vector<int>;
Signature apply_perm(const Signature& f, const VarPerm& sigma);
// k -> tau(sigma(k)); apply_perm(f, product(s, t)) == apply_perm(apply_perm(f, t), s)
VarPerm product(const VarPerm& sigma, const VarPerm& tau);
std::vector<VarPerm> all_perms(int n);

std::vector<EightVertexSig> pair_orbit(const EightVertexSig& f);

// 2x2 matrix, or diag(1, gamma) known only through gamma^2.
struct Transform2x2 {
  std::array<std::array<Scalar, 2>, 2> m{};
  std::optional<Scalar> half_gamma2;

  static Transform2x2 from(Scalar p, Scalar q, Scalar r, Scalar s);
  static Transform2x2 identity() { return from(1, 0, 0, 1); }
  static Transform2x2 diag(Scalar u, Scalar v) { return from(u, 0, 0, v); }
  static Transform2x2 half_diag(Scalar gamma2);
  bool squared_only() const { return half_gamma2.has_value(); }
  Scalar det() const;
  std::string str() const;
};

Signature holographic_transform(const Signature& f, const Transform2x2& t);

struct Structure {
  int zeros = 0;       // zeros among b,c,d,w,z,y
  int zero_pairs = 0;  // inner pairs equal to (0,0)
  bool redundant = false;
  std::optional<std::array<std::array<Scalar, 3>, 3>> compressed;
  int inner_rank = 0;
  Scalar by, cz, dw;
};

Structure structural_queries(const EightVertexSig& f);
int rank3(const std::array<std::array<Scalar, 3>, 3>& m);

}  // namespace ev
