#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ev/signature.hpp"

namespace ev {

// offset + span(basis) over GF(2); basis in reduced echelon form.
struct AffineSpace {
  int n = 0;
  bool empty = false;
  uint32_t offset = 0;
  std::vector<uint32_t> basis;
  std::vector<int> pivots;  // 1-based variable of each basis vector's leading one

  size_t size() const { return empty ? 0 : size_t{1} << basis.size(); }
  std::vector<uint32_t> points() const;
  bool contains(uint32_t x) const;
};

// Q(x) = sum lin[k] x_k + 2 sum cross[j][k] x_j x_k (mod 4), j < k, variables 0-based.
struct QuadForm {
  int n = 0;
  std::vector<int> lin;
  std::vector<std::vector<int>> cross;
  int eval(uint32_t x) const;
  std::string str() const;
};

struct ACertificate {
  Scalar lambda;
  AffineSpace space;
  QuadForm q;
  Scalar value(uint32_t x) const;
};

struct PFactor {
  std::vector<int> vars;  // 1-based, increasing
  Signature leaf;         // support inside an antipodal pair
};
struct PDecomposition {
  bool zero = false;
  std::vector<PFactor> factors;
  Signature assemble(int arity) const;
};

struct Profile {
  bool A = false, P = false, L = false, alphaA = false;
  bool any() const { return A || P || L || alphaA; }
  std::string str() const;
};

std::optional<AffineSpace> affine_support(const Signature& f);
std::optional<ACertificate> in_A(const Signature& f);
// Is f in A once both outer entries (all zeros, all ones) are multiplied by some mu with the given square?
bool in_A_scaled(const Signature& f, const Scalar& mu2);
bool in_alphaA_scaled(const Signature& f, const Scalar& mu2);
std::optional<PDecomposition> in_P(const Signature& f);
bool in_L(const Signature& f);
bool in_alphaA(const Signature& f);
Profile membership_profile(const Signature& f);

// entry x multiplied by alpha^(|mask & x|)
Signature alpha_twist(const Signature& f, uint32_t mask);

}  // namespace ev
