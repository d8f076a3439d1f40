#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ev/numeric.hpp"

namespace ev {

// Point of the extended plane; nullopt is infinity.
struct ExtComplex {
  std::optional<Cyclo8> v;
  static ExtComplex infinity() { return {}; }
  static ExtComplex finite(const Cyclo8& z) { return {z}; }
  bool is_infinity() const { return !v.has_value(); }
  friend bool operator==(const ExtComplex& a, const ExtComplex& b) { return a.v == b.v; }
  std::string str() const { return v ? v->str() : "inf"; }
};

class Mobius {
 public:
  Mobius(Cyclo8 p, Cyclo8 q, Cyclo8 r, Cyclo8 s);
  static Mobius identity() { return {1, 0, 0, 1}; }

  const Cyclo8& p() const { return p_; }
  const Cyclo8& q() const { return q_; }
  const Cyclo8& r() const { return r_; }
  const Cyclo8& s() const { return s_; }
  Cyclo8 det() const { return p_ * s_ - q_ * r_; }
  Cyclo8 trace() const { return p_ + s_; }
  bool is_scalar() const { return q_.is_zero() && r_.is_zero() && p_ == s_; }
  bool projectively_equal(const Mobius& o) const;

  friend Mobius operator*(const Mobius& a, const Mobius& b);
  Mobius pow(long n) const;

 private:
  Cyclo8 p_, q_, r_, s_;
};

ExtComplex apply(const Mobius& m, const ExtComplex& z);

struct CircleForm {
  Cyclo8 lambda;
  Cyclo8 phase;  // e^{i theta}
};
// m projectively equal to z -> phase (z + lambda) / (1 + conj(lambda) z) with |lambda| != 1
std::optional<CircleForm> circle_form(const Mobius& m);

struct ProjectiveOrder {
  bool finite = false;
  int n = 0;
  std::optional<std::pair<Cyclo8, Cyclo8>> eigenvalues;  // when they lie in the field
};
ProjectiveOrder projective_order(const Mobius& m);

struct Orbit {
  std::vector<ExtComplex> points;
  bool distinct = true;
};
Orbit orbit(const Mobius& m, const ExtComplex& z0, int k);

struct FixedPoints {
  enum class Kind { All, Points, NotInField } kind = Kind::Points;
  std::vector<ExtComplex> points;
  int count = 0;
};
FixedPoints fixed_points(const Mobius& m);

}  // namespace ev
