#include "ev/mobius.hpp"

#include <stdexcept>

namespace ev {

Mobius::Mobius(Cyclo8 p, Cyclo8 q, Cyclo8 r, Cyclo8 s)
    : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), s_(std::move(s)) {
  if (det().is_zero()) throw std::invalid_argument("Mobius matrix must be invertible");
}

bool Mobius::projectively_equal(const Mobius& o) const {
  // all 2x2 minors of the stacked entries vanish
  const Cyclo8* u[4] = {&p_, &q_, &r_, &s_};
  const Cyclo8* v[4] = {&o.p_, &o.q_, &o.r_, &o.s_};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (!(*u[i] * *v[j] == *u[j] * *v[i])) return false;
  return true;
}

Mobius operator*(const Mobius& a, const Mobius& b) {
  return {a.p_ * b.p_ + a.q_ * b.r_, a.p_ * b.q_ + a.q_ * b.s_, a.r_ * b.p_ + a.s_ * b.r_,
          a.r_ * b.q_ + a.s_ * b.s_};
}

Mobius Mobius::pow(long n) const {
  if (n < 0) throw std::invalid_argument("negative Mobius power");
  Mobius acc = identity(), base = *this;
  while (n) {
    if (n & 1) acc = acc * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return acc;
}

ExtComplex apply(const Mobius& m, const ExtComplex& z) {
  if (z.is_infinity()) {
    if (m.r().is_zero()) return ExtComplex::infinity();
    return ExtComplex::finite(m.p() / m.r());
  }
  Cyclo8 den = m.r() * *z.v + m.s();
  if (den.is_zero()) return ExtComplex::infinity();
  return ExtComplex::finite((m.p() * *z.v + m.q()) / den);
}

std::optional<CircleForm> circle_form(const Mobius& m) {
  if (m.s().is_zero()) return std::nullopt;
  Cyclo8 inv = m.s().inverse();
  Cyclo8 phase = m.p() * inv, lbar = m.r() * inv, q = m.q() * inv;
  Cyclo8 lambda = lbar.conj();
  if (!unit_modulus(phase)) return std::nullopt;
  if (!(q == phase * lambda)) return std::nullopt;
  if (lambda * lbar == Cyclo8(1)) return std::nullopt;
  return CircleForm{lambda, phase};
}

ProjectiveOrder projective_order(const Mobius& m) {
  ProjectiveOrder out;
  Cyclo8 tr = m.trace(), det = m.det();
  // eigenvalues of x^2 - tr x + det
  if (auto sq = sqrt_in_field(tr * tr - Cyclo8(4) * det)) {
    Cyclo8 half(Rational(1, 2));
    out.eigenvalues = std::pair{(tr + *sq) * half, (tr - *sq) * half};
  }
  if (m.is_scalar()) {
    out.finite = true;
    out.n = 1;
    return out;
  }
  if (out.eigenvalues && !out.eigenvalues->second.is_zero()) {
    const auto& [l1, l2] = *out.eigenvalues;
    if (!(l1 == l2)) {
      if (auto n = root_of_unity_order(l1 / l2)) {
        out.finite = true;
        out.n = *n;
        return out;
      }
    }
  }
  // rho + 1/rho = tr^2/det - 2 for the eigenvalue ratio rho
  Cyclo8 kappa = tr * tr / det - Cyclo8(2);
  const std::pair<Cyclo8, int> table[] = {{Cyclo8(-2), 2},           {Cyclo8(-1), 3},           {Cyclo8(0), 4},
                                          {Cyclo8(1), 6},            {Cyclo8::sqrt2(), 8},      {-Cyclo8::sqrt2(), 8}};
  for (const auto& [k, n] : table)
    if (kappa == k) {
      out.finite = true;
      out.n = n;
      return out;
    }
  // kappa == 2 with m not scalar is parabolic
  return out;
}

Orbit orbit(const Mobius& m, const ExtComplex& z0, int k) {
  if (k < 1) throw std::invalid_argument("orbit length must be positive");
  Orbit o;
  o.points.reserve(k);
  ExtComplex z = z0;
  for (int i = 0; i < k; ++i) {
    for (const auto& p : o.points)
      if (p == z) o.distinct = false;
    o.points.push_back(z);
    if (i + 1 < k) z = apply(m, z);
  }
  return o;
}

FixedPoints fixed_points(const Mobius& m) {
  FixedPoints fp;
  // r z^2 + (s - p) z - q = 0, with infinity fixed when r = 0
  Cyclo8 sp = m.s() - m.p();
  if (m.r().is_zero()) {
    if (sp.is_zero()) {
      if (m.q().is_zero()) {
        fp.kind = FixedPoints::Kind::All;
        return fp;
      }
      fp.points = {ExtComplex::infinity()};
    } else {
      fp.points = {ExtComplex::finite(m.q() / sp), ExtComplex::infinity()};
    }
    fp.count = static_cast<int>(fp.points.size());
    return fp;
  }
  Cyclo8 disc = sp * sp + Cyclo8(4) * m.r() * m.q();
  Cyclo8 two_r = Cyclo8(2) * m.r();
  if (disc.is_zero()) {
    fp.points = {ExtComplex::finite(-sp / two_r)};
    fp.count = 1;
    return fp;
  }
  fp.count = 2;
  auto root = sqrt_in_field(disc);
  if (!root) {
    fp.kind = FixedPoints::Kind::NotInField;
    return fp;
  }
  fp.points = {ExtComplex::finite((-sp + *root) / two_r), ExtComplex::finite((-sp - *root) / two_r)};
  return fp;
}

}  // namespace ev
