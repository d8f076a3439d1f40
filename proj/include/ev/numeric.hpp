#pragma once

#include <gmpxx.h>

#include <array>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace ev {

using Rational = mpq_class;

struct DivisionByZero : std::domain_error {
  using std::domain_error::domain_error;
};
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotExact : std::domain_error {
  using std::domain_error::domain_error;
};

// Element of Q(zeta) with zeta = exp(i*pi/4), stored over 1, zeta, zeta^2, zeta^3.
class Cyclo8 {
 public:
  Cyclo8() = default;
  Cyclo8(long v) : c_{Rational(v), 0, 0, 0} {}
  Cyclo8(const Rational& r) : c_{r, 0, 0, 0} {}
  Cyclo8(Rational c0, Rational c1, Rational c2, Rational c3);

  static Cyclo8 zeta(int k = 1);
  static Cyclo8 i() { return zeta(2); }
  static Cyclo8 alpha() { return zeta(1); }
  static Cyclo8 sqrt2();
  static Cyclo8 gaussian(const Rational& re, const Rational& im) { return {re, 0, im, 0}; }

  const Rational& operator[](int k) const { return c_[k]; }
  const std::array<Rational, 4>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
  bool is_gaussian() const { return c_[1] == 0 && c_[3] == 0; }
  bool is_real() const { return c_[2] == 0 && c_[1] == -c_[3]; }

  Cyclo8 operator-() const;
  Cyclo8& operator+=(const Cyclo8& o);
  Cyclo8& operator-=(const Cyclo8& o);
  Cyclo8& operator*=(const Cyclo8& o) { return *this = *this * o; }
  Cyclo8& operator/=(const Cyclo8& o) { return *this = *this / o; }
  friend Cyclo8 operator+(Cyclo8 x, const Cyclo8& y) { return x += y; }
  friend Cyclo8 operator-(Cyclo8 x, const Cyclo8& y) { return x -= y; }
  friend Cyclo8 operator*(const Cyclo8& x, const Cyclo8& y);
  friend Cyclo8 operator/(const Cyclo8& x, const Cyclo8& y) { return x * y.inverse(); }
  friend bool operator==(const Cyclo8& x, const Cyclo8& y) { return x.c_ == y.c_; }

  // zeta -> zeta^k for odd k.
  Cyclo8 galois(int k) const;
  Cyclo8 conj() const { return galois(7); }
  Rational norm() const;
  Cyclo8 inverse() const;
  Cyclo8 pow(long e) const;

  // Sign of a real element (c0 + c1*sqrt2 form); throws if not real.
  int real_sign() const;
  std::complex<double> to_complex() const;

  std::string str() const;
  static Cyclo8 parse(std::string_view text);

 private:
  std::array<Rational, 4> c_;
};

inline Cyclo8 conjugate(const Cyclo8& x) { return x.conj(); }
bool unit_modulus(const Cyclo8& x);
std::optional<int> as_power_of_i(const Cyclo8& x);
std::optional<int> as_power_of_zeta(const Cyclo8& x);
std::optional<int> root_of_unity_order(const Cyclo8& x);
// A square root inside Q(zeta), if one exists.
std::optional<Cyclo8> sqrt_in_field(const Cyclo8& x);

struct ComplexApprox {
  double re = 0, im = 0;
  double eps = 1e-9;
  std::complex<double> value() const { return {re, im}; }
};

class Scalar {
 public:
  Scalar() : v_(Cyclo8()) {}
  Scalar(long v) : v_(Cyclo8(v)) {}
  Scalar(const Rational& r) : v_(Cyclo8(r)) {}
  Scalar(const Cyclo8& c) : v_(c) {}
  Scalar(const ComplexApprox& z) : v_(z) {}
  static Scalar approx(std::complex<double> z, double eps = 1e-9) { return ComplexApprox{z.real(), z.imag(), eps}; }

  bool is_exact() const { return std::holds_alternative<Cyclo8>(v_); }
  const Cyclo8& exact() const;
  std::complex<double> to_complex() const;
  double eps() const { return is_exact() ? 0.0 : std::get<ComplexApprox>(v_).eps; }
  bool is_zero() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& x, const Scalar& y);
  friend Scalar operator-(const Scalar& x, const Scalar& y);
  friend Scalar operator*(const Scalar& x, const Scalar& y);
  friend Scalar operator/(const Scalar& x, const Scalar& y);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
  friend bool operator==(const Scalar& x, const Scalar& y);
  Scalar conj() const;
  Scalar pow(long e) const;

  std::string str() const;
  // Decimal points switch to approximate mode, everything else is exact.
  static Scalar parse(std::string_view text);

 private:
  std::variant<Cyclo8, ComplexApprox> v_;
};

std::ostream& operator<<(std::ostream& os, const Cyclo8& x);
std::ostream& operator<<(std::ostream& os, const Scalar& x);

}  // namespace ev
