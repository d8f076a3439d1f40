#include "ev/numeric.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <vector>

namespace ev {

Cyclo8::Cyclo8(Rational c0, Rational c1, Rational c2, Rational c3) : c_{c0, c1, c2, c3} {
  for (auto& c : c_) c.canonicalize();
}

Cyclo8 Cyclo8::zeta(int k) {
  k = ((k % 8) + 8) % 8;
  Cyclo8 r;
  if (k < 4)
    r.c_[k] = 1;
  else
    r.c_[k - 4] = -1;
  return r;
}

Cyclo8 Cyclo8::sqrt2() { return {0, 1, 0, -1}; }

bool Cyclo8::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

Cyclo8 Cyclo8::operator-() const {
  Cyclo8 r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Cyclo8& Cyclo8::operator+=(const Cyclo8& o) {
  for (int k = 0; k < 4; ++k) c_[k] += o.c_[k];
  return *this;
}

Cyclo8& Cyclo8::operator-=(const Cyclo8& o) {
  for (int k = 0; k < 4; ++k) c_[k] -= o.c_[k];
  return *this;
}

Cyclo8 operator*(const Cyclo8& x, const Cyclo8& y) {
  Rational t[7];
  for (int j = 0; j < 4; ++j) {
    if (x.c_[j] == 0) continue;
    for (int k = 0; k < 4; ++k)
      if (y.c_[k] != 0) t[j + k] += x.c_[j] * y.c_[k];
  }
  Cyclo8 r;
  for (int k = 0; k < 4; ++k) r.c_[k] = t[k];
  for (int k = 4; k < 7; ++k) r.c_[k - 4] -= t[k];
  return r;
}

Cyclo8 Cyclo8::galois(int k) const {
  if (k % 2 == 0) throw std::invalid_argument("galois: exponent must be odd");
  Cyclo8 r;
  for (int j = 0; j < 4; ++j)
    if (c_[j] != 0) r += Cyclo8(c_[j]) * zeta(j * k);
  return r;
}

Rational Cyclo8::norm() const {
  Cyclo8 n = *this * galois(3) * galois(5) * galois(7);
  return n.c_[0];
}

Cyclo8 Cyclo8::inverse() const {
  if (is_zero()) throw DivisionByZero("division by zero in Q(zeta8)");
  Cyclo8 rest = galois(3) * galois(5) * galois(7);
  Rational n = (*this * rest).c_[0];
  for (auto& c : rest.c_) c /= n;
  return rest;
}

Cyclo8 Cyclo8::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclo8 base = *this, acc(1);
  while (e) {
    if (e & 1) acc *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return acc;
}

int Cyclo8::real_sign() const {
  if (!is_real()) throw std::domain_error("real_sign of a non-real value");
  // value = c0 + c1*sqrt2
  int sp = sgn(c_[0]), sq = sgn(c_[1]);
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  Rational cmp = c_[0] * c_[0] - 2 * c_[1] * c_[1];
  return sgn(cmp) > 0 ? sp : sq;
}

std::complex<double> Cyclo8::to_complex() const {
  std::complex<double> z(0, 0), w(1, 0);
  const std::complex<double> zt(std::sqrt(0.5), std::sqrt(0.5));
  for (int k = 0; k < 4; ++k) {
    z += c_[k].get_d() * w;
    w *= zt;
  }
  return z;
}

bool unit_modulus(const Cyclo8& x) { return x * x.conj() == Cyclo8(1); }

std::optional<int> as_power_of_zeta(const Cyclo8& x) {
  int nz = -1;
  for (int k = 0; k < 4; ++k) {
    if (x[k] == 0) continue;
    if (nz >= 0) return std::nullopt;
    nz = k;
  }
  if (nz < 0) return std::nullopt;
  if (x[nz] == 1) return nz;
  if (x[nz] == -1) return nz + 4;
  return std::nullopt;
}

std::optional<int> as_power_of_i(const Cyclo8& x) {
  auto k = as_power_of_zeta(x);
  if (!k || *k % 2) return std::nullopt;
  return *k / 2;
}

std::optional<int> root_of_unity_order(const Cyclo8& x) {
  auto k = as_power_of_zeta(x);
  if (!k) return std::nullopt;
  int g = std::gcd(*k, 8);
  return 8 / g;
}

namespace {

std::optional<Rational> sqrt_q(const Rational& r) {
  if (r < 0) return std::nullopt;
  if (r == 0) return Rational(0);
  mpz_class n = r.get_num(), d = r.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class sn = sqrt(n), sd = sqrt(d);
  return Rational(sn, sd);
}

// Square root in Q(i) of p + q i.
std::optional<Cyclo8> sqrt_gauss(const Rational& p, const Rational& q) {
  if (q == 0) {
    if (auto u = sqrt_q(p)) return Cyclo8(*u);
    if (auto v = sqrt_q(-p)) return Cyclo8::gaussian(0, *v);
    return std::nullopt;
  }
  auto n = sqrt_q(p * p + q * q);
  if (!n) return std::nullopt;
  for (int s : {1, -1}) {
    auto u = sqrt_q((p + s * *n) / 2);
    if (u && *u != 0) return Cyclo8::gaussian(*u, q / (2 * *u));
  }
  return std::nullopt;
}

std::optional<Cyclo8> sqrt_gauss(const Cyclo8& g) { return sqrt_gauss(g[0], g[2]); }

}  // namespace

std::optional<Cyclo8> sqrt_in_field(const Cyclo8& x) {
  if (x.is_zero()) return Cyclo8();
  // x = P + Q*sqrt2 with P, Q in Q(i)
  Cyclo8 P = Cyclo8::gaussian(x[0], x[2]);
  Cyclo8 Q = Cyclo8::gaussian((x[1] - x[3]) / 2, (x[1] + x[3]) / 2);
  const Cyclo8 r2 = Cyclo8::sqrt2();
  std::vector<Cyclo8> cands;
  if (Q.is_zero()) {
    if (auto u = sqrt_gauss(P)) cands.push_back(*u);
    if (auto v = sqrt_gauss(P / Cyclo8(2))) cands.push_back(*v * r2);
  } else {
    if (auto n = sqrt_gauss(P * P - Cyclo8(2) * Q * Q)) {
      for (const Cyclo8& nn : {*n, -*n}) {
        auto u = sqrt_gauss((P + nn) / Cyclo8(2));
        if (u && !u->is_zero()) cands.push_back(*u + Q / (Cyclo8(2) * *u) * r2);
      }
    }
  }
  for (const auto& y : cands)
    if (y * y == x) return y;
  return std::nullopt;
}

std::string Cyclo8::str() const {
  if (is_rational()) return c_[0].get_str();
  if (is_gaussian()) {
    const Rational& q = c_[2];
    std::string im = q == 1 ? "i" : q == -1 ? "-i" : q.get_str() + "i";
    if (c_[0] == 0) return im;
    return c_[0].get_str() + (q > 0 ? "+" : "") + im;
  }
  return "[" + c_[0].get_str() + "," + c_[1].get_str() + "," + c_[2].get_str() + "," + c_[3].get_str() + "]";
}

std::ostream& operator<<(std::ostream& os, const Cyclo8& x) { return os << x.str(); }

// ---------------------------------------------------------------- parsing

namespace {

template <class V>
struct Ops;

template <>
struct Ops<Cyclo8> {
  static Cyclo8 number(std::string_view tok) {
    if (tok.find('.') != std::string_view::npos) throw ParseError("decimal literal in exact expression");
    Rational r;
    if (r.set_str(std::string(tok), 10) != 0) throw ParseError("bad number '" + std::string(tok) + "'");
    if (r.get_den() == 0) throw ParseError("zero denominator in '" + std::string(tok) + "'");
    r.canonicalize();
    return Cyclo8(r);
  }
  static Cyclo8 atom(std::string_view name) {
    if (name == "i") return Cyclo8::i();
    if (name == "a" || name == "zeta") return Cyclo8::alpha();
    if (name == "r2") return Cyclo8::sqrt2();
    throw ParseError("unknown symbol '" + std::string(name) + "'");
  }
  static Cyclo8 div(const Cyclo8& x, const Cyclo8& y) {
    if (y.is_zero()) throw ParseError("division by zero");
    return x / y;
  }
  static Cyclo8 pow(const Cyclo8& x, long e) {
    if (e < 0 && x.is_zero()) throw ParseError("division by zero");
    return x.pow(e);
  }
  static Cyclo8 from_coeffs(const std::vector<Cyclo8>& c) {
    Cyclo8 r;
    for (int k = 0; k < 4; ++k) r += c[k] * Cyclo8::zeta(k);
    return r;
  }
};

using cd = std::complex<double>;

template <>
struct Ops<cd> {
  static cd number(std::string_view tok) {
    std::string s(tok);
    auto slash = s.find('/');
    try {
      if (slash != std::string::npos) return std::stod(s.substr(0, slash)) / std::stod(s.substr(slash + 1));
      return std::stod(s);
    } catch (const std::exception&) {
      throw ParseError("bad number '" + s + "'");
    }
  }
  static cd atom(std::string_view name) { return Ops<Cyclo8>::atom(name).to_complex(); }
  static cd div(const cd& x, const cd& y) { return x / y; }
  static cd pow(const cd& x, long e) { return std::pow(x, static_cast<double>(e)); }
  static cd from_coeffs(const std::vector<cd>& c) {
    cd r = 0;
    for (int k = 0; k < 4; ++k) r += c[k] * Cyclo8::zeta(k).to_complex();
    return r;
  }
};

template <class V>
class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  V parse_all() {
    skip();
    V v = at_top_level_commas() ? coeff_list(false) : expr();
    skip();
    if (p_ != s_.size()) fail("unexpected '" + std::string(1, s_[p_]) + "'");
    return v;
  }

 private:
  std::string_view s_;
  size_t p_ = 0;

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError("cannot parse '" + std::string(s_) + "': " + msg);
  }
  void skip() {
    while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
  }
  char peek() {
    skip();
    return p_ < s_.size() ? s_[p_] : '\0';
  }
  bool at_top_level_commas() const {
    int depth = 0;
    for (char ch : s_) {
      if (ch == '(' || ch == '[') ++depth;
      if (ch == ')' || ch == ']') --depth;
      if (ch == ',' && depth == 0) return true;
    }
    return false;
  }

  V coeff_list(bool bracketed) {
    std::vector<V> parts;
    parts.push_back(expr());
    while (peek() == ',') {
      ++p_;
      parts.push_back(expr());
    }
    if (parts.size() != 4) fail("expected 4 coefficients");
    if (bracketed) {
      if (peek() != ']') fail("missing ']'");
      ++p_;
    }
    return Ops<V>::from_coeffs(parts);
  }

  V expr() {
    V v = term();
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++p_;
        v = v + term();
      } else if (c == '-') {
        ++p_;
        v = v - term();
      } else {
        return v;
      }
    }
  }

  bool starts_primary(char c) const {
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(' ||
           c == '[' || c == '.';
  }

  V term() {
    V v = unary();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++p_;
        v = v * unary();
      } else if (c == '/') {
        ++p_;
        v = Ops<V>::div(v, unary());
      } else if (starts_primary(c)) {
        v = v * power();
      } else {
        return v;
      }
    }
  }

  V unary() {
    char c = peek();
    if (c == '-') {
      ++p_;
      return V(0) - unary();
    }
    if (c == '+') {
      ++p_;
      return unary();
    }
    return power();
  }

  V power() {
    V v = primary();
    if (peek() == '^') {
      ++p_;
      skip();
      bool neg = false;
      if (p_ < s_.size() && s_[p_] == '-') {
        neg = true;
        ++p_;
      }
      size_t st = p_;
      while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
      if (st == p_) fail("exponent must be an integer");
      long e = std::stol(std::string(s_.substr(st, p_ - st)));
      v = Ops<V>::pow(v, neg ? -e : e);
    }
    return v;
  }

  V primary() {
    char c = peek();
    if (c == '(') {
      ++p_;
      V v = expr();
      if (peek() != ')') fail("missing ')'");
      ++p_;
      return v;
    }
    if (c == '[') {
      ++p_;
      return coeff_list(true);
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      size_t st = p_;
      auto digits = [&] {
        while (p_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[p_])) || s_[p_] == '.')) ++p_;
      };
      digits();
      if (p_ + 1 < s_.size() && s_[p_] == 'e' && (std::isdigit(static_cast<unsigned char>(s_[p_ + 1])) || s_[p_ + 1] == '-')) {
        ++p_;
        if (s_[p_] == '-') ++p_;
        digits();
      }
      // "3/2" is one literal; "3/(2)" or "3/a" is a division
      if (p_ + 1 < s_.size() && s_[p_] == '/' && std::isdigit(static_cast<unsigned char>(s_[p_ + 1]))) {
        ++p_;
        digits();
      }
      return Ops<V>::number(s_.substr(st, p_ - st));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t st = p_;
      // "i" and "a" are single letters so "ai" means a*i; "r2" and "zeta" are words
      if (s_.substr(p_, 4) == "zeta") {
        p_ += 4;
      } else if (s_.substr(p_, 2) == "r2") {
        p_ += 2;
      } else {
        ++p_;
      }
      return Ops<V>::atom(s_.substr(st, p_ - st));
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }
};

}  // namespace

Cyclo8 Cyclo8::parse(std::string_view text) { return Parser<Cyclo8>(text).parse_all(); }

// ---------------------------------------------------------------- Scalar

const Cyclo8& Scalar::exact() const {
  if (!is_exact()) throw NotExact("approximate value where an exact one is required");
  return std::get<Cyclo8>(v_);
}

std::complex<double> Scalar::to_complex() const {
  if (is_exact()) return std::get<Cyclo8>(v_).to_complex();
  return std::get<ComplexApprox>(v_).value();
}

bool Scalar::is_zero() const {
  if (is_exact()) return std::get<Cyclo8>(v_).is_zero();
  const auto& z = std::get<ComplexApprox>(v_);
  return std::abs(z.re) <= z.eps && std::abs(z.im) <= z.eps;
}

namespace {

double joint_eps(const Scalar& x, const Scalar& y) { return std::max(x.eps(), y.eps()); }

template <class F, class G>
Scalar combine(const Scalar& x, const Scalar& y, F exact_op, G approx_op) {
  if (x.is_exact() && y.is_exact()) return exact_op(x.exact(), y.exact());
  return Scalar::approx(approx_op(x.to_complex(), y.to_complex()), joint_eps(x, y));
}

}  // namespace

Scalar Scalar::operator-() const {
  if (is_exact()) return -exact();
  return approx(-to_complex(), eps());
}

Scalar operator+(const Scalar& x, const Scalar& y) {
  return combine(x, y, [](const Cyclo8& a, const Cyclo8& b) { return a + b; }, [](cd a, cd b) { return a + b; });
}
Scalar operator-(const Scalar& x, const Scalar& y) {
  return combine(x, y, [](const Cyclo8& a, const Cyclo8& b) { return a - b; }, [](cd a, cd b) { return a - b; });
}
Scalar operator*(const Scalar& x, const Scalar& y) {
  return combine(x, y, [](const Cyclo8& a, const Cyclo8& b) { return a * b; }, [](cd a, cd b) { return a * b; });
}
Scalar operator/(const Scalar& x, const Scalar& y) {
  if (y.is_zero()) throw DivisionByZero("division by zero");
  return combine(x, y, [](const Cyclo8& a, const Cyclo8& b) { return a / b; }, [](cd a, cd b) { return a / b; });
}

bool operator==(const Scalar& x, const Scalar& y) {
  if (x.is_exact() && y.is_exact()) return x.exact() == y.exact();
  double e = std::max(joint_eps(x, y), 1e-12);
  cd d = x.to_complex() - y.to_complex();
  return std::abs(d.real()) <= e && std::abs(d.imag()) <= e;
}

Scalar Scalar::conj() const {
  if (is_exact()) return exact().conj();
  return approx(std::conj(to_complex()), eps());
}

Scalar Scalar::pow(long e) const {
  if (is_exact()) return exact().pow(e);
  return approx(std::pow(to_complex(), static_cast<double>(e)), eps());
}

namespace {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string s(buf);
  if (s.find_first_of(".en") == std::string::npos) s += ".0";
  return s;
}

}  // namespace

std::string Scalar::str() const {
  if (is_exact()) return exact().str();
  cd z = to_complex();
  std::string s = fmt_double(z.real());
  std::string im = fmt_double(z.imag());
  if (im[0] != '-') im = "+" + im;
  return s + im + "i";
}

Scalar Scalar::parse(std::string_view text) {
  if (text.find('.') == std::string_view::npos) return Parser<Cyclo8>(text).parse_all();
  return approx(Parser<cd>(text).parse_all());
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.str(); }

}  // namespace ev
