#include "ev/classes.hpp"

#include <algorithm>
#include <bit>

namespace ev {

namespace {

void require_exact(const Signature& f) {
  if (!f.is_exact()) throw NotExact("class membership needs exact values");
}

uint32_t var_mask(int n, int var) { return 1u << (n - var); }

}  // namespace

std::vector<uint32_t> AffineSpace::points() const {
  std::vector<uint32_t> pts;
  if (empty) return pts;
  size_t k = basis.size();
  for (uint32_t t = 0; t < (1u << k); ++t) {
    uint32_t x = offset;
    for (size_t j = 0; j < k; ++j)
      if (t >> j & 1) x ^= basis[j];
    pts.push_back(x);
  }
  return pts;
}

bool AffineSpace::contains(uint32_t x) const {
  if (empty) return false;
  uint32_t r = x ^ offset;
  for (size_t j = 0; j < basis.size(); ++j)
    if (r & var_mask(n, pivots[j])) r ^= basis[j];
  return r == 0;
}

int QuadForm::eval(uint32_t x) const {
  int s = 0;
  for (int k = 0; k < n; ++k) {
    if (!(x >> (n - 1 - k) & 1)) continue;
    s += lin[k];
    for (int j = 0; j < k; ++j)
      if (x >> (n - 1 - j) & 1) s += 2 * cross[j][k];
  }
  return ((s % 4) + 4) % 4;
}

std::string QuadForm::str() const {
  std::string s;
  auto add = [&](const std::string& t) { s += (s.empty() ? "" : " + ") + t; };
  for (int k = 0; k < n; ++k)
    if (lin[k]) add((lin[k] == 1 ? "" : std::to_string(lin[k])) + "x" + std::to_string(k + 1));
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k)
      if (cross[j][k]) add("2x" + std::to_string(j + 1) + "x" + std::to_string(k + 1));
  return s.empty() ? "0" : s;
}

Scalar ACertificate::value(uint32_t x) const {
  if (!space.contains(x)) return Scalar(0);
  return lambda * Scalar(Cyclo8::i().pow(q.eval(x)));
}

Signature PDecomposition::assemble(int arity) const {
  Signature out(arity);
  if (zero) return out;
  for (uint32_t x = 0; x < out.size(); ++x) {
    Scalar v(1);
    for (const auto& fac : factors) {
      uint32_t sub = 0;
      for (int var : fac.vars) sub = (sub << 1) | ((x >> (arity - var)) & 1);
      v *= fac.leaf[sub];
    }
    out[x] = v;
  }
  return out;
}

std::string Profile::str() const {
  std::string s;
  auto add = [&](const char* t) { s += (s.empty() ? "" : ",") + std::string(t); };
  if (A) add("A");
  if (P) add("P");
  if (L) add("L");
  if (alphaA) add("alphaA");
  return "{" + s + "}";
}

// ---------------------------------------------------------------- affine support

std::optional<AffineSpace> affine_support(const Signature& f) {
  require_exact(f);
  int n = f.arity();
  auto supp = f.support();
  AffineSpace sp;
  sp.n = n;
  if (supp.empty()) {
    sp.empty = true;
    return sp;
  }
  if (std::popcount(supp.size()) != 1) return std::nullopt;
  // echelon basis of {s ^ s0}
  uint32_t s0 = supp[0];
  std::vector<uint32_t> basis;
  std::vector<int> pivots;
  for (uint32_t s : supp) {
    uint32_t v = s ^ s0;
    for (size_t j = 0; j < basis.size(); ++j)
      if (v & var_mask(n, pivots[j])) v ^= basis[j];
    if (!v) continue;
    int piv = n - (31 - std::countl_zero(v));  // highest set bit is the smallest variable index
    for (size_t j = 0; j < basis.size(); ++j)
      if (basis[j] & var_mask(n, piv)) basis[j] ^= v;
    basis.push_back(v);
    pivots.push_back(piv);
  }
  if ((size_t{1} << basis.size()) != supp.size()) return std::nullopt;
  // sort by pivot and move the offset to the point with zero pivot coordinates
  std::vector<size_t> ord(basis.size());
  for (size_t j = 0; j < ord.size(); ++j) ord[j] = j;
  std::sort(ord.begin(), ord.end(), [&](size_t p, size_t q) { return pivots[p] < pivots[q]; });
  for (size_t j : ord) {
    sp.basis.push_back(basis[j]);
    sp.pivots.push_back(pivots[j]);
  }
  uint32_t off = s0;
  for (size_t j = 0; j < sp.basis.size(); ++j)
    if (off & var_mask(n, sp.pivots[j])) off ^= sp.basis[j];
  sp.offset = off;
  for (uint32_t s : supp)
    if (!sp.contains(s)) return std::nullopt;
  return sp;
}

// ---------------------------------------------------------------- A

std::optional<ACertificate> in_A(const Signature& f) {
  auto sp = affine_support(f);
  if (!sp) return std::nullopt;
  int n = f.arity();
  ACertificate cert;
  cert.space = *sp;
  cert.q.n = n;
  cert.q.lin.assign(n, 0);
  cert.q.cross.assign(n, std::vector<int>(n, 0));
  if (sp->empty) {
    cert.lambda = Scalar(0);
    return cert;
  }
  const Cyclo8 base = f[sp->offset].exact();
  auto rel = [&](uint32_t x) -> std::optional<int> { return as_power_of_i(f[x].exact() / base); };
  size_t k = sp->basis.size();
  std::vector<int> alpha(k);
  for (size_t j = 0; j < k; ++j) {
    auto e = rel(sp->offset ^ sp->basis[j]);
    if (!e) return std::nullopt;
    alpha[j] = *e;
    cert.q.lin[sp->pivots[j] - 1] = *e;
  }
  for (size_t j = 0; j < k; ++j)
    for (size_t l = j + 1; l < k; ++l) {
      auto e = rel(sp->offset ^ sp->basis[j] ^ sp->basis[l]);
      if (!e) return std::nullopt;
      int two_b = ((*e - alpha[j] - alpha[l]) % 4 + 4) % 4;
      if (two_b % 2) return std::nullopt;
      cert.q.cross[sp->pivots[j] - 1][sp->pivots[l] - 1] = two_b / 2;
    }
  cert.lambda = f[sp->offset];
  for (uint32_t x : sp->points())
    if (!(cert.value(x) == f[x])) return std::nullopt;
  return cert;
}

Signature alpha_twist(const Signature& f, uint32_t mask) {
  Signature g = f;
  for (uint32_t x = 0; x < f.size(); ++x)
    if (!f[x].is_zero()) g[x] = f[x] * Scalar(Cyclo8::zeta(std::popcount(x & mask)));
  return g;
}

bool in_A_scaled(const Signature& f, const Scalar& mu2) {
  require_exact(f);
  if (mu2.is_zero() || !mu2.is_exact()) throw std::invalid_argument("in_A_scaled needs a nonzero exact square");
  const uint32_t top = static_cast<uint32_t>(f.size() - 1);
  if (auto mu = sqrt_in_field(mu2.exact())) {
    for (const Cyclo8& m : {*mu, -*mu}) {
      Signature g = f;
      g[0] = g[0] * Scalar(m);
      g[top] = g[top] * Scalar(m);
      if (in_A(g)) return true;
    }
    return false;
  }
  // mu lies outside the field: ratios between scaled and unscaled entries cannot be powers of i
  bool outer = false, inner = false;
  for (uint32_t x : f.support()) (x == 0 || x == top ? outer : inner) = true;
  if (outer && inner) return false;
  return in_A(f).has_value();
}

bool in_alphaA_scaled(const Signature& f, const Scalar& mu2) {
  return in_A_scaled(alpha_twist(f, static_cast<uint32_t>(f.size() - 1)), mu2);
}

// ---------------------------------------------------------------- P

namespace {

bool antipodal_support(const Signature& f) {
  auto s = f.support();
  if (s.size() <= 1) return true;
  return s.size() == 2 && (s[0] ^ s[1]) == static_cast<uint32_t>(f.size() - 1);
}

Signature restrict_to(const Signature& f, const std::vector<int>& vars, uint32_t fixed) {
  int n = f.arity();
  int m = static_cast<int>(vars.size());
  Signature g(m);
  for (uint32_t sub = 0; sub < g.size(); ++sub) {
    uint32_t x = fixed;
    for (int k = 0; k < m; ++k) {
      uint32_t msk = var_mask(n, vars[k]);
      x = (sub >> (m - 1 - k) & 1) ? (x | msk) : (x & ~msk);
    }
    g[sub] = f[x];
  }
  return g;
}

bool decompose(const Signature& f, const std::vector<int>& vars, std::vector<PFactor>& out) {
  if (antipodal_support(f)) {
    out.push_back({vars, f});
    return true;
  }
  int n = f.arity();
  auto supp = f.support();
  uint32_t x0 = supp[0];
  // bipartitions with variable 1 on the left
  for (uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> left{1}, right;
    for (int v = 2; v <= n; ++v) ((mask >> (v - 2)) & 1 ? right : left).push_back(v);
    if (right.empty()) continue;
    uint32_t lmask = 0;
    for (int v : left) lmask |= var_mask(n, v);
    // rank one: f(x) f(x0) == f(x_L, x0_R) f(x0_L, x_R)
    const Scalar& f0 = f[x0];
    bool rank1 = true;
    for (uint32_t x = 0; x < f.size() && rank1; ++x) {
      uint32_t xl = (x & lmask) | (x0 & ~lmask);
      uint32_t xr = (x0 & lmask) | (x & ~lmask);
      if (!(f[x] * f0 == f[xl] * f[xr])) rank1 = false;
    }
    if (!rank1) continue;
    Signature g = restrict_to(f, left, x0);
    Signature h = restrict_to(f, right, x0).scaled(Scalar(1) / f0);
    std::vector<int> lv, rv;
    for (int v : left) lv.push_back(vars[v - 1]);
    for (int v : right) rv.push_back(vars[v - 1]);
    return decompose(g, lv, out) && decompose(h, rv, out);
  }
  return false;
}

}  // namespace

std::optional<PDecomposition> in_P(const Signature& f) {
  require_exact(f);
  PDecomposition d;
  if (f.is_zero()) {
    d.zero = true;
    return d;
  }
  std::vector<int> vars(f.arity());
  for (int k = 0; k < f.arity(); ++k) vars[k] = k + 1;
  if (!decompose(f, vars, d.factors)) return std::nullopt;
  return d;
}

// ---------------------------------------------------------------- L, alphaA

bool in_L(const Signature& f) {
  require_exact(f);
  for (uint32_t s : f.support())
    if (!in_A(alpha_twist(f, s))) return false;
  return true;
}

bool in_alphaA(const Signature& f) {
  require_exact(f);
  return in_A(alpha_twist(f, static_cast<uint32_t>(f.size() - 1))).has_value();
}

Profile membership_profile(const Signature& f) {
  Profile p;
  p.A = in_A(f).has_value();
  p.P = in_P(f).has_value();
  p.L = in_L(f);
  p.alphaA = in_alphaA(f);
  return p;
}

}  // namespace ev
