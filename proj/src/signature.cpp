#include "ev/signature.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace ev {

Signature::Signature(int arity) : arity_(arity), v_(size_t{1} << arity) {
  if (arity < 0 || arity > 6) throw std::invalid_argument("signature arity must be in 0..6");
}

Signature::Signature(int arity, std::vector<Scalar> values) : arity_(arity), v_(std::move(values)) {
  if (arity < 0 || arity > 6) throw std::invalid_argument("signature arity must be in 0..6");
  if (v_.size() != (size_t{1} << arity))
    throw std::invalid_argument("signature of arity " + std::to_string(arity) + " needs " +
                                std::to_string(1 << arity) + " values");
}

bool Signature::is_exact() const {
  return std::all_of(v_.begin(), v_.end(), [](const Scalar& s) { return s.is_exact(); });
}

bool Signature::is_zero() const {
  return std::all_of(v_.begin(), v_.end(), [](const Scalar& s) { return s.is_zero(); });
}

std::vector<uint32_t> Signature::support() const {
  std::vector<uint32_t> s;
  for (uint32_t i = 0; i < v_.size(); ++i)
    if (!v_[i].is_zero()) s.push_back(i);
  return s;
}

Signature Signature::scaled(const Scalar& s) const {
  Signature r = *this;
  for (auto& v : r.v_) v *= s;
  return r;
}

bool Signature::proportional(const Signature& o) const {
  if (arity_ != o.arity_) return false;
  size_t piv = v_.size();
  for (size_t i = 0; i < v_.size(); ++i) {
    if (v_[i].is_zero() != o.v_[i].is_zero()) return false;
    if (piv == v_.size() && !v_[i].is_zero()) piv = i;
  }
  if (piv == v_.size()) return true;
  // f_i * g_p == g_i * f_p avoids division
  for (size_t i = 0; i < v_.size(); ++i)
    if (!(v_[i] * o.v_[piv] == o.v_[i] * v_[piv])) return false;
  return true;
}

std::string Signature::str() const {
  std::string s;
  for (size_t i = 0; i < v_.size(); ++i) {
    if (i) s += ",";
    s += v_[i].str();
  }
  return s;
}

Signature tensor(const Signature& f, const Signature& g) {
  Signature r(f.arity() + g.arity());
  for (size_t i = 0; i < f.size(); ++i)
    for (size_t j = 0; j < g.size(); ++j) r[(i << g.arity()) | j] = f[i] * g[j];
  return r;
}

Signature equality(int arity) {
  Signature r(arity);
  r[0] = 1;
  r[r.size() - 1] = 1;
  return r;
}

Signature disequality2() { return Signature(2, {0, 1, 1, 0}); }

// ---------------------------------------------------------------- eight-vertex

namespace {

constexpr uint32_t kSlots[8] = {0b0000, 0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100, 0b1111};

std::vector<std::string> split_top_level(std::string_view text) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char ch : text) {
    if (ch == '(' || ch == '[') ++depth;
    if (ch == ')' || ch == ']') --depth;
    if (ch == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

Signature EightVertexSig::to_signature() const {
  Signature f(4);
  auto e = entries();
  for (int k = 0; k < 8; ++k) f[kSlots[k]] = e[k];
  return f;
}

std::optional<EightVertexSig> EightVertexSig::from_signature(const Signature& f) {
  if (f.arity() != 4) return std::nullopt;
  for (uint32_t i = 0; i < 16; ++i)
    if (std::popcount(i) % 2 == 1 && !f[i].is_zero()) return std::nullopt;
  std::array<Scalar, 8> e;
  for (int k = 0; k < 8; ++k) e[k] = f[kSlots[k]];
  return from_entries(e);
}

EightVertexSig EightVertexSig::from_entries(const std::array<Scalar, 8>& e) {
  return {e[0], e[1], e[2], e[3], e[4], e[5], e[6], e[7]};
}

EightVertexSig EightVertexSig::parse(std::string_view text) {
  auto parts = split_top_level(text);
  if (parts.size() != 8)
    throw ParseError("eight-vertex signature needs 8 comma-separated entries, got " + std::to_string(parts.size()));
  std::array<Scalar, 8> e;
  for (int k = 0; k < 8; ++k) e[k] = Scalar::parse(parts[k]);
  return from_entries(e);
}

bool EightVertexSig::is_exact() const {
  for (const auto& s : entries())
    if (!s.is_exact()) return false;
  return true;
}

std::string EightVertexSig::str() const {
  std::string s;
  auto e = entries();
  for (int k = 0; k < 8; ++k) {
    if (k) s += ",";
    s += e[k].str();
  }
  return s;
}

// ---------------------------------------------------------------- views

namespace {

void check_view(VarPair rows, VarPair cols) {
  std::array<int, 4> v = {rows.first, rows.second, cols.first, cols.second};
  std::array<int, 4> s = v;
  std::sort(s.begin(), s.end());
  if (s != std::array<int, 4>{1, 2, 3, 4}) throw BadPermutation("matrix view needs a permutation of 1,2,3,4");
}

uint32_t view_index(int r, int c, VarPair rows, VarPair cols) {
  uint32_t idx = 0;
  auto put = [&](int var, int b) { idx |= static_cast<uint32_t>(b) << (4 - var); };
  put(rows.first, r >> 1);
  put(rows.second, r & 1);
  put(cols.first, c >> 1);
  put(cols.second, c & 1);
  return idx;
}

}  // namespace

Matrix4 matrix_view(const Signature& f, VarPair rows, VarPair cols) {
  if (f.arity() != 4) throw std::invalid_argument("matrix_view needs arity 4");
  check_view(rows, cols);
  Matrix4 m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m[r][c] = f[view_index(r, c, rows, cols)];
  return m;
}

Signature from_matrix_view(const Matrix4& m, VarPair rows, VarPair cols) {
  check_view(rows, cols);
  Signature f(4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) f[view_index(r, c, rows, cols)] = m[r][c];
  return f;
}

Matrix4 matmul(const Matrix4& p, const Matrix4& q) {
  Matrix4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Scalar s;
      for (int k = 0; k < 4; ++k)
        if (!p[i][k].is_zero() && !q[k][j].is_zero()) s += p[i][k] * q[k][j];
      r[i][j] = s;
    }
  return r;
}

// ---------------------------------------------------------------- permutations

Signature apply_perm(const Signature& f, const VarPerm& sigma) {
  int n = f.arity();
  if (static_cast<int>(sigma.size()) != n) throw BadPermutation("permutation size does not match arity");
  std::vector<int> seen(n + 1, 0);
  for (int s : sigma) {
    if (s < 1 || s > n || seen[s]++) throw BadPermutation("not a permutation");
  }
  Signature g(n);
  for (uint32_t x = 0; x < f.size(); ++x) {
    // argument k of g reads x_{sigma(k)}
    uint32_t u = 0;
    for (int k = 1; k <= n; ++k) u |= static_cast<uint32_t>(f.bit(x, sigma[k - 1])) << (n - k);
    g[u] = f[x];
  }
  return g;
}

VarPerm product(const VarPerm& sigma, const VarPerm& tau) {
  VarPerm r(sigma.size());
  for (size_t k = 0; k < sigma.size(); ++k) r[k] = tau[sigma[k] - 1];
  return r;
}

std::vector<VarPerm> all_perms(int n) {
  VarPerm p(n);
  std::iota(p.begin(), p.end(), 1);
  std::vector<VarPerm> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<EightVertexSig> pair_orbit(const EightVertexSig& f) {
  using Pair = std::pair<Scalar, Scalar>;
  std::array<Pair, 3> rows = {Pair{f.b, f.y}, Pair{f.c, f.z}, Pair{f.d, f.w}};
  std::array<int, 3> order = {0, 1, 2};
  // flip none, or flip exactly two rows
  const std::array<std::array<bool, 3>, 4> flips = {{{false, false, false}, {true, true, false}, {true, false, true},
                                                     {false, true, true}}};
  std::vector<EightVertexSig> out;
  do {
    for (const auto& fl : flips) {
      std::array<Pair, 3> r;
      for (int k = 0; k < 3; ++k) {
        r[k] = rows[order[k]];
        if (fl[k]) std::swap(r[k].first, r[k].second);
      }
      EightVertexSig g{f.a, r[0].first, r[1].first, r[2].first, r[2].second, r[1].second, r[0].second, f.x};
      if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

// ---------------------------------------------------------------- transforms

Transform2x2 Transform2x2::from(Scalar p, Scalar q, Scalar r, Scalar s) {
  Transform2x2 t;
  t.m = {{{p, q}, {r, s}}};
  if (t.det().is_zero()) throw std::invalid_argument("transform must be invertible");
  return t;
}

Transform2x2 Transform2x2::half_diag(Scalar gamma2) {
  if (gamma2.is_zero()) throw std::invalid_argument("transform must be invertible");
  Transform2x2 t;
  t.m = {{{1, 0}, {0, 0}}};
  t.half_gamma2 = gamma2;
  return t;
}

Scalar Transform2x2::det() const {
  if (half_gamma2) return Scalar(0);  // only gamma^2 is known
  return m[0][0] * m[1][1] - m[0][1] * m[1][0];
}

std::string Transform2x2::str() const {
  if (half_gamma2) return "diag(1,sqrt(" + half_gamma2->str() + "))";
  return "[[" + m[0][0].str() + "," + m[0][1].str() + "],[" + m[1][0].str() + "," + m[1][1].str() + "]]";
}

Signature holographic_transform(const Signature& f, const Transform2x2& t) {
  int n = f.arity();
  if (t.half_gamma2) {
    Signature g(n);
    for (uint32_t x = 0; x < f.size(); ++x) {
      if (f[x].is_zero()) continue;
      int wt = std::popcount(x);
      if (wt % 2) throw OddSupportWithHalfTransform("half-diagonal transform needs even-weight support");
      g[x] = f[x] * t.half_gamma2->pow(wt / 2);
    }
    return g;
  }
  Signature cur = f;
  for (int var = 1; var <= n; ++var) {
    Signature nxt(n);
    uint32_t mask = 1u << (n - var);
    for (uint32_t y = 0; y < f.size(); ++y) {
      int yb = (y & mask) ? 1 : 0;
      const Scalar& v0 = cur[y & ~mask];
      const Scalar& v1 = cur[y | mask];
      Scalar s;
      if (!v0.is_zero() && !t.m[yb][0].is_zero()) s += t.m[yb][0] * v0;
      if (!v1.is_zero() && !t.m[yb][1].is_zero()) s += t.m[yb][1] * v1;
      nxt[y] = s;
    }
    cur = std::move(nxt);
  }
  return cur;
}

// ---------------------------------------------------------------- structure

int rank3(const std::array<std::array<Scalar, 3>, 3>& m0) {
  auto m = m0;
  int rank = 0;
  for (int col = 0; col < 3 && rank < 3; ++col) {
    int piv = -1;
    for (int r = rank; r < 3; ++r)
      if (!m[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    for (int r = 0; r < 3; ++r) {
      if (r == rank || m[r][col].is_zero()) continue;
      Scalar k = m[r][col] / m[rank][col];
      for (int c = 0; c < 3; ++c) m[r][c] -= k * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

Structure structural_queries(const EightVertexSig& f) {
  Structure s;
  for (const Scalar* e : {&f.b, &f.c, &f.d, &f.w, &f.z, &f.y})
    if (e->is_zero()) ++s.zeros;
  for (auto [p, q] : {std::pair{&f.b, &f.y}, {&f.c, &f.z}, {&f.d, &f.w}})
    if (p->is_zero() && q->is_zero()) ++s.zero_pairs;
  // middle rows (c,d)=(w,z) and middle columns (c,w)=(d,z)
  s.redundant = f.c == f.w && f.d == f.z && f.c == f.d && f.w == f.z;
  if (s.redundant) {
    Signature g = f.to_signature();
    s.compressed = std::array<std::array<Scalar, 3>, 3>{{{g[0b0000], g[0b0001], g[0b0011]},
                                                         {g[0b0100], g[0b0101], g[0b0111]},
                                                         {g[0b1100], g[0b1101], g[0b1111]}}};
  }
  s.by = f.b * f.y;
  s.cz = f.c * f.z;
  s.dw = f.d * f.w;
  if (!(s.cz == s.dw))
    s.inner_rank = 2;
  else if (f.c.is_zero() && f.d.is_zero() && f.w.is_zero() && f.z.is_zero())
    s.inner_rank = 0;
  else
    s.inner_rank = 1;
  return s;
}

}  // namespace ev
