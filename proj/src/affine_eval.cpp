#include <cstdint>

#include "ev/classes.hpp"
#include "ev/evaluate.hpp"

namespace ev {

namespace {

// i^{c0 + sum lin_v x_v + 2 sum_{u<v} cross_uv x_u x_v} over bits x_v
struct Z4Form {
  int c0 = 0;
  std::vector<int> lin;
  std::vector<std::vector<uint8_t>> cross;
  std::vector<uint8_t> alive;

  explicit Z4Form(int n) : lin(n, 0), cross(n, std::vector<uint8_t>(n, 0)), alive(n, 1) {}
  int size() const { return static_cast<int>(lin.size()); }

  void add_lin(int v, int k) { lin[v] = ((lin[v] + k) % 4 + 4) % 4; }
  void flip_cross(int u, int v) {
    if (u == v) {
      add_lin(u, 2);
      return;
    }
    cross[u][v] ^= 1;
    cross[v][u] ^= 1;
  }

  // adds k * (c xor x_S) using  c xor L = c + (1-2c) L  and  L = sum x - 2 sum_{f<g} x_f x_g  (mod 4)
  void add_parity(int k, const std::vector<int>& s, int c) {
    c0 = ((c0 + k * c) % 4 + 4) % 4;
    int kk = ((k * (1 - 2 * c)) % 4 + 4) % 4;
    for (size_t a = 0; a < s.size(); ++a) {
      add_lin(s[a], kk);
      if (kk & 1)
        for (size_t b = a + 1; b < s.size(); ++b) flip_cross(s[a], s[b]);
    }
  }

  std::vector<int> neighbours(int v) const {
    std::vector<int> out;
    for (int u = 0; u < size(); ++u)
      if (u != v && alive[u] && cross[v][u]) out.push_back(u);
    return out;
  }

  void kill(int v) {
    for (int u = 0; u < size(); ++u) cross[v][u] = cross[u][v] = 0;
    lin[v] = 0;
    alive[v] = 0;
  }

  // x_p := c xor x_S, with p not in S
  void substitute(int p, const std::vector<int>& s, int c) {
    int a = lin[p];
    for (int u : neighbours(p)) {
      // 2 x_u (c + sum_S x) mod 4
      add_lin(u, 2 * c);
      for (int f : s) flip_cross(u, f);
    }
    kill(p);
    add_parity(a, s, c);
  }
};

}  // namespace

Scalar affine_eval(const Grid& grid) {
  grid.validate();
  const int ne = static_cast<int>(grid.edges.size());
  std::vector<std::vector<std::pair<int, int>>> port_var(grid.vertices.size());  // (edge, complemented)
  for (size_t v = 0; v < grid.vertices.size(); ++v)
    port_var[v].resize(grid.sig_of(static_cast<int>(v)).arity());
  for (int e = 0; e < ne; ++e) {
    port_var[grid.edges[e].a.vertex][grid.edges[e].a.port - 1] = {e, 0};
    port_var[grid.edges[e].b.vertex][grid.edges[e].b.port - 1] = {e, 1};
  }

  Cyclo8 factor(1);
  Z4Form q(ne);
  // rows over GF(2): ne coefficients then the right-hand side
  std::vector<std::vector<uint8_t>> rows;
  for (size_t v = 0; v < grid.vertices.size(); ++v) {
    const Signature& f = grid.sig_of(static_cast<int>(v));
    if (!f.is_exact()) throw NotExact("affine evaluation needs exact signatures");
    auto cert = in_A(f);
    if (!cert) throw NotAffineSignature("signature '" + grid.vertices[v] + "' is not in A");
    if (cert->lambda.is_zero()) return Scalar(0);
    factor *= cert->lambda.exact();
    const auto& pv = port_var[v];
    const int n = f.arity();
    const auto& sp = cert->space;

    // non-pivot coordinates are fixed by the pivot ones
    std::vector<char> is_pivot(n + 1, 0);
    for (int p : sp.pivots) is_pivot[p] = 1;
    for (int m = 1; m <= n; ++m) {
      if (is_pivot[m]) continue;
      std::vector<uint8_t> row(ne + 1, 0);
      auto put = [&](int var) {
        row[pv[var - 1].first] ^= 1;
        row[ne] ^= pv[var - 1].second;
      };
      put(m);
      for (size_t j = 0; j < sp.basis.size(); ++j)
        if (sp.basis[j] >> (n - m) & 1) put(sp.pivots[j]);
      row[ne] ^= (sp.offset >> (n - m)) & 1;
      rows.push_back(std::move(row));
    }

    for (int k = 0; k < n; ++k) {
      auto [ek, ck] = pv[k];
      if (cert->q.lin[k]) q.add_parity(cert->q.lin[k], {ek}, ck);
      for (int j = 0; j < k; ++j) {
        if (!cert->q.cross[j][k]) continue;
        auto [ej, cj] = pv[j];
        // 2 (cj + x_ej)(ck + x_ek) mod 4
        q.c0 = (q.c0 + 2 * cj * ck) % 4;
        q.add_lin(ek, 2 * cj);
        q.add_lin(ej, 2 * ck);
        q.flip_cross(ej, ek);
      }
    }
  }

  // reduced row echelon form
  std::vector<int> pivot_of_row;
  size_t r = 0;
  for (int col = 0; col < ne && r < rows.size(); ++col) {
    size_t sel = r;
    while (sel < rows.size() && !rows[sel][col]) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    for (size_t o = 0; o < rows.size(); ++o)
      if (o != r && rows[o][col])
        for (int k = 0; k <= ne; ++k) rows[o][k] ^= rows[r][k];
    pivot_of_row.push_back(col);
    ++r;
  }
  for (size_t o = r; o < rows.size(); ++o)
    if (rows[o][ne]) return Scalar(0);
  for (size_t o = 0; o < r; ++o) {
    int p = pivot_of_row[o];
    std::vector<int> s;
    for (int k = 0; k < ne; ++k)
      if (k != p && rows[o][k]) s.push_back(k);
    q.substitute(p, s, rows[o][ne]);
  }

  // Gauss-sum elimination, one free variable at a time
  const Cyclo8 one_plus_i = Cyclo8(1) + Cyclo8::i(), one_minus_i = Cyclo8(1) - Cyclo8::i();
  for (int v = 0; v < ne; ++v) {
    if (!q.alive[v]) continue;
    int a = q.lin[v];
    auto l = q.neighbours(v);
    q.kill(v);
    switch (a) {
      case 0:
      case 2:
        if (l.empty()) {
          if (a == 2) return Scalar(0);
        } else {
          int u = l.back();
          l.pop_back();
          q.substitute(u, l, a / 2);
        }
        factor *= Cyclo8(2);
        break;
      case 1:
        factor *= one_plus_i;
        q.add_parity(3, l, 0);
        break;
      default:
        factor *= one_minus_i;
        q.add_parity(1, l, 0);
    }
  }
  return Scalar(factor * Cyclo8::i().pow(q.c0));
}

}  // namespace ev
