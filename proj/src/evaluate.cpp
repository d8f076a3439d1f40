#include "ev/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

#include "ev/gadgets.hpp"

namespace ev {

// ---------------------------------------------------------------- brute force

Scalar brute_force(const Grid& grid, int max_edges, int threads) {
  grid.validate();
  const int ne = static_cast<int>(grid.edges.size());
  if (ne > max_edges || ne > 62)
    throw TooManyEdges(std::to_string(ne) + " edges exceeds the brute-force limit of " + std::to_string(max_edges));

  struct VertexTable {
    const Signature* f;
    std::vector<std::pair<int, int>> ports;  // (edge, complemented), port order
  };
  std::vector<VertexTable> vt(grid.vertices.size());
  for (size_t v = 0; v < vt.size(); ++v) {
    vt[v].f = &grid.sig_of(static_cast<int>(v));
    vt[v].ports.resize(vt[v].f->arity());
  }
  for (int e = 0; e < ne; ++e) {
    vt[grid.edges[e].a.vertex].ports[grid.edges[e].a.port - 1] = {e, 0};
    vt[grid.edges[e].b.vertex].ports[grid.edges[e].b.port - 1] = {e, 1};
  }
  // most constrained vertices first so zero products exit early
  std::sort(vt.begin(), vt.end(), [](const VertexTable& x, const VertexTable& y) {
    return x.f->support().size() * y.f->size() < y.f->support().size() * x.f->size();
  });
  std::vector<std::vector<char>> nonzero(vt.size());
  for (size_t v = 0; v < vt.size(); ++v)
    for (size_t i = 0; i < vt[v].f->size(); ++i) nonzero[v].push_back(!(*vt[v].f)[i].is_zero());

  auto range_sum = [&](uint64_t lo, uint64_t hi) {
    Scalar acc(0);
    std::vector<uint32_t> idx(vt.size());
    for (uint64_t s = lo; s < hi; ++s) {
      bool zero = false;
      for (size_t v = 0; v < vt.size() && !zero; ++v) {
        uint32_t x = 0;
        for (auto [e, c] : vt[v].ports) x = (x << 1) | static_cast<uint32_t>(((s >> e) & 1) ^ c);
        idx[v] = x;
        zero = !nonzero[v][x];
      }
      if (zero) continue;
      Scalar term(1);
      for (size_t v = 0; v < vt.size(); ++v) term *= (*vt[v].f)[idx[v]];
      acc += term;
    }
    return acc;
  };

  const uint64_t total = uint64_t{1} << ne;
  unsigned nt = threads > 0 ? static_cast<unsigned>(threads) : std::max(1u, std::thread::hardware_concurrency());
  if (total < 4096) nt = 1;
  nt = static_cast<unsigned>(std::min<uint64_t>(nt, total));
  if (nt == 1) return range_sum(0, total);
  std::vector<Scalar> partial(nt);
  std::vector<std::thread> pool;
  for (unsigned k = 0; k < nt; ++k) {
    uint64_t lo = total * k / nt, hi = total * (k + 1) / nt;
    pool.emplace_back([&, k, lo, hi] { partial[k] = range_sum(lo, hi); });
  }
  for (auto& t : pool) t.join();
  Scalar sum(0);
  for (const auto& p : partial) sum += p;
  return sum;
}

// ---------------------------------------------------------------- orientations

EightVertexSig eo_signature() { return {0, 1, 1, 1, 1, 1, 1, 0}; }
EightVertexSig saddle_signature() { return {0, 1, 1, 2, 2, 1, 1, 0}; }

Grid eo_grid(const Graph& g) {
  auto deg = g.degrees();
  for (int v = 0; v < g.n; ++v)
    if (deg[v] != 4) throw NotFourRegular("vertex " + std::to_string(v) + " has degree " + std::to_string(deg[v]));
  Grid grid;
  grid.signatures["eo"] = eo_signature().to_signature();
  for (int v = 0; v < g.n; ++v) grid.add_vertex("eo");
  std::vector<int> next(g.n, 1);
  for (auto [u, v] : g.edges) {
    Port a{u, next[u]++};
    Port b{v, next[v]++};
    grid.connect(a, b);
  }
  return grid;
}

Scalar eo_count(const Graph& g) { return brute_force(eo_grid(g)); }

// ---------------------------------------------------------------- rotations and medial graphs

namespace {

std::vector<std::vector<int>> default_rotation(const Graph& g) {
  std::vector<std::vector<int>> rot(g.n);
  for (size_t e = 0; e < g.edges.size(); ++e) {
    rot[g.edges[e].first].push_back(static_cast<int>(e));
    rot[g.edges[e].second].push_back(static_cast<int>(e));
  }
  return rot;
}

// Dart 2e sits at edges[e].first, 2e+1 at edges[e].second; a loop's first listing is 2e.
std::vector<std::vector<int>> darts_of(const Graph& g, const std::vector<std::vector<int>>& rot) {
  std::vector<std::vector<int>> out(g.n);
  std::vector<char> used(2 * g.edges.size(), 0);
  for (int v = 0; v < g.n; ++v)
    for (int e : rot[v]) {
      int d = 2 * e;
      if (g.edges[e].first != v || used[d]) d = 2 * e + 1;
      used[d] = 1;
      out[v].push_back(d);
    }
  return out;
}

int count_faces(const std::vector<std::vector<int>>& darts, size_t ndarts) {
  std::vector<int> succ(ndarts, -1);
  for (const auto& ds : darts)
    for (size_t k = 0; k < ds.size(); ++k) succ[ds[k]] = ds[(k + 1) % ds.size()];
  std::vector<char> seen(ndarts, 0);
  int faces = 0;
  for (size_t d = 0; d < ndarts; ++d) {
    if (seen[d]) continue;
    ++faces;
    for (int x = static_cast<int>(d); !seen[x]; x = succ[x ^ 1]) seen[x] = 1;
  }
  return faces;
}

}  // namespace

int rotation_genus(const Graph& g, const std::vector<std::vector<int>>& rot) {
  int f = count_faces(darts_of(g, rot), 2 * g.edges.size());
  return (2 - g.n + static_cast<int>(g.edges.size()) - f) / 2;
}

std::vector<std::vector<int>> planar_rotation(const Graph& g) {
  if (g.rotation) return *g.rotation;
  auto rot = default_rotation(g);
  if (rotation_genus(g, rot) == 0) return rot;
  double combos = 1;
  for (const auto& r : rot)
    for (size_t k = 2; k < r.size(); ++k) combos *= static_cast<double>(k);
  if (combos > 2e5) return rot;
  // odometer over the orderings of each rotation with its first entry fixed
  auto cur = rot;
  for (auto& r : cur) std::sort(r.begin() + (r.empty() ? 0 : 1), r.end());
  for (;;) {
    if (rotation_genus(g, cur) == 0) return cur;
    int v = 0;
    for (; v < g.n; ++v) {
      auto& r = cur[v];
      if (r.size() > 2 && std::next_permutation(r.begin() + 1, r.end())) break;
    }
    if (v == g.n) return rot;
  }
}

Medial medial_graph(const Graph& g) {
  if (!g.connected()) throw std::invalid_argument("medial graph needs a connected graph");
  auto deg = g.degrees();
  for (int v = 0; v < g.n; ++v)
    if (deg[v] < 2) throw std::invalid_argument("medial graph needs every vertex of degree at least 2");
  auto darts = darts_of(g, planar_rotation(g));
  // corner after dart h at its vertex; side 0 uses ports 1 (succ) and 2 (pred), side 1 uses 4 and 3
  auto succ_port = [](int h) { return Port{h >> 1, (h & 1) ? 4 : 1}; };
  auto pred_port = [](int h) { return Port{h >> 1, (h & 1) ? 3 : 2}; };
  Medial m;
  m.vertices = static_cast<int>(g.edges.size());
  for (const auto& ds : darts)
    for (size_t k = 0; k < ds.size(); ++k) m.edges.push_back({succ_port(ds[k]), pred_port(ds[(k + 1) % ds.size()])});
  return m;
}

Grid medial_grid(const Graph& g, const EightVertexSig& f) {
  Medial m = medial_graph(g);
  Grid grid;
  grid.signatures["f"] = f.to_signature();
  for (int v = 0; v < m.vertices; ++v) grid.add_vertex("f");
  grid.edges = m.edges;
  return grid;
}

Scalar tutte33(const Graph& g) { return brute_force(medial_grid(g, saddle_signature())) / Scalar(2); }

// ---------------------------------------------------------------- Ising

std::array<Rational, 8> ising_energies(const std::array<Rational, 5>& j) {
  const auto& [jh, jv, jd, jd2, j4] = j;
  Rational e56 = jd - jd2 + j4, e78 = -jd + jd2 + j4;
  return {-jh - jv - jd - jd2 - j4, jh + jv - jd - jd2 - j4, -jh + jv + jd + jd2 - j4, jh - jv + jd + jd2 - j4,
          e56, e56, e78, e78};
}

namespace {

EightVertexSig from_weights(const std::array<Scalar, 8>& w) {
  // w1..w8 -> c, z, d, w, b, y, a, x
  return {w[6], w[4], w[0], w[2], w[3], w[1], w[5], w[7]};
}

}  // namespace

EightVertexSig ising_signature(const std::array<Rational, 5>& j) {
  std::array<Scalar, 8> w;
  auto eps = ising_energies(j);
  for (int k = 0; k < 8; ++k) {
    if (eps[k].get_den() != 1)
      throw NotRepresentable("exp(-eps" + std::to_string(k + 1) + ") is not in Q(zeta8); eps = " + eps[k].get_str() +
                             " pi i/4");
    w[k] = Scalar(Cyclo8::zeta(-static_cast<int>(eps[k].get_num().get_si())));
  }
  return from_weights(w);
}

EightVertexSig ising_signature_approx(const std::array<std::complex<double>, 5>& j) {
  const auto& [jh, jv, jd, jd2, j4] = j;
  std::complex<double> e56 = jd - jd2 + j4, e78 = -jd + jd2 + j4;
  std::array<std::complex<double>, 8> eps = {-jh - jv - jd - jd2 - j4, jh + jv - jd - jd2 - j4,
                                             -jh + jv + jd + jd2 - j4, jh - jv + jd + jd2 - j4, e56, e56, e78, e78};
  std::array<Scalar, 8> w;
  for (int k = 0; k < 8; ++k) w[k] = Scalar::approx(std::exp(-eps[k]));
  return from_weights(w);
}

// ---------------------------------------------------------------- interpolation

EightVertexSig interpolation_chain_sig(const Rational& t, int r, int eps) {
  Scalar ir(Cyclo8::i().pow(r)), tt(t), e(eps);
  return {1, tt, ir, e * ir * tt, e * ir * tt, ir, tt, 1};
}

EightVertexSig g_lambda(const Scalar& lambda, int eps) {
  Scalar e(eps), one(1);
  return {one + e * lambda, one - e * lambda, one + lambda, e * (one - lambda),
          e * (one - lambda), one + lambda, one - e * lambda, one + e * lambda};
}

namespace {

std::vector<Scalar> solve_exact(std::vector<std::vector<Scalar>> a, std::vector<Scalar> b) {
  const size_t n = b.size();
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) throw SingularSystem("interpolation nodes are not distinct");
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      Scalar f = a[r][c] / a[c][c];
      for (size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  for (size_t c = 0; c < n; ++c) b[c] /= a[c][c];
  return b;
}

}  // namespace

InterpolationResult interpolation_demo(const Grid& grid, const std::string& slot, const Scalar& lambda,
                                       const Rational& t, int r, int eps) {
  if (t == 1 || t == -1 || t == 0) throw std::invalid_argument("chain parameter t must avoid 1, -1 and iR");
  if (eps != 1 && eps != -1) throw std::invalid_argument("eps must be 1 or -1");
  int m = static_cast<int>(std::count(grid.vertices.begin(), grid.vertices.end(), slot));
  if (m == 0) throw std::invalid_argument("grid has no '" + slot + "' vertices");
  for (size_t v = 0; v < grid.vertices.size(); ++v)
    if (grid.vertices[v] == slot) {
      auto it = grid.signatures.find(slot);
      if (it != grid.signatures.end() && it->second.arity() != 4)
        throw BadGrid("slot signature must have arity 4");
    }

  Signature f = interpolation_chain_sig(t, r, eps).to_signature();
  InterpolationResult out;
  std::vector<std::vector<Scalar>> vand;
  std::vector<Scalar> rhs;
  for (int s = 1; s <= m + 1; ++s) {
    Signature d = chain_power(f, View{}, 4L * s);
    auto e = EightVertexSig::from_signature(d);
    if (!e) throw std::domain_error("chain gadget left the even-support family");
    // d = kappa * g_mu: the c and d entries give kappa(1+mu) and eps kappa(1-mu)
    Scalar kappa = (e->c + Scalar(eps) * e->d) / Scalar(2);
    if (kappa.is_zero()) throw std::domain_error("chain gadget degenerates");
    Scalar mu = e->c / kappa - Scalar(1);
    if (!(g_lambda(mu, eps).to_signature().scaled(kappa) == d))
      throw std::domain_error("chain gadget is not a multiple of some g_lambda");
    Grid inst = grid;
    inst.signatures[slot] = d;
    Scalar h = brute_force(inst);
    out.nodes.push_back(mu);
    out.samples.push_back(h);
    std::vector<Scalar> row;
    Scalar p(1);
    for (int k = 0; k <= m; ++k, p *= mu) row.push_back(p);
    vand.push_back(row);
    rhs.push_back(h / kappa.pow(m));
  }
  out.coeffs = solve_exact(vand, rhs);
  Scalar p(1);
  out.value = Scalar(0);
  for (int k = 0; k <= m; ++k, p *= lambda) out.value += out.coeffs[k] * p;
  Grid direct = grid;
  direct.signatures[slot] = g_lambda(lambda, eps).to_signature();
  out.direct = brute_force(direct);
  return out;
}

}  // namespace ev
