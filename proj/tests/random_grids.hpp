#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "ev/evaluate.hpp"
#include "random_values.hpp"

namespace testing {

// lambda * i^Q on a random affine subspace of {0,1}^n
inline ev::Signature random_affine_sig(std::mt19937& rng, int n) {
  int dim = static_cast<int>(rng() % (n + 1));
  std::vector<uint32_t> basis;
  while (static_cast<int>(basis.size()) < dim) {
    uint32_t v = rng() % (1u << n);
    std::vector<uint32_t> span{0};
    for (uint32_t b : basis)
      for (size_t k = 0, m = span.size(); k < m; ++k) span.push_back(span[k] ^ b);
    if (std::find(span.begin(), span.end(), v) == span.end()) basis.push_back(v);
  }
  uint32_t off = rng() % (1u << n);
  std::vector<int> a(n);
  for (int& x : a) x = rng() % 4;
  std::vector<std::vector<int>> b(n, std::vector<int>(n));
  for (auto& row : b)
    for (int& x : row) x = rng() % 2;
  ev::Cyclo8 lam = random_small_entry(rng, false);
  ev::Signature f(n);
  for (uint32_t t = 0; t < (1u << dim); ++t) {
    uint32_t x = off;
    for (int j = 0; j < dim; ++j)
      if (t >> j & 1) x ^= basis[j];
    int q = 0;
    for (int j = 0; j < n; ++j) {
      if (!(x >> (n - 1 - j) & 1)) continue;
      q += a[j];
      for (int k = j + 1; k < n; ++k)
        if (x >> (n - 1 - k) & 1) q += 2 * b[j][k];
    }
    f[x] = ev::Scalar(lam * ev::Cyclo8::i().pow(q));
  }
  return f;
}

// Random perfect matching of all ports; edge endpoints in random order.
inline void wire_randomly(std::mt19937& rng, ev::Grid& g) {
  std::vector<ev::Port> ports;
  for (size_t v = 0; v < g.vertices.size(); ++v)
    for (int p = 1; p <= g.sig_of(static_cast<int>(v)).arity(); ++p) ports.push_back({static_cast<int>(v), p});
  std::shuffle(ports.begin(), ports.end(), rng);
  g.edges.clear();
  for (size_t k = 0; k + 1 < ports.size(); k += 2) g.connect(ports[k], ports[k + 1]);
}

// Random grid of affine signatures with at most max_edges edges.
inline ev::Grid random_affine_grid(std::mt19937& rng, int max_edges) {
  ev::Grid g;
  int ports = 0;
  int k = 0;
  for (;;) {
    int arity = 1 + static_cast<int>(rng() % 4);
    if (ports + arity > 2 * max_edges) break;
    std::string name = "s" + std::to_string(k++);
    g.signatures[name] = random_affine_sig(rng, arity);
    g.add_vertex(name);
    ports += arity;
    if (rng() % 5 == 0) break;
  }
  if (ports % 2) {
    std::string name = "s" + std::to_string(k);
    g.signatures[name] = random_affine_sig(rng, 1);
    g.add_vertex(name);
  }
  wire_randomly(rng, g);
  return g;
}

// Vertices all carrying f, randomly wired (loops and parallel edges allowed).
inline ev::Grid random_fourregular_grid(std::mt19937& rng, const ev::Signature& f, int vertices) {
  ev::Grid g;
  g.signatures["f"] = f;
  for (int v = 0; v < vertices; ++v) g.add_vertex("f");
  wire_randomly(rng, g);
  return g;
}

}  // namespace testing
