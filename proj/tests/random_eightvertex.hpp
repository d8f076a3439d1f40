#pragma once

#include <random>

#include "ev/signature.hpp"
#include "random_values.hpp"

namespace testing {

inline ev::Cyclo8 ipow(int k) { return ev::Cyclo8::i().pow(((k % 4) + 4) % 4); }

// Fully random entries from the small pool.
inline ev::EightVertexSig random_pool_sig(std::mt19937& rng, bool allow_zero = true) {
  std::array<ev::Scalar, 8> e;
  for (auto& x : e) x = ev::Scalar(random_small_entry(rng, allow_zero));
  return ev::EightVertexSig::from_entries(e);
}

// Mixture of unstructured and structured families, so both verdict kinds show up often.
inline ev::EightVertexSig random_eightvertex(std::mt19937& rng) {
  using ev::Cyclo8;
  using ev::Scalar;
  auto nz = [&] { return random_small_entry(rng, false); };
  ev::EightVertexSig f = random_pool_sig(rng, false);
  switch (rng() % 9) {
    case 0:
      return random_pool_sig(rng, true);
    case 1:
      return f;
    case 2: {  // three equal or three opposite pairs
      Scalar e(rng() % 2 ? 1 : -1);
      f.y = e * f.b, f.z = e * f.c, f.w = e * f.d;
      if (rng() % 2) {  // unit-square patterns
        Cyclo8 mu = nz();
        f.a = f.x = Scalar(mu);
        f.b = Scalar(mu * ipow(rng()));
        f.c = Scalar(mu * (rng() % 2 ? ipow(rng()) : Cyclo8(2)));
        f.d = Scalar((f.c).exact() * ipow(rng()));
        f.y = e * f.b, f.z = e * f.c, f.w = e * f.d;
      }
      return f;
    }
    case 3: {  // by = cz = dw
      Cyclo8 k = rng() % 3 ? (f.a * f.x).exact() : nz();
      f.y = Scalar(k / (f.b).exact()), f.z = Scalar(k / (f.c).exact()), f.w = Scalar(k / (f.d).exact());
      return f;
    }
    case 4: {  // generic inner matrix with powers of i, conditions mostly satisfied
      Cyclo8 c = nz();
      int j = rng() % 4, k = rng() % 4, m = rng() % 4, n = rng() % 4;
      if ((j + k + m + n) % 2 && rng() % 4) n += 1;
      f.c = Scalar(c), f.b = Scalar(c * ipow(j)), f.y = Scalar(c * ipow(k)), f.d = Scalar(c * ipow(m)),
      f.w = Scalar(c * ipow(n));
      f.z = Scalar(-((f.d).exact() * (f.w).exact()) / c);
      if (rng() % 5 == 0) f.z = Scalar(c * ipow(rng()));
      Cyclo8 a = nz();
      f.a = Scalar(a);
      f.x = Scalar(rng() % 5 ? -((f.b).exact() * (f.y).exact()) / a : nz());
      return f;
    }
    case 5: {  // two (0,0) pairs
      f.b = f.y = f.d = f.w = Scalar(0);
      if (rng() % 2) {
        Cyclo8 mu = nz();
        f.a = f.x = Scalar(mu);
        int sh = rng() % 2;  // zeta^sh multiples
        f.c = Scalar(mu * Cyclo8::zeta(2 * static_cast<int>(rng() % 4) + sh));
        f.z = Scalar(mu * Cyclo8::zeta(2 * static_cast<int>(rng() % 4) + sh));
      }
      auto orbit = ev::pair_orbit(f);
      return orbit[rng() % orbit.size()];
    }
    case 6: {  // lambda i^Q on the even-weight support
      int q[4], cr[4][4];
      for (int& v : q) v = rng() % 4;
      for (auto& row : cr)
        for (int& v : row) v = rng() % 2;
      Cyclo8 lam = nz();
      ev::Signature s(4);
      for (uint32_t x = 0; x < 16; ++x) {
        if (__builtin_popcount(x) % 2) continue;
        int e = 0;
        for (int u = 0; u < 4; ++u) {
          if (!(x >> (3 - u) & 1)) continue;
          e += q[u];
          for (int v = u + 1; v < 4; ++v)
            if (x >> (3 - v) & 1) e += 2 * cr[u][v];
        }
        s[x] = Scalar(lam * ipow(e));
      }
      return *ev::EightVertexSig::from_signature(s);
    }
    case 7:  // six-vertex
      f = random_pool_sig(rng, true);
      (rng() % 2 ? f.a : f.x) = Scalar(0);
      return f;
    default: {  // one zero pair plus structure
      f = random_pool_sig(rng, true);
      f.b = f.y = Scalar(0);
      return f;
    }
  }
}

}  // namespace testing
