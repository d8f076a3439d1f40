#include "ev/classify.hpp"

#include <algorithm>
#include <stdexcept>

namespace ev {

namespace {

Cyclo8 ex(const Scalar& s) { return s.exact(); }

Generator gen(Generator::Kind k) { return Generator{k, Scalar(1)}; }

const Cyclo8 kI = Cyclo8::i();

bool zero(const Scalar& s) { return s.is_zero(); }

Signature apply(const Transform& t, Signature s) {
  for (const Generator& g : t) s = holographic_transform(s, g.matrix());
  return s;
}

// (T^{-1})^T up to scalar, for the binary side
Transform2x2 inverse_transpose(const Transform2x2& t) {
  const auto& m = t.m;
  return Transform2x2::from(m[1][1], -m[1][0], -m[0][1], m[0][0]);
}

bool member(const Signature& s, TargetClass c) {
  switch (c) {
    case TargetClass::A:
      return in_A(s).has_value();
    case TargetClass::P:
      return in_P(s).has_value();
    case TargetClass::L:
      return in_L(s);
    default:
      return in_alphaA(s);
  }
}

using Outer = std::optional<std::pair<Scalar, Scalar>>;

std::vector<Outer> root_outers(const EightVertexSig& f) {
  std::vector<Outer> out;
  if (auto mu = sqrt_in_field(ex(f.a * f.x))) {
    out.push_back(std::pair{Scalar(*mu), Scalar(*mu)});
    out.push_back(std::pair{Scalar(-*mu), Scalar(-*mu)});
  }
  return out;
}

std::optional<Certificate> search(const EightVertexSig& f, const std::vector<Outer>& outers,
                                  const std::vector<Transform>& transforms, const std::vector<TargetClass>& classes) {
  for (TargetClass c : classes)
    for (const Transform& t : transforms)
      for (const Outer& o : outers) {
        EightVertexSig g = f;
        if (o) std::tie(g.a, g.x) = *o;
        Certificate cert;
        cert.transform = t;
        cert.target = c;
        cert.outer = o;
        try {
          cert.transformed = apply(t, g.to_signature());
        } catch (const std::exception&) {
          continue;
        }
        if (check_certificate(f, cert)) return cert;
      }
  return std::nullopt;
}

Verdict hard(std::string branch, std::vector<TraceStep> trace) {
  Verdict v;
  v.kind = Verdict::Hard;
  v.branch = std::move(branch);
  v.trace = std::move(trace);
  return v;
}

Verdict fail(std::string branch, TraceStep last, std::vector<TraceStep>& trace) {
  trace.push_back(std::move(last));
  return hard(std::move(branch), trace);
}

Verdict tractable(std::string branch, Certificate cert, std::vector<TraceStep> trace) {
  Verdict v;
  v.kind = Verdict::Tractable;
  v.branch = std::move(branch);
  v.certificate = std::move(cert);
  v.trace = std::move(trace);
  return v;
}

// A branch decided "tractable" by its closed-form test must produce a certificate.
Verdict tractable_or_bug(const EightVertexSig& f, std::string branch, const std::vector<Outer>& outers,
                         const std::vector<Transform>& transforms, const std::vector<TargetClass>& classes,
                         std::vector<TraceStep> trace) {
  auto cert = search(f, outers, transforms, classes);
  if (!cert) throw std::logic_error("branch " + branch + " predicted tractable but no certificate validated for " + f.str());
  return tractable(std::move(branch), std::move(*cert), std::move(trace));
}

const std::vector<TargetClass> kAll = {TargetClass::A, TargetClass::P, TargetClass::alphaA, TargetClass::L};

// ------------------------------------------------------------- branch B2

Verdict two_zero_pairs(const EightVertexSig& f) {
  EightVertexSig g = f;
  for (const auto& h : pair_orbit(f))
    if (zero(h.b) && zero(h.y) && zero(h.d) && zero(h.w)) {
      g = h;
      break;
    }
  const Cyclo8 P = ex(f.a * f.x), p = ex(g.c), q = ex(g.z), pq = p * q;
  const Cyclo8 p4 = p.pow(4), q4 = q.pow(4), P2 = P * P;
  bool inP = pq == P;
  bool inA = p4 == P2 && q4 == P2 && (pq == P || pq == -P);
  bool inAA = p4 == -P2 && q4 == -P2 && (pq == P || pq == -P);
  std::string binary = "binary (1, c, z, 1) after scaling by sqrt(ax), with c=" + p.str() + ", z=" + q.str();
  if (!(inP || inA || inAA))
    return hard("B2", {{"two zero pairs reduce #CSP2 of the binary", binary},
                       {"binary outside P, A, alphaA, L", "cz != ax and c^4, z^4 are not +-(ax)^2 with cz = +-ax"}});
  std::vector<Outer> outers{std::nullopt};
  for (auto& o : root_outers(f)) outers.push_back(o);
  BranchContext ctx{"B2", {Scalar(Cyclo8::alpha())}, {}, false};
  std::string cls = inP ? "cz = ax" : inA ? "c^4 = z^4 = (ax)^2, cz = +-ax" : "c^4 = z^4 = -(ax)^2, cz = +-ax";
  return tractable_or_bug(f, "B2", outers, candidate_transforms(ctx),
                          {TargetClass::P, TargetClass::A, TargetClass::alphaA},
                          {{"two zero pairs reduce #CSP2 of the binary", binary}, {"binary is tractable", cls}});
}

// ------------------------------------------------------------- branch B4

Cyclo8 tt(const Cyclo8& P, const Cyclo8& Q, const Cyclo8& R) { return P * Q + Cyclo8(2) * R + (Cyclo8(1) + R) * (P + Q); }
Cyclo8 dm(const Cyclo8& P, const Cyclo8& Q, const Cyclo8& R) {
  Cyclo8 s = P + Q, u = Cyclo8(1) + R;
  return R * s * s - P * Q * u * u;
}

Verdict equal_pairs(const EightVertexSig& f, int eps) {
  const Cyclo8 P = ex(f.a * f.x);
  const std::array<Cyclo8, 3> inner = {ex(f.b), ex(f.c), ex(f.d)};
  std::array<Cyclo8, 3> sq;
  for (int k = 0; k < 3; ++k) sq[k] = (eps == 1 ? Cyclo8(1) : Cyclo8(-1)) * inner[k] * inner[k] / P;
  const auto& [B, C, D] = sq;
  std::vector<TraceStep> trace{{"three equal or three opposite pairs", "epsilon = " + std::to_string(eps)}};
  if (eps == -1) trace.push_back({"twist by diag(1, alpha)", "pairs become equal with squares negated"});
  trace.push_back({"squares over ax", "(" + B.str() + ", " + C.str() + ", " + D.str() + ")"});

  const std::array<std::array<int, 3>, 3> orders = {{{0, 1, 2}, {2, 1, 0}, {0, 2, 1}}};
  for (const auto& o : orders) {
    Cyclo8 t = tt(sq[o[0]], sq[o[1]], sq[o[2]]), d = dm(sq[o[0]], sq[o[1]], sq[o[2]]);
    if (!t.is_zero() && !d.is_zero())
      return fail("B4", {"rotational gadget gives a redundant signature with full-rank compressed matrix",
                                          "middle entry " + t.str() + ", outer determinant factor " + d.str()}, trace);
  }

  auto mu = sqrt_in_field(P);
  std::vector<Outer> outers = root_outers(f);
  BranchContext ctx{"B4", {}, {}, eps == -1};

  // roles: which pair plays the outer-adjacent entry of the +-1 pattern
  const std::array<std::array<int, 3>, 3> roles = {{{0, 1, 2}, {1, 0, 2}, {2, 0, 1}}};
  for (const auto& r : roles) {
    const Cyclo8 beta = sq[r[0]], ratio = sq[r[2]] / sq[r[1]];
    if (!(beta * beta == Cyclo8(1)) || !(ratio * ratio == Cyclo8(1))) continue;
    trace.push_back({"unit square pattern", "square " + beta.str() + " with other squares in ratio " + ratio.str()});
    if (!(beta == ratio))
      return fail("B4", {"two copies give a signature with exactly one zero pair", "parities of the exponents differ"}, trace);
    const Cyclo8 cc = sq[r[1]];
    if (cc * cc == Cyclo8(1)) {
      trace.push_back({"all entries are unit multiples of sqrt(ax)", "explicit affine form"});
      if (eps == -1) ctx.gamma2.push_back(Scalar(kI));
      return tractable_or_bug(f, "B4", outers, candidate_transforms(ctx), {TargetClass::A}, trace);
    }
    // interpolation yields [t,0,1,0,1/t] with t = +-1; then the symmetrizing transform decides
    for (const Outer& o : outers) {
      const Cyclo8 m = ex(o->first);
      const Cyclo8 tw = eps == -1 ? kI : Cyclo8(1);
      Cyclo8 n0 = tw * inner[r[0]] / m, n1 = tw * inner[r[1]] / m, n2 = tw * inner[r[2]] / m;
      Cyclo8 t = n2 / (n0 * n1);
      BranchContext c2{"B4", {}, {Scalar(t)}, eps == -1};
      if (auto cert = search(f, {o}, candidate_transforms(c2), kAll)) {
        trace.push_back({"symmetric signature [t,0,1,0,1/t] is realizable", "t = " + t.str()});
        return tractable("B4", std::move(*cert), trace);
      }
    }
    return fail("B4", {"symmetrizing transform lands outside P, A, alphaA, L", "t = +-1"}, trace);
  }

  // otherwise the gadgets realize EQ2 and #CSP2(f) decides
  trace.push_back({"gadgets realize the equality signatures", "#CSP2 of the signature itself"});
  if (!mu)
    return fail("B4", {"not in A or alphaA", "ax is not a square, so entries are not unit multiples of sqrt(ax)"}, trace);
  if (auto cert = search(f, outers, {Transform{}}, {TargetClass::A, TargetClass::alphaA}))
    return tractable("B4", std::move(*cert), trace);
  return fail("B4", {"not in A or alphaA", "after scaling the outer entries to sqrt(ax)"}, trace);
}

// ------------------------------------------------------------- branch B5

Verdict equal_products(const EightVertexSig& f) {
  const Cyclo8 P = ex(f.a * f.x), by = ex(f.b * f.y);
  std::vector<TraceStep> trace{{"degenerate inner matrices", "by = cz = dw = " + by.str()}};
  if (!(by == P))
    return fail("B5", {"redundant gadget forces a contradiction", "by != ax"}, trace);
  const Cyclo8 P2 = P * P;
  BranchContext ctx{"B5", {}, {}, false};
  for (Cyclo8 t : {ex(f.b * f.c * f.d), ex(f.y * f.z * f.d), ex(f.y * f.c * f.w), ex(f.b * f.z * f.w)})
    ctx.symmetric.push_back(Scalar(t / P2));
  trace.push_back({"symmetric signature [t,0,1,0,1/t] is realizable", "t = bcd over (ax)^(3/2); outer entries (1, ax)"});
  std::vector<Outer> outers{std::pair{Scalar(1), Scalar(P)}};
  if (auto cert = search(f, outers, candidate_transforms(ctx), kAll)) return tractable("B5", std::move(*cert), trace);
  return fail("B5", {"symmetrizing transform lands outside P, A, alphaA, L", "t = bcd"}, trace);
}

// ------------------------------------------------------------- branch B6

Verdict generic(const EightVertexSig& f) {
  const Cyclo8 P = ex(f.a * f.x);
  std::vector<TraceStep> trace;
  std::string failed;
  for (const auto& g : pair_orbit(f)) {
    const Cyclo8 c = ex(g.c), cz = ex(g.c * g.z), dw = ex(g.d * g.w);
    if (cz == dw) continue;
    std::string why;
    std::array<int, 4> e{};  // exponents of b, y, d, w over c
    const std::array<Scalar, 4> us = {g.b, g.y, g.d, g.w};
    for (int k = 0; k < 4 && why.empty(); ++k) {
      auto p = as_power_of_i(ex(us[k]) / c);
      if (!p)
        why = "an inner ratio over c is not a power of i, so some binary has infinitely many distinct powers";
      else
        e[k] = *p;
    }
    if (why.empty() && !(cz == -dw)) why = "z/(dw) != -1 after normalizing c = 1";
    if (why.empty() && (e[0] + e[1] + e[2] + e[3]) % 2) why = "exponent sum of b, y, d, w is odd";
    if (why.empty() && !(P == -ex(g.b * g.y))) why = "ax != -by, two copies fall into the two-zero-pair case";
    if (!why.empty()) {
      if (failed.empty()) failed = "full-rank inner matrix at " + g.str() + ": " + why;
      continue;
    }
    trace.push_back({"generic inner matrix, powers of i", g.str()});
    // a = x = c i^{(j+k)/2 + eps}, gamma^2 = i^{(j+k)/2 + r + eps}, r = j + m, in zeta units
    const int j = e[0], kk = e[1], m = e[2];
    std::vector<Outer> outers;
    BranchContext ctx{"B6", {}, {}, false};
    for (int eps : {1, -1}) {
      int s = ((j + kk + 2 * eps) % 8 + 8) % 8;
      outers.push_back(std::pair{Scalar(c * Cyclo8::zeta(s)), Scalar(c * Cyclo8::zeta(s))});
      ctx.gamma2.push_back(Scalar(Cyclo8::zeta(((j + kk + 2 * (j + m) + 2 * eps) % 8 + 8) % 8)));
    }
    for (auto& o : root_outers(f)) outers.push_back(o);
    return tractable_or_bug(f, "B6", outers, candidate_transforms(ctx), {TargetClass::A}, trace);
  }
  return hard("B6", {{"generic inner matrix: Moebius interpolation realizes every binary", failed}});
}

// Diagonal transforms scale all inner entries alike, and A needs ratios in <i>.
bool inner_ratios_in_i(const EightVertexSig& f) {
  std::optional<Cyclo8> first;
  for (const Scalar* e : {&f.b, &f.c, &f.d, &f.w, &f.z, &f.y}) {
    if (zero(*e)) continue;
    if (!first)
      first = ex(*e);
    else if (!as_power_of_i(ex(*e) / *first))
      return false;
  }
  return true;
}

bool each_pair_has_zero(const EightVertexSig& f) {
  return (zero(f.b) || zero(f.y)) && (zero(f.c) || zero(f.z)) && (zero(f.d) || zero(f.w));
}

}  // namespace

// ------------------------------------------------------------- generators

Transform2x2 Generator::matrix() const {
  switch (kind) {
    case DiagI:
      return Transform2x2::diag(1, Scalar(kI));
    case Hadamard:
      return Transform2x2::from(1, 1, 1, -1);
    case HalfDiag:
      return Transform2x2::half_diag(gamma2);
    case Z:
      return Transform2x2::from(1, 1, Scalar(kI), Scalar(-kI));
    default:
      return Transform2x2::identity();
  }
}

std::string Generator::str() const {
  switch (kind) {
    case DiagI:
      return "DiagI";
    case Hadamard:
      return "Hadamard";
    case HalfDiag:
      return "HalfDiag(" + gamma2.str() + ")";
    case Z:
      return "Z";
    default:
      return "Identity";
  }
}

std::string transform_str(const Transform& t) {
  if (t.empty()) return "Identity";
  std::string s;
  for (const auto& g : t) s += (s.empty() ? "" : " then ") + g.str();
  return s;
}

std::string class_name(TargetClass c) {
  switch (c) {
    case TargetClass::A:
      return "A";
    case TargetClass::P:
      return "P";
    case TargetClass::L:
      return "L";
    default:
      return "alphaA";
  }
}

std::string Verdict::kind_name() const {
  return kind == Hard ? "hard" : kind == Tractable ? "tractable" : "vanishing";
}

std::string Verdict::class_name() const { return certificate ? ev::class_name(certificate->target) : ""; }

std::vector<Transform> candidate_transforms(const BranchContext& ctx) {
  std::vector<Transform> out;
  auto add = [&](Transform t) {
    std::string k = transform_str(t);
    for (const auto& o : out)
      if (transform_str(o) == k) return;
    out.push_back(std::move(t));
  };
  const Generator twist = Generator::half_diag(Scalar(kI));
  for (const Scalar& g2 : ctx.gamma2) add({Generator::half_diag(g2)});
  for (const Scalar& t : ctx.symmetric) {
    if (ctx.pre_twist) add({twist, Generator::half_diag(t), gen(Generator::Z)});
    add({Generator::half_diag(t), gen(Generator::Z)});
  }
  add(Transform{});
  add(Transform{gen(Generator::DiagI)});
  const Cyclo8 a = Cyclo8::alpha();
  for (const Cyclo8& g2 : {kI, -kI, a, a * kI, -a, -a * kI, Cyclo8(1), Cyclo8(-1)})
    if (!(g2 == Cyclo8(1))) add({Generator::half_diag(Scalar(g2))});
  add(Transform{gen(Generator::Hadamard)});
  add(Transform{gen(Generator::DiagI), gen(Generator::Hadamard)});
  add(Transform{gen(Generator::Hadamard), gen(Generator::DiagI)});
  return out;
}

bool check_certificate(const EightVertexSig& f, const Certificate& cert) {
  try {
    if (!f.is_exact()) return false;
    EightVertexSig g = f;
    if (cert.outer) {
      if (!(cert.outer->first * cert.outer->second == f.a * f.x)) return false;
      std::tie(g.a, g.x) = *cert.outer;
    }
    Signature s = apply(cert.transform, g.to_signature());
    if (cert.transformed.arity() != 4 || !cert.transformed.is_exact() || !s.proportional(cert.transformed)) return false;
    Signature ne = disequality2();
    for (const Generator& gen : cert.transform)
      if (gen.kind != Generator::HalfDiag) ne = holographic_transform(ne, inverse_transpose(gen.matrix()));
    return member(s, cert.target) && member(ne, cert.target);
  } catch (const std::exception&) {
    return false;
  }
}

Verdict six_vertex_classify(const EightVertexSig& f) {
  if (!f.is_exact()) throw NotExact("classification needs exact entries");
  EightVertexSig g = f;
  g.a = g.x = Scalar(0);
  std::vector<Outer> outers{std::nullopt};
  if (!zero(f.a) || !zero(f.x)) outers = {std::pair{Scalar(0), Scalar(0)}};
  if (auto cert = search(f, outers, {Transform{}}, {TargetClass::P, TargetClass::A}))
    return tractable("six-vertex", std::move(*cert),
                     {{"six-vertex model", "f' with a = x = 0 lies in " + class_name(cert->target)}});
  if (each_pair_has_zero(g)) {
    Verdict v;
    v.kind = Verdict::Vanishing;
    v.branch = "six-vertex";
    v.reason = "there is a zero in each pair (b,y), (c,z), (d,w)";
    v.trace = {{"six-vertex model", v.reason}};
    return v;
  }
  int inner_nonzero = !zero(g.c) + !zero(g.d) + !zero(g.w) + !zero(g.z);
  std::string why = inner_nonzero == 3 ? "exactly three nonzero inner entries, support not affine"
                    : !affine_support(g.to_signature()) ? "support not affine"
                                                        : "not in P or A and some pair has no zero";
  return hard("six-vertex", {{"six-vertex model", why}});
}

Verdict classify(const EightVertexSig& f) {
  if (!f.is_exact()) throw NotExact("classification needs exact entries");
  auto s = structural_queries(f);

  if (s.zeros == 6) {
    std::vector<Outer> outers{std::nullopt};
    auto cert = search(f, outers, {Transform{}}, {TargetClass::P});
    if (!cert) throw std::logic_error("diagonal signature not in P");
    return tractable("B0", std::move(*cert), {{"all inner entries vanish", "f is supported on 0000 and 1111"}});
  }
  if (zero(f.a * f.x)) {
    Verdict v = six_vertex_classify(f);
    v.branch = "B1";
    v.trace.insert(v.trace.begin(), {"ax = 0", "complexity equals the six-vertex model with a = x = 0"});
    return v;
  }

  // fast path: diagonal transforms only
  {
    std::vector<Outer> outers{std::nullopt};
    for (auto& o : root_outers(f)) outers.push_back(o);
    std::vector<Transform> ts{Transform{}};
    const Cyclo8 a = Cyclo8::alpha();
    for (const Cyclo8& g2 : {kI, a, -kI, Cyclo8(-1), a * kI, -a, -a * kI}) ts.push_back({Generator::half_diag(Scalar(g2))});
    if (inner_ratios_in_i(f))
      if (auto cert = search(f, outers, ts, {TargetClass::A}))
        return tractable("fast-path", std::move(*cert), {{"direct membership", "diagonal transform into A"}});
    if (auto cert = search(f, outers, {Transform{}}, {TargetClass::P}))
      return tractable("fast-path", std::move(*cert), {{"direct membership", "f lies in P"}});
    if (inner_ratios_in_i(f))
      if (auto cert = search(f, outers, {Transform{}}, {TargetClass::alphaA}))
        return tractable("fast-path", std::move(*cert), {{"direct membership", "f lies in " + class_name(cert->target)}});
  }

  if (s.zero_pairs >= 2) return two_zero_pairs(f);
  if (s.zeros >= 1) {
    std::string why = !affine_support(f.to_signature()) ? "support not affine" : "a zero entry outside the two zero-pair case";
    return hard("B3", {{"at least one zero inner entry", why}});
  }
  for (int eps : {1, -1}) {
    Scalar e(eps);
    if (f.y == e * f.b && f.z == e * f.c && f.w == e * f.d) return equal_pairs(f, eps);
  }
  if (s.by == s.cz && s.cz == s.dw) return equal_products(f);
  return generic(f);
}

// ------------------------------------------------------------- json

namespace {

nlohmann::json scalar_json(const Scalar& s) { return s.str(); }

Scalar scalar_from(const nlohmann::json& j) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  throw ParseError("expected a scalar string");
}

}  // namespace

nlohmann::json to_json(const Certificate& c) {
  nlohmann::json j;
  j["class"] = class_name(c.target);
  nlohmann::json t = nlohmann::json::array();
  for (const auto& g : c.transform) {
    nlohmann::json gj{{"gen", g.str().substr(0, g.str().find('('))}};
    if (g.kind == Generator::HalfDiag) gj["gamma2"] = scalar_json(g.gamma2);
    t.push_back(gj);
  }
  j["transform"] = t;
  nlohmann::json vals = nlohmann::json::array();
  for (const auto& v : c.transformed.values()) vals.push_back(scalar_json(v));
  j["transformed"] = vals;
  if (c.outer) j["outer"] = {scalar_json(c.outer->first), scalar_json(c.outer->second)};
  return j;
}

Certificate certificate_from_json(const nlohmann::json& j) {
  Certificate c;
  const std::string cls = j.at("class").get<std::string>();
  if (cls == "A")
    c.target = TargetClass::A;
  else if (cls == "P")
    c.target = TargetClass::P;
  else if (cls == "L")
    c.target = TargetClass::L;
  else if (cls == "alphaA")
    c.target = TargetClass::alphaA;
  else
    throw ParseError("unknown class '" + cls + "'");
  for (const auto& gj : j.at("transform")) {
    const std::string name = gj.at("gen").get<std::string>();
    Generator g;
    if (name == "Identity")
      g.kind = Generator::Identity;
    else if (name == "DiagI")
      g.kind = Generator::DiagI;
    else if (name == "Hadamard")
      g.kind = Generator::Hadamard;
    else if (name == "Z")
      g.kind = Generator::Z;
    else if (name == "HalfDiag")
      g = Generator::half_diag(scalar_from(gj.at("gamma2")));
    else
      throw ParseError("unknown generator '" + name + "'");
    c.transform.push_back(g);
  }
  std::vector<Scalar> vals;
  for (const auto& v : j.at("transformed")) vals.push_back(scalar_from(v));
  if (vals.size() != 16) throw ParseError("transformed signature needs 16 entries");
  c.transformed = Signature(4, vals);
  if (j.contains("outer")) {
    const auto& o = j.at("outer");
    if (!o.is_array() || o.size() != 2) throw ParseError("outer needs two entries");
    c.outer = std::pair{scalar_from(o[0]), scalar_from(o[1])};
  }
  return c;
}

nlohmann::json to_json(const Verdict& v) {
  nlohmann::json j;
  j["verdict"] = v.kind_name();
  j["branch"] = v.branch;
  j["class"] = v.class_name();
  j["certificate"] = v.certificate ? to_json(*v.certificate) : nlohmann::json(nullptr);
  nlohmann::json tr = nlohmann::json::array();
  for (const auto& t : v.trace) tr.push_back({{"rule", t.rule}, {"detail", t.detail}});
  j["trace"] = tr;
  if (v.kind == Verdict::Vanishing) j["reason"] = v.reason;
  return j;
}

}  // namespace ev
