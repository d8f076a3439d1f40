#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ev/classes.hpp"
#include "ev/signature.hpp"

namespace ev {

// One factor of a holographic transform.  HalfDiag carries gamma^2 for diag(1, gamma).
struct Generator {
  enum Kind { Identity, DiagI, Hadamard, HalfDiag, Z };
  Kind kind = Identity;
  Scalar gamma2{1};

  static Generator half_diag(const Scalar& g2) { return {HalfDiag, g2}; }
  Transform2x2 matrix() const;
  std::string str() const;
};

// Applied to f left to right: the last generator is the outermost factor of T.
using Transform = std::vector<Generator>;

std::string transform_str(const Transform& t);

enum class TargetClass { A, P, L, alphaA };
std::string class_name(TargetClass c);

struct Certificate {
  Transform transform;
  TargetClass target = TargetClass::A;
  Signature transformed;
  // (a', x') used in place of (a, x); valid because the Holant only depends on ax.
  std::optional<std::pair<Scalar, Scalar>> outer;
};

struct TraceStep {
  std::string rule;
  std::string detail;
};

struct Verdict {
  enum Kind { Hard, Tractable, Vanishing };
  Kind kind = Hard;
  std::string branch;
  std::vector<TraceStep> trace;
  std::optional<Certificate> certificate;
  std::string reason;  // Vanishing only

  bool hard() const { return kind == Hard; }
  std::string kind_name() const;
  std::string class_name() const;
};

Verdict classify(const EightVertexSig& f);
Verdict six_vertex_classify(const EightVertexSig& f);

// Re-derives everything from f; never throws.
bool check_certificate(const EightVertexSig& f, const Certificate& cert);

struct BranchContext {
  std::string branch;
  std::vector<Scalar> gamma2;     // extra HalfDiag parameters
  std::vector<Scalar> symmetric;  // parameters t for Z after HalfDiag(t)
  bool pre_twist = false;         // HalfDiag(i) before the symmetric route
};
std::vector<Transform> candidate_transforms(const BranchContext& ctx);

nlohmann::json to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Verdict& v);

}  // namespace ev
