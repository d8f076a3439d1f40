#pragma once

#include <array>
#include <complex>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ev/signature.hpp"

namespace ev {

struct TooManyEdges : std::length_error {
  using std::length_error::length_error;
};
struct DanglingPort : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct BadGrid : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotAffineSignature : std::domain_error {
  using std::domain_error::domain_error;
};
struct NotFourRegular : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotRepresentable : std::domain_error {
  using std::domain_error::domain_error;
};
struct SingularSystem : std::domain_error {
  using std::domain_error::domain_error;
};

// vertex is 0-based, port is 1-based (the signature variable it feeds)
struct Port {
  int vertex = 0;
  int port = 1;
  friend bool operator==(const Port&, const Port&) = default;
};
// The edge bit goes to `a`, its complement to `b`.
struct Edge {
  Port a, b;
};

struct Grid {
  std::map<std::string, Signature> signatures;
  std::vector<std::string> vertices;
  std::vector<Edge> edges;

  int add_vertex(const std::string& sig) {
    vertices.push_back(sig);
    return static_cast<int>(vertices.size()) - 1;
  }
  void connect(Port a, Port b) { edges.push_back({a, b}); }
  const Signature& sig_of(int v) const;
  // throws BadGrid or DanglingPort
  void validate() const;

  static Grid from_json(const std::string& text);
  std::string to_json() const;
};

Scalar brute_force(const Grid& grid, int max_edges = 28, int threads = 0);
Scalar affine_eval(const Grid& grid);

// Undirected multigraph; an optional rotation lists edge ids around each vertex
// (a loop appears twice).
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::optional<std::vector<std::vector<int>>> rotation;

  std::vector<int> degrees() const;
  bool connected() const;
  static Graph parse(const std::string& text);
};

// The signature of Eulerian orientations: a = x = 0, the six inner entries 1.
EightVertexSig eo_signature();
// Inner entries 1, 1, 2 with the saddle pair (d, w) doubled.
EightVertexSig saddle_signature();

Grid eo_grid(const Graph& g);
Scalar eo_count(const Graph& g);

// Rotation used for the medial graph: the given one, else a genus-zero one when found by search.
std::vector<std::vector<int>> planar_rotation(const Graph& g);
int rotation_genus(const Graph& g, const std::vector<std::vector<int>>& rot);

struct Medial {
  int vertices = 0;  // one per edge of g
  std::vector<Edge> edges;
};
// Ports 1,2,4,3 follow the cyclic order around each medial vertex, so opposite
// ports are (1,4) and (2,3) and the saddle states are 0110 and 1001.
Medial medial_graph(const Graph& g);
Grid medial_grid(const Graph& g, const EightVertexSig& f);
Scalar tutte33(const Graph& g);

// Exponents in units of pi*i/4.  Weights e^{-eps_j}, mapped w1..w8 -> c,z,d,w,b,y,a,x.
EightVertexSig ising_signature(const std::array<Rational, 5>& j);
EightVertexSig ising_signature_approx(const std::array<std::complex<double>, 5>& j);
std::array<Rational, 8> ising_energies(const std::array<Rational, 5>& j);

// g_lambda for the chain f = [[1,0,0,t],[0,i^r,eps i^r t,0],[0,eps i^r t,i^r,0],[t,0,0,1]]
EightVertexSig interpolation_chain_sig(const Rational& t, int r, int eps);
EightVertexSig g_lambda(const Scalar& lambda, int eps);

struct InterpolationResult {
  Scalar value;                 // reconstructed from the chain instances
  Scalar direct;                // brute force with g_lambda substituted
  std::vector<Scalar> nodes;    // lambda_s realised by the 4s-chains
  std::vector<Scalar> samples;  // Holant of each chain instance
  std::vector<Scalar> coeffs;   // Holant with g_lambda as a polynomial in lambda
};
// Every vertex whose signature is named `slot` is a g_lambda occurrence.
InterpolationResult interpolation_demo(const Grid& grid, const std::string& slot, const Scalar& lambda,
                                       const Rational& t, int r = 0, int eps = 1);

}  // namespace ev
