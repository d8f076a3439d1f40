#include <json.hpp>
#include <sstream>

#include "ev/evaluate.hpp"

namespace ev {

using nlohmann::json;

const Signature& Grid::sig_of(int v) const {
  if (v < 0 || v >= static_cast<int>(vertices.size())) throw BadGrid("vertex " + std::to_string(v) + " out of range");
  auto it = signatures.find(vertices[v]);
  if (it == signatures.end()) throw BadGrid("unknown signature '" + vertices[v] + "'");
  return it->second;
}

void Grid::validate() const {
  std::vector<std::vector<int>> used(vertices.size());
  for (size_t v = 0; v < vertices.size(); ++v) used[v].assign(sig_of(static_cast<int>(v)).arity(), 0);
  auto mark = [&](const Port& p) {
    if (p.vertex < 0 || p.vertex >= static_cast<int>(vertices.size()))
      throw BadGrid("edge endpoint on missing vertex " + std::to_string(p.vertex));
    auto& u = used[p.vertex];
    if (p.port < 1 || p.port > static_cast<int>(u.size()))
      throw BadGrid("vertex " + std::to_string(p.vertex) + " has no port " + std::to_string(p.port));
    if (u[p.port - 1]++) throw BadGrid("port " + std::to_string(p.port) + " of vertex " + std::to_string(p.vertex) +
                                       " used twice");
  };
  for (const auto& e : edges) {
    mark(e.a);
    mark(e.b);
  }
  for (size_t v = 0; v < used.size(); ++v)
    for (size_t p = 0; p < used[v].size(); ++p)
      if (!used[v][p])
        throw DanglingPort("port " + std::to_string(p + 1) + " of vertex " + std::to_string(v) + " is not connected");
}

namespace {

Scalar json_scalar(const json& j) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (j.is_number()) return Scalar::approx({j.get<double>(), 0.0});
  throw ParseError("signature value must be a string or a number");
}

Port json_port(const json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("edge endpoint must be [vertex, port]");
  return {j[0].get<int>(), j[1].get<int>()};
}

}  // namespace

Grid Grid::from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("grid json: ") + e.what());
  }
  Grid g;
  try {
    for (const auto& [name, s] : doc.at("signatures").items()) {
      if (s.contains("eightvertex")) {
        g.signatures[name] = EightVertexSig::parse(s["eightvertex"].get<std::string>()).to_signature();
        continue;
      }
      std::vector<Scalar> vals;
      for (const auto& v : s.at("values")) vals.push_back(json_scalar(v));
      g.signatures[name] = Signature(s.at("arity").get<int>(), vals);
    }
    for (const auto& v : doc.at("vertices")) g.vertices.push_back(v.is_string() ? v.get<std::string>() : v.at("sig").get<std::string>());
    for (const auto& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ParseError("edge must be [[v,p],[v,p]]");
      g.edges.push_back({json_port(e[0]), json_port(e[1])});
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("grid json: ") + e.what());
  }
  g.validate();
  return g;
}

std::string Grid::to_json() const {
  json doc;
  doc["signatures"] = json::object();
  for (const auto& [name, s] : signatures) {
    json vals = json::array();
    for (const auto& v : s.values()) vals.push_back(v.str());
    doc["signatures"][name] = {{"arity", s.arity()}, {"values", vals}};
  }
  doc["vertices"] = json::array();
  for (const auto& v : vertices) doc["vertices"].push_back({{"sig", v}});
  doc["edges"] = json::array();
  for (const auto& e : edges)
    doc["edges"].push_back(json::array({json::array({e.a.vertex, e.a.port}), json::array({e.b.vertex, e.b.port})}));
  return doc.dump(2);
}

// ---------------------------------------------------------------- graphs

std::vector<int> Graph::degrees() const {
  std::vector<int> d(n, 0);
  for (auto [u, v] : edges) {
    ++d[u];
    ++d[v];
  }
  return d;
}

bool Graph::connected() const {
  if (n == 0) return true;
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int comps = n;
  for (auto [u, v] : edges) {
    int a = find(u), b = find(v);
    if (a != b) {
      parent[a] = b;
      --comps;
    }
  }
  return comps == 1;
}

Graph Graph::parse(const std::string& text) {
  Graph g;
  std::vector<std::pair<int, std::vector<int>>> rots;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    auto fail = [&](const std::string& why) { throw ParseError("graph line " + std::to_string(lineno) + ": " + why); };
    if (first == "rot") {
      std::string vtok;
      if (!(ls >> vtok) || vtok.back() != ':') fail("expected 'rot v: e1 e2 ...'");
      int v = std::stoi(vtok.substr(0, vtok.size() - 1));
      std::vector<int> es;
      int e;
      while (ls >> e) es.push_back(e);
      rots.emplace_back(v, es);
      continue;
    }
    int u, v;
    try {
      u = std::stoi(first);
    } catch (const std::exception&) {
      fail("expected an edge 'u v'");
    }
    if (!(ls >> v)) fail("edge needs two endpoints");
    if (u < 0 || v < 0) fail("negative vertex id");
    g.edges.emplace_back(u, v);
    g.n = std::max({g.n, u + 1, v + 1});
  }
  if (!rots.empty()) {
    std::vector<std::vector<int>> rot(g.n);
    for (auto& [v, es] : rots) {
      if (v < 0 || v >= g.n) throw ParseError("rotation for unknown vertex " + std::to_string(v));
      rot[v] = es;
    }
    // each vertex lists exactly its incident edge ends
    auto d = g.degrees();
    std::vector<int> seen(g.edges.size() * 2, 0);
    for (int v = 0; v < g.n; ++v) {
      if (static_cast<int>(rot[v].size()) != d[v])
        throw ParseError("rotation at vertex " + std::to_string(v) + " must list " + std::to_string(d[v]) + " edges");
      for (int e : rot[v]) {
        if (e < 0 || e >= static_cast<int>(g.edges.size()) || (g.edges[e].first != v && g.edges[e].second != v))
          throw ParseError("rotation at vertex " + std::to_string(v) + " names non-incident edge " + std::to_string(e));
        ++seen[2 * e];
      }
    }
    for (size_t e = 0; e < g.edges.size(); ++e)
      if (seen[2 * e] != 2) throw ParseError("edge " + std::to_string(e) + " must appear twice across rotations");
    g.rotation = rot;
  }
  return g;
}

}  // namespace ev
