#include "ev/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "ev/classify.hpp"
#include "ev/evaluate.hpp"

namespace ev {

namespace {

using nlohmann::json;

struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::string sig, grid, graph, preset, cert, j, slot = "g", lambda = "3", t = "2";
  bool as_json = false;
  int threads = 0;
  int max_edges = 28;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

EightVertexSig preset_sig(const std::string& name) {
  if (name == "eo") return eo_signature();
  if (name == "tutte") return saddle_signature();
  if (name == "sample-tractable") return EightVertexSig::parse("1,1,1,0,0,1,1,0");
  throw InputError("unknown preset: " + name);
}

EightVertexSig signature_arg(const Options& o) {
  if (!o.sig.empty()) return EightVertexSig::parse(o.sig);
  if (!o.preset.empty()) return preset_sig(o.preset);
  throw InputError("need --sig or --preset");
}

Graph graph_arg(const Options& o) {
  if (o.graph.empty()) throw InputError("need --graph FILE");
  return Graph::parse(read_file(o.graph));
}

Grid grid_arg(const Options& o) {
  if (!o.grid.empty()) return Grid::from_json(read_file(o.grid));
  Graph g = graph_arg(o);
  if (o.preset == "tutte" && o.sig.empty()) return medial_grid(g, saddle_signature());
  Grid grid = eo_grid(g);
  if (!o.sig.empty() || !o.preset.empty()) grid.signatures["eo"] = signature_arg(o).to_signature();
  return grid;
}

Rational rational_arg(const std::string& s) {
  try {
    Rational r(s);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw ParseError("not a rational: " + s);
  }
}

std::string decimal(const Scalar& s) {
  auto z = s.to_complex();
  std::ostringstream os;
  os.precision(12);
  os << z.real();
  if (z.imag() != 0) os << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return os.str();
}

json value_json(const Scalar& v) { return {{"value", v.str()}, {"approx", decimal(v)}}; }

void emit(std::ostream& out, const Options& o, const json& j, const std::string& text) {
  if (o.as_json)
    out << j.dump(2) << "\n";
  else
    out << text;
}

// Grid used by demo-interp when no file is given: two g-slots and one fixed vertex.
Grid two_slot_grid() {
  Grid g;
  g.signatures["h"] = EightVertexSig::parse("2,1,-1,3,1,1,i,1").to_signature();
  g.add_vertex("g");
  g.add_vertex("g");
  g.add_vertex("h");
  g.connect({0, 1}, {1, 1});
  g.connect({0, 2}, {2, 1});
  g.connect({0, 3}, {1, 3});
  g.connect({0, 4}, {2, 2});
  g.connect({1, 2}, {2, 3});
  g.connect({1, 4}, {2, 4});
  return g;
}

int dispatch(const std::string& cmd, const Options& o, std::ostream& out) {
  if (cmd == "classify") {
    out << to_json(classify(signature_arg(o))).dump(2) << "\n";
    return 0;
  }
  if (cmd == "eval") {
    Grid g = grid_arg(o);
    Scalar v = brute_force(g, o.max_edges, o.threads);
    emit(out, o, value_json(v), v.str() + "\n~ " + decimal(v) + "\n");
    return 0;
  }
  if (cmd == "eval-affine") {
    if (o.grid.empty()) throw InputError("need --grid FILE");
    Scalar v = affine_eval(Grid::from_json(read_file(o.grid)));
    emit(out, o, value_json(v), v.str() + "\n~ " + decimal(v) + "\n");
    return 0;
  }
  if (cmd == "eo") {
    Scalar v = brute_force(eo_grid(graph_arg(o)), o.max_edges, o.threads);
    emit(out, o, value_json(v), v.str() + "\n");
    return 0;
  }
  if (cmd == "tutte33") {
    Graph g = graph_arg(o);
    Scalar h = brute_force(medial_grid(g, saddle_signature()), o.max_edges, o.threads);
    Scalar v = h / Scalar(2);
    json j = value_json(v);
    j["holant"] = h.str();
    emit(out, o, j, v.str() + "\n");
    return 0;
  }
  if (cmd == "ising") {
    if (o.j.empty()) throw InputError("need --j \"j1,j2,j3,j4,j5\" (units of pi*i/4)");
    std::array<Rational, 5> jj;
    std::stringstream ss(o.j);
    std::string tok;
    int k = 0;
    while (std::getline(ss, tok, ',')) {
      if (k == 5) throw InputError("--j takes five values");
      jj[k++] = rational_arg(tok);
    }
    if (k != 5) throw InputError("--j takes five values");
    EightVertexSig f = ising_signature(jj);
    Verdict v = classify(f);
    json j{{"signature", f.str()}, {"verdict", to_json(v)}};
    emit(out, o, j, "signature: " + f.str() + "\nverdict: " + v.kind_name() + "\n");
    return 0;
  }
  if (cmd == "check-cert") {
    if (o.cert.empty()) throw InputError("need --cert FILE");
    EightVertexSig f = signature_arg(o);
    json j;
    try {
      j = json::parse(read_file(o.cert));
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("certificate: ") + e.what());
    }
    if (j.contains("verdict")) {
      if (!j.contains("certificate") || j["certificate"].is_null()) throw InputError("verdict carries no certificate");
      j = j["certificate"];
    }
    Certificate c;
    try {
      c = certificate_from_json(j);
    } catch (const json::exception& e) {
      throw ParseError(std::string("certificate: ") + e.what());
    }
    bool ok = check_certificate(f, c);
    emit(out, o, json{{"valid", ok}}, ok ? "valid\n" : "invalid\n");
    return 0;
  }
  if (cmd == "demo-interp") {
    Grid g = o.grid.empty() ? two_slot_grid() : Grid::from_json(read_file(o.grid));
    auto r = interpolation_demo(g, o.slot, Scalar::parse(o.lambda), rational_arg(o.t));
    json nodes = json::array();
    for (const auto& s : r.nodes) nodes.push_back(s.str());
    json j{{"value", r.value.str()}, {"direct", r.direct.str()}, {"nodes", nodes}, {"match", r.value == r.direct}};
    emit(out, o, j,
         "interpolated: " + r.value.str() + "\ndirect: " + r.direct.str() + "\n" +
             (r.value == r.direct ? "match\n" : "MISMATCH\n"));
    return 0;
  }
  throw InputError("unknown command: " + cmd);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"eight-vertex model classifier and Holant evaluator", "ev8"};
  app.require_subcommand(1);
  Options o;

  auto sub = [&](const std::string& name, const std::string& help) {
    auto* s = app.add_subcommand(name, help);
    s->add_flag("--json", o.as_json, "machine-readable output");
    return s;
  };
  auto* classify_cmd = sub("classify", "decide hard or tractable");
  auto* eval_cmd = sub("eval", "brute-force Holant value");
  auto* affine_cmd = sub("eval-affine", "Holant of an all-affine grid in polynomial time");
  auto* eo_cmd = sub("eo", "count Eulerian orientations of a 4-regular graph");
  auto* tutte_cmd = sub("tutte33", "T(G;3,3) of a planar graph via its medial graph");
  auto* ising_cmd = sub("ising", "eight-vertex signature of an Ising point");
  auto* cert_cmd = sub("check-cert", "verify a tractability certificate");
  auto* interp_cmd = sub("demo-interp", "interpolation reconstruction on a small grid");

  for (auto* s : {classify_cmd, eval_cmd, cert_cmd}) {
    s->add_option("--sig", o.sig, "a,b,c,d,w,z,y,x");
    s->add_option("--preset", o.preset, "eo | tutte | sample-tractable")
        ->check(CLI::IsMember({"eo", "tutte", "sample-tractable"}));
  }
  for (auto* s : {eval_cmd, affine_cmd, interp_cmd}) s->add_option("--grid", o.grid, "grid JSON file");
  for (auto* s : {eval_cmd, eo_cmd, tutte_cmd}) {
    s->add_option("--graph", o.graph, "edge-list file");
    s->add_option("--threads", o.threads, "worker threads (0 = auto)");
    s->add_option("--max-edges", o.max_edges, "brute-force edge limit");
  }
  ising_cmd->add_option("--j", o.j, "five couplings in units of pi*i/4");
  cert_cmd->add_option("--cert", o.cert, "certificate or verdict JSON");
  interp_cmd->add_option("--slot", o.slot, "signature name of the interpolated slots");
  interp_cmd->add_option("--lambda", o.lambda, "target lambda");
  interp_cmd->add_option("--t", o.t, "chain parameter t");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  std::string cmd = app.get_subcommands().front()->get_name();
  try {
    return dispatch(cmd, o, out);
  } catch (const TooManyEdges& e) {
    err << "size limit: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace ev
