// wgs: weak guidance systems toolkit
//
// Subcommands: gen, lp, build, verify, query, dominate, lowerbound.
// Exit codes: 0 success/valid, 1 verification failed, 2 usage or input error,
// 3 internal error.

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "wgs/distance_index.hpp"
#include "wgs/domination.hpp"
#include "wgs/format.hpp"
#include "wgs/generators.hpp"
#include "wgs/io.hpp"
#include "wgs/lp.hpp"
#include "wgs/query.hpp"
#include "wgs/synthesize.hpp"
#include "wgs/verify.hpp"

namespace {

using namespace wgs;

struct VerifyFailure {};  // carried to main for exit code 1

class Manifest {
 public:
  explicit Manifest(const std::string& subcommand)
      : start_(std::chrono::steady_clock::now()) {
    kv_.add("subcommand", subcommand);
  }
  void param(const std::string& key, const std::string& value) { kv_.add(key, value); }
  void param(const std::string& key, int64_t value) { kv_.add(key, value); }
  void param(const std::string& key, double value) { kv_.add(key, value); }
  void input(const std::string& path) { kv_.add("input", path); }
  void output(const std::string& path) { kv_.add("output", path); }
  void result(const std::string& key, const std::string& value) { kv_.add(key, value); }

  void write(const std::string& path) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start_)
                  .count();
    kv_.add("wall_ms", static_cast<int64_t>(ms));
    io::write_file(path, kv_.str());
  }

 private:
  io::KeyValueText kv_;
  std::chrono::steady_clock::time_point start_;
};

int radius_for(const Graph& g, int r) {
  return r >= g.n() ? kUnboundedRadius : r;
}

// ---------------------------------------------------------------------------

struct GenArgs {
  std::string family;
  std::string out;
  int n = 5, d = 1, a = 2, k = 1, m = 2, leaves = 8;
  double p = 0.5;
  uint64_t seed = 1;
  std::string base;
};

void run_gen(const GenArgs& args, Manifest& man) {
  const std::string& family = args.family;
  man.param("family", family);
  man.param("seed", static_cast<int64_t>(args.seed));
  io::KeyValueText meta;
  meta.add("family", family);
  Graph g;

  if (family == "path" || family == "cycle" || family == "star" ||
      family == "petersen" || family == "random") {
    if (family == "path") g = path_graph(args.n);
    if (family == "cycle") g = cycle_graph(args.n);
    if (family == "star") g = star_graph(args.n);
    if (family == "petersen") g = petersen();
    if (family == "random") g = random_graph(args.n, args.p, args.seed);
    meta.add("n", static_cast<int64_t>(g.n()));
    if (family == "random") {
      meta.add("p", args.p);
      meta.add("seed", static_cast<int64_t>(args.seed));
    }
  } else if (family == "interval") {
    auto ivs = random_interval_set(args.n, args.seed);
    auto built = interval_guidance(ivs);
    g = built.graph;
    io::write_file(args.out + ".iv", io::write_intervals(ivs));
    man.output(args.out + ".iv");
    meta.add("n", static_cast<int64_t>(args.n));
    meta.add("seed", static_cast<int64_t>(args.seed));
  } else if (family == "universal") {
    Graph base = args.base.empty() ? Graph(args.n, {}) : io::read_graph_file(args.base);
    if (!args.base.empty()) man.input(args.base);
    auto [built, h] = universal_vertex_graph(base);
    g = built;
    io::write_file(args.out + ".or", io::write_orientation(h));
    man.output(args.out + ".or");
    meta.add("universal_vertex", static_cast<int64_t>(g.n() - 1));
  } else if (family == "star-power") {
    auto s = subdivided_star_power(args.n);
    g = s.graph;
    io::write_file(args.out + ".tree.gr", io::write_graph(s.tree));
    man.output(args.out + ".tree.gr");
    meta.add("n", static_cast<int64_t>(args.n));
    meta.add_set("X", s.x_set);
    meta.add_set("Y", s.y_set);
  } else if (family == "gak") {
    auto inst = gak_instance(args.a, args.k, args.seed);
    g = inst.graph;
    io::write_file(args.out + ".fr", io::write_fractional(inst.p_explicit));
    man.output(args.out + ".fr");
    meta.add("a", static_cast<int64_t>(args.a));
    meta.add("k", static_cast<int64_t>(args.k));
    meta.add("m", static_cast<int64_t>(inst.m));
    meta.add("seed", static_cast<int64_t>(args.seed));
    meta.add_set("L", inst.l_set);
    meta.add_set("R", inst.r_set);
    meta.add_set("hubs", inst.hubs);
    for (size_t i = 0; i < inst.parts.size(); ++i)
      meta.add_set("part" + std::to_string(i), inst.parts[i]);
  } else if (family == "split") {
    auto s = projective_split_graph(args.n);
    g = s.graph;
    meta.add("order", static_cast<int64_t>(args.n));
    meta.add_set("A", s.points);
    meta.add_set("B", s.lines);
  } else if (family == "halfgraph-hard") {
    auto inst = halfgraph_hard_instance(args.d, args.a);
    g = inst.graph;
    meta.add("d", static_cast<int64_t>(args.d));
    meta.add("a", static_cast<int64_t>(args.a));
    meta.add_set("labels", inst.label);
  } else if (family == "tree-model") {
    TreeModel model = random_tree_model(args.m, args.d, args.leaves, args.seed);
    g = graph_from_tree_model(model);
    io::write_file(args.out + ".tm", io::write_tree_model(model));
    man.output(args.out + ".tm");
    meta.add("m", static_cast<int64_t>(args.m));
    meta.add("d", static_cast<int64_t>(args.d));
    meta.add("leaves", static_cast<int64_t>(args.leaves));
    meta.add("seed", static_cast<int64_t>(args.seed));
  } else {
    throw CLI::ValidationError("gen", "unknown family: " + family);
  }

  io::write_file(args.out + ".gr", io::write_graph(g));
  io::write_file(args.out + ".meta", meta.str());
  man.output(args.out + ".gr");
  man.output(args.out + ".meta");
  man.result("n", std::to_string(g.n()));
  man.result("m", std::to_string(g.m()));
  std::cout << "wrote " << args.out << ".gr (n=" << g.n() << ", m=" << g.m() << ")\n";
}

// ---------------------------------------------------------------------------

struct LpArgs {
  std::string graph, out, dump;
  int r = 2;
  bool exact = false;
  int threads = 1;
};

void run_lp(const LpArgs& args, Manifest& man) {
  Graph g = io::read_graph_file(args.graph);
  man.input(args.graph);
  man.param("r", static_cast<int64_t>(args.r));
  auto idx = build_index(g, radius_for(g, args.r), args.threads);
  auto prob = build_guidance_lp(g, idx, args.r);
  if (!args.dump.empty()) {
    io::write_file(args.dump, dump_lp(prob));
    man.output(args.dump);
  }
  auto sol = solve(prob);
  std::cout << "c = " << format_number(sol.c) << "\n";
  man.result("c", format_number(sol.c));
  man.result("iterations", std::to_string(sol.iterations));
  if (args.exact) {
    auto ex = solve_exact(prob);
    std::cout << "c_exact = " << ex.c.to_string() << "\n";
    man.result("c_exact", ex.c.to_string());
  }
  if (!args.out.empty()) {
    io::write_file(args.out + ".fr", io::write_fractional(sol.p));
    io::write_file(args.out + ".y", io::write_dual(sol.dual_y));
    man.output(args.out + ".fr");
    man.output(args.out + ".y");
  }
}

// ---------------------------------------------------------------------------

struct BuildArgs {
  std::string method;
  std::string graph, fractional, guidance, intervals, model, partition, ha, hb, out;
  int r = 2, k = 2;
  double c = -1;
  uint64_t seed = 1;
  std::string strategy = "epsilon-net";
  int threads = 1;
};

CutPartition read_partition_file(const std::string& path, const Graph& g,
                                 std::vector<std::pair<int, std::string>>* hierarchy) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  CutPartition cut;
  int line_no = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ss(line);
    std::string tag;
    if (!(ss >> tag)) continue;
    if (tag == "c") continue;
    if (tag == "A" || tag == "B") {
      int v;
      if (!(ss >> v) || v < 0 || v >= g.n())
        throw io::ParseError("partition line " + std::to_string(line_no));
      (tag == "A" ? cut.a : cut.b).push_back(v);
    } else if (tag == "p" && hierarchy) {
      int v;
      std::string bits;
      if (!(ss >> v >> bits) || v < 0 || v >= g.n())
        throw io::ParseError("partition line " + std::to_string(line_no));
      hierarchy->emplace_back(v, bits);
    } else {
      throw io::ParseError("partition line " + std::to_string(line_no) +
                           ": expected 'A <v>', 'B <v>' or 'p <v> <bits>'");
    }
  }
  return cut;
}

// Recursive cut composition over a user-supplied partition hierarchy: vertex
// bitstrings name the nested cuts; leaf blocks must be valid with the empty
// orientation (supplying deep enough partitions is the caller's job).
PartialOrientation compose_hierarchy(const Graph& g,
                                     const std::vector<std::pair<int, std::string>>& bits,
                                     int r) {
  std::vector<std::string> code(g.n());
  for (const auto& [v, s] : bits) code[v] = s;

  std::function<PartialOrientation(const std::vector<int>&, size_t)> compose =
      [&](const std::vector<int>& verts, size_t level) -> PartialOrientation {
    std::vector<int> ids;
    Graph sub = g.induced(verts, &ids);
    CutPartition cut;
    bool splits = true;
    for (int v : verts) {
      if (level >= code[v].size()) {
        splits = false;
        break;
      }
      (code[v][level] == '0' ? cut.a : cut.b).push_back(v);
    }
    if (!splits || cut.a.empty() || cut.b.empty()) {
      auto idx = build_index(sub, radius_for(sub, r));
      auto rep = verify_weak(sub, idx, PartialOrientation(sub.n()), r);
      if (!rep.valid)
        throw std::invalid_argument(
            "cut-compose hierarchy: a leaf block needs its own guidance; supply a "
            "deeper partition");
      return PartialOrientation(g.n());
    }
    auto ha = compose(cut.a, level + 1);
    auto hb = compose(cut.b, level + 1);
    std::vector<int> rank(g.n(), -1);
    for (size_t i = 0; i < ids.size(); ++i) rank[ids[i]] = static_cast<int>(i);
    auto to_local = [&](const PartialOrientation& global) {
      std::vector<std::pair<int, int>> arcs;
      for (int u = 0; u < global.n; ++u) {
        for (int v : global.out[u]) {
          if (rank[u] >= 0 && rank[v] >= 0) arcs.emplace_back(rank[u], rank[v]);
        }
      }
      return PartialOrientation::from_edges(sub, arcs);
    };
    CutPartition local_cut;
    for (int v : cut.a) local_cut.a.push_back(rank[v]);
    for (int v : cut.b) local_cut.b.push_back(rank[v]);
    auto idx = build_index(sub, kUnboundedRadius);
    auto local = cut_compose(sub, idx, local_cut, to_local(ha), to_local(hb), r);
    PartialOrientation global(g.n());
    for (int u = 0; u < local.n; ++u) {
      for (int v : local.out[u]) global.out[ids[u]].push_back(ids[v]);
    }
    for (auto& row : global.out) std::sort(row.begin(), row.end());
    return global;
  };

  std::vector<int> all_verts;
  for (int v = 0; v < g.n(); ++v) all_verts.push_back(v);
  return compose(all_verts, 0);
}

void run_build(const BuildArgs& args, Manifest& man) {
  man.param("method", args.method);
  man.param("r", static_cast<int64_t>(args.r));
  Graph g;
  PartialOrientation h;
  double bound = -1;
  std::string bound_name;

  if (args.method == "round" || args.method == "vc-round") {
    g = io::read_graph_file(args.graph);
    man.input(args.graph);
    auto p = io::read_fractional_file(args.fractional, g);
    man.input(args.fractional);
    auto idx = build_index(g, radius_for(g, args.r), args.threads);
    if (args.method == "round") {
      double c = args.c > 0 ? args.c : max_outdegree(p);
      RoundingTrace trace;
      h = round_fractional(g, idx, p, args.r, std::max(c, 0.5), &trace);
      bound = std::ceil(4.0 * trace.c * std::log(g.n()));
      bound_name = "ceil(4 c ln n)";
    } else {
      HittingStrategy strat = args.strategy == "greedy" ? HittingStrategy::greedy
                                                        : HittingStrategy::epsilon_net;
      man.param("seed", static_cast<int64_t>(args.seed));
      h = vc_round(g, idx, p, args.r, args.seed, strat);
      int vc = vc_dimension(g, idx, args.r);
      double c = std::max(1.0, max_outdegree(p));
      bound = vc * c * std::max(1.0, std::log(c));
      bound_name = "VC(G,r) * c log c (asymptotic reference, no constant)";
    }
    auto rep = verify_weak(g, idx, h, args.r);
    if (!rep.valid) throw std::logic_error("build: produced system failed verification");
  } else if (args.method == "interval") {
    auto ivs = io::read_intervals_file(args.intervals);
    man.input(args.intervals);
    auto built = interval_guidance(ivs);
    g = built.graph;
    h = built.h;
    bound = 2;
    bound_name = "interval construction bound";
    io::write_file(args.out + ".gr", io::write_graph(g));
    man.output(args.out + ".gr");
    auto idx = build_index(g, radius_for(g, args.r));
    if (!verify_weak(g, idx, h, args.r).valid)
      throw std::logic_error("build: produced system failed verification");
  } else if (args.method == "power-lift") {
    Graph base = io::read_graph_file(args.graph);
    man.input(args.graph);
    auto hk = io::read_orientation_file(args.guidance, base);
    man.input(args.guidance);
    man.param("k", static_cast<int64_t>(args.k));
    auto idx = build_index(base, radius_for(base, args.k * args.r), args.threads);
    auto lift = power_lift(base, idx, hk, args.k, args.r);
    g = lift.power;
    h = lift.f;
    bound = lift.outdegree_bound;
    bound_name = "2 c^k";
    io::write_file(args.out + ".gr", io::write_graph(g));
    man.output(args.out + ".gr");
    auto idx2 = build_index(g, radius_for(g, args.r));
    if (!verify_weak(g, idx2, h, args.r).valid)
      throw std::logic_error("build: produced system failed verification");
  } else if (args.method == "cut-compose") {
    g = io::read_graph_file(args.graph);
    man.input(args.graph);
    std::vector<std::pair<int, std::string>> hierarchy;
    CutPartition cut = read_partition_file(args.partition, g, &hierarchy);
    man.input(args.partition);
    if (!hierarchy.empty()) {
      h = compose_hierarchy(g, hierarchy, args.r);
      bound_name = "recursive cut composition";
    } else {
      PartialOrientation ha(g.n()), hb(g.n());
      if (!args.ha.empty()) {
        ha = io::read_orientation_file(args.ha, g);
        man.input(args.ha);
      }
      if (!args.hb.empty()) {
        hb = io::read_orientation_file(args.hb, g);
        man.input(args.hb);
      }
      auto idx = build_index(g, kUnboundedRadius);
      h = cut_compose(g, idx, cut, ha, hb, args.r);
      int classes = static_cast<int>(equivalence_classes(g, cut).size());
      bound = std::max(max_outdegree(ha), max_outdegree(hb)) + classes;
      bound_name = "side outdegree + class count";
    }
    auto idx = build_index(g, radius_for(g, args.r));
    auto rep = verify_weak(g, idx, h, args.r);
    if (!rep.valid) throw std::logic_error("build: produced system failed verification");
  } else if (args.method == "tree-model") {
    TreeModel model = io::read_tree_model_file(args.model);
    man.input(args.model);
    auto built = tree_model_guidance(model, args.r);
    g = built.graph;
    h = built.h;
    bound = built.outdegree_bound;
    bound_name = "r^3 m^r (d+1)^(r^2) d";
    io::write_file(args.out + ".gr", io::write_graph(g));
    man.output(args.out + ".gr");
    auto idx = build_index(g, radius_for(g, args.r));
    if (!verify_weak(g, idx, h, args.r).valid)
      throw std::logic_error("build: produced system failed verification");
  } else if (args.method == "complete") {
    g = io::read_graph_file(args.graph);
    man.input(args.graph);
    auto weak = io::read_orientation_file(args.guidance, g);
    man.input(args.guidance);
    auto idx = build_index(g, radius_for(g, args.r), args.threads);
    h = complete_to_guidance(g, idx, weak, args.r);
    bound = max_outdegree(weak) + degeneracy(g).t;
    bound_name = "weak outdegree + degeneracy";
    if (!verify_strict(g, idx, h, args.r, StrictMode::full).valid)
      throw std::logic_error("build: produced system failed verification");
  } else {
    throw CLI::ValidationError("build", "unknown method: " + args.method);
  }

  io::write_file(args.out + ".or", io::write_orientation(h));
  man.output(args.out + ".or");
  std::cout << "outdegree = " << max_outdegree(h) << "\n";
  if (bound >= 0)
    std::cout << "bound = " << format_number(bound) << "  [" << bound_name << "]\n";
  man.result("outdegree", std::to_string(max_outdegree(h)));
  if (bound >= 0) man.result("bound", format_number(bound));
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string graph, guidance, fractional;
  std::string mode = "weak";
  int r = 2;
  double tol = 0;
  int threads = 1;
};

void run_verify(const VerifyArgs& args, Manifest& man) {
  Graph g = io::read_graph_file(args.graph);
  man.input(args.graph);
  man.param("r", static_cast<int64_t>(args.r));
  man.param("mode", args.mode);
  auto idx = build_index(g, radius_for(g, args.r), args.threads);
  VerificationReport rep;
  if (!args.fractional.empty()) {
    auto p = io::read_fractional_file(args.fractional, g);
    man.input(args.fractional);
    rep = verify_fractional(g, idx, p, args.r, args.tol);
  } else if (!args.guidance.empty()) {
    auto h = io::read_orientation_file(args.guidance, g);
    man.input(args.guidance);
    if (args.mode == "weak") {
      rep = verify_weak(g, idx, h, args.r);
    } else if (args.mode == "plus") {
      rep = verify_strict(g, idx, h, args.r, StrictMode::plus);
    } else if (args.mode == "full") {
      rep = verify_strict(g, idx, h, args.r, StrictMode::full);
    } else {
      throw CLI::ValidationError("verify", "unknown mode: " + args.mode);
    }
  } else {
    throw CLI::ValidationError("verify", "need --guidance or --fractional");
  }
  std::cout << serialize_report(rep);
  man.result("valid", rep.valid ? "true" : "false");
  man.result("pairs_checked", std::to_string(rep.pairs_checked));
  if (!rep.valid) throw VerifyFailure{};
}

// ---------------------------------------------------------------------------

struct QueryArgs {
  std::string graph, guidance, fractional, pairs;
  int r = 2;
  double confidence = 10;
  uint64_t seed = 1;
};

void run_query(const QueryArgs& args, Manifest& man) {
  Graph g = io::read_graph_file(args.graph);
  man.input(args.graph);
  man.param("r", static_cast<int64_t>(args.r));
  auto pairs = io::read_pairs_file(args.pairs);
  man.input(args.pairs);
  Rng rng(args.seed);
  std::optional<PartialOrientation> h;
  std::optional<FractionalOrientation> p;
  if (!args.guidance.empty()) {
    h = io::read_orientation_file(args.guidance, g);
    man.input(args.guidance);
  } else if (!args.fractional.empty()) {
    p = io::read_fractional_file(args.fractional, g);
    man.input(args.fractional);
    man.param("confidence", args.confidence);
    man.param("seed", static_cast<int64_t>(args.seed));
  } else {
    throw CLI::ValidationError("query", "need --guidance or --fractional");
  }
  int answered = 0;
  for (auto [u, v] : pairs) {
    if (u < 0 || u >= g.n() || v < 0 || v >= g.n())
      throw io::ParseError("query: vertex out of range");
    QueryAnswer ans = h ? query_distance(g, *h, u, v, args.r)
                        : query_probabilistic(g, *p, u, v, args.r, args.confidence, rng);
    std::cout << u << " " << v << " ";
    if (ans.within_r) {
      std::cout << ans.distance;
      for (int x : ans.path) std::cout << " " << x;
      ++answered;
    } else {
      std::cout << ">" << args.r;
    }
    std::cout << "\n";
  }
  man.result("pairs", std::to_string(pairs.size()));
  man.result("answered", std::to_string(answered));
}

// ---------------------------------------------------------------------------

struct DominateArgs {
  std::string graph, guidance;
  int r = 1;
  bool weak = false;
  int c = 2, k = 1;
};

void run_dominate(const DominateArgs& args, Manifest& man) {
  Graph g = io::read_graph_file(args.graph);
  man.input(args.graph);
  auto h = io::read_orientation_file(args.guidance, g);
  man.input(args.guidance);
  man.param("r", static_cast<int64_t>(args.r));
  auto idx = build_index(g, radius_for(g, 2 * args.r));
  DominationResult res;
  if (args.weak) {
    man.param("c", static_cast<int64_t>(args.c));
    man.param("k", static_cast<int64_t>(args.k));
    res = dominate_weak(g, idx, h, args.r, args.c, args.k);
  } else {
    res = dominate_via_guidance(g, idx, h, args.r);
  }
  std::cout << "D";
  for (int v : res.d_set) std::cout << " " << v;
  std::cout << "\nA";
  for (int v : res.a_set) std::cout << " " << v;
  std::cout << "\nratio " << format_number(res.ratio) << "\n";
  if (res.bound_b) {
    std::cout << "bound_b " << format_number(*res.bound_b) << "\n";
    man.result("bound_satisfied", *res.bound_satisfied ? "true" : "false");
  }
  man.result("D_size", std::to_string(res.d_set.size()));
  man.result("A_size", std::to_string(res.a_set.size()));
  man.result("ratio", format_number(res.ratio));
}

// ---------------------------------------------------------------------------

struct LowerboundArgs {
  std::string graph, certificate, zset;
  int r = 2;
  bool girth = false;
  bool exact = false;
};

void run_lowerbound(const LowerboundArgs& args, Manifest& man) {
  Graph g = io::read_graph_file(args.graph);
  man.input(args.graph);
  man.param("r", static_cast<int64_t>(args.r));
  auto idx = build_index(g, radius_for(g, args.r));
  if (args.girth) {
    std::vector<int> z;
    if (args.zset.empty()) {
      for (int v = 0; v < g.n(); ++v) z.push_back(v);
    } else {
      std::ifstream in(args.zset);
      if (!in) throw std::runtime_error("cannot open: " + args.zset);
      int v;
      while (in >> v) z.push_back(v);
      man.input(args.zset);
    }
    auto cert = girth5_certificate(g, idx, z);
    std::cout << "value " << format_number(cert.value.to_double()) << "\n";
    if (args.exact) std::cout << "value_exact " << cert.value.to_string() << "\n";
    man.result("value", cert.value.to_string());
    return;
  }
  if (args.certificate.empty())
    throw CLI::ValidationError("lowerbound", "need --certificate or --girth");
  auto y = io::read_dual_file(args.certificate);
  man.input(args.certificate);
  auto cert = evaluate_dual(g, idx, args.r, y);
  std::cout << "value " << format_number(cert.value) << "\n";
  man.result("value", format_number(cert.value));
  if (args.exact) {
    auto ye = io::read_dual_exact_file(args.certificate);
    auto exact = evaluate_dual_exact(g, idx, args.r, ye);
    std::cout << "value_exact " << exact.value.to_string() << "\n";
    man.result("value_exact", exact.value.to_string());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weak guidance systems toolkit"};
  app.require_subcommand(1);
  std::string manifest_path;
  app.add_option("--manifest", manifest_path, "manifest output path");

  GenArgs gen;
  auto* cgen = app.add_subcommand("gen", "generate instance families");
  cgen->add_option("family", gen.family,
                   "path|cycle|star|petersen|random|interval|universal|star-power|gak|"
                   "split|halfgraph-hard|tree-model")
      ->required();
  cgen->add_option("--n", gen.n, "size parameter");
  cgen->add_option("--p", gen.p, "edge probability (random)");
  cgen->add_option("--d", gen.d, "depth (halfgraph-hard, tree-model)");
  cgen->add_option("--a", gen.a, "width (gak, halfgraph-hard)");
  cgen->add_option("--k", gen.k, "k (gak)");
  cgen->add_option("--m", gen.m, "labels (tree-model)");
  cgen->add_option("--leaves", gen.leaves, "leaf count (tree-model)");
  cgen->add_option("--seed", gen.seed, "rng seed");
  cgen->add_option("--base", gen.base, "base graph file (universal)");
  cgen->add_option("--out", gen.out, "output base path")->required();

  LpArgs lp;
  auto* clp = app.add_subcommand("lp", "solve the fractional guidance LP");
  clp->add_option("--graph", lp.graph)->required();
  clp->add_option("--r", lp.r);
  clp->add_flag("--exact", lp.exact, "also re-solve in exact rationals");
  clp->add_option("--dump", lp.dump, "write the LP in text form");
  clp->add_option("--out", lp.out, "output base path (.fr and .y)");
  clp->add_option("--threads", lp.threads);

  BuildArgs build;
  auto* cbuild = app.add_subcommand("build", "construct guidance systems");
  cbuild->add_option("--method", build.method,
                     "round|vc-round|interval|power-lift|cut-compose|tree-model|complete")
      ->required();
  cbuild->add_option("--graph", build.graph);
  cbuild->add_option("--fractional", build.fractional);
  cbuild->add_option("--guidance", build.guidance);
  cbuild->add_option("--intervals", build.intervals);
  cbuild->add_option("--model", build.model);
  cbuild->add_option("--partition", build.partition);
  cbuild->add_option("--ha", build.ha);
  cbuild->add_option("--hb", build.hb);
  cbuild->add_option("--r", build.r);
  cbuild->add_option("--k", build.k);
  cbuild->add_option("--c", build.c, "outdegree bound for rounding");
  cbuild->add_option("--seed", build.seed);
  cbuild->add_option("--strategy", build.strategy, "greedy|epsilon-net");
  cbuild->add_option("--threads", build.threads);
  cbuild->add_option("--out", build.out, "output base path")->required();

  VerifyArgs verify;
  auto* cverify = app.add_subcommand("verify", "check guidance systems");
  cverify->add_option("--graph", verify.graph)->required();
  cverify->add_option("--guidance", verify.guidance);
  cverify->add_option("--fractional", verify.fractional);
  cverify->add_option("--mode", verify.mode, "weak|plus|full");
  cverify->add_option("--r", verify.r);
  cverify->add_option("--tol", verify.tol);
  cverify->add_option("--threads", verify.threads);

  QueryArgs query;
  auto* cquery = app.add_subcommand("query", "answer distance queries");
  cquery->add_option("--graph", query.graph)->required();
  cquery->add_option("--guidance", query.guidance);
  cquery->add_option("--fractional", query.fractional);
  cquery->add_option("--r", query.r);
  cquery->add_option("--pairs", query.pairs)->required();
  cquery->add_option("--confidence", query.confidence);
  cquery->add_option("--seed", query.seed);

  DominateArgs dominate;
  auto* cdom = app.add_subcommand("dominate", "approximate distance domination");
  cdom->add_option("--graph", dominate.graph)->required();
  cdom->add_option("--guidance", dominate.guidance)->required();
  cdom->add_option("--r", dominate.r);
  cdom->add_flag("--weak", dominate.weak, "use the weak-system algorithm");
  cdom->add_option("--c", dominate.c);
  cdom->add_option("--k", dominate.k);

  LowerboundArgs lower;
  auto* clow = app.add_subcommand("lowerbound", "evaluate dual certificates");
  clow->add_option("--graph", lower.graph)->required();
  clow->add_option("--certificate", lower.certificate);
  clow->add_option("--zset", lower.zset, "vertex set file for --girth");
  clow->add_flag("--girth", lower.girth, "girth-5 certificate from Z");
  clow->add_flag("--exact", lower.exact);
  clow->add_option("--r", lower.r);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::string sub = app.get_subcommands().front()->get_name();
  Manifest man(sub);
  std::string out_base;
  if (cgen->parsed()) out_base = gen.out;
  if (cbuild->parsed()) out_base = build.out;
  if (clp->parsed()) out_base = lp.out;
  if (manifest_path.empty())
    manifest_path = out_base.empty() ? sub + ".manifest" : out_base + ".manifest";

  try {
    if (cgen->parsed()) run_gen(gen, man);
    if (clp->parsed()) run_lp(lp, man);
    if (cbuild->parsed()) run_build(build, man);
    if (cverify->parsed()) run_verify(verify, man);
    if (cquery->parsed()) run_query(query, man);
    if (cdom->parsed()) run_dominate(dominate, man);
    if (clow->parsed()) run_lowerbound(lower, man);
    man.write(manifest_path);
  } catch (const VerifyFailure&) {
    man.result("valid", "false");
    man.write(manifest_path);
    return 1;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const io::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return std::string(e.what()).starts_with("cannot open") ? 2 : 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
