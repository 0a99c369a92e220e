#include "wgs/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "wgs/format.hpp"

namespace wgs::io {

namespace {

struct LineReader {
  explicit LineReader(std::istream& in_) : in(in_) {}
  std::istream& in;
  int line_no = 0;
  std::string line;

  // next non-empty, non-comment line split into tokens
  bool next(std::vector<std::string>& tokens) {
    while (std::getline(in, line)) {
      ++line_no;
      tokens.clear();
      std::istringstream ss(line);
      std::string tok;
      while (ss >> tok) tokens.push_back(tok);
      if (tokens.empty() || tokens[0] == "c") continue;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("line " + std::to_string(line_no) + ": " + msg);
  }
};

int parse_int(const LineReader& r, const std::string& tok) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) r.fail("bad integer: " + tok);
  return value;
}

double parse_double(const LineReader& r, const std::string& tok) {
  try {
    size_t used = 0;
    double value = std::stod(tok, &used);
    if (used != tok.size()) r.fail("bad number: " + tok);
    return value;
  } catch (const std::exception&) {
    r.fail("bad number: " + tok);
  }
}

}  // namespace

Graph read_graph(std::istream& in) {
  LineReader r(in);
  std::vector<std::string> t;
  if (!r.next(t) || t[0] != "p" || t.size() != 3) {
    throw ParseError("graph: expected header 'p <n> <m>'");
  }
  int n = parse_int(r, t[1]);
  int m = parse_int(r, t[2]);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(m);
  while (r.next(t)) {
    if (t[0] != "e" || t.size() != 3) r.fail("graph: expected 'e <u> <v>'");
    edges.emplace_back(parse_int(r, t[1]), parse_int(r, t[2]));
  }
  if (static_cast<int>(edges.size()) != m)
    throw ParseError("graph: header edge count does not match the edge lines");
  try {
    return Graph(n, edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("graph: ") + e.what());
  }
}

std::string write_graph(const Graph& g) {
  std::string out = "p " + std::to_string(g.n()) + " " + std::to_string(g.m()) + "\n";
  for (auto [u, v] : g.edges())
    out += "e " + std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

PartialOrientation read_orientation(std::istream& in, const Graph& g) {
  LineReader r(in);
  std::vector<std::string> t;
  std::vector<std::pair<int, int>> arcs;
  while (r.next(t)) {
    if (t[0] != "a" || t.size() != 3) r.fail("orientation: expected 'a <u> <v>'");
    arcs.emplace_back(parse_int(r, t[1]), parse_int(r, t[2]));
  }
  try {
    return PartialOrientation::from_edges(g, arcs);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("orientation: ") + e.what());
  }
}

std::string write_orientation(const PartialOrientation& h) {
  std::string out;
  for (auto [u, v] : h.arcs())
    out += "a " + std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

FractionalOrientation read_fractional(std::istream& in, const Graph& g) {
  LineReader r(in);
  std::vector<std::string> t;
  std::vector<std::tuple<int, int, double>> entries;
  while (r.next(t)) {
    if (t[0] != "w" || t.size() != 4) r.fail("fractional: expected 'w <u> <v> <weight>'");
    entries.emplace_back(parse_int(r, t[1]), parse_int(r, t[2]), parse_double(r, t[3]));
  }
  try {
    return FractionalOrientation::from_entries(g, entries);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("fractional: ") + e.what());
  }
}

std::string write_fractional(const FractionalOrientation& p) {
  std::string out;
  for (int u = 0; u < p.n; ++u) {
    for (const auto& [v, w] : p.w[u]) {
      if (w == 0) continue;
      out += "w " + std::to_string(u) + " " + std::to_string(v) + " " + format_number(w) +
             "\n";
    }
  }
  return out;
}

std::vector<std::pair<int, int>> read_pairs(std::istream& in) {
  LineReader r(in);
  std::vector<std::string> t;
  std::vector<std::pair<int, int>> pairs;
  while (r.next(t)) {
    if (t.size() != 2) r.fail("pairs: expected '<u> <v>'");
    pairs.emplace_back(parse_int(r, t[0]), parse_int(r, t[1]));
  }
  return pairs;
}

std::string write_pairs(const std::vector<std::pair<int, int>>& pairs) {
  std::string out;
  for (auto [u, v] : pairs) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

std::vector<DualEntry> read_dual(std::istream& in) {
  LineReader r(in);
  std::vector<std::string> t;
  std::vector<DualEntry> y;
  while (r.next(t)) {
    if (t[0] != "y" || t.size() != 4) r.fail("dual: expected 'y <u> <v> <weight>'");
    y.push_back({parse_int(r, t[1]), parse_int(r, t[2]), parse_double(r, t[3])});
  }
  return y;
}

std::vector<DualEntryExact> read_dual_exact(std::istream& in) {
  LineReader r(in);
  std::vector<std::string> t;
  std::vector<DualEntryExact> y;
  while (r.next(t)) {
    if (t[0] != "y" || t.size() != 4) r.fail("dual: expected 'y <u> <v> <weight>'");
    try {
      y.push_back({parse_int(r, t[1]), parse_int(r, t[2]), Rational::from_decimal(t[3])});
    } catch (const std::invalid_argument& e) {
      r.fail(e.what());
    }
  }
  return y;
}

std::string write_dual(const std::vector<DualEntry>& y) {
  std::string out;
  for (const auto& e : y) {
    out += "y " + std::to_string(e.u) + " " + std::to_string(e.v) + " " +
           format_number(e.w) + "\n";
  }
  return out;
}

TreeModel read_tree_model(std::istream& in) {
  LineReader r(in);
  std::vector<std::string> t;
  if (!r.next(t) || t[0] != "tm" || t.size() != 4)
    throw ParseError("tree model: expected header 'tm <m> <d> <leaves>'");
  TreeModel model;
  model.m = parse_int(r, t[1]);
  model.depth = parse_int(r, t[2]);
  model.num_leaves = parse_int(r, t[3]);
  model.signature.resize(model.depth + 1);
  std::map<int, int> parents;
  std::map<int, int> labels;
  int max_node = model.num_leaves - 1;
  while (r.next(t)) {
    if (t[0] == "l" && t.size() == 3) {
      labels[parse_int(r, t[1])] = parse_int(r, t[2]);
    } else if (t[0] == "t" && t.size() == 3) {
      int child = parse_int(r, t[1]);
      int parent = parse_int(r, t[2]);
      if (parents.count(child)) r.fail("tree model: duplicate parent for node");
      parents[child] = parent;
      max_node = std::max({max_node, child, parent});
    } else if (t[0] == "s" && t.size() == 4) {
      int level = parse_int(r, t[1]);
      if (level < 1 || level > model.depth) r.fail("tree model: signature level range");
      model.add_signature(level, parse_int(r, t[2]), parse_int(r, t[3]));
    } else {
      r.fail("tree model: unexpected line");
    }
  }
  model.parent.assign(max_node + 1, -1);
  for (auto [child, parent] : parents) {
    if (child < 0 || child > max_node || parent < 0) throw ParseError("tree model: bad node id");
    model.parent[child] = parent;
  }
  model.leaf_label.assign(model.num_leaves, 0);
  for (auto [leaf, label] : labels) {
    if (leaf < 0 || leaf >= model.num_leaves)
      throw ParseError("tree model: label on a non-leaf node");
    model.leaf_label[leaf] = label;
  }
  try {
    model.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("tree model: ") + e.what());
  }
  return model;
}

std::string write_tree_model(const TreeModel& model) {
  std::string out = "tm " + std::to_string(model.m) + " " + std::to_string(model.depth) +
                    " " + std::to_string(model.num_leaves) + "\n";
  for (int v = 0; v < model.num_leaves; ++v)
    out += "l " + std::to_string(v) + " " + std::to_string(model.leaf_label[v]) + "\n";
  for (int v = 0; v < model.num_nodes(); ++v) {
    if (model.parent[v] >= 0)
      out += "t " + std::to_string(v) + " " + std::to_string(model.parent[v]) + "\n";
  }
  for (int i = 1; i <= model.depth; ++i) {
    for (auto [a, b] : model.signature[i]) {
      out += "s " + std::to_string(i) + " " + std::to_string(a) + " " + std::to_string(b) +
             "\n";
    }
  }
  return out;
}

std::vector<Interval> read_intervals(std::istream& in) {
  LineReader r(in);
  std::vector<std::string> t;
  std::vector<Interval> out;
  while (r.next(t)) {
    if (t[0] != "i" || t.size() != 3) r.fail("intervals: expected 'i <lo> <hi>'");
    out.push_back({parse_double(r, t[1]), parse_double(r, t[2])});
  }
  return out;
}

std::string write_intervals(const std::vector<Interval>& intervals) {
  std::string out;
  for (const auto& iv : intervals)
    out += "i " + format_number(iv.lo) + " " + format_number(iv.hi) + "\n";
  return out;
}

void KeyValueText::add(const std::string& key, const std::string& value) {
  entries_.emplace_back(key, value);
}
void KeyValueText::add(const std::string& key, int64_t value) {
  entries_.emplace_back(key, std::to_string(value));
}
void KeyValueText::add(const std::string& key, double value) {
  entries_.emplace_back(key, format_number(value));
}
void KeyValueText::add_set(const std::string& key, const std::vector<int>& values) {
  std::string s;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(values[i]);
  }
  entries_.emplace_back(key, s);
}
std::string KeyValueText::str() const {
  std::string out;
  for (const auto& [k, v] : entries_) out += k + " " + v + "\n";
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << content;
  if (!f) throw std::runtime_error("write failed: " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

namespace {

template <class Fn>
auto with_file(const std::string& path, Fn fn) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open: " + path);
  return fn(f);
}

}  // namespace

Graph read_graph_file(const std::string& path) {
  return with_file(path, [](std::istream& in) { return read_graph(in); });
}
PartialOrientation read_orientation_file(const std::string& path, const Graph& g) {
  return with_file(path, [&](std::istream& in) { return read_orientation(in, g); });
}
FractionalOrientation read_fractional_file(const std::string& path, const Graph& g) {
  return with_file(path, [&](std::istream& in) { return read_fractional(in, g); });
}
std::vector<std::pair<int, int>> read_pairs_file(const std::string& path) {
  return with_file(path, [](std::istream& in) { return read_pairs(in); });
}
std::vector<DualEntry> read_dual_file(const std::string& path) {
  return with_file(path, [](std::istream& in) { return read_dual(in); });
}
std::vector<DualEntryExact> read_dual_exact_file(const std::string& path) {
  return with_file(path, [](std::istream& in) { return read_dual_exact(in); });
}
TreeModel read_tree_model_file(const std::string& path) {
  return with_file(path, [](std::istream& in) { return read_tree_model(in); });
}
std::vector<Interval> read_intervals_file(const std::string& path) {
  return with_file(path, [](std::istream& in) { return read_intervals(in); });
}

}  // namespace wgs::io
