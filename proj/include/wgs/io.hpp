#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wgs/graph.hpp"
#include "wgs/orientation.hpp"
#include "wgs/synthesize.hpp"
#include "wgs/tree_model.hpp"
#include "wgs/verify.hpp"

namespace wgs::io {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ".gr": "p <n> <m>" header then "e <u> <v>" lines, 0-based, no duplicates
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
std::string write_graph(const Graph& g);

// ".or": "a <u> <v>" lines (directed u->v)
PartialOrientation read_orientation(std::istream& in, const Graph& g);
PartialOrientation read_orientation_file(const std::string& path, const Graph& g);
std::string write_orientation(const PartialOrientation& h);

// ".fr": "w <u> <v> <weight>" lines
FractionalOrientation read_fractional(std::istream& in, const Graph& g);
FractionalOrientation read_fractional_file(const std::string& path, const Graph& g);
std::string write_fractional(const FractionalOrientation& p);

// pairs: "<u> <v>" lines
std::vector<std::pair<int, int>> read_pairs(std::istream& in);
std::vector<std::pair<int, int>> read_pairs_file(const std::string& path);
std::string write_pairs(const std::vector<std::pair<int, int>>& pairs);

// dual certificate: "y <u> <v> <weight>" lines
std::vector<DualEntry> read_dual(std::istream& in);
std::vector<DualEntry> read_dual_file(const std::string& path);
// same file, weights parsed as exact decimals
std::vector<DualEntryExact> read_dual_exact(std::istream& in);
std::vector<DualEntryExact> read_dual_exact_file(const std::string& path);
std::string write_dual(const std::vector<DualEntry>& y);

// ".tm": "tm <m> <d> <leaves>", "l <leaf> <label>", "t <child> <parent>",
// "s <level> <label1> <label2>"
TreeModel read_tree_model(std::istream& in);
TreeModel read_tree_model_file(const std::string& path);
std::string write_tree_model(const TreeModel& model);

// ".iv": "i <lo> <hi>" lines
std::vector<Interval> read_intervals(std::istream& in);
std::vector<Interval> read_intervals_file(const std::string& path);
std::string write_intervals(const std::vector<Interval>& intervals);

// sidecar metadata / run manifests: "<key> <value...>" text lines
class KeyValueText {
 public:
  void add(const std::string& key, const std::string& value);
  void add(const std::string& key, int64_t value);
  void add(const std::string& key, double value);
  void add_set(const std::string& key, const std::vector<int>& values);
  std::string str() const;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace wgs::io
