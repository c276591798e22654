#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "starblock/arith.hpp"

namespace starblock::btree {

using arith::Natural;

class TreeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Vertex {
  std::string label;
  bool real = true;
  std::optional<Natural> degree;
  std::string degree_expr;
};

struct Edge {
  std::size_t a = 0;
  std::size_t b = 0;
  std::string label;
};

struct Exceptional {
  std::size_t vertex = 0;
  Natural multiplicity = 1;
};

class BrauerTree {
 public:
  // Throws TreeError unless the edges form a tree with distinct edge labels.
  BrauerTree(std::vector<Vertex> vertices, std::vector<Edge> edges,
             std::optional<Exceptional> exceptional = std::nullopt);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::optional<Exceptional>& exceptional() const { return exceptional_; }
  const std::vector<std::size_t>& neighbours(std::size_t v) const { return adj_[v]; }
  std::size_t size() const { return vertices_.size(); }

  friend bool operator==(const BrauerTree& a, const BrauerTree& b);

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::optional<Exceptional> exceptional_;
  std::vector<std::vector<std::size_t>> adj_;
};

std::size_t edge_count(const BrauerTree& t);
std::size_t diameter(const BrauerTree& t);
bool is_star(const BrauerTree& t);
bool is_line(const BrauerTree& t);

// Glues n copies of t at its exceptional vertex. Copy 0 keeps its labels,
// copy i gets the suffix "#i".
BrauerTree wind(const BrauerTree& t, unsigned n);

// AHU encoding of the tree rooted at v.
std::string rooted_form(const BrauerTree& t, std::size_t root);

// Branches at the exceptional vertex, grouped by rooted isomorphism class,
// with every class count divided by the gcd of the counts. Two trees are
// windings of a common rooted tree exactly when these forms agree.
struct PrimitiveRoot {
  std::string form;
  unsigned winding = 0;
};
PrimitiveRoot primitive_root(const BrauerTree& t);

bool similar(const BrauerTree& a, const BrauerTree& b);

struct RealStem {
  std::vector<std::size_t> vertices;  // indices into the source tree
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  bool connected = true;
  bool is_path = true;
  std::vector<std::size_t> path;  // vertices in path order when is_path
  std::vector<std::string> integrity_issues;
};
RealStem real_stem(const BrauerTree& t);

BrauerTree path_tree(std::size_t edges, std::optional<std::size_t> exceptional = std::nullopt);
BrauerTree star_tree(std::size_t edges, bool exceptional_at_centre = true);

// The five-vertex line for SO(7,q), q odd, p | q^2+1. Degrees are evaluated
// when q is given; the multiplicity (|P|-1)/4 is filled in when p is given too.
BrauerTree so7_fixture(std::optional<Natural> q = std::nullopt,
                       std::optional<Natural> p = std::nullopt);

std::string serialize(const BrauerTree& t);
BrauerTree deserialize(const std::string& text);

}  // namespace starblock::btree
