#include "starblock/btree.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "starblock/catalog.hpp"

namespace starblock::btree {
namespace {

std::vector<std::size_t> bfs_distances(const BrauerTree& t, std::size_t src) {
  std::vector<std::size_t> dist(t.size(), SIZE_MAX);
  std::queue<std::size_t> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    auto v = q.front();
    q.pop();
    for (auto w : t.neighbours(v)) {
      if (dist[w] == SIZE_MAX) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

std::string rooted_form_from(const BrauerTree& t, std::size_t v, std::size_t parent) {
  std::vector<std::string> kids;
  for (auto w : t.neighbours(v)) {
    if (w != parent) kids.push_back(rooted_form_from(t, w, v));
  }
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (auto& k : kids) out += k;
  return out + ")";
}

bool has_space(const std::string& s) {
  return std::any_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

}  // namespace

BrauerTree::BrauerTree(std::vector<Vertex> vertices, std::vector<Edge> edges,
                       std::optional<Exceptional> exceptional)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), exceptional_(std::move(exceptional)) {
  if (vertices_.empty()) throw TreeError("a tree needs at least one vertex");
  if (edges_.size() + 1 != vertices_.size()) {
    throw TreeError("edge count must be vertex count minus one");
  }
  adj_.assign(vertices_.size(), {});
  std::set<std::string> labels;
  for (const auto& e : edges_) {
    if (e.a >= vertices_.size() || e.b >= vertices_.size() || e.a == e.b) {
      throw TreeError("edge endpoints out of range or equal");
    }
    if (!labels.insert(e.label).second) throw TreeError("duplicate edge label '" + e.label + "'");
    adj_[e.a].push_back(e.b);
    adj_[e.b].push_back(e.a);
  }
  const auto dist = bfs_distances(*this, 0);
  if (std::count(dist.begin(), dist.end(), SIZE_MAX) != 0) {
    throw TreeError("edges do not connect all vertices");
  }
  if (exceptional_) {
    if (exceptional_->vertex >= vertices_.size()) throw TreeError("exceptional vertex out of range");
    if (exceptional_->multiplicity < 1) throw TreeError("multiplicity must be at least 1");
  }
}

bool operator==(const BrauerTree& a, const BrauerTree& b) {
  if (a.vertices_.size() != b.vertices_.size() || a.edges_.size() != b.edges_.size()) return false;
  for (std::size_t i = 0; i < a.vertices_.size(); ++i) {
    const auto& x = a.vertices_[i];
    const auto& y = b.vertices_[i];
    if (x.label != y.label || x.real != y.real || x.degree != y.degree ||
        x.degree_expr != y.degree_expr) {
      return false;
    }
  }
  for (std::size_t i = 0; i < a.edges_.size(); ++i) {
    const auto& x = a.edges_[i];
    const auto& y = b.edges_[i];
    if (x.a != y.a || x.b != y.b || x.label != y.label) return false;
  }
  if (a.exceptional_.has_value() != b.exceptional_.has_value()) return false;
  return !a.exceptional_ || (a.exceptional_->vertex == b.exceptional_->vertex &&
                             a.exceptional_->multiplicity == b.exceptional_->multiplicity);
}

std::size_t edge_count(const BrauerTree& t) { return t.edges().size(); }

std::size_t diameter(const BrauerTree& t) {
  auto d0 = bfs_distances(t, 0);
  auto far = static_cast<std::size_t>(std::max_element(d0.begin(), d0.end()) - d0.begin());
  auto d1 = bfs_distances(t, far);
  return *std::max_element(d1.begin(), d1.end());
}

bool is_star(const BrauerTree& t) { return diameter(t) <= 2; }

bool is_line(const BrauerTree& t) {
  for (std::size_t v = 0; v < t.size(); ++v) {
    if (t.neighbours(v).size() > 2) return false;
  }
  return true;
}

BrauerTree wind(const BrauerTree& t, unsigned n) {
  if (!t.exceptional()) throw TreeError("wind: missing exceptional vertex");
  if (n == 0) throw TreeError("wind: winding factor must be positive");
  const std::size_t q = t.exceptional()->vertex;
  std::vector<Vertex> vertices = t.vertices();
  std::vector<Edge> edges = t.edges();
  for (unsigned copy = 1; copy < n; ++copy) {
    const std::string suffix = "#" + std::to_string(copy);
    std::vector<std::size_t> map(t.size());
    for (std::size_t v = 0; v < t.size(); ++v) {
      if (v == q) {
        map[v] = q;
        continue;
      }
      Vertex dup = t.vertices()[v];
      dup.label += suffix;
      map[v] = vertices.size();
      vertices.push_back(std::move(dup));
    }
    for (const auto& e : t.edges()) edges.push_back({map[e.a], map[e.b], e.label + suffix});
  }
  return BrauerTree(std::move(vertices), std::move(edges), t.exceptional());
}

std::string rooted_form(const BrauerTree& t, std::size_t root) {
  return rooted_form_from(t, root, SIZE_MAX);
}

PrimitiveRoot primitive_root(const BrauerTree& t) {
  if (!t.exceptional()) throw TreeError("similarity needs a designated exceptional vertex");
  const std::size_t q = t.exceptional()->vertex;
  std::map<std::string, unsigned> classes;
  for (auto w : t.neighbours(q)) ++classes[rooted_form_from(t, w, q)];
  unsigned g = 0;
  for (const auto& [form, count] : classes) g = std::gcd(g, count);
  std::string form = "(";
  for (const auto& [branch, count] : classes) {
    for (unsigned i = 0; i < count / g; ++i) form += branch;
  }
  form += ")";
  return {form, g == 0 ? 1 : g};
}

bool similar(const BrauerTree& a, const BrauerTree& b) {
  return primitive_root(a).form == primitive_root(b).form;
}

RealStem real_stem(const BrauerTree& t) {
  RealStem out;
  std::vector<std::size_t> index(t.size(), SIZE_MAX);
  for (std::size_t v = 0; v < t.size(); ++v) {
    if (t.vertices()[v].real) {
      index[v] = out.vertices.size();
      out.vertices.push_back(v);
    }
  }
  if (out.vertices.empty()) {
    out.connected = false;
    out.is_path = false;
    out.integrity_issues.push_back("no real vertices");
    return out;
  }
  std::vector<std::vector<std::size_t>> adj(out.vertices.size());
  for (const auto& e : t.edges()) {
    if (index[e.a] != SIZE_MAX && index[e.b] != SIZE_MAX) {
      out.edges.emplace_back(e.a, e.b);
      adj[index[e.a]].push_back(index[e.b]);
      adj[index[e.b]].push_back(index[e.a]);
    }
  }
  out.connected = out.edges.size() + 1 == out.vertices.size();
  std::size_t max_deg = 0;
  for (const auto& a : adj) max_deg = std::max(max_deg, a.size());
  out.is_path = out.connected && max_deg <= 2;
  if (!out.connected) out.integrity_issues.push_back("real vertices do not form a connected subtree");
  if (max_deg > 2) out.integrity_issues.push_back("a real vertex has more than two real neighbours");
  if (out.is_path) {
    std::size_t start = 0;
    for (std::size_t i = 0; i < adj.size(); ++i) {
      if (adj[i].size() <= 1) {
        start = i;
        break;
      }
    }
    std::size_t prev = SIZE_MAX, cur = start;
    while (true) {
      out.path.push_back(out.vertices[cur]);
      std::size_t next = SIZE_MAX;
      for (auto w : adj[cur]) {
        if (w != prev) next = w;
      }
      if (next == SIZE_MAX) break;
      prev = cur;
      cur = next;
    }
  }
  return out;
}

BrauerTree path_tree(std::size_t edges, std::optional<std::size_t> exceptional) {
  std::vector<Vertex> vs(edges + 1);
  std::vector<Edge> es;
  for (std::size_t i = 0; i <= edges; ++i) vs[i].label = "v" + std::to_string(i);
  for (std::size_t i = 0; i < edges; ++i) es.push_back({i, i + 1, "e" + std::to_string(i)});
  std::optional<Exceptional> ex;
  if (exceptional) ex = Exceptional{*exceptional, 1};
  return BrauerTree(std::move(vs), std::move(es), ex);
}

BrauerTree star_tree(std::size_t edges, bool exceptional_at_centre) {
  std::vector<Vertex> vs(edges + 1);
  std::vector<Edge> es;
  vs[0].label = "c";
  for (std::size_t i = 1; i <= edges; ++i) {
    vs[i].label = "v" + std::to_string(i);
    es.push_back({0, i, "e" + std::to_string(i)});
  }
  std::optional<Exceptional> ex;
  if (exceptional_at_centre) ex = Exceptional{0, 1};
  return BrauerTree(std::move(vs), std::move(es), ex);
}

BrauerTree so7_fixture(std::optional<Natural> q, std::optional<Natural> p) {
  struct Row {
    const char* label;
    const char* expr;
    std::function<Natural(const Natural&)> eval;
  };
  using arith::ipow;
  const std::vector<Row> rows = {
      {"chi(3;-)", "1", [](const Natural&) { return Natural(1); }},
      {"chi(02;2)", "q^2(q^4+q^2+1)",
       [](const Natural& x) { return Natural(ipow(x, 2) * (ipow(x, 4) + ipow(x, 2) + 1)); }},
      {"chi(012;13)", "q^4(q^3+1)(q+1)/2",
       [](const Natural& x) { return Natural(ipow(x, 4) * (ipow(x, 3) + 1) * (x + 1) / 2); }},
      {"chi(exc)", "(q^6-1)(q^2-1)",
       [](const Natural& x) { return Natural((ipow(x, 6) - 1) * (ipow(x, 2) - 1)); }},
      {"chi(1;0123)", "q^4(q^3-1)(q-1)/2",
       [](const Natural& x) { return Natural(ipow(x, 4) * (ipow(x, 3) - 1) * (x - 1) / 2); }},
  };
  std::vector<Vertex> vs;
  for (const auto& r : rows) {
    Vertex v;
    v.label = r.label;
    v.real = true;
    v.degree_expr = r.expr;
    if (q) v.degree = r.eval(*q);
    vs.push_back(std::move(v));
  }
  std::vector<Edge> es;
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) es.push_back({i, i + 1, "phi" + std::to_string(i + 1)});
  Natural mult = 1;
  if (q && p) {
    catalog::GroupId so7;
    so7.family = catalog::Family::SO_odd;
    so7.n = 3;
    so7.q = *q;
    auto [pa, a] = arith::p_part(catalog::order(so7), *p);
    if (a == 0 || (pa - 1) % 4 != 0) throw TreeError("so7_fixture: p must divide q^2+1");
    mult = (pa - 1) / 4;
  }
  return BrauerTree(std::move(vs), std::move(es), Exceptional{3, mult});
}

std::string serialize(const BrauerTree& t) {
  std::ostringstream os;
  os << "brauer-tree 1\n";
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto& v = t.vertices()[i];
    os << "vertex " << i << ' ' << v.label << " real=" << (v.real ? 1 : 0);
    if (v.degree) os << " degree=" << *v.degree;
    if (!v.degree_expr.empty()) os << " expr=" << v.degree_expr;
    os << '\n';
  }
  for (const auto& e : t.edges()) os << "edge " << e.a << ' ' << e.b << ' ' << e.label << '\n';
  if (t.exceptional()) {
    os << "exceptional " << t.exceptional()->vertex << ' ' << t.exceptional()->multiplicity << '\n';
  }
  return os.str();
}

BrauerTree deserialize(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<Vertex> vs;
  std::vector<Edge> es;
  std::optional<Exceptional> ex;
  bool header = false;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& why) {
    throw TreeError("line " + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string kind;
    ls >> kind;
    if (kind == "brauer-tree") {
      std::string version;
      ls >> version;
      if (version != "1") fail("unsupported version");
      header = true;
    } else if (kind == "vertex") {
      std::size_t idx;
      Vertex v;
      if (!(ls >> idx >> v.label) || idx != vs.size()) fail("bad vertex line");
      std::string field;
      while (ls >> field) {
        auto eq = field.find('=');
        if (eq == std::string::npos) fail("bad vertex field '" + field + "'");
        const std::string key = field.substr(0, eq), val = field.substr(eq + 1);
        if (key == "real") {
          if (val != "0" && val != "1") fail("real must be 0 or 1");
          v.real = val == "1";
        } else if (key == "degree") {
          try {
            v.degree = arith::parse_natural(val);
          } catch (const arith::ArithError& e) {
            fail(e.what());
          }
        } else if (key == "expr") {
          v.degree_expr = val;
        } else {
          fail("unknown vertex field '" + key + "'");
        }
      }
      vs.push_back(std::move(v));
    } else if (kind == "edge") {
      Edge e;
      if (!(ls >> e.a >> e.b >> e.label)) fail("bad edge line");
      es.push_back(std::move(e));
    } else if (kind == "exceptional") {
      std::size_t v;
      std::string m;
      if (!(ls >> v >> m)) fail("bad exceptional line");
      ex = Exceptional{v, arith::parse_natural(m)};
    } else {
      fail("unknown record '" + kind + "'");
    }
  }
  if (!header) throw TreeError("missing 'brauer-tree 1' header");
  for (const auto& v : vs) {
    if (has_space(v.label)) throw TreeError("labels may not contain spaces");
  }
  return BrauerTree(std::move(vs), std::move(es), ex);
}

}  // namespace starblock::btree
