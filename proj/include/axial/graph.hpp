#ifndef AXIAL_GRAPH_HPP
#define AXIAL_GRAPH_HPP

// Edge-labeled directed graphs without loops or multiple edges, their
// structural profile, and the standard constructions: complete graphs,
// incidence graphs of partial linear spaces, Cayley graphs and contraction
// of ideal subgraphs.

#include "axial/field.hpp"
#include "axial/group.hpp"

#include <algorithm>
#include <compare>
#include <deque>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace axial {

/// Non-negative count that may be infinite (girth of a forest, say).
class ExtCount {
 public:
  enum class Kind { Finite, Infinity };

  ExtCount() = default;
  static ExtCount finite(std::size_t n) { return ExtCount(Kind::Finite, n); }
  static ExtCount infinity() { return ExtCount(Kind::Infinity, 0); }

  Kind kind() const { return kind_; }
  bool is_infinite() const { return kind_ == Kind::Infinity; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  std::size_t value() const {
    if (is_infinite()) throw std::logic_error("value() of an infinite count");
    return n_;
  }

  friend bool operator==(const ExtCount&, const ExtCount&) = default;
  friend std::strong_ordering operator<=>(const ExtCount& a, const ExtCount& b) {
    if (a.is_infinite() || b.is_infinite()) {
      return static_cast<int>(a.is_infinite()) <=> static_cast<int>(b.is_infinite());
    }
    return a.n_ <=> b.n_;
  }

  std::string to_string() const { return is_infinite() ? "inf" : std::to_string(n_); }

 private:
  ExtCount(Kind k, std::size_t n) : kind_(k), n_(n) {}
  Kind kind_ = Kind::Finite;
  std::size_t n_ = 0;
};

class InvalidLabel : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotIdealSubgraph : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidPartialLinearSpace : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotWeaklyConnected : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Violation { NoVertices, DuplicateVertex, UnknownVertex, Loop, MultipleEdge, ZeroLabel };

inline const char* to_string(Violation v) {
  switch (v) {
    case Violation::NoVertices: return "no-vertices";
    case Violation::DuplicateVertex: return "duplicate-vertex";
    case Violation::UnknownVertex: return "unknown-vertex";
    case Violation::Loop: return "loop";
    case Violation::MultipleEdge: return "multiple-edge";
    case Violation::ZeroLabel: return "zero-label";
  }
  return "?";
}

struct ValidationIssue {
  Violation kind;
  std::string detail;
};

struct ValidationReport {
  bool valid = true;
  bool weakly_connected = false;
  std::vector<ValidationIssue> issues;
};

class InvalidGraph : public std::invalid_argument {
 public:
  explicit InvalidGraph(ValidationReport r)
      : std::invalid_argument(describe(r)), report_(std::move(r)) {}
  const ValidationReport& report() const { return report_; }

 private:
  static std::string describe(const ValidationReport& r) {
    std::string s = "invalid graph";
    for (const auto& i : r.issues) s += std::string("; ") + to_string(i.kind) + ": " + i.detail;
    return s;
  }
  ValidationReport report_;
};

/// Unvalidated edge list, as read from a file.
template <FieldScalar S>
struct DigraphData {
  struct Edge {
    std::string tail;
    std::string head;
    S label;
  };
  Field<S> field;
  std::vector<std::string> vertices;
  std::vector<Edge> edges;
};

namespace detail {

inline bool connected(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  if (n == 0) return false;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t comps = n;
  for (auto [a, b] : edges) {
    auto ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --comps;
    }
  }
  return comps == 1;
}

}  // namespace detail

template <FieldScalar S>
ValidationReport validate(const DigraphData<S>& g) {
  ValidationReport r;
  auto fail = [&](Violation v, std::string d) {
    r.valid = false;
    r.issues.push_back({v, std::move(d)});
  };
  if (g.vertices.empty()) fail(Violation::NoVertices, "graph has no vertices");
  std::unordered_map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    if (!idx.emplace(g.vertices[i], i).second) fail(Violation::DuplicateVertex, g.vertices[i]);
  }
  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::vector<std::pair<std::size_t, std::size_t>> links;
  for (const auto& e : g.edges) {
    auto t = idx.find(e.tail), h = idx.find(e.head);
    if (t == idx.end() || h == idx.end()) {
      fail(Violation::UnknownVertex, "(" + e.tail + "," + e.head + ")");
      continue;
    }
    if (t->second == h->second) {
      fail(Violation::Loop, "(" + e.tail + "," + e.head + ")");
      continue;
    }
    if (!seen.emplace(t->second, h->second).second) {
      fail(Violation::MultipleEdge, "(" + e.tail + "," + e.head + ")");
    }
    if (e.label.is_zero()) fail(Violation::ZeroLabel, "(" + e.tail + "," + e.head + ")");
    links.emplace_back(t->second, h->second);
  }
  r.weakly_connected = detail::connected(g.vertices.size(), links);
  return r;
}

template <FieldScalar S>
class LabeledDigraph {
 public:
  using scalar_type = S;

  struct Arc {
    std::size_t to;
    S label;
  };
  struct Edge {
    std::size_t tail;
    std::size_t head;
    S label;
  };

  /// Throws InvalidGraph when the vertex or edge lists violate the invariants.
  LabeledDigraph(Field<S> field, std::vector<std::string> vertices, std::vector<Edge> edges)
      : field_(std::move(field)), names_(std::move(vertices)) {
    DigraphData<S> data{field_, names_, {}};
    for (const auto& e : edges) {
      if (e.tail >= names_.size() || e.head >= names_.size()) {
        throw std::out_of_range("edge endpoint index out of range");
      }
      data.edges.push_back({names_[e.tail], names_[e.head], e.label});
    }
    auto report = validate(data);
    if (!report.valid) throw InvalidGraph(std::move(report));
    build(edges);
  }

  static LabeledDigraph from_data(const DigraphData<S>& data) {
    auto report = validate(data);
    if (!report.valid) throw InvalidGraph(std::move(report));
    std::unordered_map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < data.vertices.size(); ++i) idx.emplace(data.vertices[i], i);
    std::vector<Edge> edges;
    for (const auto& e : data.edges) edges.push_back({idx.at(e.tail), idx.at(e.head), e.label});
    return LabeledDigraph(data.field, data.vertices, std::move(edges));
  }

  DigraphData<S> to_data() const {
    DigraphData<S> d{field_, names_, {}};
    for (const auto& e : edges()) d.edges.push_back({names_[e.tail], names_[e.head], e.label});
    return d;
  }

  const Field<S>& field() const { return field_; }
  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }

  std::optional<std::size_t> find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t index_of(const std::string& name) const {
    auto i = find(name);
    if (!i) throw std::out_of_range("unknown vertex '" + name + "'");
    return *i;
  }

  /// Arcs leaving / entering a vertex, sorted by the other endpoint.
  const std::vector<Arc>& out(std::size_t i) const { return out_[i]; }
  const std::vector<Arc>& in(std::size_t i) const { return in_[i]; }
  /// Neighbors in the underlying undirected graph, sorted.
  const std::vector<std::size_t>& neighbors(std::size_t i) const { return nbrs_[i]; }

  std::size_t out_degree(std::size_t i) const { return out_[i].size(); }
  std::size_t in_degree(std::size_t i) const { return in_[i].size(); }
  std::size_t edge_count() const { return edge_count_; }

  const S* label(std::size_t tail, std::size_t head) const {
    const auto& arcs = out_[tail];
    auto it = std::lower_bound(arcs.begin(), arcs.end(), head,
                               [](const Arc& a, std::size_t h) { return a.to < h; });
    if (it == arcs.end() || it->to != head) return nullptr;
    return &it->label;
  }
  bool has_edge(std::size_t tail, std::size_t head) const { return label(tail, head) != nullptr; }
  bool adjacent(std::size_t a, std::size_t b) const {
    return std::binary_search(nbrs_[a].begin(), nbrs_[a].end(), b);
  }

  /// All edges ordered by (tail, head).
  std::vector<Edge> edges() const {
    std::vector<Edge> es;
    es.reserve(edge_count_);
    for (std::size_t t = 0; t < size(); ++t) {
      for (const auto& a : out_[t]) es.push_back({t, a.to, a.label});
    }
    return es;
  }

  /// Distinct labels in canonical order.
  std::vector<S> labels() const {
    std::vector<S> ls;
    for (std::size_t t = 0; t < size(); ++t) {
      for (const auto& a : out_[t]) ls.push_back(a.label);
    }
    std::sort(ls.begin(), ls.end());
    ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
    return ls;
  }

  /// The reversed graph: edge (y,x) carries the label of (x,y).
  LabeledDigraph reversed() const {
    std::vector<Edge> es;
    for (const auto& e : edges()) es.push_back({e.head, e.tail, e.label});
    return LabeledDigraph(field_, names_, std::move(es));
  }

 private:
  void build(const std::vector<Edge>& edges) {
    for (std::size_t i = 0; i < names_.size(); ++i) index_.emplace(names_[i], i);
    out_.assign(names_.size(), {});
    in_.assign(names_.size(), {});
    nbrs_.assign(names_.size(), {});
    for (const auto& e : edges) {
      out_[e.tail].push_back({e.head, e.label});
      in_[e.head].push_back({e.tail, e.label});
      nbrs_[e.tail].push_back(e.head);
      nbrs_[e.head].push_back(e.tail);
    }
    auto by_to = [](const Arc& a, const Arc& b) { return a.to < b.to; };
    for (std::size_t i = 0; i < names_.size(); ++i) {
      std::sort(out_[i].begin(), out_[i].end(), by_to);
      std::sort(in_[i].begin(), in_[i].end(), by_to);
      std::sort(nbrs_[i].begin(), nbrs_[i].end());
      nbrs_[i].erase(std::unique(nbrs_[i].begin(), nbrs_[i].end()), nbrs_[i].end());
    }
    edge_count_ = edges.size();
  }

  Field<S> field_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::vector<Arc>> out_;
  std::vector<std::vector<Arc>> in_;
  std::vector<std::vector<std::size_t>> nbrs_;
  std::size_t edge_count_ = 0;
};

template <FieldScalar S>
bool is_symmetric(const LabeledDigraph<S>& g) {
  for (std::size_t t = 0; t < g.size(); ++t) {
    for (const auto& a : g.out(t)) {
      if (!g.has_edge(a.to, t)) return false;
    }
  }
  return true;
}

/// Symmetric with alpha(x,y) = alpha(y,x): exactly when the algebra is commutative.
template <FieldScalar S>
bool is_label_symmetric(const LabeledDigraph<S>& g) {
  for (std::size_t t = 0; t < g.size(); ++t) {
    for (const auto& a : g.out(t)) {
      const S* back = g.label(a.to, t);
      if (!back || !(*back == a.label)) return false;
    }
  }
  return true;
}

/// Every pair of distinct vertices joined in both directions.
template <FieldScalar S>
bool is_complete(const LabeledDigraph<S>& g) {
  for (std::size_t t = 0; t < g.size(); ++t) {
    if (g.out_degree(t) + 1 != g.size() || g.in_degree(t) + 1 != g.size()) return false;
  }
  return true;
}

/// Connected components of the underlying graph induced on `subset`
/// (all vertices when empty is not intended: pass the full list).
template <FieldScalar S>
std::vector<std::vector<std::size_t>> induced_components(const LabeledDigraph<S>& g,
                                                         const std::vector<std::size_t>& subset) {
  std::vector<int> member(g.size(), -1);
  for (std::size_t k = 0; k < subset.size(); ++k) member[subset[k]] = 0;
  std::vector<std::vector<std::size_t>> comps;
  for (auto s : subset) {
    if (member[s] != 0) continue;
    std::vector<std::size_t> comp{s};
    member[s] = 1;
    for (std::size_t k = 0; k < comp.size(); ++k) {
      for (auto w : g.neighbors(comp[k])) {
        if (member[w] == 0) {
          member[w] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

template <FieldScalar S>
bool weakly_connected(const LabeledDigraph<S>& g) {
  std::vector<std::size_t> all(g.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return induced_components(g, all).size() == 1;
}

/// Length of a shortest cycle of the underlying graph.
template <FieldScalar S>
ExtCount girth(const LabeledDigraph<S>& g) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  const auto n = g.size();
  std::vector<std::size_t> dist(n), parent(n);
  constexpr auto kUnseen = std::numeric_limits<std::size_t>::max();
  for (std::size_t root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), kUnseen);
    dist[root] = 0;
    parent[root] = kUnseen;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      auto u = queue.front();
      queue.pop_front();
      if (2 * dist[u] + 1 >= best) break;
      for (auto w : g.neighbors(u)) {
        if (dist[w] == kUnseen) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  return best == std::numeric_limits<std::size_t>::max() ? ExtCount::infinity()
                                                         : ExtCount::finite(best);
}

struct GraphProfile {
  bool is_symmetric = false;
  bool weakly_connected = false;
  ExtCount girth;
  ExtCount k_min;
  ExtCount k_max;
  std::vector<std::pair<std::size_t, std::size_t>> degrees;  // (indegree, outdegree)
};

/// k_min / k_max range over both in- and outdegrees, which coincide for
/// symmetric graphs.
template <FieldScalar S>
GraphProfile profile(const LabeledDigraph<S>& g) {
  GraphProfile p;
  p.is_symmetric = is_symmetric(g);
  p.weakly_connected = weakly_connected(g);
  p.girth = girth(g);
  std::size_t lo = std::numeric_limits<std::size_t>::max(), hi = 0;
  for (std::size_t v = 0; v < g.size(); ++v) {
    p.degrees.emplace_back(g.in_degree(v), g.out_degree(v));
    lo = std::min({lo, g.in_degree(v), g.out_degree(v)});
    hi = std::max({hi, g.in_degree(v), g.out_degree(v)});
  }
  p.k_min = ExtCount::finite(lo);
  p.k_max = ExtCount::finite(hi);
  return p;
}

// ---------------------------------------------------------------------------
// Constructions

struct SimpleGraph {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
};

struct PartialLinearSpace {
  std::vector<std::string> points;
  std::vector<std::vector<std::string>> lines;

  /// Throws InvalidPartialLinearSpace when a line is short, repeats or names
  /// an unknown point, or two points share more than one line.
  void validate() const {
    std::unordered_map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (!idx.emplace(points[i], i).second) {
        throw InvalidPartialLinearSpace("duplicate point '" + points[i] + "'");
      }
    }
    std::set<std::pair<std::size_t, std::size_t>> covered;
    for (const auto& line : lines) {
      if (line.size() < 2) throw InvalidPartialLinearSpace("line with fewer than 2 points");
      std::vector<std::size_t> ids;
      for (const auto& p : line) {
        auto it = idx.find(p);
        if (it == idx.end()) throw InvalidPartialLinearSpace("unknown point '" + p + "'");
        ids.push_back(it->second);
      }
      std::sort(ids.begin(), ids.end());
      if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
        throw InvalidPartialLinearSpace("line repeats a point");
      }
      for (std::size_t a = 0; a < ids.size(); ++a) {
        for (std::size_t b = a + 1; b < ids.size(); ++b) {
          if (!covered.emplace(ids[a], ids[b]).second) {
            throw InvalidPartialLinearSpace("points '" + points[ids[a]] + "' and '" +
                                            points[ids[b]] + "' share two lines");
          }
        }
      }
    }
  }

  static std::string line_name(const std::vector<std::string>& line) {
    std::string s = "{";
    for (std::size_t k = 0; k < line.size(); ++k) {
      if (k) s += ',';
      s += line[k];
    }
    return s + "}";
  }
};

inline PartialLinearSpace as_partial_linear_space(const SimpleGraph& g) {
  PartialLinearSpace pls{g.vertices, {}};
  for (const auto& [a, b] : g.edges) pls.lines.push_back({a, b});
  return pls;
}

template <FieldScalar S>
SimpleGraph underlying_simple_graph(const LabeledDigraph<S>& g) {
  SimpleGraph s{g.names(), {}};
  for (std::size_t v = 0; v < g.size(); ++v) {
    for (auto w : g.neighbors(v)) {
      if (v < w) s.edges.emplace_back(g.name(v), g.name(w));
    }
  }
  return s;
}

/// Vertices are the points followed by the lines; point->line edges carry
/// `alpha`, line->point edges carry `beta`.
template <FieldScalar S>
LabeledDigraph<S> incidence_graph(const PartialLinearSpace& d, const S& alpha, const S& beta) {
  if (alpha.is_zero() || beta.is_zero()) throw InvalidLabel("incidence labels must be nonzero");
  d.validate();
  std::vector<std::string> names = d.points;
  std::unordered_map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < names.size(); ++i) idx.emplace(names[i], i);
  std::vector<typename LabeledDigraph<S>::Edge> edges;
  for (const auto& line : d.lines) {
    auto name = PartialLinearSpace::line_name(line);
    if (!idx.emplace(name, names.size()).second) {
      throw InvalidPartialLinearSpace("line name '" + name + "' collides with a point");
    }
    auto l = names.size();
    names.push_back(name);
    for (const auto& p : line) {
      edges.push_back({idx.at(p), l, alpha});
      edges.push_back({l, idx.at(p), beta});
    }
  }
  return LabeledDigraph<S>(Field<S>::of(alpha), std::move(names), std::move(edges));
}

template <FieldScalar S>
LabeledDigraph<S> incidence_graph(const SimpleGraph& d, const S& alpha, const S& beta) {
  return incidence_graph(as_partial_linear_space(d), alpha, beta);
}

/// Symmetric complete digraph on vertices x1..xn with one label everywhere.
template <FieldScalar S>
LabeledDigraph<S> complete_graph(std::size_t n, const S& label, const Field<S>& field) {
  if (n == 0) throw std::invalid_argument("complete graph needs at least one vertex");
  if (label.is_zero()) throw InvalidLabel("complete graph label must be nonzero");
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  std::vector<typename LabeledDigraph<S>::Edge> edges;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b) edges.push_back({a, b, label});
    }
  }
  return LabeledDigraph<S>(field, std::move(names), std::move(edges));
}

/// Edge (g, g*s) labeled labels[k] for each element g and generator s = gens[k].
template <FieldScalar S>
LabeledDigraph<S> cayley_graph(const CayleyTable& group, const std::vector<std::size_t>& gens,
                               const std::vector<S>& labels, const Field<S>& field) {
  group.check_generators(gens);
  if (labels.size() != gens.size()) throw std::invalid_argument("one label per generator required");
  for (const auto& l : labels) {
    if (l.is_zero()) throw InvalidLabel("Cayley graph labels must be nonzero");
  }
  std::vector<typename LabeledDigraph<S>::Edge> edges;
  for (std::size_t g = 0; g < group.size(); ++g) {
    for (std::size_t k = 0; k < gens.size(); ++k) edges.push_back({g, group.mul(g, gens[k]), labels[k]});
  }
  return LabeledDigraph<S>(field, group.names(), std::move(edges));
}

/// u and v are joined both ways by 1/2 and look identical from every other vertex.
template <FieldScalar S>
bool are_ideal_twins(const LabeledDigraph<S>& g, std::size_t u, std::size_t v) {
  if (u == v || g.field().characteristic() == 2) return false;
  const S half = g.field().from_int(2).inv();
  const S* uv = g.label(u, v);
  const S* vu = g.label(v, u);
  if (!uv || !vu || !(*uv == half) || !(*vu == half)) return false;
  auto same_view = [&](const auto& au, const auto& av) {
    std::size_t i = 0, j = 0;
    auto skip = [&](const auto& arcs, std::size_t& k) {
      while (k < arcs.size() && (arcs[k].to == u || arcs[k].to == v)) ++k;
    };
    while (true) {
      skip(au, i);
      skip(av, j);
      if (i == au.size() || j == av.size()) return i == au.size() && j == av.size();
      if (au[i].to != av[j].to || !(au[i].label == av[j].label)) return false;
      ++i;
      ++j;
    }
  };
  return same_view(g.out(u), g.out(v)) && same_view(g.in(u), g.in(v));
}

/// Y (|Y| >= 2) spans a complete 1/2-labeled subgraph and every outside
/// vertex meets Y uniformly in each direction.
template <FieldScalar S>
bool is_ideal_subgraph(const LabeledDigraph<S>& g, const std::vector<std::size_t>& Y) {
  if (Y.size() < 2) return false;
  for (std::size_t a = 0; a < Y.size(); ++a) {
    for (std::size_t b = a + 1; b < Y.size(); ++b) {
      if (!are_ideal_twins(g, Y[a], Y[b])) return false;
    }
  }
  return true;
}

/// Contract an ideal subgraph Y to one vertex placed at the position of its
/// first member (in vertex order) and named "{y1,y2,...}".
template <FieldScalar S>
LabeledDigraph<S> contract_ideal_subgraph(const LabeledDigraph<S>& g, std::vector<std::size_t> Y) {
  std::sort(Y.begin(), Y.end());
  Y.erase(std::unique(Y.begin(), Y.end()), Y.end());
  if (!is_ideal_subgraph(g, Y)) throw NotIdealSubgraph("vertex set is not an ideal subgraph");
  std::vector<bool> inY(g.size(), false);
  for (auto y : Y) inY[y] = true;
  const auto y0 = Y.front();
  std::vector<std::string> members;
  for (auto y : Y) members.push_back(g.name(y));
  std::vector<std::string> names;
  std::vector<std::size_t> newidx(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (v == y0) {
      newidx[v] = names.size();
      names.push_back(PartialLinearSpace::line_name(members));
    } else if (!inY[v]) {
      newidx[v] = names.size();
      names.push_back(g.name(v));
    }
  }
  for (auto y : Y) newidx[y] = newidx[y0];
  std::vector<typename LabeledDigraph<S>::Edge> edges;
  for (const auto& e : g.edges()) {
    bool tY = inY[e.tail], hY = inY[e.head];
    if (tY && hY) continue;
    if ((tY && e.tail != y0) || (hY && e.head != y0)) continue;  // uniform, keep one copy
    edges.push_back({newidx[e.tail], newidx[e.head], e.label});
  }
  return LabeledDigraph<S>(g.field(), std::move(names), std::move(edges));
}

template <FieldScalar S>
std::string to_dot(const LabeledDigraph<S>& g) {
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') q += '\\';
      q += c;
    }
    return q + "\"";
  };
  std::ostringstream os;
  os << "digraph G {\n";
  for (const auto& n : g.names()) os << "  " << quote(n) << ";\n";
  for (const auto& e : g.edges()) {
    os << "  " << quote(g.name(e.tail)) << " -> " << quote(g.name(e.head))
       << " [label=" << quote(e.label.to_string()) << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace axial

#endif  // AXIAL_GRAPH_HPP
