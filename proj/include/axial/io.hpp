#ifndef AXIAL_IO_HPP
#define AXIAL_IO_HPP

// JSON formats for graphs, partial linear spaces, groups and reports.
// Needs nlohmann/json (vendored as json.hpp).

#include "axial/autgrp.hpp"
#include "axial/frucht.hpp"
#include "axial/fusion.hpp"
#include "axial/structure.hpp"

#include "json.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <variant>

namespace axial {

using Json = nlohmann::ordered_json;

class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using AnyGraph = std::variant<LabeledDigraph<Fp>, LabeledDigraph<Q>>;
using AnyDigraphData = std::variant<DigraphData<Fp>, DigraphData<Q>>;

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError("'" + path + "' is not valid JSON: " + e.what());
  }
}

namespace detail {

inline const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing key '") + key + "'");
  return j.at(key);
}

inline std::string as_string(const Json& j, const char* what) {
  if (!j.is_string()) throw FormatError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

/// Scalars may be given as strings ("1/2") or plain integers.
inline std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw FormatError("scalar must be a string or an integer");
}

inline std::vector<std::string> string_array(const Json& j, const char* what) {
  if (!j.is_array()) throw FormatError(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& x : j) out.push_back(as_string(x, what));
  return out;
}

}  // namespace detail

inline FieldCtx field_from_json(const Json& j) {
  auto kind = detail::as_string(detail::member(j, "kind"), "field kind");
  if (kind == "Q") return FieldCtx::rationals();
  if (kind == "Fp") {
    const auto& p = detail::member(j, "p");
    if (!p.is_number_unsigned()) throw FormatError("field p must be a positive integer");
    return FieldCtx::prime(p.get<std::uint64_t>());
  }
  throw FormatError("unknown field kind '" + kind + "'");
}

inline Json field_to_json(const FieldCtx& f) {
  Json j;
  if (f.is_prime_field()) {
    j["kind"] = "Fp";
    j["p"] = f.p;
  } else {
    j["kind"] = "Q";
  }
  return j;
}

template <FieldScalar S>
DigraphData<S> digraph_data_from_json(const Json& j, const Field<S>& field) {
  DigraphData<S> d{field, detail::string_array(detail::member(j, "vertices"), "vertex"), {}};
  const auto& es = detail::member(j, "edges");
  if (!es.is_array()) throw FormatError("'edges' must be an array");
  for (const auto& e : es) {
    if (!e.is_array() || e.size() != 3) throw FormatError("each edge must be [tail, head, label]");
    d.edges.push_back({detail::as_string(e[0], "edge tail"), detail::as_string(e[1], "edge head"),
                       field.parse(detail::scalar_text(e[2]))});
  }
  return d;
}

inline AnyDigraphData digraph_data_from_json(const Json& j) {
  auto ctx = field_from_json(detail::member(j, "field"));
  if (ctx.is_prime_field()) return digraph_data_from_json(j, Field<Fp>(ctx));
  return digraph_data_from_json(j, Field<Q>());
}

/// Parses and validates; throws InvalidGraph on structural violations.
inline AnyGraph graph_from_json(const Json& j) {
  return std::visit(
      [](const auto& d) -> AnyGraph {
        using S = std::decay_t<decltype(d.field.zero())>;
        return LabeledDigraph<S>::from_data(d);
      },
      digraph_data_from_json(j));
}

template <FieldScalar S>
Json graph_to_json(const LabeledDigraph<S>& g) {
  Json j;
  j["field"] = field_to_json(g.field().ctx());
  j["vertices"] = g.names();
  Json es = Json::array();
  for (const auto& e : g.edges()) es.push_back({g.name(e.tail), g.name(e.head), e.label.to_string()});
  j["edges"] = std::move(es);
  return j;
}

inline Json graph_to_json(const AnyGraph& g) {
  return std::visit([](const auto& x) { return graph_to_json(x); }, g);
}

inline PartialLinearSpace pls_from_json(const Json& j) {
  PartialLinearSpace d;
  d.points = detail::string_array(detail::member(j, "points"), "point");
  const auto& ls = detail::member(j, "lines");
  if (!ls.is_array()) throw FormatError("'lines' must be an array");
  for (const auto& l : ls) d.lines.push_back(detail::string_array(l, "line"));
  d.validate();
  return d;
}

inline Json pls_to_json(const PartialLinearSpace& d) {
  Json j;
  j["points"] = d.points;
  j["lines"] = d.lines;
  return j;
}

inline Json simple_graph_to_json(const SimpleGraph& g) {
  Json j;
  j["vertices"] = g.vertices;
  Json es = Json::array();
  for (const auto& [a, b] : g.edges) es.push_back({a, b});
  j["edges"] = std::move(es);
  return j;
}

/// Simple graph {"vertices", "edges": [[a,b],...]} read as a partial linear
/// space with two points per line.
inline PartialLinearSpace simple_graph_from_json(const Json& j) {
  PartialLinearSpace d;
  d.points = detail::string_array(detail::member(j, "vertices"), "vertex");
  for (const auto& e : detail::member(j, "edges")) {
    auto pair = detail::string_array(e, "edge endpoint");
    if (pair.size() != 2) throw FormatError("each edge must have two endpoints");
    d.lines.push_back(std::move(pair));
  }
  d.validate();
  return d;
}

/// Cycle notation with 1-based points, e.g. "(1,2)(3,4,5)"; "()" is the identity.
inline Permutation parse_cycles(const std::string& text, std::size_t degree) {
  std::vector<std::uint32_t> img(degree);
  for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<std::uint32_t>(i);
  std::size_t k = 0;
  auto skip = [&] {
    while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
  };
  std::vector<bool> used(degree, false);
  skip();
  while (k < text.size()) {
    if (text[k] != '(') throw FormatError("malformed cycle notation '" + text + "'");
    ++k;
    std::vector<std::uint32_t> cyc;
    while (true) {
      skip();
      if (k < text.size() && text[k] == ')') {
        ++k;
        break;
      }
      std::size_t start = k;
      while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
      if (start == k) throw FormatError("malformed cycle notation '" + text + "'");
      auto v = std::stoull(text.substr(start, k - start));
      if (v == 0 || v > degree) throw FormatError("point " + std::to_string(v) + " out of range in '" + text + "'");
      if (used[v - 1]) throw FormatError("point repeated in '" + text + "'");
      used[v - 1] = true;
      cyc.push_back(static_cast<std::uint32_t>(v - 1));
      skip();
      if (k < text.size() && text[k] == ',') ++k;
    }
    for (std::size_t i = 0; i < cyc.size(); ++i) img[cyc[i]] = cyc[(i + 1) % cyc.size()];
    skip();
  }
  return Permutation(std::move(img));
}

inline std::size_t max_point(const std::string& text) {
  std::size_t best = 0, cur = 0;
  bool in = false;
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      cur = cur * 10 + static_cast<std::size_t>(c - '0');
      in = true;
    } else {
      if (in) best = std::max(best, cur);
      cur = 0;
      in = false;
    }
  }
  if (in) best = std::max(best, cur);
  return best;
}

struct GroupInput {
  CayleyTable table;
  std::vector<std::size_t> generators;
};

/// {"elements", "table", "generators"} or {"permutations": ["(1,2)", ...]}.
inline GroupInput group_from_json(const Json& j) {
  if (j.contains("permutations")) {
    auto texts = detail::string_array(j.at("permutations"), "permutation");
    std::size_t degree = 1;
    for (const auto& t : texts) degree = std::max(degree, max_point(t));
    std::vector<Permutation> perms;
    for (const auto& t : texts) perms.push_back(parse_cycles(t, degree));
    auto table = CayleyTable::from_permutations(perms, degree);
    std::vector<std::size_t> gens;
    for (const auto& p : perms) {
      gens.push_back(table.index_of(p.cycle_string([](std::uint32_t i) { return std::to_string(i + 1); })));
    }
    return {std::move(table), std::move(gens)};
  }
  auto elements = detail::string_array(detail::member(j, "elements"), "element");
  std::vector<std::vector<std::string>> rows;
  const auto& t = detail::member(j, "table");
  if (!t.is_array()) throw FormatError("'table' must be an array of rows");
  for (const auto& row : t) rows.push_back(detail::string_array(row, "table entry"));
  auto table = CayleyTable::from_names(std::move(elements), rows);
  std::vector<std::size_t> gens;
  for (const auto& s : detail::string_array(detail::member(j, "generators"), "generator")) gens.push_back(table.index_of(s));
  return {std::move(table), std::move(gens)};
}

inline Json group_to_json(const CayleyTable& g, const std::vector<std::size_t>& gens) {
  Json j;
  j["elements"] = g.names();
  Json t = Json::array();
  for (std::size_t a = 0; a < g.size(); ++a) {
    Json row = Json::array();
    for (std::size_t b = 0; b < g.size(); ++b) row.push_back(g.name(g.mul(a, b)));
    t.push_back(std::move(row));
  }
  j["table"] = std::move(t);
  Json gs = Json::array();
  for (auto s : gens) gs.push_back(g.name(s));
  j["generators"] = std::move(gs);
  return j;
}

// ---------------------------------------------------------------------------
// Reports

template <FieldScalar S>
Json element_to_json(const LabeledDigraph<S>& g, const AlgebraElement<S>& a) {
  Json j = Json::object();
  for (const auto& [i, c] : a.terms()) j[g.name(i)] = c.to_string();
  return j;
}

template <FieldScalar S>
AlgebraElement<S> element_from_json(const LabeledDigraph<S>& g, const Json& j) {
  if (!j.is_object()) throw FormatError("element must be an object {vertex: scalar}");
  std::vector<typename AlgebraElement<S>::Term> t;
  for (const auto& [k, v] : j.items()) t.emplace_back(g.index_of(k), g.field().parse(detail::scalar_text(v)));
  return AlgebraElement<S>(std::move(t));
}

template <FieldScalar S>
Json matrix_to_json(const Matrix<S>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) r.push_back(m(i, k).to_string());
    rows.push_back(std::move(r));
  }
  return rows;
}

inline Json validation_to_json(const ValidationReport& r) {
  Json j;
  j["valid"] = r.valid;
  j["weakly_connected"] = r.weakly_connected;
  Json issues = Json::array();
  for (const auto& i : r.issues) issues.push_back({{"kind", to_string(i.kind)}, {"detail", i.detail}});
  j["issues"] = std::move(issues);
  return j;
}

template <FieldScalar S>
Json profile_to_json(const LabeledDigraph<S>& g, const GraphProfile& p) {
  Json j;
  j["vertices"] = g.size();
  j["edges"] = g.edge_count();
  j["is_symmetric"] = p.is_symmetric;
  j["weakly_connected"] = p.weakly_connected;
  j["girth"] = p.girth.to_string();
  j["k_min"] = p.k_min.to_string();
  j["k_max"] = p.k_max.to_string();
  Json deg = Json::object();
  for (std::size_t v = 0; v < g.size(); ++v) deg[g.name(v)] = {p.degrees[v].first, p.degrees[v].second};
  j["degrees"] = std::move(deg);
  return j;
}

template <FieldScalar S>
Json simplicity_to_json(const LabeledDigraph<S>& g, const SimplicityReport<S>& r) {
  Json j;
  j["verdict"] = to_string(r.verdict);
  j["cases"] = r.cases;
  Json ws = Json::array();
  for (const auto& w : r.witnesses) {
    Json wj;
    Json ys = Json::array();
    for (auto y : w.Y) ys.push_back(g.name(y));
    wj["Y"] = std::move(ys);
    Json ext = Json::array();
    for (const auto& e : w.external) {
      Json ej;
      ej["vertex"] = g.name(e.vertex);
      ej["alpha"] = e.alpha ? Json(e.alpha->to_string()) : Json(nullptr);
      ej["beta"] = e.beta ? Json(e.beta->to_string()) : Json(nullptr);
      ext.push_back(std::move(ej));
    }
    wj["external"] = std::move(ext);
    ws.push_back(std::move(wj));
  }
  j["ideal_subgraphs"] = std::move(ws);
  Json ideals = Json::array();
  for (const auto& basis : r.ideals) {
    Json b = Json::array();
    for (const auto& v : basis) b.push_back(element_to_json(g, v));
    ideals.push_back(std::move(b));
  }
  j["ideals"] = std::move(ideals);
  if (!r.witnesses.empty()) j["note"] = "every subspace of an ideal-subgraph ideal is itself an ideal";
  return j;
}

template <FieldScalar S>
Json fusion_to_json(const LabeledDigraph<S>& g, const FusionReport<S>& r) {
  Json j;
  j["law_satisfied"] = r.law_satisfied;
  j["dimensions_ok"] = r.dimensions_ok;
  Json axes = Json::array();
  for (const auto& a : r.axes) {
    Json aj;
    aj["axis"] = g.name(a.axis);
    aj["side"] = to_string(a.side);
    Json spec = Json::array();
    for (std::size_t k = 0; k < a.spectrum.size(); ++k) {
      spec.push_back({{"eigenvalue", a.spectrum[k].to_string()}, {"dimension", a.dims[k]}});
    }
    aj["spectrum"] = std::move(spec);
    Json cells = Json::array();
    for (const auto& c : a.cells) {
      Json cj;
      cj["pair"] = {c.lambda.to_string(), c.mu.to_string()};
      Json obs = Json::array(), allowed = Json::array();
      for (const auto& x : c.observed) obs.push_back(x.to_string());
      for (const auto& x : c.allowed) allowed.push_back(x.to_string());
      cj["observed"] = std::move(obs);
      cj["allowed"] = std::move(allowed);
      cj["ok"] = c.ok;
      cells.push_back(std::move(cj));
    }
    aj["cells"] = std::move(cells);
    aj["ok"] = a.ok;
    axes.push_back(std::move(aj));
  }
  j["axes"] = std::move(axes);
  j["violations"] = r.violations;
  return j;
}

template <FieldScalar S>
Json perm_group_to_json(const LabeledDigraph<S>& g, const PermGroup& G) {
  Json j;
  j["order"] = G.order().str();
  Json gens = Json::array();
  for (const auto& p : G.generators()) gens.push_back(p.cycle_string([&](std::uint32_t i) { return g.name(i); }));
  j["generators"] = std::move(gens);
  Json base = Json::array();
  for (auto b : G.base()) base.push_back(g.name(b));
  j["base"] = std::move(base);
  return j;
}

inline Json hypotheses_to_json(const HypothesisStatus& h) {
  Json j;
  Json cs = Json::array();
  for (const auto& c : h.criteria) cs.push_back({{"criterion", c.name}, {"applies", c.applies}, {"evidence", c.evidence}});
  j["criteria"] = std::move(cs);
  Json applies = Json::array();
  for (const auto& c : h.criteria) {
    if (c.applies) applies.push_back(c.name);
  }
  j["applies"] = std::move(applies);
  return j;
}

template <FieldScalar S>
Json rank_support_to_json(const LabeledDigraph<S>& g, const RankSupportAnalysis<S>& r) {
  Json j;
  j["element"] = element_to_json(g, r.element);
  j["support_size"] = r.support.size();
  j["components"] = r.components.size();
  j["is_forest"] = r.is_forest;
  Json trees = Json::array();
  for (const auto& t : r.trees) {
    Json leaves = Json::array();
    for (auto l : t.leaves) leaves.push_back({{"vertex", g.name(l)}, {"degree", g.out_degree(l)}});
    trees.push_back({{"size", t.vertices.size()}, {"leaves", std::move(leaves)}, {"diameter", t.diameter}});
  }
  j["trees"] = std::move(trees);
  j["rank_left"] = r.rank_left;
  j["rank_right"] = r.rank_right;
  j["idempotent"] = r.idempotent;
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back({{"lemma", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
  j["checks"] = std::move(checks);
  return j;
}

template <FieldScalar S>
Json recovery_to_json(const LabeledDigraph<S>& g, const AxisRecoveryReport<S>& r) {
  Json j;
  j["hypotheses"] = hypotheses_to_json(r.hypotheses);
  j["applicable"] = r.applicable;
  j["search_mode"] = to_string(r.search_mode);
  j["idempotents"] = r.idempotent_count;
  j["survivors"] = r.survivors.size();
  Json ex = Json::array();
  for (const auto& a : r.exotic) ex.push_back(element_to_json(g, a));
  j["exotic_idempotents"] = std::move(ex);
  j["lemma_failures"] = r.lemma_failures;
  j["recovered"] = r.recovered();
  j["notes"] = r.notes;
  return j;
}

inline Json construction_to_json(const FruchtConstruction& c) {
  Json j;
  j["verified"] = c.verified;
  j["aut_order"] = c.aut_order.str();
  j["min_degree"] = c.min_degree;
  j["left_action_ok"] = c.action_ok;
  j["pendant_gadgets"] = c.pendant;
  j["tower_heights"] = c.heights;
  j["attempts"] = c.attempts;
  j["vertices"] = c.delta.vertices.size();
  j["edges"] = c.delta.edges.size();
  return j;
}

template <FieldScalar S>
Json algebra_construction_to_json(const AlgebraConstruction<S>& r) {
  Json j;
  j["verified"] = r.verified;
  j["scheme"] = to_string(r.scheme);
  j["alpha"] = r.alpha.to_string();
  j["beta"] = r.beta.to_string();
  j["gadget_graph"] = construction_to_json(r.graph);
  j["algebra_dimension"] = r.gamma ? r.gamma->size() : 0;
  j["aut_order"] = r.aut_order.str();
  j["commutative"] = r.commutative;
  j["simplicity"] = to_string(r.simplicity);
  j["fusion_ok"] = r.fusion_ok ? Json(*r.fusion_ok) : Json(nullptr);
  j["hypotheses"] = hypotheses_to_json(r.hypotheses);
  j["failures"] = r.failures;
  return j;
}

}  // namespace axial

#endif  // AXIAL_IO_HPP
