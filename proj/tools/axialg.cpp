// axialg: command-line front end for the axial library.
//
// Exit codes: 0 success / verified, 1 a mathematical check failed,
// 2 usage or input error.

#include "axial/axial.hpp"
#include "axial/io.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace axial;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string in;
  std::string out;
  std::string format = "json";
  std::string field;
  std::string alpha;
  std::string beta;
  std::string labels;
  std::string law;
  std::string side = "left";
  std::string scheme = "commutative";
  std::string emit_dot;
  std::uint64_t budget = std::uint64_t{1} << 24;
  std::size_t support_bound = 0;
  unsigned threads = 1;
  std::size_t tag_offset = 0;
  bool check_round_trip = false;
  bool analyze = false;
};

/// What a command produces: a JSON report, a plain-text rendering, an
/// optional graph for --format dot / --emit-dot, and the exit code.
struct Result {
  Json json;
  std::string text;
  std::optional<std::string> dot;
  int code = 0;
};

FieldCtx parse_field(const std::string& s) {
  if (s.empty()) throw UsageError("--field is required (a prime p or Q)");
  if (s == "Q" || s == "q") return FieldCtx::rationals();
  std::uint64_t p = 0;
  try {
    std::size_t used = 0;
    p = std::stoull(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
  } catch (const std::exception&) {
    throw UsageError("--field must be a prime or Q, got '" + s + "'");
  }
  return FieldCtx::prime(p);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

Side parse_side(const std::string& s) {
  if (s == "left") return Side::Left;
  if (s == "right") return Side::Right;
  throw UsageError("--side must be left, right or both");
}

template <FieldScalar S>
std::string element_text(const LabeledDigraph<S>& g, const AlgebraElement<S>& a) {
  if (a.is_zero()) return "0";
  std::string s;
  for (const auto& [i, c] : a.terms()) {
    if (!s.empty()) s += " + ";
    s += (c.is_one() ? "" : c.to_string() + "*") + g.name(i);
  }
  return s;
}

template <FieldScalar S>
std::string graph_text(const LabeledDigraph<S>& g) {
  std::ostringstream t;
  t << g.size() << " vertices, " << g.edge_count() << " edges over " << g.field().ctx().name() << "\n";
  for (const auto& e : g.edges()) t << "  " << g.name(e.tail) << " -> " << g.name(e.head) << "  " << e.label << "\n";
  return t.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// ---------------------------------------------------------------------------
// commands on a graph

Result cmd_validate(const Options& o) {
  auto j = read_json_file(o.in);
  auto data = digraph_data_from_json(j);
  Result r;
  std::visit(
      [&](const auto& d) {
        auto rep = validate(d);
        r.json = validation_to_json(rep);
        std::ostringstream t;
        t << "valid: " << yes_no(rep.valid) << "\nweakly connected: " << yes_no(rep.weakly_connected) << "\n";
        for (const auto& i : rep.issues) t << "  " << to_string(i.kind) << ": " << i.detail << "\n";
        r.text = t.str();
        if (rep.valid) {
          r.dot = to_dot(std::decay_t<decltype(LabeledDigraph<std::decay_t<decltype(d.field.zero())>>::from_data(d))>::from_data(d));
        } else {
          r.code = 2;
        }
      },
      data);
  return r;
}

template <FieldScalar S>
Result cmd_profile(const LabeledDigraph<S>& g, const Options&) {
  auto p = profile(g);
  Result r{profile_to_json(g, p), {}, to_dot(g)};
  std::ostringstream t;
  t << "vertices: " << g.size() << "\nedges: " << g.edge_count() << "\nsymmetric: " << yes_no(p.is_symmetric)
    << "\nweakly connected: " << yes_no(p.weakly_connected) << "\ngirth: " << p.girth.to_string()
    << "\nk_min: " << p.k_min.to_string() << "\nk_max: " << p.k_max.to_string() << "\n";
  r.text = t.str();
  return r;
}

template <FieldScalar S>
Result cmd_simplicity(const LabeledDigraph<S>& g, const Options&) {
  auto rep = simplicity_verdict(g);
  Result r{simplicity_to_json(g, rep), {}, to_dot(g)};
  std::ostringstream t;
  t << "verdict: " << to_string(rep.verdict) << "\n";
  if (rep.verdict == Verdict::Simple) {
    t << "  [simplicity criterion] no ideal subgraph and not a critical complete graph\n";
  }
  for (const auto& c : rep.cases) t << "  [" << c << "]\n";
  for (const auto& basis : rep.ideals) {
    t << "  ideal spanned by:";
    for (const auto& v : basis) t << " {" << element_text(g, v) << "}";
    t << "\n";
  }
  r.text = t.str();
  r.code = rep.verdict == Verdict::Simple ? 0 : 1;
  return r;
}

template <FieldScalar S>
Result cmd_fusion(const LabeledDigraph<S>& g, const Options& o) {
  GraphAlgebra<S> A(g);
  FusionLaw<S> law = graph_law_for(g);
  if (!o.law.empty()) {
    std::vector<S> F;
    for (const auto& s : split_list(o.law)) F.push_back(g.field().parse(s));
    law = FusionLaw<S>::graph_type(std::move(F));
  }
  std::vector<Side> sides;
  if (o.side == "both") {
    sides = {Side::Left, Side::Right};
  } else {
    sides = {parse_side(o.side)};
  }
  Result r;
  r.dot = to_dot(g);
  bool all = true;
  Json by_side = Json::object();
  std::ostringstream t;
  for (auto side : sides) {
    auto rep = check_fusion(A, law, side);
    all = all && rep.law_satisfied && rep.dimensions_ok;
    by_side[to_string(side)] = fusion_to_json(g, rep);
    for (const auto& ax : rep.axes) {
      t << "axis " << g.name(ax.axis) << " (" << to_string(side) << "): spectrum";
      for (std::size_t k = 0; k < ax.spectrum.size(); ++k) t << " " << ax.spectrum[k] << "^" << ax.dims[k];
      t << "\n";
      for (const auto& c : ax.cells) {
        if (c.observed.empty()) continue;
        t << "  " << c.lambda << " * " << c.mu << " -> {";
        for (std::size_t k = 0; k < c.observed.size(); ++k) t << (k ? "," : "") << c.observed[k];
        t << "}  law {";
        for (std::size_t k = 0; k < c.allowed.size(); ++k) t << (k ? "," : "") << c.allowed[k];
        t << "}  " << (c.ok ? "ok" : "VIOLATION") << "\n";
      }
    }
  }
  t << "[graph-type fusion law] " << (all ? "satisfied" : "violated") << "\n";
  r.json["law_satisfied"] = all;
  Json F = Json::array();
  for (const auto& f : law.eigenvalues()) F.push_back(f.to_string());
  r.json["law"] = std::move(F);
  r.json["sides"] = std::move(by_side);
  r.text = t.str();
  r.code = all ? 0 : 1;
  return r;
}

template <FieldScalar S>
Result cmd_aut(const LabeledDigraph<S>& g, const Options&) {
  AutomorphismSearchStats st;
  auto G = automorphism_group(g, &st);
  Result r{perm_group_to_json(g, G), {}, to_dot(g)};
  r.json["search_nodes"] = st.nodes;
  std::ostringstream t;
  t << "order: " << G.order() << "\ngenerators:\n";
  for (const auto& p : G.generators()) t << "  " << p.cycle_string([&](std::uint32_t i) { return g.name(i); }) << "\n";
  r.text = t.str();
  return r;
}

EnumerationOptions enumeration_options(const Options& o) {
  EnumerationOptions e;
  e.cap = o.budget;
  e.threads = std::max(1u, o.threads);
  if (o.support_bound > 0) {
    e.mode = EnumerationOptions::Mode::SupportBounded;
    e.support_bound = o.support_bound;
  }
  return e;
}

template <FieldScalar S>
Result cmd_idempotents(const LabeledDigraph<S>& g, const Options& o) {
  GraphAlgebra<S> A(g);
  const auto opt = enumeration_options(o);
  auto idem = enumerate_idempotents(A, opt);
  Result r;
  r.dot = to_dot(g);
  r.json["field"] = g.field().ctx().name();
  r.json["mode"] = to_string(opt.mode);
  r.json["count"] = idem.size();
  Json list = Json::array();
  std::ostringstream t;
  t << idem.size() << " idempotents (" << to_string(opt.mode) << ")\n";
  for (const auto& a : idem) {
    if (o.analyze && !a.is_zero()) {
      list.push_back(rank_support_to_json(g, rank_support_analysis(A, a)));
    } else {
      list.push_back(element_to_json(g, a));
    }
    t << "  " << element_text(g, a) << "\n";
  }
  r.json["idempotents"] = std::move(list);
  r.text = t.str();
  return r;
}

template <FieldScalar S>
Result cmd_recover(const LabeledDigraph<S>& g, const Options& o) {
  GraphAlgebra<S> A(g);
  auto rep = verify_axes_recoverable(A, enumeration_options(o));
  Result r{recovery_to_json(g, rep), {}, to_dot(g)};
  std::ostringstream t;
  for (const auto& c : rep.hypotheses.criteria) {
    t << "[" << c.name << "] " << (c.applies ? "applies" : "does not apply") << "\n";
    for (const auto& e : c.evidence) t << "    " << e << "\n";
  }
  if (rep.applicable) {
    t << rep.idempotent_count << " idempotents, " << rep.survivors.size() << " pass the criterion filters, "
      << rep.exotic.size() << " are not vertices\n";
    for (const auto& a : rep.exotic) t << "  exotic: " << element_text(g, a) << "\n";
  }
  for (const auto& n : rep.notes) t << n << "\n";
  r.text = t.str();
  r.code = rep.recovered() ? 0 : 1;
  return r;
}

template <FieldScalar S>
Result cmd_quotient(const LabeledDigraph<S>& g, const Options&) {
  GraphAlgebra<S> A(g);
  Result r;
  r.dot = to_dot(g);
  bool all = true;
  Json list = Json::array();
  std::ostringstream t;
  for (const auto& w : find_ideal_subgraphs(g)) {
    auto q = quotient_algebra(A, ideal_of_subgraph(g.field(), w.Y));
    const bool match = quotient_matches_contraction(A, w.Y);
    all = all && match;
    Json item;
    Json ys = Json::array();
    for (auto y : w.Y) ys.push_back(g.name(y));
    item["Y"] = std::move(ys);
    item["quotient_dimension"] = q.dim();
    item["matches_contraction"] = match;
    item["contracted_graph"] = graph_to_json(contract_ideal_subgraph(g, w.Y));
    list.push_back(std::move(item));
    t << "Y = {";
    for (std::size_t k = 0; k < w.Y.size(); ++k) t << (k ? "," : "") << g.name(w.Y[k]);
    t << "}: A/I_Y has dimension " << q.dim() << ", contraction " << (match ? "matches" : "DOES NOT match") << "\n";
  }
  if (list.empty()) t << "no ideal subgraph\n";
  r.json["ideal_subgraphs"] = std::move(list);
  r.text = t.str();
  r.code = all ? 0 : 1;
  return r;
}

// ---------------------------------------------------------------------------
// constructions

template <FieldScalar S>
Result graph_result(const LabeledDigraph<S>& g, const Options& o) {
  Result r{graph_to_json(g), graph_text(g), to_dot(g)};
  if (o.check_round_trip) {
    const auto text = r.json.dump();
    const bool ok = graph_to_json(graph_from_json(Json::parse(text))).dump() == text;
    std::cerr << "round-trip: " << (ok ? "ok" : "MISMATCH") << "\n";
    if (!ok) r.code = 1;
  }
  return r;
}

template <FieldScalar S>
std::pair<S, S> labels_from(const Field<S>& f, const Options& o) {
  if (o.alpha.empty()) throw UsageError("--alpha is required");
  S a = f.parse(o.alpha);
  S b = o.beta.empty() ? a : f.parse(o.beta);
  return {a, b};
}

Result cmd_incidence(const Options& o) {
  auto j = read_json_file(o.in);
  PartialLinearSpace d = j.contains("vertices") ? simple_graph_from_json(j) : pls_from_json(j);
  auto ctx = parse_field(o.field);
  if (ctx.is_prime_field()) {
    Field<Fp> f(ctx);
    auto [a, b] = labels_from(f, o);
    return graph_result(incidence_graph(d, a, b), o);
  }
  Field<Q> f;
  auto [a, b] = labels_from(f, o);
  return graph_result(incidence_graph(d, a, b), o);
}

template <FieldScalar S>
Result cayley_in(const Field<S>& f, const GroupInput& G, const Options& o) {
  auto texts = split_list(o.labels);
  if (texts.empty()) throw UsageError("--labels is required (one per generator, or one for all)");
  if (texts.size() != 1 && texts.size() != G.generators.size()) {
    throw UsageError("--labels needs one value, or one per generator (" + std::to_string(G.generators.size()) + ")");
  }
  std::vector<S> labels;
  for (std::size_t k = 0; k < G.generators.size(); ++k) labels.push_back(f.parse(texts[texts.size() == 1 ? 0 : k]));
  return graph_result(cayley_graph(G.table, G.generators, labels, f), o);
}

Result cmd_cayley(const Options& o) {
  auto G = group_from_json(read_json_file(o.in));
  auto ctx = parse_field(o.field);
  if (ctx.is_prime_field()) return cayley_in(Field<Fp>(ctx), G, o);
  return cayley_in(Field<Q>(), G, o);
}

LabelScheme parse_scheme(const std::string& s) {
  if (s == "commutative") return LabelScheme::Commutative;
  if (s == "non-commutative" || s == "noncommutative") return LabelScheme::NonCommutative;
  if (s == "all-one") return LabelScheme::AllOne;
  throw UsageError("--scheme must be commutative, non-commutative or all-one");
}

template <FieldScalar S>
Result frucht_in(const Field<S>& f, const GroupInput& G, const Options& o) {
  std::optional<std::pair<S, S>> labels;
  if (!o.alpha.empty()) labels = labels_from(f, o);
  FruchtOptions fo;
  fo.tag_offset = o.tag_offset;
  auto c = build_algebra_with_aut(G.table, G.generators, f, parse_scheme(o.scheme), labels, fo);
  Result r;
  r.json["certificate"] = algebra_construction_to_json(c);
  if (c.gamma) {
    auto gr = graph_result(*c.gamma, o);
    r.json["graph"] = std::move(gr.json);
    r.dot = gr.dot;
    if (gr.code) r.code = gr.code;
  }
  std::ostringstream t;
  t << "group of order " << G.table.size() << ", scheme " << to_string(c.scheme) << ", labels " << c.alpha << ", "
    << c.beta << "\n";
  t << "gadget graph: " << c.graph.delta.vertices.size() << " vertices, |Aut| = " << c.graph.aut_order << "\n";
  t << "incidence algebra: dimension " << (c.gamma ? c.gamma->size() : 0) << ", |Aut| = " << c.aut_order
    << ", simplicity " << to_string(c.simplicity) << "\n";
  for (const auto& fl : c.failures) t << "  failure: " << fl << "\n";
  t << (c.verified ? "verified" : "NOT verified") << "\n";
  r.text = t.str();
  if (!c.verified) r.code = 1;
  return r;
}

Result cmd_frucht(const Options& o) {
  auto G = group_from_json(read_json_file(o.in));
  auto ctx = parse_field(o.field);
  if (ctx.is_prime_field()) return frucht_in(Field<Fp>(ctx), G, o);
  return frucht_in(Field<Q>(), G, o);
}

// ---------------------------------------------------------------------------

template <class F>
Result on_graph(const Options& o, F&& f) {
  auto g = graph_from_json(read_json_file(o.in));
  return std::visit([&](const auto& x) { return f(x, o); }, g);
}

void write_out(const Options& o, const std::string& s) {
  if (o.out.empty()) {
    std::cout << s;
    return;
  }
  std::ofstream out(o.out);
  if (!out) throw UsageError("cannot write '" + o.out + "'");
  out << s;
}

int emit(const Options& o, const Result& r) {
  if (!o.emit_dot.empty()) {
    if (!r.dot) throw UsageError("this command has no graph to write as DOT");
    std::ofstream out(o.emit_dot);
    if (!out) throw UsageError("cannot write '" + o.emit_dot + "'");
    out << *r.dot;
  }
  if (o.format == "json") {
    write_out(o, r.json.dump(2) + "\n");
  } else if (o.format == "text") {
    write_out(o, r.text);
  } else if (o.format == "dot") {
    if (!r.dot) throw UsageError("this command has no graph to write as DOT");
    write_out(o, *r.dot);
  } else {
    throw UsageError("--format must be json, text or dot");
  }
  return r.code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Axial algebras of labeled digraphs"};
  app.require_subcommand(1, 1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--in", o.in, "input JSON file")->required();
    sub->add_option("--out", o.out, "write the report here instead of stdout");
    sub->add_option("--format", o.format, "json, text or dot")->check(CLI::IsMember({"json", "text", "dot"}));
    sub->add_option("--emit-dot", o.emit_dot, "also write the graph as DOT to this file");
  };
  auto enumeration = [&](CLI::App* sub) {
    sub->add_option("--budget", o.budget, "maximum number of candidate vectors");
    sub->add_option("--support-bound", o.support_bound, "only idempotents with at most this many nonzero coordinates");
    sub->add_option("--threads", o.threads, "worker threads for the exhaustive sweep");
  };
  auto labels = [&](CLI::App* sub) {
    sub->add_option("--field", o.field, "prime p or Q")->required();
    sub->add_option("--alpha", o.alpha, "label on point -> line edges");
    sub->add_option("--beta", o.beta, "label on line -> point edges (defaults to alpha)");
    sub->add_flag("--check-round-trip", o.check_round_trip, "re-parse the emitted graph and compare");
  };

  auto* validate_cmd = app.add_subcommand("validate", "check a graph file for structural errors");
  common(validate_cmd);
  auto* profile_cmd = app.add_subcommand("profile", "degrees, girth and connectivity");
  common(profile_cmd);
  auto* simplicity_cmd = app.add_subcommand("simplicity", "decide whether the algebra is simple");
  common(simplicity_cmd);
  auto* fusion_cmd = app.add_subcommand("fusion", "check the graph-type fusion law for every axis");
  common(fusion_cmd);
  fusion_cmd->add_option("--side", o.side, "left, right or both")->check(CLI::IsMember({"left", "right", "both"}));
  fusion_cmd->add_option("--law", o.law, "eigenvalues of the law, comma separated (default: 1, labels, 0)");
  auto* aut_cmd = app.add_subcommand("aut", "automorphism group of the labeled graph");
  common(aut_cmd);
  auto* idem_cmd = app.add_subcommand("idempotents", "enumerate idempotents over a finite field");
  common(idem_cmd);
  enumeration(idem_cmd);
  idem_cmd->add_flag("--analyze", o.analyze, "include rank and support analysis for each idempotent");
  auto* recover_cmd = app.add_subcommand("recover-axes", "check that no idempotent can replace a vertex axis");
  common(recover_cmd);
  enumeration(recover_cmd);
  auto* incidence_cmd = app.add_subcommand("incidence", "incidence graph of a graph or partial linear space");
  common(incidence_cmd);
  labels(incidence_cmd);
  auto* cayley_cmd = app.add_subcommand("cayley", "Cayley graph of a group");
  common(cayley_cmd);
  cayley_cmd->add_option("--field", o.field, "prime p or Q")->required();
  cayley_cmd->add_option("--labels", o.labels, "labels per generator, comma separated");
  cayley_cmd->add_flag("--check-round-trip", o.check_round_trip, "re-parse the emitted graph and compare");
  auto* frucht_cmd = app.add_subcommand("frucht", "algebra with a prescribed automorphism group");
  common(frucht_cmd);
  labels(frucht_cmd);
  frucht_cmd->add_option("--scheme", o.scheme, "commutative, non-commutative or all-one");
  frucht_cmd->add_option("--tag-offset", o.tag_offset, "extra gadget height");
  auto* quotient_cmd = app.add_subcommand("quotient", "quotients by ideal-subgraph ideals");
  common(quotient_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    Result r;
    auto* sub = app.get_subcommands().front();
    const auto name = sub->get_name();
    if (name == "validate") {
      r = cmd_validate(o);
    } else if (name == "profile") {
      r = on_graph(o, [](const auto& g, const Options& opt) { return cmd_profile(g, opt); });
    } else if (name == "simplicity") {
      r = on_graph(o, [](const auto& g, const Options& opt) { return cmd_simplicity(g, opt); });
    } else if (name == "fusion") {
      r = on_graph(o, [](const auto& g, const Options& opt) { return cmd_fusion(g, opt); });
    } else if (name == "aut") {
      r = on_graph(o, [](const auto& g, const Options& opt) { return cmd_aut(g, opt); });
    } else if (name == "idempotents") {
      r = on_graph(o, [](const auto& g, const Options& opt) { return cmd_idempotents(g, opt); });
    } else if (name == "recover-axes") {
      r = on_graph(o, [](const auto& g, const Options& opt) { return cmd_recover(g, opt); });
    } else if (name == "quotient") {
      r = on_graph(o, [](const auto& g, const Options& opt) { return cmd_quotient(g, opt); });
    } else if (name == "incidence") {
      r = cmd_incidence(o);
    } else if (name == "cayley") {
      r = cmd_cayley(o);
    } else if (name == "frucht") {
      r = cmd_frucht(o);
    }
    const int code = emit(o, r);
    if (code == 2) std::cerr << "error: input is not a valid graph\n";
    return code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
