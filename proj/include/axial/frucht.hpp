#ifndef AXIAL_FRUCHT_HPP
#define AXIAL_FRUCHT_HPP

// Graphs with a prescribed finite automorphism group, built from a Cayley
// graph by replacing each generator edge with a rigid gadget made of copies
// of the (asymmetric, cubic) Frucht graph, and the graph algebras of their
// incidence graphs. Every construction is checked by automorphism search.

#include "axial/autgrp.hpp"
#include "axial/fusion.hpp"
#include "axial/structure.hpp"

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace axial {

class VerificationFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FieldTooSmall : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// 12-vertex cubic graph with trivial automorphism group, LCF [-5,-2,-4,2,5,-2,2,5,-2,-5,4,2].
inline std::vector<std::pair<std::size_t, std::size_t>> frucht_edges() {
  static constexpr std::array<int, 12> lcf{-5, -2, -4, 2, 5, -2, 2, 5, -2, -5, 4, 2};
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < 12; ++i) {
    e.emplace_back(i, (i + 1) % 12);
    auto j = static_cast<std::size_t>((static_cast<int>(i) + lcf[i] + 12) % 12);
    if (i < j) e.emplace_back(i, j);
  }
  return e;
}

inline SimpleGraph frucht_graph() {
  SimpleGraph g;
  for (std::size_t i = 0; i < 12; ++i) g.vertices.push_back("f" + std::to_string(i));
  for (auto [a, b] : frucht_edges()) g.edges.emplace_back(g.vertices[a], g.vertices[b]);
  return g;
}

/// Symmetric digraph on a simple graph, every edge labeled `label`.
template <FieldScalar S>
LabeledDigraph<S> symmetric_digraph(const SimpleGraph& d, const S& label) {
  std::unordered_map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < d.vertices.size(); ++i) idx.emplace(d.vertices[i], i);
  std::vector<typename LabeledDigraph<S>::Edge> edges;
  for (const auto& [a, b] : d.edges) {
    edges.push_back({idx.at(a), idx.at(b), label});
    edges.push_back({idx.at(b), idx.at(a), label});
  }
  return LabeledDigraph<S>(Field<S>::of(label), d.vertices, std::move(edges));
}

struct FruchtOptions {
  std::size_t tag_offset = 0;  // added to every tower height; different offsets give different sizes
  std::size_t retries = 3;     // extra attempts with all heights raised by one
};

struct FruchtConstruction {
  SimpleGraph delta;
  std::vector<std::size_t> cayley_vertices;  // vertex of each group element
  std::vector<std::size_t> heights;          // tower height per generator
  std::vector<Permutation> left_action;      // left multiplication by each generator
  bool pendant = false;
  bool action_ok = false;
  std::size_t min_degree = 0;
  BigInt aut_order = 0;
  std::vector<Permutation> aut_generators;
  std::size_t attempts = 0;
  bool verified = false;
};

namespace detail {

// Designated vertices of the Frucht graph copy: q and r are adjacent,
// pendants use the adjacent pair (6, 7).
inline constexpr std::size_t kQ = 0;
inline constexpr std::size_t kR = 1;
inline constexpr std::size_t kPendantA = 6;
inline constexpr std::size_t kPendantB = 7;

struct DeltaBuilder {
  std::vector<std::string> names;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::map<std::vector<std::size_t>, std::size_t> key;  // structural descriptor -> vertex

  std::size_t add(std::vector<std::size_t> k, std::string name) {
    auto id = names.size();
    key.emplace(std::move(k), id);
    names.push_back(std::move(name));
    return id;
  }

  /// A Frucht copy identified by a descriptor prefix; returns its 12 vertices.
  std::array<std::size_t, 12> phi(const std::vector<std::size_t>& prefix, const std::string& tag) {
    std::array<std::size_t, 12> v{};
    for (std::size_t i = 0; i < 12; ++i) {
      auto k = prefix;
      k.push_back(i);
      v[i] = add(std::move(k), tag + "." + std::to_string(i));
    }
    for (auto [a, b] : frucht_edges()) edges.emplace_back(v[a], v[b]);
    return v;
  }
};

enum : std::size_t { kCayley = 0, kArc = 1, kHalf = 2, kPendant = 3 };

}  // namespace detail

/// One attempt with fixed heights; no verification.
inline FruchtConstruction build_frucht_graph(const CayleyTable& G, const std::vector<std::size_t>& S,
                                             const std::vector<std::size_t>& heights) {
  using namespace detail;
  FruchtConstruction out;
  out.heights = heights;
  DeltaBuilder b;
  if (G.size() == 1) {
    b.phi({kPendant, 0}, "f");
    out.cayley_vertices = {0};
  } else {
    for (std::size_t a = 0; a < G.size(); ++a) out.cayley_vertices.push_back(b.add({kCayley, a}, "g" + std::to_string(a)));
    std::vector<std::size_t> degree(G.size(), 0);
    for (std::size_t k = 0; k < S.size(); ++k) {
      const auto s = S[k];
      const auto tag = std::to_string(k);
      if (G.is_involution(s)) {
        for (std::size_t a = 0; a < G.size(); ++a) {
          // a half gadget owned by a, bridged to the half owned by a*s
          std::vector<std::array<std::size_t, 12>> copies;
          for (std::size_t j = 0; j <= heights[k]; ++j) {
            copies.push_back(b.phi({kHalf, k, a, j}, "i" + tag + ":g" + std::to_string(a) + ":" + std::to_string(j)));
          }
          b.edges.emplace_back(out.cayley_vertices[a], copies[0][kQ]);
          for (std::size_t j = 0; j + 1 < copies.size(); ++j) b.edges.emplace_back(copies[j][kR], copies[j + 1][kQ]);
          ++degree[a];
        }
        for (std::size_t a = 0; a < G.size(); ++a) {
          const auto c = G.mul(a, s);
          if (a < c) b.edges.emplace_back(b.key.at({kHalf, k, a, 0, kR}), b.key.at({kHalf, k, c, 0, kR}));
        }
      } else {
        for (std::size_t a = 0; a < G.size(); ++a) {
          const auto c = G.mul(a, s);
          std::vector<std::array<std::size_t, 12>> copies;
          for (std::size_t j = 0; j <= heights[k]; ++j) {
            copies.push_back(b.phi({kArc, k, a, j}, "s" + tag + ":g" + std::to_string(a) + ":" + std::to_string(j)));
          }
          b.edges.emplace_back(out.cayley_vertices[a], copies[0][kQ]);
          b.edges.emplace_back(copies[0][kR], out.cayley_vertices[c]);
          for (std::size_t j = 0; j + 1 < copies.size(); ++j) b.edges.emplace_back(copies[j][kR], copies[j + 1][kQ]);
          ++degree[a];
          ++degree[c];
        }
      }
    }
    if (*std::min_element(degree.begin(), degree.end()) < 3) {
      out.pendant = true;
      for (std::size_t a = 0; a < G.size(); ++a) {
        auto p = b.phi({kPendant, a}, "p:g" + std::to_string(a));
        b.edges.emplace_back(out.cayley_vertices[a], p[kPendantA]);
        b.edges.emplace_back(out.cayley_vertices[a], p[kPendantB]);
      }
    }
  }
  out.delta.vertices = b.names;
  for (auto [u, v] : b.edges) out.delta.edges.emplace_back(b.names[u], b.names[v]);

  // left multiplication by each generator, on structural descriptors
  for (auto s : S) {
    std::vector<std::uint32_t> img(b.names.size());
    for (const auto& [k, v] : b.key) {
      auto t = k;
      const auto elem_pos = k[0] == kCayley ? 1 : k[0] == kPendant ? 1 : 2;
      t[elem_pos] = G.mul(s, k[elem_pos]);
      img[v] = static_cast<std::uint32_t>(b.key.at(t));
    }
    out.left_action.emplace_back(std::move(img));
  }
  return out;
}

/// Builds the gadget graph and checks |Aut| = |G|, min degree >= 3 and that
/// left multiplication acts by automorphisms; raises all heights and retries
/// on failure.
inline FruchtConstruction prescribe_automorphism_group(const CayleyTable& G, const std::vector<std::size_t>& S,
                                                       const FruchtOptions& opt = {}) {
  G.check_generators(S);
  std::vector<std::size_t> heights(S.size());
  for (std::size_t k = 0; k < S.size(); ++k) heights[k] = k + 1 + opt.tag_offset;
  FruchtConstruction c;
  for (std::size_t attempt = 0; attempt <= opt.retries; ++attempt) {
    c = build_frucht_graph(G, S, heights);
    c.attempts = attempt + 1;
    auto g = symmetric_digraph(c.delta, Fp(1, 2));
    c.min_degree = g.size();
    for (std::size_t v = 0; v < g.size(); ++v) c.min_degree = std::min(c.min_degree, g.out_degree(v));
    c.action_ok = std::all_of(c.left_action.begin(), c.left_action.end(),
                              [&](const Permutation& p) { return is_graph_automorphism(g, p); });
    auto aut = automorphism_group(g);
    c.aut_order = aut.order();
    c.aut_generators = aut.generators();
    c.verified = c.aut_order == G.size() && c.min_degree >= 3 && c.action_ok;
    if (c.verified) break;
    for (auto& h : heights) ++h;
  }
  return c;
}

enum class LabelScheme { Commutative, NonCommutative, AllOne };

inline const char* to_string(LabelScheme s) {
  switch (s) {
    case LabelScheme::Commutative: return "commutative";
    case LabelScheme::NonCommutative: return "non-commutative";
    case LabelScheme::AllOne: return "all-one";
  }
  return "?";
}

template <FieldScalar S>
struct AlgebraConstruction {
  FruchtConstruction graph;
  LabelScheme scheme = LabelScheme::Commutative;
  S alpha;
  S beta;
  std::optional<LabeledDigraph<S>> gamma;
  BigInt aut_order = 0;  // of the labeled incidence graph
  HypothesisStatus hypotheses;
  Verdict simplicity = Verdict::Simple;
  std::optional<bool> fusion_ok;  // unset when labels are 1
  bool commutative = false;
  bool verified = false;
  std::vector<std::string> failures;
};

/// Default labels: 2 (and 3 for the second label) in the given field.
template <FieldScalar S>
std::pair<S, S> default_labels(const Field<S>& f, LabelScheme scheme) {
  if (scheme == LabelScheme::AllOne) return {f.one(), f.one()};
  auto a = f.from_int(2), b = scheme == LabelScheme::Commutative ? f.from_int(2) : f.from_int(3);
  return {a, b};
}

template <FieldScalar S>
AlgebraConstruction<S> build_algebra_with_aut(const CayleyTable& G, const std::vector<std::size_t>& gens,
                                              const Field<S>& field, LabelScheme scheme,
                                              std::optional<std::pair<S, S>> labels = std::nullopt,
                                              const FruchtOptions& opt = {}) {
  const auto q = field.characteristic();
  if (scheme == LabelScheme::AllOne && q != 2) {
    throw std::invalid_argument("the all-one scheme is for F_2");
  }
  if (q == 2 && scheme != LabelScheme::AllOne) throw FieldTooSmall("F_2 only admits the all-one labeling");
  if (scheme == LabelScheme::NonCommutative && q == 3) {
    throw FieldTooSmall("two distinct labels outside {0,1} need at least 4 field elements");
  }
  auto [alpha, beta] = labels ? *labels : default_labels(field, scheme);
  if (scheme != LabelScheme::AllOne) {
    if (alpha.is_zero() || alpha.is_one() || beta.is_zero() || beta.is_one()) {
      throw InvalidLabel("labels must differ from 0 and 1");
    }
    if (scheme == LabelScheme::Commutative && !(alpha == beta)) throw InvalidLabel("commutative scheme needs alpha = beta");
    if (scheme == LabelScheme::NonCommutative && alpha == beta) throw InvalidLabel("non-commutative scheme needs alpha != beta");
  }

  AlgebraConstruction<S> r;
  r.scheme = scheme;
  r.alpha = alpha;
  r.beta = beta;
  r.graph = prescribe_automorphism_group(G, gens, opt);
  if (!r.graph.verified) r.failures.push_back("gadget graph does not have the prescribed automorphism group");

  r.gamma = incidence_graph(r.graph.delta, alpha, beta);
  const auto& gamma = *r.gamma;
  r.aut_order = automorphism_group(gamma).order();
  if (r.aut_order != G.size()) r.failures.push_back("labeled incidence graph has automorphism group of order " + r.aut_order.str());
  r.commutative = is_label_symmetric(gamma);

  r.hypotheses = check_theorem_hypotheses(gamma);
  const auto& crit = scheme == LabelScheme::AllOne ? kIncidenceF2 : kIncidence;
  if (!r.hypotheses.applies(crit)) r.failures.push_back(crit + " does not apply");

  r.simplicity = simplicity_verdict(gamma).verdict;
  if (r.simplicity != Verdict::Simple) r.failures.push_back("algebra is not simple");

  if (scheme != LabelScheme::AllOne) {
    GraphAlgebra<S> A(gamma);
    auto law = graph_law_for(gamma);
    bool ok = check_fusion(A, law, Side::Left).law_satisfied;
    if (!r.commutative) ok = ok && check_fusion(A, law, Side::Right).law_satisfied;
    r.fusion_ok = ok;
    if (!ok) r.failures.push_back("fusion law violated");
  }
  r.verified = r.failures.empty();
  return r;
}

}  // namespace axial

#endif  // AXIAL_FRUCHT_HPP
