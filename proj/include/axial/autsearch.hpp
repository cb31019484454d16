#ifndef AXIAL_AUTSEARCH_HPP
#define AXIAL_AUTSEARCH_HPP

// Automorphisms of labeled digraphs by colour refinement and
// individualization. Refinement is canonical: new colours are ranks of
// (colour, sorted multiset of (direction, label, neighbour colour)) and the
// sorted signature table of every round is kept as a trace, so two
// colourings with equal traces assign the same meaning to every colour.

#include "axial/graph.hpp"
#include "axial/perm.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

namespace axial {

template <FieldScalar S>
bool is_graph_automorphism(const LabeledDigraph<S>& g, const Permutation& p) {
  if (p.degree() != g.size()) return false;
  for (std::size_t t = 0; t < g.size(); ++t) {
    if (g.out_degree(t) != g.out_degree(p(t))) return false;
    for (const auto& a : g.out(t)) {
      const S* l = g.label(p(t), p(a.to));
      if (!l || !(*l == a.label)) return false;
    }
  }
  return true;
}

struct AutomorphismSearchStats {
  std::size_t nodes = 0;          // refinements performed
  std::vector<std::size_t> base;  // individualized vertices of the first path
  std::vector<std::size_t> orbit_sizes;
};

namespace detail {

class Refiner {
 public:
  using Colouring = std::vector<std::uint32_t>;
  using Trace = std::vector<std::uint32_t>;

  template <FieldScalar S>
  explicit Refiner(const LabeledDigraph<S>& g) : n_(g.size()), arcs_(g.size()) {
    const auto labels = g.labels();
    auto id = [&](const S& l) {
      return static_cast<std::uint32_t>(std::lower_bound(labels.begin(), labels.end(), l) - labels.begin());
    };
    for (std::size_t v = 0; v < n_; ++v) {
      for (const auto& a : g.out(v)) arcs_[v].push_back({0, id(a.label), static_cast<std::uint32_t>(a.to)});
      for (const auto& a : g.in(v)) arcs_[v].push_back({1, id(a.label), static_cast<std::uint32_t>(a.to)});
    }
  }

  std::size_t size() const { return n_; }

  /// Refines c to the coarsest equitable colouring below it; appends the trace.
  void refine(Colouring& c, Trace& trace) const {
    std::vector<std::vector<std::uint32_t>> sig(n_);
    std::vector<std::uint32_t> order(n_);
    std::size_t colours = count(c);
    while (true) {
      for (std::size_t v = 0; v < n_; ++v) {
        auto& s = sig[v];
        s.clear();
        for (const auto& a : arcs_[v]) {
          s.push_back((a.dir << 31) | a.label);
          s.push_back(c[a.to]);
        }
        sort_pairs(s);
        s.insert(s.begin(), c[v]);
      }
      std::iota(order.begin(), order.end(), std::uint32_t{0});
      std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        if (sig[a] != sig[b]) return sig[a] < sig[b];
        return a < b;
      });
      Colouring next(n_);
      std::uint32_t rank = 0;
      std::size_t start = 0;
      trace.push_back(0xffffffffu);
      for (std::size_t k = 0; k < n_; ++k) {
        if (k > 0 && sig[order[k]] != sig[order[k - 1]]) {
          emit(trace, sig[order[start]], k - start);
          start = k;
          ++rank;
        }
        next[order[k]] = rank;
      }
      emit(trace, sig[order[start]], n_ - start);
      c = std::move(next);
      std::size_t now = static_cast<std::size_t>(rank) + 1;
      if (now == colours) break;
      colours = now;
    }
  }

  static std::size_t count(const Colouring& c) {
    if (c.empty()) return 0;
    std::vector<std::uint32_t> s(c);
    std::sort(s.begin(), s.end());
    return static_cast<std::size_t>(std::unique(s.begin(), s.end()) - s.begin());
  }

  /// Gives v a colour of its own (one past the largest).
  static void individualize(Colouring& c, std::size_t v) {
    c[v] = *std::max_element(c.begin(), c.end()) + 1;
  }

 private:
  struct Arc {
    std::uint32_t dir;
    std::uint32_t label;
    std::uint32_t to;
  };

  static void sort_pairs(std::vector<std::uint32_t>& s) {
    const auto m = s.size() / 2;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> p(m);
    for (std::size_t k = 0; k < m; ++k) p[k] = {s[2 * k], s[2 * k + 1]};
    std::sort(p.begin(), p.end());
    for (std::size_t k = 0; k < m; ++k) {
      s[2 * k] = p[k].first;
      s[2 * k + 1] = p[k].second;
    }
  }

  static void emit(Trace& t, const std::vector<std::uint32_t>& sig, std::size_t count) {
    t.push_back(static_cast<std::uint32_t>(sig.size()));
    t.insert(t.end(), sig.begin(), sig.end());
    t.push_back(static_cast<std::uint32_t>(count));
  }

  std::size_t n_;
  std::vector<std::vector<Arc>> arcs_;
};

}  // namespace detail

/// Generators of Aut(g) (label and direction preserving), with a
/// stabilizer chain. Optional initial colours restrict to colour-preserving
/// automorphisms.
template <FieldScalar S>
PermGroup automorphism_group(const LabeledDigraph<S>& g, AutomorphismSearchStats* stats = nullptr,
                             std::vector<std::uint32_t> initial = {}) {
  using detail::Refiner;
  const auto n = g.size();
  Refiner R(g);
  AutomorphismSearchStats local;
  auto& st = stats ? *stats : local;
  st = {};

  // first path
  struct Level {
    Refiner::Colouring colours;  // refined, before individualizing b
    Refiner::Trace trace;        // trace of the refinement that produced `colours`
    std::size_t b = 0;
    std::vector<std::size_t> cell;
  };
  std::vector<Level> path;
  Refiner::Colouring c = initial.empty() ? Refiner::Colouring(n, 0) : std::move(initial);
  if (c.size() != n) throw std::invalid_argument("initial colouring has wrong size");
  Refiner::Trace t0;
  R.refine(c, t0);
  ++st.nodes;
  Refiner::Trace cur_trace = std::move(t0);
  while (true) {
    // first smallest non-singleton cell
    std::vector<std::size_t> size(n + 1, 0);
    for (auto x : c) ++size[x];
    std::uint32_t best = 0;
    std::size_t best_size = 0;
    for (std::size_t col = 0; col <= n; ++col) {
      if (size[col] > 1 && (best_size == 0 || size[col] < best_size)) {
        best = static_cast<std::uint32_t>(col);
        best_size = size[col];
      }
    }
    Level L;
    L.colours = c;
    L.trace = cur_trace;
    if (best_size == 0) {
      path.push_back(std::move(L));
      break;
    }
    // "first" cell among the smallest: the one containing the lowest vertex
    std::size_t first_vertex = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (size[c[v]] == best_size) {
        first_vertex = v;
        break;
      }
    }
    best = c[first_vertex];
    for (std::size_t v = 0; v < n; ++v) {
      if (c[v] == best) L.cell.push_back(v);
    }
    L.b = L.cell.front();
    Refiner::individualize(c, L.b);
    cur_trace.clear();
    R.refine(c, cur_trace);
    ++st.nodes;
    path.push_back(std::move(L));
  }
  const auto depth = path.size() - 1;  // number of individualized vertices
  for (std::size_t i = 0; i < depth; ++i) st.base.push_back(path[i].b);

  // leaf colour -> vertex in the first-path leaf
  std::vector<std::size_t> leaf_vertex(n);
  for (std::size_t v = 0; v < n; ++v) leaf_vertex[path[depth].colours[v]] = v;

  auto dfs = [&](auto&& self, std::size_t level, const Refiner::Colouring& colours) -> std::optional<Permutation> {
    if (level == depth) {
      std::vector<std::uint32_t> img(n);
      for (std::size_t v = 0; v < n; ++v) img[leaf_vertex[colours[v]]] = static_cast<std::uint32_t>(v);
      Permutation p(std::move(img));
      if (is_graph_automorphism(g, p)) return p;
      return std::nullopt;
    }
    const auto target = path[level].colours[path[level].b];
    for (std::size_t v = 0; v < n; ++v) {
      if (colours[v] != target) continue;
      auto next = colours;
      Refiner::individualize(next, v);
      Refiner::Trace tr;
      R.refine(next, tr);
      ++st.nodes;
      if (tr != path[level + 1].trace) continue;
      if (auto p = self(self, level + 1, next)) return p;
    }
    return std::nullopt;
  };

  std::vector<Permutation> gens;
  std::vector<std::size_t> orbit_sizes(depth, 1);
  for (std::size_t i = depth; i-- > 0;) {
    const auto& L = path[i];
    auto orbit = PermGroup::orbit_under(gens, static_cast<std::uint32_t>(L.b), n);
    std::vector<bool> in_orbit(n, false);
    for (auto o : orbit) in_orbit[o] = true;
    for (auto t : L.cell) {
      if (in_orbit[t]) continue;
      auto colours = L.colours;
      Refiner::individualize(colours, t);
      Refiner::Trace tr;
      R.refine(colours, tr);
      ++st.nodes;
      if (tr != path[i + 1].trace) continue;
      if (auto p = dfs(dfs, i + 1, colours)) {
        gens.push_back(std::move(*p));
        orbit = PermGroup::orbit_under(gens, static_cast<std::uint32_t>(L.b), n);
        std::fill(in_orbit.begin(), in_orbit.end(), false);
        for (auto o : orbit) in_orbit[o] = true;
      }
    }
    orbit_sizes[i] = orbit.size();
  }
  st.orbit_sizes = orbit_sizes;
  return PermGroup(n, std::move(gens));
}

/// Order implied by the search: product of the base orbit sizes.
inline BigInt search_order(const AutomorphismSearchStats& st) {
  BigInt n = 1;
  for (auto s : st.orbit_sizes) n *= s;
  return n;
}

}  // namespace axial

#endif  // AXIAL_AUTSEARCH_HPP
