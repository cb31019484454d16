#ifndef AXIAL_TESTS_SUPPORT_HPP
#define AXIAL_TESTS_SUPPORT_HPP

// Corpus graphs and brute-force oracles shared by the tests and the
// acceptance runner. Nothing here reuses the library's search or
// elimination code.

#include "axial/axial.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace axial::testing {

inline PartialLinearSpace fano_plane() {
  PartialLinearSpace d;
  for (int i = 1; i <= 7; ++i) d.points.push_back("p" + std::to_string(i));
  const int L[7][3] = {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 5, 6}};
  for (const auto& l : L) d.lines.push_back({"p" + std::to_string(l[0]), "p" + std::to_string(l[1]), "p" + std::to_string(l[2])});
  return d;
}

/// GQ(2,2): duads of {1..6} as points, synthemes as lines.
inline PartialLinearSpace gq22() {
  PartialLinearSpace d;
  auto duad = [](int a, int b) { return std::to_string(a) + std::to_string(b); };
  for (int a = 1; a <= 6; ++a)
    for (int b = a + 1; b <= 6; ++b) d.points.push_back(duad(a, b));
  std::set<std::vector<std::string>> seen;
  for (int b = 2; b <= 6; ++b) {
    std::vector<int> rest;
    for (int x = 2; x <= 6; ++x)
      if (x != b) rest.push_back(x);
    // pair rest[0] with each of the other three
    for (int k = 1; k < 4; ++k) {
      std::vector<int> r2;
      for (int j = 1; j < 4; ++j)
        if (j != k) r2.push_back(rest[j]);
      std::vector<std::string> line{duad(1, b), duad(rest[0], rest[k]), duad(r2[0], r2[1])};
      std::sort(line.begin(), line.end());
      if (seen.insert(line).second) d.lines.push_back(line);
    }
  }
  return d;
}

inline SimpleGraph k4_graph() {
  SimpleGraph g{{"a", "b", "c", "d"}, {}};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) g.edges.emplace_back(g.vertices[i], g.vertices[j]);
  return g;
}

inline LabeledDigraph<Fp> heawood(std::uint32_t p, std::uint32_t a, std::uint32_t b) {
  return incidence_graph(fano_plane(), Fp(a, p), Fp(b, p));
}

/// The 3-vertex F_5 graph with the ideal subgraph Y = {y1, y2}.
inline LabeledDigraph<Fp> ideal_example() {
  Field<Fp> f(5);
  return LabeledDigraph<Fp>(f, {"x", "y1", "y2"},
                            {{0, 1, f.from_int(2)}, {0, 2, f.from_int(2)}, {1, 0, f.from_int(4)},
                             {2, 0, f.from_int(4)}, {1, 2, f.from_int(3)}, {2, 1, f.from_int(3)}});
}

/// Symmetric digraph from an undirected edge list; labels supplied per arc.
template <FieldScalar S>
LabeledDigraph<S> from_arcs(const Field<S>& f, std::size_t n,
                            const std::vector<std::tuple<std::size_t, std::size_t, S>>& arcs) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  std::vector<typename LabeledDigraph<S>::Edge> es;
  for (const auto& [t, h, l] : arcs) es.push_back({t, h, l});
  return LabeledDigraph<S>(f, std::move(names), std::move(es));
}

/// Random weakly connected symmetric graph: a random spanning tree plus
/// extra edges, each arc labeled independently from `pick`.
template <FieldScalar S>
LabeledDigraph<S> random_symmetric(std::mt19937_64& rng, const Field<S>& f, std::size_t n, double extra,
                                   const std::function<S(std::mt19937_64&)>& pick, bool label_symmetric = false) {
  std::set<std::pair<std::size_t, std::size_t>> und;
  for (std::size_t v = 1; v < n; ++v) {
    std::uniform_int_distribution<std::size_t> d(0, v - 1);
    und.emplace(d(rng), v);
  }
  std::bernoulli_distribution coin(extra);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (coin(rng)) und.emplace(a, b);
  std::vector<std::tuple<std::size_t, std::size_t, S>> arcs;
  for (auto [a, b] : und) {
    S l = pick(rng);
    arcs.emplace_back(a, b, l);
    arcs.emplace_back(b, a, label_symmetric ? l : pick(rng));
  }
  return from_arcs(f, n, arcs);
}

/// Random digraph (not necessarily symmetric or connected).
template <FieldScalar S>
LabeledDigraph<S> random_digraph(std::mt19937_64& rng, const Field<S>& f, std::size_t n, double density,
                                 const std::function<S(std::mt19937_64&)>& pick) {
  std::bernoulli_distribution coin(density);
  std::vector<std::tuple<std::size_t, std::size_t, S>> arcs;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && coin(rng)) arcs.emplace_back(a, b, pick(rng));
  return from_arcs(f, n, arcs);
}

inline std::function<Fp(std::mt19937_64&)> fp_picker(std::uint32_t p, std::uint32_t lo) {
  return [p, lo](std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> d(lo, p - 1);
    return Fp(d(rng), p);
  };
}

// ---------------------------------------------------------------------------
// Oracles

/// Rank by plain row reduction mod p on a copy of the dense matrix.
inline std::size_t naive_rank_mod_p(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p) {
  std::size_t rank = 0;
  const auto rows = m.size(), cols = rows ? m[0].size() : 0;
  auto power = [p](std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    for (b %= p; e; e >>= 1, b = b * b % p)
      if (e & 1) r = r * b % p;
    return r;
  };
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    auto inv = power(m[rank][c], p - 2);
    for (auto& x : m[rank]) x = x * inv % p;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      auto f = m[r][c];
      for (std::size_t k = 0; k < cols; ++k) m[r][k] = (m[r][k] + (p - f) * m[rank][k]) % p;
    }
    ++rank;
  }
  return rank;
}

/// Number of label-preserving permutations, by backtracking without any
/// refinement: vertices are placed in BFS order and each placement is
/// checked against every earlier one.
template <FieldScalar S>
std::uint64_t naive_automorphism_count(const LabeledDigraph<S>& g) {
  const auto n = g.size();
  std::vector<std::size_t> order;
  std::vector<bool> seen(n, false);
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = true;
    order.push_back(s);
    for (std::size_t k = order.size() - 1; k < order.size(); ++k)
      for (auto w : g.neighbors(order[k]))
        if (!seen[w]) {
          seen[w] = true;
          order.push_back(w);
        }
  }
  std::vector<std::size_t> img(n, n);
  std::vector<bool> used(n, false);
  std::uint64_t count = 0;
  auto same = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
    const S* l1 = g.label(a, b);
    const S* l2 = g.label(c, d);
    if (!l1 || !l2) return !l1 && !l2;
    return *l1 == *l2;
  };
  std::function<void(std::size_t)> go = [&](std::size_t k) {
    if (k == n) {
      ++count;
      return;
    }
    const auto v = order[k];
    for (std::size_t t = 0; t < n; ++t) {
      if (used[t]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) {
        const auto u = order[j];
        ok = same(u, v, img[u], t) && same(v, u, t, img[u]);
      }
      if (!ok) continue;
      used[t] = true;
      img[v] = t;
      go(k + 1);
      used[t] = false;
    }
  };
  go(0);
  return count;
}

/// Size of the group generated by permutations, by closure.
inline std::size_t closure_order(const std::vector<Permutation>& gens, std::size_t degree) {
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<std::vector<std::uint32_t>> queue;
  std::vector<std::uint32_t> id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<std::uint32_t>(i);
  seen.insert(id);
  queue.push_back(id);
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (const auto& g : gens) {
      std::vector<std::uint32_t> h(degree);
      for (std::size_t i = 0; i < degree; ++i) h[i] = static_cast<std::uint32_t>(g(queue[k][i]));
      if (seen.insert(h).second) queue.push_back(h);
    }
  }
  return seen.size();
}

/// Every vector in F_p^n with a*a = a, by dense evaluation of the product.
inline std::vector<std::vector<std::uint32_t>> brute_force_idempotents(const GraphAlgebra<Fp>& A) {
  const auto p = A.field().p();
  const auto n = A.dim();
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> a(n, 0);
  while (true) {
    std::vector<std::uint64_t> sq(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (!a[i]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!a[j]) continue;
        auto prod = A.multiply_basis(i, j);
        for (const auto& [k, c] : prod.terms()) sq[k] = (sq[k] + std::uint64_t{a[i]} * a[j] % p * c.value()) % p;
      }
    }
    bool idem = true;
    for (std::size_t k = 0; k < n && idem; ++k) idem = sq[k] == a[k];
    if (idem) out.push_back(a);
    std::size_t i = 0;
    while (i < n && ++a[i] == p) a[i++] = 0;
    if (i == n) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::uint32_t> dense_values(const AlgebraElement<Fp>& e, std::size_t n) {
  std::vector<std::uint32_t> v(n, 0);
  for (const auto& [i, c] : e.terms()) v[i] = c.value();
  return v;
}

}  // namespace axial::testing

#endif  // AXIAL_TESTS_SUPPORT_HPP
