#ifndef AXIAL_STRUCTURE_HPP
#define AXIAL_STRUCTURE_HPP

// Ideals of graph algebras: ideal subgraphs, the simplicity verdict, ideal
// closure by brute force, and quotients by an ideal.

#include "axial/algebra.hpp"

#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace axial {

class NotAnIdeal : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <FieldScalar S>
struct IdealSubgraphWitness {
  struct External {
    std::size_t vertex;
    std::optional<S> alpha;  // label of (x, y) for y in Y
    std::optional<S> beta;   // label of (y, x)
  };
  std::vector<std::size_t> Y;  // sorted
  std::vector<External> external;
};

/// Maximal ideal subgraphs. Being ideal twins is an equivalence relation
/// (the uniform-attachment condition is transitive), so the maximal sets
/// are its classes of size at least two.
template <FieldScalar S>
std::vector<IdealSubgraphWitness<S>> find_ideal_subgraphs(const LabeledDigraph<S>& g) {
  std::vector<IdealSubgraphWitness<S>> out;
  if (g.field().characteristic() == 2) return out;
  const S half = g.field().from_int(2).inv();
  std::vector<std::size_t> parent(g.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t u = 0; u < g.size(); ++u) {
    for (const auto& a : g.out(u)) {
      if (a.to <= u || !(a.label == half)) continue;
      if (find(u) != find(a.to) && are_ideal_twins(g, u, a.to)) parent[find(u)] = find(a.to);
    }
  }
  std::vector<std::vector<std::size_t>> classes(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) classes[find(v)].push_back(v);
  std::vector<std::vector<std::size_t>> ys;
  for (auto& c : classes) {
    if (c.size() >= 2) ys.push_back(std::move(c));
  }
  std::sort(ys.begin(), ys.end());
  for (auto& Y : ys) {
    IdealSubgraphWitness<S> w;
    const auto y0 = Y.front();
    std::vector<bool> inY(g.size(), false);
    for (auto y : Y) inY[y] = true;
    for (std::size_t x = 0; x < g.size(); ++x) {
      if (inY[x]) continue;
      const S* a = g.label(x, y0);
      const S* b = g.label(y0, x);
      if (!a && !b) continue;
      typename IdealSubgraphWitness<S>::External e{x, std::nullopt, std::nullopt};
      if (a) e.alpha = *a;
      if (b) e.beta = *b;
      w.external.push_back(std::move(e));
    }
    w.Y = std::move(Y);
    out.push_back(std::move(w));
  }
  return out;
}

enum class Verdict { Simple, IdealSubgraphCase, CompleteGraphCase, Both };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Simple: return "Simple";
    case Verdict::IdealSubgraphCase: return "IdealSubgraphCase";
    case Verdict::CompleteGraphCase: return "CompleteGraphCase";
    case Verdict::Both: return "Both";
  }
  return "?";
}

template <FieldScalar S>
struct SimplicityReport {
  Verdict verdict = Verdict::Simple;
  std::vector<IdealSubgraphWitness<S>> witnesses;
  std::vector<std::vector<AlgebraElement<S>>> ideals;  // one basis per witness, then the complete-graph ideal
  std::vector<std::string> cases;                      // "ideal-subgraph case", "complete-graph case"
};

/// Zero-sum combinations over Y, basis y - y0.
template <FieldScalar S>
std::vector<AlgebraElement<S>> ideal_of_subgraph(const Field<S>& f, const std::vector<std::size_t>& Y) {
  std::vector<AlgebraElement<S>> basis;
  for (std::size_t k = 1; k < Y.size(); ++k) {
    basis.push_back(AlgebraElement<S>({{Y[k], f.one()}, {Y[0], -f.one()}}));
  }
  return basis;
}

/// All labels equal 1/(2 - |X|), which needs |X| != 2 in the field.
template <FieldScalar S>
bool is_critical_complete_graph(const LabeledDigraph<S>& g) {
  if (g.size() < 2 || !is_complete(g)) return false;
  const S denom = g.field().from_int(2) - g.field().from_int(static_cast<std::int64_t>(g.size()));
  if (denom.is_zero()) return false;
  const S target = denom.inv();
  for (std::size_t v = 0; v < g.size(); ++v) {
    for (const auto& a : g.out(v)) {
      if (!(a.label == target)) return false;
    }
  }
  return true;
}

template <FieldScalar S>
SimplicityReport<S> simplicity_verdict(const LabeledDigraph<S>& g) {
  if (!weakly_connected(g)) throw NotWeaklyConnected("simplicity needs a weakly connected graph");
  SimplicityReport<S> r;
  r.witnesses = find_ideal_subgraphs(g);
  for (const auto& w : r.witnesses) r.ideals.push_back(ideal_of_subgraph(g.field(), w.Y));
  const bool sub = !r.witnesses.empty();
  const bool complete = is_critical_complete_graph(g);
  if (complete) {
    std::vector<typename AlgebraElement<S>::Term> all;
    for (std::size_t v = 0; v < g.size(); ++v) all.emplace_back(v, g.field().one());
    r.ideals.push_back({AlgebraElement<S>(std::move(all))});
  }
  if (sub) r.cases.push_back("ideal-subgraph case");
  if (complete) r.cases.push_back("complete-graph case");
  r.verdict = sub && complete ? Verdict::Both
              : sub           ? Verdict::IdealSubgraphCase
              : complete      ? Verdict::CompleteGraphCase
                              : Verdict::Simple;
  return r;
}

/// Smallest subspace containing the seeds and closed under multiplication
/// by every vertex on both sides.
template <FieldScalar S>
EchelonBasis<S> ideal_closure(const GraphAlgebra<S>& A, const std::vector<AlgebraElement<S>>& seeds) {
  const auto n = A.dim();
  const S zero = A.field().zero();
  EchelonBasis<S> basis(n, A.field());
  std::vector<AlgebraElement<S>> queue;
  auto push = [&](const AlgebraElement<S>& v) {
    if (basis.dim() < n && basis.insert(v.to_dense(n, zero))) queue.push_back(v);
  };
  for (const auto& s : seeds) push(s);
  for (std::size_t k = 0; k < queue.size() && basis.dim() < n; ++k) {
    const auto v = queue[k];
    for (std::size_t j = 0; j < n && basis.dim() < n; ++j) {
      auto xj = A.vertex(j);
      push(A.multiply(xj, v));
      push(A.multiply(v, xj));
    }
  }
  return basis;
}

template <FieldScalar S>
EchelonBasis<S> ideal_closure(const GraphAlgebra<S>& A, const AlgebraElement<S>& seed) {
  return ideal_closure(A, std::vector<AlgebraElement<S>>{seed});
}

template <FieldScalar S>
bool verify_ideal(const GraphAlgebra<S>& A, const std::vector<AlgebraElement<S>>& basis) {
  const auto n = A.dim();
  EchelonBasis<S> span(n, A.field());
  for (const auto& b : basis) span.insert(b.to_dense(n, A.field().zero()));
  for (const auto& b : basis) {
    for (std::size_t j = 0; j < n; ++j) {
      auto xj = A.vertex(j);
      if (!span.contains(A.multiply(xj, b).to_dense(n, A.field().zero()))) return false;
      if (!span.contains(A.multiply(b, xj).to_dense(n, A.field().zero()))) return false;
    }
  }
  return true;
}

/// Brute-force simplicity: no proper nonzero ideal is generated by a vertex,
/// a difference of two vertices or the sum of all vertices.
template <FieldScalar S>
bool closure_oracle_simple(const GraphAlgebra<S>& A) {
  const auto n = A.dim();
  const S one = A.field().one();
  std::vector<AlgebraElement<S>> seeds;
  for (std::size_t i = 0; i < n; ++i) seeds.push_back(A.vertex(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) seeds.push_back(AlgebraElement<S>({{i, one}, {j, -one}}));
  std::vector<typename AlgebraElement<S>::Term> all;
  for (std::size_t i = 0; i < n; ++i) all.emplace_back(i, one);
  seeds.push_back(AlgebraElement<S>(std::move(all)));
  for (const auto& s : seeds) {
    if (ideal_closure(A, s).dim() < n) return false;
  }
  return true;
}

/// A/I on the basis of vertices whose columns are not pivots of the reduced
/// ideal basis. table[i][j] holds the coordinates of x_i x_j + I.
template <FieldScalar S>
struct QuotientAlgebra {
  std::vector<std::size_t> complement;  // representative vertices, ascending
  std::vector<std::vector<std::vector<S>>> table;

  std::size_t dim() const { return complement.size(); }
};

template <FieldScalar S>
QuotientAlgebra<S> quotient_algebra(const GraphAlgebra<S>& A, const std::vector<AlgebraElement<S>>& ideal) {
  if (!verify_ideal(A, ideal)) throw NotAnIdeal("subspace is not a two-sided ideal");
  const auto n = A.dim();
  const S zero = A.field().zero();
  EchelonBasis<S> I(n, A.field());
  for (const auto& b : ideal) I.insert(b.to_dense(n, zero));
  QuotientAlgebra<S> q;
  for (std::size_t c = 0; c < n; ++c) {
    if (!I.is_pivot(c)) q.complement.push_back(c);
  }
  const auto m = q.complement.size();
  q.table.assign(m, std::vector<std::vector<S>>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      auto r = I.reduce(A.multiply_basis(q.complement[i], q.complement[j]).to_dense(n, zero));
      std::vector<S> coords;
      coords.reserve(m);
      for (auto c : q.complement) coords.push_back(r[c]);
      q.table[i][j] = std::move(coords);
    }
  }
  return q;
}

/// Structure constants of the quotient agree with those of B under the
/// basis bijection complement[k] -> to_B[k].
template <FieldScalar S>
bool quotient_matches(const QuotientAlgebra<S>& q, const GraphAlgebra<S>& B,
                      const std::vector<std::size_t>& to_B) {
  const auto m = q.dim();
  if (B.dim() != m || to_B.size() != m) return false;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      auto prod = B.multiply_basis(to_B[i], to_B[j]).to_dense(m, B.field().zero());
      for (std::size_t k = 0; k < m; ++k) {
        if (!(q.table[i][j][k] == prod[to_B[k]])) return false;
      }
    }
  }
  return true;
}

/// Checks A/I_Y against the algebra of the contracted graph, sending each
/// representative vertex to its image in the contraction.
template <FieldScalar S>
bool quotient_matches_contraction(const GraphAlgebra<S>& A, const std::vector<std::size_t>& Y) {
  const auto& g = A.graph();
  auto contracted = contract_ideal_subgraph(g, Y);
  GraphAlgebra<S> B(contracted);
  auto q = quotient_algebra(A, ideal_of_subgraph(A.field(), Y));
  std::vector<bool> inY(g.size(), false);
  for (auto y : Y) inY[y] = true;
  const auto y0 = *std::min_element(Y.begin(), Y.end());
  std::vector<std::size_t> to_B;
  for (auto c : q.complement) {
    const auto rep = inY[c] ? y0 : c;
    // vertices before y0 keep their position; those after shift by the members of Y before them
    std::size_t pos = 0;
    for (std::size_t v = 0; v < rep; ++v) pos += !inY[v] || v == y0;
    to_B.push_back(pos);
  }
  return quotient_matches(q, B, to_B);
}

}  // namespace axial

#endif  // AXIAL_STRUCTURE_HPP
