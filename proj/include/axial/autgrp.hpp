#ifndef AXIAL_AUTGRP_HPP
#define AXIAL_AUTGRP_HPP

// Automorphism-group side of graph algebras: hypothesis checks for the
// rigidity criteria, exhaustive idempotent enumeration over small prime
// fields, recovery of the axes among idempotents, and the rank/support
// analysis of single elements.

#include "axial/algebra.hpp"
#include "axial/autsearch.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

namespace axial {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InfiniteField : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// p(x_i x_j) = p(x_i) p(x_j) for all basis pairs.
template <FieldScalar S>
bool is_algebra_automorphism(const GraphAlgebra<S>& A, const Permutation& p) {
  if (p.degree() != A.dim()) return false;
  auto image = [&](const AlgebraElement<S>& e) {
    std::vector<typename AlgebraElement<S>::Term> t;
    for (const auto& [i, c] : e.terms()) t.emplace_back(p(i), c);
    return AlgebraElement<S>(std::move(t));
  };
  for (std::size_t i = 0; i < A.dim(); ++i) {
    for (std::size_t j = 0; j < A.dim(); ++j) {
      if (!(image(A.multiply_basis(i, j)) == A.multiply_basis(p(i), p(j)))) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Hypotheses

/// A bipartite symmetric graph read as the incidence graph of a graph
/// (every line-vertex of degree 2) or of a partial linear space with three
/// points per line.
struct IncidenceOrigin {
  enum class Kind { Graph, PartialLinearSpace };
  Kind kind = Kind::Graph;
  std::vector<std::size_t> points;
  std::vector<std::size_t> lines;
  std::size_t min_point_degree = 0;
};

template <FieldScalar S>
std::vector<IncidenceOrigin> incidence_origins(const LabeledDigraph<S>& g) {
  std::vector<IncidenceOrigin> out;
  if (g.size() < 2 || !is_symmetric(g) || !weakly_connected(g)) return out;
  std::vector<int> side(g.size(), -1);
  side[0] = 0;
  std::deque<std::size_t> q{0};
  while (!q.empty()) {
    auto u = q.front();
    q.pop_front();
    for (auto w : g.neighbors(u)) {
      if (side[w] < 0) {
        side[w] = 1 - side[u];
        q.push_back(w);
      } else if (side[w] == side[u]) {
        return out;
      }
    }
  }
  auto gr = girth(g);
  if (gr.is_finite() && gr.value() < 6) return out;  // two points on two lines
  for (int line_side : {1, 0}) {
    IncidenceOrigin o;
    for (std::size_t v = 0; v < g.size(); ++v) (side[v] == line_side ? o.lines : o.points).push_back(v);
    if (o.lines.empty() || o.points.empty()) continue;
    const auto d = g.out_degree(o.lines.front());
    bool uniform = std::all_of(o.lines.begin(), o.lines.end(), [&](std::size_t l) { return g.out_degree(l) == d; });
    if (!uniform || (d != 2 && d != 3)) continue;
    o.kind = d == 2 ? IncidenceOrigin::Kind::Graph : IncidenceOrigin::Kind::PartialLinearSpace;
    o.min_point_degree = g.size();
    for (auto p : o.points) o.min_point_degree = std::min(o.min_point_degree, g.out_degree(p));
    out.push_back(std::move(o));
  }
  return out;
}

struct CriterionCheck {
  std::string name;
  bool applies = false;
  std::vector<std::string> evidence;  // each checked condition, with "ok"/"fails"
};

struct HypothesisStatus {
  GraphProfile profile;
  std::vector<CriterionCheck> criteria;
  std::optional<IncidenceOrigin> origin;

  bool any() const {
    return std::any_of(criteria.begin(), criteria.end(), [](const CriterionCheck& c) { return c.applies; });
  }
  bool applies(const std::string& name) const {
    for (const auto& c : criteria) {
      if (c.name == name) return c.applies;
    }
    return false;
  }
};

inline const std::string kGirthDegree = "girth-degree criterion";
inline const std::string kIncidence = "incidence-graph criterion";
inline const std::string kIncidenceF2 = "F2 incidence criterion";

template <FieldScalar S>
HypothesisStatus check_theorem_hypotheses(const LabeledDigraph<S>& g) {
  HypothesisStatus st;
  st.profile = profile(g);
  const auto& pr = st.profile;
  auto note = [](CriterionCheck& c, const std::string& what, bool ok) {
    c.evidence.push_back(what + (ok ? ": ok" : ": fails"));
    c.applies = c.applies && ok;
  };
  bool no01 = true, all_one = true;
  for (const auto& l : g.labels()) {
    if (l.is_one()) no01 = false;
    if (!l.is_one()) all_one = false;
  }
  const bool f2 = g.field().characteristic() == 2 && g.field().is_finite();

  CriterionCheck gd{kGirthDegree, true, {}};
  note(gd, "symmetric", pr.is_symmetric);
  note(gd, "weakly connected", pr.weakly_connected);
  note(gd, "labels differ from 0 and 1", no01);
  note(gd, "finite girth (g = " + pr.girth.to_string() + ")", pr.girth.is_finite());
  if (pr.girth.is_finite()) {
    const auto g3 = static_cast<long long>(pr.girth.value()) - 3;
    const auto kmin = static_cast<long long>(pr.k_min.value());
    const auto kmax = static_cast<long long>(pr.k_max.value());
    note(gd, "2 < k_min = " + std::to_string(kmin) + " <= g-3 = " + std::to_string(g3), 2 < kmin && kmin <= g3);
    const auto bound = std::min(2 * (kmin - 1), g3);
    note(gd, "k_max = " + std::to_string(kmax) + " <= min(2(k_min-1), g-3) = " + std::to_string(bound),
         kmax <= bound);
  }
  st.criteria.push_back(std::move(gd));

  auto origins = incidence_origins(g);
  auto pick = [&](auto pred) -> std::optional<IncidenceOrigin> {
    for (const auto& o : origins) {
      if (pred(o)) return o;
    }
    return std::nullopt;
  };
  auto good = [](const IncidenceOrigin& o) {
    return o.kind == IncidenceOrigin::Kind::Graph ? o.min_point_degree >= 3 : o.min_point_degree >= 4;
  };
  auto origin = pick(good);
  if (!origin && !origins.empty()) origin = origins.front();
  st.origin = origin;

  CriterionCheck inc{kIncidence, true, {}};
  note(inc, "incidence graph of a graph or of a partial linear space with 3 points per line", origin.has_value());
  if (origin) {
    if (origin->kind == IncidenceOrigin::Kind::Graph) {
      note(inc, "every vertex of the graph has degree >= 3 (min " + std::to_string(origin->min_point_degree) + ")",
           origin->min_point_degree >= 3);
    } else {
      note(inc, "every point on >= 4 lines (min " + std::to_string(origin->min_point_degree) + ")",
           origin->min_point_degree >= 4);
    }
  }
  note(inc, "labels differ from 0 and 1", no01);
  st.criteria.push_back(std::move(inc));

  CriterionCheck inc2{kIncidenceF2, true, {}};
  note(inc2, "field F_2 with every label 1", f2 && all_one);
  bool graph_origin = false;
  std::size_t mind = 0;
  for (const auto& o : origins) {
    if (o.kind == IncidenceOrigin::Kind::Graph && o.min_point_degree >= mind) {
      graph_origin = true;
      mind = o.min_point_degree;
    }
  }
  note(inc2, "incidence graph of a connected graph", graph_origin);
  if (graph_origin) note(inc2, "every vertex of the graph has degree >= 3 (min " + std::to_string(mind) + ")", mind >= 3);
  st.criteria.push_back(std::move(inc2));
  return st;
}

// ---------------------------------------------------------------------------
// Idempotent enumeration

struct EnumerationOptions {
  enum class Mode { Exhaustive, SupportBounded };
  Mode mode = Mode::Exhaustive;
  std::size_t support_bound = 0;
  std::uint64_t cap = std::uint64_t{1} << 24;
  unsigned threads = 1;
};

inline const char* to_string(EnumerationOptions::Mode m) {
  return m == EnumerationOptions::Mode::Exhaustive ? "exhaustive-field-enumeration" : "support-bounded";
}

namespace detail {

/// a*a has coordinate a_z (a_z + s_z) with s_z = sum_y (a(z,y) + a(y,z)) a_y,
/// so a is idempotent iff a_z = 0 or a_z + s_z = 1 for every z.
struct IdempotentKernel {
  std::uint64_t p;
  std::size_t n;
  std::vector<std::vector<std::pair<std::size_t, std::uint64_t>>> w;  // w[i] = (z, weight) touched by a_i

  explicit IdempotentKernel(const GraphAlgebra<Fp>& A) : p(A.field().p()), n(A.dim()), w(A.dim()) {
    const auto& g = A.graph();
    std::vector<std::vector<std::uint64_t>> sum(n);
    for (std::size_t z = 0; z < n; ++z) {
      std::map<std::size_t, std::uint64_t> acc;
      for (const auto& a : g.out(z)) acc[a.to] = (acc[a.to] + a.label.value()) % p;
      for (const auto& a : g.in(z)) acc[a.to] = (acc[a.to] + a.label.value()) % p;
      for (auto [y, c] : acc) {
        if (c != 0) w[y].emplace_back(z, c);
      }
    }
  }

  bool good(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& s, std::size_t z) const {
    return a[z] == 0 || (a[z] + s[z]) % p == 1;
  }

  std::vector<std::vector<std::uint64_t>> sweep(std::uint64_t lo, std::uint64_t hi) const {
    std::vector<std::vector<std::uint64_t>> found;
    if (lo >= hi) return found;
    std::vector<std::uint64_t> a(n, 0), s(n, 0);
    auto x = lo;
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = x % p;
      x /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (auto [z, c] : w[i]) s[z] = (s[z] + c * a[i]) % p;
    }
    std::size_t bad = 0;
    std::vector<char> is_bad(n, 0);
    for (std::size_t z = 0; z < n; ++z) {
      is_bad[z] = !good(a, s, z);
      bad += is_bad[z];
    }
    auto recheck = [&](std::size_t z) {
      char b = !good(a, s, z);
      bad += b;
      bad -= is_bad[z];
      is_bad[z] = b;
    };
    for (auto idx = lo; idx < hi; ++idx) {
      if (bad == 0) found.push_back(a);
      // odometer: each touched digit moves by +1 mod p, also when it wraps
      for (std::size_t i = 0; i < n; ++i) {
        a[i] = a[i] + 1 == p ? 0 : a[i] + 1;
        for (auto [z, c] : w[i]) {
          s[z] = (s[z] + c) % p;
          recheck(z);
        }
        recheck(i);
        if (a[i] != 0) break;
      }
    }
    return found;
  }
};

inline bool pow_within(std::uint64_t base, std::size_t exp, std::uint64_t cap, std::uint64_t& out) {
  out = 1;
  for (std::size_t k = 0; k < exp; ++k) {
    if (base != 0 && out > cap / base) return false;
    out *= base;
  }
  return out <= cap;
}

}  // namespace detail

/// All idempotents (exhaustive) or all with support size <= k, sorted
/// lexicographically by coordinate vector.
template <FieldScalar S>
std::vector<AlgebraElement<S>> enumerate_idempotents(const GraphAlgebra<S>& A, const EnumerationOptions& opt = {}) {
  if constexpr (!std::is_same_v<S, Fp>) {
    throw InfiniteField("idempotent enumeration needs a finite field");
  } else {
    detail::IdempotentKernel K(A);
    const auto p = K.p, n = K.n;
    std::vector<std::vector<std::uint64_t>> found;
    if (opt.mode == EnumerationOptions::Mode::Exhaustive) {
      std::uint64_t total = 0;
      if (!detail::pow_within(p, n, opt.cap, total)) {
        throw BudgetExceeded("p^dim exceeds the enumeration cap of " + std::to_string(opt.cap));
      }
      const unsigned T = std::max(1u, opt.threads);
      std::vector<std::vector<std::vector<std::uint64_t>>> parts(T);
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < T; ++t) {
        const auto lo = total / T * t + std::min<std::uint64_t>(t, total % T);
        const auto hi = total / T * (t + 1) + std::min<std::uint64_t>(t + 1, total % T);
        if (T == 1) {
          parts[t] = K.sweep(lo, hi);
        } else {
          pool.emplace_back([&, t, lo, hi] { parts[t] = K.sweep(lo, hi); });
        }
      }
      for (auto& th : pool) th.join();
      for (auto& part : parts) found.insert(found.end(), part.begin(), part.end());
    } else {
      // budget: number of candidates sum_{j<=k} C(n,j) (p-1)^j
      const auto k = std::min(opt.support_bound, n);
      long double total = 0;
      long double binom = 1;
      for (std::size_t j = 0; j <= k; ++j) {
        if (j > 0) binom = binom * static_cast<long double>(n - j + 1) / static_cast<long double>(j);
        long double term = binom;
        for (std::size_t r = 0; r < j; ++r) term *= static_cast<long double>(p - 1);
        total += term;
      }
      if (total > static_cast<long double>(opt.cap)) {
        throw BudgetExceeded("support-bounded search exceeds the enumeration cap of " + std::to_string(opt.cap));
      }
      const auto& g = A.graph();
      std::vector<std::size_t> supp;
      std::vector<std::uint64_t> a(n, 0);
      auto check = [&]() {
        for (auto z : supp) {
          std::uint64_t s = 0;
          for (const auto& arc : g.out(z)) s += arc.label.value() * a[arc.to] % p;
          for (const auto& arc : g.in(z)) s += arc.label.value() * a[arc.to] % p;
          if ((a[z] + s) % p != 1) return false;
        }
        return true;
      };
      auto assign = [&](auto&& self, std::size_t k2) -> void {
        if (k2 == supp.size()) {
          if (check()) found.push_back(a);
          return;
        }
        for (std::uint64_t c = 1; c < p; ++c) {
          a[supp[k2]] = c;
          self(self, k2 + 1);
        }
        a[supp[k2]] = 0;
      };
      auto choose = [&](auto&& self, std::size_t from) -> void {
        assign(assign, 0);
        if (supp.size() == k) return;
        for (std::size_t v = from; v < n; ++v) {
          supp.push_back(v);
          self(self, v + 1);
          supp.pop_back();
        }
      };
      choose(choose, 0);
    }
    std::sort(found.begin(), found.end());
    std::vector<AlgebraElement<Fp>> out;
    out.reserve(found.size());
    for (const auto& v : found) {
      std::vector<AlgebraElement<Fp>::Term> t;
      for (std::size_t i = 0; i < n; ++i) {
        if (v[i]) t.emplace_back(i, Fp(static_cast<std::uint32_t>(v[i]), static_cast<std::uint32_t>(p)));
      }
      out.emplace_back(std::move(t));
    }
    return out;
  }
}

// ---------------------------------------------------------------------------
// Rank / support analysis

enum class CheckStatus { Pass, Fail, NotApplicable };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::NotApplicable: return "n/a";
  }
  return "?";
}

struct TreeData {
  std::vector<std::size_t> vertices;
  std::vector<std::size_t> leaves;  // vertices of degree <= 1 inside the tree
  std::size_t diameter = 0;
};

struct LemmaCheck {
  std::string name;
  CheckStatus status = CheckStatus::NotApplicable;
  std::string detail;
};

template <FieldScalar S>
struct RankSupportAnalysis {
  AlgebraElement<S> element;
  std::vector<std::size_t> support;
  std::vector<std::vector<std::size_t>> components;
  bool is_forest = false;
  std::vector<TreeData> trees;  // filled when the support is a forest
  std::size_t rank_left = 0;
  std::size_t rank_right = 0;
  bool idempotent = false;
  std::vector<LemmaCheck> checks;

  bool all_pass() const {
    return std::none_of(checks.begin(), checks.end(), [](const LemmaCheck& c) { return c.status == CheckStatus::Fail; });
  }
};

namespace detail {

template <FieldScalar S>
std::vector<std::size_t> bfs_dist(const LabeledDigraph<S>& g, const std::vector<char>& in, std::size_t src) {
  std::vector<std::size_t> d(g.size(), static_cast<std::size_t>(-1));
  d[src] = 0;
  std::deque<std::size_t> q{src};
  while (!q.empty()) {
    auto u = q.front();
    q.pop_front();
    for (auto w : g.neighbors(u)) {
      if (in[w] && d[w] == static_cast<std::size_t>(-1)) {
        d[w] = d[u] + 1;
        q.push_back(w);
      }
    }
  }
  return d;
}

}  // namespace detail

template <FieldScalar S>
RankSupportAnalysis<S> rank_support_analysis(const GraphAlgebra<S>& A, const AlgebraElement<S>& a) {
  const auto& g = A.graph();
  RankSupportAnalysis<S> r;
  r.element = a;
  r.support = a.support();
  // Connectivity of the underlying induced subgraph. Primitive idempotents are
  // sometimes said to have strongly connected support; the argument only gives
  // the undirected version, so that is all we test.
  r.components = induced_components(g, r.support);
  r.rank_left = A.adjoint(a, Side::Left).rank();
  r.rank_right = A.adjoint(a, Side::Right).rank();
  r.idempotent = A.is_idempotent(a);

  std::vector<char> in(g.size(), 0);
  for (auto v : r.support) in[v] = 1;
  std::size_t induced_edges = 0;
  for (auto v : r.support) {
    for (auto w : g.neighbors(v)) induced_edges += in[w] && v < w;
  }
  r.is_forest = induced_edges + r.components.size() == r.support.size();
  if (r.is_forest) {
    for (const auto& comp : r.components) {
      TreeData t;
      t.vertices = comp;
      for (auto v : comp) {
        std::size_t deg = 0;
        for (auto w : g.neighbors(v)) deg += in[w];
        if (deg <= 1) t.leaves.push_back(v);
      }
      auto d0 = detail::bfs_dist(g, in, comp.front());
      auto far = comp.front();
      for (auto v : comp) {
        if (d0[v] > d0[far]) far = v;
      }
      auto d1 = detail::bfs_dist(g, in, far);
      for (auto v : comp) t.diameter = std::max(t.diameter, d1[v]);
      r.trees.push_back(std::move(t));
    }
  }

  const auto gr = girth(g);
  const bool sym = is_symmetric(g);
  auto add = [&](std::string name, CheckStatus st, std::string detail) {
    r.checks.push_back({std::move(name), st, std::move(detail)});
  };
  const auto ncomp = r.components.size();

  // components: an idempotent's support has at most rank(K_a) components
  if (r.idempotent && !a.is_zero()) {
    bool ok = ncomp <= r.rank_left && ncomp <= r.rank_right;
    add("components", ok ? CheckStatus::Pass : CheckStatus::Fail,
        std::to_string(ncomp) + " components, ranks " + std::to_string(r.rank_left) + "/" +
            std::to_string(r.rank_right));
  } else {
    add("components", CheckStatus::NotApplicable, "not a nonzero idempotent");
  }

  // tree corollary: rank <= g-3 forces a forest with sum(|T|-|L|+1) <= rank
  if (sym && !a.is_zero()) {
    std::size_t tree_sum = 0;
    for (const auto& t : r.trees) tree_sum += t.vertices.size() - t.leaves.size() + 1;
    for (auto [nm, rk] : {std::pair<const char*, std::size_t>{"tree (left)", r.rank_left},
                          std::pair<const char*, std::size_t>{"tree (right)", r.rank_right}}) {
      const bool applies = gr.is_infinite() || rk + 3 <= gr.value();
      if (!applies) {
        add(nm, CheckStatus::NotApplicable, "rank " + std::to_string(rk) + " > g-3");
        continue;
      }
      bool ok = r.is_forest && tree_sum <= rk;
      add(nm, ok ? CheckStatus::Pass : CheckStatus::Fail,
          std::string(r.is_forest ? "forest" : "not a forest") + ", sum(|T|-|L|+1) = " + std::to_string(tree_sum) +
              ", rank " + std::to_string(rk));
    }
  } else {
    add("tree (left)", CheckStatus::NotApplicable, "needs a symmetric graph and a nonzero element");
    add("tree (right)", CheckStatus::NotApplicable, "needs a symmetric graph and a nonzero element");
  }

  // leaves: idempotent whose support is a tree
  const bool tree = sym && r.idempotent && r.is_forest && ncomp == 1;
  if (tree) {
    const auto& t = r.trees.front();
    const auto n = t.vertices.size();
    const auto l = t.leaves.size();
    const auto rmin = std::min(r.rank_left, r.rank_right);
    if (gr.is_infinite() || t.diameter + 3 <= gr.value()) {
      std::size_t bound = n - l + 1;
      for (auto v : t.leaves) bound += g.out_degree(v) - 1;
      add("leaves (i)", rmin >= bound ? CheckStatus::Pass : CheckStatus::Fail,
          "rank " + std::to_string(rmin) + " >= " + std::to_string(bound));
    } else {
      add("leaves (i)", CheckStatus::NotApplicable, "diameter > g-3");
    }
    if (gr.is_finite() && t.diameter + 2 == gr.value() && t.diameter >= 4) {
      bool ok = true;
      std::size_t worst = 0;
      for (auto u : t.leaves) {
        auto du = detail::bfs_dist(g, in, u);
        for (auto v : t.leaves) {
          if (v <= u || du[v] != t.diameter) continue;
          auto bound = t.diameter + g.out_degree(u) + g.out_degree(v) - 4;
          worst = std::max(worst, bound);
          ok = ok && rmin >= bound;
        }
      }
      add("leaves (ii)", ok ? CheckStatus::Pass : CheckStatus::Fail,
          "rank " + std::to_string(rmin) + " >= " + std::to_string(worst));
    } else {
      add("leaves (ii)", CheckStatus::NotApplicable, "needs diameter g-2 >= 4");
    }
  } else {
    add("leaves (i)", CheckStatus::NotApplicable, "needs an idempotent with tree support");
    add("leaves (ii)", CheckStatus::NotApplicable, "needs an idempotent with tree support");
  }
  return r;
}

// ---------------------------------------------------------------------------
// Axis recovery

template <FieldScalar S>
struct AxisRecoveryReport {
  HypothesisStatus hypotheses;
  bool applicable = false;
  EnumerationOptions::Mode search_mode = EnumerationOptions::Mode::Exhaustive;
  std::size_t idempotent_count = 0;
  std::vector<AlgebraElement<S>> survivors;  // idempotents passing the criterion filters
  std::vector<AlgebraElement<S>> exotic;     // survivors that are not vertices
  std::size_t lemma_failures = 0;            // failed lemma checks over all idempotents
  std::vector<std::string> notes;

  bool recovered() const { return applicable && exotic.empty() && lemma_failures == 0; }
};

/// Enumerates idempotents and keeps those that an algebra automorphism could
/// send a vertex to under the applicable criteria:
///   girth-degree: primitive, both ranks <= 1 + k_max;
///   incidence (both variants): rank and 1-eigenspace profile
///   (r+, r-, dim E1(L), dim E1(R)) equal to that of some vertex.
/// Every survivor should be a vertex.
template <FieldScalar S>
AxisRecoveryReport<S> verify_axes_recoverable(const GraphAlgebra<S>& A, const EnumerationOptions& opt = {}) {
  AxisRecoveryReport<S> rep;
  rep.hypotheses = check_theorem_hypotheses(A.graph());
  rep.search_mode = opt.mode;
  if (!rep.hypotheses.any()) {
    rep.notes.push_back("no criterion applies; no claim made");
    return rep;
  }
  rep.applicable = true;
  const auto idem = enumerate_idempotents(A, opt);
  rep.idempotent_count = idem.size();

  const bool by_girth = rep.hypotheses.applies(kGirthDegree);
  const bool by_profile = rep.hypotheses.applies(kIncidence) || rep.hypotheses.applies(kIncidenceF2);
  const std::size_t kmax = rep.hypotheses.profile.k_max.value();

  using Profile = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>;
  auto profile_of = [&](const AlgebraElement<S>& a, std::size_t rl, std::size_t rr) {
    return Profile{rl, rr, A.fixed_space_dim(a, Side::Left), A.fixed_space_dim(a, Side::Right)};
  };
  std::set<Profile> vertex_profiles;
  if (by_profile) {
    for (std::size_t v = 0; v < A.dim(); ++v) {
      auto x = A.vertex(v);
      vertex_profiles.insert(profile_of(x, A.adjoint(x, Side::Left).rank(), A.adjoint(x, Side::Right).rank()));
    }
  }

  for (const auto& a : idem) {
    if (a.is_zero()) continue;
    auto an = rank_support_analysis(A, a);
    for (const auto& c : an.checks) rep.lemma_failures += c.status == CheckStatus::Fail;
    bool keep = false;
    if (by_girth && an.rank_left <= 1 + kmax && an.rank_right <= 1 + kmax && A.is_primitive_axis(a)) keep = true;
    if (!keep && by_profile && vertex_profiles.count(profile_of(a, an.rank_left, an.rank_right))) keep = true;
    if (!keep) continue;
    rep.survivors.push_back(a);
    const bool is_vertex = a.support_size() == 1 && a.terms().front().second.is_one();
    if (!is_vertex) rep.exotic.push_back(a);
  }
  if (opt.mode != EnumerationOptions::Mode::Exhaustive) {
    rep.notes.push_back("support-bounded search: idempotents with larger support were not examined");
  }
  return rep;
}

}  // namespace axial

#endif  // AXIAL_AUTGRP_HPP
