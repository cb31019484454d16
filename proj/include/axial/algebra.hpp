#ifndef AXIAL_ALGEBRA_HPP
#define AXIAL_ALGEBRA_HPP

// The algebra A of a labeled digraph: basis X, x*x = x, x*y = a(x,y)(x + y)
// on an edge (x,y), and 0 for distinct vertices without an edge (x,y).

#include "axial/graph.hpp"
#include "axial/linalg.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace axial {

class NotSemisimple : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class Side { Left, Right };

inline const char* to_string(Side s) { return s == Side::Left ? "left" : "right"; }

/// Sparse vector in the vertex basis: (index, coefficient) pairs sorted by
/// index, no zero coefficients stored.
template <FieldScalar S>
class AlgebraElement {
 public:
  using Term = std::pair<std::size_t, S>;

  AlgebraElement() = default;

  /// Terms in any order; repeated indices are summed and zeros dropped.
  explicit AlgebraElement(std::vector<Term> terms) : terms_(std::move(terms)) { normalize(); }

  static AlgebraElement basis(std::size_t i, const S& one) { return AlgebraElement({{i, one}}); }

  static AlgebraElement from_dense(const std::vector<S>& v) {
    AlgebraElement e;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_zero()) e.terms_.emplace_back(i, v[i]);
    }
    return e;
  }

  std::vector<S> to_dense(std::size_t n, const S& zero) const {
    std::vector<S> v(n, zero);
    for (const auto& [i, c] : terms_) v.at(i) = c;
    return v;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }

  std::vector<std::size_t> support() const {
    std::vector<std::size_t> s;
    s.reserve(terms_.size());
    for (const auto& t : terms_) s.push_back(t.first);
    return s;
  }

  const S* coeff(std::size_t i) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), i,
                               [](const Term& t, std::size_t k) { return t.first < k; });
    if (it == terms_.end() || it->first != i) return nullptr;
    return &it->second;
  }

  AlgebraElement scaled(const S& c) const {
    if (c.is_zero()) return {};
    AlgebraElement e = *this;
    for (auto& t : e.terms_) t.second *= c;
    return e;
  }

  friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
    return merge(a, b, false);
  }
  friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
    return merge(a, b, true);
  }
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  static AlgebraElement merge(const AlgebraElement& a, const AlgebraElement& b, bool negate) {
    AlgebraElement r;
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].first < b.terms_[j].first)) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || b.terms_[j].first < a.terms_[i].first) {
        auto t = b.terms_[j++];
        if (negate) t.second = -t.second;
        r.terms_.push_back(t);
      } else {
        S c = negate ? a.terms_[i].second - b.terms_[j].second : a.terms_[i].second + b.terms_[j].second;
        if (!c.is_zero()) r.terms_.emplace_back(a.terms_[i].first, c);
        ++i;
        ++j;
      }
    }
    return r;
  }

  void normalize() {
    std::stable_sort(terms_.begin(), terms_.end(),
                     [](const Term& a, const Term& b) { return a.first < b.first; });
    std::vector<Term> out;
    for (auto& t : terms_) {
      if (!out.empty() && out.back().first == t.first) {
        out.back().second += t.second;
      } else {
        out.push_back(std::move(t));
      }
    }
    std::erase_if(out, [](const Term& t) { return t.second.is_zero(); });
    terms_ = std::move(out);
  }

  std::vector<Term> terms_;
};

/// Matrix of L_a (column j = a*x_j) or R_a (column j = x_j*a). The rank is
/// computed on first request and shared between copies.
template <FieldScalar S>
class AdjointMatrix {
 public:
  AdjointMatrix(Side side, AlgebraElement<S> base, Matrix<S> m)
      : side_(side), base_(std::move(base)), m_(std::move(m)), cache_(std::make_shared<Cache>()) {}

  Side side() const { return side_; }
  const AlgebraElement<S>& base() const { return base_; }
  const Matrix<S>& matrix() const { return m_; }

  std::size_t rank() const {
    std::call_once(cache_->once, [this] { cache_->rank = m_.rank(); });
    return cache_->rank;
  }

 private:
  struct Cache {
    std::once_flag once;
    std::size_t rank = 0;
  };
  Side side_;
  AlgebraElement<S> base_;
  Matrix<S> m_;
  std::shared_ptr<Cache> cache_;
};

/// Eigenvector basis of K_x from the explicit decomposition: x spans A_1,
/// a x + (a - 1) y spans A_a for each neighbor y with label a on that side,
/// and each non-neighbor z spans part of A_0. Every vertex other than x is
/// the leading term of exactly one eigenvector, so coordinates are read off
/// directly.
template <FieldScalar S>
class AxisDecomposition {
 public:
  struct Eigenvector {
    std::size_t value_index;  // into eigenvalues()
    AlgebraElement<S> vector;
  };

  std::size_t axis() const { return axis_; }
  Side side() const { return side_; }
  const std::vector<S>& eigenvalues() const { return values_; }
  const std::vector<Eigenvector>& vectors() const { return vectors_; }

  /// Basis of the eigenspace for eigenvalues()[k].
  std::vector<AlgebraElement<S>> basis(std::size_t k) const {
    std::vector<AlgebraElement<S>> b;
    for (const auto& v : vectors_) {
      if (v.value_index == k) b.push_back(v.vector);
    }
    return b;
  }

  std::size_t dimension(std::size_t k) const {
    std::size_t d = 0;
    for (const auto& v : vectors_) d += v.value_index == k;
    return d;
  }

  /// Index of the eigenvector owned by a vertex.
  std::size_t owner(std::size_t vertex) const { return owner_.at(vertex); }

  /// Coordinates of v with respect to vectors(), as (vector index, coefficient).
  std::vector<std::pair<std::size_t, S>> coordinates(const AlgebraElement<S>& v) const {
    std::vector<std::pair<std::size_t, S>> out;
    S cx = one_ - one_;
    if (const S* c = v.coeff(axis_)) cx = *c;
    for (const auto& [i, c] : v.terms()) {
      if (i == axis_) continue;
      const auto k = owner_[i];
      const auto& ev = vectors_[k];
      const S& lambda = values_[ev.value_index];
      if (is_neighbor_vector(k)) {
        S coef = c / (lambda - one_);
        cx -= lambda * coef;
        out.emplace_back(k, coef);
      } else {
        out.emplace_back(k, c);
      }
    }
    if (!cx.is_zero()) out.emplace_back(owner_[axis_], cx);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  }

  /// Eigenvalue indices with a nonzero component in v, ascending.
  std::vector<std::size_t> components(const AlgebraElement<S>& v) const {
    std::vector<std::size_t> ks;
    for (const auto& [k, c] : coordinates(v)) ks.push_back(vectors_[k].value_index);
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    return ks;
  }

 private:
  template <FieldScalar>
  friend class GraphAlgebra;

  bool is_neighbor_vector(std::size_t k) const {
    const S& l = values_[vectors_[k].value_index];
    return !l.is_zero() && !l.is_one();
  }

  std::size_t axis_ = 0;
  Side side_ = Side::Left;
  S one_;
  std::vector<S> values_;
  std::vector<Eigenvector> vectors_;
  std::vector<std::size_t> owner_;
};

template <FieldScalar S>
class GraphAlgebra {
 public:
  using Element = AlgebraElement<S>;

  explicit GraphAlgebra(LabeledDigraph<S> g) : g_(std::move(g)) {}

  const LabeledDigraph<S>& graph() const { return g_; }
  const Field<S>& field() const { return g_.field(); }
  std::size_t dim() const { return g_.size(); }

  Element vertex(std::size_t i) const {
    if (i >= dim()) throw std::out_of_range("vertex index out of range");
    return Element::basis(i, field().one());
  }
  Element vertex(const std::string& name) const { return vertex(g_.index_of(name)); }

  Element multiply_basis(std::size_t i, std::size_t j) const {
    if (i == j) return vertex(i);
    const S* a = g_.label(i, j);
    if (!a) return {};
    return Element({{i, *a}, {j, *a}});
  }

  Element multiply(const Element& a, const Element& b) const {
    std::vector<typename Element::Term> acc;
    for (const auto& [i, ci] : a.terms()) {
      check_index(i);
      for (const auto& [j, cj] : b.terms()) {
        check_index(j);
        if (i == j) {
          acc.emplace_back(i, ci * cj);
        } else if (const S* l = g_.label(i, j)) {
          S c = ci * cj * *l;
          acc.emplace_back(i, c);
          acc.emplace_back(j, c);
        }
      }
    }
    return Element(std::move(acc));
  }

  /// Matrix of L_a or R_a in the vertex basis.
  AdjointMatrix<S> adjoint(const Element& a, Side side) const {
    Matrix<S> m(dim(), dim(), field().zero());
    for (std::size_t j = 0; j < dim(); ++j) {
      auto xj = vertex(j);
      auto col = side == Side::Left ? multiply(a, xj) : multiply(xj, a);
      for (const auto& [i, c] : col.terms()) m(i, j) = c;
    }
    return AdjointMatrix<S>(side, a, std::move(m));
  }

  bool is_idempotent(const Element& a) const { return multiply(a, a) == a; }

  /// Dimension of the 1-eigenspace of K_a.
  std::size_t fixed_space_dim(const Element& a, Side side) const {
    auto m = adjoint(a, side).matrix();
    for (std::size_t i = 0; i < dim(); ++i) m(i, i) -= field().one();
    return dim() - m.rank();
  }

  /// Nonzero idempotent whose left and right 1-eigenspaces are both <a>.
  bool is_primitive_axis(const Element& a) const {
    if (a.is_zero() || !is_idempotent(a)) return false;
    return fixed_space_dim(a, Side::Left) == 1 && fixed_space_dim(a, Side::Right) == 1;
  }

  /// Arcs that determine K_x: out-arcs for L_x, in-arcs for R_x.
  const std::vector<typename LabeledDigraph<S>::Arc>& side_arcs(std::size_t x, Side side) const {
    return side == Side::Left ? g_.out(x) : g_.in(x);
  }

  /// 1, then the incident labels in canonical order, then 0 when x has a
  /// non-neighbor on that side.
  std::vector<S> axis_spectrum(std::size_t x, Side side) const {
    const auto& arcs = side_arcs(x, side);
    std::vector<S> labels;
    for (const auto& a : arcs) {
      if (a.label.is_one()) {
        throw NotSemisimple("label 1 on an edge at '" + g_.name(x) + "' makes " +
                            (side == Side::Left ? "L" : "R") + "_x non-semisimple");
      }
      labels.push_back(a.label);
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    std::vector<S> spec{field().one()};
    spec.insert(spec.end(), labels.begin(), labels.end());
    if (arcs.size() + 1 < dim()) spec.push_back(field().zero());
    return spec;
  }

  AxisDecomposition<S> axis_eigenspaces(std::size_t x, Side side) const {
    AxisDecomposition<S> d;
    d.axis_ = x;
    d.side_ = side;
    d.one_ = field().one();
    d.values_ = axis_spectrum(x, side);
    d.owner_.assign(dim(), 0);
    const auto& arcs = side_arcs(x, side);
    const auto labels_end = d.values_.end() - (arcs.size() + 1 < dim() ? 1 : 0);
    auto value_index = [&](const S& l) {
      return static_cast<std::size_t>(std::lower_bound(d.values_.begin() + 1, labels_end, l) - d.values_.begin());
    };
    d.vectors_.push_back({0, vertex(x)});
    d.owner_[x] = 0;
    std::vector<bool> nbr(dim(), false);
    // group neighbor vectors by eigenvalue, vertex order inside each group
    std::vector<std::pair<std::size_t, std::size_t>> order;  // (value index, arc index)
    for (std::size_t k = 0; k < arcs.size(); ++k) {
      order.emplace_back(value_index(arcs[k].label), k);
      nbr[arcs[k].to] = true;
    }
    std::sort(order.begin(), order.end());
    for (auto [vi, k] : order) {
      const auto& a = arcs[k];
      d.owner_[a.to] = d.vectors_.size();
      d.vectors_.push_back({vi, Element({{x, a.label}, {a.to, a.label - field().one()}})});
    }
    if (arcs.size() + 1 < dim()) {
      const std::size_t zi = d.values_.size() - 1;
      for (std::size_t z = 0; z < dim(); ++z) {
        if (z == x || nbr[z]) continue;
        d.owner_[z] = d.vectors_.size();
        d.vectors_.push_back({zi, vertex(z)});
      }
    }
    if (d.vectors_.size() != dim()) throw std::logic_error("eigenvector count differs from dimension");
    return d;
  }

  AxisDecomposition<S> axis_eigenspaces(const std::string& x, Side side) const {
    return axis_eigenspaces(g_.index_of(x), side);
  }

 private:
  void check_index(std::size_t i) const {
    if (i >= dim()) throw std::out_of_range("element has a coordinate outside the basis");
  }

  LabeledDigraph<S> g_;
};

/// A pair of vertices with (x*x)*y != x*(x*y), if the graph has an edge.
template <FieldScalar S>
std::optional<std::pair<std::size_t, std::size_t>> nonassociativity_witness(const GraphAlgebra<S>& A) {
  for (std::size_t x = 0; x < A.dim(); ++x) {
    for (const auto& arc : A.graph().out(x)) {
      auto vx = A.vertex(x), vy = A.vertex(arc.to);
      if (!(A.multiply(A.multiply(vx, vx), vy) == A.multiply(vx, A.multiply(vx, vy)))) {
        return std::make_pair(x, arc.to);
      }
    }
  }
  return std::nullopt;
}

}  // namespace axial

#endif  // AXIAL_ALGEBRA_HPP
