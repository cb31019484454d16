#ifndef AXIAL_FUSION_HPP
#define AXIAL_FUSION_HPP

// Fusion laws of graph type and an exact checker that records, for every
// pair of eigenvalues, which eigenspaces products of eigenvectors reach.

#include "axial/algebra.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace axial {

class SpectrumOutsideLaw : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <FieldScalar S>
class FusionLaw {
 public:
  /// Graph-type law on F: 1*l = {l}, 0*0 = {0}, a*a = {1,a}, a*b = {1,a,b}.
  static FusionLaw graph_type(std::vector<S> F) {
    std::sort(F.begin(), F.end());
    F.erase(std::unique(F.begin(), F.end()), F.end());
    bool has_one = std::any_of(F.begin(), F.end(), [](const S& s) { return s.is_one(); });
    if (!has_one || F.size() < 2) {
      throw std::invalid_argument("fusion law needs 1 and at least one other eigenvalue");
    }
    FusionLaw law;
    law.F_ = std::move(F);
    return law;
  }

  const std::vector<S>& eigenvalues() const { return F_; }

  bool contains(const S& l) const { return std::binary_search(F_.begin(), F_.end(), l); }
  bool has_zero() const {
    return std::any_of(F_.begin(), F_.end(), [](const S& s) { return s.is_zero(); });
  }

  /// Allowed eigenvalues for a product of a l-eigenvector with a m-eigenvector.
  std::vector<S> product(const S& l, const S& m) const {
    std::vector<S> out;
    if (l.is_one()) {
      out = {m};
    } else if (m.is_one()) {
      out = {l};
    } else if (l == m && l.is_zero()) {
      out = {l};
    } else {
      for (const auto& f : F_) {
        if (f.is_one()) out.push_back(f);
      }
      out.push_back(l);
      if (!(l == m)) out.push_back(m);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::vector<S> F_;
};

/// {1} together with every label, and 0 unless the graph is complete.
template <FieldScalar S>
FusionLaw<S> graph_law_for(const LabeledDigraph<S>& g) {
  std::vector<S> F = g.labels();
  F.push_back(g.field().one());
  if (!is_complete(g)) F.push_back(g.field().zero());
  return FusionLaw<S>::graph_type(std::move(F));
}

template <FieldScalar S>
struct FusionCell {
  S lambda;
  S mu;
  std::vector<S> observed;  // minimal set reached by products, canonical order
  std::vector<S> allowed;
  bool ok = true;
};

template <FieldScalar S>
struct AxisFusion {
  std::size_t axis = 0;
  Side side = Side::Left;
  std::vector<S> spectrum;
  std::vector<std::size_t> dims;  // parallel to spectrum
  std::vector<FusionCell<S>> cells;
  bool ok = true;
};

template <FieldScalar S>
struct FusionReport {
  std::vector<AxisFusion<S>> axes;
  bool law_satisfied = true;
  bool dimensions_ok = true;  // eigenspace dimensions add up to dim A for every axis
  std::vector<std::string> violations;
};

/// For each axis, multiplies every pair of eigenvectors whose supports can
/// interact and reads off the eigenspace components of the product. Pairs
/// involving the axis itself are taken in the order of the adjoint under
/// test (x*v for L_x, v*x for R_x): in a non-commutative algebra v*x is
/// not governed by L_x.
template <FieldScalar S>
FusionReport<S> check_fusion(const GraphAlgebra<S>& A, const std::vector<std::size_t>& axes,
                             const FusionLaw<S>& law, Side side) {
  const auto& g = A.graph();
  if (!is_complete(g) && !law.has_zero()) {
    throw SpectrumOutsideLaw("graph is not complete but the law lacks the eigenvalue 0");
  }
  FusionReport<S> report;
  std::vector<std::size_t> stamp(A.dim(), static_cast<std::size_t>(-1));
  for (auto x : axes) {
    auto D = A.axis_eigenspaces(x, side);
    AxisFusion<S> af;
    af.axis = x;
    af.side = side;
    af.spectrum = D.eigenvalues();
    for (const auto& l : af.spectrum) {
      if (!law.contains(l)) {
        throw SpectrumOutsideLaw("eigenvalue " + l.to_string() + " of axis '" + g.name(x) +
                                 "' is not in the law");
      }
    }
    const auto k = af.spectrum.size();
    std::size_t total = 0;
    for (std::size_t i = 0; i < k; ++i) {
      af.dims.push_back(D.dimension(i));
      total += af.dims.back();
    }
    if (total != A.dim()) report.dimensions_ok = false;

    // eigenvectors containing a vertex: its owner, plus every neighbor vector for x itself
    const auto& V = D.vectors();
    std::vector<std::size_t> containing_x;
    for (std::size_t v = 0; v < V.size(); ++v) {
      if (V[v].vector.coeff(x)) containing_x.push_back(v);
    }
    auto containing = [&](std::size_t t) -> std::vector<std::size_t> {
      if (t == x) return containing_x;
      return {D.owner(t)};
    };

    std::vector<std::vector<bool>> seen(k * k, std::vector<bool>(k, false));
    auto record = [&](std::size_t u, std::size_t w) {
      auto p = A.multiply(V[u].vector, V[w].vector);
      if (p.is_zero()) return;
      auto& cell = seen[V[u].value_index * k + V[w].value_index];
      for (auto c : D.components(p)) cell[c] = true;
    };
    const std::size_t axis_vec = D.owner(x);
    for (std::size_t u = 0; u < V.size(); ++u) {
      std::vector<std::size_t> partners;
      for (const auto& [s, c] : V[u].vector.terms()) {
        std::vector<std::size_t> around{s};
        around.insert(around.end(), g.neighbors(s).begin(), g.neighbors(s).end());
        for (auto t : around) {
          for (auto w : containing(t)) {
            if (stamp[w] != u) {
              stamp[w] = u;
              partners.push_back(w);
            }
          }
        }
      }
      for (auto w : partners) {
        if (u == axis_vec && w != axis_vec && side == Side::Right) continue;
        if (w == axis_vec && u != axis_vec && side == Side::Left) continue;
        record(u, w);
      }
    }
    std::fill(stamp.begin(), stamp.end(), static_cast<std::size_t>(-1));

    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        FusionCell<S> cell{af.spectrum[a], af.spectrum[b], {}, law.product(af.spectrum[a], af.spectrum[b]), true};
        for (std::size_t c = 0; c < k; ++c) {
          if (!seen[a * k + b][c]) continue;
          cell.observed.push_back(af.spectrum[c]);
          if (!std::binary_search(cell.allowed.begin(), cell.allowed.end(), af.spectrum[c])) {
            cell.ok = false;
          }
        }
        if (!cell.ok) {
          af.ok = false;
          report.law_satisfied = false;
          report.violations.push_back("axis '" + g.name(x) + "' (" + to_string(side) + "): " +
                                      cell.lambda.to_string() + " * " + cell.mu.to_string() +
                                      " reaches outside the law");
        }
        af.cells.push_back(std::move(cell));
      }
    }
    report.axes.push_back(std::move(af));
  }
  return report;
}

template <FieldScalar S>
FusionReport<S> check_fusion(const GraphAlgebra<S>& A, const FusionLaw<S>& law, Side side) {
  std::vector<std::size_t> all(A.dim());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return check_fusion(A, all, law, side);
}

}  // namespace axial

#endif  // AXIAL_FUSION_HPP
