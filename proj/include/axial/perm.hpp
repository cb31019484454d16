#ifndef AXIAL_PERM_HPP
#define AXIAL_PERM_HPP

// Permutations and permutation groups with a deterministic Schreier-Sims
// stabilizer chain. Permutations act on the right: (p * q)(i) = q(p(i)).

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace axial {

class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree) : img_(degree) {
    std::iota(img_.begin(), img_.end(), std::uint32_t{0});
  }
  explicit Permutation(std::vector<std::uint32_t> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (auto v : img_) {
      if (v >= img_.size() || seen[v]) throw std::invalid_argument("not a permutation");
      seen[v] = true;
    }
  }

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  std::size_t degree() const { return img_.size(); }
  std::uint32_t operator()(std::size_t i) const { return img_[i]; }
  const std::vector<std::uint32_t>& images() const { return img_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i) {
      if (img_[i] != i) return false;
    }
    return true;
  }

  std::optional<std::size_t> first_moved() const {
    for (std::size_t i = 0; i < img_.size(); ++i) {
      if (img_[i] != i) return i;
    }
    return std::nullopt;
  }

  Permutation inverse() const {
    Permutation r(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) r.img_[img_[i]] = static_cast<std::uint32_t>(i);
    return r;
  }

  /// Apply `a`, then `b`.
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("permutation degree mismatch");
    Permutation r;
    r.img_.resize(a.img_.size());
    for (std::size_t i = 0; i < a.img_.size(); ++i) r.img_[i] = b.img_[a.img_[i]];
    return r;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  /// Disjoint cycles, each starting at its smallest point, fixed points omitted.
  std::vector<std::vector<std::uint32_t>> cycles() const {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<bool> seen(img_.size(), false);
    for (std::uint32_t i = 0; i < img_.size(); ++i) {
      if (seen[i] || img_[i] == i) continue;
      std::vector<std::uint32_t> c;
      for (auto j = i; !seen[j]; j = img_[j]) {
        seen[j] = true;
        c.push_back(j);
      }
      out.push_back(std::move(c));
    }
    return out;
  }

  template <class NameFn>
  std::string cycle_string(NameFn&& name) const {
    auto cs = cycles();
    if (cs.empty()) return "()";
    std::string s;
    for (const auto& c : cs) {
      s += '(';
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (k) s += ',';
        s += name(c[k]);
      }
      s += ')';
    }
    return s;
  }

  std::string cycle_string() const {
    return cycle_string([](std::uint32_t i) { return std::to_string(i); });
  }

 private:
  std::vector<std::uint32_t> img_;
};

/// Group generated by a list of permutations, with a base and strong
/// generating set computed once at construction.
class PermGroup {
 public:
  struct Level {
    std::uint32_t base_point = 0;
    std::vector<Permutation> strong_gens;  // generators fixing all earlier base points
    std::vector<std::int32_t> orbit_index;  // point -> index in orbit, -1 when absent
    std::vector<std::uint32_t> orbit;
    std::vector<Permutation> transversal;  // transversal[k] maps base_point to orbit[k]
  };

  PermGroup() = default;
  PermGroup(std::size_t degree, std::vector<Permutation> generators)
      : degree_(degree), gens_(std::move(generators)) {
    for (const auto& g : gens_) {
      if (g.degree() != degree_) throw std::invalid_argument("generator has wrong degree");
    }
    build_chain();
  }

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  const std::vector<Level>& chain() const { return levels_; }

  std::vector<std::uint32_t> base() const {
    std::vector<std::uint32_t> b;
    for (const auto& l : levels_) b.push_back(l.base_point);
    return b;
  }

  boost::multiprecision::cpp_int order() const {
    boost::multiprecision::cpp_int n = 1;
    for (const auto& l : levels_) n *= l.orbit.size();
    return n;
  }

  bool contains(const Permutation& g) const {
    if (g.degree() != degree_) return false;
    auto [h, level] = strip(g, 0);
    return level == levels_.size() && h.is_identity();
  }

  /// Orbit of `point` under the whole group.
  std::vector<std::uint32_t> orbit_of(std::uint32_t point) const {
    return orbit_under(gens_, point, degree_);
  }

  static std::vector<std::uint32_t> orbit_under(const std::vector<Permutation>& gens,
                                                std::uint32_t point, std::size_t degree) {
    std::vector<bool> seen(degree, false);
    std::vector<std::uint32_t> orb{point};
    seen[point] = true;
    for (std::size_t k = 0; k < orb.size(); ++k) {
      for (const auto& g : gens) {
        auto q = g(orb[k]);
        if (!seen[q]) {
          seen[q] = true;
          orb.push_back(q);
        }
      }
    }
    return orb;
  }

 private:
  void recompute_orbit(Level& l) const {
    l.orbit_index.assign(degree_, -1);
    l.orbit = {l.base_point};
    l.transversal = {Permutation::identity(degree_)};
    l.orbit_index[l.base_point] = 0;
    for (std::size_t k = 0; k < l.orbit.size(); ++k) {
      for (const auto& s : l.strong_gens) {
        auto q = s(l.orbit[k]);
        if (l.orbit_index[q] < 0) {
          l.orbit_index[q] = static_cast<std::int32_t>(l.orbit.size());
          l.orbit.push_back(q);
          l.transversal.push_back(l.transversal[k] * s);
        }
      }
    }
  }

  std::pair<Permutation, std::size_t> strip(Permutation h, std::size_t from) const {
    for (std::size_t j = from; j < levels_.size(); ++j) {
      const auto& l = levels_[j];
      auto beta = h(l.base_point);
      if (l.orbit_index[beta] < 0) return {h, j};
      h = h * l.transversal[static_cast<std::size_t>(l.orbit_index[beta])].inverse();
    }
    return {h, levels_.size()};
  }

  bool fixes_base(const Permutation& g, std::size_t upto) const {
    for (std::size_t j = 0; j < upto; ++j) {
      if (g(levels_[j].base_point) != levels_[j].base_point) return false;
    }
    return true;
  }

  void build_chain() {
    std::vector<Permutation> nontrivial;
    for (const auto& g : gens_) {
      if (!g.is_identity()) nontrivial.push_back(g);
    }
    for (const auto& g : nontrivial) {
      if (fixes_base(g, levels_.size())) {
        Level l;
        l.base_point = static_cast<std::uint32_t>(*g.first_moved());
        levels_.push_back(std::move(l));
      }
    }
    for (std::size_t i = 0; i < levels_.size(); ++i) {
      for (const auto& g : nontrivial) {
        if (fixes_base(g, i)) levels_[i].strong_gens.push_back(g);
      }
      recompute_orbit(levels_[i]);
    }

    // Deterministic Schreier-Sims: work from the deepest level upwards; a
    // non-sifting Schreier generator is pushed down and the scan restarts there.
    std::size_t i = levels_.size();
    while (i > 0) {
      auto& l = levels_[i - 1];
      bool complete = true;
      for (std::size_t k = 0; complete && k < l.orbit.size(); ++k) {
        for (std::size_t s = 0; complete && s < l.strong_gens.size(); ++s) {
          const auto& x = l.strong_gens[s];
          auto image = x(l.orbit[k]);
          auto h = l.transversal[k] * x *
                   l.transversal[static_cast<std::size_t>(l.orbit_index[image])].inverse();
          if (h.is_identity()) continue;
          auto [r, j] = strip(h, i);
          if (j == levels_.size() && r.is_identity()) continue;
          complete = false;
          if (j == levels_.size()) {
            Level nl;
            nl.base_point = static_cast<std::uint32_t>(*r.first_moved());
            levels_.push_back(std::move(nl));
          }
          for (std::size_t m = i; m <= j; ++m) {
            levels_[m].strong_gens.push_back(r);
            recompute_orbit(levels_[m]);
          }
          i = j + 1;
        }
      }
      if (complete) --i;
    }
  }

  std::size_t degree_ = 0;
  std::vector<Permutation> gens_;
  std::vector<Level> levels_;
};

}  // namespace axial

#endif  // AXIAL_PERM_HPP
