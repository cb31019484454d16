#ifndef AXIAL_GROUP_HPP
#define AXIAL_GROUP_HPP

// Finite groups given by a full multiplication table.

#include "axial/perm.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace axial {

class InvalidGroup : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotGenerating : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IdentityGenerator : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class CayleyTable {
 public:
  /// Full associativity check up to this order, sampled triples beyond.
  static constexpr std::size_t kExhaustiveAssocLimit = 64;

  CayleyTable(std::vector<std::string> elements, std::vector<std::vector<std::size_t>> table)
      : names_(std::move(elements)), table_(std::move(table)) {
    validate();
  }

  static CayleyTable from_names(std::vector<std::string> elements,
                                const std::vector<std::vector<std::string>>& table) {
    std::unordered_map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (!idx.emplace(elements[i], i).second) {
        throw InvalidGroup("duplicate group element '" + elements[i] + "'");
      }
    }
    std::vector<std::vector<std::size_t>> t(table.size());
    for (std::size_t i = 0; i < table.size(); ++i) {
      for (const auto& e : table[i]) {
        auto it = idx.find(e);
        if (it == idx.end()) throw InvalidGroup("table entry '" + e + "' is not an element");
        t[i].push_back(it->second);
      }
    }
    return CayleyTable(std::move(elements), std::move(t));
  }

  /// Closure of permutation generators; element 0 is the identity and the
  /// rest follow in breadth-first order over the generators. Elements are
  /// named in 1-based cycle notation.
  static CayleyTable from_permutations(const std::vector<Permutation>& gens, std::size_t degree) {
    std::vector<Permutation> elems{Permutation::identity(degree)};
    std::map<Permutation, std::size_t> index{{elems[0], 0}};
    for (std::size_t k = 0; k < elems.size(); ++k) {
      for (const auto& g : gens) {
        auto h = elems[k] * g;
        if (index.emplace(h, elems.size()).second) elems.push_back(h);
      }
    }
    std::vector<std::string> names;
    for (const auto& e : elems) {
      names.push_back(e.cycle_string([](std::uint32_t i) { return std::to_string(i + 1); }));
    }
    std::vector<std::vector<std::size_t>> t(elems.size(), std::vector<std::size_t>(elems.size()));
    for (std::size_t a = 0; a < elems.size(); ++a) {
      for (std::size_t b = 0; b < elems.size(); ++b) t[a][b] = index.at(elems[a] * elems[b]);
    }
    return CayleyTable(std::move(names), std::move(t));
  }

  static CayleyTable cyclic(std::size_t n) {
    if (n == 0) throw InvalidGroup("cyclic group of order 0");
    std::vector<std::string> names;
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a) {
      names.push_back(std::to_string(a));
      for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    }
    return CayleyTable(std::move(names), std::move(t));
  }

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::size_t identity() const { return identity_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }

  std::size_t index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == name) return i;
    }
    throw InvalidGroup("unknown group element '" + name + "'");
  }

  bool is_involution(std::size_t a) const { return a != identity_ && mul(a, a) == identity_; }

  std::size_t element_order(std::size_t a) const {
    std::size_t k = 1;
    for (auto x = a; x != identity_; x = mul(x, a)) ++k;
    return k;
  }

  /// Subgroup generated by `gens`, as a sorted index list.
  std::vector<std::size_t> closure(const std::vector<std::size_t>& gens) const {
    std::vector<bool> in(size(), false);
    std::vector<std::size_t> out{identity_};
    in[identity_] = true;
    for (std::size_t k = 0; k < out.size(); ++k) {
      for (auto s : gens) {
        auto h = mul(out[k], s);
        if (!in[h]) {
          in[h] = true;
          out.push_back(h);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool generated_by(const std::vector<std::size_t>& gens) const {
    return closure(gens).size() == size();
  }

  /// Throws unless `gens` is a repetition-free generating set without the identity.
  void check_generators(const std::vector<std::size_t>& gens) const {
    std::vector<bool> seen(size(), false);
    for (auto s : gens) {
      if (s >= size()) throw InvalidGroup("generator index out of range");
      if (s == identity_) throw IdentityGenerator("identity listed as a generator");
      if (seen[s]) throw InvalidGroup("generator '" + name(s) + "' listed twice");
      seen[s] = true;
    }
    if (!generated_by(gens)) throw NotGenerating("generators do not generate the group");
  }

 private:
  void validate() {
    const auto n = names_.size();
    if (n == 0) throw InvalidGroup("empty group");
    if (table_.size() != n) throw InvalidGroup("table has wrong number of rows");
    for (const auto& row : table_) {
      if (row.size() != n) throw InvalidGroup("table row has wrong length");
      for (auto v : row) {
        if (v >= n) throw InvalidGroup("table entry out of range");
      }
    }
    bool found = false;
    for (std::size_t e = 0; e < n && !found; ++e) {
      bool ok = true;
      for (std::size_t g = 0; g < n && ok; ++g) ok = table_[e][g] == g && table_[g][e] == g;
      if (ok) {
        identity_ = e;
        found = true;
      }
    }
    if (!found) throw InvalidGroup("no identity element");
    inverse_.assign(n, n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (table_[a][b] == identity_ && table_[b][a] == identity_) inverse_[a] = b;
      }
      if (inverse_[a] == n) throw InvalidGroup("element '" + names_[a] + "' has no inverse");
    }
    auto assoc = [&](std::size_t a, std::size_t b, std::size_t c) {
      if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
        throw InvalidGroup("multiplication is not associative at (" + names_[a] + "," +
                           names_[b] + "," + names_[c] + ")");
      }
    };
    if (n <= kExhaustiveAssocLimit) {
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          for (std::size_t c = 0; c < n; ++c) assoc(a, b, c);
    } else {
      std::mt19937_64 rng(0x5eed);
      std::uniform_int_distribution<std::size_t> pick(0, n - 1);
      for (int k = 0; k < 20000; ++k) assoc(pick(rng), pick(rng), pick(rng));
    }
  }

  std::vector<std::string> names_;
  std::vector<std::vector<std::size_t>> table_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> inverse_;
};

/// Symmetric group on n points as a Cayley table, with generators
/// (1,2) and (1,2,...,n).
inline std::pair<CayleyTable, std::vector<std::size_t>> symmetric_group(std::size_t n) {
  if (n < 2) {
    return {CayleyTable::from_permutations({}, std::max<std::size_t>(n, 1)), {}};
  }
  std::vector<std::uint32_t> t(n), c(n);
  for (std::size_t i = 0; i < n; ++i) {
    t[i] = static_cast<std::uint32_t>(i);
    c[i] = static_cast<std::uint32_t>((i + 1) % n);
  }
  std::swap(t[0], t[1]);
  std::vector<Permutation> gens{Permutation(t)};
  if (n > 2) gens.emplace_back(c);
  auto table = CayleyTable::from_permutations(gens, n);
  std::vector<std::size_t> idx;
  for (const auto& g : gens) {
    idx.push_back(table.index_of(g.cycle_string([](std::uint32_t i) { return std::to_string(i + 1); })));
  }
  return {std::move(table), std::move(idx)};
}

}  // namespace axial

#endif  // AXIAL_GROUP_HPP
