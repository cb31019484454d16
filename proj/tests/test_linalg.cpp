#include "support.hpp"

#include <catch_amalgamated.hpp>

using namespace axial;
using namespace axial::testing;

TEST_CASE("rank agrees with a naive mod-p reduction") {
  std::mt19937_64 rng(31);
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 101u}) {
    std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
    std::uniform_int_distribution<std::size_t> sz(1, 9);
    for (int k = 0; k < 60; ++k) {
      const auto r = sz(rng), c = sz(rng);
      Matrix<Fp> m(r, c, Fp(0, p));
      std::vector<std::vector<std::uint64_t>> raw(r, std::vector<std::uint64_t>(c));
      // sparse entries so low ranks occur
      std::bernoulli_distribution keep(0.35);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
          raw[i][j] = keep(rng) ? d(rng) : 0;
          m(i, j) = Fp(static_cast<std::uint32_t>(raw[i][j]), p);
        }
      CHECK(m.rank() == naive_rank_mod_p(raw, p));
      CHECK(m.transpose().rank() == m.rank());
    }
  }
}

TEST_CASE("rref, nullspace and apply") {
  Field<Q> q;
  Matrix<Q> m(3, 4, q.zero());
  const int vals[3][4] = {{1, 2, 0, 3}, {2, 4, 1, 7}, {3, 6, 1, 10}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = q.from_int(vals[i][j]);
  auto [r, piv] = m.rref();
  CHECK(piv == std::vector<std::size_t>{0, 2});
  CHECK(m.rank() == 2);
  auto ns = m.nullspace();
  CHECK(ns.size() == 2);
  for (const auto& v : ns) {
    for (const auto& x : m.apply(v)) CHECK(x.is_zero());
  }
  auto id = Matrix<Q>::identity(3, q);
  CHECK(id.rank() == 3);
  CHECK(id.nullspace().empty());
}

TEST_CASE("echelon basis") {
  Field<Fp> f(5);
  EchelonBasis<Fp> b(4, f);
  auto v = [](std::initializer_list<std::uint32_t> xs) {
    std::vector<Fp> out;
    for (auto x : xs) out.emplace_back(x, 5);
    return out;
  };
  CHECK(b.insert(v({1, 2, 0, 0})));
  CHECK(b.insert(v({0, 1, 1, 0})));
  CHECK_FALSE(b.insert(v({2, 2, 3, 0})));  // 2(1,2,0,0) + 3(0,1,1,0)
  CHECK(b.dim() == 2);
  CHECK(b.contains(v({1, 3, 1, 0})));
  CHECK_FALSE(b.contains(v({0, 0, 0, 1})));
  CHECK_FALSE(b.insert(v({0, 0, 0, 0})));
  auto c = b.coordinates(v({2, 2, 3, 0}));
  REQUIRE(c.has_value());
  CHECK(*c == v({2, 2}));  // rows are (1,0,3,0) and (0,1,1,0)
  CHECK_FALSE(b.coordinates(v({0, 0, 0, 1})).has_value());
  CHECK(b.is_pivot(0));
  CHECK(b.is_pivot(1));
  CHECK_FALSE(b.is_pivot(3));
}
