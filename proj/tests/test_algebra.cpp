#include "support.hpp"

#include <catch_amalgamated.hpp>

using namespace axial;
using namespace axial::testing;

namespace {

template <FieldScalar S>
AlgebraElement<S> el(std::vector<std::pair<std::size_t, S>> t) {
  return AlgebraElement<S>(std::move(t));
}

/// Dense matrix of L_a or R_a straight from the product rule, as residues.
std::vector<std::vector<std::uint64_t>> dense_adjoint(const LabeledDigraph<Fp>& g, const AlgebraElement<Fp>& a,
                                                      Side side) {
  const auto n = g.size();
  const auto p = g.field().p();
  std::vector<std::vector<std::uint64_t>> m(n, std::vector<std::uint64_t>(n, 0));
  for (const auto& [i, c] : a.terms()) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        m[j][j] = (m[j][j] + c.value()) % p;
        continue;
      }
      const Fp* l = side == Side::Left ? g.label(i, j) : g.label(j, i);
      if (!l) continue;
      const auto w = std::uint64_t{c.value()} * l->value() % p;
      m[i][j] = (m[i][j] + w) % p;
      m[j][j] = (m[j][j] + w) % p;
    }
  }
  return m;
}

}  // namespace

TEST_CASE("products from the definition") {
  Field<Q> q;
  auto g = LabeledDigraph<Q>(q, {"x", "y"}, {{0, 1, q.from_int(2)}});
  GraphAlgebra<Q> A(g);
  auto x = A.vertex("x"), y = A.vertex("y");
  CHECK(A.multiply(x, y) == el<Q>({{0, q.from_int(2)}, {1, q.from_int(2)}}));
  CHECK(A.multiply(y, x).is_zero());
  CHECK(A.multiply(x, x) == x);
  // non-associativity witness with explicit values
  CHECK(A.multiply(A.multiply(x, x), y) == el<Q>({{0, q.from_int(2)}, {1, q.from_int(2)}}));
  CHECK(A.multiply(x, A.multiply(x, y)) == el<Q>({{0, q.from_int(6)}, {1, q.from_int(4)}}));
  CHECK(nonassociativity_witness(A).has_value());

  Field<Fp> f(5);
  auto e = from_arcs<Fp>(f, 2, {{0, 1, Fp(2, 5)}, {1, 0, Fp(2, 5)}});
  GraphAlgebra<Fp> B(e);
  auto s = B.vertex(0) + B.vertex(1);
  CHECK(B.multiply(s, s).is_zero());
  CHECK_FALSE(B.is_idempotent(s));
}

TEST_CASE("no edge means associative basis products") {
  Field<Fp> f(5);
  GraphAlgebra<Fp> A(LabeledDigraph<Fp>(f, {"x", "y"}, {}));
  CHECK_FALSE(nonassociativity_witness(A).has_value());
}

TEST_CASE("adjoint ranks") {
  auto h = heawood(7, 3, 3);
  GraphAlgebra<Fp> A(h);
  auto x = A.vertex("p1");
  CHECK(A.adjoint(x, Side::Left).rank() == 4);
  CHECK(A.adjoint(AlgebraElement<Fp>{}, Side::Left).rank() == 0);
  // a point and a line missing it: nonadjacent with disjoint neighborhoods
  auto two = A.vertex("p1") + A.vertex("{p2,p4,p6}");
  CHECK(A.adjoint(two, Side::Left).rank() == 8);
  CHECK(naive_rank_mod_p(dense_adjoint(h, two, Side::Left), 7) == 8);
  // two points share a line, so their stars overlap in one column
  auto pts = A.vertex("p1") + A.vertex("p2");
  CHECK(A.adjoint(pts, Side::Left).rank() == 7);
  CHECK(naive_rank_mod_p(dense_adjoint(h, pts, Side::Left), 7) == 7);
}

TEST_CASE("rank of L_x is one plus the outdegree") {
  std::mt19937_64 rng(41);
  Field<Fp> f(7);
  for (int k = 0; k < 30; ++k) {
    auto g = random_digraph<Fp>(rng, f, 7, 0.4, fp_picker(7, 1));
    GraphAlgebra<Fp> A(g);
    for (std::size_t v = 0; v < g.size(); ++v) {
      CHECK(A.adjoint(A.vertex(v), Side::Left).rank() == 1 + g.out_degree(v));
      CHECK(A.adjoint(A.vertex(v), Side::Right).rank() == 1 + g.in_degree(v));
    }
  }
}

TEST_CASE("adjoint ranks agree with the naive oracle on random elements") {
  std::mt19937_64 rng(42);
  Field<Fp> f(5);
  std::uniform_int_distribution<std::uint32_t> d(0, 4);
  for (int k = 0; k < 40; ++k) {
    auto g = random_digraph<Fp>(rng, f, 8, 0.35, fp_picker(5, 1));
    GraphAlgebra<Fp> A(g);
    std::vector<Fp> v;
    for (std::size_t i = 0; i < 8; ++i) v.emplace_back(d(rng), 5);
    auto a = AlgebraElement<Fp>::from_dense(v);
    for (auto side : {Side::Left, Side::Right}) {
      CHECK(A.adjoint(a, side).rank() == naive_rank_mod_p(dense_adjoint(g, a, side), 5));
    }
  }
}

TEST_CASE("idempotents and primitive axes") {
  auto h = heawood(7, 3, 5);
  GraphAlgebra<Fp> A(h);
  for (std::size_t v = 0; v < A.dim(); ++v) {
    CHECK(A.is_idempotent(A.vertex(v)));
    CHECK(A.is_primitive_axis(A.vertex(v)));
  }
  CHECK(A.is_idempotent(AlgebraElement<Fp>{}));
  CHECK_FALSE(A.is_primitive_axis(AlgebraElement<Fp>{}));

  // one label-1 edge leaves ker(L_x - 1) = <x> (a Jordan block, not an axis);
  // two of them put y1 - y2 into it as well
  Field<Fp> f(5);
  GraphAlgebra<Fp> B(from_arcs<Fp>(f, 2, {{0, 1, f.one()}, {1, 0, f.one()}}));
  CHECK(B.is_idempotent(B.vertex(0)));
  CHECK(B.fixed_space_dim(B.vertex(0), Side::Left) == 1);
  CHECK_THROWS_AS(B.axis_eigenspaces(0, Side::Left), NotSemisimple);
  GraphAlgebra<Fp> C(from_arcs<Fp>(f, 3, {{0, 1, f.one()}, {0, 2, f.one()}, {1, 0, Fp(2, 5)}, {2, 0, Fp(2, 5)}}));
  CHECK(C.fixed_space_dim(C.vertex(0), Side::Left) == 2);
  CHECK_FALSE(C.is_primitive_axis(C.vertex(0)));
}

TEST_CASE("axis eigenspaces") {
  auto h = heawood(7, 3, 3);
  GraphAlgebra<Fp> A(h);
  auto D = A.axis_eigenspaces("p1", Side::Left);
  REQUIRE(D.eigenvalues() == std::vector<Fp>{Fp(1, 7), Fp(3, 7), Fp(0, 7)});
  CHECK(D.dimension(0) == 1);
  CHECK(D.dimension(1) == 3);
  CHECK(D.dimension(2) == 10);

  Field<Fp> f7(7);
  GraphAlgebra<Fp> K3(complete_graph(3, Fp(4, 7), f7));
  auto D3 = K3.axis_eigenspaces(0, Side::Left);
  CHECK(D3.eigenvalues() == std::vector<Fp>{Fp(1, 7), Fp(4, 7)});
  CHECK(D3.dimension(0) == 1);
  CHECK(D3.dimension(1) == 2);

  GraphAlgebra<Fp> E(from_arcs<Fp>(f7, 2, {{0, 1, Fp(2, 7)}, {1, 0, Fp(2, 7)}}));
  CHECK(E.axis_spectrum(0, Side::Left) == std::vector<Fp>{Fp(1, 7), Fp(2, 7)});

  GraphAlgebra<Fp> one(from_arcs<Fp>(f7, 3, {{0, 1, f7.one()}, {1, 0, Fp(2, 7)}, {1, 2, Fp(3, 7)}, {2, 1, Fp(3, 7)}}));
  CHECK_THROWS_AS(one.axis_eigenspaces(0, Side::Left), NotSemisimple);
  CHECK_THROWS_AS(one.axis_eigenspaces(1, Side::Right), NotSemisimple);
  CHECK_NOTHROW(one.axis_eigenspaces(1, Side::Left));
}

TEST_CASE("eigenvectors are eigenvectors and coordinates reconstruct") {
  std::mt19937_64 rng(43);
  Field<Fp> f(7);
  std::uniform_int_distribution<std::uint32_t> d(0, 6);
  for (int k = 0; k < 40; ++k) {
    auto g = random_digraph<Fp>(rng, f, 7, 0.4, fp_picker(7, 2));
    GraphAlgebra<Fp> A(g);
    for (std::size_t x = 0; x < A.dim(); ++x) {
      for (auto side : {Side::Left, Side::Right}) {
        auto D = A.axis_eigenspaces(x, side);
        std::size_t total = 0;
        for (std::size_t i = 0; i < D.eigenvalues().size(); ++i) total += D.dimension(i);
        CHECK(total == A.dim());
        auto ax = A.vertex(x);
        for (const auto& ev : D.vectors()) {
          auto image = side == Side::Left ? A.multiply(ax, ev.vector) : A.multiply(ev.vector, ax);
          CHECK(image == ev.vector.scaled(D.eigenvalues()[ev.value_index]));
        }
        std::vector<Fp> v;
        for (std::size_t i = 0; i < A.dim(); ++i) v.emplace_back(d(rng), 7);
        auto a = AlgebraElement<Fp>::from_dense(v);
        AlgebraElement<Fp> back;
        for (const auto& [idx, c] : D.coordinates(a)) back = back + D.vectors()[idx].vector.scaled(c);
        CHECK(back == a);
      }
    }
  }
}

TEST_CASE("support rule for products with a vertex") {
  std::mt19937_64 rng(44);
  Field<Fp> f(5);
  std::uniform_int_distribution<std::uint32_t> d(0, 4);
  for (int k = 0; k < 50; ++k) {
    auto g = random_digraph<Fp>(rng, f, 8, 0.3, fp_picker(5, 1));
    GraphAlgebra<Fp> A(g);
    std::vector<Fp> v;
    for (std::size_t i = 0; i < 8; ++i) v.emplace_back(d(rng), 5);
    auto a = AlgebraElement<Fp>::from_dense(v);
    for (std::size_t x = 0; x < 8; ++x) {
      for (const auto& prod : {A.multiply(a, A.vertex(x)), A.multiply(A.vertex(x), a)}) {
        for (auto z : prod.support()) {
          bool allowed = z == x || (a.coeff(z) && g.adjacent(z, x));
          CHECK(allowed);
        }
      }
    }
  }
}

TEST_CASE("multiplication is bilinear") {
  std::mt19937_64 rng(45);
  Field<Q> q;
  std::uniform_int_distribution<int> d(-4, 4);
  auto pick = [&](std::mt19937_64& r) {
    std::uniform_int_distribution<int> n(1, 9), m(1, 5);
    return Q(BigInt(n(r)), BigInt(m(r)));
  };
  for (int k = 0; k < 30; ++k) {
    auto g = random_digraph<Q>(rng, q, 6, 0.4, pick);
    GraphAlgebra<Q> A(g);
    auto rnd = [&] {
      std::vector<Q> v;
      for (std::size_t i = 0; i < 6; ++i) v.push_back(q.from_int(d(rng)));
      return AlgebraElement<Q>::from_dense(v);
    };
    auto a = rnd(), b = rnd(), c = rnd();
    Q lambda = q.from_int(d(rng));
    CHECK(A.multiply(a.scaled(lambda) + b, c) == A.multiply(a, c).scaled(lambda) + A.multiply(b, c));
    CHECK(A.multiply(c, a.scaled(lambda) + b) == A.multiply(c, a).scaled(lambda) + A.multiply(c, b));
  }
}

TEST_CASE("reversed graph gives the opposite algebra") {
  std::mt19937_64 rng(46);
  Field<Fp> f(11);
  for (int k = 0; k < 20; ++k) {
    auto g = random_digraph<Fp>(rng, f, 6, 0.4, fp_picker(11, 1));
    GraphAlgebra<Fp> A(g), B(g.reversed());
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j) CHECK(B.multiply_basis(i, j) == A.multiply_basis(j, i));
  }
}

TEST_CASE("element arithmetic keeps canonical sparsity") {
  Field<Fp> f(5);
  auto a = el<Fp>({{3, Fp(2, 5)}, {1, Fp(1, 5)}, {3, Fp(3, 5)}});
  CHECK(a.support() == std::vector<std::size_t>{1});
  CHECK((a - a).is_zero());
  CHECK(a.scaled(Fp(0, 5)).is_zero());
  CHECK(a.to_dense(4, f.zero())[1] == Fp(1, 5));
  GraphAlgebra<Fp> A(LabeledDigraph<Fp>(f, {"x"}, {}));
  CHECK_THROWS_AS(A.multiply(a, a), std::out_of_range);
}
