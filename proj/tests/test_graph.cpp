#include "support.hpp"

#include <catch_amalgamated.hpp>

using namespace axial;
using namespace axial::testing;

namespace {

DigraphData<Fp> data(std::vector<std::string> vs, std::vector<std::tuple<std::string, std::string, std::uint32_t>> es,
                     std::uint32_t p = 5) {
  DigraphData<Fp> d{Field<Fp>(p), std::move(vs), {}};
  for (auto& [t, h, l] : es) d.edges.push_back({t, h, Fp(l, p)});
  return d;
}

bool has(const ValidationReport& r, Violation v) {
  for (const auto& i : r.issues)
    if (i.kind == v) return true;
  return false;
}

}  // namespace

TEST_CASE("validate") {
  auto single = validate(data({"x"}, {}));
  CHECK(single.valid);
  CHECK(single.weakly_connected);

  auto zero = validate(data({"x", "y"}, {{"x", "y", 0}}));
  CHECK_FALSE(zero.valid);
  CHECK(has(zero, Violation::ZeroLabel));

  auto two = validate(data({"a", "b", "c", "d"}, {{"a", "b", 1}, {"c", "d", 1}}));
  CHECK(two.valid);
  CHECK_FALSE(two.weakly_connected);

  CHECK(has(validate(data({"x"}, {{"x", "x", 1}})), Violation::Loop));
  CHECK(has(validate(data({"x", "y"}, {{"x", "y", 1}, {"x", "y", 2}})), Violation::MultipleEdge));
  CHECK(has(validate(data({"x", "x"}, {})), Violation::DuplicateVertex));
  CHECK(has(validate(data({"x"}, {{"x", "z", 1}})), Violation::UnknownVertex));
  CHECK(has(validate(data({}, {})), Violation::NoVertices));
  CHECK_THROWS_AS(LabeledDigraph<Fp>::from_data(data({"x"}, {{"x", "x", 1}})), InvalidGraph);
}

TEST_CASE("profile") {
  auto h = heawood(7, 3, 3);
  auto p = profile(h);
  CHECK(p.is_symmetric);
  CHECK(p.weakly_connected);
  CHECK(p.girth == ExtCount::finite(6));
  CHECK(p.k_min == ExtCount::finite(3));
  CHECK(p.k_max == ExtCount::finite(3));
  for (auto [in, out] : p.degrees) CHECK(in == out);

  Field<Fp> f(5);
  auto cyc = from_arcs<Fp>(f, 3, {{0, 1, f.one()}, {1, 2, f.one()}, {2, 0, f.one()}});
  auto pc = profile(cyc);
  CHECK_FALSE(pc.is_symmetric);
  CHECK(pc.girth == ExtCount::finite(3));

  auto path = from_arcs<Fp>(f, 3, {{0, 1, f.one()}, {1, 0, f.one()}, {1, 2, f.one()}, {2, 1, f.one()}});
  CHECK(profile(path).girth.is_infinite());
  CHECK(profile(path).girth.to_string() == "inf");
  CHECK(ExtCount::finite(100) < ExtCount::infinity());
}

TEST_CASE("girth of known graphs") {
  CHECK(girth(incidence_graph(gq22(), Fp(2, 5), Fp(3, 5))) == ExtCount::finite(8));
  CHECK(girth(complete_graph(4, Fp(1, 3), Field<Fp>(3))) == ExtCount::finite(3));
  CHECK(girth(symmetric_digraph(frucht_graph(), Fp(1, 2))) == ExtCount::finite(3));
  // a directed 2-cycle is not a cycle of the underlying graph
  Field<Fp> f(5);
  CHECK(girth(from_arcs<Fp>(f, 2, {{0, 1, f.one()}, {1, 0, f.one()}})).is_infinite());
}

TEST_CASE("incidence graphs") {
  auto h = heawood(7, 3, 5);
  CHECK(h.size() == 14);
  CHECK(h.edge_count() == 42);
  CHECK(is_symmetric(h));
  CHECK_FALSE(is_label_symmetric(h));
  CHECK(*h.label(h.index_of("p1"), h.index_of("{p1,p2,p3}")) == Fp(3, 7));
  CHECK(*h.label(h.index_of("{p1,p2,p3}"), h.index_of("p1")) == Fp(5, 7));

  auto k4 = incidence_graph(k4_graph(), Fp(1, 2), Fp(1, 2));
  CHECK(k4.size() == 10);
  for (std::size_t v = 0; v < 4; ++v) CHECK(k4.out_degree(v) == 3);
  for (std::size_t v = 4; v < 10; ++v) CHECK(k4.out_degree(v) == 2);

  PartialLinearSpace line{{"a", "b"}, {{"a", "b"}}};
  auto p3 = incidence_graph(line, Fp(2, 5), Fp(2, 5));
  CHECK(p3.size() == 3);
  CHECK(is_symmetric(p3));
  CHECK(girth(p3).is_infinite());

  CHECK_THROWS_AS(incidence_graph(line, Fp(0, 5), Fp(2, 5)), InvalidLabel);
  PartialLinearSpace bad{{"a", "b", "c"}, {{"a", "b", "c"}, {"a", "b"}}};
  CHECK_THROWS_AS(incidence_graph(bad, Fp(2, 5), Fp(2, 5)), InvalidPartialLinearSpace);
  PartialLinearSpace shortline{{"a", "b"}, {{"a"}}};
  CHECK_THROWS_AS(shortline.validate(), InvalidPartialLinearSpace);

  auto tc = incidence_graph(gq22(), Fp(2, 5), Fp(3, 5));
  CHECK(tc.size() == 30);
  CHECK(tc.edge_count() == 90);
}

TEST_CASE("incidence graphs have girth at least 6") {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 60; ++k) {
    std::uniform_int_distribution<int> nv(2, 9);
    int n = nv(rng);
    SimpleGraph g;
    for (int i = 0; i < n; ++i) g.vertices.push_back("v" + std::to_string(i));
    std::bernoulli_distribution coin(0.4);
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (coin(rng)) g.edges.emplace_back(g.vertices[a], g.vertices[b]);
    if (g.edges.empty()) continue;
    auto inc = incidence_graph(g, Fp(2, 7), Fp(3, 7));
    CHECK(is_symmetric(inc));
    auto gr = girth(inc);
    CHECK((gr.is_infinite() || gr.value() >= 6));
  }
}

TEST_CASE("complete graphs") {
  Field<Q> q;
  auto k5 = complete_graph(5, q.parse("-1/3"), q);
  CHECK(k5.size() == 5);
  CHECK(k5.edge_count() == 20);
  CHECK(is_complete(k5));
  auto k1 = complete_graph(1, q.one(), q);
  CHECK(k1.edge_count() == 0);
  CHECK(complete_graph(3, Fp(3, 7), Field<Fp>(7)).edge_count() == 6);
  CHECK_THROWS_AS(complete_graph(3, Fp(0, 7), Field<Fp>(7)), InvalidLabel);
}

TEST_CASE("cayley graphs") {
  Field<Fp> f(5);
  auto z3 = CayleyTable::cyclic(3);
  auto c3 = cayley_graph(z3, {1}, {Fp(2, 5)}, f);
  CHECK(c3.edge_count() == 3);
  CHECK_FALSE(is_symmetric(c3));
  CHECK(girth(c3) == ExtCount::finite(3));

  auto [s3, gens] = symmetric_group(3);
  auto g6 = cayley_graph(s3, gens, {Fp(2, 5), Fp(3, 5)}, f);
  CHECK(g6.size() == 6);
  for (std::size_t v = 0; v < 6; ++v) CHECK(g6.out_degree(v) == 2);

  auto z2 = CayleyTable::cyclic(2);
  auto k2 = cayley_graph(z2, {1}, {Fp(2, 5)}, f);
  CHECK(k2.has_edge(0, 1));
  CHECK(k2.has_edge(1, 0));
  CHECK(is_symmetric(k2));

  CHECK_THROWS_AS(cayley_graph(z3, {}, std::vector<Fp>{}, f), NotGenerating);
  CHECK_THROWS_AS(cayley_graph(z3, {0}, {Fp(2, 5)}, f), IdentityGenerator);
  auto z4 = CayleyTable::cyclic(4);
  CHECK_THROWS_AS(cayley_graph(z4, {2}, {Fp(2, 5)}, f), NotGenerating);
}

TEST_CASE("cayley graph symmetric iff generators closed under inverses with matching labels") {
  Field<Fp> f(7);
  auto z5 = CayleyTable::cyclic(5);
  CHECK(is_symmetric(cayley_graph(z5, {1, 4}, {Fp(2, 7), Fp(3, 7)}, f)));
  CHECK_FALSE(is_label_symmetric(cayley_graph(z5, {1, 4}, {Fp(2, 7), Fp(3, 7)}, f)));
  CHECK(is_label_symmetric(cayley_graph(z5, {1, 4}, {Fp(2, 7), Fp(2, 7)}, f)));
  CHECK_FALSE(is_symmetric(cayley_graph(z5, {1, 2}, {Fp(2, 7), Fp(2, 7)}, f)));
}

TEST_CASE("contraction of ideal subgraphs") {
  auto g = ideal_example();
  auto c = contract_ideal_subgraph(g, {1, 2});
  CHECK(c.size() == 2);
  CHECK(c.name(1) == "{y1,y2}");
  CHECK(*c.label(0, 1) == Fp(2, 5));
  CHECK(*c.label(1, 0) == Fp(4, 5));
  CHECK(is_symmetric(c));

  Field<Fp> f(7);
  auto half = f.from_int(2).inv();
  auto k4 = complete_graph(4, half, f);
  CHECK(contract_ideal_subgraph(k4, {0, 1, 2, 3}).size() == 1);

  CHECK_THROWS_AS(contract_ideal_subgraph(g, {0, 1}), NotIdealSubgraph);
}

TEST_CASE("contraction removes |Y| - 1 vertices") {
  std::mt19937_64 rng(23);
  Field<Fp> f(11);
  const auto half = f.from_int(2).inv();
  for (int k = 0; k < 40; ++k) {
    // a clique Y of ideal twins attached uniformly to a random host graph
    std::uniform_int_distribution<std::size_t> ny(2, 4), nh(1, 4);
    const auto m = ny(rng), h = nh(rng);
    auto host = random_symmetric<Fp>(rng, f, h, 0.5, fp_picker(11, 2));
    std::vector<std::tuple<std::size_t, std::size_t, Fp>> arcs;
    for (const auto& e : host.edges()) arcs.emplace_back(e.tail, e.head, e.label);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        if (a != b) arcs.emplace_back(h + a, h + b, half);
    std::uniform_int_distribution<std::uint32_t> lab(2, 10);
    for (std::size_t x = 0; x < h; ++x) {
      if (x > 0 && lab(rng) % 2) continue;
      Fp a(lab(rng), 11), b(lab(rng), 11);
      for (std::size_t y = 0; y < m; ++y) {
        arcs.emplace_back(x, h + y, a);
        arcs.emplace_back(h + y, x, b);
      }
    }
    auto g = from_arcs(f, h + m, arcs);
    std::vector<std::size_t> Y;
    for (std::size_t y = 0; y < m; ++y) Y.push_back(h + y);
    REQUIRE(is_ideal_subgraph(g, Y));
    CHECK(contract_ideal_subgraph(g, Y).size() == g.size() - m + 1);
  }
}

TEST_CASE("reversed graph and dot export") {
  auto h = heawood(7, 3, 5);
  auto r = h.reversed();
  for (const auto& e : h.edges()) CHECK(*r.label(e.head, e.tail) == e.label);
  auto dot = to_dot(ideal_example());
  CHECK(dot.find("\"x\" -> \"y1\" [label=\"2\"]") != std::string::npos);
}
