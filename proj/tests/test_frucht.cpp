#include "support.hpp"

#include <catch_amalgamated.hpp>

using namespace axial;
using namespace axial::testing;

TEST_CASE("the Frucht graph is cubic and asymmetric") {
  auto g = symmetric_digraph(frucht_graph(), Fp(2, 5));
  CHECK(g.size() == 12);
  for (std::size_t v = 0; v < 12; ++v) CHECK(g.out_degree(v) == 3);
  CHECK(naive_automorphism_count(g) == 1);
  CHECK(automorphism_group(g).order() == 1);
  // q, r adjacent and the pendant pair adjacent
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(6, 7));
}

TEST_CASE("gadget graphs have the prescribed group") {
  auto triv = prescribe_automorphism_group(CayleyTable::cyclic(1), {});
  CHECK(triv.verified);
  CHECK(triv.delta.vertices.size() == 12);

  for (std::size_t n : {2, 3, 4}) {
    auto c = prescribe_automorphism_group(CayleyTable::cyclic(n), {1});
    CHECK(c.verified);
    CHECK(c.aut_order == n);
    CHECK(c.action_ok);
    CHECK(c.min_degree >= 3);
  }

  auto [s3, gens] = symmetric_group(3);
  auto c = prescribe_automorphism_group(s3, gens);
  CHECK(c.verified);
  CHECK(c.aut_order == 6);
  CHECK(c.left_action.size() == gens.size());

  // Klein four-group: two involutions
  auto v4 = CayleyTable::from_permutations({Permutation(std::vector<std::uint32_t>{1, 0, 3, 2}),
                                            Permutation(std::vector<std::uint32_t>{2, 3, 0, 1})},
                                           4);
  std::vector<std::size_t> g2;
  for (std::size_t a = 1; a < v4.size() && g2.size() < 2; ++a) g2.push_back(a);
  auto cv = prescribe_automorphism_group(v4, g2);
  CHECK(cv.verified);
  CHECK(cv.aut_order == 4);
}

TEST_CASE("tag offset changes the size but not the group") {
  auto z3 = CayleyTable::cyclic(3);
  auto a = prescribe_automorphism_group(z3, {1});
  FruchtOptions opt;
  opt.tag_offset = 2;
  auto b = prescribe_automorphism_group(z3, {1}, opt);
  CHECK(a.verified);
  CHECK(b.verified);
  CHECK(a.delta.vertices.size() < b.delta.vertices.size());
  CHECK(b.aut_order == 3);
}

TEST_CASE("generated group matches left multiplication") {
  auto [s3, gens] = symmetric_group(3);
  auto c = prescribe_automorphism_group(s3, gens);
  auto g = symmetric_digraph(c.delta, Fp(1, 2));
  PermGroup left(g.size(), c.left_action);
  CHECK(left.order() == 6);
  for (const auto& p : c.aut_generators) CHECK(left.contains(p));
}

TEST_CASE("algebras with a prescribed automorphism group") {
  auto z2 = CayleyTable::cyclic(2);
  Field<Fp> f5(5), f2(2), f3(3);

  auto com = build_algebra_with_aut(z2, {1}, f5, LabelScheme::Commutative);
  CHECK(com.verified);
  CHECK(com.failures.empty());
  CHECK(com.aut_order == 2);
  CHECK(com.commutative);
  CHECK(com.simplicity == Verdict::Simple);
  REQUIRE(com.fusion_ok.has_value());
  CHECK(*com.fusion_ok);

  auto nc = build_algebra_with_aut(z2, {1}, f5, LabelScheme::NonCommutative);
  CHECK(nc.verified);
  CHECK_FALSE(nc.commutative);
  CHECK(nc.alpha == Fp(2, 5));
  CHECK(nc.beta == Fp(3, 5));

  auto one = build_algebra_with_aut(z2, {1}, f2, LabelScheme::AllOne);
  CHECK(one.verified);
  CHECK_FALSE(one.fusion_ok.has_value());
  CHECK(one.hypotheses.applies(kIncidenceF2));

  auto triv = build_algebra_with_aut(CayleyTable::cyclic(1), {}, f3, LabelScheme::Commutative);
  CHECK(triv.verified);
  CHECK(triv.aut_order == 1);

  Field<Q> q;
  auto rat = build_algebra_with_aut(CayleyTable::cyclic(3), {1}, q, LabelScheme::NonCommutative);
  CHECK(rat.verified);
  CHECK(rat.aut_order == 3);

  CHECK_THROWS_AS(build_algebra_with_aut(z2, {1}, f3, LabelScheme::NonCommutative), FieldTooSmall);
  CHECK_THROWS_AS(build_algebra_with_aut(z2, {1}, f2, LabelScheme::Commutative), FieldTooSmall);
  CHECK_THROWS_AS(build_algebra_with_aut(z2, {1}, f5, LabelScheme::AllOne), std::invalid_argument);
  CHECK_THROWS_AS(build_algebra_with_aut(z2, {1}, f5, LabelScheme::Commutative, std::optional(std::pair{Fp(2, 5), Fp(3, 5)})),
                  InvalidLabel);
  CHECK_THROWS_AS(build_algebra_with_aut(z2, {1}, f5, LabelScheme::NonCommutative, std::optional(std::pair{Fp(1, 5), Fp(3, 5)})),
                  InvalidLabel);
}
