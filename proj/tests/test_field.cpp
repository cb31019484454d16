#include "axial/field.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace axial;

TEST_CASE("parse in prime fields") {
  Field<Fp> f5(5);
  CHECK(f5.parse("1/2") == Fp(3, 5));
  CHECK(f5.parse("-1") == Fp(4, 5));
  CHECK(f5.parse("+7") == Fp(2, 5));
  CHECK(f5.parse("12/4") == Fp(3, 5));
  CHECK(f5.parse("123456789012345678901234567890") == Fp(0, 5));
  CHECK_THROWS_AS(f5.parse("1/5"), DivisionByZero);
  CHECK_THROWS_AS(f5.parse("1/"), ParseError);
  CHECK_THROWS_AS(f5.parse("x"), ParseError);
  CHECK_THROWS_AS(f5.parse(""), ParseError);
  CHECK_THROWS_AS(f5.parse("1/-2"), ParseError);
}

TEST_CASE("parse rationals") {
  Field<Q> q;
  CHECK(q.parse("0").to_string() == "0");
  CHECK(q.parse("0") == q.zero());
  CHECK(q.parse("-1/3").to_string() == "-1/3");
  CHECK(q.parse("-6/4").to_string() == "-3/2");
  CHECK(q.parse("10/5").to_string() == "2");
  CHECK_THROWS_AS(q.parse("3/0"), DivisionByZero);
  CHECK_THROWS_AS(q.parse("1.5"), ParseError);
}

TEST_CASE("field contexts") {
  CHECK_THROWS(FieldCtx::prime(1));
  CHECK_THROWS(FieldCtx::prime(9));
  CHECK_THROWS(FieldCtx::prime((std::uint64_t{1} << 31) + 11));
  CHECK(FieldCtx::prime(2147483647).p == 2147483647u);
  CHECK(FieldCtx::prime(7).name() == "F_7");
  CHECK(FieldCtx::rationals().name() == "Q");
  CHECK_THROWS_AS(Field<Fp>(FieldCtx::rationals()), FieldMismatch);
  CHECK_THROWS_AS(Field<Q>(FieldCtx::prime(3)), FieldMismatch);
}

TEST_CASE("arithmetic examples") {
  CHECK(Fp(3, 7).inv() == Fp(5, 7));
  Field<Q> q;
  CHECK(q.one() / (q.from_int(2) - q.from_int(5)) == q.parse("-1/3"));
  CHECK_THROWS_AS(Fp(0, 7).inv(), DivisionByZero);
  CHECK_THROWS_AS(q.zero().inv(), DivisionByZero);
  CHECK_THROWS_AS(Fp(1, 5) + Fp(1, 7), FieldMismatch);
  // 1/2 does not exist in characteristic 2
  CHECK_THROWS_AS(Field<Fp>(2).from_int(2).inv(), DivisionByZero);
}

TEST_CASE("large modulus does not overflow") {
  const std::uint32_t p = 2147483647u;
  Fp a(p - 1, p);
  CHECK(a * a == Fp(1, p));
  CHECK(a + a == Fp(p - 2, p));
  CHECK(a.inv() == a);
}

namespace {

template <class S, class Gen>
void field_axioms(Gen gen, int rounds) {
  for (int k = 0; k < rounds; ++k) {
    S a = gen(), b = gen(), c = gen();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + (-a)).is_zero());
    CHECK(a - b == a + (-b));
    if (!a.is_zero()) {
      CHECK((a * a.inv()).is_one());
      CHECK((b / a) * a == b);
    }
  }
}

}  // namespace

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(11);
  for (std::uint32_t p : {2u, 3u, 7u, 101u, 65521u, 2147483647u}) {
    std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
    field_axioms<Fp>([&] { return Fp(d(rng), p); }, 200);
  }
  std::uniform_int_distribution<int> num(-50, 50), den(1, 30);
  field_axioms<Q>([&] { return Q(BigInt(num(rng)), BigInt(den(rng))); }, 200);
}

TEST_CASE("render then parse is the identity on canonical forms") {
  std::mt19937_64 rng(12);
  Field<Fp> f(13);
  for (std::uint32_t v = 0; v < 13; ++v) CHECK(f.parse(render(Fp(v, 13))) == Fp(v, 13));
  Field<Q> q;
  std::uniform_int_distribution<int> num(-1000, 1000), den(1, 999);
  for (int k = 0; k < 300; ++k) {
    Q x(BigInt(num(rng)), BigInt(den(rng)));
    CHECK(q.parse(render(x)) == x);
    CHECK(x.denominator() > 0);
    CHECK(boost::multiprecision::gcd(x.numerator(), x.denominator()) == 1);
  }
  auto s = scalar_parse("1/2", FieldCtx::prime(5));
  CHECK(render(s) == "3");
  CHECK(render(scalar_parse("2/4", FieldCtx::rationals())) == "1/2");
}
