#include "npl/gf.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace npl;

static void check_axioms_exhaustive(const FiniteField& f) {
  const uint32_t q = f.order;
  // additive and multiplicative identities, inverses
  for (uint32_t a = 0; a < q; ++a) {
    CHECK(f.add(a, 0) == a);
    CHECK(f.mul(a, 1) == a);
    CHECK(f.add(a, f.neg(a)) == 0);
    if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
  }
  // commutativity and associativity/distributivity over all triples
  for (uint32_t a = 0; a < q; ++a)
    for (uint32_t b = 0; b < q; ++b) {
      REQUIRE(f.add(a, b) == f.add(b, a));
      REQUIRE(f.mul(a, b) == f.mul(b, a));
      for (uint32_t c = 0; c < q; ++c) {
        REQUIRE(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
        REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
        REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      }
    }
}

TEST_CASE("field axioms hold exhaustively on small orders") {
  for (auto [p, n] : std::vector<std::pair<uint32_t, uint32_t>>{
           {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {11, 1}, {13, 1}, {2, 4}}) {
    FiniteField f(p, n);
    INFO(f.str());
    check_axioms_exhaustive(f);
  }
}

TEST_CASE("canonical moduli are the lexicographically least irreducibles") {
  CHECK(FiniteField(2, 2).modulus == std::vector<uint32_t>{1, 1, 1});   // x^2+x+1
  CHECK(FiniteField(2, 3).modulus == std::vector<uint32_t>{1, 1, 0, 1}); // x^3+x+1
  CHECK(FiniteField(3, 2).modulus == std::vector<uint32_t>{1, 0, 1});   // x^2+1
  CHECK(FiniteField(2, 4).modulus == std::vector<uint32_t>{1, 1, 0, 0, 1});
  CHECK(FiniteField(5, 1).modulus == std::vector<uint32_t>{0, 1});
}

TEST_CASE("multiplicative group is cyclic of order q-1") {
  for (auto [p, n] : std::vector<std::pair<uint32_t, uint32_t>>{{2, 4}, {3, 3}, {5, 2}, {7, 2}}) {
    FiniteField f(p, n);
    uint32_t g = f.generator();
    std::set<uint32_t> seen;
    uint32_t v = 1;
    for (uint32_t i = 0; i + 1 < f.order; ++i) {
      seen.insert(v);
      v = f.mul(v, g);
    }
    CHECK(v == 1);
    CHECK(seen.size() == f.order - 1);
  }
}

TEST_CASE("inverses across table and polynomial paths") {
  FiniteField small(2, 12);  // 4096, tabled
  for (uint32_t a = 1; a < small.order; a += 7) CHECK(small.mul(a, small.inv(a)) == 1);

  FiniteField big(2, 17);  // 131072 > 2^16, polynomial path
  CHECK_FALSE(big.has_tables());
  for (uint32_t a : {1u, 2u, 3u, 12345u, 99999u, 131071u}) {
    CHECK(big.mul(a, big.inv(a)) == 1);
    CHECK(big.add(a, big.neg(a)) == 0);
  }
  // distributivity samples on the polynomial path
  for (uint32_t a : {3u, 777u}) {
    for (uint32_t b : {5u, 1024u}) {
      for (uint32_t c : {9u, 65537u}) {
        CHECK(big.mul(a, big.add(b, c)) == big.add(big.mul(a, b), big.mul(a, c)));
      }
    }
  }

  FiniteField bigodd(5, 8);  // 390625 > 2^16, odd characteristic
  CHECK_FALSE(bigodd.has_tables());
  for (uint32_t a : {1u, 4u, 390624u, 12345u}) {
    CHECK(bigodd.mul(a, bigodd.inv(a)) == 1);
    CHECK(bigodd.add(a, bigodd.neg(a)) == 0);
  }
}

TEST_CASE("frobenius conjugation is an involutive automorphism") {
  for (auto [p, n] : std::vector<std::pair<uint32_t, uint32_t>>{{2, 2}, {3, 2}, {2, 4}, {5, 2}}) {
    FiniteField f(p, n);
    uint32_t fixed = 0;
    for (uint32_t a = 0; a < f.order; ++a) {
      uint32_t ca = f.conjugate(a);
      CHECK(f.conjugate(ca) == a);
      if (ca == a) ++fixed;
      for (uint32_t b = 0; b < f.order; ++b) {
        REQUIRE(f.conjugate(f.add(a, b)) == f.add(ca, f.conjugate(b)));
        REQUIRE(f.conjugate(f.mul(a, b)) == f.mul(ca, f.conjugate(b)));
      }
    }
    // fixed points form the subfield of order p^(n/2)
    uint32_t sub = 1;
    for (uint32_t i = 0; i < n / 2; ++i) sub *= p;
    CHECK(fixed == sub);
  }
  CHECK_THROWS_AS(FiniteField(2, 3).conjugate(1), input_error);
}

TEST_CASE("norms of the hermitean base case live in the subfield") {
  FiniteField f(2, 2);  // GF(4) over GF(2)
  for (uint32_t a = 0; a < 4; ++a) {
    uint32_t norm = f.mul(a, f.conjugate(a));
    CHECK((norm == 0 || norm == 1));
  }
}

TEST_CASE("construction guards") {
  CHECK_THROWS_AS(FiniteField(4, 1), input_error);   // not prime
  CHECK_THROWS_AS(FiniteField(6, 2), input_error);
  CHECK_THROWS_AS(FiniteField(2, 21), input_error);  // 2^21 > cap
  CHECK_THROWS_AS(FiniteField(2, 0), input_error);
  CHECK_NOTHROW(FiniteField(2, 20));                 // exactly at the cap
  FiniteField f(3, 1);
  CHECK_THROWS_AS(f.inv(0), input_error);
  CHECK_THROWS_AS(f.add(3, 0), input_error);         // code out of range
}

TEST_CASE("element wrappers carry their field") {
  auto f = make_field(2, 2);
  auto g = make_field(3, 1);
  FieldElement x = f->element(2), y = f->element(3);
  CHECK((x + y).code == f->add(2, 3));
  CHECK((x * y).code == f->mul(2, 3));
  CHECK((x / y) * y == x);
  CHECK((-x + x).is_zero());
  CHECK(x.conj().conj() == x);
  CHECK_THROWS_AS(x + g->element(1), input_error);
  CHECK_THROWS_AS(f->element(7), input_error);
}

TEST_CASE("pow agrees with iterated multiplication") {
  FiniteField f(3, 3);
  for (uint32_t a : {0u, 1u, 5u, 26u}) {
    uint32_t acc = 1;
    for (int e = 0; e < 9; ++e) {
      CHECK(f.pow(a, e) == acc);
      acc = f.mul(acc, a);
    }
  }
  CHECK(f.pow(0, 0) == 1);
  CHECK(f.pow(0, 5) == 0);
}
