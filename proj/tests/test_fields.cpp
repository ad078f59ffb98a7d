#include <catch2/catch_amalgamated.hpp>

#include <solvkit/fields.hpp>

using solvkit::DomainError;
using solvkit::GFp;
using solvkit::Rational;

TEST_CASE("rational construction canonicalizes") {
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(1, -2).str() == "-1/2");
  CHECK(Rational(-4, -2).str() == "2");
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational(7).str() == "7");
  CHECK_THROWS_AS(Rational(1, 0), DomainError);
}

TEST_CASE("rational from_decimal handles big operands") {
  Rational big = Rational::from_decimal("123456789012345678901234567890", "2");
  CHECK(big.str() == "61728394506172839450617283945");
  CHECK((big - big).is_zero());
  CHECK_THROWS_AS(Rational::from_decimal("1", "0"), DomainError);
}

TEST_CASE("rational arithmetic") {
  Rational a(1, 2), b(1, 3);
  CHECK((a + b).str() == "5/6");
  CHECK((a - b).str() == "1/6");
  CHECK((a * b).str() == "1/6");
  CHECK((a / b).str() == "3/2");
  CHECK((-a).str() == "-1/2");
  CHECK(a.inverse().str() == "2");
  CHECK(a.inverse() * a == Rational(1));
  CHECK_THROWS_AS(Rational(0).inverse(), DomainError);
  CHECK(Rational(1).is_one());
  CHECK(!Rational(1, 2).is_one());
}

TEST_CASE("primality probe") {
  CHECK(solvkit::is_prime_u64(2));
  CHECK(solvkit::is_prime_u64(7));
  CHECK(solvkit::is_prime_u64(32003));
  CHECK(!solvkit::is_prime_u64(0));
  CHECK(!solvkit::is_prime_u64(1));
  CHECK(!solvkit::is_prime_u64(4));
  CHECK(!solvkit::is_prime_u64(32001));
}

TEST_CASE("gfp arithmetic mod 7") {
  GFp a(3, 7), b(5, 7);
  CHECK((a + b).str() == "1");
  CHECK((a - b).str() == "5");
  CHECK((a * b).str() == "1");
  CHECK((a / b) == a * b.inverse());
  CHECK((-a).str() == "4");
  CHECK(GFp(-1, 7).str() == "6");  // least nonnegative residue
  for (long long v = 1; v < 7; ++v)
    CHECK((GFp(v, 7) * GFp(v, 7).inverse()).is_one());
  CHECK_THROWS_AS(GFp(0, 7).inverse(), DomainError);
}

TEST_CASE("gfp default zero merges with any modulus") {
  GFp z;  // zero of as-yet-unknown field
  GFp a(4, 11);
  CHECK((z + a) == a);
  CHECK((a + z) == a);
  CHECK((z * a).is_zero());
  CHECK(z == GFp(0, 11));
  CHECK(z == GFp(0, 7));
}
