#include <doctest.h>

#include <random>

#include "hcpair/scalar.hpp"

using namespace hcpair;

TEST_CASE("rational arithmetic is exact") {
  Field q = Field::rationals();
  CHECK(Scalar::ratio(1, 2, q) + Scalar::ratio(1, 3, q) ==
        Scalar::ratio(5, 6, q));
  CHECK(Scalar::ratio(2, 4, q) == Scalar::ratio(1, 2, q));
  CHECK((Scalar::ratio(7, 3, q) / Scalar::ratio(7, 3, q)).is_one());
}

TEST_CASE("prime field arithmetic") {
  Field f5 = Field::prime(5);
  CHECK(Scalar::of(3, f5) * Scalar::of(4, f5) == Scalar::of(2, f5));
  CHECK(Scalar::of(-1, f5) == Scalar::of(4, f5));
  CHECK((Scalar::of(2, f5) / Scalar::of(3, f5)) * Scalar::of(3, f5) ==
        Scalar::of(2, f5));
}

TEST_CASE("division by zero and mixed fields rejected") {
  Field q = Field::rationals();
  Field f5 = Field::prime(5);
  CHECK_THROWS_AS(Scalar::one(q) / Scalar::zero(q), error);
  CHECK_THROWS_AS(Scalar::one(f5) / Scalar::zero(f5), error);
  CHECK_THROWS_AS(Scalar::one(q) + Scalar::one(f5), error);
}

TEST_CASE("characteristic 2 and composites rejected") {
  CHECK_THROWS_AS(Field::prime(2), error);
  CHECK_THROWS_AS(Field::prime(9), error);
  CHECK_THROWS_AS(Field::prime(1), error);
  CHECK_NOTHROW(Field::prime(3));
}

TEST_CASE("sqrt of -1") {
  // oracle: exhaustive search over small prime fields
  auto brute = [](std::uint64_t p) -> std::optional<std::uint64_t> {
    for (std::uint64_t i = 0; i < p; ++i)
      if ((i * i) % p == p - 1) return i;
    return std::nullopt;
  };
  for (std::uint64_t p : {3ull, 5ull, 7ull, 13ull, 17ull, 19ull, 29ull}) {
    Field f = Field::prime(p);
    auto got = sqrt_minus_one(f);
    auto want = brute(p);
    CHECK(got.has_value() == want.has_value());
    if (got) CHECK((*got) * (*got) == Scalar::of(-1, f));
  }
  CHECK(sqrt_minus_one(Field::prime(5)).has_value());
  auto i5 = sqrt_minus_one(Field::prime(5))->residue_value();
  CHECK((i5 == 2 || i5 == 3));
  CHECK(!sqrt_minus_one(Field::prime(7)).has_value());
  CHECK(!sqrt_minus_one(Field::rationals()).has_value());
}

TEST_CASE("field axioms on randomized triples") {
  std::mt19937_64 rng(7);
  auto rand_scalar = [&](const Field& f) {
    if (f.is_prime_field())
      return Scalar::of(static_cast<long>(rng() % f.p), f);
    long num = static_cast<long>(rng() % 41) - 20;
    long den = 1 + static_cast<long>(rng() % 9);
    return Scalar::ratio(num, den, f);
  };
  for (Field f : {Field::rationals(), Field::prime(7)}) {
    for (int it = 0; it < 200; ++it) {
      Scalar a = rand_scalar(f), b = rand_scalar(f), c = rand_scalar(f);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + (-a) == Scalar::zero(f));
      if (!b.is_zero()) CHECK((a / b) * b == a);
    }
  }
}

TEST_CASE("serialization round trip") {
  Field q = Field::rationals();
  Field f5 = Field::prime(5);
  CHECK(Scalar::ratio(-3, 2, q).str() == "-3/2");
  CHECK(Scalar::parse("5/6", q) == Scalar::ratio(5, 6, q));
  CHECK(Scalar::parse("-7", q) == Scalar::of(-7, q));
  CHECK(Scalar::of(3, f5).str() == "3 mod 5");
  CHECK(Scalar::parse("3 mod 5", f5) == Scalar::of(3, f5));
  CHECK(Scalar::parse("1/2", f5) == Scalar::of(3, f5));
  CHECK_THROWS_AS(Scalar::parse("3 mod 7", f5), error);
}
