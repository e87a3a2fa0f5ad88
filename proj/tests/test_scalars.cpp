#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hopfcat/scalars.hpp"

using namespace hopfcat;

namespace {

// independent oracle: Euler totient by brute count of units mod n
long totient_brute(long n) {
  long count = 0;
  for (long k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++count;
  return count;
}

}  // namespace

TEST_CASE("field construction") {
  auto Q = Field::make(FieldSpec::rationals());
  CHECK(Q->characteristic() == 0);
  CHECK(Q->dimension() == 1);

  auto C12 = Field::make(FieldSpec::cyclotomic(12));
  CHECK(C12->dimension() == static_cast<std::size_t>(totient_brute(12)));

  CHECK_THROWS_AS(Field::make(FieldSpec::prime(4)), error);
  CHECK_THROWS_AS(Field::make(FieldSpec::cyclotomic(0)), error);
  // x^2 + 1 is reducible over F_2: (x+1)^2
  CHECK_THROWS_AS(Field::make(FieldSpec::prime_extension(2, {1, 0, 1})), error);
  CHECK_NOTHROW(Field::make(FieldSpec::prime_extension(2, {1, 1, 1})));
}

TEST_CASE("scalar arithmetic") {
  auto Q = Field::make(FieldSpec::rationals());
  CHECK(Q->from_mpq(mpq_class(1, 2)) + Q->from_mpq(mpq_class(1, 3)) ==
        Q->from_mpq(mpq_class(5, 6)));

  auto Qi = Field::make(FieldSpec::cyclotomic(4));
  auto zeta = Qi->generator();
  CHECK(zeta * zeta == Qi->from_int(-1));

  auto F2 = Field::make(FieldSpec::prime(2));
  CHECK((F2->one() + F2->one()).is_zero());

  CHECK_THROWS_AS(Q->zero().inv(), error);
  CHECK_THROWS_AS(Q->one() + F2->one(), error);  // field mismatch
}

TEST_CASE("primitive roots of unity") {
  auto Q = Field::make(FieldSpec::rationals());
  auto r2 = Q->primitive_root_of_unity(2);
  REQUIRE(r2);
  CHECK(*r2 == Q->from_int(-1));
  CHECK(!Q->primitive_root_of_unity(4));

  auto F7 = Field::make(FieldSpec::prime(7));
  // brute-force oracle: smallest residue of exact order 3 mod 7
  long expected = 0;
  for (long x = 2; x < 7; ++x)
    if (x * x % 7 != 1 && x * x * x % 7 == 1) {
      expected = x;
      break;
    }
  REQUIRE(expected == 2);
  auto r3 = F7->primitive_root_of_unity(3);
  REQUIRE(r3);
  CHECK(*r3 == F7->from_int(expected));
}

TEST_CASE("cyclotomic(12) contains exactly the divisor-order roots") {
  auto C12 = Field::make(FieldSpec::cyclotomic(12));
  for (unsigned long m : {1ul, 2ul, 3ul, 4ul, 6ul, 12ul}) {
    auto r = C12->primitive_root_of_unity(m);
    REQUIRE(r);
    CHECK(r->pow(static_cast<long>(m)).is_one());
    for (unsigned long d = 1; d < m; ++d)
      if (m % d == 0) CHECK(!r->pow(static_cast<long>(d)).is_one());
  }
  for (unsigned long m : {5ul, 7ul, 8ul}) CHECK(!C12->primitive_root_of_unity(m));
}

TEST_CASE("field axioms on randomized triples") {
  std::mt19937 rng(20240811);
  auto random_scalar = [&](const FieldPtr& F) {
    std::uniform_int_distribution<long> num(-6, 6), den(1, 5);
    Scalar acc = F->zero(), power = F->one();
    Scalar gen = F->generator();
    for (std::size_t i = 0; i < F->dimension(); ++i) {
      mpq_class coeff = (F->characteristic() == 0) ? mpq_class(num(rng), den(rng))
                                                   : mpq_class(num(rng));
      acc = acc + F->from_mpq(coeff) * power;
      power = power * gen;
    }
    return acc;
  };
  std::vector<FieldPtr> fields{Field::make(FieldSpec::rationals()),
                               Field::make(FieldSpec::cyclotomic(12)),
                               Field::make(FieldSpec::prime(7)),
                               Field::make(FieldSpec::prime_extension(2, {1, 1, 1}))};
  for (const auto& F : fields) {
    for (int trial = 0; trial < 40; ++trial) {
      Scalar a = random_scalar(F), b = random_scalar(F), c = random_scalar(F);
      CHECK((a * b) * c == a * (b * c));
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + (-a) == F->zero());
      if (!a.is_zero()) CHECK(a * a.inv() == F->one());
    }
  }
}

TEST_CASE("serialization round trips") {
  auto C12 = Field::make(FieldSpec::cyclotomic(12));
  auto z = C12->generator();
  Scalar s = C12->from_mpq(mpq_class(1, 2)) * z * z - C12->one();
  CHECK(s.str() == "1/2*z^2 - 1");
  CHECK(C12->parse_scalar(s.str()) == s);
  CHECK(C12->parse_scalar("0").is_zero());
  CHECK(C12->parse_scalar("-z^3 + 2") == -(z.pow(3)) + C12->from_int(2));

  auto Q = Field::make(FieldSpec::rationals());
  CHECK(Q->parse_scalar("-7/3") == Q->from_mpq(mpq_class(-7, 3)));
  CHECK(Q->from_mpq(mpq_class(-7, 3)).str() == "-7/3");

  auto F7 = Field::make(FieldSpec::prime(7));
  CHECK(F7->parse_scalar("12") == F7->from_int(5));

  for (const char* spec : {"Q", "Q(z12)", "F2", "F7", "F2[1,1,1]"})
    CHECK(FieldSpec::parse(spec).to_string() == spec);
  CHECK_THROWS_AS(FieldSpec::parse("Q(z0)"), error);
  CHECK_THROWS_AS(FieldSpec::parse("nonsense"), error);
}

TEST_CASE("torsion units are exactly the roots of unity") {
  auto C12 = Field::make(FieldSpec::cyclotomic(12));
  CHECK(C12->torsion_order() == 12);
  for (const auto& u : C12->torsion_units()) {
    unsigned long d = C12->unit_order(u);
    CHECK(u.pow(static_cast<long>(d)).is_one());
  }
  auto F4 = Field::make(FieldSpec::prime_extension(2, {1, 1, 1}));
  CHECK(F4->torsion_order() == 3);
  CHECK(F4->primitive_root_of_unity(3).has_value());
}
