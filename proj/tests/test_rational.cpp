#include <random>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "ratlp/rational.hpp"

using ratlp::Rat;

TEST_CASE("Rat_construction_is_canonical") {
  CHECK(Rat(6, 4) == Rat(3, 2));
  CHECK(Rat(-3, 6) == Rat(-1, 2));
  CHECK(Rat(2, -4) == Rat(-1, 2));  // sign always lives on the numerator
  CHECK(Rat(0, 5) == Rat(0));
  CHECK(Rat(6, 4).numerator() == 3);
  CHECK(Rat(6, 4).denominator() == 2);
  CHECK(Rat(2, -4).denominator() == 2);
  CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
}

TEST_CASE("Rat_arithmetic_is_exact") {
  CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
  CHECK(Rat(1, 3) - Rat(1, 2) == Rat(-1, 6));
  CHECK(Rat(2, 3) * Rat(9, 4) == Rat(3, 2));
  CHECK(Rat(1, 2) / Rat(3) == Rat(1, 6));
  CHECK(-Rat(5, 2) == Rat(-5, 2));
  CHECK(ratlp::abs(Rat(-5, 2)) == Rat(5, 2));
  CHECK(ratlp::abs(Rat(5, 2)) == Rat(5, 2));
  CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
  Rat r(1);
  CHECK_THROWS_AS(r /= Rat(0), std::domain_error);
}

TEST_CASE("Rat_ordering_and_sign") {
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK(Rat(-1) < Rat(-1, 2));
  CHECK(Rat(2, 4) <= Rat(1, 2));
  CHECK(Rat(3) > Rat(5, 2));
  CHECK(Rat(0).sign() == 0);
  CHECK(Rat(-7, 3).sign() == -1);
  CHECK(Rat(7, 3).sign() == 1);
  CHECK(Rat(0).is_zero());
  CHECK(!Rat(1, 9).is_zero());
}

TEST_CASE("Rat_rendering") {
  CHECK(Rat(3, 2).to_string() == "3/2");
  CHECK(Rat(-1, 2).to_string() == "-1/2");
  CHECK(Rat(5).to_string() == "5");
  CHECK(Rat(0).to_string() == "0");
  CHECK(Rat(-4, 2).to_string() == "-2");
  std::ostringstream os;
  os << Rat(10, 4);
  CHECK(os.str() == "5/2");
}

TEST_CASE("Rat_parse_accepts_exactly_the_grammar") {
  CHECK(Rat::parse("1/2") == Rat(1, 2));
  CHECK(Rat::parse("-1") == Rat(-1));
  CHECK(Rat::parse("007") == Rat(7));
  CHECK(Rat::parse("-0") == Rat(0));
  CHECK(Rat::parse("10/4") == Rat(5, 2));
  CHECK(Rat::parse("-6/4") == Rat(-3, 2));
  CHECK(!Rat::parse("1/0"));
  CHECK(!Rat::parse(""));
  CHECK(!Rat::parse("1/"));
  CHECK(!Rat::parse("/2"));
  CHECK(!Rat::parse("+1"));
  CHECK(!Rat::parse("1/-2"));
  CHECK(!Rat::parse("1/+2"));
  CHECK(!Rat::parse("1 / 2"));
  CHECK(!Rat::parse(" 1"));
  CHECK(!Rat::parse("a"));
  CHECK(!Rat::parse("1.5"));
  CHECK(!Rat::parse("-"));
  CHECK(!Rat::parse("1/2/3"));
}

TEST_CASE("Rat_random_arithmetic_stays_canonical") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-20, 20), den(1, 12);
  for (int i = 0; i < 500; ++i) {
    const Rat a(num(rng), den(rng)), b(num(rng), den(rng));
    CHECK(a + b - b == a);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    if (!b.is_zero()) CHECK(a * b / b == a);
    for (const Rat& r : {a + b, a - b, a * b}) {
      CHECK(r.denominator() > 0);
      CHECK(gcd(r.numerator(), r.denominator()) == 1);
    }
  }
}
