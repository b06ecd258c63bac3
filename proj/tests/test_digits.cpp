#include <doctest.h>

#include <random>

#include "chiral/digits.hpp"

using namespace chiral;

namespace {

std::mt19937_64 rng(0xd161757ULL);

DigitString random_canonical(size_t max_len) {
  std::uniform_int_distribution<size_t> len_dist(1, max_len);
  std::uniform_int_distribution<int> first(1, 9), any(0, 9);
  const size_t len = len_dist(rng);
  std::string s(1, static_cast<char>('0' + first(rng)));
  while (s.size() < len) s.push_back(static_cast<char>('0' + any(rng)));
  return DigitString(s);
}

}  // namespace

TEST_CASE("construction and validation") {
  CHECK(DigitString("0").length() == 1);
  CHECK(DigitString("357686312646216567629137").length() == 24);
  CHECK_THROWS_AS(DigitString(""), std::invalid_argument);
  CHECK_THROWS_AS(DigitString("12a4"), std::invalid_argument);
  CHECK_THROWS_AS(DigitString("-5"), std::invalid_argument);
  CHECK_THROWS_AS(DigitString::single(10), std::invalid_argument);
  CHECK_THROWS_AS(DigitString::single(-1), std::invalid_argument);
}

TEST_CASE("canonical form") {
  CHECK(DigitString("0").is_canonical());
  CHECK(DigitString("10").is_canonical());
  CHECK_FALSE(DigitString("03").is_canonical());
  CHECK(DigitString("03").canonicalized() == DigitString("3"));
  CHECK(DigitString("000").canonicalized() == DigitString("0"));
  CHECK(DigitString("0005000").canonicalized() == DigitString("5000"));
}

TEST_CASE("concat_right") {
  CHECK(concat_right(DigitString("2"), 3) == DigitString("23"));
  CHECK(concat_right(DigitString("2"), 5) == DigitString("25"));
  CHECK(concat_right(DigitString("7"), 0) == DigitString("70"));
  CHECK_THROWS_AS(concat_right(DigitString("7"), 12), std::invalid_argument);
}

TEST_CASE("concat_left") {
  CHECK(concat_left(1, DigitString("3")) == DigitString("13"));
  CHECK(concat_left(3, DigitString("57686312646216567629137")) ==
        DigitString("357686312646216567629137"));
  CHECK(concat_left(9, DigitString("7")) == DigitString("97"));
}

TEST_CASE("truncate_left") {
  CHECK(truncate_left(DigitString("37"), false) == DigitString("7"));
  CHECK(truncate_left(DigitString("103"), true) == DigitString("3"));
  SUBCASE("without stripping the result keeps its leading zero") {
    auto t = truncate_left(DigitString("103"), false);
    REQUIRE(t.has_value());
    CHECK(t->str() == "03");
    CHECK(t->length() == 2);
    CHECK_FALSE(t->is_canonical());
  }
  CHECK_FALSE(truncate_left(DigitString("7"), false).has_value());
  // stripping can consume everything that remains
  CHECK_FALSE(truncate_left(DigitString("100"), true).has_value());
  CHECK(truncate_left(DigitString("100"), false) == DigitString("00"));
}

TEST_CASE("truncate_right") {
  CHECK(truncate_right(DigitString("23")) == DigitString("2"));
  CHECK(truncate_right(DigitString("3576863")) == DigitString("357686"));
  CHECK_FALSE(truncate_right(DigitString("7")).has_value());
}

TEST_CASE("numeric ordering") {
  CHECK(DigitString("2") < DigitString("10"));
  CHECK(DigitString("23") < DigitString("29"));
  CHECK(DigitString("99") < DigitString("100"));
  CHECK_FALSE(DigitString("53") < DigitString("53"));
}

TEST_CASE("to_u64 boundaries") {
  CHECK(DigitString("0").to_u64() == uint64_t{0});
  CHECK(DigitString("18446744073709551615").to_u64() == UINT64_MAX);
  CHECK_FALSE(DigitString("18446744073709551616").to_u64().has_value());
  CHECK_FALSE(DigitString("99999999999999999999").to_u64().has_value());
  CHECK_FALSE(DigitString("123456789012345678901234").to_u64().has_value());
}

TEST_CASE("truncation round-trips") {
  for (int i = 0; i < 2000; ++i) {
    const DigitString x = random_canonical(80);
    const int d = static_cast<int>(rng() % 10);
    CHECK(truncate_left(concat_left(d, x), false) == x);
    CHECK(truncate_right(concat_right(x, d)) == x);
  }
}

TEST_CASE("numeric consistency against arbitrary-precision conversion") {
  for (int i = 0; i < 10000; ++i) {
    const DigitString x = random_canonical(80);
    const int d = static_cast<int>(rng() % 10);
    const mpz_class v = x.to_mpz();

    CHECK(concat_right(x, d).to_mpz() == 10 * v + d);

    mpz_class shift;
    mpz_ui_pow_ui(shift.get_mpz_t(), 10, x.length());
    CHECK(concat_left(d, x).to_mpz() == d * shift + v);
  }
}

TEST_CASE("digit_sum") {
  CHECK(DigitString("357686312646216567629137").digit_sum() == 112);
  CHECK(DigitString("0").digit_sum() == 0);
}
