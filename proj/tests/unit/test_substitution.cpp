#include "doctest.h"
#include "helpers.hpp"
#include "wordgroups/error.hpp"

using namespace testing;

TEST_SUITE("substitution") {
  TEST_CASE("parsing sorts the alphabet and ignores whitespace") {
    auto s = Substitution::parse(" 2:001 , 0:0001,1 : 02 ");
    CHECK(s == phi());
    CHECK(s.toString() == "0:0001,1:02,2:001");
    CHECK(s.image(1) == W("02"));
  }

  TEST_CASE("malformed specifications are rejected") {
    CHECK_THROWS_AS(Substitution::parse(""), ParseError);
    CHECK_THROWS_AS(Substitution::parse("0:01,0:1"), ParseError);
    CHECK_THROWS_AS(Substitution::parse("0:01,1"), ParseError);
    CHECK_THROWS_AS(Substitution::parse("0:,1:0"), ParseError);
    CHECK_THROWS_AS(Substitution::parse("0:02,1:0"), ParseError);
  }

  TEST_CASE("images and powers") {
    CHECK(phi().apply(W("02")) == W("0001001"));
    CHECK(phi().applyPower(W("2"), 2) == W("0001000102"));
    CHECK(phi().applyPower(W("1"), 0) == W("1"));
  }

  TEST_CASE("primitivity") {
    CHECK(phi().isPrimitive());
    CHECK(thueMorse().primitivityPower() == 1);
    CHECK(fibonacci().primitivityPower() == 2);
    CHECK_FALSE(Substitution::parse("0:01,1:1").isPrimitive());
    CHECK(phi().isGrowing());
    CHECK_FALSE(Substitution::parse("0:1,1:0").isGrowing());
  }

  TEST_CASE("prefix codes") {
    CHECK(phi().isPrefixCode());
    CHECK_FALSE(fibonacci().isPrefixCode());
    CHECK(thueMorse().isPrefixCode());
  }

  TEST_CASE("mirror reverses images") {
    auto m = phi().mirror();
    CHECK(m.image(0) == W("1000"));
    CHECK(m.mirror() == phi());
  }
}
