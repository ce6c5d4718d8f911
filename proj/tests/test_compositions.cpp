#include "mzv/compositions.hpp"

#include "mzv/errors.hpp"
#include "support.hpp"

using mzv::Composition;

TEST_CASE("parse: repeated group") {
  auto spec = mzv::parse("3,{1,3}^2");
  CHECK(spec.prefix == Composition{3});
  CHECK(spec.period == Composition{1, 3});
  CHECK(spec.reps == 2);
  CHECK(spec.expand() == Composition{3, 1, 3, 1, 3});
}

TEST_CASE("parse: single argument and barred group") {
  CHECK(mzv::parse_composition("2") == Composition{2});
  Composition c = mzv::parse_composition("{-1,1}^2");
  CHECK(c == Composition{-1, 1, -1, 1});
  CHECK(c[0].barred);
  CHECK(c[0].sigma() == -1);
  CHECK_FALSE(c[1].barred);
}

TEST_CASE("parse: whitespace, empty, zero repetitions") {
  CHECK(mzv::parse_composition(" 3 , 1 ") == Composition{3, 1});
  CHECK(mzv::parse_composition("").empty());
  CHECK(mzv::parse_composition("2,{1,3}^0") == Composition{2});
  CHECK(mzv::parse_composition("{3,1}^3").depth() == 6);
}

TEST_CASE("parse: errors carry positions") {
  try {
    mzv::parse("3,,1");
    FAIL("expected a parse error");
  } catch (const mzv::ParseError& e) {
    CHECK(e.position() == 2);
  }
  CHECK_THROWS_AS(mzv::parse("3,{1"), mzv::ParseError);
  CHECK_THROWS_AS(mzv::parse("{1,3}^"), mzv::ParseError);
  CHECK_THROWS_AS(mzv::parse("{1,3}^2,3"), mzv::ParseError);
  CHECK_THROWS_AS(mzv::parse("2 3"), mzv::ParseError);
  CHECK_THROWS_AS(mzv::parse("a"), mzv::ParseError);
  CHECK_THROWS_AS(mzv::parse(""), mzv::ParseError);
}

TEST_CASE("parse: zero magnitude is a domain error") {
  CHECK_THROWS_AS(mzv::parse("2,0"), mzv::DomainError);
  CHECK_THROWS_AS(Composition({1, 0}), mzv::DomainError);
}

TEST_CASE("depth and weight") {
  Composition c{3, -1, 2};
  CHECK(c.depth() == 3);
  CHECK(c.weight() == 6);
  CHECK(c.has_bars());
  CHECK(Composition{}.weight() == 0);
}

TEST_CASE("is_convergent") {
  CHECK(mzv::is_convergent(Composition{2, 1}, true));
  CHECK_FALSE(mzv::is_convergent(Composition{1, 3}, true));
  CHECK(mzv::is_convergent(Composition{-1, 1}, true));
  CHECK(mzv::is_convergent(Composition{1, 3}, false));
  CHECK(mzv::is_convergent(Composition{}, true));
}

TEST_CASE("dual") {
  CHECK(mzv::dual(Composition{3}) == Composition{2, 1});
  CHECK(mzv::dual(Composition{3, 1}) == Composition{3, 1});
  CHECK(mzv::dual(Composition{4}) == Composition{2, 1, 1});
  CHECK(mzv::dual(Composition{2, 1}) == Composition{3});
  CHECK_THROWS_AS(mzv::dual(Composition{1, 2}), mzv::DomainError);
  CHECK_THROWS_AS(mzv::dual(Composition{-2, 1}), mzv::DomainError);
  CHECK_THROWS_AS(mzv::dual(Composition{}), mzv::DomainError);
}

TEST_CASE("render") {
  CHECK(mzv::render(Composition{3, 1, 3}) == "3,1,3");
  CHECK(mzv::render(Composition{-1, 1}) == "-1,1");
  CHECK(mzv::render(Composition{}) == "");
}
