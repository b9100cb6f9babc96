#include <doctest.h>

#include "helixlab/error.hpp"
#include "helixlab/number.hpp"

using namespace helixlab;

TEST_CASE("rational text form") {
  CHECK(parse_rational("1/6") == Rational(1, 6));
  CHECK(parse_rational("-32/3") == Rational(-32, 3));
  CHECK(parse_rational("4/2") == Rational(2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(to_string(ratio(-2, 4)) == "-1/2");
  CHECK(ratio(4, 2) == Rational(2));
  CHECK(to_string(Rational(3)) == "3");
  CHECK(to_string(parse_rational("123456789012345678901234567891/2")) ==
        "123456789012345678901234567891/2");
}

TEST_CASE("malformed rationals are parse errors") {
  for (const char* bad : {"1/0", "", "/", "1/", "a", "1.5", "1//2", "1/-2", " 1"}) {
    CAPTURE(bad);
    try {
      parse_rational(bad);
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::ParseError);
    }
  }
}
