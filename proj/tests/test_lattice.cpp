#include "doctest.h"
#include "gamesec/laws.hpp"

using namespace gamesec;

namespace {
const char* kL4 =
    "elements: bot a b top\n"
    "bottom: bot\n"
    "join: a b = top\n"
    "join: a top = top\n"
    "join: b top = top\n";
}

TEST_CASE("four-point lattice parses and orders correctly") {
  SecurityLattice lat = SecurityLattice::parse(kL4);
  CHECK(lat.size() == 4);
  LevelId bot = *lat.find("bot"), a = *lat.find("a"), b = *lat.find("b"),
          top = *lat.find("top");
  CHECK(lat.bottom() == bot);
  CHECK(lat.join(a, b) == top);
  CHECK(lat.join(b, a) == top);
  CHECK(lat.join(bot, a) == a);  // bottom joins are implied
  CHECK(lat.join(a, a) == a);    // self-joins are implied
  CHECK(lat.leq(bot, a));
  CHECK(lat.leq(a, top));
  CHECK_FALSE(lat.leq(a, b));
  CHECK_FALSE(lat.leq(b, a));
  CHECK_FALSE(lat.find("missing").has_value());
}

TEST_CASE("lattice file fixture validates") {
  SecurityLattice lat =
      SecurityLattice::parse_file(std::string(GAMESEC_TEST_DATA) + "/l4.lat");
  CHECK(lat.size() == 4);
  CHECK(lat.name(lat.bottom()) == "bot");
}

TEST_CASE("contradictory unordered join entries are rejected") {
  CHECK_THROWS(SecurityLattice::parse_file(std::string(GAMESEC_TEST_DATA) +
                                           "/bad_commutativity.lat"));
}

TEST_CASE("missing joins and unknown identifiers are rejected") {
  CHECK_THROWS(SecurityLattice::parse(
      "elements: bot a b\nbottom: bot\n"));  // a join b undeclared
  CHECK_THROWS(SecurityLattice::parse(
      "elements: bot a\nbottom: zzz\njoin: a a = a\n"));
}

TEST_CASE("join laws hold on every element pair") {
  SecurityLattice lat = SecurityLattice::parse(kL4);
  for (LevelId x = 0; x < lat.size(); ++x) {
    CHECK(lat.join(x, x) == x);
    CHECK(lat.join(lat.bottom(), x) == x);
    CHECK(lat.leq(x, x));
    for (LevelId y = 0; y < lat.size(); ++y) {
      CHECK(lat.join(x, y) == lat.join(y, x));
      if (lat.leq(x, y) && lat.leq(y, x)) CHECK(x == y);
      for (LevelId z = 0; z < lat.size(); ++z) {
        CHECK(lat.join(lat.join(x, y), z) == lat.join(x, lat.join(y, z)));
        if (lat.leq(x, y) && lat.leq(y, z)) CHECK(lat.leq(x, z));
        // Monotonicity of join in each argument.
        if (lat.leq(x, y)) CHECK(lat.leq(lat.join(x, z), lat.join(y, z)));
      }
    }
  }
}
