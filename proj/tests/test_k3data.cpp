#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "k3cy/invariants.hpp"
#include "support.hpp"

using namespace k3cy;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("parse invariant documents") {
  auto s = parse_invariants(R"({"order":2, "invariants":{"r":10,"m":12,"N":1,"Nprime":1}})");
  CHECK(s.order() == Order::Two);
  CHECK(s.get("r") == 10);
  CHECK(s.get("Nprime") == 1);

  auto bad = [](const char* doc) {
    try {
      parse_invariants(doc);
    } catch (const std::exception& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(bad(R"({"order":2, "invariants":{"r":-1,"m":12,"N":1,"Nprime":1}})") == "r must be >= 0");
  CHECK(bad(R"({"order":5, "invariants":{}})").find("order must be one of 2,3,4,6") != std::string::npos);
  CHECK(bad(R"({"order":2, "invariants":{"r":10,"m":12}})").find("missing invariants") != std::string::npos);
  CHECK(bad(R"({"order":2, "invariants":{"r":10,"m":12,"N":1,"Nprime":1,"x":0}})").find("unknown invariant") !=
        std::string::npos);
  CHECK_THROWS_AS(parse_invariants("{"), ParseError);
  CHECK_THROWS_AS(parse_invariants(R"({"order":2, "invariants":{"r":10,"m":1.5,"N":1,"Nprime":1}})"), ParseError);
  CHECK_THROWS_AS(parse_invariants(R"({"order":2, "invariants":{"r":-1,"m":12,"N":1,"Nprime":1}})"),
                  ValidationError);
}

TEST_CASE("serialize and parse round trip") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<long> v(0, 1000000);
  for (Order d : kAllOrders) {
    for (int i = 0; i < 50; ++i) {
      InvariantSet s(d);
      for (const auto& n : invariant_names(d)) s.set(n, v(rng));
      s.set_name("set " + std::to_string(i));
      const auto text = serialize_invariants(s);
      const auto back = parse_invariants(text);
      CHECK(back == s);
      CHECK(serialize_invariants(back) == text);
    }
  }
}

TEST_CASE("bundled invariant files parse and re-serialize verbatim") {
  for (int d : {2, 3, 4, 6}) {
    const auto text = slurp(std::string(K3CY_DATA_DIR) + "/order" + std::to_string(d) + ".json");
    REQUIRE_FALSE(text.empty());
    const auto s = parse_invariants(text);
    CHECK(to_int(s.order()) == d);
    CHECK(serialize_invariants(s) == text);
  }
}

TEST_CASE("surface fixed locus Euler characteristics") {
  CHECK(fixed_locus_euler(Order::Six, 3) == form(Order::Six, "2*N - 2*gF1 - 2*gF2"));
  CHECK(fixed_locus_euler(Order::Six, 0) == LinForm(24));
  CHECK(fixed_locus_euler(Order::Four, 1) == form(Order::Four, "n1 + n2 + 2*k - 2*gD"));
  CHECK(fixed_locus_euler(Order::Six, 2) == form(Order::Six, "2*k - 2*gG + npts"));
  CHECK(fixed_locus_euler(Order::Six, 2, IsolatedPoints::Omit) == form(Order::Six, "2*k - 2*gG"));
  CHECK(fixed_locus_euler(Order::Six, 1) == form(Order::Six, "2*l - 2*gD + p34 + p25"));
  CHECK(fixed_locus_euler(Order::Four, 2) == form(Order::Four, "2*N - 2*gD"));
  CHECK_THROWS_AS(fixed_locus_euler(Order::Four, 4), UsageError);
  // depends only on gcd(j, d)
  for (Order d : kAllOrders) {
    const int n = to_int(d);
    for (int j = 1; j < n; ++j) CHECK(fixed_locus_euler(d, j) == fixed_locus_euler(d, std::gcd(j, n)));
  }
}

TEST_CASE("elliptic fixed point counts match the lattice index") {
  CHECK(elliptic_fixed_count(Order::Two, 1) == 4);
  CHECK(elliptic_fixed_count(Order::Six, 1) == 1);
  CHECK(elliptic_fixed_count(Order::Six, 2) == 3);
  CHECK(elliptic_fixed_count(Order::Six, 3) == 4);
  CHECK(elliptic_fixed_count(Order::Four, 1) == 2);
  CHECK(elliptic_fixed_count(Order::Four, 2) == 4);
  CHECK(elliptic_fixed_count(Order::Three, 1) == 3);
  CHECK(elliptic_fixed_count(Order::Three, 2) == 3);
  for (Order d : kAllOrders) {
    CHECK(elliptic_fixed_count(d, 0) == 0);
    for (int j = 1; j < to_int(d); ++j) {
      CAPTURE(to_int(d));
      CAPTURE(j);
      CHECK(elliptic_fixed_count(d, j) == k3cy::testing::lattice_fixed_points(to_int(d), j));
    }
  }
}

TEST_CASE("namespace checks") {
  CHECK_THROWS_AS(form(Order::Two, "r + k"), UsageError);
  CHECK_THROWS_AS(order_from_int(5), UsageError);
  CHECK(invariant_names(Order::Six).size() == 21);
  CHECK(invariant_names(Order::Four).size() == 11);
  CHECK_THROWS_AS(InvariantSet(Order::Two).set("r", -1), ValidationError);
}
