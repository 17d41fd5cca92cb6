// Copyright 2026 The sgq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <set>
#include <sstream>

#include "sgq/errors.hpp"
#include "sgq/json_io.hpp"
#include "sgq/ortholattice.hpp"

using namespace sgq;

namespace {

// Parses "{1,3}" into a quadrant set, independently of the lattice order.
std::set<int> quadrants(const std::string& name) {
  std::set<int> out;
  for (char ch : name)
    if (ch >= '1' && ch <= '9') out.insert(ch - '0');
  return out;
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const DomainError& e) {
    return e.kind();
  }
  FAIL("expected a DomainError");
  return ErrorKind::kInvalidConfig;
}

}  // namespace

TEST_CASE("firefly meets and joins") {
  const auto lat = firefly_lattice();
  CHECK(meet(lat, "l", "r") == "bot");
  CHECK(meet(lat, "l", "top") == "l");
  CHECK(meet(lat, "u", "d") == "bot");
  CHECK(join(lat, "r", "d") == "top");
  for (const auto& x : lat.elements()) CHECK(join(lat, "bot", x) == x);

  const char* atoms[] = {"l", "r", "u", "d"};
  for (const char* a : atoms)
    for (const char* b : atoms) {
      if (std::string(a) == b) continue;
      CHECK(lat.join(a, b) == "top");
      CHECK(lat.meet(a, b) == "bot");
    }
  CHECK(lat.ortho("l") == "r");
  CHECK(lat.ortho("u") == "d");
}

TEST_CASE("unknown element ids are domain errors") {
  const auto lat = firefly_lattice();
  CHECK(kind_of([&] { lat.meet("l", "x"); }) == ErrorKind::kUnknownElement);
  CHECK(kind_of([&] { lat.join("q", "l"); }) == ErrorKind::kUnknownElement);
  CHECK(kind_of([&] { lat.ortho("?"); }) == ErrorKind::kUnknownElement);
}

TEST_CASE("boolean lattice joins atoms into window sets") {
  const auto b = boolean_lattice(4);
  CHECK(b.size() == 16);
  CHECK(join(b, "{1}", "{2}") == "{1,2}");
  CHECK(meet(b, "{1,2}", "{1,3}") == "{1}");
  CHECK(b.ortho("{1,2}") == "{3,4}");
  CHECK(b.bottom() == "{}");
  CHECK(b.top() == "{1,2,3,4}");
}

TEST_CASE("distributivity witness") {
  const auto lat = firefly_lattice();
  CHECK(lat.meet("l", lat.join("r", "d")) == "l");
  CHECK(lat.join(lat.meet("l", "r"), lat.meet("l", "d")) == "bot");

  const auto w = find_distributivity_violation(lat);
  REQUIRE(w.has_value());
  const auto& [x, y, z] = *w;
  CHECK(lat.meet(x, lat.join(y, z)) != lat.join(lat.meet(x, y), lat.meet(x, z)));

  for (int atoms = 0; atoms <= 4; ++atoms) CHECK_FALSE(find_distributivity_violation(boolean_lattice(atoms)));
  CHECK_FALSE(find_distributivity_violation(two_element_lattice()));
}

TEST_CASE("orthomodular law") {
  CHECK(check_orthomodular(firefly_lattice()).holds);
  CHECK(check_orthomodular(boolean_lattice(4)).holds);
  CHECK(check_orthomodular(two_element_lattice()).holds);

  const auto hex = hexagon_lattice();
  const auto om = check_orthomodular(hex);
  CHECK_FALSE(om.holds);
  REQUIRE(om.counterexample);
  const auto& [x, y] = *om.counterexample;
  CHECK(hex.leq(x, y));
  CHECK(hex.join(x, hex.meet(y, hex.ortho(x))) != y);
  // Not orthomodular, hence not distributive either.
  CHECK(find_distributivity_violation(hex).has_value());
}

TEST_CASE("lattice laws hold exhaustively on every fixture") {
  for (const auto& lat : {firefly_lattice(), boolean_lattice(0), boolean_lattice(1), boolean_lattice(2),
                          boolean_lattice(3), boolean_lattice(4), two_element_lattice(), hexagon_lattice()}) {
    for (const auto& law : check_lattice_laws(lat)) {
      INFO(law.name);
      CHECK(law.holds);
    }
  }
}

TEST_CASE("boolean embedding of the firefly lattice") {
  const auto src = firefly_lattice();
  const auto dst = boolean_lattice(4);
  const auto map = boolean_embedding(src);
  CHECK(map.at("l") == "{1,2}");
  CHECK(map.at("r") == "{3,4}");
  CHECK(map.at("d") == "{1,3}");
  CHECK(map.at("u") == "{2,4}");
  CHECK(map.at("bot") == "{}");
  CHECK(map.at("top") == "{1,2,3,4}");
  CHECK(dst.ortho(map.at("l")) == map.at("r"));

  const auto check = check_embedding(src, dst, map);
  CHECK(check.ok());

  // Order agrees with set inclusion of the images.
  for (const auto& [x, fx] : map)
    for (const auto& [y, fy] : map) {
      const auto a = quadrants(fx), b = quadrants(fy);
      const bool subset = std::includes(b.begin(), b.end(), a.begin(), a.end());
      CHECK(src.leq(x, y) == subset);
      CHECK(dst.leq(fx, fy) == subset);
    }

  // Moving l to a single quadrant breaks both order and orthocomplement.
  auto broken = map;
  broken["l"] = "{1}";
  const auto bad = check_embedding(src, dst, broken);
  CHECK(bad.injective);
  CHECK_FALSE(bad.order_preserving);
  CHECK_FALSE(bad.ortho_preserving);
  broken["l"] = "{1,3}";
  CHECK_FALSE(check_embedding(src, dst, broken).injective);

  CHECK(kind_of([&] { boolean_embedding(two_element_lattice()); }) == ErrorKind::kUnknownElement);
}

TEST_CASE("invalid lattices are rejected") {
  using C = std::vector<FiniteOrtholattice::Cover>;
  CHECK(kind_of([] {
          FiniteOrtholattice({"0", "a", "1"}, C{{"0", "a"}, {"a", "0"}, {"a", "1"}},
                             {{"0", "1"}, {"1", "0"}, {"a", "a"}}, "0", "1");
        }) == ErrorKind::kInvalidLattice);
  // Bowtie: a and b have two minimal upper bounds.
  CHECK(kind_of([] {
          FiniteOrtholattice({"0", "a", "b", "c", "d", "1"},
                             C{{"0", "a"}, {"0", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}, {"c", "1"}, {"d", "1"}},
                             {{"0", "1"}, {"1", "0"}, {"a", "d"}, {"d", "a"}, {"b", "c"}, {"c", "b"}}, "0", "1");
        }) == ErrorKind::kInvalidLattice);
  // Ortho that is not a complement.
  CHECK(kind_of([] {
          FiniteOrtholattice({"0", "a", "b", "1"}, C{{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}},
                             {{"0", "1"}, {"1", "0"}, {"a", "a"}, {"b", "b"}}, "0", "1");
        }) == ErrorKind::kInvalidLattice);
  // Unknown element in a cover.
  CHECK(kind_of([] {
          FiniteOrtholattice({"0", "1"}, C{{"0", "x"}}, {{"0", "1"}, {"1", "0"}}, "0", "1");
        }) == ErrorKind::kInvalidLattice);
  // Missing orthocomplement.
  CHECK(kind_of([] { FiniteOrtholattice({"0", "1"}, C{{"0", "1"}}, {{"0", "1"}}, "0", "1"); }) ==
        ErrorKind::kInvalidLattice);
}

TEST_CASE("lattice JSON round trip preserves structure") {
  for (const auto& lat : {firefly_lattice(), boolean_lattice(4), hexagon_lattice()}) {
    const auto back = lattice_from_json(json::parse(lattice_to_json(lat).dump()));
    REQUIRE(back.elements() == lat.elements());
    for (const auto& x : lat.elements()) {
      CHECK(back.ortho(x) == lat.ortho(x));
      for (const auto& y : lat.elements()) {
        CHECK(back.leq(x, y) == lat.leq(x, y));
        CHECK(back.meet(x, y) == lat.meet(x, y));
      }
    }
  }
  CHECK(kind_of([] { lattice_from_json(json::parse(R"({"elements": ["a"]})")); }) == ErrorKind::kInvalidLattice);
}
