#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "chevpres/cover.hpp"

using namespace chevpres;

TEST_CASE("standard covers pass all three conditions") {
  for (BaseType t : {BaseType::B, BaseType::C, BaseType::D})
    for (int l = 6; l <= 9; ++l) {
      CoverSpec spec = standard_cover(t, l);
      CoverReport rep = check_cover(spec);
      CAPTURE(to_string(t));
      CAPTURE(l);
      CHECK(rep.p1);
      CHECK(rep.p2);
      CHECK(rep.p3);
    }
  for (int l : {6, 7, 8}) {
    CoverReport rep = check_cover(standard_cover(BaseType::E, l));
    CAPTURE(l);
    CHECK(rep.all());
  }
}

TEST_CASE("D cover parts are the printed ones") {
  CoverSpec spec = standard_cover(BaseType::D, 6);
  CHECK(spec.parts[0] == std::vector<int>{1, 2, 3, 4, 5});
  CHECK(spec.parts[1] == std::vector<int>{1, 2, 3, 4, 6});
  CHECK(spec.parts[2] == std::vector<int>{4, 5, 6});
}

TEST_CASE("E7 cover matches the description") {
  CoverSpec spec = standard_cover(BaseType::E, 7);
  CHECK(spec.parts[0] == std::vector<int>{1, 3, 4, 5, 6, 7});
  CHECK(spec.parts[1] == std::vector<int>{1, 2, 3, 4});
  CHECK(spec.parts[2] == std::vector<int>{2, 4, 5, 6, 7});
  // each part induces a single A-chain
  for (const auto& part : spec.parts) {
    auto comps = induced_components(spec.diagram, part);
    REQUIRE(comps.size() == 1);
    auto type = classify_component(spec.diagram, comps[0]);
    CHECK(type->base == BaseType::A);
  }
}

TEST_CASE("B and C covers keep the printed two parts and add B4/C4") {
  CoverSpec b7 = standard_cover(BaseType::B, 7);
  CHECK(b7.parts[0] == std::vector<int>{1, 2, 3, 4, 5, 6});
  CHECK(b7.parts[1] == std::vector<int>{1, 2, 3, 5, 6, 7});
  CHECK(b7.parts[2] == std::vector<int>{4, 5, 6, 7});
  auto comps = induced_components(b7.diagram, b7.parts[2]);
  REQUIRE(comps.size() == 1);
  auto t = classify_component(b7.diagram, comps[0]);
  CHECK(t->base == BaseType::B);
  CHECK(t->rank == 4);

  CoverSpec c7 = standard_cover(BaseType::C, 7);
  auto c_comps = induced_components(c7.diagram, c7.parts[2]);
  auto ct = classify_component(c7.diagram, c_comps[0]);
  CHECK(ct->base == BaseType::C);
  CHECK(ct->rank == 4);

  // without the third part the pair {l-3, l} is uncovered
  CoverSpec broken = b7;
  broken.parts[2].clear();
  CoverReport rep = check_cover(broken);
  CHECK_FALSE(rep.p2);
  REQUIRE(rep.p2_witness.has_value());
  CHECK(*rep.p2_witness == std::pair{4, 7});
}

TEST_CASE("adversarial control: D cover without its A3 part fails P2 at the "
          "fork tips") {
  for (int l : {6, 7, 9}) {
    CoverSpec spec = standard_cover(BaseType::D, l);
    spec.parts[2].clear();
    CoverReport rep = check_cover(spec);
    CAPTURE(l);
    CHECK(rep.p1);
    CHECK_FALSE(rep.p2);
    REQUIRE(rep.p2_witness.has_value());
    CHECK(*rep.p2_witness == std::pair{l - 1, l});
    CHECK(rep.p3);
  }
}

TEST_CASE("P1 and P3 violations are detected") {
  // a part that is the whole B_7 diagram has a rank-7 non-A component
  CoverSpec spec = standard_cover(BaseType::B, 7);
  spec.parts[0] = spec.diagram.nodes;
  CoverReport rep = check_cover(spec);
  CHECK_FALSE(rep.p1);

  // intersection of type B4 violates P3
  CoverSpec spec2 = standard_cover(BaseType::B, 7);
  spec2.parts[0] = {4, 5, 6, 7};  // = parts[2], intersection B4
  CHECK_FALSE(check_cover(spec2).p3);
}

TEST_CASE("isolated nodes in a part are accepted but flagged") {
  CoverSpec spec = standard_cover(BaseType::D, 6);
  spec.parts[1] = {1, 2, 3, 6};  // A3 plus the isolated node 6
  CoverReport rep = check_cover(spec);
  CHECK(rep.p1);
  bool flagged = false;
  for (auto [part, node] : rep.a1_components)
    flagged = flagged || (part == 1 && node == 6);
  CHECK(flagged);
}

TEST_CASE("unsupported cover types are rejected") {
  CHECK_THROWS_AS(standard_cover(BaseType::B, 5), std::invalid_argument);
  CHECK_THROWS_AS(standard_cover(BaseType::E, 9), std::invalid_argument);
  CHECK_THROWS_AS(standard_cover(BaseType::A, 7), std::invalid_argument);
  CHECK_THROWS_AS(standard_cover(BaseType::F4, 4), std::invalid_argument);
}
