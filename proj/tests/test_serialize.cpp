#include <doctest.h>

#include <stdexcept>

#include "chevpres/serialize.hpp"
#include "chevpres/verify.hpp"

using namespace chevpres;

TEST_CASE("presentation JSON round trip preserves the relator data") {
  for (const Presentation& pres :
       {present_sl3_sylow(FiniteField(3, 2)),
        present_sp4_sylow(FiniteField(5, 2)),
        present_affine_uplus(build_affine_diagram(BaseType::A, 3),
                             FiniteField(2, 4))}) {
    std::string text = presentation_to_json(pres);
    Presentation back = presentation_from_json(text);
    CHECK(back.meta.family == pres.meta.family);
    CHECK(back.meta.field.p == pres.meta.field.p);
    CHECK(back.meta.field.modulus == pres.meta.field.modulus);
    CHECK(back.generators == pres.generators);
    CHECK(back.relators == pres.relators);
    if (pres.meta.diagram) {
      REQUIRE(back.meta.diagram.has_value());
      CHECK(back.meta.diagram->base == pres.meta.diagram->base);
      CHECK(back.meta.diagram->rank == pres.meta.diagram->rank);
    }
  }
}

TEST_CASE("serialization is deterministic") {
  FiniteField F(3, 2);
  CHECK(presentation_to_json(present_sp4_sylow(F)) ==
        presentation_to_json(present_sp4_sylow(F)));
  CHECK(presentation_to_text(present_sl3_sylow(F)) ==
        presentation_to_text(present_sl3_sylow(F)));
}

TEST_CASE("text format lines") {
  Presentation pres = present_abelian_rootgroup(FiniteField(3, 1));
  std::string text = presentation_to_text(pres);
  CHECK(text ==
        "presentation abelian-rootgroup\n"
        "field p 3 a 1 modulus 0 1\n"
        "generators x0_1\n"
        "relators 1\n"
        "x0_1^3\n");
}

TEST_CASE("diagram JSON carries arrows") {
  std::string text = diagram_to_json(build_affine_diagram(BaseType::C, 3));
  CHECK(text.find("\"double>1\"") != std::string::npos);
  CHECK(text.find("\"double>2\"") != std::string::npos);
  CHECK(text.find("\"affine\": true") != std::string::npos);
}

TEST_CASE("loader rejects tampered structure but keeps bad exponents") {
  Presentation pres = present_sl3_sylow(FiniteField(2, 2));
  std::string text = presentation_to_json(pres);

  // reloading an untouched file reproduces the relators exactly
  Presentation loaded = presentation_from_json(text);
  CHECK(loaded.relators == pres.relators);

  // a dangling generator reference is a loader error
  std::string broken = text;
  broken.replace(broken.find("\"g1\""), 4, "\"g99\"");
  CHECK_THROWS_AS(presentation_from_json(broken), std::invalid_argument);

  // a non-canonical modulus does not pin the documented basis
  std::string wrong = text;
  wrong.replace(wrong.find("\"modulus\": [\n      1,\n      1,\n      1\n    ]"),
                std::string("\"modulus\": [\n      1,\n      1,\n      1\n    ]").size(),
                "\"modulus\": [1, 0, 1]");
  CHECK_THROWS_AS(presentation_from_json(wrong), std::invalid_argument);

  CHECK_THROWS_AS(presentation_from_json("{\"family\":\"sl3-sylow\"}"),
                  std::exception);
}

TEST_CASE("coefficient tables export for audit") {
  FiniteField F9(3, 2);
  std::string odd = coefficient_tables_to_json(F9, build_coefficient_tables(F9));
  // m(1,1) lifts 1/2 = 2 in F_9
  CHECK(odd.find("\"m\"") != std::string::npos);
  CHECK(odd.find("\"r_neg\"") != std::string::npos);
  FiniteField F4(2, 2);
  std::string even = coefficient_tables_to_json(F4, build_coefficient_tables(F4));
  CHECK(even.find("\"m\"") == std::string::npos);  // no 1/2 in char 2
  CHECK(even.find("\"c\"") != std::string::npos);
}

TEST_CASE("certification report JSON") {
  Presentation pres = present_sl3_sylow(FiniteField(2, 2));
  CertificationOptions opts;
  opts.run_closure = true;
  opts.run_todd_coxeter = true;
  opts.run_frattini = true;
  CertificationResult res = certify(pres, opts);
  std::string text = certification_to_json(res);
  CHECK(text.find("\"order_closure\": 64") != std::string::npos);
  CHECK(text.find("\"order_tc\": 64") != std::string::npos);
  CHECK(text.find("\"d_frattini\": 4") != std::string::npos);
  CHECK(text.find("\"ok\": true") != std::string::npos);
}

TEST_CASE("cover JSON records parts, checks and witnesses") {
  CoverSpec spec = standard_cover(BaseType::D, 6);
  std::string ok = cover_to_json(spec, check_cover(spec));
  CHECK(ok.find("\"P2\": true") != std::string::npos);
  spec.parts[2].clear();
  std::string bad = cover_to_json(spec, check_cover(spec));
  CHECK(bad.find("\"P2\": false") != std::string::npos);
  CHECK(bad.find("\"p2_witness\"") != std::string::npos);
}
