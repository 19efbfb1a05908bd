#include <doctest.h>

#include <stdexcept>

#include "chevpres/bounds.hpp"
#include "chevpres/presentation.hpp"

using namespace chevpres;

TEST_CASE("abelian root group counts") {
  CHECK(present_abelian_rootgroup(FiniteField(5, 1)).r_count() == 1);
  Presentation p2 = present_abelian_rootgroup(FiniteField(3, 2));
  CHECK(p2.d_count() == 2);
  CHECK(p2.r_count() == 3);
  Presentation p3 = present_abelian_rootgroup(FiniteField(2, 3));
  CHECK(p3.d_count() == 3);
  CHECK(p3.r_count() == 6);
}

TEST_CASE("sl3 sylow counts: 2a generators, 2a(a+1) relators") {
  for (auto [p, a] : {std::pair{2, 1}, {3, 1}, {2, 2}, {3, 2}, {5, 2}, {2, 4},
                      {3, 3}}) {
    Presentation pres = present_sl3_sylow(FiniteField(p, a));
    CAPTURE(p);
    CAPTURE(a);
    CHECK(pres.d_count() == 2 * a);
    CHECK(pres.r_count() == 2 * a * (a + 1));
    CHECK(pres.block_count("A1") == 2 * a);
    CHECK(pres.block_count("A2") == a * (a - 1));
    CHECK(pres.block_count("A3") == 2 * a);
    CHECK(pres.block_count("A4") == a * (a - 1));
  }
}

TEST_CASE("sp4 sylow counts: 2a generators, (7a^2+13a)/2 relators") {
  for (auto [p, a] : {std::pair{3, 1}, {5, 1}, {3, 2}, {5, 2}, {3, 3}}) {
    Presentation pres = present_sp4_sylow(FiniteField(p, a));
    CAPTURE(p);
    CAPTURE(a);
    CHECK(pres.d_count() == 2 * a);
    CHECK(pres.r_count() == (7 * a * a + 13 * a) / 2);
    CHECK(pres.block_count("C1") == 3 * a);
    CHECK(pres.block_count("C11") == a * a);
  }
  // q = 3 -> 10 relators, q = 9 and q = 25 -> 27 relators
  CHECK(present_sp4_sylow(FiniteField(3, 1)).r_count() == 10);
  CHECK(present_sp4_sylow(FiniteField(3, 2)).r_count() == 27);
  CHECK(present_sp4_sylow(FiniteField(5, 2)).r_count() == 27);
}

TEST_CASE("sp4 family dispatch on parity") {
  CHECK_THROWS_AS(present_sp4_sylow(FiniteField(2, 2)), std::invalid_argument);
  CHECK_THROWS_AS(present_sp4_sylow_even(FiniteField(3, 2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(present_sp4_sylow_even(FiniteField(2, 1)),
                  std::invalid_argument);
}

TEST_CASE("sp4 even case: 8a^2 pair relators on top of the base block") {
  for (int a : {2, 3, 4}) {
    Presentation pres = present_sp4_sylow_even(FiniteField(2, a));
    CAPTURE(a);
    CHECK(pres.d_count() == 2 * a);
    long long pair_block = 0;
    for (const auto& [label, count] : pres.meta.blocks)
      if (label[0] == 'E') pair_block += count;
    CHECK(pair_block == 8 * a * a);
    CHECK(pres.r_count() == 8 * a * a + a * (a + 1));
  }
}

TEST_CASE("no builder emits a freely empty relator") {
  std::vector<Presentation> all;
  all.push_back(present_abelian_rootgroup(FiniteField(3, 2)));
  all.push_back(present_sl3_sylow(FiniteField(2, 3)));
  all.push_back(present_sp4_sylow(FiniteField(3, 2)));
  all.push_back(present_sp4_sylow_even(FiniteField(2, 2)));
  all.push_back(present_sp4_sylow_even(FiniteField(2, 4)));
  all.push_back(present_affine_uplus(build_affine_diagram(BaseType::C, 3),
                                     FiniteField(3, 3)));
  for (const Presentation& pres : all)
    for (const Word& w : pres.relators) CHECK_FALSE(w.empty());
}

TEST_CASE("sp4 relators mention only the 2a declared generators") {
  for (const Presentation& pres :
       {present_sp4_sylow(FiniteField(3, 2)),
        present_sp4_sylow_even(FiniteField(2, 4))}) {
    for (const Word& w : pres.relators)
      for (const Letter& l : w.letters()) {
        CHECK(l.gen >= 0);
        CHECK(l.gen < pres.d_count());
      }
  }
}

TEST_CASE("every relator of every family has zero exponent sums mod p") {
  auto all_zero = [](const Presentation& pres, int p) {
    AbelianizationRank r = mod_p_abelianization_rank(pres, p);
    return r.rank == 0 && r.d_lower == pres.d_count();
  };
  CHECK(all_zero(present_abelian_rootgroup(FiniteField(3, 2)), 3));
  CHECK(all_zero(present_sl3_sylow(FiniteField(2, 2)), 2));
  CHECK(all_zero(present_sl3_sylow(FiniteField(3, 2)), 3));
  CHECK(all_zero(present_sp4_sylow(FiniteField(3, 2)), 3));
  CHECK(all_zero(present_sp4_sylow(FiniteField(5, 2)), 5));
  CHECK(all_zero(present_sp4_sylow_even(FiniteField(2, 4)), 2));
  DynkinDiagram a3 = build_affine_diagram(BaseType::A, 3);
  CHECK(all_zero(present_affine_uplus(a3, FiniteField(2, 4)), 2));
}

TEST_CASE("mod-p abelianization rank of a collapsing presentation") {
  // <g | g> has full rank 1, so d_lower = 0
  Presentation pres;
  pres.generators = {{0, 1}};
  pres.relators = {single(0)};
  AbelianizationRank r = mod_p_abelianization_rank(pres, 3);
  CHECK(r.rank == 1);
  CHECK(r.d_lower == 0);
}

TEST_CASE("affine U+ generator and relator counts") {
  // A~3 over F16: 16 generators, 152 relators
  Presentation a3 =
      present_affine_uplus(build_affine_diagram(BaseType::A, 3), FiniteField(2, 4));
  CHECK(a3.d_count() == 16);
  CHECK(a3.r_count() == 152);

  // D~4 over F16: (a^2 25 + 3a*5 - 2a)/2 = 226
  Presentation d4 =
      present_affine_uplus(build_affine_diagram(BaseType::D, 4), FiniteField(2, 4));
  CHECK(d4.d_count() == 20);
  CHECK(d4.r_count() == 226);

  // F~4 over F17: 14a^2 + 11a = 25
  Presentation f4 = present_affine_uplus(build_affine_diagram(BaseType::F4, 4),
                                         FiniteField(17, 1));
  CHECK(f4.d_count() == 5);
  CHECK(f4.r_count() == 25);
}

TEST_CASE("affine U+ rejects out-of-scope input") {
  FiniteField f16(2, 4);
  CHECK_THROWS_AS(
      present_affine_uplus(build_affine_diagram(BaseType::A, 2), f16),
      std::invalid_argument);
  CHECK_THROWS_AS(
      present_affine_uplus(build_finite_diagram(BaseType::A, 3), f16),
      std::invalid_argument);
  CHECK_THROWS_AS(
      present_affine_uplus(build_affine_diagram(BaseType::A, 3), FiniteField(3, 1)),
      std::invalid_argument);
  // small q is allowed when explicitly requested (count evaluation)
  AffineOptions opts;
  opts.allow_small_q = true;
  Presentation small = present_affine_uplus(build_affine_diagram(BaseType::A, 3),
                                            FiniteField(3, 1), opts);
  CHECK(small.r_count() == (1 * 16 + 3 * 4) / 2);
}

TEST_CASE("three-way count agreement: builder, pair formula, closed form") {
  // Table 1 rows; B, C, F4 are recorded for p odd only
  struct Row {
    BaseType t;
    int lmin, lmax;
  };
  AffineOptions opts;
  opts.allow_small_q = true;
  for (const Row& row : {Row{BaseType::A, 3, 8}, {BaseType::B, 3, 8},
                         {BaseType::C, 3, 8}, {BaseType::D, 4, 8},
                         {BaseType::E, 6, 8}, {BaseType::F4, 4, 4}})
    for (int l = row.lmin; l <= row.lmax; ++l)
      for (int a = 1; a <= 4; ++a) {
        CAPTURE(to_string(row.t));
        CAPTURE(l);
        CAPTURE(a);
        CountBounds cb = count_bounds(row.t, l, a, 3);
        CHECK(cb.consistent);
        Presentation pres = present_affine_uplus(
            build_affine_diagram(row.t, l), FiniteField(3, a), opts);
        CHECK(pres.r_count() == cb.upper);
        CHECK(pres.r_count() == cb.pair_formula);
        CHECK(pres.d_count() == cb.d);
        // the closed forms do not depend on which odd p realizes the parity
        CHECK(count_bounds(row.t, l, a, 5).upper == cb.upper);
      }
}

TEST_CASE("even-parity counts: A, D, E rows are parity-free; B, C match "
          "the closed forms; F4 is the known outlier") {
  AffineOptions opts;
  opts.allow_small_q = true;
  for (int a : {1, 2, 3, 4}) {
    for (auto [t, l] : {std::pair{BaseType::A, 5}, {BaseType::D, 5},
                        {BaseType::E, 6}}) {
      CHECK(count_bounds(t, l, a, 2).upper == count_bounds(t, l, a, 3).upper);
      CHECK(count_bounds(t, l, a, 2).consistent);
    }
    for (auto [t, l] : {std::pair{BaseType::B, 3}, {BaseType::B, 7},
                        {BaseType::C, 3}, {BaseType::C, 7}}) {
      CountBounds cb = count_bounds(t, l, a, 2);
      CAPTURE(to_string(t));
      CHECK(cb.consistent);
      Presentation pres = present_affine_uplus(build_affine_diagram(t, l),
                                               FiniteField(2, std::max(a, 2)),
                                               opts);
      if (a >= 2)
        CHECK(pres.r_count() == cb.upper);
    }
    // F4, p = 2: the printed closed form 15a^2+4a differs from the
    // pair-count accounting (39a^2+11a)/2
    CountBounds f4 = count_bounds(BaseType::F4, 4, a, 2);
    CHECK(f4.upper == 15 * a * a + 4 * a);
    CHECK(f4.pair_formula == (39 * a * a + 11 * a) / 2);
    CHECK_FALSE(f4.consistent);
  }
}

TEST_CASE("count_bounds: spec instances") {
  CountBounds a31 = count_bounds(BaseType::A, 3, 1, 3);
  CHECK(a31.upper == 14);
  CHECK(a31.gs_num == 16);
  CHECK(a31.gs_den == 4);
  CHECK(a31.d == 4);
  CHECK(count_bounds(BaseType::B, 3, 1, 3).upper == 19);
  CHECK(count_bounds(BaseType::F4, 4, 2, 2).upper == 68);
  CHECK(count_bounds(BaseType::C, 6, 2, 3).upper == 147);
  CHECK_THROWS_AS(count_bounds(BaseType::A, 2, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(count_bounds(BaseType::G2, 2, 1, 3), std::invalid_argument);
}

TEST_CASE("hall_glue: degenerate gluing returns N unchanged") {
  Presentation N = present_abelian_rootgroup(FiniteField(5, 1));
  ExtensionData ext;
  ext.pres_N = N;
  ext.pres_H = Presentation{};
  Presentation glued = hall_glue(ext);
  CHECK(glued.generators == N.generators);
  CHECK(glued.relators == N.relators);
}

TEST_CASE("hall_glue: C_p by C_p with trivial action") {
  FiniteField F(3, 1);
  ExtensionData ext;
  ext.pres_N = present_abelian_rootgroup(F);
  ext.pres_H = present_abelian_rootgroup(F);
  ext.V = {{single(0)}};
  ext.U = {{single(0)}};
  ext.lifts = {Word{}};
  Presentation glued = hall_glue(ext);
  CHECK(glued.d_count() == 2);
  CHECK(glued.r_count() == 1 + 2 * 1 * 1 + 1);  // r(N) + 2 d(H) d(N) + r(H)
  // generator symbols stay distinct
  CHECK(glued.generators[0].node != glued.generators[1].node);
}

TEST_CASE("hall_glue count identity r = r(N) + 2 d(H) d(N) + r(H)") {
  FiniteField F(3, 2);
  ExtensionData ext;
  ext.pres_N = present_sl3_sylow(F);
  ext.pres_H = present_abelian_rootgroup(F);
  std::size_t s = ext.pres_H.generators.size();
  std::size_t r = ext.pres_N.generators.size();
  ext.V.assign(s, std::vector<Word>());
  ext.U.assign(s, std::vector<Word>());
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      ext.V[i].push_back(single(static_cast<int>(j)));
      ext.U[i].push_back(single(static_cast<int>(j)));
    }
  ext.lifts.assign(ext.pres_H.relators.size(), Word{});
  Presentation glued = hall_glue(ext);
  CHECK(glued.r_count() ==
        ext.pres_N.r_count() + 2 * static_cast<long long>(s) * r +
            ext.pres_H.r_count());
}

TEST_CASE("hall_glue validates the action tables") {
  FiniteField F(3, 1);
  ExtensionData ext;
  ext.pres_N = present_abelian_rootgroup(F);
  ext.pres_H = present_abelian_rootgroup(F);
  ext.V = {{single(5)}};  // not an N-generator
  ext.U = {{single(0)}};
  ext.lifts = {Word{}};
  CHECK_THROWS_AS(hall_glue(ext), std::invalid_argument);
  ext.V = {{single(0)}};
  ext.lifts.clear();
  CHECK_THROWS_AS(hall_glue(ext), std::invalid_argument);
}

TEST_CASE("relator blocks are emitted in family order") {
  Presentation pres = present_sp4_sylow(FiniteField(3, 2));
  std::vector<std::string> labels;
  for (const auto& [label, count] : pres.meta.blocks) labels.push_back(label);
  CHECK(labels == std::vector<std::string>{"C1", "C2", "C3", "C4", "C5", "C6",
                                           "C7", "C8", "C9", "C10", "C11"});
}
