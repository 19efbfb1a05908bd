#include <doctest.h>

#include <memory>
#include <stdexcept>

#include "chevpres/enumerate.hpp"

using namespace chevpres;

namespace {

std::shared_ptr<const FiniteField> field(int p, int a) {
  return std::make_shared<FiniteField>(p, a);
}

}  // namespace

TEST_CASE("closure of the A2 model over F4 has order q^3 = 64") {
  auto F = field(2, 2);
  MatrixModel m = build_model(ModelKind::A2, F);
  GroupEnumeration G = closure(*F, m.generator_matrices(), 1000);
  CHECK(G.order() == 64);
}

TEST_CASE("closure of the C2 model over F3 has order q^4 = 81") {
  auto F = field(3, 1);
  MatrixModel m = build_model(ModelKind::C2, F);
  GroupEnumeration G = closure(*F, m.generator_matrices(), 2 * 81);
  CHECK(G.order() == 81);
}

TEST_CASE("closure of a single root element has order p") {
  auto F = field(2, 1);
  MatrixModel m = build_model(ModelKind::A2, F);
  GroupEnumeration G = closure(*F, {m.root_element(Root::alpha, F->one())}, 10);
  CHECK(G.order() == 2);
}

TEST_CASE("closure enforces its cap") {
  auto F = field(3, 2);
  MatrixModel m = build_model(ModelKind::C2, F);
  CHECK_THROWS_AS(closure(*F, m.generator_matrices(), 100), std::runtime_error);
}

TEST_CASE("Frattini generator counts") {
  // SL3 Sylow over F9: d = 2a = 4
  {
    auto F = field(3, 2);
    MatrixModel m = build_model(ModelKind::A2, F);
    GroupEnumeration G = closure(*F, m.generator_matrices(), 2 * 729 + 1);
    CHECK(frattini_generator_count(*F, G, 3) == 4);
  }
  // Sp4 Sylow over F3: d = 2a = 2
  {
    auto F = field(3, 1);
    MatrixModel m = build_model(ModelKind::C2, F);
    GroupEnumeration G = closure(*F, m.generator_matrices(), 2 * 81 + 1);
    CHECK(frattini_generator_count(*F, G, 3) == 2);
  }
  // elementary abelian p^2: two commuting order-p matrices
  {
    auto F = field(3, 1);
    MatrixModel m = build_model(ModelKind::A1xA1, F);
    GroupEnumeration G = closure(
        *F,
        {m.root_element(Root::alpha, F->one()), m.root_element(Root::beta, F->one())},
        100);
    CHECK(G.order() == 9);
    CHECK(frattini_generator_count(*F, G, 3) == 2);
  }
}

TEST_CASE("Frattini count rejects non-p-power orders") {
  auto F = field(3, 1);
  MatrixModel m = build_model(ModelKind::A1xA1, F);
  GroupEnumeration G = closure(*F, {m.root_element(Root::alpha, F->one())}, 10);
  CHECK_THROWS_AS(frattini_generator_count(*F, G, 2), std::invalid_argument);
}
