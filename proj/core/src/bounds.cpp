#include "chevpres/bounds.hpp"

#include <stdexcept>

namespace chevpres {

long long c2_pair_block_size(int a, bool p_odd) {
  long long A = a;
  return p_odd ? (5 * A * A + 11 * A) / 2 : 8 * A * A;
}

long long pair_formula_upper(BaseType type, int l, int a, int p) {
  PairCounts counts = count_pairs_by_type(build_affine_diagram(type, l));
  long long A = a, L1 = l + 1;
  long long nodes = A * (A + 1) * L1 / 2;
  return nodes + counts.a1xa1 * A * A + counts.a2 * A * (A + 1) +
         counts.c2 * c2_pair_block_size(a, p % 2 == 1);
}

namespace {

void check_scope(BaseType type, int l) {
  bool ok = false;
  switch (type) {
    case BaseType::A: ok = l >= 3; break;
    case BaseType::B: ok = l >= 3; break;
    case BaseType::C: ok = l >= 3; break;
    case BaseType::D: ok = l >= 4; break;
    case BaseType::E: ok = l >= 6 && l <= 8; break;
    case BaseType::F4: ok = l == 4; break;
    case BaseType::G2: ok = false; break;
  }
  if (!ok)
    throw std::invalid_argument("count_bounds: unsupported type/rank");
}

}  // namespace

CountBounds count_bounds(BaseType type, int l, int a, int p) {
  check_scope(type, l);
  const bool odd = p % 2 == 1;
  const long long A = a, L1 = l + 1;
  const long long base = A * A * L1 * L1 + 3 * A * L1;

  long long upper = 0;
  switch (type) {
    case BaseType::A: upper = base / 2; break;
    case BaseType::B:
      upper = odd ? (base + 3 * A * A + 7 * A) / 2
                  : (base + 14 * A * A - 4 * A) / 2;
      break;
    case BaseType::C:
      upper = odd ? (base + 6 * A * A + 16 * A) / 2
                  : (base + 28 * A * A - 6 * A) / 2;
      break;
    case BaseType::D:
    case BaseType::E: upper = (base - 2 * A) / 2; break;
    case BaseType::F4:
      upper = odd ? 14 * A * A + 11 * A : 15 * A * A + 4 * A;
      break;
    case BaseType::G2: throw std::logic_error("unreachable");
  }

  CountBounds out;
  out.upper = upper;
  out.pair_formula = pair_formula_upper(type, l, a, p);
  out.gs_num = A * A * L1 * L1;
  out.gs_den = 4;
  out.d = A * L1;
  out.consistent = out.upper == out.pair_formula;
  return out;
}

long long upper_linear_term_times_2(BaseType type, int l, int a, int p) {
  const bool odd = p % 2 == 1;
  const long long A = a, L1 = l + 1;
  switch (type) {
    case BaseType::A: return 3 * A * L1;
    case BaseType::B: return 3 * A * L1 + (odd ? 7 * A : -4 * A);
    case BaseType::C: return 3 * A * L1 + (odd ? 16 * A : -6 * A);
    case BaseType::D:
    case BaseType::E: return 3 * A * L1 - 2 * A;
    case BaseType::F4: return odd ? 22 * A : 8 * A;
    case BaseType::G2: break;
  }
  throw std::invalid_argument("no linear term for this type");
}

}  // namespace chevpres
