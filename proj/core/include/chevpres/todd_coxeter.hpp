#pragma once

#include <cstdint>
#include <vector>

#include "chevpres/presentation.hpp"

namespace chevpres {

enum class CosetStatus : std::uint8_t { closed, overflowed };

struct CosetTable {
  CosetStatus status = CosetStatus::overflowed;
  long long cosets = 0;  // live cosets of a closed table
  int ngens = 0;
  /// Closed tables only: standardized table, row-major, `cosets` rows and
  /// 2*ngens columns (column 2g = generator g, 2g+1 = its inverse), entries
  /// 1-based coset ids; rows renumbered by first appearance.
  std::vector<std::int32_t> table;

  std::int32_t act(std::int32_t coset, int gen, int sign) const {
    return table[(coset - 1) * 2 * ngens + 2 * gen + (sign < 0 ? 1 : 0)];
  }
};

/// HLT-style Todd-Coxeter coset enumeration over the trivial subgroup:
/// relator tables are scanned coset by coset in definition order, gaps are
/// filled by defining fresh cosets, lookahead disabled.  Stops with
/// `overflowed` when more than max_cosets rows would be required.
CosetTable todd_coxeter(const Presentation& pres, long long max_cosets);

}  // namespace chevpres
