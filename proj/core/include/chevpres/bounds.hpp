#pragma once

#include "chevpres/rootsys.hpp"

namespace chevpres {

/// Size of the extra relator block contributed by one C2 node pair:
/// (5a^2+11a)/2 for p odd, 8a^2 for p = 2.
long long c2_pair_block_size(int a, bool p_odd);

/// Relator-count upper bound assembled from the pair counts of the affine
/// diagram: a(a+1)(l+1)/2 node relators plus the per-pair contributions.
long long pair_formula_upper(BaseType type, int l, int a, int p);

struct CountBounds {
  long long upper;         // closed-form bound for r(P), parity-dependent
  long long pair_formula;  // pair-count formula (Prop-2.6-style accounting)
  long long gs_num;        // Golod-Shafarevich lower bound a^2(l+1)^2 / 4,
  long long gs_den;        //   as an exact fraction gs_num / gs_den
  long long d;             // minimal generator count a(l+1)
  bool consistent;         // upper == pair_formula
};

/// Bounds for the Sylow pro-p subgroup of G(F_q((t))): the per-type closed
/// form upper bound, the pair-count formula, the Golod-Shafarevich lower
/// bound and d = a(l+1).  Scope: A l>=3, B l>=3, C l>=3, D l>=4,
/// E l in {6,7,8}, F4.  For type F4 with p = 2 the printed closed form and
/// the pair-count accounting disagree; `consistent` reports the comparison.
CountBounds count_bounds(BaseType type, int l, int a, int p);

/// Linear-in-a part of the closed form, used by the ratio check against the
/// Golod-Shafarevich bound (the quadratic part must fit under 25/16 a^2(l+1)^2).
long long upper_linear_term_times_2(BaseType type, int l, int a, int p);

}  // namespace chevpres
