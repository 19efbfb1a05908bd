#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chevpres/rootsys.hpp"

namespace chevpres {

/// Covering of a finite Dynkin diagram of rank >= 6 by three subdiagrams
/// (the third possibly empty), feeding the Curtis-Tits amalgamation step.
struct CoverSpec {
  DynkinDiagram diagram;
  std::array<std::vector<int>, 3> parts;  // node subsets, each sorted
};

/// The covers used for types B, C, D, E.  D and E follow the printed lists.
/// For B and C the printed two-part cover leaves the node pair {l-3, l}
/// inside no part, so a third part B4 resp. C4 on {l-3,...,l} is added; all
/// three conditions then hold.
CoverSpec standard_cover(BaseType type, int l);

struct CoverReport {
  bool p1 = false;  // parts have <= 2 components, each A_m (m>=2) or rank <= 5
  bool p2 = false;  // every unordered node pair lies inside some part
  bool p3 = false;  // intersections: <= 2 components, each A_m (m>=2), B3, C3
  std::optional<std::pair<int, int>> p2_witness;  // first uncovered pair
  /// rank-1 components accepted under the rank <= 5 reading, per part
  std::vector<std::pair<int, int>> a1_components;  // (part index, node)
  bool all() const { return p1 && p2 && p3; }
};

CoverReport check_cover(const CoverSpec& spec);

}  // namespace chevpres
