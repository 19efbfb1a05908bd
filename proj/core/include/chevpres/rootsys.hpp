#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace chevpres {

enum class BaseType : std::uint8_t { A, B, C, D, E, F4, G2 };

std::string to_string(BaseType t);
BaseType base_type_from_string(const std::string& s);

/// Bond decoration of an edge {i, j}.  "to_i" means the arrow points at i,
/// i.e. i is the short-root side.  quadruple only occurs in the affine A1
/// diagram, whose bond is undirected.
enum class Bond : std::uint8_t {
  single,
  double_to_i,
  double_to_j,
  triple_to_i,
  triple_to_j,
  quadruple
};

struct DiagramEdge {
  int i, j;  // i < j
  Bond bond = Bond::single;
};

enum class DiagramKind : std::uint8_t { finite, affine };

/// Dynkin diagram in Bourbaki numbering.  Finite diagrams use nodes 1..l,
/// affine (completed) diagrams add the affine node 0.
struct DynkinDiagram {
  BaseType base;
  int rank = 0;  // base rank l
  DiagramKind kind = DiagramKind::finite;
  std::vector<int> nodes;
  std::vector<DiagramEdge> edges;

  bool has_node(int v) const;
  const DiagramEdge* edge_between(int i, int j) const;
  std::vector<int> neighbours(int v) const;
};

DynkinDiagram build_finite_diagram(BaseType type, int l);

/// The completed (untwisted affine) diagram; node 0 is the affine node.
/// Valid combinations: A l>=1, B l>=3, C l>=2, D l>=4, E l in {6,7,8},
/// F4 l=4, G2 l=2.
DynkinDiagram build_affine_diagram(BaseType type, int l);

enum class Rank2Type : std::uint8_t { A1xA1, A2, C2, G2 };
std::string to_string(Rank2Type t);

/// Rank-2 type of the subsystem spanned by nodes i and j: no bond -> A1xA1,
/// single -> A2, double -> C2, triple -> G2.
Rank2Type classify_pair(const DynkinDiagram& diag, int i, int j);

struct PairCounts {
  long long a1xa1 = 0;
  long long a2 = 0;
  long long c2 = 0;
  long long total() const { return a1xa1 + a2 + c2; }
};

/// Counts of unordered node pairs by rank-2 type over an affine diagram of
/// base rank l >= 3.  Rejects diagrams containing a G2 (or affine-A1) pair.
PairCounts count_pairs_by_type(const DynkinDiagram& diag);

struct RootSystem {
  int rank = 0;
  std::vector<std::vector<int>> cartan;
  std::vector<std::vector<int>> positive_roots;  // simple-root coordinates
};

/// Positive roots for the rank <= 2 systems used by the matrix models.
/// Supported: (A,1), (A,2), (C,2) with node 1 short.
RootSystem positive_roots(BaseType type, int rank);
/// Same, keyed by rank-2 pair type (adds the reducible A1xA1).
RootSystem positive_roots(Rank2Type type);

/// Classification of a connected induced subdiagram as a finite type, or
/// nullopt when the component is of no finite type.  A two-node double bond
/// is reported as C2.
struct ComponentType {
  BaseType base;
  int rank;
};
std::optional<ComponentType> classify_component(const DynkinDiagram& host,
                                                const std::vector<int>& comp);

/// Connected components of the subdiagram of `host` induced on `nodes`.
/// Each component is sorted; components are ordered by smallest node.
std::vector<std::vector<int>> induced_components(const DynkinDiagram& host,
                                                 const std::vector<int>& nodes);

}  // namespace chevpres
